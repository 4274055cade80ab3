"""Factoring a projective transformation into null polarities, end to end.

A regular 4x4 matrix acting on points lifts to an even versor of the
line-geometry algebra; the grade descent splits that versor into at most six
vectors; each vector is a null polarity (a skew-symmetric 4x4 matrix); and
the polarity chain reproduces the input matrix up to an exact rational
scale.  Every identity below is exact.
"""

from exactga import (
    Matrix,
    ProjTransform4,
    factorize_matrix,
    proj_to_versor,
    verify_factorization,
    versor_to_proj,
)

K = Matrix.from_rows([[1, 0, 3, 0],
                      [1, 1, 0, 1],
                      [1, 2, 1, 0],
                      [1, 1, 2, 1]])
t = ProjTransform4(K, "collineation", "points")
print("input collineation K, det =", K.det())
print(K)

# Step 1: lift the matrix to a versor of the even part.
versor = proj_to_versor(t)
print("\nlifted versor (grades", sorted(versor.value.grades()), "):")
print(versor.value)

# The coefficient table sends the versor back to an exact multiple of K.
back = versor_to_proj(versor, "points")
print("\ntable applied to the versor gives 8*K:")
print(back.matrix)

# Step 2: grade descent.  Each factor is a vector of the algebra.
print("\nfactors (leftmost first):")
for vec in versor.witness:
    print("  ", vec)

# Step 3: every vector becomes a skew matrix; actions alternate so the
# composite maps points to points.
result = factorize_matrix(t)
print("\nnull polarities (leftmost applied last):")
for p in result.polarities:
    print(f"-- acting on {p.action}:")
    print(p.matrix)

product = result.polarities[0].matrix
from exactga import mat_mul

for p in result.polarities[1:]:
    product = mat_mul(product, p.matrix)
print("\nchain product = scale * K with scale =", result.scale)
print(product)
assert product == K.scale(result.scale)
print("verified:", verify_factorization(result, t))

# A single skew-symmetric matrix is its own certificate: it lifts to a
# grade-1 versor and factors into itself.
S = Matrix.from_rows([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
ts = ProjTransform4(S, "correlation", "points")
rs = factorize_matrix(ts)
print("\na null polarity factors as", len(rs.factors), "vector:", rs.factors[0])

# Some real matrices need complex scalars: the sign of the similitude ratio
# of the induced line map decides, and the pipeline reports it.
K2 = Matrix.from_rows([[-1, 0, 3, 0], [1, 1, 0, 1], [1, 2, 1, 0], [1, 1, 2, 1]])
t2 = ProjTransform4(K2, "collineation", "points")
try:
    factorize_matrix(t2)
except Exception as exc:
    print("\nrational mode:", exc)
r2 = factorize_matrix(t2, "complex")
print("complex mode: verified =", verify_factorization(r2, t2),
      "with", len(r2.factors), "factors")
print("first complex factor:", r2.factors[0])
