"""A walk through the exact Clifford algebra kernel.

Everything here is computed over exact rationals: products, involutions,
norms and inverses come out as exact fractions, never floats.
"""

from exactga import Algebra, Matrix

# Build a small algebra from an explicit symmetric form.  Generators e1, e2
# square to +1, e3 squares to -1.
alg = Algebra(Matrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, -1]]))
e = alg.e

print("signature:", alg.signature())

# The geometric product contracts repeated generators through the form.
print("e1 * e1 =", e(1).gp(e(1)))
print("e1 * e2 =", e(1).gp(e(2)))
print("(e1 + e3)^2 =", (e(1) + e(3)).gp(e(1) + e(3)))

# Outer and inner products split the geometric product of vectors.
a = 2 * e(1) + e(2)
b = e(2) - 3 * e(3)
print("\na =", a)
print("b =", b)
print("a b     =", a.gp(b))
print("a ^ b   =", a.wedge(b))
print("a . b   =", a.inner(b))
assert a.gp(b) == a.inner(b) + a.wedge(b)

# Conjugation reverses products and flips vectors; the main involution
# grades by parity.
x = alg.scalar(1) + e(1) + e(1, 2)
print("\nx        =", x)
print("x*       =", x.conjugate())
print("alpha(x) =", x.involute())

# Versors (products of invertible vectors) have norms and exact inverses.
v = e(1) + 2 * e(3)
print("\nv =", v, " N(v) =", v.norm())
print("v^-1 =", v.inverse())
assert v.gp(v.inverse()) == alg.scalar(1)

# The center depends only on the parity of the dimension: in odd dimension
# the top blade joins the scalars.
print("\ncenter:", [str(c) for c in alg.center_basis()])
print("even-part center:", [str(c) for c in alg.center_basis(even_only=True)])

# In a non-diagonal form, wedge monomials stay graded while the geometric
# product picks up contraction terms.  This is the rank-6 line-geometry form.
from exactga import klein_algebra

klein = klein_algebra()
print("\nKlein model: e1 * e4 =", klein.e(1).gp(klein.e(4)))
print("Klein model: e1 ^ e4 =", klein.e(1).wedge(klein.e(4)))
print("pseudoscalar squared:", klein.pseudoscalar().gp(klein.pseudoscalar()))
