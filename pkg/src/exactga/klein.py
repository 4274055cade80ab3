"""The Cl(3,3) line-geometry model.

Lines of P^3 are embedded as null vectors of a rank-6 quadratic space whose
form matrix is [[0,I],[I,0]]: coordinates are ordered

    (x1, ..., x6) = (l01, l02, l03, l23, l31, l12),

so a vector squares to 2*(x1*x4 + x2*x5 + x3*x6) and lies on the quadric of
lines exactly when the classical relation l01*l23 + l02*l31 + l03*l12 = 0
holds.  Versors of the algebra induce projective transformations of P^3;
the coefficient tables below transfer between the two representations, and
grade-1 versors correspond to null polarities (skew-symmetric 4x4 matrices).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import (
    Algebra,
    AlgebraError,
    Multivector,
    NotAVersorError,
    Versor,
    bilinear,
    sandwich,
)
from .blades import Blade, opns
from .linalg import Matrix, mat_mul, nullspace, proportionality
from .scalars import (
    ComplexRational,
    Scalar,
    as_scalar,
    format_scalar,
    rational_sqrt,
    real_part,
)


class SingularTransformError(AlgebraError):
    pass


class ComplexRequiredError(AlgebraError):
    """Raised in rational mode when only a complex versor can induce the map."""

    def __init__(self, message: str, diagnosis: dict):
        super().__init__(message)
        self.diagnosis = diagnosis


class NotLiftableError(AlgebraError):
    """No exact versor exists over the requested scalar field."""

    def __init__(self, message: str, diagnosis: dict):
        super().__init__(message)
        self.diagnosis = diagnosis


@lru_cache(maxsize=1)
def klein_algebra() -> Algebra:
    rows = [[Fraction(0)] * 6 for _ in range(6)]
    for i in range(3):
        rows[i][i + 3] = Fraction(1)
        rows[i + 3][i] = Fraction(1)
    return Algebra(Matrix.from_rows(rows))


def klein_form_value(x: Sequence) -> Scalar:
    """The quadric polynomial x1*x4 + x2*x5 + x3*x6 (half the vector square)."""
    return x[0] * x[3] + x[1] * x[4] + x[2] * x[5]


# -- Pluecker coordinates -----------------------------------------------------


def _pair_minors(p: Sequence, q: Sequence) -> tuple:
    def m(i, j):
        return p[i] * q[j] - p[j] * q[i]

    return (m(0, 1), m(0, 2), m(0, 3), m(2, 3), m(3, 1), m(1, 2))


def _swap_halves(x: Sequence) -> tuple:
    return (x[3], x[4], x[5], x[0], x[1], x[2])


@dataclass(frozen=True)
class PluckerLine:
    """Homogeneous line coordinates, kept exactly on the quadric of lines."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(as_scalar(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != 6:
            raise AlgebraError("a line needs six coordinates")
        if not any(coords):
            raise AlgebraError("line coordinates must not all vanish")
        if klein_form_value(coords) != 0:
            raise AlgebraError("coordinates violate the quadric relation")

    @classmethod
    def from_points(cls, p: Sequence, q: Sequence) -> "PluckerLine":
        p = [as_scalar(v) for v in p]
        q = [as_scalar(v) for v in q]
        if len(p) != 4 or len(q) != 4:
            raise AlgebraError("points need four homogeneous coordinates")
        coords = _pair_minors(p, q)
        if not any(coords):
            raise AlgebraError("points are linearly dependent")
        return cls(coords)

    @classmethod
    def from_planes(cls, u: Sequence, v: Sequence) -> "PluckerLine":
        u = [as_scalar(x) for x in u]
        v = [as_scalar(x) for x in v]
        if len(u) != 4 or len(v) != 4:
            raise AlgebraError("planes need four homogeneous coordinates")
        coords = _swap_halves(_pair_minors(u, v))
        if not any(coords):
            raise AlgebraError("planes are linearly dependent")
        return cls(coords)

    def to_multivector(self) -> Multivector:
        return klein_algebra().vector(self.coords)

    @classmethod
    def from_multivector(cls, mv: Multivector) -> "PluckerLine":
        return cls(mv.coordinates())

    def point_matrix(self) -> Matrix:
        """Skew matrix sending a plane to the point where the line meets it."""
        x1, x2, x3, x4, x5, x6 = self.coords
        return Matrix.from_rows([
            [0, x1, x2, x3],
            [-x1, 0, x6, -x5],
            [-x2, -x6, 0, x4],
            [-x3, x5, -x4, 0]])

    def plane_matrix(self) -> Matrix:
        """Skew matrix sending a point to the plane joining it with the line."""
        return PluckerLine(_swap_halves(self.coords)).point_matrix()

    def contains_point(self, p: Sequence) -> bool:
        return all(not v for v in self.plane_matrix().apply([as_scalar(x) for x in p]))

    def meets(self, other: "PluckerLine") -> bool:
        """Coplanarity of two lines (vanishing of the polarized quadric form)."""
        a, b = self.coords, other.coords
        return (a[0] * b[3] + a[1] * b[4] + a[2] * b[5]
                + a[3] * b[0] + a[4] * b[1] + a[5] * b[2]) == 0

    def intersection_point(self, other: "PluckerLine") -> tuple:
        """Common point of two distinct coplanar lines."""
        if not self.meets(other):
            raise AlgebraError("lines are skew")
        pm = self.point_matrix()
        om = other.plane_matrix()
        for k in range(4):
            probe = [Fraction(1 if i == k else 0) for i in range(4)]
            pt = pm.apply(om.apply(probe))
            if any(pt):
                return pt
        raise AlgebraError("lines coincide; the intersection point is not unique")

    def common_plane(self, other: "PluckerLine") -> tuple:
        """Plane spanned by two distinct coplanar lines."""
        if not self.meets(other):
            raise AlgebraError("lines are skew")
        pm = self.plane_matrix()
        om = other.point_matrix()
        for k in range(4):
            probe = [Fraction(1 if i == k else 0) for i in range(4)]
            pl = pm.apply(om.apply(probe))
            if any(pl):
                return pl
        raise AlgebraError("lines coincide; the common plane is not unique")


def plucker_from_points(p: Sequence, q: Sequence) -> PluckerLine:
    return PluckerLine.from_points(p, q)


def plucker_from_planes(u: Sequence, v: Sequence) -> PluckerLine:
    return PluckerLine.from_planes(u, v)


# -- transforms and polarities ------------------------------------------------


@dataclass(frozen=True)
class ProjTransform4:
    """Regular projective transformation of P^3, tagged with its action type."""

    matrix: Matrix
    kind: str  # collineation | correlation
    action: str  # points | planes

    def __post_init__(self):
        if self.kind not in ("collineation", "correlation"):
            raise AlgebraError("kind must be 'collineation' or 'correlation'")
        if self.action not in ("points", "planes"):
            raise AlgebraError("action must be 'points' or 'planes'")
        if (self.matrix.rows, self.matrix.cols) != (4, 4):
            raise AlgebraError("transform matrix must be 4x4")
        if not self.matrix.det():
            raise SingularTransformError("transform matrix is singular")

    def to_json(self) -> dict:
        return {"matrix": self.matrix.to_json(), "kind": self.kind, "action": self.action}

    @classmethod
    def from_json(cls, data: dict) -> "ProjTransform4":
        return cls(Matrix.from_json(data["matrix"]), data["kind"], data["action"])


@dataclass(frozen=True)
class NullPolarity:
    """Involutoric correlation given by a skew-symmetric 4x4 matrix."""

    matrix: Matrix
    action: str

    def __post_init__(self):
        if self.action not in ("points", "planes"):
            raise AlgebraError("action must be 'points' or 'planes'")
        if (self.matrix.rows, self.matrix.cols) != (4, 4):
            raise AlgebraError("polarity matrix must be 4x4")
        if not self.matrix.is_skew():
            raise AlgebraError("polarity matrix must be skew-symmetric")

    @property
    def regular(self) -> bool:
        return bool(self.matrix.det())

    def to_json(self) -> dict:
        return {"matrix": self.matrix.to_json(), "action": self.action, "skew": True}

    @classmethod
    def from_json(cls, data: dict) -> "NullPolarity":
        return cls(Matrix.from_json(data["matrix"]), data["action"])


@dataclass(frozen=True)
class Sandwich6:
    """6x6 matrix acting on line coordinates; a similitude of the quadric form."""

    matrix: Matrix

    def __post_init__(self):
        if (self.matrix.rows, self.matrix.cols) != (6, 6):
            raise AlgebraError("line map must be 6x6")
        if self.similitude_ratio() is None:
            raise AlgebraError("matrix does not preserve the quadric form")

    def similitude_ratio(self) -> Scalar | None:
        """The exact ratio in M^T Q M = ratio * Q; zero for degenerate maps."""
        q = klein_algebra().form
        pulled = mat_mul(mat_mul(self.matrix.transpose(), q), self.matrix)
        if pulled.is_zero():
            return Fraction(0)
        return proportionality(pulled, q)


# -- the vector sandwich ------------------------------------------------------


def vector_sandwich_matrix(a: Multivector) -> Sandwich6:
    """6x6 matrix of the sandwich action of a grade-1 element on vectors.

    Columns are the sandwich images of the basis vectors, so the matrix
    equals 2*b(a,.)a - b(a,a)*Id exactly.
    """
    alg = klein_algebra()
    if not a.is_zero() and a.grades() != {1}:
        raise AlgebraError("sandwich matrix needs a grade-1 element")
    cols = []
    for j in range(6):
        img = sandwich(a, alg.mv({1 << j: Fraction(1)}))
        cols.append([img.coeff(1 << i) for i in range(6)])
    return Sandwich6(Matrix.from_rows(
        [[cols[j][i] for j in range(6)] for i in range(6)]))


def vector_to_null_polarity(a: Multivector, action: str) -> NullPolarity:
    """The skew 4x4 matrix of the null polarity induced by a grade-1 element.

    The matrix is the correlation coefficient table specialized to a pure
    vector; it is singular exactly when the vector is null.
    """
    if not a.is_zero() and a.grades() != {1}:
        raise AlgebraError("null polarities come from grade-1 elements")
    a1, a2, a3, a4, a5, a6 = a.coordinates() if not a.is_zero() else (Fraction(0),) * 6
    if action == "points":
        m = [[0, -a4, -a5, -a6],
             [a4, 0, -a3, a2],
             [a5, a3, 0, -a1],
             [a6, -a2, a1, 0]]
    elif action == "planes":
        m = [[0, a1, a2, a3],
             [-a1, 0, a6, -a5],
             [-a2, -a6, 0, a4],
             [-a3, a5, -a4, 0]]
    else:
        raise AlgebraError("action must be 'points' or 'planes'")
    return NullPolarity(Matrix.from_rows(m), action)


def null_polarity_to_vector(np: NullPolarity | Matrix, action: str | None = None) -> Multivector:
    """The grade-1 element whose polarity matrix is the given skew matrix."""
    if isinstance(np, Matrix):
        if action is None:
            raise AlgebraError("action required when passing a bare matrix")
        np = NullPolarity(np, action)
    m = np.matrix
    if m.is_zero():
        raise AlgebraError("zero matrix is not a polarity")
    if np.action == "points":
        coords = (m[3, 2], m[1, 3], m[2, 1], m[1, 0], m[2, 0], m[3, 0])
    else:
        coords = (m[0, 1], m[0, 2], m[0, 3], m[2, 3], m[3, 1], m[1, 2])
    return klein_algebra().vector(coords)


# -- coefficient tables ---------------------------------------------------------

# Two published variants exist for the m23 entry of the point-action table;
# the symmetric one is the only one consistent with the rest of the table,
# which the golden chain tests pin down.
M23_USE_DOUBLED_INNER = False


@lru_cache(maxsize=1)
def _even_masks() -> tuple:
    return tuple(klein_algebra().basis_masks(parity="even"))


@lru_cache(maxsize=1)
def _odd_masks() -> tuple:
    return tuple(klein_algebra().basis_masks(parity="odd"))


def coefficient_vector(mv: Multivector, parity: str) -> list:
    """Coefficients in the canonical listing order, 1-indexed (index 0 unused)."""
    masks = _even_masks() if parity == "even" else _odd_masks()
    return [None] + [mv.coeff(m) for m in masks]


def multivector_from_coefficients(values: Sequence, parity: str) -> Multivector:
    masks = _even_masks() if parity == "even" else _odd_masks()
    if len(values) != len(masks):
        raise AlgebraError(f"expected {len(masks)} coefficients")
    return klein_algebra().mv({m: v for m, v in zip(masks, values)})


def _collineation_matrix(g: list, action: str, m23_doubled: bool) -> Matrix:
    m = [[None] * 4 for _ in range(4)]
    if action == "points":
        m[0][0] = g[1] - g[20] - g[24] - g[32] - g[29] + g[9] + g[4] + g[13]
        m[1][1] = g[24] - g[9] + g[20] - g[13] - g[32] + g[1] + g[4] - g[29]
        m[2][2] = g[1] - g[13] - g[32] - g[4] + g[29] + g[9] - g[24] + g[20]
        m[3][3] = g[24] + g[13] + g[29] + g[1] - g[4] - g[9] - g[20] - g[32]
        m[0][1] = 2 * (g[7] + g[17])
        m[0][2] = 2 * (g[18] - g[3])
        m[0][3] = 2 * (g[19] + g[2])
        m[1][0] = -2 * (g[26] + g[16])
        m[1][2] = 2 * (g[5] + g[25])
        m[1][3] = 2 * (g[6] - g[22])
        m[2][0] = 2 * (g[15] - g[30])
        m[2][1] = 2 * (g[8] + g[28])
        m[2][3] = 2 * (g[21] + 2 * g[10]) if m23_doubled else 2 * (g[21] + g[10])
        m[3][0] = -2 * (g[31] + g[14])
        m[3][1] = 2 * (g[11] - g[27])
        m[3][2] = 2 * (g[23] + g[12])
    else:
        m[0][0] = g[32] - g[20] - g[13] - g[29] - g[9] - g[24] + g[1] - g[4]
        m[1][1] = g[1] + g[9] + g[20] + g[24] + g[13] - g[29] + g[32] - g[4]
        m[2][2] = g[20] + g[29] + g[4] + g[13] - g[9] - g[24] + g[1] + g[32]
        m[3][3] = g[9] + g[24] + g[29] - g[13] + g[1] + g[4] - g[20] + g[32]
        m[0][1] = 2 * (g[16] - g[26])
        m[0][2] = -2 * (g[15] + g[30])
        m[0][3] = 2 * (g[14] - g[31])
        m[1][0] = 2 * (g[17] - g[7])
        m[1][2] = 2 * (g[28] - g[8])
        m[1][3] = -2 * (g[27] + g[11])
        m[2][0] = 2 * (g[3] + g[18])
        m[2][1] = 2 * (g[25] - g[5])
        m[2][3] = 2 * (g[23] - g[12])
        m[3][0] = 2 * (g[19] - g[2])
        m[3][1] = -2 * (g[22] + g[6])
        m[3][2] = 2 * (g[21] - g[10])
    return Matrix.from_rows(m)


def _correlation_matrix(h: list, action: str) -> Matrix:
    m = [[None] * 4 for _ in range(4)]
    if action == "points":
        m[0][0] = 2 * h[26]
        m[1][1] = 2 * h[17]
        m[2][2] = -2 * h[12]
        m[3][3] = 2 * h[10]
        m[0][1] = h[32] - h[4] - h[20] - h[24]
        m[0][2] = h[14] - h[31] - h[25] - h[5]
        m[0][3] = h[30] + h[15] + h[22] - h[6]
        m[1][0] = h[4] - h[32] - h[24] - h[20]
        m[1][2] = h[18] - h[27] - h[3] - h[11]
        m[1][3] = h[2] + h[8] + h[19] - h[28]
        m[2][0] = h[31] + h[14] - h[25] + h[5]
        m[2][1] = h[3] - h[11] + h[27] + h[18]
        m[2][3] = h[9] - h[13] - h[1] - h[29]
        m[3][0] = h[15] - h[30] + h[6] + h[22]
        m[3][1] = h[8] - h[2] + h[28] + h[19]
        m[3][2] = h[1] - h[13] + h[29] + h[9]
    else:
        m[0][0] = -2 * h[7]
        m[1][1] = -2 * h[16]
        m[2][2] = 2 * h[21]
        m[3][3] = -2 * h[23]
        m[0][1] = h[9] + h[13] - h[29] + h[1]
        m[0][2] = h[2] - h[8] + h[28] + h[19]
        m[0][3] = h[3] - h[27] - h[18] - h[11]
        m[1][0] = h[29] + h[13] + h[9] - h[1]
        m[1][2] = h[6] - h[22] + h[15] + h[30]
        m[1][3] = h[31] - h[25] - h[5] - h[14]
        m[2][0] = h[19] - h[8] - h[2] - h[28]
        m[2][1] = h[15] - h[30] - h[6] - h[22]
        m[2][3] = h[4] - h[20] + h[32] + h[24]
        m[3][0] = h[27] - h[11] - h[18] - h[3]
        m[3][1] = h[5] - h[31] - h[25] - h[14]
        m[3][2] = h[24] - h[4] - h[32] - h[20]
    return Matrix.from_rows(m)


def versor_to_proj(g: Multivector | Versor, action: str,
                   m23_doubled: bool | None = None) -> ProjTransform4:
    """Transfer a versor to its 4x4 projective representation.

    Even elements give collineations, odd elements correlations; the action
    tag selects the point or plane coefficient table.
    """
    if isinstance(g, Versor):
        g = g.value
    if action not in ("points", "planes"):
        raise AlgebraError("action must be 'points' or 'planes'")
    parity = g.parity()
    if parity is None:
        raise NotAVersorError("mixed-parity element cannot be a versor")
    if m23_doubled is None:
        m23_doubled = M23_USE_DOUBLED_INNER
    if parity == "even":
        matrix = _collineation_matrix(coefficient_vector(g, "even"), action, m23_doubled)
        kind = "collineation"
    else:
        matrix = _correlation_matrix(coefficient_vector(g, "odd"), action)
        kind = "correlation"
    if matrix.is_zero():
        raise NotAVersorError("coefficient table yields the zero matrix")
    return ProjTransform4(matrix, kind, action)


# -- induced line maps -----------------------------------------------------------


_BASIS_POINT_PAIRS = ((0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2))


def induced_line_map(t: ProjTransform4) -> Sandwich6:
    """The 6x6 line-coordinate map induced by a projective transformation.

    Basis lines are pushed through the transform: a collineation maps the two
    spanning points, a correlation maps them to planes and takes the
    intersection line (the dual coordinate swap).
    """
    if t.action == "points":
        pts = t.matrix
    else:
        pts = t.matrix.adjugate().transpose()
    cols = []
    for (i, j) in _BASIS_POINT_PAIRS:
        pi = [pts[r, i] for r in range(4)]
        pj = [pts[r, j] for r in range(4)]
        minors = _pair_minors(pi, pj)
        if t.kind == "correlation":
            minors = _swap_halves(minors)
        cols.append(minors)
    g = Matrix.from_rows([[cols[c][r] for c in range(6)] for r in range(6)])
    s = Sandwich6(g)
    if not s.similitude_ratio():
        raise SingularTransformError("induced line map is degenerate")
    return s


# -- lifting matrices to versors ---------------------------------------------------


def _normalization_scale(lam: Fraction, scalar_mode: str) -> Scalar:
    root = rational_sqrt(lam if lam > 0 else -lam)
    diagnosis = {"similitude_ratio": format_scalar(lam)}
    if root is None:
        raise NotLiftableError(
            "no exact versor: |similitude ratio| is not a rational square",
            diagnosis | {"reason": "irrational-scale"})
    if lam > 0:
        return root
    if scalar_mode == "rational":
        raise ComplexRequiredError(
            "negative similitude ratio needs the complex scalar mode",
            diagnosis | {"reason": "negative-ratio", "suggested_mode": "complex"})
    return ComplexRational(0, root)


def _line_kernel(rows: list[list], ncols: int):
    """Kernel of a system expected to have a one-dimensional solution space.

    Incremental elimination stops as soon as the rank reaches ncols - 1; the
    remaining rows are then verified against the candidate kernel vector,
    which is exact and much cheaper than reducing them all.
    """
    basis: dict[int, list] = {}  # pivot column -> reduced row
    idx = 0
    candidate = None
    for idx, row in enumerate(rows):
        r = list(row)
        for col, brow in basis.items():
            if r[col]:
                f = r[col]
                r = [a - f * b for a, b in zip(r, brow)]
        pivot = next((c for c, v in enumerate(r) if v), None)
        if pivot is None:
            continue
        inv = 1 / r[pivot]
        r = [v * inv for v in r]
        for col, brow in basis.items():
            if brow[pivot]:
                f = brow[pivot]
                basis[col] = [a - f * b for a, b in zip(brow, r)]
        basis[pivot] = r
        if len(basis) == ncols:
            return None
        if len(basis) == ncols - 1:
            free = next(c for c in range(ncols) if c not in basis)
            candidate = [Fraction(0)] * ncols
            candidate[free] = Fraction(1)
            for col, brow in basis.items():
                candidate[col] = -brow[free]
            break
    if candidate is None:
        return None
    for row in rows[idx + 1:]:
        if sum((a * b for a, b in zip(row, candidate)), start=Fraction(0)):
            return None
    from .linalg import normalize_vector

    return normalize_vector(candidate)


def _solve_twisted_adjoint(T: Matrix, parity: str) -> Multivector:
    """Solve alpha(g) e_j = (T e_j) g for g of the given parity."""
    alg = klein_algebra()
    t_cols = [alg.vector([T[i, j] for i in range(6)]) for j in range(6)]
    unknown_masks = alg.basis_masks(parity=parity)
    out_masks = alg.basis_masks(parity="odd" if parity == "even" else "even")
    out_index = {m: r for r, m in enumerate(out_masks)}
    sign = 1 if parity == "even" else -1
    ncols = len(unknown_masks)
    nrows = 6 * len(out_masks)
    rows = [[Fraction(0)] * ncols for _ in range(nrows)]
    for c, mask in enumerate(unknown_masks):
        basis_el = alg.mv({mask: Fraction(1)})
        for j in range(6):
            ej = alg.mv({1 << j: Fraction(1)})
            diff = basis_el.gp(ej) * sign - t_cols[j].gp(basis_el)
            for m, coeff in diff.terms.items():
                rows[j * len(out_masks) + out_index[m]][c] = coeff
    rows = [r for r in rows if any(r)]
    solution = _line_kernel(rows, ncols)
    if solution is not None:
        return alg.mv({m: v for m, v in zip(unknown_masks, solution)})
    # rank below expectation or inconsistent: fall back to the full kernel
    kernel = nullspace(Matrix.from_rows(rows))
    if not kernel:
        raise NotLiftableError("no versor of the requested parity induces this map",
                               {"reason": "empty-kernel"})
    if len(kernel) > 1:
        raise AlgebraError("twisted adjoint solution is not unique; input is degenerate")
    return alg.mv({m: v for m, v in zip(unknown_masks, kernel[0])})


def proj_to_versor(t: ProjTransform4, scalar_mode: str = "rational") -> Versor:
    """Lift a regular projective transformation to a versor with witness.

    The induced line map G is normalized by the exact square root of its
    similitude ratio, then the linear relation alpha(g) x = (G/s)(x) g is
    solved for g.  The grade-descent factorization supplies the witness.
    An exact lift exists precisely when |ratio| is a rational square; a
    negative ratio forces the complex scalar mode.
    """
    if scalar_mode not in ("rational", "complex"):
        raise AlgebraError("scalar_mode must be 'rational' or 'complex'")
    g6 = induced_line_map(t)
    lam = g6.similitude_ratio()
    s = _normalization_scale(real_part(lam), scalar_mode)
    T = g6.matrix.scale(1 / s)
    parity = "even" if t.kind == "collineation" else "odd"
    value = _solve_twisted_adjoint(T, parity)
    # multiplying by the pseudoscalar switches to the opposite normalization
    # branch without changing the induced map; prefer the shorter factor chain
    alternate = value.gp(klein_algebra().pseudoscalar())
    if alternate.max_grade() < value.max_grade():
        value = alternate

    from .factorize import factorize_versor

    witness = tuple(factorize_versor(value))
    return Versor(value, parity, witness)


# -- line manifold classification -----------------------------------------------


class ManifoldKind(Enum):
    SINGLE_LINE = "single-line"
    LINE_PAIR = "line-pair"
    PENCIL = "pencil-of-lines"
    LINEAR_CONGRUENCE = "linear-congruence"
    BUNDLE = "bundle"
    FIELD = "field"
    REGULUS = "regulus"
    LINEAR_COMPLEX = "linear-complex"
    EMPTY_DEGENERATE = "empty/degenerate"


@dataclass(frozen=True)
class ManifoldClass:
    tag: ManifoldKind
    witness: dict = field(default_factory=dict)


def _gram(vectors: list[Multivector]) -> Matrix:
    return Matrix.from_rows([[bilinear(a, b) for b in vectors] for a in vectors])


def _span_radical(span: list[Multivector]) -> list[Multivector]:
    """Vectors of the span orthogonal to all of it (kernel of the Gram matrix)."""
    alg = span[0].algebra
    out = []
    for coeffs in nullspace(_gram(span)):
        vec = alg.zero()
        for c, v in zip(coeffs, span):
            vec = vec + v * c
        out.append(vec)
    return out


def _null_lines_in_plane(u: Multivector, v: Multivector):
    """Null elements of span{u, v}: exact roots of the restricted quadric."""
    from .linalg import normalize_vector

    qu, qv, buv = bilinear(u, u), bilinear(v, v), bilinear(u, v)
    lines = []
    # v itself (the root at infinity of the parameterization u + t v)
    if qv == 0:
        lines.append(v)
        if buv != 0:
            lines.append(u * (2 * buv) - v * qu)
    else:
        disc = buv * buv - qu * qv
        root = rational_sqrt(disc) if disc >= 0 else None
        if root is not None:
            for r in ({-buv} if disc == 0 else {-buv + root, -buv - root}):
                lines.append(u * qv + v * r)
    alg = u.algebra
    lines = [alg.vector(normalize_vector(l.coordinates())) for l in lines if not l.is_zero()]
    return lines, buv * buv - qu * qv


def classify_blade(b: Blade | Multivector) -> ManifoldClass:
    """Classify the set of lines cut out by a blade of grade 2..5.

    The outer null space of the blade spans a projective subspace; its
    intersection with the quadric of lines is keyed on the exact rank of the
    restricted form (the Gram matrix of a spanning set).
    """
    if isinstance(b, Multivector):
        b = Blade.from_multivector(b)
    if not b.algebra.same_as(klein_algebra()):
        raise AlgebraError("line manifolds live in the rank-6 line-geometry algebra")
    if not 2 <= b.grade <= 5:
        raise AlgebraError("classification covers blades of grade 2 to 5")
    span = opns(b)
    gram_rank = _rank(_gram(span))

    if b.grade == 2:
        u, v = span
        lines, disc = _null_lines_in_plane(u, v)
        if gram_rank == 0:
            l1 = PluckerLine(u.coordinates())
            l2 = PluckerLine(v.coordinates())
            return ManifoldClass(ManifoldKind.PENCIL, {
                "vertex": l1.intersection_point(l2),
                "plane": l1.common_plane(l2)})
        if gram_rank == 1:
            witness = {"line": lines[0].coordinates()} if lines else {}
            return ManifoldClass(ManifoldKind.SINGLE_LINE, witness)
        witness = {"discriminant": format_scalar(disc), "real": disc > 0}
        if len(lines) == 2:
            witness["lines"] = [tuple(l.coordinates()) for l in lines]
        return ManifoldClass(ManifoldKind.LINE_PAIR, witness)

    if b.grade == 3:
        if gram_rank == 0:
            l1 = PluckerLine(span[0].coordinates())
            l2 = PluckerLine(span[1].coordinates())
            l3 = PluckerLine(span[2].coordinates())
            vertex = l1.intersection_point(l2)
            if l3.contains_point(vertex):
                return ManifoldClass(ManifoldKind.BUNDLE, {"vertex": vertex})
            return ManifoldClass(ManifoldKind.FIELD, {"plane": l1.common_plane(l2)})
        if gram_rank == 3:
            return ManifoldClass(ManifoldKind.REGULUS, {})
        radical = _span_radical(span)
        if gram_rank == 1:
            # the section equals the two-dimensional radical: a pencil
            l1 = PluckerLine(radical[0].coordinates())
            l2 = PluckerLine(radical[1].coordinates())
            return ManifoldClass(ManifoldKind.PENCIL, {
                "vertex": l1.intersection_point(l2),
                "plane": l1.common_plane(l2)})
        return ManifoldClass(ManifoldKind.EMPTY_DEGENERATE, {
            "gram_rank": gram_rank,
            "common_line": tuple(radical[0].coordinates())})

    if b.grade == 4:
        from .blades import ipns

        axes = ipns(b)
        return ManifoldClass(ManifoldKind.LINEAR_CONGRUENCE, {
            "gram_rank": gram_rank,
            "axes": [tuple(a.coordinates()) for a in axes]})

    from .blades import ipns

    axis = ipns(b)[0]
    return ManifoldClass(ManifoldKind.LINEAR_COMPLEX, {
        "axis": tuple(axis.coordinates()),
        "special": bilinear(axis, axis) == 0})


def _rank(m: Matrix) -> int:
    from .linalg import rank

    return rank(m)
