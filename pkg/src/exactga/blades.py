"""Blades and their outer / inner product null spaces.

OPNS and IPNS are computed by assembling the linear map ``v -> v ^ b``
(respectively ``v -> v . b``) on grade-1 coordinates as an exact matrix and
taking its nullspace, so one elimination code path serves both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, AlgebraError, Multivector, Versor
from .linalg import Matrix, nullspace


class BladeError(AlgebraError):
    pass


@dataclass(frozen=True)
class Blade:
    """A homogeneous multivector asserted to be an outer product of vectors.

    Decomposability is verified on construction for grades 2 (wedge square
    vanishes) and 3 (outer null space has full dimension 3).  Higher grades
    are accepted as-is: the factorization pipeline only builds blades as
    maximal-grade parts of versors, which are decomposable by construction.
    """

    value: Multivector
    grade: int

    def __post_init__(self):
        if self.value.is_zero():
            if self.grade != 0:
                raise BladeError("zero blade must have grade 0")
            return
        if self.value.grades() != {self.grade}:
            raise BladeError(f"value is not homogeneous of grade {self.grade}")
        if self.grade == 2 and not self.value.wedge(self.value).is_zero():
            raise BladeError("grade-2 element is not decomposable")
        if self.grade == 3 and len(opns_of_multivector(self.value)) != 3:
            raise BladeError("grade-3 element is not decomposable")

    @classmethod
    def from_multivector(cls, value: Multivector) -> "Blade":
        if value.is_zero():
            return cls(value, 0)
        return cls(value, value.max_grade())

    @property
    def algebra(self) -> Algebra:
        return self.value.algebra


def _as_multivector(b) -> Multivector:
    if isinstance(b, Blade):
        return b.value
    if isinstance(b, Versor):
        return b.value
    return b


def _kernel_of_vector_map(alg: Algebra, image_fn) -> list[Multivector]:
    """Kernel of a linear map from grade-1 elements into the algebra."""
    n = alg.dim
    columns = []
    for i in range(n):
        img = image_fn(alg.mv({1 << i: Fraction(1)}))
        columns.append(img.terms)
    masks = sorted(set().union(*columns)) if any(columns) else []
    if not masks:
        return [alg.mv({1 << i: Fraction(1)}) for i in range(n)]
    rows = [[columns[j].get(m, Fraction(0)) for j in range(n)] for m in masks]
    basis = nullspace(Matrix.from_rows(rows))
    return [alg.vector(vec) for vec in basis]


def opns_of_multivector(b: Multivector) -> list[Multivector]:
    return _kernel_of_vector_map(b.algebra, lambda v: v.wedge(b))


def opns(b) -> list[Multivector]:
    """Basis of the outer product null space {v : v ^ b = 0}."""
    mv = _as_multivector(b)
    if mv.is_zero():
        raise BladeError("outer null space of the zero blade is undefined")
    return opns_of_multivector(mv)


def ipns(b) -> list[Multivector]:
    """Basis of the inner product null space {v : v . b = 0}."""
    mv = _as_multivector(b)
    if mv.is_zero():
        raise BladeError("inner null space of the zero blade is undefined")
    return _kernel_of_vector_map(mv.algebra, lambda v: v.inner(mv))


def is_null_blade(b) -> bool:
    """True when the blade squares to zero under the geometric product."""
    mv = _as_multivector(b)
    return mv.gp(mv).is_zero()


def max_grade_part(g) -> Blade:
    """The highest-grade component, as a blade."""
    mv = _as_multivector(g)
    if mv.is_zero():
        raise BladeError("zero element has no maximal grade part")
    k = mv.max_grade()
    return Blade(mv.grade(k), k)


def vector_in_span(v: Multivector, basis: list[Multivector]) -> bool:
    """Exact membership of a grade-1 element in the span of grade-1 elements."""
    if v.is_zero():
        return True
    alg = v.algebra
    cols = [b.coordinates() for b in basis]
    rows = [[cols[j][i] for j in range(len(basis))] for i in range(alg.dim)]
    from .linalg import solve_linear

    return solve_linear(Matrix.from_rows(rows), list(v.coordinates())) is not None
