"""Clifford algebras over arbitrary symmetric bilinear forms, exactly.

Basis blades are wedge monomials ``e_{i1} ^ ... ^ e_{ik}`` indexed by bitmasks
(bit ``i`` set means the generator ``e_{i+1}`` is present), so every stored
term is of pure grade even when the form is not diagonal.  The geometric
product is computed by metric contraction on wedge monomials:

    e_m ^ E  =  e_m E - (e_m . E)        for m below every index of E,

which peels one generator at a time and bottoms out in the vector-blade
product.  Per-algebra blade products are cached, so multivector products are
sparse dictionary merges.

All values are immutable and operations are pure; the one piece of mutable
state, the per-algebra product cache, is filled idempotently, so concurrent
use needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .linalg import Matrix
from .scalars import ComplexRational, Scalar, as_scalar, format_scalar


class AlgebraError(ValueError):
    pass


class AlgebraMismatchError(AlgebraError):
    pass


class DegenerateFormError(AlgebraError):
    pass


class NullVersorError(AlgebraError):
    pass


class NotAVersorError(AlgebraError):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _merge_sign(a: int, b: int) -> int:
    """Reordering sign of E_a ^ E_b into ascending index order (a, b disjoint)."""
    total = 0
    for i in _bits(a):
        total += bin(b & ((1 << i) - 1)).count("1")
    return -1 if total & 1 else 1


class Algebra:
    """A Clifford algebra Cl(V, b) given by the symmetric form matrix of b."""

    def __init__(self, form: Matrix):
        if form.rows != form.cols:
            raise AlgebraError("form matrix must be square")
        if form.rows > 16:
            raise AlgebraError("generator count above the 16-bit mask budget")
        if form.transpose() != form:
            raise AlgebraError("form matrix must be symmetric")
        self.form = form
        self.dim = form.rows
        self._metric = tuple(tuple(form[i, j] for j in range(self.dim))
                             for i in range(self.dim))
        self._gp_cache: dict[tuple[int, int], dict[int, Fraction]] = {}

    # -- basic data ---------------------------------------------------------

    def same_as(self, other: "Algebra") -> bool:
        return self is other or self.form == other.form

    def metric(self, i: int, j: int) -> Fraction:
        return self._metric[i][j]

    def is_degenerate(self) -> bool:
        return not self.form.det()

    def signature(self) -> tuple[int, int, int]:
        """Counts (p, q, r) of +1, -1, 0 squares in a diagonalizing basis."""
        n = self.dim
        s = [list(row) for row in self._metric]
        p = q = r = 0
        for k in range(n):
            if not s[k][k]:
                swap = next((j for j in range(k + 1, n) if s[j][j]), None)
                if swap is not None:
                    s[k], s[swap] = s[swap], s[k]
                    for row in s:
                        row[k], row[swap] = row[swap], row[k]
                else:
                    pair = next(((i, j) for i in range(k, n) for j in range(k, n)
                                 if i != j and s[i][j]), None)
                    if pair is None:
                        r += n - k
                        break
                    i, j = pair
                    s[i] = [a + b for a, b in zip(s[i], s[j])]
                    for row in s:
                        row[i] = row[i] + row[j]
                    if i != k:
                        s[k], s[i] = s[i], s[k]
                        for row in s:
                            row[k], row[i] = row[i], row[k]
            piv = s[k][k]
            if not piv:
                r += 1
                continue
            for i in range(k + 1, n):
                if s[i][k]:
                    f = s[i][k] / piv
                    s[i] = [a - f * b for a, b in zip(s[i], s[k])]
                    for row in s:
                        row[i] = row[i] - f * row[k]
            if piv > 0:
                p += 1
            else:
                q += 1
        return p, q, r

    # -- element constructors -----------------------------------------------

    def mv(self, terms: dict[int, object]) -> "Multivector":
        return Multivector(self, terms)

    def scalar(self, value) -> "Multivector":
        return Multivector(self, {0: as_scalar(value)})

    def zero(self) -> "Multivector":
        return Multivector(self, {})

    def e(self, *indices: int) -> "Multivector":
        """Basis blade by 1-based generator indices, strictly increasing."""
        if list(indices) != sorted(set(indices)):
            raise AlgebraError("indices must be strictly increasing")
        mask = 0
        for i in indices:
            if not 1 <= i <= self.dim:
                raise AlgebraError(f"generator index {i} out of range")
            mask |= 1 << (i - 1)
        return Multivector(self, {mask: Fraction(1)})

    def vector(self, coords: Sequence) -> "Multivector":
        if len(coords) != self.dim:
            raise AlgebraError("coordinate count must equal the generator count")
        return Multivector(self, {1 << i: as_scalar(c) for i, c in enumerate(coords)})

    def basis_masks(self, grade: int | None = None, parity: str | None = None) -> list[int]:
        """Masks ordered grade-major, then lexicographic on index tuples."""
        masks = []
        grades = [grade] if grade is not None else range(self.dim + 1)
        for k in grades:
            if parity == "even" and k % 2:
                continue
            if parity == "odd" and k % 2 == 0:
                continue
            level = [sum(1 << (i - 1) for i in combo)
                     for combo in combinations(range(1, self.dim + 1), k)]
            masks.extend(level)
        return masks

    def pseudoscalar(self) -> "Multivector":
        if self.is_degenerate():
            raise DegenerateFormError("pseudoscalar duality needs a non-degenerate form")
        return Multivector(self, {(1 << self.dim) - 1: Fraction(1)})

    def center_basis(self, even_only: bool = False) -> list["Multivector"]:
        """Basis of the center: {1} or {1, e_1..n}, keyed on dim parity.

        Non-degenerate forms assumed; degenerate algebras have larger centers.
        """
        top = Multivector(self, {(1 << self.dim) - 1: Fraction(1)})
        odd = self.dim % 2 == 1
        if even_only:
            return [self.scalar(1)] if odd else [self.scalar(1), top]
        return [self.scalar(1), top] if odd else [self.scalar(1)]

    # -- cached blade products ----------------------------------------------

    def _vec_contract(self, i: int, mask: int) -> list[tuple[int, Fraction]]:
        """Left contraction e_i . E_mask as (mask, coefficient) terms."""
        out = []
        pos = 0
        for j in _bits(mask):
            c = self._metric[i][j]
            if c:
                coeff = c if pos % 2 == 0 else -c
                out.append((mask ^ (1 << j), coeff))
            pos += 1
        return out

    def _vec_gp(self, i: int, mask: int) -> list[tuple[int, Fraction]]:
        """Geometric product e_i * E_mask = e_i . E + e_i ^ E."""
        out = self._vec_contract(i, mask)
        if not (mask >> i) & 1:
            sign = _merge_sign(1 << i, mask)
            out.append((mask | (1 << i), Fraction(sign)))
        return out

    def blade_gp(self, a: int, b: int) -> dict[int, Fraction]:
        """Geometric product of two wedge basis monomials, cached."""
        key = (a, b)
        cached = self._gp_cache.get(key)
        if cached is not None:
            return cached
        if a == 0:
            result = {b: Fraction(1)}
        else:
            low = a & -a
            i = low.bit_length() - 1
            rest = a ^ low
            acc: dict[int, Fraction] = {}
            for m, c in self.blade_gp(rest, b).items():
                for m2, c2 in self._vec_gp(i, m):
                    acc[m2] = acc.get(m2, Fraction(0)) + c * c2
            for mc, cc in self._vec_contract(i, rest):
                for m2, c2 in self.blade_gp(mc, b).items():
                    acc[m2] = acc.get(m2, Fraction(0)) - cc * c2
            result = {m: c for m, c in acc.items() if c}
        self._gp_cache[key] = result
        return result

    def __repr__(self):
        p, q, r = self.signature()
        return f"Algebra(dim={self.dim}, signature=({p},{q},{r}))"


def _blade_name(mask: int) -> str:
    if mask == 0:
        return ""
    return "e" + "".join(str(i + 1) for i in _bits(mask))


class Multivector:
    """Sparse multivector: mapping from blade masks to exact coefficients."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: Algebra, terms: dict[int, object]):
        clean = {}
        for mask, coeff in terms.items():
            c = as_scalar(coeff)
            if c:
                if mask < 0 or mask >> algebra.dim:
                    raise AlgebraError(f"mask {mask} outside the algebra")
                clean[mask] = c
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- inspection ----------------------------------------------------------

    @property
    def terms(self) -> dict[int, Scalar]:
        return dict(self._terms)

    def coeff(self, mask: int) -> Scalar:
        return self._terms.get(mask, Fraction(0))

    def grades(self) -> set[int]:
        return {bin(m).count("1") for m in self._terms}

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self._terms)

    def scalar_part(self) -> Scalar:
        return self._terms.get(0, Fraction(0))

    def max_grade(self) -> int:
        if not self._terms:
            raise AlgebraError("zero multivector has no grade")
        return max(bin(m).count("1") for m in self._terms)

    def parity(self) -> str | None:
        gs = {g % 2 for g in self.grades()}
        if gs == {0}:
            return "even"
        if gs == {1}:
            return "odd"
        return None

    def coordinates(self) -> tuple:
        """Grade-1 coordinates; valid only for pure vectors."""
        if self._terms and self.grades() != {1}:
            raise AlgebraError("not a pure vector")
        return tuple(self._terms.get(1 << i, Fraction(0)) for i in range(self.algebra.dim))

    # -- ring structure -------------------------------------------------------

    def _check(self, other: "Multivector"):
        if not self.algebra.same_as(other.algebra):
            raise AlgebraMismatchError("operands live in different algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ComplexRational)):
            other = self.algebra.scalar(other)
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return Multivector(self.algebra, acc)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Multivector(self.algebra, {m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.gp(other)
        return Multivector(self.algebra,
                           {m: c * as_scalar(other) for m, c in self._terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return self * (1 / as_scalar(other))

    def __xor__(self, other):
        return self.wedge(other)

    def __or__(self, other):
        return self.inner(other)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.algebra.same_as(other.algebra) and self._terms == other._terms
        if isinstance(other, (int, Fraction, ComplexRational)):
            s = as_scalar(other)
            if not s:
                return self.is_zero()
            return self._terms == {0: s}
        return NotImplemented

    __hash__ = None

    # -- products -------------------------------------------------------------

    def gp(self, other: "Multivector") -> "Multivector":
        """Geometric product."""
        self._check(other)
        acc: dict[int, Scalar] = {}
        blade_gp = self.algebra.blade_gp
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                cab = ca * cb
                for m, c in blade_gp(a, b).items():
                    acc[m] = acc.get(m, Fraction(0)) + cab * c
        return Multivector(self.algebra, acc)

    def wedge(self, other: "Multivector") -> "Multivector":
        """Outer product, metric-free on the wedge basis."""
        self._check(other)
        acc: dict[int, Scalar] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                if a & b:
                    continue
                m = a | b
                acc[m] = acc.get(m, Fraction(0)) + ca * cb * _merge_sign(a, b)
        return Multivector(self.algebra, acc)

    def inner(self, other: "Multivector") -> "Multivector":
        """Generalized inner product: |k-l| grade part, taken grade by grade."""
        self._check(other)
        acc: dict[int, Scalar] = {}
        blade_gp = self.algebra.blade_gp
        for a, ca in self._terms.items():
            ka = bin(a).count("1")
            for b, cb in other._terms.items():
                target = abs(ka - bin(b).count("1"))
                cab = ca * cb
                for m, c in blade_gp(a, b).items():
                    if bin(m).count("1") == target:
                        acc[m] = acc.get(m, Fraction(0)) + cab * c
        return Multivector(self.algebra, acc)

    def grade(self, k: int) -> "Multivector":
        if not 0 <= k <= self.algebra.dim:
            raise AlgebraError(f"grade {k} out of range 0..{self.algebra.dim}")
        return Multivector(self.algebra,
                           {m: c for m, c in self._terms.items() if bin(m).count("1") == k})

    # -- involutions ------------------------------------------------------------

    def involute(self) -> "Multivector":
        """Main involution: sign (-1)^k on grade k."""
        return Multivector(self.algebra,
                           {m: (-c if bin(m).count("1") % 2 else c)
                            for m, c in self._terms.items()})

    def reverse(self) -> "Multivector":
        out = {}
        for m, c in self._terms.items():
            k = bin(m).count("1")
            out[m] = -c if (k * (k - 1) // 2) % 2 else c
        return Multivector(self.algebra, out)

    def conjugate(self) -> "Multivector":
        """Clifford conjugation: main involution composed with reversal."""
        out = {}
        for m, c in self._terms.items():
            k = bin(m).count("1")
            out[m] = -c if (k * (k + 1) // 2) % 2 else c
        return Multivector(self.algebra, out)

    # -- norms, inverses, duality -------------------------------------------------

    def norm(self) -> Scalar:
        """The scalar v v*; raises when the product is not scalar."""
        n = self.gp(self.conjugate())
        if not n.is_scalar():
            raise NotAVersorError("v v* is not scalar, so v is not a versor")
        return n.scalar_part()

    def inverse(self) -> "Multivector":
        n = self.norm()
        if not n:
            raise NullVersorError("null versor has no inverse")
        return self.conjugate() * (1 / n)

    def dual(self) -> "Multivector":
        return self.gp(self.algebra.pseudoscalar())

    # -- serialization ---------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        ordered = sorted(self._terms, key=lambda m: (bin(m).count("1"), tuple(_bits(m))))
        for m in ordered:
            c = self._terms[m]
            txt = format_scalar(c)
            if isinstance(c, ComplexRational) and c.im != 0:
                txt = f"({txt})"
            neg = txt.startswith("-")
            if neg:
                txt = txt[1:]
            name = _blade_name(m)
            if name:
                body = name if txt == "1" else f"{txt}*{name}"
            else:
                body = txt
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def to_json(self) -> list[dict]:
        ordered = sorted(self._terms, key=lambda m: (bin(m).count("1"), tuple(_bits(m))))
        return [{"mask": m, "coeff": format_scalar(self._terms[m])} for m in ordered]

    @classmethod
    def from_json(cls, algebra: Algebra, data) -> "Multivector":
        terms = {}
        for item in data:
            mask = item["mask"]
            if not isinstance(mask, int):
                raise AlgebraError("blade mask must be an integer")
            terms[mask] = terms.get(mask, Fraction(0)) + as_scalar(item["coeff"])
        return cls(algebra, terms)

    def __repr__(self):
        return f"<{self.to_text()}>"


def sandwich(g, x: Multivector) -> Multivector:
    """Twisted sandwich alpha(g) x g*; defined even for non-invertible g."""
    if isinstance(g, Versor):
        g = g.value
    return g.involute().gp(x).gp(g.conjugate())


def bilinear(v: Multivector, w: Multivector) -> Scalar:
    """The symmetric form b(v, w) of two grade-1 elements; b(v, v) = v*v."""
    alg = v.algebra
    a, b = v.coordinates(), w.coordinates()
    total = Fraction(0)
    for i in range(alg.dim):
        if not a[i]:
            continue
        for j in range(alg.dim):
            m = alg.metric(i, j)
            if m:
                total += a[i] * m * b[j]
    return total


def proportional(a: Multivector, b: Multivector) -> Scalar | None:
    """Exact nonzero c with a == c * b, or None. Both zero gives 1."""
    if not a.algebra.same_as(b.algebra):
        return None
    ta, tb = a.terms, b.terms
    if not tb:
        return Fraction(1) if not ta else None
    if set(ta) != set(tb):
        return None
    c = None
    for m, y in tb.items():
        ratio = ta[m] / y
        if c is None:
            c = ratio
        elif c != ratio:
            return None
    return c


@dataclass(frozen=True)
class Versor:
    """A product of invertible vectors, with an optional factor witness."""

    value: Multivector
    parity: str
    witness: tuple[Multivector, ...] | None = None

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise AlgebraError("parity must be 'even' or 'odd'")
        vp = self.value.parity()
        if self.value.is_zero() or vp != self.parity:
            raise AlgebraError(f"value is not a pure {self.parity} element")
        if self.witness is not None:
            prod = self.value.algebra.scalar(1)
            for v in self.witness:
                if v.grades() != {1}:
                    raise AlgebraError("witness factors must be grade-1 elements")
                prod = prod.gp(v)
            if proportional(prod, self.value) is None:
                raise AlgebraError("witness product does not match the versor value")

    @classmethod
    def from_vectors(cls, algebra: Algebra, vectors: Sequence[Multivector]) -> "Versor":
        prod = algebra.scalar(1)
        for v in vectors:
            prod = prod.gp(v)
        parity = "even" if len(vectors) % 2 == 0 else "odd"
        return cls(prod, parity, tuple(vectors))

    @property
    def algebra(self) -> Algebra:
        return self.value.algebra

    def norm(self) -> Scalar:
        return self.value.norm()

    def inverse(self) -> "Versor":
        inv = self.value.inverse()
        wit = tuple(reversed(self.witness)) if self.witness else None
        return Versor(inv, self.parity, wit)

    def sandwich(self, x: Multivector) -> Multivector:
        return sandwich(self.value, x)
