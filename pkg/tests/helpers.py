"""Independent oracles and random generators for the test suite.

The diagonal-basis product here is a from-scratch implementation (bitmask
transposition counting over an orthogonal basis) used to cross-check the
library's metric-contraction product; it shares no code with the package.
"""

from __future__ import annotations

import random
from fractions import Fraction

from exactga.algebra import Algebra, Multivector
from exactga.linalg import Matrix


def bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def diag_blade_product(a: int, b: int, squares) -> tuple[int, Fraction]:
    """Product of two basis monomials over an orthogonal basis.

    Returns (mask, coefficient); the sign counts transpositions needed to
    sort the concatenated index list, and repeated indices contract to the
    given squares.
    """
    sign = 1
    # count swaps to move each index of b past the tail of a
    for j in bits(b):
        higher = len([i for i in bits(a) if i > j])
        if higher % 2:
            sign = -sign
    coeff = Fraction(sign)
    for j in bits(a & b):
        coeff *= squares[j]
    return a ^ b, coeff


def diag_gp(x: dict, y: dict, squares) -> dict:
    acc = {}
    for a, ca in x.items():
        for b, cb in y.items():
            m, c = diag_blade_product(a, b, squares)
            if c:
                acc[m] = acc.get(m, Fraction(0)) + ca * cb * c
    return {m: c for m, c in acc.items() if c}


def wedge_change_of_basis(terms: dict, columns) -> dict:
    """Rewrite wedge-basis terms through a linear substitution of generators.

    ``columns[i]`` holds the coefficients of old generator i over the new
    generators; blades expand multilinearly with alternating signs.
    """
    out = {}
    for mask, coeff in terms.items():
        expansion = {0: Fraction(1)}
        for i in bits(mask):
            nxt = {}
            for emask, ecoeff in expansion.items():
                for j, cj in enumerate(columns[i]):
                    if not cj or (emask >> j) & 1:
                        continue
                    below = len([t for t in bits(emask) if t > j])
                    sign = -1 if below % 2 else 1
                    m2 = emask | (1 << j)
                    nxt[m2] = nxt.get(m2, Fraction(0)) + ecoeff * cj * sign
            expansion = nxt
        for m, c in expansion.items():
            v = out.get(m, Fraction(0)) + coeff * c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
    return out


# Klein generators over the orthogonal basis f_i = e_i + e_{i+3},
# f_{i+3} = e_i - e_{i+3}; the f squares are (2, 2, 2, -2, -2, -2).
KLEIN_F_SQUARES = (Fraction(2),) * 3 + (Fraction(-2),) * 3


def klein_e_to_f_columns():
    cols = []
    half = Fraction(1, 2)
    for i in range(3):
        col = [Fraction(0)] * 6
        col[i] = half
        col[i + 3] = half
        cols.append(col)
    for i in range(3):
        col = [Fraction(0)] * 6
        col[i] = half
        col[i + 3] = -half
        cols.append(col)
    # index order: columns for e1..e6
    return [cols[0], cols[1], cols[2], cols[3], cols[4], cols[5]]


def klein_f_to_e_columns():
    cols = []
    for i in range(3):
        col = [Fraction(0)] * 6
        col[i] = Fraction(1)
        col[i + 3] = Fraction(1)
        cols.append(col)
    for i in range(3):
        col = [Fraction(0)] * 6
        col[i] = Fraction(1)
        col[i + 3] = Fraction(-1)
        cols.append(col)
    return cols


def orthogonal_oracle_gp(x: Multivector, y: Multivector) -> Multivector:
    """Klein-basis product computed through the orthogonal basis."""
    e2f = klein_e_to_f_columns()
    f2e = klein_f_to_e_columns()
    xf = wedge_change_of_basis(x.terms, e2f)
    yf = wedge_change_of_basis(y.terms, e2f)
    pf = diag_gp(xf, yf, KLEIN_F_SQUARES)
    pe = wedge_change_of_basis(pf, f2e)
    return Multivector(x.algebra, pe)


def cofactor_det(m: Matrix) -> Fraction:
    n = m.rows
    if n == 1:
        return m[0, 0]
    total = Fraction(0)
    for j in range(n):
        if not m[0, j]:
            continue
        minor = Matrix.from_rows([[m[r, c] for c in range(n) if c != j]
                                  for r in range(1, n)])
        term = m[0, j] * cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total


# -- random generators ---------------------------------------------------------


def rand_fraction(rng: random.Random, span: int = 3, denominators=(1, 1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.choice(denominators))


def rand_multivector(rng: random.Random, alg: Algebra, n_terms: int = 4,
                     grades=None) -> Multivector:
    masks = alg.basis_masks()
    if grades is not None:
        masks = [m for m in masks if bin(m).count("1") in grades]
    terms = {}
    for _ in range(n_terms):
        terms[rng.choice(masks)] = rand_fraction(rng)
    return alg.mv(terms)


def rand_vector(rng: random.Random, alg: Algebra, span: int = 3) -> Multivector:
    while True:
        v = alg.vector([rng.randint(-span, span) for _ in range(alg.dim)])
        if not v.is_zero():
            return v


def rand_invertible_vector(rng: random.Random, alg: Algebra, span: int = 2) -> Multivector:
    while True:
        v = rand_vector(rng, alg, span)
        if v.gp(v).scalar_part():
            return v


def rand_versor(rng: random.Random, alg: Algebra, k: int):
    vectors = [rand_invertible_vector(rng, alg) for _ in range(k)]
    prod = alg.scalar(1)
    for v in vectors:
        prod = prod.gp(v)
    return prod, vectors


def rand_point(rng: random.Random, span: int = 4) -> list:
    while True:
        p = [Fraction(rng.randint(-span, span)) for _ in range(4)]
        if any(p):
            return p


def rand_null_line(rng: random.Random):
    from exactga.klein import PluckerLine

    while True:
        p, q = rand_point(rng), rand_point(rng)
        try:
            return PluckerLine.from_points(p, q)
        except Exception:
            continue


def rand_unit_normal(rng: random.Random) -> tuple:
    """Rational unit vector from the stereographic parameterization."""
    while True:
        a = rand_fraction(rng, 2)
        b = rand_fraction(rng, 2)
        d = 1 + a * a + b * b
        n = (2 * a / d, 2 * b / d, (1 - a * a - b * b) / d)
        if any(n):
            return n
