"""Shared fixtures: the reference worked example used across the suite."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from exactga.klein import klein_algebra, multivector_from_coefficients
from exactga.linalg import Matrix

# A regular point collineation with a known exact factorization chain.
REFERENCE_COLLINEATION = [[1, 0, 3, 0], [1, 1, 0, 1], [1, 2, 1, 0], [1, 1, 2, 1]]

# The same matrix with the (0,0) entry negated; its induced line map has a
# negative similitude ratio, so only a complex versor can represent it.
COMPLEX_VARIANT = [[-1, 0, 3, 0], [1, 1, 0, 1], [1, 2, 1, 0], [1, 1, 2, 1]]

# Coefficients of an even versor inducing the reference collineation, in the
# canonical listing order (grade 0, grade 2, grade 4, grade 6, each
# lexicographic).  The point-action table maps it to exactly 8x the matrix.
REFERENCE_VERSOR_COEFFS = [
    7, 6, -6, 1, -2, 0, -6, 6, -1, -2, 2, 6, -5, -4, 2, -4,
    6, 6, -6, -5, 2, -4, 2, -1, 2, 0, -2, 2, 1, -2, 0, -1,
]

# Its pseudoscalar partner: same collineation, opposite normalization branch.
REFERENCE_VERSOR_PARTNER_COEFFS = [
    1, -6, -6, -1, 2, 4, 6, 2, 1, 2, 2, 2, 5, 0, 2, 0,
    -6, 6, 6, 5, -2, 0, 6, 1, -2, -4, -2, 6, -1, -2, -4, -7,
]

# A factor chain for the reference collineation: vectors listed innermost
# first (the first one acts on points), with their skew matrices.
REFERENCE_FACTOR_VECTORS = [
    (1, 0, 0, 1, 0, 0),
    (0, 4, 0, 0, 1, 0),
    (1, 1, 0, 1, 0, 0),
    (-1, 0, 1, -1, 0, 1),
    (2, 3, 1, -1, 1, 0),
    (8, 8, 4, -3, 4, -1),
]

REFERENCE_POLARITY_MATRICES = [
    [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    [[0, 0, 4, 0], [0, 0, 0, -1], [-4, 0, 0, 0], [0, 1, 0, 0]],
    [[0, -1, 0, 0], [1, 0, 0, 1], [0, 0, 0, -1], [0, -1, 1, 0]],
    [[0, -1, 0, 1], [1, 0, 1, 0], [0, -1, 0, -1], [-1, 0, 1, 0]],
    [[0, 1, -1, 0], [-1, 0, -1, 3], [1, 1, 0, -2], [0, -3, 2, 0]],
    [[0, 8, 8, 4], [-8, 0, -1, -4], [-8, 1, 0, -3], [-4, 4, 3, 0]],
]

# Exact grade-5 part (up to scale) of versor * innermost_factor during the
# reference descent, as coefficients of e23456, e12345, e12346, e12456, e13456.
REFERENCE_DESCENT_GRADE5 = {
    (1, 2, 3, 4, 5): -4,
    (1, 2, 3, 4, 6): 4,
    (1, 2, 4, 5, 6): -3,
    (1, 3, 4, 5, 6): 1,
    (2, 3, 4, 5, 6): 1,
}


@pytest.fixture(scope="session")
def klein():
    return klein_algebra()


@pytest.fixture(scope="session")
def reference_matrix():
    return Matrix.from_rows(REFERENCE_COLLINEATION)


@pytest.fixture(scope="session")
def complex_variant_matrix():
    return Matrix.from_rows(COMPLEX_VARIANT)


@pytest.fixture(scope="session")
def reference_versor():
    return multivector_from_coefficients(REFERENCE_VERSOR_COEFFS, "even")


@pytest.fixture(scope="session")
def reference_versor_partner():
    return multivector_from_coefficients(REFERENCE_VERSOR_PARTNER_COEFFS, "even")


@pytest.fixture(scope="session")
def reference_factors(klein):
    return [klein.vector(c) for c in REFERENCE_FACTOR_VECTORS]


@pytest.fixture(scope="session")
def reference_polarities():
    return [Matrix.from_rows(rows) for rows in REFERENCE_POLARITY_MATRICES]
