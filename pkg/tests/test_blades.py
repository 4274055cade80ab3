import random

import pytest

from exactga.algebra import proportional
from exactga.blades import (
    Blade,
    BladeError,
    ipns,
    is_null_blade,
    max_grade_part,
    opns,
    vector_in_span,
)
from exactga.klein import bilinear, klein_algebra
from helpers import rand_invertible_vector, rand_versor

KLEIN = klein_algebra()
E = KLEIN.e


def span_dimension(vectors):
    from exactga.linalg import Matrix, rank

    rows = [list(v.coordinates()) for v in vectors]
    return rank(Matrix.from_rows(rows)) if rows else 0


def same_span(a, b):
    return (span_dimension(a) == span_dimension(b)
            == span_dimension(a + b))


def test_opns_of_pseudoscalar_is_everything():
    basis = opns(KLEIN.pseudoscalar())
    assert len(basis) == 6
    assert span_dimension(basis) == 6


def test_opns_of_two_blade():
    basis = opns(E(1, 2))
    assert len(basis) == 2
    assert same_span(basis, [E(1), E(2)])


def test_opns_dimension_is_grade():
    rng = random.Random(1)
    for k in (1, 2, 3, 4, 5):
        vecs = []
        while span_dimension(vecs) < k:
            vecs = [rand_invertible_vector(rng, KLEIN) for _ in range(k)]
        blade = vecs[0]
        for v in vecs[1:]:
            blade = blade.wedge(v)
        if blade.is_zero():
            continue
        basis = opns(blade)
        assert len(basis) == k
        for b in basis:
            assert b.wedge(blade).is_zero()


def test_ipns_of_pseudoscalar_is_trivial():
    assert ipns(KLEIN.pseudoscalar()) == []


def test_ipns_of_vector_is_orthogonal_hyperplane():
    basis = ipns(E(1))
    assert len(basis) == 5
    assert same_span(basis, [E(1), E(2), E(3), E(5), E(6)])
    for b in basis:
        assert bilinear(b, E(1)) == 0


def test_ipns_matches_opns_of_dual():
    rng = random.Random(2)
    for _ in range(10):
        u = rand_invertible_vector(rng, KLEIN)
        v = rand_invertible_vector(rng, KLEIN)
        blade = u.wedge(v)
        if blade.is_zero():
            continue
        a = ipns(blade)
        b = opns(blade.dual())
        assert len(a) == len(b) == 4
        assert same_span(a, b)


def test_opns_matches_ipns_of_dual():
    rng = random.Random(5)
    for _ in range(10):
        u = rand_invertible_vector(rng, KLEIN)
        v = rand_invertible_vector(rng, KLEIN)
        blade = u.wedge(v)
        if blade.is_zero():
            continue
        assert same_span(opns(blade), ipns(blade.dual()))


def test_ipns_dimension_complements_grade():
    rng = random.Random(3)
    for k in (1, 2, 3):
        vecs = [rand_invertible_vector(rng, KLEIN) for _ in range(k)]
        blade = vecs[0]
        for v in vecs[1:]:
            blade = blade.wedge(v)
        if blade.is_zero():
            continue
        basis = ipns(blade)
        assert len(basis) == 6 - k
        for b in basis:
            assert b.inner(blade).is_zero()


def test_null_blades():
    assert is_null_blade(E(1))
    assert is_null_blade(E(1).wedge(E(2)))
    square = (E(1) + E(4)).wedge(E(2) + E(5))
    assert not is_null_blade(square)


def test_max_grade_part():
    g = KLEIN.scalar(7)
    assert max_grade_part(g).grade == 0
    x = KLEIN.scalar(1) + 3 * E(1, 2) + E(1, 2, 3, 4)
    top = max_grade_part(x)
    assert top.grade == 4
    assert top.value == E(1, 2, 3, 4)
    with pytest.raises(BladeError):
        max_grade_part(KLEIN.zero())


def test_max_grade_of_versor_product():
    rng = random.Random(4)
    for k in (2, 3, 4):
        g, vectors = rand_versor(rng, KLEIN, k)
        wedge = vectors[0]
        for v in vectors[1:]:
            wedge = wedge.wedge(v)
        if wedge.is_zero():
            continue  # linearly dependent factors
        assert max_grade_part(g).grade == k


def test_max_grade_of_reference_versor(reference_versor):
    top = max_grade_part(reference_versor)
    assert top.grade == 6
    assert top.value == -KLEIN.pseudoscalar()


def test_descent_intermediate_grade5(reference_versor, reference_factors):
    from conftest import REFERENCE_DESCENT_GRADE5

    target = KLEIN.mv({sum(1 << (i - 1) for i in idx): c
                       for idx, c in REFERENCE_DESCENT_GRADE5.items()})
    g1 = reference_versor.gp(reference_factors[0])
    assert proportional(g1.grade(5), target) is not None
    # its outer null space is the hyperplane a1 - a2 - 3a3 + 4a5 + 4a6 = 0
    basis = opns(max_grade_part(g1))
    assert len(basis) == 5
    for vec in basis:
        a = vec.coordinates()
        assert a[0] - a[1] - 3 * a[2] + 4 * a[4] + 4 * a[5] == 0


def test_blade_construction_validates_low_grades():
    with pytest.raises(BladeError):
        Blade(E(1, 2) + E(3, 4), 2)  # fails the wedge-square test
    with pytest.raises(BladeError):
        Blade(E(1, 2) + E(3, 4), 3)  # not homogeneous
    ok = Blade((E(1) + E(4)).wedge(E(2)), 2)
    assert ok.grade == 2
    nondecomposable3 = E(1, 2, 3) + E(4, 5, 6)
    with pytest.raises(BladeError):
        Blade(nondecomposable3, 3)


def test_opns_errors_on_zero():
    with pytest.raises(BladeError):
        opns(KLEIN.zero())
    with pytest.raises(BladeError):
        ipns(KLEIN.zero())


def test_vector_in_span():
    basis = [E(1), E(2)]
    assert vector_in_span(E(1) + 2 * E(2), basis)
    assert not vector_in_span(E(3), basis)
