import random
from fractions import Fraction

import pytest

from exactga.algebra import NullVersorError, proportional
from exactga.factorize import (
    FactorizationResult,
    NoNonNullVectorError,
    choose_nonnull_vector,
    factorize_matrix,
    factorize_versor,
    verify_factorization,
)
from exactga.klein import (
    ComplexRequiredError,
    NullPolarity,
    ProjTransform4,
    bilinear,
    klein_algebra,
    versor_to_proj,
)
from exactga.blades import vector_in_span
from exactga.linalg import Matrix, mat_mul
from helpers import rand_versor

KLEIN = klein_algebra()
E = KLEIN.e


def product_of(vectors):
    acc = KLEIN.scalar(1)
    for v in vectors:
        acc = acc.gp(v)
    return acc


# -- choosing non-null vectors ----------------------------------------------------

def test_choose_nonnull_prefers_basis_vectors():
    space = [E(1) + E(4), E(2)]
    assert choose_nonnull_vector(space) == E(1) + E(4)


def test_choose_nonnull_falls_back_to_pair_sums():
    # both basis vectors null, their sum is not
    space = [E(1), E(4)]
    v = choose_nonnull_vector(space)
    assert v == E(1) + E(4)
    assert bilinear(v, v) != 0


def test_choose_nonnull_rejects_isotropic_span():
    with pytest.raises(NoNonNullVectorError):
        choose_nonnull_vector([E(1)])
    with pytest.raises(NoNonNullVectorError):
        choose_nonnull_vector([E(1), E(2), E(3)])


def test_reference_choices_are_valid(reference_factors):
    # every published pick satisfies the validity predicate at its own step:
    # it lies in the outer null space of the maximal-grade part and is non-null
    from exactga.blades import max_grade_part, opns

    current = product_of(list(reversed(reference_factors)))
    for step, vec in enumerate(reference_factors[:5]):
        space = opns(max_grade_part(current))
        assert vector_in_span(vec, space), f"step {step}"
        assert bilinear(vec, vec) != 0, f"step {step}"
        current = current.gp(vec)
    # the remaining element is the final grade-1 factor
    assert current.max_grade() == 1
    assert proportional(current, reference_factors[5]) is not None


# -- grade descent -----------------------------------------------------------------

def test_factorize_scalar_is_empty():
    assert factorize_versor(KLEIN.scalar(3)) == []


def test_factorize_single_vector():
    v = E(1) + E(4)
    factors = factorize_versor(v)
    assert len(factors) == 1
    assert proportional(factors[0], v) is not None


def test_factorize_two_vector_versor():
    g = (E(1) + E(4)).gp(4 * E(2) + E(5))
    factors = factorize_versor(g)
    assert len(factors) == 2
    assert proportional(product_of(factors), g) is not None


def test_factorize_reference_versor(reference_versor):
    factors = factorize_versor(reference_versor)
    assert len(factors) == 6
    assert proportional(product_of(factors), reference_versor) is not None


def test_reference_chain_passes_verification_predicate(reference_versor, reference_factors):
    # the published sextuple, leftmost factor first
    chain = product_of(list(reversed(reference_factors)))
    assert proportional(chain, reference_versor) is not None


def test_factorize_rejects_null_versors():
    with pytest.raises(NullVersorError):
        factorize_versor(E(1))
    with pytest.raises(NullVersorError):
        factorize_versor(KLEIN.zero())


def test_factorize_random_versors_bound_and_parity():
    rng = random.Random(20)
    for _ in range(30):
        k = rng.randint(1, 6)
        g, _ = rand_versor(rng, KLEIN, k)
        factors = factorize_versor(g)
        assert len(factors) <= 6
        assert len(factors) % 2 == k % 2
        assert proportional(product_of(factors), g) is not None
        for f in factors:
            assert f.grades() == {1}
            assert bilinear(f, f) != 0 or len(factors) == 1


# -- matrix pipeline -----------------------------------------------------------------

def test_factorize_reference_matrix(reference_matrix):
    t = ProjTransform4(reference_matrix, "collineation", "points")
    result = factorize_matrix(t)
    assert len(result.factors) == 6
    assert result.verified()
    assert verify_factorization(result, t)
    assert result.scale != 0
    # leftmost-first: the rightmost polarity acts on points like the input
    actions = [p.action for p in result.polarities]
    assert actions == ["planes", "points"] * 3


def test_factorize_identity():
    t = ProjTransform4(Matrix.identity(4), "collineation", "points")
    result = factorize_matrix(t)
    assert result.factors == ()
    assert result.scale == 1
    assert verify_factorization(result, t)


def test_factorize_single_polarity(reference_polarities):
    t = ProjTransform4(reference_polarities[0], "correlation", "points")
    result = factorize_matrix(t)
    assert len(result.factors) == 1
    assert proportional(result.factors[0], E(1) + E(4)) is not None
    assert verify_factorization(result, t)


def test_factorize_complex_variant(complex_variant_matrix):
    t = ProjTransform4(complex_variant_matrix, "collineation", "points")
    with pytest.raises(ComplexRequiredError):
        factorize_matrix(t)
    result = factorize_matrix(t, "complex")
    assert result.verified()
    assert verify_factorization(result, t)
    for p in result.polarities:
        assert p.matrix.is_skew()


def test_factorize_complex_correlation():
    # a correlation with negative determinant also needs the complex mode
    m = Matrix.from_rows([[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    t = ProjTransform4(m, "correlation", "points")
    with pytest.raises(ComplexRequiredError):
        factorize_matrix(t)
    result = factorize_matrix(t, "complex")
    assert len(result.factors) % 2 == 1
    assert verify_factorization(result, t)


def test_complex_result_json_round_trip(complex_variant_matrix):
    t = ProjTransform4(complex_variant_matrix, "collineation", "points")
    result = factorize_matrix(t, "complex")
    rebuilt = FactorizationResult.from_json(result.to_json(), t)
    assert rebuilt.residual.is_zero()
    assert verify_factorization(rebuilt, t)


def _reference_chain(reference_factors, reference_polarities):
    """Published chain as a FactorizationResult: leftmost factor first."""
    vectors = tuple(reversed(reference_factors))
    polarities = tuple(
        NullPolarity(m, a) for m, a in zip(
            reversed(reference_polarities), ["planes", "points"] * 3))
    product = polarities[0].matrix
    for p in polarities[1:]:
        product = mat_mul(product, p.matrix)
    return vectors, polarities, product


def test_reference_chain_matrix_identity(reference_matrix, reference_factors,
                                         reference_polarities):
    _, _, chain = _reference_chain(reference_factors, reference_polarities)
    assert chain == reference_matrix.scale(-4)
    # equivalently, the input is exactly -1/4 of the chain
    assert reference_matrix == chain.scale(Fraction(-1, 4))


def test_verify_reference_chain(reference_matrix, reference_factors, reference_polarities):
    t = ProjTransform4(reference_matrix, "collineation", "points")
    vectors, polarities, product = _reference_chain(reference_factors, reference_polarities)
    scale = Fraction(-4)
    residual = product - reference_matrix.scale(scale)
    result = FactorizationResult(vectors, polarities, scale, residual)
    assert residual.is_zero()
    assert verify_factorization(result, t)


def test_verify_rejects_swapped_factors(reference_matrix, reference_factors,
                                        reference_polarities):
    t = ProjTransform4(reference_matrix, "collineation", "points")
    vectors, polarities, _ = _reference_chain(reference_factors, reference_polarities)
    # swap two same-action entries: alternation still holds, the product breaks
    swapped = list(polarities)
    swapped[0], swapped[2] = swapped[2], swapped[0]
    result = FactorizationResult(vectors, tuple(swapped), Fraction(-4), Matrix.zeros(4, 4))
    assert not verify_factorization(result, t)


def test_verify_empty_against_identity():
    t = ProjTransform4(Matrix.identity(4), "collineation", "points")
    result = FactorizationResult((), (), Fraction(1), Matrix.zeros(4, 4))
    assert verify_factorization(result, t)


def test_factorize_random_matrices_round_trip():
    rng = random.Random(21)
    done = 0
    while done < 6:
        k = rng.choice([2, 3, 4])
        g, _ = rand_versor(rng, KLEIN, k)
        action = rng.choice(["points", "planes"])
        try:
            t = versor_to_proj(g, action)
        except Exception:
            continue
        result = factorize_matrix(t)
        assert verify_factorization(result, t)
        assert len(result.factors) % 2 == k % 2
        assert len(result.factors) <= 6
        done += 1


def test_result_json_round_trip(reference_matrix):
    t = ProjTransform4(reference_matrix, "collineation", "points")
    result = factorize_matrix(t)
    data = result.to_json()
    assert data["verified"] is True
    rebuilt = FactorizationResult.from_json(data, t)
    assert rebuilt.residual.is_zero()
    assert verify_factorization(rebuilt, t)
    assert rebuilt.scale == result.scale
