from fractions import Fraction

import pytest

from algebra.base_algebra import SymmetricAlgebra
from data.seed_symfuncs import random_symfunc, seed
from data.supercharacter_examples import load_examples
from gelfand_graev.rho_engine import GelfandGraev
from models.errors import DegenerateQ, ExpressionParseError, NotHomogeneous
from models.partition import Partition, partitions_of
from models.rho_expansion import RhoExpansion
from models.symfunc import BasisTag, SymFunc

H = BasisTag.COMPLETE


@pytest.fixture(autouse=True)
def fixed_seed():
    seed(77)
    yield


@pytest.fixture
def examples():
    return load_examples()


def expansion(q_value, terms):
    return RhoExpansion.from_dict(q_value, {Partition(parts): c for parts, c in terms.items()})


def test_single_rho():
    assert GelfandGraev.to_rho_basis(GelfandGraev.rho(2), 2) == expansion(2, {(2,): 1})


def test_product_of_rhos():
    f = GelfandGraev.product_rho([1, 1])
    assert GelfandGraev.to_rho_basis(f, 3) == expansion(3, {(1, 1): 1})


def test_complete_one():
    assert GelfandGraev.to_rho_basis(SymFunc.monomial(H, (1,)), 2) == expansion(2, {(1,): 1})
    assert GelfandGraev.to_rho_basis(SymFunc.monomial(H, (1,)), 3) == expansion(3, {(1,): Fraction(1, 2)})


def test_input_in_other_basis():
    f = SymmetricAlgebra.convert(GelfandGraev.rho(3), BasisTag.SCHUR)
    assert GelfandGraev.to_rho_basis(f, 5) == expansion(5, {(3,): 1})


@pytest.mark.parametrize("q_value", [1, -1])
def test_degenerate_q(q_value):
    with pytest.raises(DegenerateQ):
        GelfandGraev.to_rho_basis(GelfandGraev.rho(2), q_value)


def test_not_homogeneous():
    f = SymFunc.monomial(H, (2,)) + SymFunc.monomial(H, (1,))
    with pytest.raises(NotHomogeneous):
        GelfandGraev.to_rho_basis(f, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_rho_products_are_triangular(n):
    for lam in partitions_of(n):
        element = GelfandGraev.rho_product_of(lam).evaluate(3)
        assert all(mu.refines(lam) for mu, _ in element.terms)


@pytest.mark.parametrize("q_value", [2, 3, 5, Fraction(1, 2)])
def test_roundtrip(q_value):
    for degree in range(6):
        f = random_symfunc(degree, H)
        result = GelfandGraev.to_rho_basis(f, q_value)
        assert GelfandGraev.from_rho_basis(result) == f.evaluate(q_value)


def test_dim_sum():
    assert GelfandGraev.dim_sum(expansion(2, {(2,): 1})) == 1
    assert GelfandGraev.dim_sum(expansion(2, {(3,): 1, (2, 1): 1})) == 2
    assert GelfandGraev.dim_sum(expansion(2, {})) == 0


def test_is_natural():
    assert expansion(2, {(3,): 1, (2, 1): 2}).is_natural()
    assert not expansion(2, {(3,): Fraction(1, 2)}).is_natural()
    assert not expansion(2, {(3,): -1}).is_natural()


def test_mixed_sizes_rejected():
    with pytest.raises(NotHomogeneous):
        expansion(2, {(3,): 1, (1,): 1})


def test_record_form():
    value = expansion(2, {(4,): 2, (2, 2): 1})
    assert value.to_record() == {
        "q": "2",
        "rho_terms": [
            {"partition": [4], "coefficient": "2"},
            {"partition": [2, 2], "coefficient": "1"},
        ],
    }
    assert RhoExpansion.from_record(value.to_record()) == value
    with pytest.raises(ExpressionParseError):
        RhoExpansion.from_record({"q": "2.5", "rho_terms": []})


def test_supercharacter_examples(examples):
    assert [example.dimension for example in examples] == [2, 4, 4, 2]
    for example in examples:
        f = GelfandGraev.from_rho_basis(example.expansion)
        assert f.is_homogeneous()
        assert GelfandGraev.to_rho_basis(f, 2) == example.expansion
        assert GelfandGraev.dim_sum(example.expansion) == example.dimension
        assert example.expansion.is_natural()
