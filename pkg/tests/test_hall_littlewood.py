from fractions import Fraction

import pytest

from algebra.base_algebra import SymmetricAlgebra
from algebra.hall_littlewood import HallLittlewood
from gelfand_graev.rho_engine import GelfandGraev
from models.hl_param import HLParam
from models.laurent_poly import LaurentPoly
from models.partition import Partition
from models.symfunc import BasisTag, SymFunc

H = BasisTag.COMPLETE
q = LaurentPoly.q()


def complete(*parts, coefficient=1):
    return SymFunc.monomial(H, Partition(tuple(parts)), coefficient)


@pytest.fixture
def t():
    return LaurentPoly.q(-1)


def test_qr_small_cases(t):
    param = HLParam(t)
    assert HallLittlewood.qr(0, param) == SymFunc.one()
    assert HallLittlewood.qr(1, param) == complete(1, coefficient=1 - t)
    assert HallLittlewood.qr(2, param) == complete(2, coefficient=1 - t ** 2) + complete(1, 1, coefficient=t ** 2 - t)


def test_one_row_small_cases(t):
    param = HLParam(t)
    assert HallLittlewood.one_row(1, param) == complete(1)
    assert HallLittlewood.one_row(2, param) == complete(2, coefficient=1 + t) - complete(1, 1, coefficient=t)


@pytest.mark.parametrize("param", [HLParam.q_inverse(), HLParam.of(0), HLParam.of(2)])
def test_one_row_times_one_minus_t(param):
    for r in range(1, 11):
        assert HallLittlewood.one_row(r, param).scale(param.one_minus()) == HallLittlewood.qr(r, param)


@pytest.mark.parametrize("n", range(1, 9))
def test_one_row_at_zero_is_complete(n):
    assert HallLittlewood.one_row(n, HLParam.of(0)) == complete(n)


def test_one_row_rejects_t_equal_one():
    with pytest.raises(ValueError):
        HallLittlewood.one_row(2, HLParam.of(1))
    with pytest.raises(ValueError):
        HallLittlewood.one_row(0, HLParam.q_inverse())


def test_twisted_one_row():
    assert HallLittlewood.twisted_one_row(1) == complete(1)
    inverse = LaurentPoly.q(-1)
    assert HallLittlewood.twisted_one_row(2) == complete(2, coefficient=1 + inverse) - complete(1, 1, coefficient=inverse)


@pytest.mark.parametrize("n", range(1, 9))
def test_twisted_one_row_scales_to_rho(n):
    factor = LaurentPoly.q(n - 1) * (q - 1)
    assert HallLittlewood.twisted_one_row(n).scale(factor) == GelfandGraev.rho(n)


def test_generating_function_with_concrete_variables():
    ys = [Fraction(1, 2), Fraction(-2, 3), Fraction(3)]
    t = Fraction(2, 5)
    top = 5
    series = [Fraction(1)] + [Fraction(0)] * top
    for y in ys:
        # (1 - y t u) / (1 - y u) = 1 + sum_{k>=1} (1 - t) y^k u^k
        factor = [Fraction(1)] + [(1 - t) * y ** k for k in range(1, top + 1)]
        series = [sum(series[a] * factor[k - a] for a in range(k + 1)) for k in range(top + 1)]
    assign = {k: sum(y ** k for y in ys) for k in range(1, top + 1)}
    for r in range(top + 1):
        value = SymmetricAlgebra.specialize_p(HallLittlewood.qr(r, HLParam.of(t)), assign)
        assert value == series[r]
