from typing import Dict

from algebra.base_algebra import SymmetricAlgebra
from models.errors import NotDivisible
from models.hl_param import HLParam
from models.laurent_poly import LaurentPoly
from models.partition import Partition
from models.symfunc import BasisTag, SymFunc


class HallLittlewood:
    """
    Funções de Hall-Littlewood de uma linha: q_r(Y;t), P_n(Y;t) e a forma
    torcida P~_n(Y;q), sempre na base h.

    Exemplo básico de uso:
        HallLittlewood.one_row(2, HLParam.q_inverse())
    """

    @staticmethod
    def qr(r: int, t: HLParam) -> SymFunc:
        """
        q_r(Y;t) = sum_{i=0}^{r} (-t)^i e_i h_{r-i}, o coeficiente de u^r em
        E(-tu) H(u).

        :param r: Inteiro não negativo; q_0 = 1.
        :param t: Valor do parâmetro t.
        :return: q_r na base h.
        """
        if r < 0:
            raise ValueError(f"r deve ser não negativo: {r}")
        total: Dict[Partition, LaurentPoly] = {}
        minus_t = -t.value
        for i in range(r + 1):
            elementary = SymmetricAlgebra.convert(SymFunc.monomial(BasisTag.ELEMENTARY, (i,) if i else ()), BasisTag.COMPLETE)
            term = SymmetricAlgebra.mul(elementary, SymFunc.monomial(BasisTag.COMPLETE, (r - i,) if r - i else ()))
            weight = minus_t ** i
            for lam, c in term.terms:
                total[lam] = total.get(lam, LaurentPoly.zero()) + c * weight
        return SymFunc.from_dict(BasisTag.COMPLETE, total)

    @staticmethod
    def one_row(n: int, t: HLParam) -> SymFunc:
        """
        P_n(Y;t) = q_n(Y;t) / (1 - t), com divisão exata coeficiente a coeficiente.

        :param n: Inteiro positivo.
        :param t: Valor do parâmetro t, diferente de 1.
        :raises NotDivisible: Se algum coeficiente não é divisível por 1 - t
            (indica defeito de implementação, nunca erro de uso).
        :return: P_n na base h.
        """
        if n < 1:
            raise ValueError(f"n deve ser positivo: {n}")
        divisor = t.one_minus()
        if divisor.is_zero():
            raise ValueError("t = 1 não é permitido em P_n")
        try:
            return HallLittlewood.qr(n, t).map_coefficients(lambda c: c.exact_div(divisor))
        except NotDivisible as exc:
            raise NotDivisible(f"q_{n}(Y;{t}) não é divisível por 1 - t: {exc}") from exc

    @staticmethod
    def twisted_one_row(n: int) -> SymFunc:
        # n((n)) = 0, então P~_n(Y;q) = P_n(Y;q^{-1})
        return HallLittlewood.one_row(n, HLParam.q_inverse())
