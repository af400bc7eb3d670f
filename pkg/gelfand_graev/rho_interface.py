from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Sequence

from models.laurent_poly import LaurentPoly, Scalar
from models.partition import Partition
from models.rho_expansion import RhoExpansion
from models.symfunc import SymFunc


class IRhoEngine(ABC):
    """
    Interface das rotas de cálculo de rho_n e das operações derivadas.

    Toda implementação concreta deve produzir os mesmos valores exatos pelas
    quatro rotas (recorrência, Hall-Littlewood, monomiais em q-1 e órbitas).
    """

    @staticmethod
    @abstractmethod
    def rho(n: int) -> SymFunc:
        """
        rho_n na base h pela recorrência; rho_0 = 1.
        """
        return SymFunc.one()

    @staticmethod
    @abstractmethod
    def rho_coeff(n: int, partition: Partition) -> LaurentPoly:
        """
        Coeficiente de h_lambda em rho_n, só pela recorrência de coeficientes.
        """
        return LaurentPoly.zero()

    @staticmethod
    @abstractmethod
    def rho_via_hl(n: int) -> SymFunc:
        """
        rho_n = q^n q_n(Y;q^{-1}).
        """
        return SymFunc.one()

    @staticmethod
    @abstractmethod
    def rho_via_m(n: int) -> SymFunc:
        """
        rho_n = sum m_lambda(q-1) h_lambda.
        """
        return SymFunc.one()

    @staticmethod
    @abstractmethod
    def rho_via_theta(n: int) -> SymFunc:
        """
        rho_n pela soma sobre famílias de órbitas.
        """
        return SymFunc.one()

    @staticmethod
    @abstractmethod
    def omega_rho(n: int) -> SymFunc:
        """
        omega(rho_n).
        """
        return SymFunc.one()

    @staticmethod
    @abstractmethod
    def product_rho(components: Sequence[int]) -> SymFunc:
        """
        Produto rho_{n_1} ... rho_{n_k}; a sequência vazia dá 1.
        """
        return SymFunc.one()

    @staticmethod
    @abstractmethod
    def to_rho_basis(f: SymFunc, q_value: Scalar) -> RhoExpansion:
        """
        Coeficientes de ``f`` na base {rho_lambda} com q especializado.
        """
        return RhoExpansion(Fraction(q_value))

    @staticmethod
    @abstractmethod
    def dim_sum(expansion: RhoExpansion) -> Fraction:
        """
        Soma dos coeficientes C_lambda.
        """
        return Fraction(0)
