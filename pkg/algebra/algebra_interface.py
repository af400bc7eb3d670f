from abc import ABC, abstractmethod
from typing import Mapping, Union

from models.laurent_poly import LaurentPoly, Scalar
from models.symfunc import BasisTag, SymFunc


class ISymmetricAlgebra(ABC):
    """
    Interface da álgebra graduada Lambda sobre o anel de Laurent em q.

    Define as operações de anel, mudança de base, omega, produto escalar de
    Hall, pletismo por p_b e especialização de somas de potências, garantindo
    assinatura consistente para implementações concretas.
    """

    @staticmethod
    @abstractmethod
    def add(f: SymFunc, g: SymFunc) -> SymFunc:
        """
        Soma coeficiente a coeficiente; exige a mesma base.
        """
        return f

    @staticmethod
    @abstractmethod
    def mul(f: SymFunc, g: SymFunc) -> SymFunc:
        """
        Produto em Lambda, devolvido na base de ``f``.
        """
        return f

    @staticmethod
    @abstractmethod
    def convert(f: SymFunc, target: BasisTag) -> SymFunc:
        """
        O mesmo elemento de Lambda escrito na base ``target``.
        """
        return f

    @staticmethod
    @abstractmethod
    def omega(f: SymFunc) -> SymFunc:
        """
        Involução omega, que troca h_n e e_n.
        """
        return f

    @staticmethod
    @abstractmethod
    def inner(f: SymFunc, g: SymFunc) -> LaurentPoly:
        """
        Produto escalar de Hall. Retorna zero se não implementado.
        """
        return LaurentPoly.zero()

    @staticmethod
    @abstractmethod
    def plethysm_pb(f: SymFunc, b: int) -> SymFunc:
        """
        Pletismo f[p_b].
        """
        return f

    @staticmethod
    @abstractmethod
    def specialize_p(f: SymFunc, assign: Mapping[int, Union[LaurentPoly, Scalar]]) -> LaurentPoly:
        """
        Substitui cada p_k por ``assign[k]``.
        """
        return LaurentPoly.zero()
