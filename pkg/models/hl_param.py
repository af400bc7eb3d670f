from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from models.laurent_poly import LaurentPoly, Scalar


@dataclass(frozen=True)
class HLParam:
    """
    Instanciação do parâmetro t de Hall-Littlewood como elemento do anel de
    coeficientes (em geral q^{-1}).
    """

    value: LaurentPoly

    @classmethod
    def of(cls, value: Union[LaurentPoly, Scalar]) -> "HLParam":
        return cls(value if isinstance(value, LaurentPoly) else LaurentPoly.constant(value))

    @classmethod
    def q_inverse(cls) -> "HLParam":
        return cls(LaurentPoly.q(-1))

    def one_minus(self) -> LaurentPoly:
        return 1 - self.value

    def __str__(self) -> str:
        return str(self.value)
