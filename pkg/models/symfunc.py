from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Iterator, List, Mapping, Set, Tuple, Union

from models.errors import BasisMismatch, ExpressionParseError, NotHomogeneous
from models.laurent_poly import LaurentPoly, Scalar
from models.partition import Partition


class BasisTag(str, Enum):
    """As cinco bases clássicas de Lambda."""

    MONOMIAL = "m"
    ELEMENTARY = "e"
    COMPLETE = "h"
    POWERSUM = "p"
    SCHUR = "s"


Coefficient = Union[LaurentPoly, Scalar]


def _as_poly(value: Coefficient) -> LaurentPoly:
    return value if isinstance(value, LaurentPoly) else LaurentPoly.constant(value)


@dataclass(frozen=True)
class SymFunc:
    """
    Combinação linear finita de elementos de uma base, com coeficientes em
    LaurentPoly.

    Os termos ficam em ordem lexicográfica reversa das partições e nunca
    guardam coeficiente zero; igualdade na mesma base é igualdade estrutural.
    A igualdade entre bases diferentes passa pela base de somas de potências
    (ver ``SymmetricAlgebra.equal``).
    """

    basis: BasisTag
    terms: Tuple[Tuple[Partition, LaurentPoly], ...] = ()

    @classmethod
    def from_dict(cls, basis: BasisTag, coefficients: Mapping[Partition, Coefficient]) -> "SymFunc":
        cleaned = {lam: _as_poly(c) for lam, c in coefficients.items()}
        ordered = sorted(((lam, c) for lam, c in cleaned.items() if c), reverse=True, key=lambda t: t[0])
        return cls(BasisTag(basis), tuple(ordered))

    @classmethod
    def monomial(cls, basis: BasisTag, partition: Union[Partition, Tuple[int, ...]], coefficient: Coefficient = 1) -> "SymFunc":
        if not isinstance(partition, Partition):
            partition = Partition.of(partition)
        return cls.from_dict(basis, {partition: coefficient})

    @classmethod
    def one(cls, basis: BasisTag = BasisTag.COMPLETE) -> "SymFunc":
        return cls.monomial(basis, Partition())

    @classmethod
    def zero(cls, basis: BasisTag = BasisTag.COMPLETE) -> "SymFunc":
        return cls(BasisTag(basis))

    def as_dict(self) -> Dict[Partition, LaurentPoly]:
        return dict(self.terms)

    def coefficient(self, partition: Union[Partition, Tuple[int, ...]]) -> LaurentPoly:
        if not isinstance(partition, Partition):
            partition = Partition.of(partition)
        return self.as_dict().get(partition, LaurentPoly.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[Partition, LaurentPoly]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degrees(self) -> Set[int]:
        return {lam.size for lam, _ in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """
        Grau de uma função homogênea (0 para a função nula).

        :raises NotHomogeneous: Se há termos de graus diferentes.
        """
        degrees = self.degrees()
        if len(degrees) > 1:
            raise NotHomogeneous(f"graus misturados: {sorted(degrees)}")
        return degrees.pop() if degrees else 0

    def _check_basis(self, other: "SymFunc") -> None:
        if self.basis != other.basis:
            raise BasisMismatch(f"bases diferentes: {self.basis.value} e {other.basis.value}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._check_basis(other)
        total = self.as_dict()
        for lam, c in other.terms:
            total[lam] = total.get(lam, LaurentPoly.zero()) + c
        return SymFunc.from_dict(self.basis, total)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.basis, tuple((lam, -c) for lam, c in self.terms))

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "SymFunc":
        factor = _as_poly(factor)
        return SymFunc.from_dict(self.basis, {lam: c * factor for lam, c in self.terms})

    def map_coefficients(self, func: Callable[[LaurentPoly], Coefficient]) -> "SymFunc":
        return SymFunc.from_dict(self.basis, {lam: func(c) for lam, c in self.terms})

    def evaluate(self, q_value: Scalar) -> "SymFunc":
        """Especializa q em todos os coeficientes (coeficientes ficam constantes)."""
        return self.map_coefficients(lambda c: c.eval(q_value))

    def to_record(self) -> Dict[str, Any]:
        return {
            "basis": self.basis.value,
            "terms": [
                {"partition": lam.to_record(), "coefficient": c.to_record()}
                for lam, c in self.terms
            ],
        }

    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> "SymFunc":
        """
        Lê a forma estruturada {basis, terms}.

        :raises ExpressionParseError: Se o registro é malformado.
        """
        try:
            basis = BasisTag(record["basis"])
            total: Dict[Partition, LaurentPoly] = {}
            for term in record["terms"]:
                lam = Partition.from_record(term["partition"])
                total[lam] = total.get(lam, LaurentPoly.zero()) + LaurentPoly.from_record(term["coefficient"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ExpressionParseError(f"função simétrica inválida: {exc}") from exc
        return cls.from_dict(basis, total)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for lam, c in self.terms:
            negative = c.leading_coefficient() < 0
            magnitude = -c if negative else c
            text = str(magnitude)
            if len(magnitude.terms) > 1:
                text = f"({text})"
            if lam.length:
                text = f"{text}*{self.basis.value}{lam}"
            if not pieces:
                pieces.append(f"-{text}" if negative else text)
            else:
                pieces.append(f" - {text}" if negative else f" + {text}")
        return "".join(pieces)
