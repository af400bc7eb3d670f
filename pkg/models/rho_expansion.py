from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Mapping, Tuple

from models.errors import ExpressionParseError, NotHomogeneous
from models.laurent_poly import Scalar, parse_rational
from models.partition import Partition


@dataclass(frozen=True)
class RhoExpansion:
    """
    Coeficientes C_lambda de uma função de classe na base {rho_lambda},
    com q especializado em ``q_value``.

    Todas as chaves têm o mesmo tamanho n.
    """

    q_value: Fraction
    coeffs: Tuple[Tuple[Partition, Fraction], ...] = ()

    def __post_init__(self) -> None:
        sizes = {lam.size for lam, _ in self.coeffs}
        if len(sizes) > 1:
            raise NotHomogeneous(f"expansão com tamanhos misturados: {sorted(sizes)}")

    @classmethod
    def from_dict(cls, q_value: Scalar, coefficients: Mapping[Partition, Scalar]) -> "RhoExpansion":
        ordered = sorted(
            ((lam, Fraction(c)) for lam, c in coefficients.items() if c != 0),
            reverse=True,
            key=lambda t: t[0],
        )
        return cls(Fraction(q_value), tuple(ordered))

    def as_dict(self) -> Dict[Partition, Fraction]:
        return dict(self.coeffs)

    def degree(self) -> int:
        return self.coeffs[0][0].size if self.coeffs else 0

    def dimension(self) -> Fraction:
        return sum((c for _, c in self.coeffs), Fraction(0))

    def is_natural(self) -> bool:
        """True se todo C_lambda é inteiro não negativo."""
        return all(c >= 0 and c.denominator == 1 for _, c in self.coeffs)

    def to_record(self) -> Dict[str, Any]:
        return {
            "q": str(self.q_value),
            "rho_terms": [
                {"partition": lam.to_record(), "coefficient": str(c)}
                for lam, c in self.coeffs
            ],
        }

    @classmethod
    def from_record(cls, record: Mapping[str, Any]) -> "RhoExpansion":
        try:
            q_value = parse_rational(record["q"])
            coefficients = {
                Partition.from_record(term["partition"]): parse_rational(term["coefficient"])
                for term in record["rho_terms"]
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise ExpressionParseError(f"expansão rho inválida: {exc}") from exc
        return cls.from_dict(q_value, coefficients)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*rho{lam}" for lam, c in self.coeffs).replace("+ -", "- ")
