from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Mapping, Tuple, Union

from models.errors import DivideByZero, EvalAtZero, NotDivisible

Rational = Fraction
Scalar = Union[int, Fraction]


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Converte "a/b" ou um inteiro em ``Fraction``.

    :param text: Texto no formato "a/b", "a", ou um número exato.
    :raises ValueError: Se o texto não representa um racional exato.
    :return: Racional em termos mínimos.
    """
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"valor não exato: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    cleaned = str(text).strip()
    if not cleaned or any(ch in cleaned for ch in ".eE"):
        raise ValueError(f"racional inválido: {text!r}")
    try:
        return Fraction(cleaned)
    except ZeroDivisionError:
        raise ValueError(f"denominador nulo: {text!r}") from None


def _coerce(value: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return LaurentPoly.constant(value)
    raise TypeError(f"não é possível converter {type(value).__name__} em LaurentPoly")


@dataclass(frozen=True)
class LaurentPoly:
    """
    Polinômio de Laurent exato na indeterminada q, com coeficientes racionais.

    Forma canônica: pares (expoente, coeficiente) em ordem decrescente de
    expoente, sem coeficientes nulos. O polinômio zero é a tupla vazia, então
    igualdade é comparação estrutural.

    Exemplo básico de uso:
        q = LaurentPoly.q()
        (q - 1) * (q + 1) == q ** 2 - 1
    """

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, coefficients: Mapping[int, Scalar]) -> "LaurentPoly":
        cleaned = {int(e): Fraction(c) for e, c in coefficients.items() if c != 0}
        return cls(tuple(sorted(cleaned.items(), reverse=True)))

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls.from_dict({0: value})

    @classmethod
    def q(cls, exponent: int = 1) -> "LaurentPoly":
        return cls.from_dict({exponent: 1})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.constant(1)

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return self.is_zero() or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def constant_value(self) -> Fraction:
        """
        Valor do polinômio constante.

        :raises ValueError: Se o polinômio depende de q.
        """
        if not self.is_constant():
            raise ValueError(f"{self} não é constante")
        return self.terms[0][1] if self.terms else Fraction(0)

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("o polinômio zero não tem grau")
        return self.terms[0][0]

    def valuation(self) -> int:
        if not self.terms:
            raise ValueError("o polinômio zero não tem valuação")
        return self.terms[-1][0]

    def leading_coefficient(self) -> Fraction:
        return self.terms[0][1] if self.terms else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.terms == LaurentPoly.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self.terms)

    def __add__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        other = _coerce(other)
        total = self.as_dict()
        for e, c in other.terms:
            total[e] = total.get(e, 0) + c
        return LaurentPoly.from_dict(total)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        other = _coerce(other)
        product: Dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms
                return LaurentPoly.from_dict({e * exponent: c ** exponent})
            raise NotDivisible(f"{self} não é invertível")
        result = LaurentPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, divisor: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        """
        Divisão exata: devolve c tal que divisor * c == self.

        :param divisor: Polinômio de Laurent não nulo.
        :raises DivideByZero: Se o divisor é zero.
        :raises NotDivisible: Se não existe quociente de Laurent exato.
        :return: O quociente.
        """
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise DivideByZero("divisão pelo polinômio zero")
        if self.is_zero():
            return LaurentPoly.zero()
        lowest = self.valuation() - divisor.valuation()
        lead_e, lead_c = divisor.terms[0]
        remainder = self
        quotient: Dict[int, Fraction] = {}
        while remainder:
            e, c = remainder.terms[0]
            shift = e - lead_e
            if shift < lowest:
                raise NotDivisible(f"({self}) / ({divisor}) deixa resto")
            factor = c / lead_c
            quotient[shift] = factor
            remainder = remainder - divisor * LaurentPoly.from_dict({shift: factor})
        return LaurentPoly.from_dict(quotient)

    def falling_binomial(self, m: int) -> "LaurentPoly":
        """
        Binomial de fatorial decrescente p(p-1)...(p-m+1)/m!.

        :param m: Inteiro não negativo; m = 0 devolve 1.
        :return: Polinômio resultante.
        """
        if m < 0:
            raise ValueError(f"m deve ser não negativo: {m}")
        result = LaurentPoly.one()
        for k in range(m):
            result = result * (self - k)
        return result * Fraction(1, factorial(m))

    def eval(self, x: Scalar) -> Fraction:
        """
        Especializa q no racional x.

        :raises EvalAtZero: Se x = 0 e há expoentes negativos.
        """
        x = Fraction(x)
        if x == 0 and self.terms and self.valuation() < 0:
            raise EvalAtZero(f"{self} tem expoentes negativos; q = 0 não é permitido")
        return sum((c * x ** e for e, c in self.terms), Fraction(0))

    def to_record(self) -> Dict[str, str]:
        return {str(e): str(c) for e, c in self.terms}

    @classmethod
    def from_record(cls, record: Union[Mapping[str, Union[str, int]], str, int]) -> "LaurentPoly":
        # um racional isolado também é aceito como polinômio constante
        if not isinstance(record, Mapping):
            return cls.constant(parse_rational(record))
        return cls.from_dict({int(e): parse_rational(c) for e, c in record.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms:
            if e == 0:
                piece = str(c)
            else:
                power = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    piece = power
                elif c == -1:
                    piece = f"-{power}"
                else:
                    piece = f"{c}*{power}"
            if pieces and not piece.startswith("-"):
                piece = f"+{piece}"
            pieces.append(piece)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"
