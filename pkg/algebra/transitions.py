"""
Tabelas de transição por grau entre cada base e a base de somas de potências.

Uma tabela associa a cada partição lambda de n a linha {mu: c} tal que
B_lambda = sum_mu c * p_mu. Todas as entradas são racionais independentes de q,
então cada tabela é calculada uma única vez por (base, grau) e guardada com
``functools.cache``; leitores concorrentes enxergam sempre o mesmo valor.
"""
import logging
from fractions import Fraction
from functools import cache
from typing import Dict, Mapping, Tuple

import sympy

from models.partition import Partition, partitions_of
from models.symfunc import BasisTag

_logger = logging.getLogger(__name__)

Row = Dict[Partition, Fraction]
Table = Dict[Partition, Row]


def multiply_rows(first: Mapping[Partition, Fraction], second: Mapping[Partition, Fraction]) -> Row:
    """Produto de duas combinações de p_mu (bases multiplicativas: concatenação)."""
    product: Row = {}
    for lam, a in first.items():
        for mu, b in second.items():
            key = lam.concat_sort(mu)
            product[key] = product.get(key, Fraction(0)) + a * b
    return {k: v for k, v in product.items() if v}


@cache
def _complete_row(n: int) -> Row:
    # Newton: n h_n = sum_{k=1}^{n} p_k h_{n-k}
    if n == 0:
        return {Partition(): Fraction(1)}
    row: Row = {}
    for k in range(1, n + 1):
        for lam, c in multiply_rows({Partition((k,)): Fraction(1)}, _complete_row(n - k)).items():
            row[lam] = row.get(lam, Fraction(0)) + c / n
    return {k: v for k, v in row.items() if v}


@cache
def _elementary_row(n: int) -> Row:
    # Newton: n e_n = sum_{k=1}^{n} (-1)^{k-1} p_k e_{n-k}
    if n == 0:
        return {Partition(): Fraction(1)}
    row: Row = {}
    for k in range(1, n + 1):
        sign = 1 if k % 2 else -1
        for lam, c in multiply_rows({Partition((k,)): Fraction(sign)}, _elementary_row(n - k)).items():
            row[lam] = row.get(lam, Fraction(0)) + c / n
    return {k: v for k, v in row.items() if v}


def _multiplicative_table(n: int, single) -> Table:
    table: Table = {}
    for lam in partitions_of(n):
        row: Row = {Partition(): Fraction(1)}
        for part in lam:
            row = multiply_rows(row, single(part))
        table[lam] = row
    return table


def _count_merges(parts: Tuple[int, ...], targets: Tuple[int, ...]) -> int:
    """
    Número de funções das partes de lambda nas posições de mu tais que a soma
    em cada posição j é mu_j: o coeficiente de m_mu em p_lambda.
    """

    @cache
    def walk(index: int, remaining: Tuple[int, ...]) -> int:
        if index == len(parts):
            return int(all(r == 0 for r in remaining))
        part = parts[index]
        total = 0
        for j, capacity in enumerate(remaining):
            if capacity >= part:
                total += walk(index + 1, remaining[:j] + (capacity - part,) + remaining[j + 1:])
        return total

    return walk(0, targets)


@cache
def _powersum_in_monomial(n: int) -> Table:
    index = partitions_of(n)
    return {
        lam: {
            mu: Fraction(count)
            for mu in index
            if (count := _count_merges(lam.parts, mu.parts))
        }
        for lam in index
    }


@cache
def _schur_in_complete(n: int) -> Table:
    # Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}), h_0 = 1, h_k = 0 para k < 0
    if n == 0:
        return {Partition(): {Partition(): Fraction(1)}}
    symbols = sympy.symbols(f"h1:{n + 1}")

    def entry(k: int):
        if k < 0:
            return sympy.Integer(0)
        return sympy.Integer(1) if k == 0 else symbols[k - 1]

    table: Table = {}
    for lam in partitions_of(n):
        size = lam.length
        matrix = sympy.Matrix(size, size, lambda i, j: entry(lam.parts[i] - i + j))
        poly = sympy.Poly(sympy.expand(matrix.det(method="berkowitz")), *symbols)
        row: Row = {}
        for exponents, coeff in poly.terms():
            nu = Partition.of(k + 1 for k, e in enumerate(exponents) for _ in range(e))
            row[nu] = Fraction(int(coeff.p), int(coeff.q))
        table[lam] = row
    return table


def _compose(outer: Table, inner: Table) -> Table:
    composed: Table = {}
    for lam, row in outer.items():
        result: Row = {}
        for nu, a in row.items():
            for mu, b in inner[nu].items():
                result[mu] = result.get(mu, Fraction(0)) + a * b
        composed[lam] = {k: v for k, v in result.items() if v}
    return composed


def _invert(table: Table, n: int) -> Table:
    index = partitions_of(n)
    matrix = sympy.Matrix(
        len(index),
        len(index),
        lambda i, j: sympy.Rational(
            table[index[i]].get(index[j], Fraction(0)).numerator,
            table[index[i]].get(index[j], Fraction(0)).denominator,
        ),
    )
    inverse = matrix.inv(method="LU")
    return {
        index[i]: {
            index[j]: Fraction(int(inverse[i, j].p), int(inverse[i, j].q))
            for j in range(len(index))
            if inverse[i, j] != 0
        }
        for i in range(len(index))
    }


@cache
def to_powersum(basis: BasisTag, n: int) -> Table:
    """
    Tabela de B_lambda na base p para todo lambda de n.

    :param basis: Base de origem.
    :param n: Grau homogêneo.
    :return: Dicionário lambda -> {mu: coeficiente de p_mu}.
    """
    basis = BasisTag(basis)
    if basis is BasisTag.POWERSUM:
        table = {lam: {lam: Fraction(1)} for lam in partitions_of(n)}
    elif basis is BasisTag.COMPLETE:
        table = _multiplicative_table(n, _complete_row)
    elif basis is BasisTag.ELEMENTARY:
        table = _multiplicative_table(n, _elementary_row)
    elif basis is BasisTag.MONOMIAL:
        table = _invert(_powersum_in_monomial(n), n)
    else:
        table = _compose(_schur_in_complete(n), to_powersum(BasisTag.COMPLETE, n))
    _logger.debug("tabela %s -> p em grau %d calculada (%d linhas)", basis.value, n, len(table))
    return table


@cache
def from_powersum(basis: BasisTag, n: int) -> Table:
    """
    Tabela de p_mu na base ``basis`` para todo mu de n (inversa de ``to_powersum``).
    """
    basis = BasisTag(basis)
    if basis is BasisTag.POWERSUM:
        return to_powersum(basis, n)
    if basis is BasisTag.MONOMIAL:
        return _powersum_in_monomial(n)
    return _invert(to_powersum(basis, n), n)
