import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from algebra.base_algebra import SymmetricAlgebra
from algebra.hall_littlewood import HallLittlewood
from algebra.transitions import Row, multiply_rows, to_powersum
from gelfand_graev.counting import count_irreducible_nonzero_root
from gelfand_graev.rho_interface import IRhoEngine
from models.errors import DegenerateQ, RhoError, SizeMismatch
from models.hl_param import HLParam
from models.laurent_poly import LaurentPoly, Scalar
from models.partition import Partition, partitions_of
from models.rho_expansion import RhoExpansion
from models.symfunc import BasisTag, SymFunc

_logger = logging.getLogger(__name__)

# (grau da órbita i, índice j do bloco, multiplicidade m_{i,j})
FamilyEntry = Tuple[int, int, int]


@dataclass(frozen=True)
class OrbitFamily:
    """
    Uma família {m_{i,j}}: m_{i,j} órbitas de grau i carregando h_j, com a
    contagem simbólica de escolhas distintas de órbitas.
    """

    entries: Tuple[FamilyEntry, ...]
    count: LaurentPoly

    @property
    def size(self) -> int:
        return sum(i * j * m for i, j, m in self.entries)

    def __str__(self) -> str:
        blocks = " * ".join(
            f"h{j}[p{i}]" + (f"^{m}" if m > 1 else "") for i, j, m in self.entries
        )
        return f"({self.count}) * {blocks or '1'}"


def _enumerate_entries(n: int) -> Iterator[Tuple[FamilyEntry, ...]]:
    # só pares com i*j <= n contribuem, e m_{i,j} <= n/(i*j)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n // i + 1)]

    def walk(index: int, remaining: int, chosen: List[FamilyEntry]) -> Iterator[Tuple[FamilyEntry, ...]]:
        if remaining == 0:
            yield tuple(chosen)
            return
        if index == len(pairs):
            return
        i, j = pairs[index]
        for m in range(remaining // (i * j), -1, -1):
            if m:
                chosen.append((i, j, m))
            yield from walk(index + 1, remaining - m * i * j, chosen)
            if m:
                chosen.pop()

    yield from walk(0, n, [])


def _family_count(entries: Tuple[FamilyEntry, ...], count: Callable[[int], LaurentPoly]) -> LaurentPoly:
    """
    prod_i c(i)(c(i)-1)...(c(i)-m_i+1) / (m_{i,1}! ... m_{i,n}!), com c(i)
    o número simbólico de órbitas de grau i.
    """
    grouped: Dict[int, List[int]] = defaultdict(list)
    for i, _, m in entries:
        grouped[i].append(m)
    total = LaurentPoly.one()
    for i, split in grouped.items():
        m_i = sum(split)
        multinomial = Fraction(factorial(m_i), prod(factorial(m) for m in split))
        total = total * count(i).falling_binomial(m_i) * multinomial
    return total


def _scaled_row(row: Row, factor: int, sign: int = 1) -> Row:
    return {Partition(tuple(part * factor for part in lam)): sign * c for lam, c in row.items()}


def family_sum(n: int, count: Callable[[int], LaurentPoly], block: Callable[[int, int], Row]) -> SymFunc:
    """
    Soma, sobre todas as famílias de tamanho n, da contagem vezes o produto
    dos blocos, na base p.
    """
    total: Dict[Partition, LaurentPoly] = {}
    families = 0
    for entries in _enumerate_entries(n):
        families += 1
        weight = _family_count(entries, count)
        row: Row = {Partition(): Fraction(1)}
        for i, j, m in entries:
            for _ in range(m):
                row = multiply_rows(row, block(i, j))
        for lam, c in row.items():
            total[lam] = total.get(lam, LaurentPoly.zero()) + weight * c
    _logger.debug("grau %d: %d famílias somadas", n, families)
    return SymFunc.from_dict(BasisTag.POWERSUM, total)


def complete_block(i: int, j: int) -> Row:
    """h_j[p_i] na base p."""
    return _scaled_row(to_powersum(BasisTag.COMPLETE, j)[Partition((j,))], i)


def signed_elementary_block(i: int, a: int) -> Row:
    """(-1)^a e_a[p_i] na base p."""
    return _scaled_row(to_powersum(BasisTag.ELEMENTARY, a)[Partition((a,))], i, -1 if a % 2 else 1)


def _check_degree(n: int) -> None:
    if n < 0:
        raise ValueError(f"n deve ser não negativo: {n}")


class GelfandGraev(IRhoEngine):
    """
    Imagem pletística rho_n da característica do caractere de Gelfand-Graev
    induzido de U_n(F_q) para GL_n(F_q), por quatro rotas independentes, e as
    operações derivadas (omega, produtos de componentes, base {rho_lambda}).

    Exemplo básico de uso:
        GelfandGraev.rho(2)                       # (q^2-1)*h[2] - (q-1)*h[1,1]
        GelfandGraev.rho_coeff(3, Partition((2, 1)))
        GelfandGraev.to_rho_basis(GelfandGraev.rho(2), 2)
    """

    @staticmethod
    @cache
    def rho(n: int) -> SymFunc:
        """
        rho_n = (q^n - 1) h_n - rho_{n-1} h_1 - ... - rho_1 h_{n-1}, com rho_0 = 1.

        :param n: Inteiro não negativo.
        :raises ValueError: Se n é negativo.
        :return: rho_n na base h.
        """
        _check_degree(n)
        if n == 0:
            return SymFunc.one(BasisTag.COMPLETE)
        q = LaurentPoly.q()
        total: Dict[Partition, LaurentPoly] = {Partition((n,)): q ** n - 1}
        for k in range(1, n):
            for lam, c in GelfandGraev.rho(n - k).terms:
                key = lam.concat_sort(Partition((k,)))
                total[key] = total.get(key, LaurentPoly.zero()) - c
        return SymFunc.from_dict(BasisTag.COMPLETE, total)

    @staticmethod
    def rho_coeff(n: int, partition: Partition) -> LaurentPoly:
        """
        [h_lambda] rho_n pela recorrência de coeficientes: [h_n] rho_n = q^n - 1
        e, para l(lambda) >= 2, menos a soma sobre as partes distintas a de
        lambda de [h_{lambda - a}] rho_{n-a}.

        :param n: Grau.
        :param partition: Partição de n.
        :raises SizeMismatch: Se |lambda| != n.
        :return: O coeficiente.
        """
        if not isinstance(partition, Partition):
            partition = Partition.of(partition)
        if partition.size != n:
            raise SizeMismatch(f"|{partition}| = {partition.size} != {n}")
        return _coefficient(partition)

    @staticmethod
    def rho_via_hl(n: int) -> SymFunc:
        """
        rho_n = q^n q_n(Y;q^{-1}), sem nenhuma divisão.
        """
        _check_degree(n)
        return HallLittlewood.qr(n, HLParam.q_inverse()).scale(LaurentPoly.q(n))

    @staticmethod
    def rho_via_m(n: int) -> SymFunc:
        """
        rho_n = sum_{lambda |- n} m_lambda(q-1) h_lambda, com p_k(q-1) = q^k - 1.
        """
        _check_degree(n)
        q = LaurentPoly.q()
        assign = {k: q ** k - 1 for k in range(1, n + 1)}
        return SymFunc.from_dict(
            BasisTag.COMPLETE,
            {
                lam: SymmetricAlgebra.specialize_p(SymFunc.monomial(BasisTag.MONOMIAL, lam), assign)
                for lam in partitions_of(n)
            },
        )

    @staticmethod
    def rho_via_theta(n: int) -> SymFunc:
        """
        rho_n como soma, sobre as famílias {m_{i,j}} com sum m_{i,j} i j = n, de
        l_q(i)(l_q(i)-1)...(l_q(i)-m_i+1) / prod_j m_{i,j}! vezes prod_j (h_j[p_i])^{m_{i,j}}.
        """
        _check_degree(n)
        powersum = family_sum(n, count_irreducible_nonzero_root, complete_block)
        return SymmetricAlgebra.convert(powersum, BasisTag.COMPLETE)

    @staticmethod
    def orbit_families(n: int) -> List[OrbitFamily]:
        """
        Lista as famílias somadas por ``rho_via_theta``, com suas contagens.
        """
        _check_degree(n)
        return [
            OrbitFamily(entries, _family_count(entries, count_irreducible_nonzero_root))
            for entries in _enumerate_entries(n)
        ]

    @staticmethod
    def omega_rho(n: int) -> SymFunc:
        """
        omega(rho_n): a característica do caractere induzido escrita no
        alfabeto X_{x-1} (a troca de variáveis é só notação).
        """
        return SymmetricAlgebra.omega(GelfandGraev.rho(n))

    @staticmethod
    def omega_twisted(n: int) -> SymFunc:
        """
        q^{n-1}(q-1) omega(P~_n(Y;q)).
        """
        if n < 1:
            raise ValueError(f"n deve ser positivo: {n}")
        factor = LaurentPoly.q(n - 1) * (LaurentPoly.q() - 1)
        return SymmetricAlgebra.omega(HallLittlewood.twisted_one_row(n)).scale(factor)

    @staticmethod
    def product_rho(components: Sequence[int]) -> SymFunc:
        """
        prod_i rho_{n_i} na base h; a sequência vazia dá 1.

        :param components: Tamanhos positivos das componentes conexas.
        :raises ValueError: Se algum tamanho não é positivo.
        """
        result = SymFunc.one(BasisTag.COMPLETE)
        for n in components:
            if n < 1:
                raise ValueError(f"componentes devem ser positivas: {list(components)}")
            result = SymmetricAlgebra.mul(result, GelfandGraev.rho(n))
        return result

    @staticmethod
    @cache
    def rho_product_of(partition: Partition) -> SymFunc:
        """rho_lambda = rho_{lambda_1} ... rho_{lambda_l}."""
        return GelfandGraev.product_rho(partition.parts)

    @staticmethod
    def to_rho_basis(f: SymFunc, q_value: Scalar) -> RhoExpansion:
        """
        Resolve f = sum C_lambda rho_lambda com q = q_value.

        rho_lambda tem suporte em h_mu com mu refinando lambda e diagonal
        prod (q^{lambda_i} - 1); o sistema é resolvido do mais grosso para o
        mais fino, e as duas propriedades são verificadas em cada passo.

        :param f: Função homogênea de grau n, em qualquer base.
        :param q_value: Racional com q^k != 1 para 1 <= k <= n.
        :raises NotHomogeneous: Se ``f`` mistura graus.
        :raises DegenerateQ: Se alguma entrada diagonal se anula.
        :return: A expansão na base {rho_lambda}.
        """
        q_value = Fraction(q_value)
        in_h = SymmetricAlgebra.convert(f, BasisTag.COMPLETE)
        n = in_h.degree()
        for k in range(1, n + 1):
            if q_value ** k == 1:
                raise DegenerateQ(f"q = {q_value} satisfaz q^{k} = 1")
        residual = {lam: c.eval(q_value) for lam, c in in_h.terms}
        coefficients: Dict[Partition, Fraction] = {}
        for lam in partitions_of(n):
            element = GelfandGraev.rho_product_of(lam).evaluate(q_value).as_dict()
            stray = [mu for mu in element if not mu.refines(lam)]
            if stray:
                raise RhoError(f"rho{lam} tem termos fora dos refinamentos: {stray}")
            diagonal = prod((q_value ** part - 1 for part in lam), start=Fraction(1))
            if element.get(lam) != diagonal:
                raise RhoError(f"diagonal de rho{lam} difere de {diagonal}")
            coefficient = residual.get(lam, Fraction(0)) / diagonal
            if coefficient:
                coefficients[lam] = coefficient
                for mu, value in element.items():
                    residual[mu] = residual.get(mu, Fraction(0)) - coefficient * value.constant_value()
        leftover = {mu: c for mu, c in residual.items() if c}
        if leftover:
            raise RhoError(f"resíduo não nulo após a resolução: {leftover}")
        return RhoExpansion.from_dict(q_value, coefficients)

    @staticmethod
    def from_rho_basis(expansion: RhoExpansion) -> SymFunc:
        """
        Reconstrói sum C_lambda rho_lambda com q = expansion.q_value, na base h.
        """
        total = SymFunc.zero(BasisTag.COMPLETE)
        for lam, c in expansion.coeffs:
            total = total + GelfandGraev.rho_product_of(lam).evaluate(expansion.q_value).scale(c)
        return total

    @staticmethod
    def dim_sum(expansion: RhoExpansion) -> Fraction:
        """
        dim(chi) = sum C_lambda.
        """
        return expansion.dimension()


@cache
def _coefficient(partition: Partition) -> LaurentPoly:
    if partition.length == 0:
        return LaurentPoly.one()
    if partition.length == 1:
        return LaurentPoly.q(partition.size) - 1
    total = LaurentPoly.zero()
    for part in sorted(set(partition.parts), reverse=True):
        total = total - _coefficient(partition.remove_part(part))
    return total
