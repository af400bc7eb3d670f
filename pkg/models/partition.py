from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache, lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, List, Sequence, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions


@dataclass(frozen=True, order=True)
class Partition:
    """
    Partição: sequência fracamente decrescente de inteiros positivos.

    A ordem natural da dataclass (lexicográfica nas partes) invertida é a
    ordem canônica de toda saída do pacote: (3) > (2,1) > (1,1,1).
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partes devem ser positivas: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partes devem ser fracamente decrescentes: {parts}")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Constrói a partição ordenando as partes dadas."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def to_record(self) -> List[int]:
        return list(self.parts)

    @classmethod
    def from_record(cls, record: Sequence[int]) -> "Partition":
        if isinstance(record, (str, bytes)) or not all(
            isinstance(p, int) and not isinstance(p, bool) for p in record
        ):
            raise ValueError(f"partição inválida: {record!r}")
        parts = tuple(record)
        if parts != tuple(sorted(parts, reverse=True)):
            raise ValueError(f"partes fora de ordem: {record!r}")
        return cls(parts)

    def concat_sort(self, other: "Partition") -> "Partition":
        """União de multiconjuntos das partes, reordenada."""
        return Partition.of(self.parts + other.parts)

    def remove_part(self, part: int) -> "Partition":
        """
        Remove uma ocorrência de ``part``.

        :raises ValueError: Se ``part`` não ocorre na partição.
        """
        index = self.parts.index(part)
        return Partition(self.parts[:index] + self.parts[index + 1:])

    def z_stat(self) -> int:
        return z_stat(self)

    def n_stat(self) -> int:
        return n_stat(self)

    def refines(self, coarser: "Partition") -> bool:
        """
        Indica se as partes de ``self`` podem ser agrupadas em blocos cujas
        somas são as partes de ``coarser``.
        """
        if self.size != coarser.size:
            return False
        return _fits(self.parts, tuple(sorted(coarser.parts)))


@lru_cache(maxsize=None)
def _fits(parts: Tuple[int, ...], capacities: Tuple[int, ...]) -> bool:
    if not parts:
        return all(c == 0 for c in capacities)
    head, rest = parts[0], parts[1:]
    tried = set()
    for i, capacity in enumerate(capacities):
        if capacity >= head and capacity not in tried:
            tried.add(capacity)
            remaining = capacities[:i] + (capacity - head,) + capacities[i + 1:]
            if _fits(rest, tuple(sorted(remaining))):
                return True
    return False


@cache
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """
    Todas as partições de n, cada uma uma vez, em ordem lexicográfica reversa.

    :param n: Inteiro não negativo.
    :raises ValueError: Se n é negativo.
    :return: Tupla de partições; para n = 0, apenas a partição vazia.
    """
    if n < 0:
        raise ValueError(f"n deve ser não negativo: {n}")
    if n == 0:
        return (Partition(),)
    found = [
        Partition.of(part for part, mult in block.items() for _ in range(mult))
        for block in _sympy_partitions(n)
    ]
    return tuple(sorted(found, reverse=True))


def z_stat(partition: Partition) -> int:
    """Ordem do centralizador: prod_i i^{m_i} * m_i!."""
    return prod(i ** m * factorial(m) for i, m in partition.multiplicities().items())


def n_stat(partition: Partition) -> int:
    """n(lambda) = sum (i-1) * lambda_i."""
    return sum(i * part for i, part in enumerate(partition.parts))


def concat_sort(first: Partition, second: Partition) -> Partition:
    return first.concat_sort(second)
