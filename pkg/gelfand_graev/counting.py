from functools import cache
from fractions import Fraction

from sympy import divisors, mobius

from models.laurent_poly import LaurentPoly


@cache
def count_irreducible(i: int) -> LaurentPoly:
    """
    L_q(i) = (1/i) sum_{d | i} mu(d) q^{i/d}: número de polinômios mônicos
    irredutíveis de grau i sobre F_q, como polinômio em q.

    :param i: Grau positivo.
    :raises ValueError: Se i < 1.
    :return: Polinômio com coeficientes racionais (inteiro em potências de primo).
    """
    if i < 1:
        raise ValueError(f"i deve ser positivo: {i}")
    return LaurentPoly.from_dict(
        {i // d: Fraction(int(mobius(d)), i) for d in divisors(i) if mobius(d) != 0}
    )


@cache
def count_irreducible_nonzero_root(i: int) -> LaurentPoly:
    """
    l_q(i): como L_q(i), excluindo o polinômio x quando i = 1.
    """
    if i == 1:
        return count_irreducible(1) - 1
    return count_irreducible(i)
