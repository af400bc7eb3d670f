from fractions import Fraction
from itertools import product

import pytest

from gelfand_graev.counting import count_irreducible, count_irreducible_nonzero_root
from models.laurent_poly import LaurentPoly

q = LaurentPoly.q()


def monic_polynomials(degree: int, p: int):
    # coeficientes do termo constante ao líder
    for lower in product(range(p), repeat=degree):
        yield lower + (1,)


def multiply(a, b, p):
    result = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            result[i + j] = (result[i + j] + x * y) % p
    return tuple(result)


def brute_force_irreducible(degree: int, p: int, nonzero_root: bool = False) -> int:
    reducible = set()
    for d in range(1, degree // 2 + 1):
        for a in monic_polynomials(d, p):
            for b in monic_polynomials(degree - d, p):
                reducible.add(multiply(a, b, p))
    count = 0
    for poly in monic_polynomials(degree, p):
        if poly in reducible:
            continue
        if nonzero_root and poly[0] == 0:
            continue
        count += 1
    return count


def test_symbolic_values():
    assert count_irreducible(1) == q
    assert count_irreducible(2) == (q ** 2 - q) * Fraction(1, 2)
    assert count_irreducible(3) == (q ** 3 - q) * Fraction(1, 3)
    assert count_irreducible_nonzero_root(1) == q - 1
    assert count_irreducible_nonzero_root(2) == count_irreducible(2)


def test_degree_four_over_f2():
    assert count_irreducible_nonzero_root(4).eval(2) == 3


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("degree", range(1, 6))
def test_matches_brute_force(p, degree):
    assert count_irreducible(degree).eval(p) == brute_force_irreducible(degree, p)
    assert count_irreducible_nonzero_root(degree).eval(p) == brute_force_irreducible(degree, p, nonzero_root=True)


def test_rejects_nonpositive_degree():
    with pytest.raises(ValueError):
        count_irreducible(0)
