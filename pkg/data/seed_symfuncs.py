from fractions import Fraction
from typing import List, Optional

from faker import Faker

from models.laurent_poly import LaurentPoly
from models.partition import partitions_of
from models.symfunc import BasisTag, SymFunc

fake = Faker()


def seed(value: int) -> None:
    """Fixa a semente do Faker para que as funções geradas sejam reproduzíveis."""
    Faker.seed(value)


def random_coefficient(max_degree: int = 2, allow_negative_exponents: bool = False) -> LaurentPoly:
    """
    Polinômio de Laurent aleatório com coeficientes racionais pequenos.
    """
    low = -max_degree if allow_negative_exponents else 0
    terms = {}
    for _ in range(fake.random_int(min=1, max=3)):
        exponent = fake.random_int(min=low, max=max_degree)
        terms[exponent] = Fraction(fake.random_int(min=-5, max=5), fake.random_int(min=1, max=3))
    return LaurentPoly.from_dict(terms)


def random_symfunc(
    degree: int,
    basis: BasisTag = BasisTag.COMPLETE,
    max_terms: Optional[int] = None,
    constant: bool = False,
) -> SymFunc:
    """
    Gera uma função simétrica homogênea de grau ``degree`` na base pedida.

    :param degree: Grau homogêneo.
    :param basis: Base da expansão.
    :param max_terms: Número máximo de termos (padrão: todas as partições).
    :param constant: Se True, os coeficientes não dependem de q.
    :return: A função gerada; pode ser zero se todos os sorteios derem 0.
    """
    index = list(partitions_of(degree))
    count = fake.random_int(min=1, max=max_terms or len(index))
    chosen = fake.random_elements(elements=index, length=min(count, len(index)), unique=True)
    coefficients = {}
    for lam in chosen:
        if constant:
            coefficients[lam] = Fraction(fake.random_int(min=-6, max=6), fake.random_int(min=1, max=4))
        else:
            coefficients[lam] = random_coefficient()
    return SymFunc.from_dict(basis, coefficients)


def seed_symfuncs(n: int = 10, max_degree: int = 4, basis: BasisTag = BasisTag.COMPLETE) -> List[SymFunc]:
    """
    Lista de n funções homogêneas aleatórias, de graus entre 1 e max_degree.
    """
    return [random_symfunc(fake.random_int(min=1, max=max_degree), basis) for _ in range(n)]
