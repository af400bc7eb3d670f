import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from algebra.base_algebra import SymmetricAlgebra
from gelfand_graev.counting import count_irreducible
from gelfand_graev.rho_engine import GelfandGraev, family_sum, signed_elementary_block
from models.errors import NotDivisible
from models.laurent_poly import LaurentPoly
from models.partition import partitions_of
from models.symfunc import BasisTag, SymFunc

_logger = logging.getLogger(__name__)


def verify_convolution(n: int) -> bool:
    """
    rho_0 h_n + rho_1 h_{n-1} + ... + rho_n h_0 = q^n h_n.
    """
    total = SymFunc.zero(BasisTag.COMPLETE)
    for k in range(n + 1):
        complete = SymFunc.monomial(BasisTag.COMPLETE, (n - k,) if n - k else ())
        total = total + SymmetricAlgebra.mul(GelfandGraev.rho(k), complete)
    return total == SymFunc.monomial(BasisTag.COMPLETE, (n,), LaurentPoly.q(n))


def verify_moebius_product(n: int) -> bool:
    """
    Coeficiente de t^n em prod_i prod_j (1 - y_j^i t^i)^{L_q(i)} contra o de
    prod_j (1 - y_j q t), ou seja (-q)^n e_n.

    O lado esquerdo é montado sem variáveis: cada fator
    prod_j (1 - y_j^i t^i) = sum_a (-1)^a e_a[p_i] t^{ai} entra nas famílias
    com a contagem simbólica de L_q(i).
    """
    left = family_sum(n, count_irreducible, signed_elementary_block)
    elementary = SymFunc.monomial(BasisTag.ELEMENTARY, (n,) if n else ())
    right = SymmetricAlgebra.convert(elementary, BasisTag.POWERSUM).scale((-LaurentPoly.q()) ** n)
    return left == right


def verify_routes(n: int) -> bool:
    """
    As quatro rotas de rho_n coincidem e a recorrência de coeficientes
    reproduz cada coeficiente.
    """
    expected = GelfandGraev.rho(n)
    routes = {
        "hl": GelfandGraev.rho_via_hl(n),
        "m": GelfandGraev.rho_via_m(n),
        "theta": GelfandGraev.rho_via_theta(n),
    }
    passed = True
    for name, value in routes.items():
        if value != expected:
            _logger.error("rota %s difere da recorrência em n=%d: %s", name, n, value)
            passed = False
    for lam in partitions_of(n):
        if n and GelfandGraev.rho_coeff(n, lam) != expected.coefficient(lam):
            _logger.error("rho_coeff(%d, %s) difere da expansão", n, lam)
            passed = False
    return passed


def verify_omega_route(n: int) -> bool:
    """
    omega(rho_n) = q^{n-1}(q-1) omega(P~_n).
    """
    return GelfandGraev.omega_rho(n) == GelfandGraev.omega_twisted(n)


def verify_sign_law(n: int) -> bool:
    """
    (-1)^{l(lambda)-1} [h_lambda] rho_n é (q-1) vezes um polinômio com
    coeficientes inteiros não negativos, para todo lambda de n.
    """
    q_minus_one = LaurentPoly.q() - 1
    for lam in partitions_of(n):
        coefficient = GelfandGraev.rho_coeff(n, lam)
        if (lam.length - 1) % 2:
            coefficient = -coefficient
        try:
            quotient = coefficient.exact_div(q_minus_one)
        except NotDivisible:
            _logger.error("[h%s]rho_%d não é divisível por q-1", lam, n)
            return False
        if any(c < 0 or c.denominator != 1 for _, c in quotient.terms):
            _logger.error("[h%s]rho_%d viola a lei de sinais: %s", lam, n, quotient)
            return False
    return True


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    n: int
    passed: bool


@dataclass
class VerificationReport:
    """
    Resultado de ``run_suite``: uma verificação por identidade e por n.
    """

    max_n: int
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.passed]

    def identities(self) -> List[str]:
        return list(dict.fromkeys(check.identity for check in self.checks))

    def to_record(self) -> Dict:
        return {
            "max_n": self.max_n,
            "passed": self.passed,
            "checks": [
                {"identity": check.identity, "n": check.n, "passed": check.passed}
                for check in self.checks
            ],
        }


# identidade -> (primeiro n verificado, função)
SUITE: Dict[str, Tuple[int, Callable[[int], bool]]] = {
    "routes": (0, verify_routes),
    "convolution": (1, verify_convolution),
    "moebius": (1, verify_moebius_product),
    "sign_law": (1, verify_sign_law),
}


def run_suite(max_n: int) -> VerificationReport:
    """
    Executa as quatro famílias de identidades até ``max_n``.

    :param max_n: Maior grau verificado; max_n = 0 só verifica rho_0 = 1.
    :raises ValueError: Se max_n é negativo.
    :return: O relatório com uma entrada por identidade e por n.
    """
    if max_n < 0:
        raise ValueError(f"max_n deve ser não negativo: {max_n}")
    report = VerificationReport(max_n)
    for identity, (start, check) in SUITE.items():
        for n in range(start, max_n + 1):
            passed = check(n)
            _logger.debug("%s n=%d: %s", identity, n, "ok" if passed else "falhou")
            report.checks.append(IdentityCheck(identity, n, passed))
    return report
