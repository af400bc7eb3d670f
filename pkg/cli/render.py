"""
Renderização das saídas da linha de comando em texto ou JSON.

O modo estruturado é determinístico byte a byte: termos em ordem
lexicográfica reversa, expoentes decrescentes e chaves na ordem de inserção.
"""
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, List, Optional

from gelfand_graev.counting import count_irreducible, count_irreducible_nonzero_root
from gelfand_graev.identities import VerificationReport
from gelfand_graev.rho_engine import OrbitFamily
from models.rho_expansion import RhoExpansion
from models.symfunc import SymFunc


class OutputFormat(str, Enum):
    TEXT = "text"
    STRUCTURED = "structured"


def dump(record: Any) -> str:
    return json.dumps(record, indent=2, ensure_ascii=False)


def render_symfunc(f: SymFunc, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.STRUCTURED:
        return dump(f.to_record())
    return str(f)


def render_expansion(expansion: RhoExpansion, fmt: OutputFormat) -> str:
    """
    Coeficientes C_lambda, a dimensão sum C_lambda e se todos são naturais.
    """
    if fmt is OutputFormat.STRUCTURED:
        record = expansion.to_record()
        record["dim"] = str(expansion.dimension())
        record["natural"] = expansion.is_natural()
        return dump(record)
    return "\n".join(
        [
            str(expansion),
            f"dim = {expansion.dimension()}",
            f"natural = {str(expansion.is_natural()).lower()}",
        ]
    )


def render_report(report: VerificationReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.STRUCTURED:
        return dump(report.to_record())
    lines: List[str] = [
        f"{check.identity} n={check.n}: {'ok' if check.passed else 'FAILED'}"
        for check in report.checks
    ]
    families = len(report.identities())
    if report.passed:
        lines.append(f"all identities passed ({families} families, max_n={report.max_n})")
    else:
        lines.append(f"{len(report.failures)} check(s) failed ({families} families, max_n={report.max_n})")
    return "\n".join(lines)


def render_counts(upper: int, q_value: Optional[Fraction], fmt: OutputFormat) -> str:
    """
    L_q(i) e l_q(i) para i = 1..upper, simbólicos ou avaliados em q_value.
    """
    rows = []
    for i in range(1, upper + 1):
        total, nonzero = count_irreducible(i), count_irreducible_nonzero_root(i)
        if q_value is not None:
            rows.append((i, str(total.eval(q_value)), str(nonzero.eval(q_value))))
        else:
            rows.append((i, str(total), str(nonzero)))
    if fmt is OutputFormat.STRUCTURED:
        return dump([{"i": i, "L": total, "l": nonzero} for i, total, nonzero in rows])
    return "\n".join(f"{i}: L = {total}, l = {nonzero}" for i, total, nonzero in rows)


def render_families(families: Iterable[OrbitFamily], fmt: OutputFormat) -> str:
    families = list(families)
    if fmt is OutputFormat.STRUCTURED:
        return dump(
            [
                {
                    "entries": [{"i": i, "j": j, "m": m} for i, j, m in family.entries],
                    "count": family.count.to_record(),
                }
                for family in families
            ]
        )
    return "\n".join(str(family) for family in families)
