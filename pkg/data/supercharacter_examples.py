import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List

from models.errors import ExpressionParseError
from models.laurent_poly import parse_rational
from models.rho_expansion import RhoExpansion

EXAMPLES_PATH = Path(__file__).with_name("supercharacter_examples.json")


@dataclass(frozen=True)
class SupercharacterExample:
    """
    Expansão conhecida na base {rho_lambda}, em q = 2, de uma supercaracterística
    induzida, com a dimensão publicada.
    """

    name: str
    dimension: Fraction
    expansion: RhoExpansion


def load_examples(path: Path = EXAMPLES_PATH) -> List[SupercharacterExample]:
    """
    Lê os exemplos de regressão (somente leitura).

    :param path: Arquivo JSON no formato {source, examples: [...]}.
    :raises ExpressionParseError: Se o arquivo é malformado.
    :return: Os exemplos na ordem do arquivo.
    """
    try:
        records = json.loads(path.read_text(encoding="utf-8"))["examples"]
        return [
            SupercharacterExample(
                name=record["name"],
                dimension=parse_rational(record["dimension"]),
                expansion=RhoExpansion.from_record(record["expansion"]),
            )
            for record in records
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ExpressionParseError(f"exemplos inválidos em {path}: {exc}") from exc
