import argparse
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence

from algebra.base_algebra import SymmetricAlgebra
from algebra.hall_littlewood import HallLittlewood
from cli.render import (
    OutputFormat,
    render_counts,
    render_expansion,
    render_families,
    render_report,
    render_symfunc,
)
from gelfand_graev.identities import run_suite
from gelfand_graev.rho_engine import GelfandGraev
from models.errors import DegenerateQ, EvalAtZero, ExpressionParseError, NotHomogeneous
from models.hl_param import HLParam
from models.laurent_poly import LaurentPoly, parse_rational
from models.partition import Partition
from models.symfunc import BasisTag, SymFunc

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2
EXIT_PARSE_ERROR = 3
EXIT_DEGENERATE_Q = 4
EXIT_NOT_HOMOGENEOUS = 5
EXIT_EVAL_AT_ZERO = 6


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid rational: {text!r}") from exc


def _natural(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer: {text!r}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer: {text!r}")
    return value


def read_expression(record: Mapping[str, Any]) -> SymFunc:
    """
    Lê um arquivo de expressão: a forma {basis, terms} de uma função
    simétrica ou uma combinação {rho_terms: [{partition, coefficient}]}.

    :raises ExpressionParseError: Se o registro não tem nenhuma das duas formas.
    """
    if not isinstance(record, Mapping):
        raise ExpressionParseError("o arquivo deve conter um objeto JSON")
    if "rho_terms" not in record:
        return SymFunc.from_record(record)
    try:
        total = SymFunc.zero(BasisTag.COMPLETE)
        for term in record["rho_terms"]:
            lam = Partition.from_record(term["partition"])
            total = total + GelfandGraev.rho_product_of(lam).scale(LaurentPoly.from_record(term["coefficient"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ExpressionParseError(f"combinação rho inválida: {exc}") from exc
    return total


class RhoCli:
    """
    Subcomandos da linha de comando. Cada ``cmd_*`` devolve o texto a
    imprimir e o código de saída.

    Exemplo básico de uso:
        python main.py rho 2 --basis h
        python main.py verify --max-n 6
        python main.py to-rho exemplo.json --q 2
    """

    class Meta:
        prog = "rho"
        default_format = OutputFormat.TEXT
        default_max_n = 6
        log_env = "RHO_LOG_LEVEL"
        log_format = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

    @staticmethod
    def cmd_rho(n: int, basis: BasisTag, q_at: Optional[Fraction], fmt: OutputFormat) -> tuple:
        result = SymmetricAlgebra.convert(GelfandGraev.rho(n), basis)
        if q_at is not None:
            result = result.evaluate(q_at)
        return render_symfunc(result, fmt), EXIT_OK

    @staticmethod
    def cmd_verify(max_n: int, fmt: OutputFormat) -> tuple:
        report = run_suite(max_n)
        for failure in report.failures:
            _logger.error("identidade %s falhou em n=%d", failure.identity, failure.n)
        return render_report(report, fmt), EXIT_OK if report.passed else EXIT_IDENTITY_FAILURE

    @staticmethod
    def cmd_product(components: Sequence[int], q_at: Optional[Fraction], fmt: OutputFormat) -> tuple:
        if not components:
            raise ValueError("at least one component is required")
        result = GelfandGraev.product_rho(components)
        if q_at is not None:
            result = result.evaluate(q_at)
        return render_symfunc(result, fmt), EXIT_OK

    @staticmethod
    def cmd_to_rho(path: Path, q_at: Fraction, fmt: OutputFormat) -> tuple:
        try:
            record = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise ExpressionParseError(f"não foi possível ler {path}: {exc}") from exc
        expansion = GelfandGraev.to_rho_basis(read_expression(record), q_at)
        return render_expansion(expansion, fmt), EXIT_OK

    @staticmethod
    def cmd_hl(n: int, t: Optional[Fraction], twisted: bool, q_at: Optional[Fraction], fmt: OutputFormat) -> tuple:
        if twisted:
            result = HallLittlewood.twisted_one_row(n)
        else:
            param = HLParam.q_inverse() if t is None else HLParam.of(t)
            result = HallLittlewood.one_row(n, param)
        if q_at is not None:
            result = result.evaluate(q_at)
        return render_symfunc(result, fmt), EXIT_OK

    @staticmethod
    def cmd_count_irr(upper: int, q_at: Optional[Fraction], fmt: OutputFormat) -> tuple:
        return render_counts(upper, q_at, fmt), EXIT_OK

    @staticmethod
    def cmd_families(n: int, fmt: OutputFormat) -> tuple:
        return render_families(GelfandGraev.orbit_families(n), fmt), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=RhoCli.Meta.default_format.value,
        help="text (default) or structured JSON output",
    )
    common.add_argument("--out", type=Path, help="write the output to this file instead of stdout")
    common.add_argument("--log-level", help=f"logging level (default: ${RhoCli.Meta.log_env} or WARNING)")

    parser = argparse.ArgumentParser(
        prog=RhoCli.Meta.prog,
        description="exact computation of the plethysm image rho_n of Gelfand-Graev characteristics",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    rho = commands.add_parser("rho", parents=[common], help="print rho_n")
    rho.add_argument("n", type=_natural)
    rho.add_argument("--basis", choices=[tag.value for tag in BasisTag], default=BasisTag.COMPLETE.value)
    rho.add_argument("--q", type=_rational, help="specialize q to this rational")

    verify = commands.add_parser("verify", parents=[common], help="run the identity suite")
    verify.add_argument("--max-n", type=_natural, default=RhoCli.Meta.default_max_n)

    product = commands.add_parser("product", parents=[common], help="print rho_{n_1} ... rho_{n_k}")
    product.add_argument("components", type=_positive, nargs="+")
    product.add_argument("--q", type=_rational)

    to_rho = commands.add_parser("to-rho", parents=[common], help="expand an expression file in the rho basis")
    to_rho.add_argument("input", type=Path)
    to_rho.add_argument("--q", type=_rational, required=True)

    hl = commands.add_parser("hl", parents=[common], help="print the one-row Hall-Littlewood function P_n")
    hl.add_argument("n", type=_positive)
    group = hl.add_mutually_exclusive_group()
    group.add_argument("--t", type=_rational, help="rational value of t (default: q^-1)")
    group.add_argument("--twisted", action="store_true", help="print the twisted form instead")
    hl.add_argument("--q", type=_rational)

    count = commands.add_parser("count-irr", parents=[common], help="print L_q(i) and l_q(i) for i = 1..N")
    count.add_argument("upper", type=_positive, metavar="N")
    count.add_argument("--q", type=_rational)

    families = commands.add_parser("families", parents=[common], help="list the orbit families summed for rho_n")
    families.add_argument("n", type=_natural)
    return parser


def configure_logging(level: Optional[str]) -> None:
    level = (level or os.environ.get(RhoCli.Meta.log_env) or "WARNING").upper()
    logging.basicConfig(level=level, format=RhoCli.Meta.log_format, stream=sys.stderr)


def dispatch(args: argparse.Namespace) -> tuple:
    fmt = OutputFormat(args.format)
    if args.command == "rho":
        return RhoCli.cmd_rho(args.n, BasisTag(args.basis), args.q, fmt)
    if args.command == "verify":
        return RhoCli.cmd_verify(args.max_n, fmt)
    if args.command == "product":
        return RhoCli.cmd_product(args.components, args.q, fmt)
    if args.command == "to-rho":
        return RhoCli.cmd_to_rho(args.input, args.q, fmt)
    if args.command == "hl":
        return RhoCli.cmd_hl(args.n, args.t, args.twisted, args.q, fmt)
    if args.command == "count-irr":
        return RhoCli.cmd_count_irr(args.upper, args.q, fmt)
    return RhoCli.cmd_families(args.n, fmt)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Ponto de entrada: interpreta ``argv``, executa o subcomando e devolve o
    código de saída.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        configure_logging(args.log_level)
    except ValueError:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: unknown log level {args.log_level!r}", file=sys.stderr)
        return EXIT_USAGE

    try:
        output, code = dispatch(args)
    except ExpressionParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except DegenerateQ as exc:
        print(f"degenerate q: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE_Q
    except NotHomogeneous as exc:
        print(f"not homogeneous: {exc}", file=sys.stderr)
        return EXIT_NOT_HOMOGENEOUS
    except EvalAtZero as exc:
        print(f"cannot evaluate at q=0: {exc}", file=sys.stderr)
        return EXIT_EVAL_AT_ZERO
    except ValueError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.out is not None:
        try:
            args.out.write_text(output + "\n", encoding="utf-8")
        except OSError as exc:
            print(f"{parser.prog}: error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        print(output)
    return code
