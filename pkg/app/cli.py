"""
CLI `lie-ideal`: tabla de multiplicar, ideal generado, simplicidad, centro,
subálgebra derivada y series, con salida de texto o JSON.

Códigos de salida: 0 ok, 2 error de sintaxis, 3 generador fuera del álgebra,
4 resultado no concluyente, 5 álgebra o característica inválida.
"""
# Cargar variables de entorno ANTES de leer la configuración
from dotenv import load_dotenv
load_dotenv()

import argparse
import contextlib
import logging
import sys
from typing import List, Optional, TextIO

from app.config import settings
from app.exceptions import GeneratorParseError, LieIdealError
from app.services.algebra_catalog import algebra_catalog
from app.services.generators import parse_coordinate_generators, parse_generators
from app.services.ideal_engine import Verdict
from app.services.reports import Report, report_service

logger = logging.getLogger("app.cli")

EXIT_OK = 0
EXIT_INCONCLUSIVE = 4

COMMANDS = ("table", "ideal", "simple", "center", "derived", "series")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lie-ideal",
        description="Ideales generados en álgebras de Lie de matrices en cualquier característica.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "--algebra",
        required=True,
        help="gl2, glN, slN, utN, sutN, diagN o file:RUTA",
    )
    parser.add_argument("--char", type=int, required=True, help="0 o un primo p")
    parser.add_argument("--gens", help='Generadores, p. ej. "x3, x3 - x1"')
    parser.add_argument("--coords", help='Generadores por coordenadas, p. ej. "1,0,0,1; 0,1,0,0"')
    parser.add_argument("--json", action="store_true", help="Salida JSON")
    parser.add_argument("--cap", type=int, default=None, help="Máximo de puntos proyectivos a probar")
    parser.add_argument("--threads", type=int, default=None, help="Procesos trabajadores para la prueba de simplicidad")
    parser.add_argument("-v", "--verbose", action="store_true", help="Logs de depuración en stderr")
    return parser


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run_command(args: argparse.Namespace) -> Report:
    L = algebra_catalog.resolve(args.algebra, args.char)

    if args.command == "table":
        return report_service.table_report(L)
    if args.command == "ideal":
        if args.coords is not None:
            gens = parse_coordinate_generators(L, args.coords)
        elif args.gens is not None:
            gens = parse_generators(L, args.gens)
        else:
            raise GeneratorParseError("El comando ideal requiere --gens o --coords")
        return report_service.ideal_report(L, gens)
    if args.command == "simple":
        if args.cap is not None and args.cap < 1:
            raise GeneratorParseError("--cap debe ser positivo")
        return report_service.simplicity_report(L, cap=args.cap, threads=args.threads)
    if args.command == "center":
        return report_service.center_report(L)
    if args.command == "derived":
        return report_service.derived_report(L)
    return report_service.series_report(L)


def main(argv: Optional[List[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # uso y --help van a los flujos recibidos
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    _configure_logging(args.verbose)

    try:
        report = run_command(args)
    except LieIdealError as e:
        logger.debug(f"Comando '{args.command}' falló: {e!r}")
        print(f"error: {e}", file=stderr)
        return e.exit_code

    if args.json:
        print(report.envelope().model_dump_json(indent=2), file=stdout)
    else:
        for line in report.lines:
            print(line, file=stdout)

    return EXIT_INCONCLUSIVE if report.verdict == Verdict.INCONCLUSIVE else EXIT_OK


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
