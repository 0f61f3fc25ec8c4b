"""Main entry point for the bigraded Hilbert function classifier."""

import argparse
import logging
import sys
from typing import List, Optional

from core.config import get_settings
from core.errors import HilbertError, NonBilexError
from core.logging_setup import configure_logging
from core.monomials import BiDegree, alpha_from_ideal
from core.partitions import enumerate_partitions, enumerate_sizes, maximal_sizes
from core.search_memory import SearchMemoryService
from engines.admissibility import admissible_to_witness, is_admissible
from engines.ferrers_engine import FerrersEngine, verify_witness
from engines.growth_filters import diagonal_osequence_ok, growth_bound_ok, quick_filters
from engines.oracle import BruteForceOracle
from engines.realization import realize_ideal
from tools.ideal_io import format_ideal, read_ideal
from tools.table_io import format_table, read_table
from tools.witness_io import certificate_to_dict, dumps, read_witness, witness_to_dict

logger = logging.getLogger(__name__)

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2


def _sort_pairs(pairs):
    return sorted(pairs, reverse=True)


class HilbertOrchestrator:
    """Wires the engines together for each CLI subcommand."""

    def __init__(self, json_output: bool = False):
        """Initialize the orchestrator with its engines.

        Args:
            json_output: Emit JSON documents instead of text
        """
        settings = get_settings()
        self.json_output = json_output
        self.memory = SearchMemoryService(memoize=settings.memoize)
        self.engine = FerrersEngine(self.memory)
        self.oracle = BruteForceOracle()

    def _emit(self, text: str = "") -> None:
        print(text)

    def check(self, table_path: str) -> int:
        """Run the filters, then the decision search."""
        table = read_table(table_path)

        logger.info("[Step 1] Running quick filters...")
        reports = [quick_filters(table)]
        logger.info("[Step 2] Checking the growth bound...")
        reports.append(growth_bound_ok(table))
        logger.info("[Step 3] Checking anti-diagonal O-sequence...")
        reports.append(diagonal_osequence_ok(table))
        logger.info("[Step 4] Searching for a Ferrers witness...")
        decision = self.engine.decide(table)

        if self.json_output:
            document = {
                "verdict": "YES" if decision.is_ferrers else "NO",
                "filters": [report.to_dict() for report in reports],
            }
            if decision.is_ferrers:
                document["witness"] = witness_to_dict(decision.witness)
            else:
                document["certificate"] = certificate_to_dict(decision.certificate)
            self._emit(dumps(document))
        else:
            for report in reports:
                line = f"{report.check}: {report.status}"
                if not report.passed:
                    line += f" at {report.cell}: {report.reason}"
                self._emit(line)
            if decision.is_ferrers:
                self._emit("verdict: YES (Ferrers function on the rectangle)")
                self._emit_witness(decision.witness)
            else:
                cert = decision.certificate
                self._emit(f"verdict: NO at cell {cert.cell}: {cert.reason}")
                if cert.cap is not None:
                    self._emit(f"cap: {cert.cap} (weight {cert.cap.weight})")
        return EXIT_YES if decision.is_ferrers else EXIT_NO

    def realize(self, table_path: str, witness_path: Optional[str] = None) -> int:
        table = read_table(table_path)
        if witness_path:
            witness = read_witness(witness_path)
            report = verify_witness(table, witness)
            if not report.passed:
                self._emit(f"witness rejected at {report.cell}: {report.reason}")
                return EXIT_NO
        else:
            decision = self.engine.decide(table)
            if not decision.is_ferrers:
                cert = decision.certificate
                self._emit(f"not a Ferrers function: {cert.reason}")
                return EXIT_NO
            witness = decision.witness

        ideal = realize_ideal(table, witness)
        if self.json_output:
            self._emit(dumps({
                "witness": witness_to_dict(witness),
                "generators": [str(m) for m in sorted(ideal.generators, key=lambda m: m.order_key(),
                                                      reverse=True)],
            }))
        else:
            self._emit_witness(witness)
            self._emit("generators:")
            self._emit(format_ideal(ideal).rstrip("\n"))
        return EXIT_YES

    def hilbert(self, ideal_path: str, bounds: BiDegree) -> int:
        ideal = read_ideal(ideal_path)
        table = ideal.hilbert_table(bounds)
        if self.json_output:
            self._emit(dumps({"bounds": [bounds.a, bounds.b], "values": table.rows()}))
        else:
            self._emit(format_table(table).rstrip("\n"))
        return EXIT_YES

    def alpha(self, ideal_path: str, at: BiDegree, diagram: bool = False) -> int:
        ideal = read_ideal(ideal_path)
        try:
            alpha = alpha_from_ideal(ideal, at)
        except NonBilexError as exc:
            self._emit(f"not bilex in degree {at}: {exc}")
            return EXIT_NO
        self._emit(str(alpha))
        if diagram:
            self._emit(alpha.diagram())
        return EXIT_YES

    def admissible(self, table_path: str) -> int:
        table = read_table(table_path)
        report = is_admissible(table)
        if not report.passed:
            self._emit(f"admissible: fail at {report.cell}: {report.reason}")
            return EXIT_NO
        witness = admissible_to_witness(table)
        if self.json_output:
            self._emit(dumps({"verdict": "pass", "witness": witness_to_dict(witness)}))
        else:
            self._emit("admissible: pass")
            self._emit_witness(witness)
        return EXIT_YES

    def partitions(self, h: int, sides, sizes: bool, maximal: bool) -> int:
        if maximal:
            for pair in _sort_pairs(maximal_sizes(h, sides)):
                self._emit(f"({pair[0]},{pair[1]})")
        elif sizes:
            for pair in _sort_pairs(enumerate_sizes(h, sides)):
                self._emit(f"({pair[0]},{pair[1]})")
        else:
            for alpha in enumerate_partitions(h, sides):
                self._emit(str(alpha))
        return EXIT_YES

    def census(self, bounds: BiDegree) -> int:
        tables = self.oracle.enumerate_realizable_tables(bounds)
        ordered = sorted(tables, key=lambda t: t.key())
        if self.json_output:
            self._emit(dumps({"count": len(ordered), "tables": [t.rows() for t in ordered]}))
        else:
            self._emit(f"realizable tables on {bounds}: {len(ordered)}")
        return EXIT_YES

    def oracle_check(self, table_path: str) -> int:
        table = read_table(table_path)
        realizable = self.oracle.brute_force_realizable(table)
        self._emit(f"brute force: {'realizable' if realizable else 'not realizable'}")
        return EXIT_YES if realizable else EXIT_NO

    def _emit_witness(self, witness) -> None:
        for i, row in enumerate(witness.alpha):
            cells = "  ".join("(" + ",".join(map(str, part.entries)) + ")" for part in row)
            self._emit(f"{i}: {cells}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihilbert",
        description="Classify Hilbert functions of bigraded algebras in k[x1,x2,y1,y2].",
    )
    parser.add_argument("--log-level", default=None, help="override HILBERT_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide whether a table is a Ferrers function")
    check.add_argument("table")
    check.add_argument("--json", action="store_true")

    realize = sub.add_parser("realize", help="witness and minimal generators of a realizing ideal")
    realize.add_argument("table")
    realize.add_argument("--witness", help="JSON witness, e.g. the output of check --json")
    realize.add_argument("--json", action="store_true")

    hilbert = sub.add_parser("hilbert", help="Hilbert table of a monomial ideal")
    hilbert.add_argument("ideal")
    hilbert.add_argument("--bounds", nargs=2, type=int, metavar=("A", "B"), required=True)
    hilbert.add_argument("--json", action="store_true")

    alpha = sub.add_parser("alpha", help="partition of the monomials outside an ideal")
    alpha.add_argument("ideal")
    alpha.add_argument("--at", nargs=2, type=int, metavar=("a", "b"), required=True)
    alpha.add_argument("--diagram", action="store_true")

    admissible = sub.add_parser("admissible", help="admissibility and its witness")
    admissible.add_argument("table")
    admissible.add_argument("--json", action="store_true")

    partitions = sub.add_parser("partitions", help="partitions of h with given sides")
    partitions.add_argument("h", type=int)
    partitions.add_argument("--sides", nargs=2, type=int, metavar=("l1", "l2"), required=True)
    partitions.add_argument("--sizes", action="store_true")
    partitions.add_argument("--maximal", action="store_true")

    census = sub.add_parser("census", help="all realizable tables on tiny bounds")
    census.add_argument("--bounds", nargs=2, type=int, metavar=("A", "B"), required=True)
    census.add_argument("--json", action="store_true")

    oracle = sub.add_parser("oracle-check", help="brute-force realizability of a table")
    oracle.add_argument("table")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Run one CLI invocation and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_YES

    try:
        configure_logging(get_settings(), args.log_level)
        orchestrator = HilbertOrchestrator(json_output=getattr(args, "json", False))
        if args.command == "check":
            return orchestrator.check(args.table)
        if args.command == "realize":
            return orchestrator.realize(args.table, args.witness)
        if args.command == "hilbert":
            return orchestrator.hilbert(args.ideal, BiDegree(*args.bounds))
        if args.command == "alpha":
            return orchestrator.alpha(args.ideal, BiDegree(*args.at), args.diagram)
        if args.command == "admissible":
            return orchestrator.admissible(args.table)
        if args.command == "partitions":
            return orchestrator.partitions(args.h, tuple(args.sides), args.sizes, args.maximal)
        if args.command == "census":
            return orchestrator.census(BiDegree(*args.bounds))
        if args.command == "oracle-check":
            return orchestrator.oracle_check(args.table)
    except (HilbertError, OSError) as exc:
        print(f"Input Error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_INPUT


def main():
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
