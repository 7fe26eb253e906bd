"""Command line front end.

Subcommands: generate (write family members to files), check (exact
contextuality verdict), degree (exhaustive degree search), tables
(cardinality and degree summaries over a range of n).

Exit codes: 0 success / noncontextual, 10 contextual, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .contextuality import (DegreeReport, InvalidConfigurationError,
                            QuantumConfiguration, build_system,
                            check_contextual, degree)
from .gf2 import SearchBudget
from .geometry import (Family, FamilyMember, enumerate_family, polar_space,
                       MAX_N)
from .io import load_configuration, save_configuration
from .pauli import PauliObservable, parse_pauli

EXIT_OK = 0
EXIT_CONTEXTUAL = 10
EXIT_INVALID = 2

# Values recorded in the literature for entries this tool reports as
# contextual without exhausting the coset search (full line sets blow past
# any exhaustive sweep).  They equal the negative-line counts of the
# canonical labeling, i.e. the trivial-assignment upper bound on the
# degree; searches here may find strictly better upper bounds.
LITERATURE_DEGREES = {(Family.LINES, 3): 90,
                      (Family.LINES, 4): 1908,
                      (Family.LINES, 5): 35400}


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("CONTEXTUALITY_THREADS", "1")))
    except ValueError:
        return 1


def _families_for(n: int) -> List[Family]:
    fams = [Family.LINES]
    if n >= 2:
        fams.append(Family.GENERATORS)
    fams += [Family.HYPERBOLIC, Family.ELLIPTIC, Family.PERPSET]
    return fams


def _member_name(n: int, member: FamilyMember) -> str:
    fam = str(member.family_id.family)
    base = member.family_id.base_point
    if base is None:
        return f"w{n}_{fam}"
    return f"w{n}_{fam}_{PauliObservable(base).letters()}"


def _check_slow(n: int, allow_slow: bool):
    if n >= 5 and not allow_slow:
        raise InvalidConfigurationError(
            "n = 5 enumerates tens of thousands of subspaces and can take "
            "minutes to hours; pass --allow-slow to proceed")


def cmd_generate(args) -> int:
    _check_slow(args.n, args.allow_slow)
    if args.n >= 5:
        print("note: n = 5 generation may take a while", file=sys.stderr)
    space = polar_space(args.n)
    base = None
    if args.base_point is not None:
        base = parse_pauli(args.base_point, args.n).coords
    members = enumerate_family(space, Family(args.family), base)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for member in members:
        config = QuantumConfiguration.from_member(space, member)
        name = f"{_member_name(args.n, member)}.{args.format}"
        save_configuration(config, outdir / name, args.format)
        print(f"wrote {outdir / name} ({config.num_points} points, "
              f"{config.num_contexts} contexts)")
    return EXIT_OK


def _verdict_exit(contextual: bool) -> int:
    return EXIT_CONTEXTUAL if contextual else EXIT_OK


def _model_text(config: QuantumConfiguration, model) -> str:
    pairs = []
    for j, v in enumerate(config.points):
        val = "-1" if model[j] else "+1"
        pairs.append(f"{PauliObservable(v).letters()}={val}")
    return " ".join(pairs)


def cmd_check(args) -> int:
    config = load_configuration(args.input)
    system = build_system(config)
    verdict = check_contextual(system)
    if verdict.contextual:
        print(f"{args.input}: contextual "
              f"({system.a.nrows} contexts, no classical model)")
    else:
        print(f"{args.input}: noncontextual ({system.a.nrows} contexts)")
        if system.a.nrows:
            print("model: " + _model_text(config, verdict.model))
    return _verdict_exit(verdict.contextual)


def _format_epsilon(report: DegreeReport) -> str:
    if report.epsilon is None:
        return "n/a"
    return f"{report.epsilon} = {float(report.epsilon):.4f}"


def cmd_degree(args) -> int:
    config = load_configuration(args.input)
    system = build_system(config)
    budget = SearchBudget(max_seconds=args.max_seconds, threads=args.threads)
    report = degree(system, budget)
    l = system.a.nrows
    print(f"{args.input}: {'contextual' if report.contextual else 'noncontextual'}")
    if report.no_contexts:
        print("no contexts; degree is trivially 0")
        return _verdict_exit(report.contextual)
    if report.proven:
        print(f"degree: {report.degree}")
    else:
        print(f"degree: <= {report.degree} (search budget exhausted; "
              f"verdict is still exact)")
    print(f"contexts: {l} total, {report.negative_context_count} negative")
    print(f"satisfiable: {l - report.degree} of {l} "
          f"(b = {report.bound_b}, epsilon = {_format_epsilon(report)})")
    if report.violated_contexts:
        ids = " ".join(str(i) for i in report.violated_contexts)
        print(f"violated contexts: {ids}")
    print("assignment: " + _model_text(config, report.assignment))
    return _verdict_exit(report.contextual)


def _parse_n_range(text: str) -> List[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(text)]
    if not values:
        raise ValueError(f"empty n range {text!r}")
    for n in values:
        if not 1 <= n <= MAX_N:
            raise ValueError(f"n must be within 1..{MAX_N}, got {n}")
    return values


class _Entry:
    """One (family, n) cell of the summary tables."""

    def __init__(self, n: int, family: Family):
        self.n = n
        self.family = family
        self.members = 0
        self.points_per_member: Optional[int] = None
        self.contexts_per_member: Optional[int] = None
        self.contextual_members = 0
        self.report: Optional[DegreeReport] = None

    @property
    def verdict_cell(self) -> str:
        if self.contexts_per_member == 0:
            return f"N/A ({self.members})"
        if self.contextual_members == 0:
            return f"0 ({self.members})"
        if self.contextual_members != self.members:
            return f"mixed ({self.contextual_members}/{self.members})"
        if self.report is not None and self.report.proven:
            return f"{self.report.degree} ({self.members})"
        return f"C ({self.members})"

    @property
    def annotation(self) -> Optional[str]:
        if self.contextual_members and (self.report is None or not self.report.proven):
            known = LITERATURE_DEGREES.get((self.family, self.n))
            parts = []
            if known is not None:
                parts.append(f"literature value {known}, not computed here")
            if self.report is not None and not self.report.proven:
                parts.append(f"upper bound {self.report.degree} found")
            return "; ".join(parts) if parts else None
        return None


def _build_entries(ns: Sequence[int], budget_seconds: float, threads: int
                   ) -> List[_Entry]:
    entries = []
    for n in ns:
        space = polar_space(n)
        for family in _families_for(n):
            entry = _Entry(n, family)
            members = enumerate_family(space, family)
            entry.members = len(members)
            first_system = None
            for member in members:
                config = QuantumConfiguration.from_member(space, member)
                system = build_system(config)
                if entry.points_per_member is None:
                    entry.points_per_member = config.num_points
                    entry.contexts_per_member = config.num_contexts
                elif (entry.points_per_member != config.num_points
                      or entry.contexts_per_member != config.num_contexts):
                    raise AssertionError(
                        f"family {family} n={n} is not homogeneous")
                if check_contextual(system).contextual:
                    entry.contextual_members += 1
                if first_system is None:
                    first_system = system
            if entry.contextual_members and budget_seconds > 0:
                budget = SearchBudget(max_seconds=budget_seconds, threads=threads)
                entry.report = degree(first_system, budget)
            entries.append(entry)
    return entries


def _render_text(ns: Sequence[int], entries: List[_Entry]) -> str:
    by_key = {(e.family, e.n): e for e in entries}
    lines_out = []
    lines_out.append("CARDINALITIES (members x points, contexts per member)")
    header = f"{'family':<12}" + "".join(f"{f'n={n}':>24}" for n in ns)
    lines_out.append(header)
    for family in _families_for(max(ns)):
        row = f"{str(family):<12}"
        for n in ns:
            e = by_key.get((family, n))
            if e is None:
                cell = "-"
            else:
                cell = f"{e.members} x {e.points_per_member}p/{e.contexts_per_member}c"
            row += f"{cell:>24}"
        lines_out.append(row)
    lines_out.append("")
    lines_out.append("CONTEXTUALITY DEGREES (degree or verdict, member count)")
    lines_out.append(header)
    notes = []
    for family in _families_for(max(ns)):
        row = f"{str(family):<12}"
        for n in ns:
            e = by_key.get((family, n))
            if e is None:
                cell = "-"
            else:
                cell = e.verdict_cell
                if e.annotation:
                    notes.append(f"  {family} n={n}: {e.annotation}")
                    cell += " *"
            row += f"{cell:>24}"
        lines_out.append(row)
    if notes:
        lines_out.append("notes:")
        lines_out.extend(notes)
    quad_rows = []
    for n in ns:
        for family in (Family.HYPERBOLIC, Family.ELLIPTIC):
            e = by_key.get((family, n))
            if (e is not None and e.report is not None and e.report.proven
                    and e.contexts_per_member):
                l = e.contexts_per_member
                d = e.report.degree
                ratio = Fraction(l - 2 * d, l)
                eps = Fraction(2 * d, l)
                quad_rows.append(
                    f"{str(family):<12}{n:>4}{e.points_per_member:>8}{l:>10}"
                    f"{float(ratio):>10.3f}{float(eps):>10.3f}")
    if quad_rows:
        lines_out.append("")
        lines_out.append("QUADRIC GAME CHARACTERISTICS (classical bound, advantage)")
        lines_out.append(f"{'family':<12}{'n':>4}{'points':>8}{'contexts':>10}"
                         f"{'b/N':>10}{'epsilon':>10}")
        lines_out.extend(quad_rows)
    return "\n".join(lines_out) + "\n"


def _render_csv(entries: List[_Entry]) -> str:
    import io as _io

    buf = _io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["family", "n", "members", "points_per_member",
                     "contexts_per_member", "contextual_members", "degree",
                     "degree_proven", "annotation"])
    for e in entries:
        if e.contexts_per_member == 0:
            dtext, proven = "", ""
        elif e.contextual_members == 0:
            dtext, proven = "0", "true"
        elif e.report is not None and e.report.proven:
            dtext, proven = str(e.report.degree), "true"
        elif e.report is not None:
            dtext, proven = f"<={e.report.degree}", "false"
        else:
            dtext, proven = "", "false"
        writer.writerow([str(e.family), e.n, e.members, e.points_per_member,
                         e.contexts_per_member, e.contextual_members, dtext,
                         proven, e.annotation or ""])
    return buf.getvalue()


def cmd_tables(args) -> int:
    ns = _parse_n_range(args.n)
    for n in ns:
        _check_slow(n, args.allow_slow)
    entries = _build_entries(ns, args.budget, args.threads)
    if args.format == "csv":
        sys.stdout.write(_render_csv(entries))
    else:
        sys.stdout.write(_render_text(ns, entries))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarctx",
        description="Generate symplectic polar space geometries and decide "
                    "their Kochen-Specker contextuality.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write family members to files")
    p.add_argument("-n", type=int, required=True, help="number of qubits")
    p.add_argument("--family", required=True,
                   choices=[str(f) for f in Family])
    p.add_argument("--base-point", default=None,
                   help="Pauli letters of one member's base point")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--allow-slow", action="store_true",
                   help="confirm long n=5 runs")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="exact contextuality verdict for a file")
    p.add_argument("input", help="configuration file (.json or .csv)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("degree", help="exhaustive contextuality degree")
    p.add_argument("input", help="configuration file (.json or .csv)")
    p.add_argument("--max-seconds", type=float, default=None,
                   help="wall-clock budget for the search (default unlimited)")
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help="worker threads (default CONTEXTUALITY_THREADS or 1)")
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("tables", help="cardinality and degree summaries")
    p.add_argument("-n", required=True,
                   help="qubit count or range, e.g. 3 or 2..4")
    p.add_argument("--budget", type=float, default=10.0,
                   help="seconds per degree search; 0 skips degrees")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.add_argument("--allow-slow", action="store_true",
                   help="confirm long n=5 runs")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
