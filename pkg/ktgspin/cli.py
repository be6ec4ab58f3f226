"""
命令行入口
退出码: 0 成功，1 输入错误（KtgInputError），2 内部不变量破坏（InvariantBreachError）
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import BaseModel, TypeAdapter

from .algebra.gfamily import GFamily, associated_quandle, verify_gfamily
from .algebra.quandle import verify_quandle
from .coloring.fox import fox_colorings
from .coloring.solver import enumerate_colorings
from .config import OutputFormat, SpinOptions, Verdict, settings
from .errors import InvariantBreachError, KtgInputError
from .io.ktg_format import load, parse_document, serialize
from .io.table_format import load_table
from .models.diagram import Diagram
from .moves.patterns import Move, applicable_moves
from .moves.rewrite import apply_move
from .moves.search import simplify
from .plugins.families import available_families, resolve_family
from .spin.classifier import SpinCertificate, classify_spin
from .spin.constituents import almost_trivial_check, spin_constituents
from .spin.survey import all_spins

logger = logging.getLogger(__name__)


class CliUsageError(KtgInputError):
    """命令行参数错误"""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise CliUsageError(message)


# ---------------- 报告 ----------------
class SpinRecord(BaseModel):
    """单条图边判定的 JSON 报告"""

    edge: str
    verdict: Verdict
    theorem: str
    twist: int
    n: Optional[int] = None
    fox_count: Optional[int] = None
    lift: Optional[dict[str, tuple[int, int]]] = None
    moves: Optional[list[str]] = None
    descended: Optional[list[str]] = None
    fox_counts: dict[int, int] = {}
    best_crossings: Optional[int] = None
    reason: str = ""
    mirror: Optional["SpinRecord"] = None

    @classmethod
    def from_certificate(cls, c: SpinCertificate) -> "SpinRecord":
        record = cls(
            edge=c.edge,
            verdict=c.verdict,
            theorem=c.theorem,
            twist=c.twist,
            fox_counts=dict(c.diagnostics.fox_counts),
            best_crossings=c.diagnostics.best_crossings,
            reason=c.diagnostics.reason,
        )
        if c.knotted is not None:
            record.n = c.knotted.n
            record.fox_count = c.knotted.fox_result.count
            record.lift = {arc: c.knotted.lift.pair(arc) for arc, _ in c.knotted.lift.assignment}
        if c.unknotted is not None:
            record.moves = c.unknotted.trace.moves
            record.descended = list(c.unknotted.descended)
        if c.mirror is not None:
            record.mirror = cls.from_certificate(c.mirror)
        return record


def _witness_summary(c: SpinCertificate) -> str:
    if c.knotted is not None:
        return f"n={c.knotted.n} fox_count={c.knotted.fox_result.count}"
    if c.unknotted is not None:
        return f"moves={len(c.unknotted.trace.steps)} descended={len(c.unknotted.descended)}"
    return f"best_crossings={c.diagnostics.best_crossings} {c.diagnostics.reason}".rstrip()


def render_spin_table(certificates: Sequence[SpinCertificate]) -> str:
    lines = ["edge\tverdict\tmirror\ttheorem\twitness"]
    for c in certificates:
        mirrored = c.mirror.verdict.value if c.mirror is not None else "-"
        lines.append(f"{c.edge}\t{c.verdict.value}\t{mirrored}\t{c.theorem}\t{_witness_summary(c)}")
    return "\n".join(lines)


def render_spin_detail(c: SpinCertificate) -> str:
    lines = [f"edge {c.edge}", f"verdict {c.verdict.value}", f"theorem {c.theorem}"]
    if c.knotted is not None:
        w = c.knotted
        lines.append(f"fox n={w.n} count={w.fox_result.count}")
        lines += [f"  {arc} -> {value}" for arc, value in w.fox.assignment]
        lines.append("lift")
        lines += [f"  {arc} -> {w.lift.pair(arc)}" for arc, _ in w.lift.assignment]
    if c.unknotted is not None:
        w = c.unknotted
        lines.append(f"descended {' '.join(w.descended) or '-'}")
        lines.append(f"trace {w.trace.initial.crossing_count} -> {w.trace.final_crossings}")
        lines += [f"  {step}" for step in w.trace.steps]
    if c.verdict is Verdict.UNKNOWN:
        counts = " ".join(f"{n}:{count}" for n, count in c.diagnostics.fox_counts)
        lines.append(f"fox_counts {counts or '-'}")
        lines.append(f"best_crossings {c.diagnostics.best_crossings}")
        lines.append(f"reason {c.diagnostics.reason}")
    if c.mirror is not None:
        lines.append(f"mirror {c.mirror.verdict.value} ({c.mirror.theorem})")
    return "\n".join(lines)


# ---------------- 子命令 ----------------
def _cmd_validate(args: argparse.Namespace) -> str:
    doc = parse_document(Path(args.file).read_text(encoding="utf-8"))
    d = doc.diagram
    return (
        f"ok {doc.name or args.file}: {len(d.vertices)} vertices, {d.crossing_count} crossings, "
        f"{len(d.endpoints)} endpoints, {len(d.arcs)} arcs, {len(d.edges)} edges"
    )


def _cmd_colorings(args: argparse.Namespace) -> str:
    d = load(args.file)
    family = resolve_family(args.family)
    q = associated_quandle(family)
    result = enumerate_colorings(d, q, list_limit=args.list if args.list else 0)
    lines = [f"family {family.name}", f"count {result.count}"]
    for coloring in result.colorings or ():
        lines.append(" ".join(f"{arc}={coloring.pair(arc)}" for arc, _ in coloring.assignment))
    return "\n".join(lines)


def _cmd_fox(args: argparse.Namespace) -> str:
    result = fox_colorings(load(args.file), args.n)
    factors = " ".join(str(f) for f in result.invariant_factors) or "-"
    return "\n".join(
        [
            f"n {result.n}",
            f"count {result.count}",
            f"free_parameters {result.free_parameters}",
            f"invariant_factors {factors}",
            f"nontrivial {'yes' if result.nontrivial else 'no'}",
        ]
    )


def _cmd_constituents(args: argparse.Namespace) -> str:
    d = load(args.file)
    edges = [args.edge] if args.edge else [e.id for e in d.edges]
    lines: list[str] = []
    for edge in edges:
        report = spin_constituents(d, edge, _spin_options(args))
        lines.append(f"cut {report.cut_edge}")
        for entry in report.entries:
            evidence = f" fox n={entry.fox_evidence.n} count={entry.fox_evidence.count}" if entry.fox_evidence else ""
            lines.append(f"  {'+'.join(entry.cycle)}\t{entry.surface}\t{entry.triviality}{evidence}")
    return "\n".join(lines)


def _spin_options(args: argparse.Namespace) -> SpinOptions:
    n_range = None
    if getattr(args, "nmax", None) is not None or getattr(args, "nmin", None) is not None:
        n_range = (args.nmin or settings.spin.n_min, args.nmax or settings.spin.n_max)
    return SpinOptions.from_settings(
        n_range=n_range,
        budget=getattr(args, "budget", None),
        cut_position=getattr(args, "cut", None),
        cross_check=True if getattr(args, "cross_check", False) else None,
    )


def _cmd_spin(args: argparse.Namespace) -> str:
    d = load(args.file)
    options = _spin_options(args)
    if args.all:
        certificates = all_spins(d, options, workers=args.workers)
    elif args.edge:
        certificates = [classify_spin(d, args.edge, options)]
    else:
        raise CliUsageError("spin 需要 --edge E 或 --all")
    if args.format is OutputFormat.JSON:
        records = [SpinRecord.from_certificate(c) for c in certificates]
        return TypeAdapter(list[SpinRecord]).dump_json(records, indent=2).decode()
    if len(certificates) == 1:
        return render_spin_detail(certificates[0])
    return render_spin_table(certificates)


def _cmd_simplify(args: argparse.Namespace) -> str:
    d = load(args.file)
    trace = simplify(d, budget=args.budget, use_kinks=args.kinks or None)
    lines = [f"crossings {d.crossing_count} -> {trace.final_crossings}"]
    lines += [f"  {step}" for step in trace.steps]
    if trace.exhausted:
        lines.append(f"budget exhausted after {trace.expansions} expansions")
    lines.append(serialize(trace.final).rstrip("\n"))
    return "\n".join(lines)


def _cmd_axioms(args: argparse.Namespace) -> str:
    algebra = load_table(args.file)
    if isinstance(algebra, GFamily):
        violations = verify_gfamily(algebra)
        if not violations:
            violations = verify_quandle(associated_quandle(algebra, verify=False).quandle)
        kind = f"gfamily {algebra.size} over {algebra.group.name} (order {algebra.group.order})"
    else:
        violations = verify_quandle(algebra)
        kind = f"quandle {algebra.size}"
    if violations:
        raise KtgInputError(f"{kind}: {len(violations)} 个公理违例，首个 {violations[0]}")
    return f"ok {kind}"


def _cmd_moves(args: argparse.Namespace) -> str:
    d = load(args.file)
    if args.apply:
        return serialize(apply_move(d, Move.parse(args.apply))).rstrip("\n")
    return "\n".join(str(m) for m in applicable_moves(d, use_kinks=args.kinks))


def _cmd_almost_trivial(args: argparse.Namespace) -> str:
    report = almost_trivial_check(load(args.file), budget=args.budget)
    lines = [f"planar {report.planar}"]
    for check in report.subgraphs:
        status = "unknotted" if check.unknotted else "unknown"
        lines.append(f"  {'+'.join(check.edges)}\t{check.crossings} -> {check.final_crossings}\t{status}")
    lines.append(f"corollary {'applies' if report.corollary_applies else 'does not apply'}")
    if report.corollary_applies:
        lines.append("assumption: nontriviality of the graph itself is not checked")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ktg-spin", description="KTG 图表的 quandle 染色与 ±1 twist spin 判定")
    parser.add_argument("-v", "--verbose", action="store_true", help="输出调试日志")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="解析并校验图表")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("colorings", help="关联 quandle 染色计数")
    p.add_argument("file")
    p.add_argument("--family", default="dihedral:3", help=f"G-family，可选前缀: {', '.join(available_families())}")
    p.add_argument("--list", type=int, default=0, metavar="K", help="列出前 K 个染色")
    p.set_defaults(handler=_cmd_colorings)

    p = sub.add_parser("fox", help="Fox n-染色计数（纽结图表）")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_fox)

    p = sub.add_parser("constituents", help="组成分支的曲面类型")
    p.add_argument("file")
    p.add_argument("--edge")
    p.add_argument("--nmax", type=int)
    p.set_defaults(handler=_cmd_constituents, nmin=None)

    p = sub.add_parser("spin", help="±1 twist spin 判定")
    p.add_argument("file")
    p.add_argument("--edge")
    p.add_argument("--all", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("--nmin", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--cut", type=int, help="切割位置（图边链中的弧下标）")
    p.add_argument("--cross-check", action="store_true", help="KNOTTED 成立时仍运行化简做互斥检查")
    p.add_argument("--workers", type=int)
    p.add_argument("--json", dest="format", action="store_const", const=OutputFormat.JSON, default=OutputFormat.TEXT)
    p.set_defaults(handler=_cmd_spin)

    p = sub.add_parser("simplify", help="有界化简")
    p.add_argument("file")
    p.add_argument("--budget", type=int)
    p.add_argument("--kinks", action="store_true", help="允许 R1+ 插入")
    p.set_defaults(handler=_cmd_simplify)

    p = sub.add_parser("axioms", help="检查 quandle / G-family 运算表")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_axioms)

    p = sub.add_parser("moves", help="列出或执行局部改写")
    p.add_argument("file")
    p.add_argument("--apply", metavar="KIND@SITE")
    p.add_argument("--kinks", action="store_true", help="列出 R1+")
    p.set_defaults(handler=_cmd_moves)

    p = sub.add_parser("almost-trivial", help="平面性与真子图化简")
    p.add_argument("file")
    p.add_argument("--budget", type=int)
    p.set_defaults(handler=_cmd_almost_trivial)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str]:
    """
    执行命令行，返回 (退出码, 报告文本)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
        return 0, args.handler(args)
    except InvariantBreachError as e:
        logger.error(f"内部不变量被破坏: {e.msg}")
        return 2, f"internal error: {e.msg}"
    except KtgInputError as e:
        return 1, f"error: {e.msg}"
    except OSError as e:
        return 1, f"error: 无法读取 {e.filename}: {e.strerror}"


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = run(argv)
    stream = sys.stdout if code == 0 else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
