"""Command-line interface.

Exit codes: 0 success / verified, 1 verification failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

import numpy as np

from . import debruijn, greedy, overlap, setpartition, verify
from .debruijn import MatrixUCycleSpec, format_label
from .errors import GreedyStall, InvalidInput, NotEulerian
from .patterns import PermMatrix


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _word(text: str) -> list[int]:
    """``"124"`` -> [1, 2, 4]; ``"1,12,3"`` or ``"1 12 3"`` for multi-digit letters."""
    text = text.strip()
    if "," in text or " " in text:
        return [int(x) for x in text.replace(",", " ").split()]
    return [int(c) for c in text]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ucycles", description="Universal cycles and universal words.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def gen(name, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("--verify", action="store_true", help="check output and append '# verified'")
        s.add_argument("--json", action="store_true", help="emit one structured record")
        return s

    s = gen("debruijn", "de Bruijn sequence")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--method", choices=["greedy", "euler"], default="greedy")
    s.add_argument("--start", type=_word)

    s = gen("perm", "greedy u-cycle for permutations (d = 2)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--uword", action="store_true")

    s = gen("multiperm", "greedy u-cycle for d-dimensional permutations")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--uword", action="store_true")
    s.add_argument("--complement-rows", type=_int_list, default=[])
    s.add_argument("--family", action="store_true", help="print all row-complement variants")

    s = gen("matrix", "u-cycle for d-dimensional matrices")
    s.add_argument("--dims", type=_int_list, required=True)
    s.add_argument("--k", type=int, required=True)

    s = gen("setpartition", "greedy words for set partitions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=["uword", "ucycle"], default="uword")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--start", type=_word)
    grp.add_argument("--search", action="store_true")
    s.add_argument("--alphabet-max", type=int)
    s.add_argument("--allow-heavy", action="store_true")
    s.add_argument("--jobs", type=int, default=1)

    s = gen("graph", "graph of overlapping permutations P_d(n)")
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--dot", action="store_true")
    s.add_argument("--out", help="write DOT to this path instead of stdout")
    s.add_argument("--hamiltonian", action="store_true")
    s.add_argument("--linearize", action="store_true")
    s.add_argument("--budget", type=int, default=overlap.EXPANSION_BUDGET)

    s = gen("lab", "switching and key-group experiments")
    grp = s.add_mutually_exclusive_group(required=True)
    grp.add_argument("--s4-switch", action="store_true")
    grp.add_argument("--keygroup", nargs=2, metavar=("K2", "K3"), type=_word)

    s = sub.add_parser("verify", help="verify a u-cycle or u-word read from stdin")
    s.add_argument("--kind", choices=["debruijn", "perm", "multiperm", "partition", "matrix"], required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--k", type=int)
    s.add_argument("--dims", type=_int_list)
    s.add_argument("--cyclic", action="store_true")
    s.add_argument("--json", action="store_true")
    return p


def _rows_text(rows) -> list[str]:
    return [" ".join(map(str, r)) for r in rows]


class _Out:
    """Collects the text body and the structured record of one run."""

    def __init__(self, args, kind, params):
        self.args, self.kind, self.params = args, kind, params
        self.lines: list[str] = []
        self.rows: list = []
        self.extra: dict = {}

    def emit(self, report=None) -> int:
        verified = None
        if report is not None:
            verified = report.verdict
        if self.args.json:
            rec = {"kind": self.kind, "params": self.params, "rows": self.rows, "verified": verified}
            rec.update(self.extra)
            print(json.dumps(rec))
        else:
            for line in self.lines:
                print(line)
            if report is not None:
                print("# verified" if verified else f"# verification failed: {report.summary()}")
        return 1 if verified is False else 0


def _matrix_block(out: _Out, U: PermMatrix, label: str, d: int, n: int) -> None:
    out.lines.append(f"# {label} d={d} n={n} columns={U.m}")
    out.lines.extend(_rows_text(U.rows))
    out.rows.append([list(r) for r in U.rows])


def cmd_debruijn(a) -> int:
    if a.method == "greedy":
        w = debruijn.martin(a.n, a.k, a.start)
    else:
        if a.start is not None:
            raise InvalidInput("--start only applies to --method greedy")
        w = debruijn.debruijn_via_euler(a.n, a.k)
    out = _Out(a, "debruijn", {"n": a.n, "k": a.k, "method": a.method})
    out.lines = [f"# cyclic n={a.n} k={a.k} length={len(w)}", " ".join(map(str, w))]
    out.rows = [list(w)]
    return out.emit(verify.verify_debruijn(w, a.n, a.k) if a.verify else None)


def _multiperm(a, d: int) -> int:
    trace = greedy.greedy_uword(d, a.n)
    cyclic = not a.uword
    U = trace.final_ucycle if cyclic else trace.final_uword
    for r in getattr(a, "complement_rows", []):
        U = greedy.complement_row(U, r)
    members = greedy.complement_family(U) if getattr(a, "family", False) else [U]
    kind = "perm" if d == 2 and not hasattr(a, "d") else "multiperm"
    out = _Out(a, kind, {"d": d, "n": a.n, "uword": a.uword, "complement_rows": getattr(a, "complement_rows", []),
                         "family": getattr(a, "family", False)})
    for V in members:
        _matrix_block(out, V, "cyclic" if cyclic else "word", d, a.n)
    if kind == "perm":
        out.rows = [out.rows[0][0]]
    report = None
    if a.verify:
        reports = [verify.verify_multiperm_ucycle(V, d, a.n, cyclic) for V in members]
        report = next((r for r in reports if not r.verdict), reports[0])
    return out.emit(report)


def cmd_perm(a) -> int:
    return _multiperm(a, 2)


def cmd_multiperm(a) -> int:
    return _multiperm(a, a.d)


def cmd_matrix(a) -> int:
    spec = MatrixUCycleSpec(tuple(a.dims), a.k)
    slices = debruijn.matrix_ucycle(spec)
    out = _Out(a, "matrix", {"dims": list(spec.dims), "k": a.k})
    out.lines.append(f"# cyclic dims={','.join(map(str, spec.dims))} k={a.k} slices={len(slices)}")
    for s in slices:
        flat = s.reshape(-1).tolist()
        out.lines.append(" ".join(map(str, flat)))
        out.rows.append(flat)
    return out.emit(verify.verify_matrix_ucycle(slices, spec) if a.verify else None)


def cmd_setpartition(a) -> int:
    params = {"n": a.n, "mode": a.mode}
    if a.search:
        res = setpartition.search_starts(a.n, a.mode, a.alphabet_max, a.allow_heavy, a.jobs)
        params["alphabet_max"] = res.alphabet_max
        out = _Out(a, "setpartition-search", params)
        out.lines.append(f"n={a.n} mode={a.mode} alphabet_max={res.alphabet_max} successes={res.count}")
        out.lines.extend("".join(map(str, s)) if max(s, default=0) < 10 else ",".join(map(str, s)) for s in res.starts)
        out.rows = [list(s) for s in res.starts]
        out.extra = {"successes": res.count}
        if a.mode == "ucycle":
            out.extra["trimmed_only"] = [list(s) for s in res.trimmed_only]
        return out.emit()
    params["start"] = a.start
    out = _Out(a, "setpartition", params)
    if a.mode == "uword":
        run = setpartition.greedy_partition_uword(a.n, a.start)
        word, cyclic = run.word, False
        status = "ok" if run.complete else "stalled"
    else:
        res = setpartition.greedy_partition_ucycle(a.n, a.start)
        run, status, cyclic = res.run, res.status, True
        word = res.ucycle if res.ok else run.word
    out.lines.append(f"# {'cyclic' if cyclic and status == 'ok' else 'word'} n={a.n} status={status} "
                     f"covered={run.covered}/{run.total} length={len(word)}")
    out.lines.append(" ".join(map(str, word)))
    out.rows = [list(word)]
    out.extra = {"status": status, "covered": run.covered, "total": run.total}
    report = verify.verify_partition_ucycle(word, a.n, cyclic and status == "ok") if a.verify else None
    rc = out.emit(report)
    return rc if status == "ok" else max(rc, 1)


def cmd_graph(a) -> int:
    g = overlap.build_overlap_graph(a.d, a.n)
    out = _Out(a, "graph", {"d": a.d, "n": a.n})
    out.lines.append(f"# P_{a.d}({a.n}) vertices={len(g.vertices)} edges={len(g.edges)}")
    if a.dot:
        dot = g.to_dot(name=f"P{a.d}_{a.n}")
        if a.out:
            with open(a.out, "w") as fh:
                fh.write(dot)
            out.lines.append(f"# dot written to {a.out}")
        else:
            out.lines.append(dot.rstrip("\n"))
    report = None
    if a.hamiltonian or a.linearize:
        res = overlap.hamiltonian_cycle(g, a.budget)
        out.extra["hamiltonian"] = res.status
        out.lines.append(f"# hamiltonian status={res.status} expansions={res.expansions}")
        if res.cycle is None:
            out.emit()
            return 1
        labels = [g.vertices[i] for i in res.cycle]
        out.lines.extend(format_label(v) for v in labels)
        out.rows = [[list(r) for r in v] for v in labels]
        if a.linearize:
            order = overlap.implied_order(labels, a.d, a.n)
            out.lines.append(f"# implied order acyclic={order.is_acyclic}")
            out.extra["acyclic"] = order.is_acyclic
            if order.is_acyclic:
                values = overlap.linearize(order)
                out.lines.append(f"# linearized d={a.d} n={a.n} columns={order.elements}")
                out.lines.extend(_rows_text(values))
                out.extra["linearized"] = [list(r) for r in values]
                if a.verify:
                    report = verify.verify_multiperm_ucycle(values, a.d, a.n, cyclic=True)
    return out.emit(report)


def cmd_lab(a) -> int:
    if a.s4_switch:
        cycle = overlap.s4_switch()
        out = _Out(a, "s4-switch", {})
        out.lines.append(f"# hamiltonian cycle on P(4) length={len(cycle)}")
        out.lines.extend(format_label(p) for p in cycle)
        out.rows = [list(p) for p in cycle]
        return out.emit()
    k2, k3 = a.keygroup
    res = overlap.d3_keygroup_cycle_check(k2, k3)
    out = _Out(a, "keygroup", {"key2": k2, "key3": k3})
    out.lines.append(f"# keygroup {format_label(tuple(k2))}/{format_label(tuple(k3))} small_cycle={res.ok}")
    out.lines.extend(format_label(e) for e in res.elements)
    if res.failing:
        out.lines.append(f"# no edge {format_label(res.failing[0])} -> {format_label(res.failing[1])}")
    out.rows = [[list(r) for r in e] for e in res.elements]
    out.extra["small_cycle"] = res.ok
    return out.emit()


def _read_rows(stream) -> list[list[int]]:
    rows = []
    for line in stream:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(_word(line))
    return rows


def cmd_verify(a) -> int:
    rows = _read_rows(sys.stdin)
    if not rows:
        raise InvalidInput("no input rows on stdin")

    def need(*names):
        for name in names:
            if getattr(a, name) is None:
                raise InvalidInput(f"--kind {a.kind} needs --{name}")

    if a.kind == "debruijn":
        need("n", "k")
        report = verify.verify_debruijn(rows[0], a.n, a.k, a.cyclic)
    elif a.kind in ("perm", "multiperm"):
        need("n")
        d = 2 if a.kind == "perm" else a.d
        report = verify.verify_multiperm_ucycle(rows, d, a.n, a.cyclic)
    elif a.kind == "partition":
        need("n")
        report = verify.verify_partition_ucycle(rows[0], a.n, a.cyclic)
    else:
        need("dims", "k")
        spec = MatrixUCycleSpec(tuple(a.dims), a.k)
        slices = [np.array(r).reshape(spec.slice_shape) for r in rows]
        report = verify.verify_matrix_ucycle(slices, spec, a.cyclic)
    if a.json:
        print(json.dumps({"kind": "verify", "params": {"kind": a.kind, "cyclic": a.cyclic},
                          "rows": [], "verified": report.verdict, "summary": report.summary()}))
    else:
        print(report.summary())
    return 0 if report.verdict else 1


COMMANDS = {
    "debruijn": cmd_debruijn,
    "perm": cmd_perm,
    "multiperm": cmd_multiperm,
    "matrix": cmd_matrix,
    "setpartition": cmd_setpartition,
    "graph": cmd_graph,
    "lab": cmd_lab,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (InvalidInput, NotEulerian, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GreedyStall as exc:
        print(f"# stalled covered={exc.covered}/{exc.total} word={' '.join(map(str, exc.word))}")
        return 1


def main() -> None:
    sys.exit(run())
