"""Command-line front end.

Usage:
    hamaut info N M [--json]
    hamaut check {l1|l3|rigidity|dist-trans|theorem2|theorem4} N M [--json] [--max-vertices K]
    hamaut enumerate N M --out FILE [--limit C]
    hamaut decompose N M --sigma FILE [--json]
    hamaut random N M --seed S [--flatten] --out FILE
    hamaut export-edges N M --out FILE

``check theorem2 N M`` counts automorphisms of N disjoint copies of K_M.

Exit codes:
    0: success / check passed
    1: check failed, or decomposition not verified
    2: invalid input
    3: size cap exceeded
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .engine import (
    DECOMPOSE_MAX_VERTICES, SearchConfig, decompose, disjoint_union_aut_order,
    distance_transitivity_check, enumerate_automorphisms, rigidity_report,
    write_automorphisms,
)
from .hamming import (
    HammingGraph, lemma1_counterexamples, lemma3_counterexamples, write_edge_list,
)
from .perm import Permutation, ScaleError
from .wreath import random_wreath_element, to_vertex_permutation, wreath_order

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_SCALE = 0, 1, 2, 3

LEMMA_MAX_VERTICES = 4096
CHECKS = ("l1", "l3", "rigidity", "dist-trans", "theorem2", "theorem4")


@dataclass
class RunReport:
    command: str
    params: dict
    passed: bool
    counts: dict = field(default_factory=dict)
    elapsed_ms: int = 0
    counterexamples: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"command": self.command, "params": self.params, "pass": self.passed,
               "counts": self.counts, "elapsed_ms": self.elapsed_ms,
               "counterexamples": self.counterexamples}
        out.update(self.extra)
        return out

    def to_text(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'}"]
        lines += [f"  {k}: {v}" for k, v in self.params.items()]
        lines += [f"  {k}: {v}" for k, v in self.counts.items()]
        for k, v in self.extra.items():
            if k not in ("graph", "lemma"):
                lines.append(f"  {k}: {json.dumps(v)}")
        if self.counterexamples:
            lines.append(f"  counterexamples: {len(self.counterexamples)}")
            lines += [f"    {json.dumps(c)}" for c in self.counterexamples[:10]]
        lines.append(f"  elapsed_ms: {self.elapsed_ms}")
        return "\n".join(lines)


class InvalidInput(ValueError):
    pass


def _graph(n: int, m: int, cap: int | None = None) -> HammingGraph:
    if n < 1 or m < 2:
        raise InvalidInput(f"need N >= 1 and M >= 2, got N={n}, M={m}")
    return HammingGraph(n, m) if cap is None else HammingGraph(n, m, cap)


def cmd_info(n: int, m: int) -> RunReport:
    if n < 1 or m < 2:
        raise InvalidInput(f"need N >= 1 and M >= 2, got N={n}, M={m}")
    counts = {"vertices": m**n, "degree": n * (m - 1), "diameter": n,
              "aut_order": wreath_order(n, m)}
    return RunReport("info", {"n": n, "m": m}, True, counts)


def cmd_check(lemma: str, n: int, m: int, max_vertices: int | None = None) -> RunReport:
    params = {"lemma": lemma, "n": n, "m": m}
    if lemma == "theorem2":
        if n < 1 or m < 1:
            raise InvalidInput("need N >= 1 copies of K_M with M >= 1")
        cfg = SearchConfig(max_vertices=max_vertices or 12)
        found = disjoint_union_aut_order(n, m, cfg)
        formula = wreath_order(n, m)
        ok = found == formula
        bad = [] if ok else [{"enumerated": found, "formula": formula}]
        return RunReport("check", params, ok, {"enumerated": found, "formula": formula},
                         counterexamples=bad)

    if lemma in ("l1", "l3"):
        g = _graph(n, m, max_vertices or LEMMA_MAX_VERTICES)
        tag = "L1" if lemma == "l1" else "L3"
        extra = {"graph": {"n": n, "m": m}, "lemma": tag}
        if lemma == "l1":
            bad = lemma1_counterexamples(g)
            near = sum(1 for b in bad if b["distance"] == 1)
            counts = {"pairs": g.num_vertices * (g.num_vertices - 1),
                      "failures": len(bad), "failures_at_distance_1": near,
                      "failures_beyond_distance_1": len(bad) - near}
        else:
            bad = lemma3_counterexamples(g)
            counts = {"vertices": g.num_vertices, "components_per_vertex": n,
                      "component_size": m - 1, "failures": len(bad)}
        return RunReport("check", params, not bad, counts, counterexamples=bad, extra=extra)

    cfg = SearchConfig(max_vertices=max_vertices or SearchConfig.max_vertices)
    g = _graph(n, m, cfg.max_vertices)
    if lemma == "theorem4":
        found = sum(1 for _ in enumerate_automorphisms(g, cfg))
        formula = wreath_order(n, m)
        ok = found == formula
        bad = [] if ok else [{"enumerated": found, "formula": formula}]
        return RunReport("check", params, ok, {"enumerated": found, "formula": formula},
                         counterexamples=bad)
    if lemma == "rigidity":
        rep = rigidity_report(g, cfg)
        bad = [] if rep.holds else [{"kernel_size": rep.kernel_size,
                                     "by_enumeration": rep.by_enumeration,
                                     "by_propagation": rep.by_propagation}]
        return RunReport("check", params, rep.holds,
                         {"kernel_size": rep.kernel_size,
                          "by_enumeration": int(rep.by_enumeration),
                          "by_propagation": int(rep.by_propagation)},
                         counterexamples=bad)
    if lemma == "dist-trans":
        autos = list(enumerate_automorphisms(g, cfg))
        ok = distance_transitivity_check(g, cfg, autos)
        bad = [] if ok else [{"group_order": len(autos)}]
        return RunReport("check", params, ok, {"group_order": len(autos)}, counterexamples=bad)
    raise InvalidInput(f"unknown check {lemma!r}")


def cmd_enumerate(n: int, m: int, out: Path, limit: int | None = None,
                  max_vertices: int | None = None) -> RunReport:
    cfg = SearchConfig(max_vertices=max_vertices or SearchConfig.max_vertices, max_count=limit)
    g = _graph(n, m, cfg.max_vertices)
    with open(out, "w") as fh:
        written = write_automorphisms(enumerate_automorphisms(g, cfg), fh)
    return RunReport("enumerate", {"n": n, "m": m, "out": str(out), "limit": limit}, True,
                     {"written": written})


def _load_sigma(path: Path) -> Permutation:
    try:
        return Permutation.from_json(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise InvalidInput(f"cannot read permutation from {path}: {exc}") from exc


def cmd_decompose(n: int, m: int, sigma_file: Path) -> RunReport:
    g = _graph(n, m, DECOMPOSE_MAX_VERTICES)
    sigma = _load_sigma(sigma_file)
    if sigma.degree != g.num_vertices:
        raise InvalidInput(f"permutation has degree {sigma.degree}, H({n},{m}) has "
                           f"{g.num_vertices} vertices")
    dec = decompose(g, sigma)
    bad = [] if dec.verified else [{"sigma": str(sigma_file)}]
    return RunReport("decompose", {"n": n, "m": m, "sigma": str(sigma_file)}, dec.verified,
                     counterexamples=bad, extra=dec.to_dict())


def cmd_random(n: int, m: int, seed: int, out: Path, flatten: bool = False,
               sigma_out: Path | None = None) -> RunReport:
    if n < 1 or m < 2:
        raise InvalidInput(f"need N >= 1 and M >= 2, got N={n}, M={m}")
    w = random_wreath_element(n, m, seed)
    out = Path(out)
    out.write_text(w.to_json() + "\n")
    params = {"n": n, "m": m, "seed": seed, "out": str(out)}
    if flatten:
        g = _graph(n, m, DECOMPOSE_MAX_VERTICES)
        sigma_out = Path(sigma_out) if sigma_out else out.with_suffix(".sigma.json")
        sigma_out.write_text(to_vertex_permutation(g, w).to_json() + "\n")
        params["sigma_out"] = str(sigma_out)
    return RunReport("random", params, True, extra={"element": w.to_dict()})


def cmd_export_edges(n: int, m: int, out: Path) -> RunReport:
    g = _graph(n, m)
    with open(out, "w") as fh:
        count = write_edge_list(g, fh)
    return RunReport("export-edges", {"n": n, "m": m, "out": str(out)}, True, {"edges": count})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamaut",
                                     description="Hamming graph automorphism toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def nm(p):
        p.add_argument("n", type=int, metavar="N")
        p.add_argument("m", type=int, metavar="M")

    p = sub.add_parser("info", help="vertex count, degree, diameter, group order")
    nm(p)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="exhaustive structural checks")
    p.add_argument("lemma", choices=CHECKS)
    nm(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-vertices", type=int, default=None)

    p = sub.add_parser("enumerate", help="write every automorphism as JSON lines")
    nm(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("decompose", help="read a vertex permutation as a wreath element")
    nm(p)
    p.add_argument("--sigma", type=Path, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("random", help="write a seeded random wreath element")
    nm(p)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--flatten", action="store_true",
                   help="also write the vertex permutation (see --sigma-out)")
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--sigma-out", type=Path, default=None,
                   help="default: OUT with suffix .sigma.json")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("export-edges", help="write the edge list, one 'u v' per line")
    nm(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--json", action="store_true")
    return parser


def run(args: argparse.Namespace) -> RunReport:
    if args.command == "info":
        return cmd_info(args.n, args.m)
    if args.command == "check":
        return cmd_check(args.lemma, args.n, args.m, args.max_vertices)
    if args.command == "enumerate":
        return cmd_enumerate(args.n, args.m, args.out, args.limit, args.max_vertices)
    if args.command == "decompose":
        return cmd_decompose(args.n, args.m, args.sigma)
    if args.command == "random":
        return cmd_random(args.n, args.m, args.seed, args.out, args.flatten, args.sigma_out)
    if args.command == "export-edges":
        return cmd_export_edges(args.n, args.m, args.out)
    raise InvalidInput(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = run(args)
    except ScaleError as exc:
        print(f"scale error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except (InvalidInput, ValueError, OSError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    print(json.dumps(report.to_dict()) if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
