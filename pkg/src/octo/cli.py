"""``octo`` command line: tables, algebra checks, exhaustive searches, dual graphs, SVG.

Exit codes: 0 every check passed, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__, constants
from .algebra import (
    index_rule_constants,
    structure_constants,
    verify_alternative,
    verify_flexible,
    verify_inverses,
    verify_norm_multiplicative,
    verify_quaternion_subalgebras,
)
from .eisenstein import hexagon_map_geometry, paley_tournament
from .fano import standard_fano
from .graphs import degree_sequence, dual_graph, girth, graphs_isomorphic, incidence_graph, is_bipartite, is_isomorphism
from .search import TOTAL, oracle_compare, search_orientations, slow_scan
from .surface import (
    dual_bipartition,
    enumerate_triangulations,
    euler_characteristic,
    fano_from_orientation,
    is_orientable,
    Tournament,
    tournament_triangulation,
    triangle_orbit,
)
from .svg import render_svg

TABLE_SOURCES = ("fano", "lattice", "index")


@dataclass
class RunReport:
    command: str
    parameters: dict
    checks: list = field(default_factory=list)
    counters: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)
    elapsed: float = 0.0
    version: str = __version__

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append({"name": name, "passed": bool(passed), "detail": detail})
        return passed

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_dict(self, elapsed: bool = True) -> dict:
        d = {
            "command": self.command,
            "parameters": self.parameters,
            "passed": self.passed,
            "checks": self.checks,
            "counters": self.counters,
            "version": self.version,
        }
        if self.data:
            d["data"] = self.data
        if elapsed:
            d["elapsed_seconds"] = round(self.elapsed, 3)
        return d

    def to_json(self, elapsed: bool = True) -> str:
        return json.dumps(self.to_dict(elapsed), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"{self.command}: {'PASS' if self.passed else 'FAIL'} ({self.elapsed:.2f}s)"]
        for c in self.checks:
            mark = "PASS" if c["passed"] else "FAIL"
            lines.append(f"  {mark} {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
        for k, v in self.counters.items():
            lines.append(f"  {k} = {v}")
        return "\n".join(lines) + "\n"


def table_for(source: str):
    if source == "fano":
        return structure_constants(standard_fano())
    if source == "lattice":
        return structure_constants(fano_from_orientation(paley_tournament()))
    if source == "index":
        return index_rule_constants()
    raise ValueError(f"unknown source {source!r}")


def cmd_table(source: str, fmt: str) -> str:
    return table_for(source).render(fmt)


def cmd_verify_algebra(seed: int = 7, trials: int = 1000, mutate_line: int | None = None) -> RunReport:
    rep = RunReport("verify-algebra", {"seed": seed, "trials": trials, "mutate_line": mutate_line})
    plane = standard_fano()
    if mutate_line is not None:
        plane = plane.reversed_line(mutate_line)
    sc = structure_constants(plane)
    for result in (
        verify_alternative(sc),
        verify_norm_multiplicative(sc, trials, seed),
        verify_quaternion_subalgebras(sc, plane.underlying()),
        verify_inverses(sc, 100, seed),
        verify_flexible(sc, 100, seed),
    ):
        rep.check(result.name, result.passed, result.counterexample or f"{result.checked} cases")
        rep.counters[f"{result.name}_checked"] = result.checked
    return rep


def cmd_search(threads: int = 1, oracle: str | None = None, seed: int = 7) -> RunReport:
    rep = RunReport("search-orientations", {"threads": threads, "oracle": oracle, "seed": seed})
    res = search_orientations(threads=threads)
    rep.counters.update(total=res.total, survivors=res.count, classes=len(res.classes))
    rep.check("total_scanned", res.total == TOTAL == 2**21, str(res.total))
    rep.check("survivors_nonempty", res.count > 0, str(res.count))
    rep.check("paley_survives", res.paley_mask in res.survivors, f"paley mask {res.paley_mask}")
    rep.check("single_isomorphism_class", len(res.classes) == 1, json.dumps(res.classes))
    rep.check(
        "regression_survivor_count",
        res.count == constants.SURVIVOR_COUNT,
        f"{res.count} vs frozen {constants.SURVIVOR_COUNT}",
    )
    degrees_ok = all(Tournament(m).out_degrees() == [3] * 7 for m in res.survivors)
    rep.check("survivors_regular", degrees_ok, "every vertex out-degree 3")
    data = res.to_dict()
    if oracle == "sample":
        cmp = oracle_compare(res.survivors, seed)
        rep.check("oracle_sample_agrees", cmp["agree"], f"{len(cmp['slow_survivors'])} survivors in 1/64 sample")
        data["oracle"] = cmp
    elif oracle == "full":
        slow = slow_scan(range(TOTAL))
        rep.check("oracle_full_agrees", slow == res.survivors, f"slow path found {len(slow)}")
        data["oracle"] = {"full": True, "slow_count": len(slow), "agree": slow == res.survivors}
    rep.data = data
    return rep


def cmd_triangulations() -> RunReport:
    rep = RunReport("enumerate-triangulations", {})
    tris = enumerate_triangulations()
    rep.counters["labelled_triangulations"] = len(tris)
    rep.check(
        "regression_count",
        len(tris) == constants.TRIANGULATION_COUNT,
        f"{len(tris)} vs frozen {constants.TRIANGULATION_COUNT}",
    )
    rep.check("fourteen_triangles", all(len(t.triangles) == 14 for t in tris))
    rep.check("euler_zero", all(euler_characteristic(t) == 0 for t in tris))
    rep.check("links_are_6_cycles", all(len(c) == 6 for t in tris for c in t.links.values()))
    rep.check("all_orientable", all(is_orientable(t) for t in tris), "no Klein bottle")
    orbit = triangle_orbit(tris[0].triangles) if tris else set()
    same = bool(tris) and all(frozenset(t.triangles) in orbit for t in tris)
    rep.check("pairwise_isomorphic", same, f"orbit of the first has {len(orbit)} members")
    rep.data = {"triangulations": [t.to_list() for t in tris]}
    return rep


def cmd_dual() -> RunReport:
    rep = RunReport("dual", {})
    tri = tournament_triangulation(paley_tournament())
    d = dual_graph(tri)
    inc = incidence_graph(standard_fano().underlying())
    rep.counters.update(vertices=d.n, edges=len(d.edges()))
    rep.check("three_regular", degree_sequence(d) == [3] * 14)
    parts = is_bipartite(d)
    rep.check("bipartite_7_7", parts is not None and sorted(map(len, parts)) == [7, 7])
    g = girth(d)
    rep.check("girth_6", g == 6, str(g))
    mapping = graphs_isomorphic(d, inc)
    rep.check("isomorphic_to_incidence_graph", mapping is not None and is_isomorphism(mapping, d, inc))
    side_ok = False
    if mapping is not None and parts is not None:
        sides = [{inc.tag(mapping[v]).split()[0] for v in part} for part in parts]
        side_ok = sorted(map(sorted, sides)) == [["line"], ["point"]]
    rep.check("side_consistent", side_ok, "one colour class onto points, the other onto lines")
    split = dual_bipartition(tri)
    if split is not None and parts is not None:
        by_tri = [frozenset(tri.triangles[v] for v in part) for part in parts]
        rep.check("matches_dual_bipartition", set(by_tri) == set(split))
    rep.data = {"mapping": {d.tag(k): inc.tag(v) for k, v in (mapping or {}).items()}}
    return rep


def cmd_draw(output: str, mirror: bool = False, translates: bool = True, edges: bool = False) -> tuple[RunReport, str]:
    rep = RunReport("draw", {"output": output, "mirror": mirror, "translates": translates, "edges": edges})
    geo = hexagon_map_geometry(mirror)
    svg = render_svg(geo, translates=translates, edges=edges)
    rep.counters.update(cells=len(geo.cells), corner_classes=len(geo.corner_classes), circled=len(geo.circled))
    rep.check("seven_cells", svg.count('class="cell"') == 7)
    rep.check("seven_circled", svg.count('class="circled"') == 7)
    rep.check("fourteen_corner_classes", len(geo.corner_classes) == 14)
    return rep, svg


def _common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="octo", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the 8x8 multiplication table")
    p.add_argument("--source", choices=TABLE_SOURCES, default="fano")
    _common(p, ("text", "csv", "json"))

    p = sub.add_parser("verify-algebra", help="alternativity, norm, quaternion lines, inverses")
    _common(p)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--mutate-line", type=int, choices=range(7), default=None, metavar="K")

    p = sub.add_parser("search-orientations", help="scan all 2^21 orientations of K7")
    _common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--oracle", action="store_const", const="sample", dest="oracle", help="slow path on 1/64 sample")
    g.add_argument("--oracle-full", action="store_const", const="full", dest="oracle", help="slow path everywhere")

    p = sub.add_parser("enumerate-triangulations", help="all surface triangulations with K7 skeleton")
    _common(p)

    p = sub.add_parser("dual", help="dual of the torus map versus the Fano incidence graph")
    _common(p)

    p = sub.add_parser("draw", help="write the hexagon map as SVG")
    _common(p)
    p.add_argument("--output", "-o", default="hexmap.svg", help="'-' for stdout")
    p.add_argument("--mirror", action="store_true")
    p.add_argument("--no-translates", dest="translates", action="store_false")
    p.add_argument("--edges", action="store_true")
    return parser


def _emit(rep: RunReport, fmt: str, stream) -> int:
    stream.write(rep.to_json() if fmt == "json" else rep.to_text())
    return 0 if rep.passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    start = time.perf_counter()

    if args.command == "table":
        sys.stdout.write(cmd_table(args.source, args.format))
        return 0
    if args.command == "verify-algebra":
        if args.trials < 1:
            parser.error("--trials must be at least 1")
        rep = cmd_verify_algebra(args.seed, args.trials, args.mutate_line)
    elif args.command == "search-orientations":
        rep = cmd_search(args.threads, args.oracle, args.seed)
    elif args.command == "enumerate-triangulations":
        rep = cmd_triangulations()
    elif args.command == "dual":
        rep = cmd_dual()
    else:
        rep, svg = cmd_draw(args.output, args.mirror, args.translates, args.edges)
        if args.output == "-":
            sys.stdout.write(svg)
            rep.elapsed = time.perf_counter() - start
            sys.stderr.write(rep.to_text())
            return 0 if rep.passed else 1
        try:
            Path(args.output).write_text(svg, encoding="utf-8", newline="\n")
        except OSError as exc:
            sys.stderr.write(f"octo: cannot write {args.output}: {exc}\n")
            return 1
    rep.elapsed = time.perf_counter() - start
    return _emit(rep, args.format, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
