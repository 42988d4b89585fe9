"""Command-line front end.

Exit codes: 0 ok, 1 self-test failure, 2 input error, 3 degenerate scene,
4 section enumeration truncated, 5 local-assessment hypothesis violated.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .network import DegenerateSceneError, NetworkScene, SceneError, build_complex, validate_scene
from .persistence import JammerSpec, RadiusGrid, plot_diagram_svg, write_diagram_csv
from .selfcheck import run_all
from .sheaf import enumerate_global_sections, save_sections
from .simplicial import SimplicialComplex, facets
from .vulnerability import DisconnectedComplexError, assess_all_facets, assess_jammers, write_global_csv, write_local_csv

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_TRUNCATED, EXIT_HYPOTHESIS = range(6)
DIM_NAMES = ["vertices", "edges", "triangles", "tetrahedra"]


class InputError(Exception):
    def __init__(self, msg: str, code: int = EXIT_INPUT):
        super().__init__(msg)
        self.code = code


def _load_scene(args) -> NetworkScene:
    if not args.scene:
        raise InputError("--scene is required")
    try:
        scene = NetworkScene.load(args.scene)
        if args.max_dim is not None:
            scene = NetworkScene(scene.nodes, scene.model, args.max_dim)
    except OSError as exc:
        raise InputError(f"cannot read scene: {exc}")
    except SceneError as exc:
        raise InputError(str(exc))
    try:
        validate_scene(scene)
    except DegenerateSceneError as exc:
        raise InputError(f"degenerate scene: {exc}", EXIT_DEGENERATE)
    return scene


def _load_complex(args) -> SimplicialComplex:
    if args.complex:
        try:
            return SimplicialComplex.load(args.complex)
        except (OSError, ValueError) as exc:
            raise InputError(f"cannot read complex: {exc}")
    return build_complex(_load_scene(args), args.kind)


def _summary(X: SimplicialComplex) -> str:
    f = list(X.f_vector()) + [0, 0]
    top = max(2, X.dimension + 1)
    parts = [f"{f[k]} {DIM_NAMES[k] if k < len(DIM_NAMES) else f'{k}-cells'}" for k in range(top)]
    return f"cells: {', '.join(parts)}\nfacets: {len(facets(X))}"


def cmd_build(args) -> int:
    X = build_complex(_load_scene(args), args.kind)
    if args.out:
        X.save(args.out)
    print(_summary(X))
    return EXIT_OK


def cmd_sections(args) -> int:
    X = _load_complex(args)
    res = enumerate_global_sections(X, limit=args.section_cap)
    if res.truncated and not args.allow_truncate:
        print(f"section enumeration truncated after {res.explored} steps "
              f"({len(res)} found); raise --section-cap or pass --allow-truncate", file=sys.stderr)
        return EXIT_TRUNCATED
    count = f"sections: {len(res)}" + (" (truncated)" if res.truncated else "")
    if args.out:
        save_sections(args.out, res.sections)
        print(count)
    else:
        json.dump({"sections": [s.to_json() for s in res.sections]}, sys.stdout)
        print()
        print(count, file=sys.stderr)
    return EXIT_OK


def cmd_vuln_local(args) -> int:
    X = _load_complex(args)
    try:
        rows = assess_all_facets(X)
    except DisconnectedComplexError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_HYPOTHESIS
    write_local_csv(args.out or sys.stdout, rows)
    return EXIT_OK


def _parse_grid(text: str | None) -> RadiusGrid | None:
    if text is None or text == "critical":
        return None
    parts = text.split(":")
    if len(parts) != 3 or parts[0] != "uniform":
        raise InputError(f"grid must be uniform:N:RMAX or critical, got {text!r}")
    try:
        return RadiusGrid.uniform(int(parts[1]), float(parts[2]))
    except ValueError as exc:
        raise InputError(f"bad grid {text!r}: {exc}")


def cmd_vuln_global(args) -> int:
    scene = _load_scene(args)
    X = build_complex(scene, args.kind)
    if not args.jammer:
        raise InputError("at least one --jammer x,y[,label] is required")
    try:
        jammers = [JammerSpec.parse(t, f"jammer{k}") for k, t in enumerate(args.jammer)]
    except ValueError as exc:
        raise InputError(f"bad jammer spec: {exc}")
    if len({j.label for j in jammers}) != len(jammers):
        raise InputError("jammer labels must be unique")
    grid = _parse_grid(args.grid)
    results = assess_jammers(scene, X, jammers, grid, args.tau)
    diagrams = [r.diagram for r in results]
    if args.out:
        write_diagram_csv(args.out, diagrams)
    if args.svg:
        plot_diagram_svg(args.svg, diagrams)
    write_global_csv(sys.stdout, results, args.out or "")
    return EXIT_OK


def cmd_check(args) -> int:
    results = run_all(args.seed, args.scenes)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jamtopo", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, scene=True, complex_=False):
        if scene:
            sp.add_argument("--scene", help="scene JSON file")
            sp.add_argument("--kind", choices=["link", "interference"], default="link")
            sp.add_argument("--max-dim", type=int, default=None)
        if complex_:
            sp.add_argument("--complex", help="complex JSON file (facet list)")
        sp.add_argument("--out", help="output file")

    sp = sub.add_parser("build", help="build a complex from a scene")
    common(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("sections", help="enumerate global sections of the transmission sheaf")
    common(sp, complex_=True)
    sp.add_argument("--section-cap", type=int, default=10**6)
    sp.add_argument("--allow-truncate", action="store_true")
    sp.set_defaults(func=cmd_sections)

    sp = sub.add_parser("vuln-local", help="per-facet attack report (CSV)")
    common(sp, complex_=True)
    sp.set_defaults(func=cmd_vuln_local)

    sp = sub.add_parser("vuln-global", help="per-jammer persistence diagrams (CSV/SVG)")
    common(sp)
    sp.add_argument("--jammer", action="append", help="x,y[,label]; repeatable")
    sp.add_argument("--grid", help="uniform:N:RMAX or critical (default)")
    sp.add_argument("--tau", type=float, default=None, help="significance age (default 0.1*R_max)")
    sp.add_argument("--svg", help="write a persistence diagram plot")
    sp.set_defaults(func=cmd_vuln_global)

    sp = sub.add_parser("check", help="run randomized self-test suites")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--scenes", type=int, default=50, help="cases per suite")
    sp.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_dim", None) is not None and args.max_dim < 1:
        parser.error("--max-dim must be positive")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
