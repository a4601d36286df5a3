"""Command-line front end.

Exit status: 0 on success or a true verdict, 1 on a validation failure or a
false verdict, 2 on a usage error. Output defaults to machine lines; ``--human``
renders the same lines as aligned tables.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, morphism, textio, tiling
from .algebra import AlgebraElement, convolve, convolve_symmetric, to_matrix
from .core import FiniteGroupoid
from .errors import FormatError, GroupoidError, NotHomotopic


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _groupoid(path: str) -> FiniteGroupoid:
    return textio.parse_groupoid(_read(path))


def _element(G: FiniteGroupoid, path: str) -> AlgebraElement:
    coeffs = textio.parse_coefficients(_read(path))
    unknown = [g for g in coeffs if g not in G.alpha]
    if unknown:
        raise FormatError(f"{path}: {unknown[0]} is not an element of the groupoid")
    return AlgebraElement(G, coeffs)


# -- verbs: each returns (status, lines) --------------------------------------------


def cmd_validate(args):
    G = _groupoid(args.file)
    return 0, [f"valid objects={len(G.objects)} elements={len(G.elements)}"]


def cmd_orbits(args):
    G = _groupoid(args.file)
    return 0, [
        f"orbit {textio.token(b[0])} size={len(b)} members={','.join(map(textio.token, b))}"
        for b in analysis.orbits(G).blocks
    ]


def cmd_isotropy(args):
    G = _groupoid(args.file)
    if args.object not in G.identity_at:
        raise UsageError(f"unknown object {args.object!r}")
    iso = analysis.isotropy_group(G, args.object)
    lines = [f"isotropy {textio.token(iso.base)} order={iso.order} class={iso.name}"]
    lines += [f"element {textio.token(g)}" for g in iso.elements]
    return 0, lines


def cmd_skeleton(args):
    return 0, analysis.skeleton(_groupoid(args.file)).lines()


def cmd_decompose(args):
    G = _groupoid(args.file)
    lines = []
    for i, part in enumerate(analysis.orbit_decomposition(G)):
        lines.append(
            f"component {i} rep={textio.token(part.objects[0])} "
            f"objects={len(part.objects)} elements={len(part.elements)}"
        )
        if args.write:
            out = Path(args.write)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"component_{i}.g").write_text(textio.format_groupoid(part), encoding="utf-8")
    return 0, lines


def _morphism_file(path: str):
    parsed = textio.parse_morphism_file(_read(path))
    base = Path(path).parent if path != "-" else Path(".")
    source = _groupoid(str(base / parsed["source"]))
    target = _groupoid(str(base / parsed["target"]))
    return parsed, source, target


def _checked(source, target, block):
    return morphism.validate_morphism(source, target, block["fG"], block["fB"])


def cmd_morphism_check(args):
    parsed, source, target = _morphism_file(args.file)
    if not parsed["morphisms"]:
        raise FormatError("no morphism blocks", line=1)
    lines, status = [], 0
    for block in parsed["morphisms"]:
        try:
            _checked(source, target, block)
            lines.append(f"morphism {block['name']} valid")
        except GroupoidError as exc:
            lines.append(f"morphism {block['name']} invalid {exc}")
            status = 1
    return status, lines


def cmd_homotopy_check(args):
    parsed, source, target = _morphism_file(args.file)
    if len(parsed["morphisms"]) != 2:
        raise FormatError("a homotopy file needs exactly two morphism blocks", line=1)
    f1, f2 = (_checked(source, target, b) for b in parsed["morphisms"])
    if parsed["h"]:
        reason = morphism.homotopy_violation(f1, f2, parsed["h"])
        if reason is None:
            return 0, ["homotopy valid"]
        return 1, [f"homotopy invalid {reason}"]
    try:
        h = morphism.find_homotopy(f1, f2)
    except NotHomotopic as exc:
        return 1, [str(exc)]
    return 0, ["homotopy found"] + h.lines()


def cmd_equiv(args):
    verdict = morphism.are_equivalent(_groupoid(args.file_a), _groupoid(args.file_b))
    return (0 if verdict else 1), verdict.lines()


def cmd_convolve(args):
    G = _groupoid(args.file)
    a, b = _element(G, args.a), _element(G, args.b)
    product = (convolve_symmetric if args.formula == "symmetric" else convolve)(G, a, b)
    return 0, textio.format_coefficients(product).splitlines()


def cmd_matrix(args):
    G = _groupoid(args.file)
    return 0, textio.format_matrix(to_matrix(_element(G, args.a))).splitlines()


def _samples(args, default):
    if args.samples is None:
        return list(default)
    return textio.parse_points(_read(args.samples))


def cmd_tiling(args):
    rect = tiling.TiledRectangle(args.m, args.n)
    if args.what == "corners":
        G = tiling.local_groupoid_on_corners(rect)
    elif args.what == "restricted":
        G = tiling.restricted_action_groupoid(rect, _samples(args, tiling.STANDARD_RESTRICTED_SAMPLE))
    else:
        classes = tiling.local_orbit_census(rect, _samples(args, tiling.STANDARD_CENSUS_SAMPLE))
        return 0, [c.line() for c in classes]
    return 0, textio.format_groupoid(G).splitlines()


# -- parsing and rendering ------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="groupoids", description="Finite groupoid toolkit.")
    p.add_argument("--human", action="store_true", help="render output as aligned tables")
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")

    def verb(name, func, *positional, help=None):
        sp = sub.add_parser(name, help=help)
        for arg in positional:
            sp.add_argument(arg)
        sp.set_defaults(func=func)
        return sp

    verb("validate", cmd_validate, "file", help="check the groupoid axioms")
    verb("orbits", cmd_orbits, "file", help="list orbits")
    verb("isotropy", cmd_isotropy, "file", "object", help="isotropy group at an object")
    verb("skeleton", cmd_skeleton, "file", help="orbit sizes and isotropy classes")
    d = verb("decompose", cmd_decompose, "file", help="restrict to each orbit")
    d.add_argument("--write", metavar="DIR", help="write each component as a groupoid file")
    verb("morphism-check", cmd_morphism_check, "file", help="validate morphism blocks")
    verb("homotopy-check", cmd_homotopy_check, "file", help="check or search a homotopy")
    verb("equiv", cmd_equiv, "file_a", "file_b", help="decide equivalence of two groupoids")
    c = verb("convolve", cmd_convolve, "file", "a", "b", help="convolution product a*b")
    c.add_argument("--formula", choices=("fibre", "symmetric"), default="fibre")
    verb("matrix", cmd_matrix, "file", "a", help="algebra element over a pair groupoid as a matrix")

    t = sub.add_parser("tiling", help="tiled-floor generators")
    t.add_argument("what", choices=("corners", "restricted", "census"))
    t.add_argument("--m", type=_positive, required=True)
    t.add_argument("--n", type=_positive, required=True)
    t.add_argument("--samples", help="file of 'x y' rational points (default: built-in sample)")
    t.set_defaults(func=cmd_tiling)
    return p


def render_human(lines: list[str]) -> list[str]:
    """Align ``kind [positional...] key=value ...`` records into per-kind tables."""
    if not lines or lines[0] == "objects:":
        return lines
    out: list[str] = []
    groups: list[tuple[str, list[list[tuple[str, str]]]]] = []
    for line in lines:
        kind, *fields = line.split()
        row = []
        for i, f in enumerate(fields):
            key, eq, value = f.partition("=")
            row.append((key, value) if eq else (f"#{i}", f))
        if groups and groups[-1][0] == kind:
            groups[-1][1].append(row)
        else:
            groups.append((kind, [row]))
    for kind, rows in groups:
        headers: list[str] = []
        for row in rows:
            for key, _ in row:
                if key not in headers:
                    headers.append(key)
        cells = [[kind] + ["" if h.startswith("#") else h for h in headers]]
        for row in rows:
            d = dict(row)
            cells.append([""] + [d.get(h, "") for h in headers])
        widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
        for r in cells:
            out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        out.append("")
    return out[:-1]


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors by exiting
        return int(exc.code or 0)
    try:
        status, lines = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"groupoids: error: {exc}", file=sys.stderr)
        return 2
    except FormatError as exc:
        print(f"FormatError {exc.message}" + (f" line={exc.line}" if exc.line else ""))
        return 1
    except GroupoidError as exc:
        print(exc)
        return 1
    for line in render_human(lines) if args.human else lines:
        print(line)
    return status


if __name__ == "__main__":
    sys.exit(main())
