"""Line-oriented text formats: groupoids, algebra elements, matrices, samples.

Groupoid file layout::

    objects:
    x
    elements:
    id alpha beta inverse
    compose:
    g h gh
    identities:
    x id

Blank lines and ``#`` comments are ignored. Identifiers read from a file are
plain strings; in-process identifiers (tuples, fractions, ...) are written via
:func:`token`, so writing a parsed file reproduces it byte for byte.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import FormatError

SECTIONS = ("objects", "elements", "compose", "identities")


def sort_key(x):
    """Total order over the identifier shapes the constructors produce."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, (int, Fraction)):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(sort_key(i) for i in x))
    key = getattr(x, "sort_key", None)
    if key is not None:
        return (3, key())
    return (4, repr(x))


def token(x) -> str:
    """Whitespace-free rendering of an identifier."""
    if isinstance(x, str):
        s = x
    elif isinstance(x, Fraction):
        s = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    elif isinstance(x, tuple):
        s = "(" + ",".join(token(i) for i in x) + ")"
    elif hasattr(x, "token"):
        s = x.token()
    else:
        s = str(x)
    if not s or any(c.isspace() for c in s) or "#" in s:
        raise FormatError(f"identifier {x!r} has no whitespace-free token")
    return s


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


# -- groupoids ---------------------------------------------------------------


def format_groupoid(G) -> str:
    out = ["objects:"]
    out += [token(x) for x in G.objects]
    out.append("elements:")
    for g in G.elements:
        out.append(f"{token(g)} {token(G.alpha[g])} {token(G.beta[g])} {token(G.inverse[g])}")
    out.append("compose:")
    for (g, h), gh in G.composition_pairs():
        out.append(f"{token(g)} {token(h)} {token(gh)}")
    out.append("identities:")
    for x in G.objects:
        out.append(f"{token(x)} {token(G.identity_at[x])}")
    return "\n".join(out) + "\n"


def parse_groupoid_tables(text: str) -> dict:
    """Parse into raw tables without validating the axioms."""
    objects: list[str] = []
    elements: list[str] = []
    alpha, beta, inverse, compose, identity_at = {}, {}, {}, {}, {}
    section = None
    for lineno, line in _lines(text):
        if line.endswith(":") and line[:-1] in SECTIONS:
            section = line[:-1]
            continue
        parts = line.split()
        if section is None:
            raise FormatError(f"data before any section header: {line!r}", line=lineno)
        if section == "objects":
            if len(parts) != 1:
                raise FormatError("expected one object id per line", line=lineno)
            objects.append(parts[0])
        elif section == "elements":
            if len(parts) not in (3, 4):
                raise FormatError("expected 'id alpha beta inverse'", line=lineno)
            g = parts[0]
            if g in alpha:
                raise FormatError(f"duplicate element {g}", line=lineno)
            elements.append(g)
            alpha[g], beta[g] = parts[1], parts[2]
            if len(parts) == 4:
                inverse[g] = parts[3]
        elif section == "compose":
            if len(parts) != 3:
                raise FormatError("expected 'g h gh'", line=lineno)
            key = (parts[0], parts[1])
            if key in compose:
                raise FormatError(f"duplicate composite {parts[0]} {parts[1]}", line=lineno)
            compose[key] = parts[2]
        else:
            if len(parts) != 2:
                raise FormatError("expected 'object identity'", line=lineno)
            identity_at[parts[0]] = parts[1]
    return dict(
        objects=objects,
        elements=elements,
        alpha=alpha,
        beta=beta,
        compose=compose,
        inverse=inverse,
        identity_at=identity_at,
    )


def parse_groupoid(text: str):
    from .core import build

    return build(**parse_groupoid_tables(text))


# -- algebra elements and matrices ------------------------------------------


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def format_coefficients(a) -> str:
    from .algebra import ComplexRational

    out = []
    for g, c in a.items():
        if isinstance(c, ComplexRational):
            out.append(f"coef {token(g)} {format_rational(c.re)} {format_rational(c.im)}")
        else:
            out.append(f"coef {token(g)} {format_rational(c)}")
    return "\n".join(out) + ("\n" if out else "")


def parse_coefficients(text: str) -> dict:
    """Map element token -> coefficient (Fraction or ComplexRational)."""
    from .algebra import ComplexRational

    coeffs = {}
    for lineno, line in _lines(text):
        parts = line.split()
        if parts[0] != "coef" or len(parts) not in (3, 4):
            raise FormatError("expected 'coef <element> <num>/<den>'", line=lineno)
        try:
            values = [Fraction(p) for p in parts[2:]]
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad rational in {line!r}", line=lineno) from None
        if parts[1] in coeffs:
            raise FormatError(f"duplicate coefficient for {parts[1]}", line=lineno)
        coeffs[parts[1]] = values[0] if len(values) == 1 else ComplexRational(*values)
    return coeffs


def format_matrix(M) -> str:
    rows = [str(M.n)]
    rows += [" ".join(format_rational(q) for q in row) for row in M.rows]
    return "\n".join(rows) + "\n"


def parse_matrix(text: str):
    from .algebra import DenseMatrix

    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty matrix file", line=1)
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise FormatError("first line must be the dimension", line=lineno) from None
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}", line=lineno)
    rows = []
    for lineno, line in lines[1:]:
        try:
            row = [Fraction(p) for p in line.split()]
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad rational in {line!r}", line=lineno) from None
        if len(row) != n:
            raise FormatError(f"expected {n} entries", line=lineno)
        rows.append(row)
    return DenseMatrix(rows)


# -- sample points -----------------------------------------------------------


def parse_points(text: str) -> list[tuple[Fraction, Fraction]]:
    points = []
    for lineno, line in _lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise FormatError("expected 'x y'", line=lineno)
        try:
            points.append((Fraction(parts[0]), Fraction(parts[1])))
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"bad rational in {line!r}", line=lineno) from None
    return points


def format_points(points: Iterable) -> str:
    return "".join(f"{format_rational(x)} {format_rational(y)}\n" for x, y in points)


# -- morphism / homotopy files ------------------------------------------------------


def parse_morphism_file(text: str) -> dict:
    """Parse ``source:``/``target:`` paths, ``morphism <name>`` blocks of
    ``fB: x -> x'`` and ``fG: g -> g'`` lines, and optional ``h: x -> g'`` lines.

    ``fB``/``fG`` lines before any ``morphism`` header form a block named ``f``.
    """
    out: dict = {"source": None, "target": None, "morphisms": [], "h": {}}
    current = None
    for lineno, line in _lines(text):
        head, _, rest = line.partition(":")
        rest = rest.strip()
        if line.startswith("morphism ") and ":" not in line:
            current = {"name": line.split(None, 1)[1], "fB": {}, "fG": {}, "line": lineno}
            out["morphisms"].append(current)
            continue
        if head in ("source", "target"):
            if not rest:
                raise FormatError(f"missing path after {head}:", line=lineno)
            out[head] = rest
            continue
        if head not in ("fB", "fG", "h"):
            raise FormatError(f"unrecognized line {line!r}", line=lineno)
        lhs, arrow, rhs = rest.partition("->")
        lhs, rhs = lhs.strip(), rhs.strip()
        if not arrow or not lhs or not rhs or len(lhs.split()) != 1 or len(rhs.split()) != 1:
            raise FormatError(f"expected '{head}: a -> b'", line=lineno)
        if head == "h":
            target = out["h"]
        else:
            if current is None:
                current = {"name": "f", "fB": {}, "fG": {}, "line": lineno}
                out["morphisms"].append(current)
            target = current[head]
        if lhs in target:
            raise FormatError(f"{head} given twice for {lhs}", line=lineno)
        target[lhs] = rhs
    if out["source"] is None or out["target"] is None:
        raise FormatError("morphism file needs 'source:' and 'target:' lines", line=1)
    return out
