"""Line-oriented text formats for every object the package computes with.

One format per kind of document: fusion rings, Frobenius algebras,
presented categories, surface lists, twist assignments, cobordism
words, and separability idempotents.  All formats are UTF-8, use `#`
comments, and are diffable; serializers emit a canonical form so that
serialize(parse(file)) is byte-identical on canonical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .categories import CategoryFormatError, PresentedCategory
from .exact import Matrix, Tensor3
from .fusion import FusionRing
from .surfaces import ColouredSurface, Twist, TwistFormatError
from .tqft import GENERATORS, CobordismWord, FrobeniusAlgebra

__all__ = [
    "KINDS",
    "Document",
    "ParseError",
    "SemanticError",
    "parse",
    "serialize",
    "kind_for_path",
]

KINDS = ("fusion", "algebra", "category", "surface-list", "twist",
         "word", "idempotent")

EXTENSIONS = {
    ".fusion": "fusion",
    ".algebra": "algebra",
    ".category": "category",
    ".surfaces": "surface-list",
    ".twist": "twist",
    ".word": "word",
    ".idem": "idempotent",
}


class ParseError(ValueError):
    """Syntax error with source name and line number."""

    def __init__(self, message: str, source: str = "<input>", line: int = 0):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line
        self.reason = message


class SemanticError(ParseError):
    """Well-formed line whose content is inconsistent or out of range."""


@dataclass(frozen=True)
class Document:
    """A parsed file: its kind tag, payload, and source name."""

    kind: str
    payload: object
    source: str = "<input>"


def kind_for_path(path: str) -> str | None:
    for ext, kind in EXTENSIONS.items():
        if str(path).endswith(ext):
            return kind
    return None


# ---------------------------------------------------------------------------
# low-level line handling


def _lines(text: str, source: str):
    """Yield (line_number, tokens) for every non-comment, non-blank line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        yield lineno, body.split()


def _int(token: str, source: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", source, line)


def _fraction(token: str, source: str, line: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational p/q, got {token!r}",
                         source, line)


def _index(token: str, bound: int, source: str, line: int) -> int:
    value = _int(token, source, line)
    if not 0 <= value < bound:
        raise SemanticError(f"index {value} out of range 0..{bound - 1}",
                            source, line)
    return value


def _arity(tokens, n: int, source: str, line: int) -> None:
    if len(tokens) != n:
        raise ParseError(
            f"directive {tokens[0]!r} takes {n - 1} argument(s), "
            f"got {len(tokens) - 1}", source, line)


# ---------------------------------------------------------------------------
# fusion rings


def _parse_fusion(text: str, source: str) -> FusionRing:
    entries = list(_lines(text, source))
    rank = None
    rank_line = 0
    for lineno, tokens in entries:
        if tokens[0] == "rank":
            if rank is not None:
                raise SemanticError("duplicate rank directive", source, lineno)
            _arity(tokens, 2, source, lineno)
            rank = _int(tokens[1], source, lineno)
            rank_line = lineno
    if rank is None:
        raise SemanticError("missing rank", source, 0)
    if rank < 1:
        raise SemanticError(f"rank {rank} must be >= 1", source, rank_line)

    names: dict[int, str] = {}
    dual: dict[int, int] = {}
    unit: tuple[int, ...] | None = None
    coeffs: dict[tuple[int, int, int], int] = {}
    for lineno, tokens in entries:
        head = tokens[0]
        if head == "rank":
            continue
        if head == "label":
            _arity(tokens, 3, source, lineno)
            i = _index(tokens[1], rank, source, lineno)
            if i in names:
                raise SemanticError(f"duplicate label entry for {i}",
                                    source, lineno)
            names[i] = tokens[2]
        elif head == "dual":
            _arity(tokens, 3, source, lineno)
            i = _index(tokens[1], rank, source, lineno)
            j = _index(tokens[2], rank, source, lineno)
            if i in dual or j in dual:
                raise SemanticError(
                    f"duplicate dual entry for {i if i in dual else j}",
                    source, lineno)
            dual[i] = j
            dual[j] = i
        elif head == "unit":
            if unit is not None:
                raise SemanticError("duplicate unit directive", source, lineno)
            if len(tokens) < 2:
                raise ParseError("unit needs at least one label",
                                 source, lineno)
            parts = [_index(t, rank, source, lineno) for t in tokens[1:]]
            if len(set(parts)) != len(parts):
                raise SemanticError("repeated unit component", source, lineno)
            unit = tuple(sorted(parts))
        elif head == "N":
            _arity(tokens, 5, source, lineno)
            a = _index(tokens[1], rank, source, lineno)
            b = _index(tokens[2], rank, source, lineno)
            c = _index(tokens[3], rank, source, lineno)
            m = _int(tokens[4], source, lineno)
            if m < 0:
                raise SemanticError(f"negative coefficient {m}",
                                    source, lineno)
            if (a, b, c) in coeffs:
                raise SemanticError(f"duplicate N entry for ({a},{b},{c})",
                                    source, lineno)
            if m:
                coeffs[(a, b, c)] = m
        else:
            raise ParseError(f"unknown directive {head!r}", source, lineno)

    if unit is None:
        raise SemanticError("missing unit directive", source, 0)
    for i in range(rank):
        if i not in dual:
            raise SemanticError(f"dual not specified for label {i}",
                                source, 0)
    full_names = tuple(names.get(i, str(i)) for i in range(rank))
    if len(set(full_names)) != rank:
        raise SemanticError("label names are not distinct", source, 0)
    return FusionRing(
        dual=tuple(dual[i] for i in range(rank)),
        unit=unit,
        coeffs=Tensor3.from_dict((rank, rank, rank), coeffs),
        names=full_names)


def _serialize_fusion(ring: FusionRing) -> str:
    lines = [f"rank {ring.rank}"]
    for i, name in enumerate(ring.names):
        lines.append(f"label {i} {name}")
    for i in range(ring.rank):
        if i <= ring.dual[i]:
            lines.append(f"dual {i} {ring.dual[i]}")
    lines.append("unit " + " ".join(str(b) for b in ring.unit))
    for (a, b, c), v in ring.coeffs.nonzero():
        lines.append(f"N {a} {b} {c} {int(v)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Frobenius algebras


def _parse_algebra(text: str, source: str) -> FrobeniusAlgebra:
    entries = list(_lines(text, source))
    dim = None
    for lineno, tokens in entries:
        if tokens[0] == "dim":
            if dim is not None:
                raise SemanticError("duplicate dim directive", source, lineno)
            _arity(tokens, 2, source, lineno)
            dim = _int(tokens[1], source, lineno)
            if dim < 1:
                raise SemanticError(f"dim {dim} must be >= 1", source, lineno)
    if dim is None:
        raise SemanticError("missing dim", source, 0)

    names: dict[int, str] = {}
    mult: dict[tuple[int, int, int], Fraction] = {}
    unit: dict[int, Fraction] = {}
    counit: dict[int, Fraction] = {}
    for lineno, tokens in entries:
        head = tokens[0]
        if head == "dim":
            continue
        if head == "basis":
            _arity(tokens, 3, source, lineno)
            i = _index(tokens[1], dim, source, lineno)
            if i in names:
                raise SemanticError(f"duplicate basis entry for {i}",
                                    source, lineno)
            names[i] = tokens[2]
        elif head == "mult":
            _arity(tokens, 5, source, lineno)
            i = _index(tokens[1], dim, source, lineno)
            j = _index(tokens[2], dim, source, lineno)
            k = _index(tokens[3], dim, source, lineno)
            v = _fraction(tokens[4], source, lineno)
            if (i, j, k) in mult:
                raise SemanticError(f"duplicate mult entry for ({i},{j},{k})",
                                    source, lineno)
            if v:
                mult[(i, j, k)] = v
        elif head in ("unit", "counit"):
            _arity(tokens, 3, source, lineno)
            i = _index(tokens[1], dim, source, lineno)
            v = _fraction(tokens[2], source, lineno)
            store = unit if head == "unit" else counit
            if i in store:
                raise SemanticError(f"duplicate {head} entry for {i}",
                                    source, lineno)
            if v:
                store[i] = v
        else:
            raise ParseError(f"unknown directive {head!r}", source, lineno)

    return FrobeniusAlgebra(
        names=tuple(names.get(i, f"e{i}") for i in range(dim)),
        mult=Tensor3.from_dict((dim, dim, dim), mult),
        unit=tuple(unit.get(i, Fraction(0)) for i in range(dim)),
        counit=tuple(counit.get(i, Fraction(0)) for i in range(dim)))


def _serialize_algebra(algebra: FrobeniusAlgebra) -> str:
    lines = [f"dim {algebra.dim}"]
    for i, name in enumerate(algebra.names):
        lines.append(f"basis {i} {name}")
    for (i, j, k), v in algebra.mult.nonzero():
        lines.append(f"mult {i} {j} {k} {v}")
    for i, v in enumerate(algebra.unit):
        if v:
            lines.append(f"unit {i} {v}")
    for i, v in enumerate(algebra.counit):
        if v:
            lines.append(f"counit {i} {v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# presented categories


def _parse_combination(tokens, source, lineno) -> dict[str, Fraction]:
    """Parse `0` or `c1*b1 + c2*b2 + ...` given as a token list."""
    if tokens == ["0"]:
        return {}
    combo: dict[str, Fraction] = {}
    expect_term = True
    for token in tokens:
        if token == "+":
            if expect_term:
                raise ParseError("misplaced '+' in combination",
                                 source, lineno)
            expect_term = True
            continue
        if not expect_term:
            raise ParseError(f"expected '+' before {token!r}", source, lineno)
        if "*" not in token:
            raise ParseError(
                f"expected coeff*name term, got {token!r}", source, lineno)
        coeff_str, name = token.split("*", 1)
        coeff = _fraction(coeff_str, source, lineno)
        if name in combo:
            raise SemanticError(f"repeated term {name!r} in combination",
                                source, lineno)
        combo[name] = coeff
        expect_term = False
    if expect_term:
        raise ParseError("combination ends with '+'", source, lineno)
    return combo


def _parse_category(text: str, source: str) -> PresentedCategory:
    objects: list[str] = []
    hom: dict[tuple[str, str], list[str]] = {}
    basis_seen: set[str] = set()
    compose: dict[tuple[str, str], dict[str, Fraction]] = {}
    identities: dict[str, dict[str, Fraction]] = {}
    last_line = 0
    for lineno, tokens in _lines(text, source):
        last_line = lineno
        head = tokens[0]
        if head == "object":
            _arity(tokens, 2, source, lineno)
            if tokens[1] in objects:
                raise SemanticError(f"duplicate object {tokens[1]!r}",
                                    source, lineno)
            objects.append(tokens[1])
        elif head == "hom":
            _arity(tokens, 4, source, lineno)
            p, q, b = tokens[1], tokens[2], tokens[3]
            for obj in (p, q):
                if obj not in objects:
                    raise SemanticError(f"unknown object {obj!r}",
                                        source, lineno)
            if b in basis_seen:
                raise SemanticError(f"duplicate basis name {b!r}",
                                    source, lineno)
            basis_seen.add(b)
            hom.setdefault((p, q), []).append(b)
        elif head == "compose":
            if len(tokens) < 5 or tokens[3] != "=":
                raise ParseError(
                    "expected: compose <g> <f> = <combination>",
                    source, lineno)
            g, f = tokens[1], tokens[2]
            for b in (g, f):
                if b not in basis_seen:
                    raise SemanticError(f"unknown basis element {b!r}",
                                        source, lineno)
            if (g, f) in compose:
                raise SemanticError(f"duplicate compose entry ({g},{f})",
                                    source, lineno)
            compose[(g, f)] = _parse_combination(tokens[4:], source, lineno)
        elif head == "identity":
            if len(tokens) < 4 or tokens[2] != "=":
                raise ParseError("expected: identity <p> = <combination>",
                                 source, lineno)
            p = tokens[1]
            if p not in objects:
                raise SemanticError(f"unknown object {p!r}", source, lineno)
            if p in identities:
                raise SemanticError(f"duplicate identity for {p!r}",
                                    source, lineno)
            identities[p] = _parse_combination(tokens[3:], source, lineno)
        else:
            raise ParseError(f"unknown directive {head!r}", source, lineno)
    if not objects:
        raise SemanticError("missing object directives", source, 0)
    try:
        return PresentedCategory(
            objects=tuple(objects),
            hom={k: tuple(v) for k, v in hom.items()},
            compose=compose,
            identities=identities)
    except CategoryFormatError as err:
        raise SemanticError(str(err), source, last_line) from err


def _combination_str(combo: dict[str, Fraction], order) -> str:
    terms = [f"{combo[b]}*{b}" for b in order if b in combo]
    return " + ".join(terms) if terms else "0"


def _serialize_category(cat: PresentedCategory) -> str:
    lines = [f"object {p}" for p in cat.objects]
    basis_order = []
    for p in cat.objects:
        for q in cat.objects:
            for b in cat.hom(p, q):
                lines.append(f"hom {p} {q} {b}")
                basis_order.append(b)
    for g in basis_order:
        for f in basis_order:
            combo = cat.compose_basis(g, f)
            if combo:
                _, gq = cat.basis_type(g)
                fp, _ = cat.basis_type(f)
                order = cat.hom(fp, gq)
                lines.append(f"compose {g} {f} = "
                             f"{_combination_str(combo, order)}")
    for p in cat.objects:
        combo = cat.identity_coeffs(p)
        lines.append(f"identity {p} = "
                     f"{_combination_str(combo, cat.hom(p, p))}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# surface lists


def _parse_surfaces(text: str, source: str) -> dict[str, ColouredSurface]:
    surfaces: dict[str, ColouredSurface] = {}
    for lineno, tokens in _lines(text, source):
        if tokens[0] != "surface":
            raise ParseError(f"unknown directive {tokens[0]!r}",
                             source, lineno)
        if len(tokens) < 5 or not tokens[1].endswith(":"):
            raise ParseError(
                "expected: surface <name>: genus <g> boundary [labels]",
                source, lineno)
        name = tokens[1][:-1]
        if not name:
            raise ParseError("empty surface name", source, lineno)
        if name in surfaces:
            raise SemanticError(f"duplicate surface {name!r}", source, lineno)
        if tokens[2] != "genus" or tokens[4] != "boundary":
            raise ParseError(
                "expected: surface <name>: genus <g> boundary [labels]",
                source, lineno)
        genus = _int(tokens[3], source, lineno)
        if genus < 0:
            raise SemanticError(f"negative genus {genus}", source, lineno)
        boundary = tuple(_int(t, source, lineno) for t in tokens[5:])
        if any(b < 0 for b in boundary):
            raise SemanticError("negative boundary colour", source, lineno)
        surfaces[name] = ColouredSurface(genus, boundary)
    return surfaces


def _serialize_surfaces(surfaces: dict[str, ColouredSurface]) -> str:
    lines = []
    for name in sorted(surfaces):
        s = surfaces[name]
        boundary = "".join(f" {c}" for c in s.boundary)
        lines.append(f"surface {name}: genus {s.genus} boundary{boundary}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# twists


def _parse_twist_value(token: str, source: str, lineno: int) -> Twist:
    try:
        if token.startswith("zeta(") and token.endswith(")"):
            inner = token[len("zeta("):-1]
            parts = inner.split(",")
            if len(parts) != 2:
                raise TwistFormatError(
                    f"zeta takes (order,exponent), got {token!r}")
            return Twist.root_of_unity(int(parts[0]), int(parts[1]))
        return Twist.from_rational(_fraction(token, source, lineno))
    except (TwistFormatError, ValueError) as err:
        raise SemanticError(str(err), source, lineno) from err


def _parse_twists(text: str, source: str) -> dict[int, Twist]:
    twists: dict[int, Twist] = {}
    for lineno, tokens in _lines(text, source):
        if tokens[0] != "twist":
            raise ParseError(f"unknown directive {tokens[0]!r}",
                             source, lineno)
        if len(tokens) != 4 or tokens[2] != "=":
            raise ParseError("expected: twist <label> = <value>",
                             source, lineno)
        label = _int(tokens[1], source, lineno)
        if label < 0:
            raise SemanticError(f"negative label {label}", source, lineno)
        if label in twists:
            raise SemanticError(f"duplicate twist for label {label}",
                                source, lineno)
        twists[label] = _parse_twist_value(tokens[3], source, lineno)
    return twists


def _twist_value_str(t: Twist) -> str:
    if t.rational is not None:
        return str(t.rational)
    return f"zeta({t.order},{t.exponent})"


def _serialize_twists(twists: dict[int, Twist]) -> str:
    lines = [f"twist {label} = {_twist_value_str(twists[label])}"
             for label in sorted(twists)]
    return "\n".join(lines) + "\n" if lines else ""


# ---------------------------------------------------------------------------
# cobordism words


def _parse_word(text: str, source: str) -> CobordismWord:
    layers = []
    for lineno, tokens in _lines(text, source):
        for t in tokens:
            if t not in GENERATORS:
                raise ParseError(f"unknown generator {t!r}", source, lineno)
        layers.append(tuple(tokens))
    return CobordismWord(tuple(layers))


def _serialize_word(word: CobordismWord) -> str:
    return "".join(" ".join(layer) + "\n" for layer in word.layers)


# ---------------------------------------------------------------------------
# separability idempotents


def _parse_idempotent(text: str, source: str) -> Matrix:
    entries = list(_lines(text, source))
    dim = None
    for lineno, tokens in entries:
        if tokens[0] == "dim":
            if dim is not None:
                raise SemanticError("duplicate dim directive", source, lineno)
            _arity(tokens, 2, source, lineno)
            dim = _int(tokens[1], source, lineno)
            if dim < 1:
                raise SemanticError(f"dim {dim} must be >= 1", source, lineno)
    if dim is None:
        raise SemanticError("missing dim", source, 0)
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    seen = set()
    for lineno, tokens in entries:
        if tokens[0] == "dim":
            continue
        if tokens[0] != "e":
            raise ParseError(f"unknown directive {tokens[0]!r}",
                             source, lineno)
        _arity(tokens, 4, source, lineno)
        i = _index(tokens[1], dim, source, lineno)
        j = _index(tokens[2], dim, source, lineno)
        if (i, j) in seen:
            raise SemanticError(f"duplicate entry for ({i},{j})",
                                source, lineno)
        seen.add((i, j))
        rows[i][j] = _fraction(tokens[3], source, lineno)
    return Matrix(rows)


def _serialize_idempotent(e: Matrix) -> str:
    lines = [f"dim {e.rows}"]
    for i in range(e.rows):
        for j in range(e.cols):
            if e[i, j]:
                lines.append(f"e {i} {j} {e[i, j]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# dispatch


_PARSERS = {
    "fusion": _parse_fusion,
    "algebra": _parse_algebra,
    "category": _parse_category,
    "surface-list": _parse_surfaces,
    "twist": _parse_twists,
    "word": _parse_word,
    "idempotent": _parse_idempotent,
}

_SERIALIZERS = {
    "fusion": _serialize_fusion,
    "algebra": _serialize_algebra,
    "category": _serialize_category,
    "surface-list": _serialize_surfaces,
    "twist": _serialize_twists,
    "word": _serialize_word,
    "idempotent": _serialize_idempotent,
}


def parse(kind: str, text: str, source: str = "<input>") -> Document:
    """Parse text of the given kind; errors carry source and line."""
    if kind not in _PARSERS:
        raise ValueError(f"unknown document kind {kind!r}")
    return Document(kind=kind, payload=_PARSERS[kind](text, source),
                    source=source)


def serialize(kind: str, payload) -> str:
    """Canonical text for a payload of the given kind."""
    if kind not in _SERIALIZERS:
        raise ValueError(f"unknown document kind {kind!r}")
    return _SERIALIZERS[kind](payload)
