"""Finite presented linear categories and their completions.

A presented category is a finite set of objects with a chosen rational
basis for every morphism space and a structure-constant table for
composition.  Composition is bilinear by construction; associativity and
the identity laws are equations on basis elements, checked by
`validate_category`.

On top of this the module provides the additive completion (objects
become finite sequences, morphisms matrices), the Karoubi completion
(objects become idempotents (p, e), morphisms triples (e', f, e) with
the composition law (e'', f', e')(e', f, e) = (e'', f'f, e)), the tensor
product of categories, and the one-object special case of algebras with
the trace-form semisimplicity test and the separability-idempotent
check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, Tensor3, rat
from .report import Report

__all__ = [
    "CategoryFormatError",
    "Morphism",
    "PresentedCategory",
    "validate_category",
    "one_object_category",
    "field_category",
    "matrix_algebra_category",
    "mat_completion",
    "mat_object_name",
    "karoubi_idempotents",
    "karoubi_completion",
    "karoubi_object_name",
    "KaroubiCategory",
    "tensor_product",
    "character_vector",
    "iso_classes",
    "indecomposable_objects",
    "Algebra",
    "trace_form_semisimple",
    "verify_separability_idempotent",
    "field_algebra",
    "product_field_algebra",
    "group_algebra",
    "cyclic_table",
    "matrix_algebra",
    "dual_numbers_algebra",
    "group_separability_idempotent",
    "matrix_separability_idempotent",
    "product_field_separability_idempotent",
    "DEFAULT_GRID",
]

DEFAULT_GRID = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2))


class CategoryFormatError(ValueError):
    """Malformed presentation: unknown names, bad targets, bad identities."""


def _clean(coeffs: dict) -> dict[str, Fraction]:
    return {k: rat(v) for k, v in coeffs.items() if rat(v) != 0}


class Morphism:
    """A linear combination of hom basis elements with fixed source/target."""

    __slots__ = ("src", "dst", "coeffs")

    def __init__(self, src: str, dst: str, coeffs: dict):
        self.src = src
        self.dst = dst
        self.coeffs = _clean(coeffs)

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.src == other.src
                and self.dst == other.dst and self.coeffs == other.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def scaled(self, c) -> "Morphism":
        c = rat(c)
        return Morphism(self.src, self.dst,
                        {k: c * v for k, v in self.coeffs.items()})

    def __add__(self, other: "Morphism") -> "Morphism":
        if (self.src, self.dst) != (other.src, other.dst):
            raise CategoryFormatError("cannot add morphisms of different type")
        merged = dict(self.coeffs)
        for k, v in other.coeffs.items():
            merged[k] = merged.get(k, Fraction(0)) + v
        return Morphism(self.src, self.dst, merged)

    def __repr__(self):
        body = " + ".join(f"{v}*{k}" for k, v in sorted(self.coeffs.items()))
        return f"Morphism({self.src}->{self.dst}: {body or '0'})"


class PresentedCategory:
    """Objects, hom bases, composition table, identities.

    The constructor performs structural validation only (every name
    resolves, compositions are typed correctly); the categorical axioms
    are equations checked by `validate_category`.
    """

    def __init__(self, objects, hom, compose, identities):
        self.objects: tuple[str, ...] = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise CategoryFormatError("duplicate object names")
        for name in self.objects:
            if not name or any(ch.isspace() for ch in name):
                raise CategoryFormatError(f"bad object name {name!r}")

        self._hom: dict[tuple[str, str], tuple[str, ...]] = {}
        self._basis: dict[str, tuple[str, str]] = {}
        for (p, q), basis in hom.items():
            if p not in self.objects or q not in self.objects:
                raise CategoryFormatError(f"hom({p},{q}): unknown object")
            basis = tuple(basis)
            if not basis:
                continue
            for b in basis:
                if not b or any(ch.isspace() for ch in b):
                    raise CategoryFormatError(f"bad basis name {b!r}")
                if b in self._basis:
                    raise CategoryFormatError(f"duplicate basis name {b!r}")
                self._basis[b] = (p, q)
            self._hom[(p, q)] = basis

        self._table: dict[tuple[str, str], dict[str, Fraction]] = {}
        for (g, f), combo in compose.items():
            if g not in self._basis or f not in self._basis:
                raise CategoryFormatError(
                    f"compose({g},{f}): unknown basis element")
            fp, fq = self._basis[f]
            gp, gq = self._basis[g]
            if fq != gp:
                raise CategoryFormatError(
                    f"compose({g},{f}): not composable "
                    f"({f}: {fp}->{fq}, {g}: {gp}->{gq})")
            combo = _clean(combo)
            for h in combo:
                if self._basis.get(h) != (fp, gq):
                    raise CategoryFormatError(
                        f"compose({g},{f}): result term {h} does not lie "
                        f"in hom({fp},{gq})")
            if combo:
                self._table[(g, f)] = combo

        self._identity: dict[str, dict[str, Fraction]] = {}
        for p in self.objects:
            combo = _clean(identities.get(p, {}))
            for b in combo:
                if self._basis.get(b) != (p, p):
                    raise CategoryFormatError(
                        f"identity of {p}: term {b} not in hom({p},{p})")
            if not combo and self.hom(p, p):
                raise CategoryFormatError(
                    f"identity of {p} missing although hom({p},{p}) "
                    "is nonzero")
            self._identity[p] = combo

    # -- accessors ---------------------------------------------------------

    def hom(self, p: str, q: str) -> tuple[str, ...]:
        return self._hom.get((p, q), ())

    def hom_dim(self, p: str, q: str) -> int:
        return len(self.hom(p, q))

    def hom_pairs(self):
        return self._hom.items()

    def basis_type(self, name: str) -> tuple[str, str]:
        return self._basis[name]

    def basis_morphism(self, name: str) -> Morphism:
        p, q = self._basis[name]
        return Morphism(p, q, {name: Fraction(1)})

    def morphism(self, src: str, dst: str, coeffs: dict) -> Morphism:
        m = Morphism(src, dst, coeffs)
        for b in m.coeffs:
            if self._basis.get(b) != (src, dst):
                raise CategoryFormatError(
                    f"term {b} not in hom({src},{dst})")
        return m

    def zero(self, src: str, dst: str) -> Morphism:
        return Morphism(src, dst, {})

    def identity(self, p: str) -> Morphism:
        return Morphism(p, p, self._identity[p])

    def identity_coeffs(self, p: str) -> dict[str, Fraction]:
        return dict(self._identity[p])

    def compose_basis(self, g: str, f: str) -> dict[str, Fraction]:
        return dict(self._table.get((g, f), {}))

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """g after f; bilinear extension of the structure-constant table."""
        if f.dst != g.src:
            raise CategoryFormatError(
                f"not composable: {f.src}->{f.dst} then {g.src}->{g.dst}")
        out: dict[str, Fraction] = {}
        for gb, gc in g.coeffs.items():
            for fb, fc in f.coeffs.items():
                w = gc * fc
                for h, hv in self._table.get((gb, fb), {}).items():
                    out[h] = out.get(h, Fraction(0)) + w * hv
        return Morphism(f.src, g.dst, out)

    def table_items(self):
        return self._table.items()

    def __eq__(self, other):
        return (isinstance(other, PresentedCategory)
                and self.objects == other.objects
                and self._hom == other._hom
                and self._table == other._table
                and self._identity == other._identity)

    def __repr__(self):
        return (f"PresentedCategory({len(self.objects)} objects, "
                f"{len(self._basis)} basis morphisms)")


def validate_category(cat: PresentedCategory) -> Report:
    """Check associativity on all basis triples and the identity laws."""
    report = Report("category axioms")
    for b in sorted(cat._basis):
        p, q = cat.basis_type(b)
        m = cat.basis_morphism(b)
        left = cat.compose(cat.identity(q), m)
        if left != m:
            report.fail(f"identity law: id_{q} . {b} = {left.coeffs} != {b}")
        right = cat.compose(m, cat.identity(p))
        if right != m:
            report.fail(f"identity law: {b} . id_{p} = {right.coeffs} != {b}")

    for h, (hp, hq) in sorted(cat._basis.items()):
        for g, (gp, gq) in sorted(cat._basis.items()):
            if gq != hp:
                continue
            for f, (fp, fq) in sorted(cat._basis.items()):
                if fq != gp:
                    continue
                lhs = cat.compose(cat.compose(cat.basis_morphism(h),
                                              cat.basis_morphism(g)),
                                  cat.basis_morphism(f))
                rhs = cat.compose(cat.basis_morphism(h),
                                  cat.compose(cat.basis_morphism(g),
                                              cat.basis_morphism(f)))
                if lhs != rhs:
                    report.fail(
                        f"associativity on ({h},{g},{f}): "
                        f"{lhs.coeffs} != {rhs.coeffs}")
    return report


# ---------------------------------------------------------------------------
# builders


def one_object_category(obj: str, basis_names, mult: Tensor3,
                        unit) -> PresentedCategory:
    """An algebra presented as a category with a single object."""
    basis_names = tuple(basis_names)
    n = len(basis_names)
    compose = {}
    for i in range(n):
        for j in range(n):
            combo = {basis_names[k]: mult[i, j, k] for k in range(n)
                     if mult[i, j, k]}
            if combo:
                compose[(basis_names[i], basis_names[j])] = combo
    identity = {basis_names[k]: rat(u) for k, u in enumerate(unit) if rat(u)}
    return PresentedCategory(
        objects=(obj,),
        hom={(obj, obj): basis_names},
        compose=compose,
        identities={obj: identity})


def field_category(obj: str = "x", gen: str = "u") -> PresentedCategory:
    """The ground field as a category: one object, one basis morphism."""
    return one_object_category(
        obj, (gen,), Tensor3.from_dict((1, 1, 1), {(0, 0, 0): 1}), (1,))


def matrix_algebra_category(n: int, obj: str = "x") -> PresentedCategory:
    """n x n matrix units e_ij with e_ij e_kl = delta(j,k) e_il."""
    return one_object_category(
        obj,
        tuple(f"e{i}{j}" for i in range(n) for j in range(n)),
        matrix_algebra(n).mult,
        matrix_algebra(n).unit)


# ---------------------------------------------------------------------------
# additive (Mat) completion


def mat_object_name(parts) -> str:
    return "[" + ",".join(parts) + "]"


def _mat_basis_name(pname: str, qname: str, i: int, j: int, b: str) -> str:
    return f"{pname}>{qname}:{i},{j}:{b}"


def mat_completion(cat: PresentedCategory, bound: int) -> PresentedCategory:
    """Objects become sequences of length <= bound, morphisms matrices.

    The empty sequence is kept as a zero object so additive identities
    exist.  Composition is block matrix composition over the base
    structure constants.
    """
    if bound < 1:
        raise ValueError(f"sequence bound {bound} must be >= 1")
    sequences = [()]
    for length in range(1, bound + 1):
        sequences.extend(itertools.product(cat.objects, repeat=length))
    names = {seq: mat_object_name(seq) for seq in sequences}

    hom = {}
    basis_home: dict[str, tuple[tuple, tuple, int, int, str]] = {}
    for pseq in sequences:
        for qseq in sequences:
            basis = []
            for i, qi in enumerate(qseq):
                for j, pj in enumerate(pseq):
                    for b in cat.hom(pj, qi):
                        name = _mat_basis_name(names[pseq], names[qseq],
                                               i, j, b)
                        basis.append(name)
                        basis_home[name] = (pseq, qseq, i, j, b)
            if basis:
                hom[(names[pseq], names[qseq])] = tuple(basis)

    compose = {}
    for vname, (qseq_v, rseq, k, l, b2) in basis_home.items():
        for uname, (pseq, qseq, i, j, b1) in basis_home.items():
            if qseq != qseq_v or l != i:
                continue
            combo = {}
            for h, c in cat.compose_basis(b2, b1).items():
                combo[_mat_basis_name(names[pseq], names[rseq], k, j, h)] = c
            if combo:
                compose[(vname, uname)] = combo

    identities = {}
    for seq in sequences:
        combo = {}
        for i, p in enumerate(seq):
            for b, c in cat.identity_coeffs(p).items():
                combo[_mat_basis_name(names[seq], names[seq], i, i, b)] = c
        identities[names[seq]] = combo

    return PresentedCategory(
        objects=tuple(names[s] for s in sequences),
        hom=hom, compose=compose, identities=identities)


# ---------------------------------------------------------------------------
# rational row reduction over hom coordinates


def _rref(vectors: list[tuple[Fraction, ...]]):
    """Reduced row echelon basis of the span; returns (rows, pivot columns)."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return [], []
    width = len(rows[0])
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for vec in rows:
        v = list(vec)
        for row, piv in zip(basis, pivots):
            if v[piv]:
                f = v[piv]
                v = [a - f * b for a, b in zip(v, row)]
        lead = next((c for c in range(width) if v[c]), None)
        if lead is None:
            continue
        v = [a / v[lead] for a in v]
        for idx, (row, piv) in enumerate(zip(basis, pivots)):
            if row[lead]:
                f = row[lead]
                basis[idx] = [a - f * b for a, b in zip(row, v)]
        basis.append(v)
        pivots.append(lead)
    order = sorted(range(len(pivots)), key=lambda s: pivots[s])
    return [basis[s] for s in order], [pivots[s] for s in order]


def _coords_in_rref(vec, basis_rows, pivots):
    coords = [vec[piv] for piv in pivots]
    rebuilt = [Fraction(0)] * len(vec)
    for c, row in zip(coords, basis_rows):
        if c:
            rebuilt = [a + c * b for a, b in zip(rebuilt, row)]
    if list(vec) != rebuilt:
        raise CategoryFormatError(
            "morphism escaped its carved-out hom subspace")
    return coords


# ---------------------------------------------------------------------------
# Karoubi (idempotent) completion


def karoubi_object_name(obj: str, coeffs) -> str:
    return f"{obj}(" + ",".join(str(rat(c)) for c in coeffs) + ")"


def karoubi_idempotents(cat: PresentedCategory, obj: str,
                        grid=DEFAULT_GRID) -> list[tuple[Fraction, ...]]:
    """All solutions of e . e = e with coefficients drawn from the grid."""
    basis = cat.hom(obj, obj)
    if not basis:
        return [tuple()]
    found = []
    for combo in itertools.product(sorted(grid), repeat=len(basis)):
        e = cat.morphism(obj, obj, dict(zip(basis, combo)))
        if cat.compose(e, e) == e:
            found.append(tuple(rat(c) for c in combo))
    return found


class KaroubiCategory(PresentedCategory):
    """A Karoubi completion that remembers where its objects came from.

    `pairs` lists the (base object, idempotent coefficients) pairs in
    object order; `embed` turns a base morphism satisfying the triple
    constraint e' . f = f = f . e into a morphism of the completion, and
    `base_morphism_of` goes the other way for basis elements.
    """

    def __init__(self, objects, hom, compose, identities, *, base, pairs,
                 names, carved):
        super().__init__(objects, hom, compose, identities)
        self.base = base
        self.pairs = tuple(pairs)
        self._pair_names = dict(names)
        self._carved = carved

    def object_of(self, pair) -> str:
        obj, coeffs = pair
        return self._pair_names[(obj, tuple(rat(c) for c in coeffs))]

    def base_morphism_of(self, basis_name: str) -> Morphism:
        src, dst, k = self._carved["data"][basis_name]
        base_names, rows, _ = self._carved[(src, dst)]
        return self.base.morphism(src[0], dst[0],
                                  dict(zip(base_names, rows[k])))

    def embed(self, src_pair, dst_pair, f: Morphism) -> Morphism:
        """The triple (e', f, e) as a morphism of the completion."""
        src = (src_pair[0], tuple(rat(c) for c in src_pair[1]))
        dst = (dst_pair[0], tuple(rat(c) for c in dst_pair[1]))
        e = self.base.morphism(
            src[0], src[0], dict(zip(self.base.hom(src[0], src[0]), src[1])))
        e2 = self.base.morphism(
            dst[0], dst[0], dict(zip(self.base.hom(dst[0], dst[0]), dst[1])))
        if self.base.compose(e2, f) != f or self.base.compose(f, e) != f:
            raise CategoryFormatError(
                "morphism does not satisfy the triple constraint "
                "e'.f = f = f.e")
        base_names, rows, pivots = self._carved[(src, dst)]
        vec = tuple(f.coeffs.get(name, Fraction(0)) for name in base_names)
        coords = _coords_in_rref(vec, rows, pivots)
        combo = {f"{self._pair_names[src]}>{self._pair_names[dst]}:{k}": c
                 for k, c in enumerate(coords) if c}
        return Morphism(self._pair_names[src], self._pair_names[dst], combo)


def karoubi_completion(cat: PresentedCategory, grid=DEFAULT_GRID,
                       idempotents=None) -> KaroubiCategory:
    """Split idempotents: objects (p, e), morphisms triples (e', f, e).

    The objects are the solutions of e . e = e found on a finite
    coefficient grid (or an explicitly supplied list, each entry checked
    exactly, rejected with its residual).  hom((p,e),(q,f)) is the
    subspace f . hom(p,q) . e with a canonical row-reduced basis, the
    composition is (e'', f', e')(e', f, e) = (e'', f'f, e), and the
    identity of (p, e) is the triple (e, e, e).
    """
    pairs: list[tuple[str, tuple[Fraction, ...]]] = []
    if idempotents is not None:
        for obj, coeffs in idempotents:
            e = cat.morphism(obj, obj,
                             dict(zip(cat.hom(obj, obj), coeffs)))
            square = cat.compose(e, e)
            if square != e:
                residual = {k: square.coeffs.get(k, Fraction(0))
                            - e.coeffs.get(k, Fraction(0))
                            for k in set(square.coeffs) | set(e.coeffs)}
                raise CategoryFormatError(
                    f"supplied element on {obj} is not idempotent; "
                    f"e.e - e = {_clean(residual)}")
            pairs.append((obj, tuple(rat(c) for c in coeffs)))
    else:
        for obj in cat.objects:
            for coeffs in karoubi_idempotents(cat, obj, grid):
                pairs.append((obj, coeffs))

    names = {pair: karoubi_object_name(*pair) for pair in pairs}
    idem_morphisms = {
        pair: cat.morphism(pair[0],
                           pair[0],
                           dict(zip(cat.hom(pair[0], pair[0]), pair[1])))
        for pair in pairs}

    # carve out hom((p,e),(q,f)) = f . hom(p,q) . e with an rref basis
    hom = {}
    basis_data = {}
    carved = {}
    for src in pairs:
        for dst in pairs:
            base = cat.hom(src[0], dst[0])
            if not base:
                continue
            e, f = idem_morphisms[src], idem_morphisms[dst]
            images = []
            for b in base:
                m = cat.compose(f, cat.compose(cat.basis_morphism(b), e))
                images.append(tuple(m.coeffs.get(name, Fraction(0))
                                    for name in base))
            rows, pivots = _rref(images)
            carved[(src, dst)] = (base, rows, pivots)
            if not rows:
                continue
            basis = []
            for k in range(len(rows)):
                name = f"{names[src]}>{names[dst]}:{k}"
                basis.append(name)
                basis_data[name] = (src, dst, k)
            hom[(names[src], names[dst])] = tuple(basis)

    def to_base(src, dst, k) -> Morphism:
        base, rows, _ = carved[(src, dst)]
        return cat.morphism(src[0], dst[0],
                            dict(zip(base, rows[k])))

    def express(src, dst, m: Morphism) -> dict[str, Fraction]:
        if (src, dst) not in carved:
            if not m.is_zero():
                raise CategoryFormatError(
                    "nonzero morphism between objects with empty hom")
            return {}
        base, rows, pivots = carved[(src, dst)]
        vec = tuple(m.coeffs.get(name, Fraction(0)) for name in base)
        coords = _coords_in_rref(vec, rows, pivots)
        out = {}
        for k, c in enumerate(coords):
            if c:
                out[f"{names[src]}>{names[dst]}:{k}"] = c
        return out

    compose = {}
    for vname, (mid_v, dst, kv) in basis_data.items():
        for uname, (src, mid, ku) in basis_data.items():
            if mid != mid_v:
                continue
            product = cat.compose(to_base(mid, dst, kv), to_base(src, mid, ku))
            combo = express(src, dst, product)
            if combo:
                compose[(vname, uname)] = combo

    identities = {}
    for pair in pairs:
        e = idem_morphisms[pair]
        if (pair, pair) in carved:
            identities[names[pair]] = express(pair, pair, e)
        else:
            identities[names[pair]] = {}

    carved["data"] = basis_data
    return KaroubiCategory(
        objects=tuple(names[p] for p in pairs),
        hom=hom, compose=compose, identities=identities,
        base=cat, pairs=pairs, names=names, carved=carved)


# ---------------------------------------------------------------------------
# tensor product of categories


def tensor_product(a: PresentedCategory,
                   b: PresentedCategory) -> PresentedCategory:
    """Object pairs, hom bases pairs, (f (x) f')(g (x) g') = fg (x) f'g'."""
    obj_name = {}
    for p in a.objects:
        for q in b.objects:
            obj_name[(p, q)] = f"({p},{q})"

    hom = {}
    pair_name = {}
    for (p1, q1), basis1 in a.hom_pairs():
        for (p2, q2), basis2 in b.hom_pairs():
            basis = []
            for f1 in basis1:
                for f2 in basis2:
                    name = f"({f1}|{f2})"
                    pair_name[(f1, f2)] = name
                    basis.append(name)
            hom[(obj_name[(p1, p2)], obj_name[(q1, q2)])] = tuple(basis)

    compose = {}
    for (g1, f1), combo1 in a.table_items():
        for (g2, f2), combo2 in b.table_items():
            combo = {}
            for h1, c1 in combo1.items():
                for h2, c2 in combo2.items():
                    combo[pair_name[(h1, h2)]] = c1 * c2
            compose[(pair_name[(g1, g2)], pair_name[(f1, f2)])] = combo

    identities = {}
    for p in a.objects:
        for q in b.objects:
            combo = {}
            for b1, c1 in a.identity_coeffs(p).items():
                for b2, c2 in b.identity_coeffs(q).items():
                    combo[pair_name[(b1, b2)]] = c1 * c2
            identities[obj_name[(p, q)]] = combo

    return PresentedCategory(
        objects=tuple(obj_name[(p, q)] for p in a.objects
                      for q in b.objects),
        hom=hom, compose=compose, identities=identities)


# ---------------------------------------------------------------------------
# desk-scale equivalence helpers


def character_vector(cat: PresentedCategory, obj: str) -> tuple:
    """Traces of right composition by every endo basis element on hom(-, obj).

    Two objects of a semisimple presented category are isomorphic
    exactly when their character vectors agree; this is the desk-scale
    stand-in for an isomorphism search.
    """
    values = []
    for q in cat.objects:
        target = cat.hom(q, obj)
        for b in cat.hom(q, q):
            trace = Fraction(0)
            for m in target:
                composite = cat.compose(cat.basis_morphism(m),
                                        cat.basis_morphism(b))
                trace += composite.coeffs.get(m, Fraction(0))
            values.append(trace)
    return tuple(values)


def iso_classes(cat: PresentedCategory, objects=None) -> list[list[str]]:
    """Group objects by character vector (exact for semisimple categories)."""
    groups: dict[tuple, list[str]] = {}
    for obj in (objects if objects is not None else cat.objects):
        groups.setdefault(character_vector(cat, obj), []).append(obj)
    return [groups[k] for k in sorted(groups)]


def indecomposable_objects(cat: PresentedCategory,
                           grid=DEFAULT_GRID) -> list[str]:
    """Nonzero objects with no proper grid idempotent in their endo algebra."""
    out = []
    for obj in cat.objects:
        ident = cat.identity(obj)
        if ident.is_zero():
            continue
        proper = False
        for coeffs in karoubi_idempotents(cat, obj, grid):
            e = cat.morphism(obj, obj,
                             dict(zip(cat.hom(obj, obj), coeffs)))
            if not e.is_zero() and e != ident:
                proper = True
                break
        if not proper:
            out.append(obj)
    return out


# ---------------------------------------------------------------------------
# algebras (one-object categories)


@dataclass(frozen=True)
class Algebra:
    """Finite dimensional unital algebra by structure constants.

    ``mult[i][j][k]`` is the coefficient of e_k in e_i e_j.
    """

    names: tuple[str, ...]
    mult: Tensor3
    unit: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.names)
        if self.mult.dims != (n, n, n):
            raise ValueError(
                f"multiplication tensor dims {self.mult.dims} for "
                f"dimension {n}")
        object.__setattr__(self, "unit", tuple(rat(x) for x in self.unit))
        if len(self.unit) != n:
            raise ValueError("unit vector length mismatch")

    @property
    def dim(self) -> int:
        return len(self.names)

    @classmethod
    def from_category(cls, cat: PresentedCategory) -> "Algebra":
        if len(cat.objects) != 1:
            raise ValueError("an algebra is a category with one object")
        obj = cat.objects[0]
        basis = cat.hom(obj, obj)
        index = {b: i for i, b in enumerate(basis)}
        n = len(basis)
        data = {}
        for i, g in enumerate(basis):
            for j, f in enumerate(basis):
                for h, c in cat.compose_basis(g, f).items():
                    data[(i, j, index[h])] = c
        ident = cat.identity_coeffs(obj)
        return cls(names=basis,
                   mult=Tensor3.from_dict((n, n, n), data),
                   unit=tuple(ident.get(b, Fraction(0)) for b in basis))

    def to_category(self, obj: str = "x") -> PresentedCategory:
        return one_object_category(obj, self.names, self.mult, self.unit)

    def left_multiplication(self, i: int) -> Matrix:
        """Matrix of x -> e_i x in the chosen basis."""
        n = self.dim
        return Matrix([[self.mult[i, j, k] for j in range(n)]
                       for k in range(n)])


def trace_form_semisimple(algebra: Algebra) -> tuple[bool, Matrix]:
    """Gram matrix T[i][j] = trace(L_i L_j); semisimple iff full rank.

    Valid over characteristic zero, which is all this package supports.
    """
    n = algebra.dim
    gram = Matrix(
        [[sum(algebra.mult[i, c, b] * algebra.mult[j, b, c]
              for b in range(n) for c in range(n))
          for j in range(n)] for i in range(n)])
    return gram.rank() == n, gram


def verify_separability_idempotent(algebra: Algebra, e: Matrix) -> Report:
    """Check a candidate separability idempotent e in A (x) A^op.

    e is given by its coefficient matrix over basis pairs; the checks
    are (i) the multiplication map sends e to 1 and (ii) r.e = e.r for
    every basis element r, acting through the two-sided bimodule
    structure.  Exact equalities; failures are listed.
    """
    report = Report("separability idempotent")
    n = algebra.dim
    if e.shape != (n, n):
        report.fail(f"coefficient matrix is {e.shape}, expected {(n, n)}")
        return report

    mu = [Fraction(0)] * n
    for i in range(n):
        for j in range(n):
            if not e[i, j]:
                continue
            for k in range(n):
                c = algebra.mult[i, j, k]
                if c:
                    mu[k] += e[i, j] * c
    if tuple(mu) != algebra.unit:
        report.fail(f"multiplication map sends e to {tuple(mu)}, "
                    f"expected the unit {algebra.unit}")

    for r in range(n):
        for c in range(n):
            for d in range(n):
                left = sum(algebra.mult[r, a, c] * e[a, d] for a in range(n))
                right = sum(e[c, b] * algebra.mult[b, r, d] for b in range(n))
                if left != right:
                    report.fail(
                        f"e does not commute with basis element {r}: "
                        f"component ({c},{d}) gives {left} != {right}")
    return report


# ---------------------------------------------------------------------------
# stock algebras and their separability idempotents


def field_algebra() -> Algebra:
    return Algebra(("1",), Tensor3.from_dict((1, 1, 1), {(0, 0, 0): 1}), (1,))


def product_field_algebra(n: int) -> Algebra:
    """k^n with componentwise multiplication."""
    data = {(i, i, i): 1 for i in range(n)}
    return Algebra(tuple(f"e{i}" for i in range(n)),
                   Tensor3.from_dict((n, n, n), data),
                   tuple(Fraction(1) for _ in range(n)))


def cyclic_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def group_algebra(table: list[list[int]],
                  names: tuple[str, ...] = ()) -> Algebra:
    """Group algebra from a Cayley table table[i][j] = index of g_i g_j."""
    n = len(table)
    identity = next(i for i in range(n)
                    if all(table[i][j] == j and table[j][i] == j
                           for j in range(n)))
    data = {(i, j, table[i][j]): 1 for i in range(n) for j in range(n)}
    return Algebra(names or tuple(f"g{i}" for i in range(n)),
                   Tensor3.from_dict((n, n, n), data),
                   tuple(Fraction(int(i == identity)) for i in range(n)))


def matrix_algebra(n: int) -> Algebra:
    """Matrix units e_ij, flattened row-major."""
    def idx(i, j):
        return i * n + j

    data = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        data[(idx(i, j), idx(k, l), idx(i, l))] = 1
    unit = [Fraction(0)] * (n * n)
    for i in range(n):
        unit[idx(i, i)] = Fraction(1)
    return Algebra(tuple(f"e{i}{j}" for i in range(n) for j in range(n)),
                   Tensor3.from_dict((n * n, n * n, n * n), data),
                   tuple(unit))


def dual_numbers_algebra() -> Algebra:
    """k[x]/(x^2): the smallest algebra with a nonzero nilpotent."""
    data = {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}
    return Algebra(("1", "x"), Tensor3.from_dict((2, 2, 2), data),
                   (Fraction(1), Fraction(0)))


def group_separability_idempotent(table: list[list[int]]) -> Matrix:
    """(1/|G|) sum_g g (x) g^{-1}; needs |G| invertible, always true here."""
    n = len(table)
    identity = next(i for i in range(n)
                    if all(table[i][j] == j for j in range(n)))
    inverse = {i: next(j for j in range(n) if table[i][j] == identity)
               for i in range(n)}
    coeff = Fraction(1, n)
    rows = [[coeff if inverse[i] == j else Fraction(0) for j in range(n)]
            for i in range(n)]
    return Matrix(rows)


def matrix_separability_idempotent(n: int) -> Matrix:
    """(1/n) sum_{ij} e_ij (x) e_ji for the n x n matrix algebra.

    The 1/n normalisation is what makes the multiplication map send the
    element to 1; without it the image is n times the identity.
    """
    def idx(i, j):
        return i * n + j

    rows = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            rows[idx(i, j)][idx(j, i)] = Fraction(1, n)
    return Matrix(rows)


def product_field_separability_idempotent(n: int) -> Matrix:
    """sum_i e_i (x) e_i for k^n."""
    return Matrix.identity(n)
