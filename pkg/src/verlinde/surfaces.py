"""Coloured-surface dimension counts, twist data, and the modular report.

A coloured surface is a connected oriented surface of genus g whose
boundary circles carry labels of a fusion ring (all boundary incoming;
an outgoing circle of colour a is recorded as incoming dual(a)).  The
dimension assigned to it is the multiplicity of the unit in the total
fusion product

    Q_{s1} * ... * Q_{sm} * w^g,   w = sum_a Q_{dual(a)} * Q_a,

summed over unit components.  The gluing law, invariance under
reordering, and the disjoint-union product law are then theorems about
valid rings, checked empirically by `verify_gluing_consistency`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fusion import (FusionRing, block_decomposition, multiply,
                     restrict_to_labels, verify_axioms)
from .report import Report

__all__ = [
    "ColouredSurface",
    "Twist",
    "TwistData",
    "TwistFormatError",
    "BlockSummary",
    "SurfaceEntry",
    "ModularReport",
    "dim_V",
    "dim_V_disjoint",
    "handle_vector",
    "verify_gluing_consistency",
    "check_nontriviality",
    "validate_twists",
    "modular_report",
    "render_report_text",
    "render_report_machine",
]


@dataclass(frozen=True)
class ColouredSurface:
    """Genus plus boundary colouring; empty boundary means a closed surface."""

    genus: int
    boundary: tuple[int, ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"negative genus {self.genus}")
        object.__setattr__(self, "boundary", tuple(self.boundary))


def _check_labels(ring: FusionRing, surface: ColouredSurface) -> None:
    for a in surface.boundary:
        if not 0 <= a < ring.rank:
            raise ValueError(
                f"boundary colour {a} out of range for rank {ring.rank}")


@lru_cache(maxsize=None)
def handle_vector(ring: FusionRing) -> tuple[int, ...]:
    """The genus-adding vector: sum over labels of Q_dual(a) * Q_a."""
    total = [0] * ring.rank
    for a in range(ring.rank):
        row = multiply(ring, ring.basis_vector(ring.dual[a]),
                       ring.basis_vector(a))
        total = [t + r for t, r in zip(total, row)]
    return tuple(total)


def _unit_multiplicity(ring: FusionRing, vec) -> int:
    return sum(vec[b] for b in ring.unit)


@lru_cache(maxsize=None)
def _dim_closed_over(ring: FusionRing, genus: int,
                     colours: tuple[int, ...]) -> int:
    vec = ring.unit_vector()
    for a in colours:
        vec = multiply(ring, vec, ring.basis_vector(a))
    handle = handle_vector(ring)
    for _ in range(genus):
        vec = multiply(ring, vec, handle)
    return _unit_multiplicity(ring, vec)


def dim_V(ring: FusionRing, surface: ColouredSurface) -> int:
    """Dimension of the space attached to a coloured surface.

    Assumes the ring passes `verify_axioms`; the boundary order is
    immaterial for valid rings, so results are memoised per sorted
    colour multiset.
    """
    _check_labels(ring, surface)
    return _dim_closed_over(ring, surface.genus,
                            tuple(sorted(surface.boundary)))


def dim_V_disjoint(ring: FusionRing, surfaces) -> int:
    """Dimension for a disjoint union of surfaces: the product of parts."""
    return math.prod(dim_V(ring, s) for s in surfaces)


def check_nontriviality(ring: FusionRing) -> bool:
    """Whether the sphere space is nonzero: some unit component is self-dual."""
    return any(ring.dual[b] in ring.unit for b in ring.unit)


def sphere_dim(ring: FusionRing) -> int:
    """Dimension attached to the sphere: pairings among unit components."""
    return sum(1 for b in ring.unit for c in ring.unit if ring.dual[b] == c)


# ---------------------------------------------------------------------------
# gluing consistency


def _eval_in_order(ring: FusionRing, genus: int, colours) -> int:
    """Fold the colours strictly in the given order, then the handles."""
    vec = ring.unit_vector()
    for a in colours:
        vec = multiply(ring, vec, ring.basis_vector(a))
    handle = handle_vector(ring)
    for _ in range(genus):
        vec = multiply(ring, vec, handle)
    return _unit_multiplicity(ring, vec)


def _eval_by_gluing(ring: FusionRing, genus: int, colours: tuple[int, ...],
                    rng: random.Random) -> int:
    """Genus reduction with randomly chosen insertion positions."""
    if genus == 0:
        return _eval_in_order(ring, 0, colours)
    pos = rng.randrange(len(colours) + 1)
    total = 0
    for a in range(ring.rank):
        inserted = colours[:pos] + (ring.dual[a], a) + colours[pos:]
        total += _eval_by_gluing(ring, genus - 1, inserted, rng)
    return total


def _eval_by_capping(ring: FusionRing, genus: int, colours: tuple[int, ...],
                     cap_index: int) -> int:
    """Pair one boundary colour against the rest through the involution.

    Uses the duality of the pairing rather than the unit multiplicity,
    so it disagrees with the direct evaluation precisely when the
    Frobenius symmetry is broken.
    """
    capped = colours[cap_index]
    rest = colours[:cap_index] + colours[cap_index + 1:]
    vec = ring.unit_vector()
    for a in rest:
        vec = multiply(ring, vec, ring.basis_vector(a))
    handle = handle_vector(ring)
    for _ in range(genus):
        vec = multiply(ring, vec, handle)
    return vec[ring.dual[capped]]


def verify_gluing_consistency(ring: FusionRing, surface: ColouredSurface,
                              trials: int = 8, seed: int = 0) -> Report:
    """Re-evaluate dim_V along several distinct recursion orders.

    Checked against the canonical value: boundary reorderings, genus
    reductions with varying insertion positions, capping off single
    boundary colours through the involution, and random two-part splits
    glued back along one circle (the disjoint-union law combined with
    one gluing).  Any disagreement indicates a fusion-axiom failure
    upstream and is reported with both values.
    """
    _check_labels(ring, surface)
    report = Report("gluing consistency")
    rng = random.Random(seed)
    genus, colours = surface.genus, tuple(surface.boundary)
    reference = _eval_in_order(ring, genus, colours)

    for t in range(trials):
        shuffled = list(colours)
        rng.shuffle(shuffled)
        got = _eval_in_order(ring, genus, tuple(shuffled))
        if got != reference:
            report.fail(
                f"boundary order {tuple(shuffled)} gives {got}, "
                f"canonical order gives {reference}")

    if genus > 0:
        for t in range(trials):
            got = _eval_by_gluing(ring, genus, colours, rng)
            if got != reference:
                report.fail(
                    f"genus-reduction schedule {t} gives {got}, "
                    f"direct evaluation gives {reference}")

    for k in range(len(colours)):
        got = _eval_by_capping(ring, genus, colours, k)
        if got != reference:
            report.fail(
                f"capping boundary {k} (colour {colours[k]}) gives {got}, "
                f"direct evaluation gives {reference}")

    for t in range(trials):
        g1 = rng.randint(0, genus)
        keep = [rng.random() < 0.5 for _ in colours]
        s1 = tuple(c for c, k in zip(colours, keep) if k)
        s2 = tuple(c for c, k in zip(colours, keep) if not k)
        glued = 0
        for a in range(ring.rank):
            glued += (_eval_in_order(ring, g1, s1 + (ring.dual[a],))
                      * _eval_in_order(ring, genus - g1, s2 + (a,)))
        if glued != reference:
            report.fail(
                f"split (genus {g1}+{genus - g1}, boundaries {s1}|{s2}) "
                f"glued along one circle gives {glued}, direct evaluation "
                f"gives {reference}")
    return report


# ---------------------------------------------------------------------------
# twist data


class TwistFormatError(ValueError):
    """Malformed twist value (zero scalar or bad root-of-unity token)."""


@dataclass(frozen=True)
class Twist:
    """An exact twist scalar: a nonzero rational or a root of unity.

    Roots of unity are opaque tokens exp(2*pi*i * exponent/order),
    canonicalised so equality is decidable: the fraction exponent/order
    is reduced, and the real cases (1 and -1) collapse to rationals.
    """

    rational: Fraction | None = None
    order: int = 0
    exponent: int = 0

    @classmethod
    def one(cls) -> "Twist":
        return cls.from_rational(Fraction(1))

    @classmethod
    def from_rational(cls, value: Fraction) -> "Twist":
        if value == 0:
            raise TwistFormatError("twist scalar must be nonzero")
        return cls(rational=Fraction(value))

    @classmethod
    def root_of_unity(cls, order: int, exponent: int) -> "Twist":
        if order <= 0:
            raise TwistFormatError(f"root-of-unity order {order} must be >= 1")
        exponent %= order
        g = math.gcd(exponent, order) or order
        order, exponent = order // g, exponent // g
        if exponent == 0:
            return cls.from_rational(Fraction(1))
        if (order, exponent) == (2, 1):
            return cls.from_rational(Fraction(-1))
        return cls(rational=None, order=order, exponent=exponent)

    def is_one(self) -> bool:
        return self.rational == 1


@dataclass(frozen=True)
class TwistData:
    """One twist scalar per label; unlisted labels default to 1."""

    values: tuple[Twist, ...]

    @classmethod
    def from_mapping(cls, rank: int, mapping: dict[int, Twist]) -> "TwistData":
        for a in mapping:
            if not 0 <= a < rank:
                raise ValueError(f"twist label {a} out of range for {rank}")
        return cls(tuple(mapping.get(a, Twist.one()) for a in range(rank)))


def validate_twists(ring: FusionRing, twists: TwistData) -> Report:
    """Check the two paper constraints: units twist by 1, duals twist alike."""
    report = Report("twist data")
    if len(twists.values) != ring.rank:
        report.fail(
            f"{len(twists.values)} twist values for rank {ring.rank}")
        return report
    for b in ring.unit:
        if not twists.values[b].is_one():
            report.fail(
                f"unit component {b} has twist {twists.values[b]} != 1")
    for a in range(ring.rank):
        if twists.values[a] != twists.values[ring.dual[a]]:
            report.fail(
                f"twist of {a} is {twists.values[a]} but its dual "
                f"{ring.dual[a]} has {twists.values[ring.dual[a]]}")
    return report


# ---------------------------------------------------------------------------
# the modular report


@dataclass(frozen=True)
class BlockSummary:
    labels: tuple[int, ...]
    unit_component: int
    nontrivial: bool
    torus_dim: int


@dataclass(frozen=True)
class SurfaceEntry:
    name: str
    surface: ColouredSurface
    total: int
    per_block: tuple[int, ...]


@dataclass(frozen=True)
class ModularReport:
    rank: int
    r: int
    blocks: tuple[BlockSummary, ...]
    functor_count: int
    torus_dim: int
    surfaces: tuple[SurfaceEntry, ...]
    twist_report: Report | None
    axiom_report: Report


def modular_report(ring: FusionRing, twists: TwistData | None = None,
                   surfaces: dict[str, ColouredSurface] | None = None
                   ) -> ModularReport:
    """Assemble the block structure, non-triviality, and dimension table.

    The theory is a direct product over unit-component blocks, so
    dimensions are reported per block; the total over the whole ring is
    their sum.  The number of modular functors the ring determines is
    the number of non-trivial blocks (equivalently the sphere
    dimension).
    """
    axiom_report = verify_axioms(ring)
    blocks_raw = block_decomposition(ring)
    subrings = [restrict_to_labels(ring, block) for block in blocks_raw]

    summaries = []
    for block, sub, beta in zip(blocks_raw, subrings, ring.unit):
        summaries.append(BlockSummary(
            labels=tuple(block),
            unit_component=beta,
            nontrivial=check_nontriviality(sub),
            torus_dim=dim_V(sub, ColouredSurface(1))))

    entries = []
    for name in sorted(surfaces or {}):
        surf = (surfaces or {})[name]
        per_block = []
        for block, sub in zip(blocks_raw, subrings):
            if all(c in block for c in surf.boundary):
                relabel = {a: i for i, a in enumerate(block)}
                local = ColouredSurface(
                    surf.genus, tuple(relabel[c] for c in surf.boundary))
                per_block.append(dim_V(sub, local))
            else:
                per_block.append(0)
        entries.append(SurfaceEntry(
            name=name, surface=surf,
            total=dim_V(ring, surf), per_block=tuple(per_block)))

    return ModularReport(
        rank=ring.rank,
        r=len(ring.unit),
        blocks=tuple(summaries),
        functor_count=sum(1 for s in summaries if s.nontrivial),
        torus_dim=dim_V(ring, ColouredSurface(1)),
        surfaces=tuple(entries),
        twist_report=(validate_twists(ring, twists)
                      if twists is not None else None),
        axiom_report=axiom_report)


def _twist_str(t: Twist) -> str:
    if t.rational is not None:
        return str(t.rational)
    return f"zeta({t.order},{t.exponent})"


def render_report_text(rep: ModularReport) -> str:
    lines = [f"fusion ring of rank {rep.rank} with {rep.r} unit component(s)"]
    lines.append(rep.axiom_report.render())
    for i, b in enumerate(rep.blocks):
        state = "non-trivial" if b.nontrivial else "trivial"
        labels = " ".join(str(a) for a in b.labels)
        lines.append(
            f"block {i}: unit {b.unit_component}, labels {{{labels}}}, "
            f"{state}, torus dim {b.torus_dim}")
    lines.append(f"torus dim (whole ring) = {rep.torus_dim}")
    lines.append(f"modular functors determined = {rep.functor_count}")
    for e in rep.surfaces:
        per = " ".join(str(d) for d in e.per_block)
        boundary = "".join(f" {c}" for c in e.surface.boundary)
        lines.append(
            f"dim V({e.name}: genus {e.surface.genus} "
            f"boundary{boundary}) = {e.total} (per block: {per})")
    if rep.twist_report is not None:
        lines.append(rep.twist_report.render())
    return "\n".join(lines)


def render_report_machine(rep: ModularReport) -> str:
    lines = [
        f"ring.rank = {rep.rank}",
        f"ring.unit_components = {rep.r}",
        f"ring.axioms_ok = {str(rep.axiom_report.ok).lower()}",
    ]
    for i, b in enumerate(rep.blocks):
        labels = " ".join(str(a) for a in b.labels)
        lines.append(f"block.{i}.labels = {labels}")
        lines.append(f"block.{i}.unit = {b.unit_component}")
        lines.append(f"block.{i}.nontrivial = {str(b.nontrivial).lower()}")
        lines.append(f"block.{i}.torus_dim = {b.torus_dim}")
    lines.append(f"torus_dim = {rep.torus_dim}")
    lines.append(f"functors = {rep.functor_count}")
    for e in rep.surfaces:
        lines.append(f"surface.{e.name}.dim = {e.total}")
        per = " ".join(str(d) for d in e.per_block)
        lines.append(f"surface.{e.name}.per_block = {per}")
    if rep.twist_report is not None:
        lines.append(f"twists_ok = {str(rep.twist_report.ok).lower()}")
    return "\n".join(lines)
