"""Independent brute-force oracles the library is tested against.

Nothing here reuses the library's evaluation paths: surface dimensions
are recomputed by naive convolution (and, for tiny cases, by literally
expanding the product as a multiset of labels), and representation-ring
coefficients come from character-table inner products.
"""

from __future__ import annotations

from fractions import Fraction

from verlinde.exact import Tensor3
from verlinde.fusion import FusionRing


def _mult_label(ring: FusionRing, counts: dict[int, int],
                label: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for a, m in counts.items():
        for c in range(ring.rank):
            k = ring.n(a, label, c)
            if k:
                out[c] = out.get(c, 0) + m * k
    return out


def brute_force_dim(ring: FusionRing, genus: int, colours) -> int:
    """Unit multiplicity of the total product, by dictionary convolution."""
    counts = {b: 1 for b in ring.unit}
    for colour in colours:
        counts = _mult_label(ring, counts, colour)
    for _ in range(genus):
        acc: dict[int, int] = {}
        for a in range(ring.rank):
            piece = _mult_label(ring, _mult_label(ring, counts,
                                                  ring.dual[a]), a)
            for c, m in piece.items():
                acc[c] = acc.get(c, 0) + m
        counts = acc
    return sum(counts.get(b, 0) for b in ring.unit)


def list_expansion_dim(ring: FusionRing, genus: int, colours) -> int:
    """Same number by expanding the product as a literal list of labels.

    Exponential; keep to rank <= 3, genus <= 2, few colours.
    """
    def append(states: list[int], label: int) -> list[int]:
        out = []
        for a in states:
            for c in range(ring.rank):
                out.extend([c] * ring.n(a, label, c))
        return out

    states = list(ring.unit)
    for colour in colours:
        states = append(states, colour)
    for _ in range(genus):
        new_states: list[int] = []
        for a in range(ring.rank):
            new_states.extend(append(append(states, ring.dual[a]), a))
        states = new_states
    return sum(1 for a in states if a in ring.unit)


# ---------------------------------------------------------------------------
# character-theoretic representation-ring oracle (rational tables only)


def fusion_from_characters(class_sizes, table, names) -> FusionRing:
    """Representation ring from a rational character table.

    `table[a][k]` is the character of irreducible a on conjugacy class
    k.  The hand-entered table is self-validated through the
    orthogonality relations before any coefficient is produced, and the
    tensor-product multiplicities come from the inner product
    (1/|G|) sum_k |class_k| chi_a chi_b chi_c.
    """
    order = sum(class_sizes)
    n = len(table)
    for a in range(n):
        for b in range(n):
            inner = Fraction(sum(s * table[a][k] * table[b][k]
                                 for k, s in enumerate(class_sizes)), order)
            if inner != int(a == b):
                raise ValueError(
                    f"character table fails orthogonality at ({a},{b})")
    if sum(row[0] ** 2 for row in table) != order:
        raise ValueError("character degrees do not sum to the group order")

    data = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                m = Fraction(sum(s * table[a][k] * table[b][k] * table[c][k]
                                 for k, s in enumerate(class_sizes)), order)
                if m.denominator != 1 or m < 0:
                    raise ValueError(
                        f"non-integral multiplicity at ({a},{b},{c})")
                if m:
                    data[(a, b, c)] = int(m)
    return FusionRing(dual=tuple(range(n)), unit=(0,),
                      coeffs=Tensor3.from_dict((n, n, n), data),
                      names=tuple(names))


S3_CLASS_SIZES = (1, 3, 2)
S3_CHARACTER_TABLE = (
    (1, 1, 1),    # trivial
    (1, -1, 1),   # sign
    (2, 0, -1),   # standard
)
Z2_CLASS_SIZES = (1, 1)
Z2_CHARACTER_TABLE = ((1, 1), (1, -1))


def s3_cayley_table() -> list[list[int]]:
    """Composition table of all permutations of three points."""
    from itertools import permutations

    elems = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(elems)}

    def compose(p, q):
        return tuple(p[q[i]] for i in range(3))

    return [[index[compose(p, q)] for q in elems] for p in elems]
