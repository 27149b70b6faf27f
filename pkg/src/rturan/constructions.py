"""Extremal proper colorings and the bound table.

bipartite_f2k(k) colors K_{2^k,2^k} by labeling both sides with the 2^k
bit-vectors of length k and coloring the edge uv with the vector u xor v.
Along any path the colors telescope: their xor equals the xor of the two
endpoint labels, and a path with an even number of edges has both endpoints
on one side while using each of the 2^k colors at most once, so a rainbow
path through all 2^k colors would force endpoint labels equal to each other
xor'd with zero difference. That kills every rainbow path of length 2^k.

maamoun_meyniel(k) colors the complete graph on the 2^k bit-vectors the same
way (colors are the nonzero vectors, each class a perfect matching); it has
no rainbow path using all 2^k - 1 colors.

Both need k >= 2: at k < 2 the parity/zero-sum argument has no room (a
single color, or none).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .graphs import ColoredGraph, disjoint_union

@dataclass(frozen=True)
class VectorLabel:
    """A length-k bit-vector label, stored as the integer of its bits."""

    k: int
    bits: int

    def __post_init__(self):
        if not (0 <= self.bits < (1 << self.k)):
            raise PreconditionError(f"label {self.bits} needs more than {self.k} bits")

    def __xor__(self, other: "VectorLabel") -> "VectorLabel":
        if self.k != other.k:
            raise PreconditionError("xor of labels of different lengths")
        return VectorLabel(self.k, self.bits ^ other.bits)


def f2k_label(k: int, vertex: int) -> VectorLabel:
    """Label of a bipartite_f2k(k) vertex (both sides repeat the same labels)."""
    return VectorLabel(k, vertex & ((1 << k) - 1))


def bipartite_f2k(k: int) -> ColoredGraph:
    """K_{2^k,2^k} with c(uv) = label(u) xor label(v); 2^k colors.

    Side 0 is vertices 0..2^k-1 (label = id), side 1 is 2^k..2^{k+1}-1
    (label = id - 2^k).
    """
    if k < 2:
        raise PreconditionError("needs k >= 2; below that there is no zero-sum structure")
    q = 1 << k
    edges = [(u, q + w, u ^ w) for u in range(q) for w in range(q)]
    return ColoredGraph.from_edges(2 * q, edges, num_colors=q,
                                   sides=tuple([0] * q + [1] * q))


def maamoun_meyniel(k: int) -> ColoredGraph:
    """K_{2^k} on the bit-vectors with c(uv) = (u xor v) - 1; 2^k - 1 colors,
    each color class a perfect matching."""
    if k < 2:
        raise PreconditionError("needs k >= 2; below that there is no zero-sum structure")
    q = 1 << k
    edges = [(u, v, (u ^ v) - 1) for u in range(q) for v in range(u + 1, q)]
    return ColoredGraph.from_edges(q, edges, num_colors=q - 1)


def lower_bound_edges(k: int, n: int) -> int:
    """Edges of the densest disjoint packing of bipartite_f2k(k) copies into
    n vertices: 4^k * floor(n / 2^{k+1})."""
    if k < 2:
        raise PreconditionError("needs k >= 2")
    if n < 0:
        raise PreconditionError("needs n >= 0")
    return (4 ** k) * (n // (2 ** (k + 1)))


def blowup(k: int, n: int) -> ColoredGraph:
    """floor(n / 2^{k+1}) disjoint copies of bipartite_f2k(k), sharing one
    palette, padded with isolated vertices up to exactly n."""
    base = bipartite_f2k(k)
    copies = n // base.n
    g = disjoint_union([base] * copies, share_colors=True)
    if g.n < n:
        pad_sides = None
        if g.sides is not None:
            pad_sides = g.sides + tuple([0] * (n - g.n))
        g = ColoredGraph(n, g.edges, g.num_colors, pad_sides)
    return g


@dataclass(frozen=True)
class BoundTableRow:
    """Per-edge coefficients for graphs whose longest rainbow path has at
    most k edges: the packing lower bound, the rotation upper bound 9k/7 + 2,
    the older ceil((3k+1)/2) upper bound, and the uncolored baseline k/2."""

    k: int
    lower: Fraction
    upper_new: Fraction
    upper_old: int
    eg_baseline: Fraction

    def __post_init__(self):
        if self.k < 1:
            raise PreconditionError("needs k >= 1")


def bound_table_row(k: int) -> BoundTableRow:
    return BoundTableRow(
        k=k,
        lower=Fraction(k, 2),
        upper_new=Fraction(9 * k, 7) + 2,
        upper_old=-((-(3 * k + 1)) // 2),  # ceil((3k+1)/2)
        eg_baseline=Fraction(k, 2),
    )


def bound_table(k_max: int) -> list[BoundTableRow]:
    if k_max < 1:
        raise PreconditionError("needs k_max >= 1")
    return [bound_table_row(k) for k in range(1, k_max + 1)]
