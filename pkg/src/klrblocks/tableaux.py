"""Standard tableaux: enumeration, residue sequences and degree statistics.

A standard tableau is stored as its shape together with the list of nodes
in entry order, i.e. ``order[k-1]`` is the node containing k.  "Below"
always means strictly later in the (component, row) reading order; nodes
in the same row are neither above nor below each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .cartan import CartanType, Charge, Residue, RootVector
from .partitions import (
    MultiPartition,
    Node,
    Partition,
    add_node,
    addable_corners,
    addable_nodes,
    removable_nodes,
    residue,
    size,
)


@dataclass(frozen=True)
class StandardTableau:
    shape: MultiPartition
    order: Tuple[Node, ...]

    @property
    def n(self) -> int:
        return len(self.order)

    def entry(self, node: Node) -> int:
        return self.order.index(node) + 1

    def rows(self) -> List[List[List[int]]]:
        """Entries arranged per component and row, for display and JSON."""
        grid = [[[0] * w for w in p] for p in self.shape]
        for k, (r, c, m) in enumerate(self.order, start=1):
            grid[m - 1][r - 1][c - 1] = k
        return grid

    def prefix_shape(self, k: int) -> MultiPartition:
        mp: MultiPartition = tuple(() for _ in self.shape)
        for node in self.order[:k]:
            mp = add_node(mp, node)
        return mp

    def to_json(self) -> dict:
        return {"shape": [list(p) for p in self.shape], "rows": self.rows()}


def _below(a: Node, b: Node) -> bool:
    """True iff a is strictly below b in the (component, row) order."""
    return (a[2], a[0]) > (b[2], b[0])


def initial_tableau(shape: MultiPartition) -> StandardTableau:
    order: List[Node] = []
    for m, p in enumerate(shape, start=1):
        for r, width in enumerate(p, start=1):
            for c in range(1, width + 1):
                order.append((r, c, m))
    return StandardTableau(shape, tuple(order))


def column_initial_tableau(shape: Partition) -> StandardTableau:
    """Fill 1..n down successive columns; defined for 1-partitions only."""
    from .partitions import conjugate

    order: List[Node] = []
    for c, height in enumerate(conjugate(shape), start=1):
        for r in range(1, height + 1):
            order.append((r, c, 1))
    return StandardTableau((shape,), tuple(order))


def rectangle_final_tableau(a0: int, height: int) -> StandardTableau:
    """The minimal-degree tableau of the a0 x height rectangle in the
    weight space of its row-initial residue sequence: the height - a0 rows
    above the zero-residue square are filled in reading order, the square
    itself down its columns.  For height == a0 this is the column-initial
    tableau."""
    if not 1 <= a0 <= height:
        raise ValueError("need 1 <= a0 <= height")
    shape = (a0,) * height
    top = height - a0
    order: List[Node] = [(r, c, 1) for r in range(1, top + 1)
                         for c in range(1, a0 + 1)]
    order += [(top + r, c, 1) for c in range(1, a0 + 1)
              for r in range(1, a0 + 1)]
    return StandardTableau((shape,), tuple(order))


def residue_sequence(t: StandardTableau, ct: CartanType, charge: Charge) -> Tuple[Residue, ...]:
    return tuple(residue(ct, charge, node) for node in t.order)


def degree(t: StandardTableau, ct: CartanType, charge: Charge) -> int:
    """Cellular degree: sum over k of (#addable - #removable) nodes of the
    same residue strictly below the node holding k, in the shape after
    adding that node."""
    total = 0
    mp: MultiPartition = tuple(() for _ in t.shape)
    for node in t.order:
        mp = add_node(mp, node)
        i = residue(ct, charge, node)
        total += sum(1 for a in addable_nodes(mp, ct, charge, i) if _below(a, node))
        total -= sum(1 for a in removable_nodes(mp, ct, charge, i) if _below(a, node))
    return total


def y_exponents(t: StandardTableau, ct: CartanType, charge: Charge) -> Tuple[int, ...]:
    """Exponent vector of y_t: position k counts the addable nodes of the
    same residue strictly below the node holding k, in the shape before
    adding it."""
    out: List[int] = []
    mp: MultiPartition = tuple(() for _ in t.shape)
    for node in t.order:
        i = residue(ct, charge, node)
        out.append(sum(1 for a in addable_nodes(mp, ct, charge, i) if _below(a, node)))
        mp = add_node(mp, node)
    return tuple(out)


def enumerate_standard(
    shape: MultiPartition,
    ct: Optional[CartanType] = None,
    charge: Optional[Charge] = None,
    residues: Optional[Sequence[Residue]] = None,
) -> Iterator[StandardTableau]:
    """Depth-first enumeration of Std(shape), candidate nodes in reading
    order.  With a residue filter, branches whose prefix residue sequence
    deviates are pruned and never materialized."""
    n = size(shape)
    if residues is not None and len(residues) != n:
        return

    def rec(k: int, prefix: MultiPartition, order: List[Node]) -> Iterator[StandardTableau]:
        if k > n:
            yield StandardTableau(shape, tuple(order))
            return
        for node in addable_corners(prefix):
            r, c, m = node
            if not (r <= len(shape[m - 1]) and c <= shape[m - 1][r - 1]):
                continue
            if residues is not None and residue(ct, charge, node) != residues[k - 1]:
                continue
            order.append(node)
            yield from rec(k + 1, add_node(prefix, node), order)
            order.pop()

    yield from rec(1, tuple(() for _ in shape), [])


def standard_by_residue(
    ct: CartanType, charge: Charge, residues: Sequence[Residue]
) -> List[StandardTableau]:
    """Std(i): standard tableaux of any shape (at the level of the charge)
    with the given residue sequence."""
    from .partitions import multipartitions_of

    out: List[StandardTableau] = []
    for shape in multipartitions_of(len(residues), len(charge)):
        out.extend(enumerate_standard(shape, ct, charge, residues))
    return out


def factorizable_tableaux(
    nu: MultiPartition, ct: CartanType, charge: Charge, omega: RootVector
) -> List[StandardTableau]:
    """Tableaux of shape nu whose first ht(omega) entries fill a sub-diagram
    of content omega.  Enumeration prunes prefixes whose content exceeds
    omega."""
    r = omega.height
    n = size(nu)
    out: List[StandardTableau] = []

    def rec(k: int, prefix: MultiPartition, acc: RootVector, order: List[Node]) -> None:
        if k == r + 1 and acc != omega:
            return
        if k > n:
            out.append(StandardTableau(nu, tuple(order)))
            return
        for node in addable_corners(prefix):
            rr, c, m = node
            if not (rr <= len(nu[m - 1]) and c <= nu[m - 1][rr - 1]):
                continue
            step = acc + RootVector.simple(residue(ct, charge, node))
            if k <= r and not step <= omega:
                continue
            order.append(node)
            rec(k + 1, add_node(prefix, node), step, order)
            order.pop()

    rec(1, tuple(() for _ in nu), RootVector.zero(), [])
    return out


def permutation(t: StandardTableau) -> Tuple[int, ...]:
    """One-line form of w with w(initial tableau) = t: position k holds the
    entry of t at the node where the initial tableau has k."""
    init = initial_tableau(t.shape)
    return tuple(t.entry(node) for node in init.order)


def permutation_word(t: StandardTableau) -> Tuple[int, ...]:
    """A reduced word s_{j1}...s_{jk} for the permutation taking the initial
    tableau to t: repeatedly move the largest out-of-place entry into its
    target position by adjacent swaps."""
    line = list(permutation(t))
    applied: List[int] = []
    for m in range(len(line), 0, -1):
        pos = line.index(m) + 1
        while pos < m:
            line[pos - 1], line[pos] = line[pos], line[pos - 1]
            applied.append(pos)
            pos += 1
    applied.reverse()
    return tuple(applied)


def apply_word(word: Sequence[int], t: StandardTableau) -> StandardTableau:
    """Act on a tableau by a word in adjacent transpositions, each s_j
    swapping the entries j and j+1 (leftmost letter acts last)."""
    order = list(t.order)
    for j in reversed(word):
        order[j - 1], order[j] = order[j], order[j - 1]
    return StandardTableau(t.shape, tuple(order))


def inversions(line: Sequence[int]) -> int:
    return sum(
        1
        for a in range(len(line))
        for b in range(a + 1, len(line))
        if line[a] > line[b]
    )
