"""Crystal combinatorics: i-signatures, good/cogood nodes, Kleshchev
l-partitions, cogood paths and good-removal factorization through the
rectangle."""

from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .cartan import CartanType, Charge, Residue
from .partitions import (
    MultiPartition,
    Node,
    Partition,
    add_node,
    addable_nodes,
    remove_node,
    removable_nodes,
    residue,
    size,
)

SignatureEntry = Tuple[str, Node]  # marker 'a' or 'r', then the node
Signature = Tuple[SignatureEntry, ...]


def i_signature(mp: MultiPartition, ct: CartanType, charge: Charge,
                i: Residue) -> Signature:
    """Addable and removable i-nodes merged in (component, row) reading
    order, marked 'a' and 'r'."""
    entries = [("a", node) for node in addable_nodes(mp, ct, charge, i)]
    entries += [("r", node) for node in removable_nodes(mp, ct, charge, i)]
    entries.sort(key=lambda e: (e[1][2], e[1][0]))
    return tuple(entries)


def reduce_signature(sig: Signature) -> Signature:
    """Cancel adjacent (r, a) pairs until the word has shape a..a r..r."""
    stack: List[SignatureEntry] = []
    for entry in sig:
        if entry[0] == "a" and stack and stack[-1][0] == "r":
            stack.pop()
        else:
            stack.append(entry)
    return tuple(stack)


def good_node(mp: MultiPartition, ct: CartanType, charge: Charge,
              i: Residue) -> Optional[Node]:
    """The removable node at the leftmost r of the reduced i-signature."""
    for marker, node in reduce_signature(i_signature(mp, ct, charge, i)):
        if marker == "r":
            return node
    return None


def cogood_node(mp: MultiPartition, ct: CartanType, charge: Charge,
                i: Residue) -> Optional[Node]:
    """The addable node at the rightmost a of the reduced i-signature."""
    last = None
    for marker, node in reduce_signature(i_signature(mp, ct, charge, i)):
        if marker == "a":
            last = node
    return last


@lru_cache(maxsize=None)
def _kleshchev(ct: CartanType, charge: Charge, mp: MultiPartition) -> bool:
    if size(mp) == 0:
        return True
    seen: set = set()
    for node in removable_nodes(mp, ct, charge):
        i = residue(ct, charge, node)
        if i in seen:
            continue
        seen.add(i)
        if good_node(mp, ct, charge, i) == node and _kleshchev(
            ct, charge, remove_node(mp, node)
        ):
            return True
    return False


def is_kleshchev(mp: MultiPartition, ct: CartanType, charge: Charge) -> bool:
    """True iff mp is reachable from the empty l-partition by good-node
    additions (memoized recursion on good-node removals)."""
    return _kleshchev(ct, charge, mp)


class CogoodPathError(ValueError):
    def __init__(self, position: int, i: Residue):
        super().__init__(f"no cogood {i}-node at step {position}")
        self.position = position
        self.residue = i


def cogood_path(start: MultiPartition, word: Sequence[Residue],
                ct: CartanType, charge: Charge) -> MultiPartition:
    """Add cogood nodes of the given residues in order; raises
    CogoodPathError with the failing position if a step has no cogood
    node."""
    mp = start
    for pos, i in enumerate(word, start=1):
        node = cogood_node(mp, ct, charge, i)
        if node is None:
            raise CogoodPathError(pos, i)
        mp = add_node(mp, node)
    return mp


def good_removal_path(mp: MultiPartition, target: MultiPartition,
                      ct: CartanType, charge: Charge) -> Optional[Tuple[Residue, ...]]:
    """Search for a sequence of good-node removals from mp down to target;
    returns the residue word in *addition* order (target up to mp), or None.
    Depth-first with memoized failures."""
    failed: set = set()

    def rec(cur: MultiPartition) -> Optional[List[Residue]]:
        if cur == target:
            return []
        if cur in failed:
            return None
        seen: set = set()
        for node in removable_nodes(cur, ct, charge):
            i = residue(ct, charge, node)
            if i in seen:
                continue
            seen.add(i)
            if good_node(cur, ct, charge, i) != node:
                continue
            sub = rec(remove_node(cur, node))
            if sub is not None:
                sub.append(i)
                return sub
        failed.add(cur)
        return None

    word = rec(mp)
    return tuple(word) if word is not None else None


def factors_through(nu: Partition, rho: Partition, ct: CartanType,
                    charge: Charge) -> Optional[Tuple[Residue, ...]]:
    """A residue word j' (+) j'' such that good-node removals take nu to rho
    along reversed j'' and rho to the empty partition along reversed j';
    None if no such word exists.  Reported in addition order."""
    head = good_removal_path((rho,), ((),), ct, charge)
    if head is None:
        return None
    tail = good_removal_path((nu,), (rho,), ct, charge)
    if tail is None:
        return None
    return head + tail
