"""Root data of types A-infinity and C-infinity.

Residue labels are plain integers: all of Z in type A, the non-negative
integers in type C.  Validity is checked at the point of use so that both
types share the same arithmetic.
"""

from __future__ import annotations

from enum import Enum
from typing import Dict, Iterable, Mapping, Tuple

Residue = int
Charge = Tuple[Residue, ...]


class CartanType(Enum):
    A = "a"
    C = "c"

    def valid_label(self, i: Residue) -> bool:
        return self is CartanType.A or i >= 0

    def check_label(self, i: Residue) -> None:
        if not self.valid_label(i):
            raise ValueError(f"residue {i} is not a valid type-{self.name} label")

    def check_charge(self, charge: Charge) -> None:
        for k in charge:
            self.check_label(k)


def bilinear_form(ct: CartanType, i: Residue, j: Residue) -> int:
    """(alpha_i, alpha_j) = d_i * a_ij, with d = (1,1,...) in type A and
    d = (2,1,1,...) in type C."""
    ct.check_label(i)
    ct.check_label(j)
    if ct is CartanType.A:
        if i == j:
            return 2
        return -1 if abs(i - j) == 1 else 0
    if i == j:
        return 4 if i == 0 else 2
    if abs(i - j) != 1:
        return 0
    return -2 if min(i, j) == 0 else -1


def cartan_pairing(i: Residue, charge: Charge) -> int:
    """<alpha_i^vee, Lambda_kappa>: the number of charge entries equal to i."""
    return sum(1 for k in charge if k == i)


class Generator(Enum):
    IDEMPOTENT = "idempotent"
    DOT = "dot"
    CROSSING = "crossing"


def generator_degree(ct: CartanType, generator: Generator,
                     residues: Tuple[Residue, ...] = ()) -> int:
    """Degree of a KLR generator at the given local residues: 0 for e(i),
    (alpha_i, alpha_i) for a dot, (alpha_i, alpha_j) for a crossing."""
    if generator is Generator.IDEMPOTENT:
        return 0
    if generator is Generator.DOT:
        (i,) = residues
        return bilinear_form(ct, i, i)
    i, j = residues
    return bilinear_form(ct, i, j)


class NotASubroot(ValueError):
    pass


class RootVector:
    """Finitely supported residue -> multiplicity map (an element of the
    positive cone of the root lattice).  Immutable; zero entries are never
    stored."""

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: Mapping[Residue, int] | Iterable[Tuple[Residue, int]] = ()):
        d: Dict[Residue, int] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for i, m in items:
            if m < 0:
                raise ValueError(f"negative multiplicity {m} at residue {i}")
            if m:
                d[i] = d.get(i, 0) + m
        self._entries = d
        self._hash = hash(frozenset(d.items()))

    @classmethod
    def simple(cls, i: Residue, mult: int = 1) -> "RootVector":
        return cls({i: mult})

    @classmethod
    def zero(cls) -> "RootVector":
        return cls()

    def __getitem__(self, i: Residue) -> int:
        return self._entries.get(i, 0)

    def items(self):
        return sorted(self._entries.items())

    def support(self):
        return sorted(self._entries)

    @property
    def height(self) -> int:
        return sum(self._entries.values())

    def __add__(self, other: "RootVector") -> "RootVector":
        d = dict(self._entries)
        for i, m in other._entries.items():
            d[i] = d.get(i, 0) + m
        return RootVector(d)

    def __sub__(self, other: "RootVector") -> "RootVector":
        d = dict(self._entries)
        for i, m in other._entries.items():
            new = d.get(i, 0) - m
            if new < 0:
                raise NotASubroot(f"not a subroot: multiplicity at residue {i}")
            if new:
                d[i] = new
            else:
                d.pop(i, None)
        return RootVector(d)

    def __le__(self, other: "RootVector") -> bool:
        return all(m <= other[i] for i, m in self._entries.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, RootVector) and self._entries == other._entries

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __repr__(self) -> str:
        if not self._entries:
            return "RootVector()"
        body = " + ".join(
            (f"{m}*a{i}" if m != 1 else f"a{i}") for i, m in self.items()
        )
        return f"RootVector<{body}>"

    def to_json(self) -> Dict[str, int]:
        return {str(i): m for i, m in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "RootVector":
        return cls({int(i): m for i, m in data.items()})
