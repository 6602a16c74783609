"""Integer Laurent polynomials in q and graded dimension computations."""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .cartan import CartanType, Charge, Residue, RootVector
from .partitions import MultiPartition, enumerate_block
from .tableaux import degree, enumerate_standard, factorizable_tableaux


class LaurentPoly:
    """Finitely supported exponent -> integer coefficient map; zero
    coefficients are never stored and equality is exact."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        d: Dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, c in items:
            d[e] = d.get(e, 0) + c
        self._coeffs = {e: c for e, c in d.items() if c}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def q(cls, exponent: int = 1) -> "LaurentPoly":
        return cls({exponent: 1})

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = dict(self._coeffs)
        for e, c in other._coeffs.items():
            d[e] = d.get(e, 0) + c
        return LaurentPoly(d)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        d = dict(self._coeffs)
        for e, c in other._coeffs.items():
            d[e] = d.get(e, 0) - c
        return LaurentPoly(d)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        d: Dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(d)

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative power")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def bar(self) -> "LaurentPoly":
        """The bar involution q -> 1/q."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def eval_at_1(self) -> int:
        return sum(self._coeffs.values())

    def shifted(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def to_pairs(self) -> List[List[int]]:
        return [[e, c] for e, c in sorted(self._coeffs.items())]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "LaurentPoly":
        return cls((e, c) for e, c in pairs)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            if e == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else "-" if c == -1 else f"{c}*"
                terms.append(f"{head}q^{e}" if e != 1 else f"{head}q")
        return " + ".join(terms).replace("+ -", "- ")


def gdim_specht_weight(shape: MultiPartition, ct: CartanType, charge: Charge,
                       residues: Sequence[Residue]) -> LaurentPoly:
    """Graded dimension of the residue-sequence weight space of the Specht
    module: sum of q^deg(t) over t in Std(shape) with the given residue
    sequence."""
    return LaurentPoly(
        (degree(t, ct, charge), 1)
        for t in enumerate_standard(shape, ct, charge, residues)
    )


def gdim_specht(shape: MultiPartition, ct: CartanType, charge: Charge) -> LaurentPoly:
    """Graded dimension of the full Specht module."""
    return LaurentPoly((degree(t, ct, charge), 1) for t in enumerate_standard(shape))


def gdim_block(ct: CartanType, charge: Charge, beta: RootVector,
               omega: Optional[RootVector] = None) -> LaurentPoly:
    """Graded dimension of the cellular algebra on the block: sum over
    shapes of the square of the tableau generating function, using
    deg(c_st) = deg(s) + deg(t).  With omega, only tableaux whose first
    ht(omega) entries have content omega count (the truncated block)."""
    total = LaurentPoly.zero()
    for shape in enumerate_block(ct, charge, beta):
        if omega is None:
            per = gdim_specht(shape, ct, charge)
        else:
            per = LaurentPoly(
                (degree(t, ct, charge), 1)
                for t in factorizable_tableaux(shape, ct, charge, omega)
            )
        total = total + per * per
    return total
