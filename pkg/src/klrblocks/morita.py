"""The level-one type-C / level-two type-A block bridge.

A block of the type-C algebra with a_0 >= 1 zero-residue nodes is cut by
the rectangle rho = (a_0^(kappa_c + a_0)); the bijection
(lambda, mu) -> rho + (lambda, mu') matches it with the type-A block of
content beta - omega and charges (kappa_c + a_0, a_0).  verify_bridge runs
the counting, graded, dominance, Kleshchev and good-path checks at desk
scale."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .cartan import CartanType, Charge, RootVector
from .crystal import CogoodPathError, cogood_path, factors_through, is_kleshchev
from .graded import LaurentPoly
from .partitions import (
    Node,
    Partition,
    conjugate,
    content,
    dominates,
    enumerate_block,
    partitions_of,
    rect_add,
    rect_split,
    size,
)
from .tableaux import (
    StandardTableau,
    degree,
    enumerate_standard,
    factorizable_tableaux,
)

Bipartition = Tuple[Partition, Partition]

ALL_CHECKS = ("count", "graded", "dominance", "kleshchev", "goodpath")


class BridgeError(ValueError):
    pass


@dataclass(frozen=True)
class BlockBridge:
    kappa_c: int
    beta: RootVector
    a0: int
    rho: Partition
    omega: RootVector
    kappa1: int
    kappa2: int

    @property
    def c_charge(self) -> Charge:
        return (self.kappa_c,)

    @property
    def a_charge(self) -> Charge:
        return (self.kappa1, self.kappa2)

    @property
    def a_beta(self) -> RootVector:
        return self.beta - self.omega

    def to_json(self) -> dict:
        return {
            "kappa_c": self.kappa_c,
            "beta": self.beta.to_json(),
            "a0": self.a0,
            "rho": list(self.rho),
            "omega": self.omega.to_json(),
            "kappa1": self.kappa1,
            "kappa2": self.kappa2,
        }


def bridge(kappa_c: int, beta: RootVector) -> BlockBridge:
    """Populate the bridge datum for a type-C block: rho is the minimal
    rectangle holding all a_0 zero-residue nodes, omega its content, and
    the type-A charges are (kappa_c + a_0, a_0)."""
    if kappa_c < 0:
        raise BridgeError("kappa_c must be non-negative")
    a0 = beta[0]
    if a0 == 0:
        raise BridgeError("no zero nodes: bridge undefined")
    rho = (a0,) * (kappa_c + a0)
    omega = content(CartanType.C, (kappa_c,), (rho,))
    if not omega <= beta:
        raise BridgeError("rectangle content is not contained in beta")
    rest = beta - omega
    if rest[0] != 0:
        raise BridgeError("beta - omega still supported on the zero residue")
    return BlockBridge(kappa_c, beta, a0, rho, omega, kappa_c + a0, a0)


def c_block(b: BlockBridge) -> List[Partition]:
    return [mp[0] for mp in enumerate_block(CartanType.C, b.c_charge, b.beta)]


def a_block(b: BlockBridge) -> List[Bipartition]:
    return [
        (mp[0], mp[1])
        for mp in enumerate_block(CartanType.A, b.a_charge, b.a_beta)
    ]


def to_type_c(bp: Bipartition, b: BlockBridge) -> Partition:
    """(lambda, mu) -> rho + (lambda, mu')."""
    lam, mu = bp
    if content(CartanType.A, b.a_charge, (lam, mu)) != b.a_beta:
        raise BridgeError(f"{bp} is not in the type-A block")
    return rect_add(b.rho, lam, conjugate(mu))


def from_type_c(nu: Partition, b: BlockBridge) -> Bipartition:
    """Inverse of to_type_c."""
    if content(CartanType.C, b.c_charge, (nu,)) != b.beta:
        raise BridgeError(f"{nu} is not in the type-C block")
    return rect_split(nu, b.rho)


def tableau_to_type_c(s: StandardTableau, u: StandardTableau,
                      b: BlockBridge) -> StandardTableau:
    """Combine a rho-tableau and a bipartition tableau into the
    factorizable tableau of shape rho + (lambda, mu'): component-1 nodes
    shift right past the rectangle, component-2 nodes conjugate below it."""
    if s.shape != (b.rho,):
        raise BridgeError("first tableau must have shape rho")
    lam, mu = u.shape
    nu = to_type_c((lam, mu), b)
    a, height = b.a0, len(b.rho)
    order: List[Node] = list(s.order)
    for (r, c, m) in u.order:
        if m == 1:
            order.append((r, a + c, 1))
        else:
            order.append((height + c, r, 1))
    return StandardTableau((nu,), tuple(order))


def iter_bridges(kappa_c: int, max_n: int) -> Iterator[BlockBridge]:
    """All bridges for type-C blocks with a_0 >= 1 and height at most
    max_n, in increasing height then deterministic content order."""
    for n in range(1, max_n + 1):
        seen: List[RootVector] = []
        for p in partitions_of(n):
            beta = content(CartanType.C, (kappa_c,), (p,))
            if beta[0] >= 1 and beta not in seen:
                seen.append(beta)
                yield bridge(kappa_c, beta)


def _graded_shift(lhs: LaurentPoly, rhs: LaurentPoly) -> Optional[int]:
    """The unique c with lhs = q^c * rhs, if one exists."""
    lp, rp = lhs.to_pairs(), rhs.to_pairs()
    if not lp and not rp:
        return 0
    if not lp or not rp:
        return None
    c = lp[0][0] - rp[0][0]
    return c if lhs == rhs.shifted(c) else None


def verify_bridge(b: BlockBridge,
                  checks: Sequence[str] = ALL_CHECKS) -> Dict[str, dict]:
    """Run the requested checks; failures are report entries, never
    exceptions."""
    cs = list(checks)
    for c in cs:
        if c not in ALL_CHECKS:
            raise ValueError(f"unknown check {c!r}")
    c_shapes = c_block(b)
    a_shapes = a_block(b)
    pairs: List[Tuple[Bipartition, Partition]] = [
        (bp, to_type_c(bp, b)) for bp in a_shapes
    ]
    report: Dict[str, dict] = {"bridge": b.to_json(), "checks": {}}
    out = report["checks"]

    rho_tableaux = list(enumerate_standard((b.rho,)))
    std_rho = len(rho_tableaux)

    if "count" in cs:
        per_shape = []
        ok = set(nu for _, nu in pairs) == set(c_shapes)
        lhs_total = rhs_total = 0
        for bp, nu in pairs:
            n_fact = len(factorizable_tableaux((nu,), CartanType.C, b.c_charge, b.omega))
            n_a = sum(1 for _ in enumerate_standard(bp))
            lhs_total += n_fact * n_fact
            rhs_total += (std_rho * n_a) ** 2
            match = n_fact == std_rho * n_a
            ok = ok and match
            per_shape.append(
                {"nu": list(nu), "factorizable": n_fact,
                 "rho_times_a": std_rho * n_a, "pass": match}
            )
        out["count"] = {"pass": ok, "lhs": lhs_total, "rhs": rhs_total,
                        "per_shape": per_shape}

    if "graded" in cs:
        per_shape = []
        shift: Optional[int] = None
        ok = True
        rho_poly = LaurentPoly(
            (degree(t, CartanType.C, b.c_charge), 1) for t in rho_tableaux
        )
        for bp, nu in pairs:
            lhs = LaurentPoly(
                (degree(t, CartanType.C, b.c_charge), 1)
                for t in factorizable_tableaux((nu,), CartanType.C, b.c_charge, b.omega)
            )
            a_poly = LaurentPoly(
                (degree(t, CartanType.A, b.a_charge), 1)
                for t in enumerate_standard(bp)
            )
            rhs = rho_poly * a_poly
            c = _graded_shift(lhs, rhs)
            if c is None or (shift is not None and c != shift):
                ok = False
            if shift is None and c is not None:
                shift = c
            per_shape.append(
                {"nu": list(nu), "lhs": lhs.to_pairs(), "rhs": rhs.to_pairs(),
                 "shift": c}
            )
        ok = ok and shift == 0
        out["graded"] = {"pass": ok, "shift": shift, "per_shape": per_shape}

    if "dominance" in cs:
        # Full order-isomorphism can fail (the type-C order may strictly
        # refine the type-A one); order preservation is reported separately.
        witnesses = []
        preserving = True
        for i, (bp1, nu1) in enumerate(pairs):
            for bp2, nu2 in pairs:
                if bp1 == bp2:
                    continue
                a_rel = dominates(bp1, bp2)
                c_rel = dominates((nu1,), (nu2,))
                if a_rel and not c_rel:
                    preserving = False
                if a_rel != c_rel:
                    witnesses.append({"pair": [list(map(list, bp1)),
                                               list(map(list, bp2))]})
        out["dominance"] = {"pass": not witnesses,
                            "order_preserving": preserving,
                            "witnesses": witnesses}

    if "kleshchev" in cs:
        a_klesh = {nu for bp, nu in pairs
                   if is_kleshchev((bp[0], bp[1]), CartanType.A, b.a_charge)}
        c_klesh = {nu for nu in c_shapes
                   if is_kleshchev((nu,), CartanType.C, b.c_charge)}
        out["kleshchev"] = {
            "pass": a_klesh == c_klesh,
            "a_image": sorted(map(list, a_klesh)),
            "c_set": sorted(map(list, c_klesh)),
        }

    if "goodpath" in cs:
        failures = []
        for nu in c_shapes:
            if not is_kleshchev((nu,), CartanType.C, b.c_charge):
                continue
            word = factors_through(nu, b.rho, CartanType.C, b.c_charge)
            ok_word = word is not None
            if ok_word:
                try:
                    head, tail = word[: size((b.rho,))], word[size((b.rho,)):]
                    mid = cogood_path(((),), head, CartanType.C, b.c_charge)
                    end = cogood_path(mid, tail, CartanType.C, b.c_charge)
                    ok_word = mid == (b.rho,) and end == (nu,)
                except CogoodPathError:
                    ok_word = False
            if not ok_word:
                failures.append(list(nu))
        out["goodpath"] = {"pass": not failures, "failures": failures}

    report["pass"] = all(v["pass"] for v in out.values())
    return report
