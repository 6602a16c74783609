import pytest

from klrblocks.cartan import CartanType, RootVector
from klrblocks.morita import (
    BridgeError,
    a_block,
    bridge,
    c_block,
    from_type_c,
    iter_bridges,
    tableau_to_type_c,
    to_type_c,
    verify_bridge,
)
from klrblocks.partitions import content
from klrblocks.tableaux import enumerate_standard, factorizable_tableaux, residue_sequence

A, C = CartanType.A, CartanType.C

MICRO = RootVector({0: 1, 1: 2})


class TestBridge:
    def test_micro(self):
        b = bridge(0, MICRO)
        assert b.a0 == 1
        assert b.rho == (1,)
        assert b.omega == RootVector({0: 1})
        assert (b.kappa1, b.kappa2) == (1, 1)
        assert b.a_beta == RootVector({1: 2})

    def test_square_rectangle(self):
        beta = content(C, (0,), ((7, 6, 5, 4),))
        b = bridge(0, beta)
        assert b.a0 == 4
        assert b.rho == (4, 4, 4, 4)
        assert (b.kappa1, b.kappa2) == (4, 4)

    def test_tall_thin_rectangle(self):
        beta = content(C, (2,), ((1, 1, 1),))
        b = bridge(2, beta)
        assert b.a0 == 1
        assert b.rho == (1, 1, 1)
        assert (b.kappa1, b.kappa2) == (3, 1)
        assert b.a_beta == RootVector.zero()

    def test_errors(self):
        with pytest.raises(BridgeError):
            bridge(0, RootVector({1: 2}))  # no zero nodes
        with pytest.raises(BridgeError):
            bridge(-1, MICRO)

    def test_json(self):
        b = bridge(0, MICRO)
        assert b.to_json() == {
            "kappa_c": 0, "beta": {"0": 1, "1": 2}, "a0": 1, "rho": [1],
            "omega": {"0": 1}, "kappa1": 1, "kappa2": 1,
        }


class TestBlockMap:
    def test_micro_blocks(self):
        b = bridge(0, MICRO)
        assert c_block(b) == [(2, 1)]
        assert a_block(b) == [((1,), (1,))]
        assert to_type_c(((1,), (1,)), b) == (2, 1)
        assert from_type_c((2, 1), b) == ((1,), (1,))

    def test_membership_errors(self):
        b = bridge(0, MICRO)
        with pytest.raises(BridgeError):
            to_type_c(((2,), ()), b)
        with pytest.raises(BridgeError):
            from_type_c((3,), b)

    @pytest.mark.parametrize("kappa_c", [0, 1])
    def test_round_trip_is_block_bijection(self, kappa_c):
        for b in iter_bridges(kappa_c, 8):
            image = [to_type_c(bp, b) for bp in a_block(b)]
            assert sorted(image) == sorted(c_block(b))
            for bp, nu in zip(a_block(b), image):
                assert from_type_c(nu, b) == bp


class TestTableauTransport:
    @pytest.mark.parametrize("kappa_c", [0, 1])
    def test_bijection_onto_factorizable(self, kappa_c):
        for b in iter_bridges(kappa_c, 7):
            rho_tabs = list(enumerate_standard((b.rho,)))
            for bp in a_block(b):
                nu = to_type_c(bp, b)
                image = {
                    tableau_to_type_c(s, u, b).order
                    for s in rho_tabs
                    for u in enumerate_standard(bp)
                }
                target = {t.order
                          for t in factorizable_tableaux((nu,), C, b.c_charge, b.omega)}
                assert image == target
                assert len(image) == len(rho_tabs) * sum(
                    1 for _ in enumerate_standard(bp)
                )

    def test_residue_compatibility(self):
        # the transported tableau reads the A-residues of u literally
        b = bridge(0, content(C, (0,), ((3, 2, 1),)))
        for bp in a_block(b):
            for s in enumerate_standard((b.rho,)):
                for u in enumerate_standard(bp):
                    t = tableau_to_type_c(s, u, b)
                    word = residue_sequence(t, C, b.c_charge)
                    head = residue_sequence(s, C, b.c_charge)
                    tail = residue_sequence(u, A, b.a_charge)
                    assert word == head + tail

    def test_shape_mismatch(self):
        b = bridge(0, MICRO)
        s = next(iter(enumerate_standard(((2,),))))
        u = next(iter(enumerate_standard(((1,), (1,)))))
        with pytest.raises(BridgeError):
            tableau_to_type_c(s, u, b)


class TestIterBridges:
    def test_deterministic(self):
        assert [b.to_json() for b in iter_bridges(0, 6)] == [
            b.to_json() for b in iter_bridges(0, 6)
        ]

    def test_heights_non_decreasing(self):
        heights = [b.beta.height for b in iter_bridges(1, 7)]
        assert heights == sorted(heights)


class TestVerifyBridge:
    def test_micro_report(self):
        report = verify_bridge(bridge(0, MICRO))
        assert report["pass"]
        count = report["checks"]["count"]
        assert count["lhs"] == count["rhs"] == 4
        assert report["checks"]["graded"]["shift"] == 0
        klesh = report["checks"]["kleshchev"]
        assert klesh["a_image"] == klesh["c_set"] == [[2, 1]]
        assert report["checks"]["goodpath"]["pass"]

    def test_unknown_check(self):
        with pytest.raises(ValueError):
            verify_bridge(bridge(0, MICRO), checks=("count", "bogus"))

    def test_dominance_refinement_witness(self):
        # the type-C order strictly refines the type-A order on this block:
        # (4,2,2) dominates (3,3,1,1) but the bipartition preimages
        # ((2),(1,1)) and ((1,1),(2)) are incomparable
        beta = RootVector({0: 2, 1: 3, 2: 2, 3: 1})
        b = bridge(0, beta)
        assert to_type_c(((2,), (1, 1)), b) == (4, 2, 2)
        assert to_type_c(((1, 1), (2,)), b) == (3, 3, 1, 1)
        report = verify_bridge(b, checks=("dominance",))
        dom = report["checks"]["dominance"]
        assert not dom["pass"]
        assert dom["order_preserving"]
        assert {"pair": [[[2], [1, 1]], [[1, 1], [2]]]} in dom["witnesses"]

    @pytest.mark.parametrize("kappa_c", [0, 1])
    def test_order_preserving_on_small_blocks(self, kappa_c):
        for b in iter_bridges(kappa_c, 8):
            report = verify_bridge(b, checks=("dominance",))
            assert report["checks"]["dominance"]["order_preserving"]
