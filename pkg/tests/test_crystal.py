import pytest
from hypothesis import given, strategies as st

from klrblocks.cartan import CartanType
from klrblocks.crystal import (
    CogoodPathError,
    cogood_node,
    cogood_path,
    factors_through,
    good_node,
    good_removal_path,
    i_signature,
    is_kleshchev,
    reduce_signature,
)
from klrblocks.partitions import (
    add_node,
    content,
    multipartitions_of,
    partitions_of,
    remove_node,
)

A, C = CartanType.A, CartanType.C


class TestSignatures:
    def test_examples(self):
        assert i_signature(((2,),), C, (0,), 1) == (("r", (1, 2, 1)), ("a", (2, 1, 1)))
        assert i_signature(((1, 1),), C, (0,), 1) == (("a", (1, 2, 1)), ("r", (2, 1, 1)))
        assert i_signature(((1,), (1,)), A, (1, 1), 1) == (
            ("r", (1, 1, 1)),
            ("r", (1, 1, 2)),
        )

    def test_reduce_examples(self):
        r, a = ("r", (1, 2, 1)), ("a", (2, 1, 1))
        assert reduce_signature((r, a)) == ()
        assert reduce_signature((a, r)) == (a, r)
        assert reduce_signature((r, r, a)) == (r,)

    @given(st.lists(st.sampled_from("ar"), max_size=20))
    def test_reduce_canonical(self, markers):
        sig = tuple((m, (k, 1, 1)) for k, m in enumerate(markers, start=1))
        reduced = reduce_signature(sig)
        word = [m for m, _ in reduced]
        assert word == sorted(word)  # all a's before all r's
        # repeatedly deleting any (r, a) adjacency reaches the same word
        items = list(sig)
        changed = True
        while changed:
            changed = False
            for k in range(len(items) - 1):
                if items[k][0] == "r" and items[k + 1][0] == "a":
                    del items[k:k + 2]
                    changed = True
                    break
        assert tuple(items) == reduced


class TestGoodCogood:
    def test_examples(self):
        assert good_node(((2,),), C, (0,), 1) is None
        assert good_node(((1, 1),), C, (0,), 1) == (2, 1, 1)
        assert cogood_node(((),),  C, (0,), 0) == (1, 1, 1)

    def test_partial_inverse(self):
        # cogood addition then good removal is the identity where defined
        for n in range(9):
            for mp in multipartitions_of(n, 1):
                for i in range(n + 2):
                    node = cogood_node(mp, C, (0,), i)
                    if node is None:
                        continue
                    bigger = add_node(mp, node)
                    assert good_node(bigger, C, (0,), i) == node
                    assert remove_node(bigger, node) == mp


class TestKleshchev:
    def test_examples(self):
        assert is_kleshchev(((1, 1),), C, (0,))
        assert not is_kleshchev(((2,),), C, (0,))
        assert is_kleshchev(((1,), (1,)), A, (1, 1))
        assert not is_kleshchev(((1,), ()), A, (1, 1))
        assert is_kleshchev(((),), C, (0,))

    @pytest.mark.parametrize("ct,charge,level,max_n", [
        (C, (0,), 1, 9), (C, (1,), 1, 8), (C, (2,), 1, 8), (A, (1, 1), 2, 6),
    ])
    def test_equals_good_removal_reachability(self, ct, charge, level, max_n):
        for n in range(max_n + 1):
            for mp in multipartitions_of(n, level):
                empty = ((),) * level
                reachable = good_removal_path(mp, empty, ct, charge) is not None
                assert is_kleshchev(mp, ct, charge) == reachable


class TestCogoodPath:
    def test_examples(self):
        assert cogood_path(((),), (0,), C, (0,)) == ((1,),)
        assert cogood_path(((),), (0, 1), C, (0,)) == ((1, 1),)

    def test_failure_position(self):
        # after adding the residue-0 node at (1,1) there is no second one
        with pytest.raises(CogoodPathError) as err:
            cogood_path(((),), (0, 0), C, (0,))
        assert err.value.position == 2
        assert err.value.residue == 0

    def test_replay_witness(self):
        word = factors_through((2, 1), (1,), C, (0,))
        assert word is not None
        assert cogood_path(((),), word, C, (0,)) == ((2, 1),)


class TestFactorsThrough:
    def test_examples(self):
        assert factors_through((1,), (1,), C, (0,)) == (0,)
        assert factors_through((2, 1), (1,), C, (0,)) is not None
        assert factors_through((2,), (1,), C, (0,)) is None

    @pytest.mark.parametrize("kappa_c", [0, 1, 2])
    def test_every_kleshchev_factors(self, kappa_c):
        for n in range(1, 10):
            for nu in partitions_of(n):
                beta = content(C, (kappa_c,), (nu,))
                a0 = beta[0]
                if a0 == 0 or not is_kleshchev((nu,), C, (kappa_c,)):
                    continue
                rho = (a0,) * (kappa_c + a0)
                word = factors_through(nu, rho, C, (kappa_c,))
                assert word is not None
                # the word's residues add up to the block content
                assert len(word) == n
                mid = cogood_path(((),), word[: sum(rho)], C, (kappa_c,))
                assert mid == (rho,)
                assert cogood_path(mid, word[sum(rho):], C, (kappa_c,)) == (nu,)
