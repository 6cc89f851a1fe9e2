import re

import pytest

from leafdist.errors import DomainException
from leafdist.exact.counts import tree_count
from leafdist.resources.tree import InsertionCode, PhyloTree
from leafdist.trees.enumeration import iter_codes
from leafdist.trees.sampling import sample_uniform
from leafdist.trees.tree import canonical_form, check_tree, decode, leaf_distance, splits, to_newick


def test_decode_star():
    tree = decode(3)
    assert tree.edges == ((0, 3), (1, 3), (2, 3))
    assert check_tree(tree)
    assert leaf_distance(tree, 1, 2) == 2
    assert to_newick(tree) == "(1,2,3);"


@pytest.mark.parametrize("choice, distance, split", [(1, 3, {2, 3}), (2, 3, {2, 4}), (3, 2, {3, 4})])
def test_decode_four_leaves(choice: int, distance: int, split: set):
    tree = decode(4, [choice])
    assert check_tree(tree)
    assert leaf_distance(tree, 1, 2) == distance
    assert splits(tree) == frozenset({frozenset(split)})


def test_decode_keeps_creation_order():
    tree = decode(4, [1])
    assert tree.edges == ((0, 5), (1, 4), (2, 4), (5, 4), (5, 3))


def test_newick():
    assert to_newick(decode(4, [3])) == "(1,2,(3,4));"
    assert to_newick(decode(4, [1])) == "(1,(2,3),4);"


def test_newick_lists_every_leaf_once():
    for code in iter_codes(6):
        newick = to_newick(decode(6, code))
        assert newick.endswith(";")
        assert sorted(int(label) for label in re.findall(r"\d+", newick)) == [1, 2, 3, 4, 5, 6]
        assert newick.count("(") == newick.count(")")


def test_codes_give_distinct_trees():
    trees = [decode(6, code) for code in iter_codes(6)]
    assert all(check_tree(tree) for tree in trees)
    assert len({canonical_form(tree) for tree in trees}) == tree_count(6)
    assert len({to_newick(tree) for tree in trees}) == tree_count(6)


def test_splits_count():
    for code in iter_codes(7):
        assert len(splits(decode(7, code))) == 7 - 3


def test_leaf_distance_is_symmetric():
    tree = decode(7, [2, 4, 1, 6])
    for k in range(1, 8):
        for l in range(k + 1, 8):  # noqa: E741
            assert leaf_distance(tree, k, l) == leaf_distance(tree, l, k)
            assert 1 <= leaf_distance(tree, k, l) <= 6


@pytest.mark.parametrize("n", [4, 9, 25])
def test_leaf_distance_is_symmetric_on_sampled_trees(n: int):
    for seed in range(20):
        tree = sample_uniform(n, seed)
        for k in range(1, n + 1):
            for l in range(k + 1, n + 1):  # noqa: E741
                assert leaf_distance(tree, k, l) == leaf_distance(tree, l, k), f"seed={seed}, pair=({k}, {l})"
                assert 1 <= leaf_distance(tree, k, l) <= n - 1


def test_check_tree_rejects_broken_trees():
    assert not check_tree(PhyloTree(4, [(0, 4), (1, 4), (2, 4), (3, 4), (4, 5)]))
    assert not check_tree(PhyloTree(4, [(0, 4), (1, 4), (2, 5), (3, 5)]))


def test_decode_rejects_bad_input():
    with pytest.raises(DomainException):
        decode(2)
    with pytest.raises(DomainException):
        decode(5, [1])
    with pytest.raises(DomainException):
        decode(4, [4])


def test_leaf_distance_rejects_labels():
    tree = decode(5, [1, 1])
    with pytest.raises(DomainException):
        leaf_distance(tree, 1, 1)
    with pytest.raises(DomainException):
        leaf_distance(tree, 1, 6)
    with pytest.raises(DomainException):
        leaf_distance(tree, 0, 2)


def test_insertion_code():
    code = InsertionCode([3, 5, 1])
    assert code.n == 6
    assert list(code) == [(4, 3), (5, 5), (6, 1)]
    assert code == InsertionCode((3, 5, 1))
    assert code.as_dict() == {"n": 6, "choices": [3, 5, 1]}
    with pytest.raises(DomainException):
        InsertionCode([1, 6])
    with pytest.raises(DomainException):
        InsertionCode([0])
