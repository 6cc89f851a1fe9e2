import logging
from collections import deque
from typing import FrozenSet, List, Sequence, Union

from leafdist.errors import DomainException
from leafdist.exact.counts import check_leaf_count
from leafdist.resources.tree import Edge, InsertionCode, PhyloTree

log = logging.getLogger(__name__)

Split = FrozenSet[int]


def _as_code(n: int, code: Union[InsertionCode, Sequence[int]]) -> InsertionCode:
    if not isinstance(code, InsertionCode):
        code = InsertionCode(code)
    if code.n != n:
        raise DomainException(f"A tree with {n} leaves needs {n - 3} choices, got {len(code)}.")
    return code


def decode(n: int, code: Union[InsertionCode, Sequence[int]] = ()) -> PhyloTree:
    """Build the tree of an insertion code.

    Starts from the star on leaves 1, 2, 3; leaf k subdivides the edge with creation index e_k - 1 at a new internal
    node w, which is joined to leaf k.
    """
    check_leaf_count(n)
    code = _as_code(n, code)
    center = n
    edges: List[Edge] = [(0, center), (1, center), (2, center)]
    for k, choice in code:
        u, v = edges[choice - 1]
        w = n + k - 3
        edges[choice - 1] = (u, w)
        edges.append((w, v))
        edges.append((w, k - 1))
    return PhyloTree(n, edges)


def check_tree(tree: PhyloTree) -> bool:
    """Whether the tree has 2n-3 edges, is connected, and has the degrees of a fully resolved tree."""
    if len(tree.edges) != 2 * tree.n - 3:
        return False
    for node in range(tree.node_count):
        expected = 1 if tree.is_leaf(node) else 3
        if tree.degree(node) != expected:
            return False
    seen = {0}
    queue = deque([0])
    while queue:
        node = queue.popleft()
        for neighbour in tree.adjacency[node]:
            if neighbour not in seen:
                seen.add(neighbour)
                queue.append(neighbour)
    # connected with |V| - 1 edges means acyclic
    return len(seen) == tree.node_count


def leaf_distance(tree: PhyloTree, k: int, l: int) -> int:  # noqa: E741
    """Number of edges on the path between leaves k and l."""
    source, target = tree.node_of(k), tree.node_of(l)
    if source == target:
        raise DomainException(f"Distance needs two different leaves, got {k} twice.")
    depth = {source: 0}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for neighbour in tree.adjacency[node]:
            if neighbour in depth:
                continue
            depth[neighbour] = depth[node] + 1
            if neighbour == target:
                return depth[neighbour]
            queue.append(neighbour)
    raise DomainException(f"Leaves {k} and {l} are not connected.")


def _side(tree: PhyloTree, start: int, blocked: int) -> Split:
    labels = set()
    seen = {start, blocked}
    stack = [start]
    while stack:
        node = stack.pop()
        if tree.is_leaf(node):
            labels.add(tree.label_of(node))
        for neighbour in tree.adjacency[node]:
            if neighbour not in seen:
                seen.add(neighbour)
                stack.append(neighbour)
    return frozenset(labels)


def splits(tree: PhyloTree) -> FrozenSet[Split]:
    """Leaf bipartitions of the internal edges, each given by the side that does not hold leaf 1."""
    result = set()
    for u, v in tree.edges:
        if tree.is_leaf(u) or tree.is_leaf(v):
            continue
        side = _side(tree, v, u)
        if 1 in side:
            side = frozenset(tree.leaves) - side
        result.add(side)
    return frozenset(result)


def canonical_form(tree: PhyloTree) -> FrozenSet[Split]:
    """Two labelled trees are the same tree exactly when their split sets agree."""
    return splits(tree)


def to_newick(tree: PhyloTree) -> str:
    """Newick string rooted at the neighbour of leaf 1, children ordered by their smallest leaf label."""
    root = tree.adjacency[0][0]
    parent = {root: None}
    order = [root]
    for node in order:
        for neighbour in tree.adjacency[node]:
            if neighbour != parent[node]:
                parent[neighbour] = node
                order.append(neighbour)

    smallest = {}
    text = {}
    for node in reversed(order):
        if tree.is_leaf(node):
            smallest[node] = tree.label_of(node)
            text[node] = str(tree.label_of(node))
            continue
        children = sorted((c for c in tree.adjacency[node] if c != parent[node]), key=smallest.__getitem__)
        smallest[node] = smallest[children[0]]
        text[node] = "(" + ",".join(text[c] for c in children) + ")"
    return text[root] + ";"
