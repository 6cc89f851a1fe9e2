from typing import Iterable, Iterator, List, Sequence, Tuple

from leafdist.errors import DomainException
from leafdist.resources.resource import Resource

Edge = Tuple[int, int]


class InsertionCode(Resource):
    """Edge choices (e_4, ..., e_n) of the leaf-insertion construction, with 1 <= e_k <= 2k - 5."""

    def __init__(self, choices: Iterable[int]):
        self.choices: Tuple[int, ...] = tuple(int(c) for c in choices)
        for k, choice in zip(range(4, self.n + 1), self.choices):
            if not 1 <= choice <= 2 * k - 5:
                raise DomainException(f"Choice e_{k} must lie in [1, {2 * k - 5}], got {choice}.")

    @property
    def n(self) -> int:
        return len(self.choices) + 3

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        """Yields (k, e_k) pairs."""
        return iter(zip(range(4, self.n + 1), self.choices))

    def __len__(self):
        return len(self.choices)

    def __eq__(self, other):
        if not isinstance(other, InsertionCode):
            return NotImplemented
        return self.choices == other.choices

    def __hash__(self):
        return hash(self.choices)

    def as_dict(self):
        return {"n": self.n, "choices": list(self.choices)}

    def __repr__(self):
        return f"<InsertionCode[{', '.join(map(str, self.choices))}]>"


class PhyloTree(Resource):
    """Unrooted tree with leaves 1..n stored as nodes 0..n-1 and internal nodes n..2n-3.

    Edges keep their creation order; subdividing an edge keeps its index for the half that stays attached to the
    original first endpoint.
    """

    def __init__(self, n: int, edges: Sequence[Edge]):
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple((int(u), int(v)) for u, v in edges)
        self._adjacency = None

    @property
    def node_count(self) -> int:
        return 2 * self.n - 2

    @property
    def leaves(self) -> range:
        return range(1, self.n + 1)

    @property
    def adjacency(self) -> List[List[int]]:
        if self._adjacency is None:
            adjacency: List[List[int]] = [[] for _ in range(self.node_count)]
            for u, v in self.edges:
                adjacency[u].append(v)
                adjacency[v].append(u)
            self._adjacency = adjacency
        return self._adjacency

    def is_leaf(self, node: int) -> bool:
        return node < self.n

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def node_of(self, label: int) -> int:
        if not isinstance(label, int) or not 1 <= label <= self.n:
            raise DomainException(f"Unknown leaf label {label!r}, labels are 1..{self.n}.")
        return label - 1

    def label_of(self, node: int) -> int:
        return node + 1

    def as_dict(self):
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges]}

    def __eq__(self, other):
        if not isinstance(other, PhyloTree):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"<PhyloTree[n:{self.n}, edges:{len(self.edges)}]>"
