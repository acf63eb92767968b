"""Invariant values collected over the colorings of one knot."""

from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Entry:
    value: object
    count: int
    coloring_type: str  # "trivial", "nontrivial" or "mixed"


def _key(v):
    if hasattr(v, "sort_key"):
        return (0, v.sort_key())
    return (1, v)


@dataclass
class InvariantResult:
    """Multiset of per-coloring values.

    ``values`` holds ``(value, trivial)`` for each coloring in coloring
    order; :attr:`entries` groups equal values.
    """

    kind: str
    knot: str
    quandle: str
    values: list
    params: tuple = ()
    modulus: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def entries(self):
        groups = {}
        for v, triv in self.values:
            c, kinds = groups.get(v, (0, set()))
            kinds.add("trivial" if triv else "nontrivial")
            groups[v] = (c + 1, kinds)
        out = []
        for v, (c, kinds) in groups.items():
            t = kinds.pop() if len(kinds) == 1 else "mixed"
            out.append(Entry(v, c, t))
        out.sort(key=lambda e: (_key(e.value), e.coloring_type))
        return out

    def counter(self):
        return Counter(v for v, _ in self.values)

    def typed_counter(self):
        return Counter((v, t) for v, t in self.values)

    def __len__(self):
        return len(self.values)
