"""Small finite groups given by multiplication tables, and permutation helpers."""

from itertools import permutations


class FiniteGroup:
    """A finite group stored as a multiplication table on 0..n-1.

    ``mult[a][b]`` is the product ``a*b``.  ``elements`` keeps the
    concrete objects (permutation tuples for symmetric groups) and
    ``labels`` their printable names.
    """

    def __init__(self, mult, elements=None, labels=None, name="G"):
        self.mult = tuple(tuple(row) for row in mult)
        n = len(self.mult)
        self.order = n
        self.elements = tuple(elements) if elements is not None else tuple(range(n))
        self.labels = tuple(labels) if labels is not None else tuple(str(e) for e in self.elements)
        self.name = name
        self.index = {e: i for i, e in enumerate(self.elements)}
        ident = [e for e in range(n) if all(self.mult[e][x] == x for x in range(n))]
        if not ident:
            raise ValueError("multiplication table has no identity")
        self.identity = ident[0]
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.mult[a][b] == self.identity:
                    inv[a] = b
                    break
        self.inv = tuple(inv)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"

    def product(self, items):
        acc = self.identity
        for g in items:
            acc = self.mult[acc][g]
        return acc

    def power(self, g, e):
        if e < 0:
            g, e = self.inv[g], -e
        acc = self.identity
        for _ in range(e):
            acc = self.mult[acc][g]
        return acc

    def conjugacy_classes(self):
        """Map each element to the smallest index in its conjugacy class."""
        rep = [None] * self.order
        for a in range(self.order):
            if rep[a] is not None:
                continue
            cls = {self.mult[self.mult[g][a]][self.inv[g]] for g in range(self.order)}
            m = min(cls)
            for c in cls:
                rep[c] = m
        return tuple(rep)

    def opposite(self, name=None):
        """The opposite group, with product ``a.b = b*a`` in the original."""
        n = self.order
        mult = [[self.mult[b][a] for b in range(n)] for a in range(n)]
        return FiniteGroup(mult, self.elements, self.labels, name or self.name + "^op")

    def centralizer(self, g):
        return [h for h in range(self.order) if self.mult[h][g] == self.mult[g][h]]


def compose(p, q):
    """Permutation composition ``p o q`` (apply q first)."""
    return tuple(p[i] for i in q)


def perm_inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def cycle_label(p):
    """Cycle notation with 1-based points, e.g. ``(1 2)(3 4)``; identity is ``()``."""
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = p[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "()"


def parse_cycles(text, n):
    """Inverse of :func:`cycle_label`, tolerant of commas and spaces."""
    perm = list(range(n))
    text = text.strip()
    if text in ("", "()", "e", "1"):
        return tuple(perm)
    for chunk in text.replace(",", " ").split(")"):
        chunk = chunk.strip().lstrip("(")
        if not chunk:
            continue
        pts = [int(t) - 1 for t in chunk.split()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def transposition(i, j, n):
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def symmetric_group(n):
    """S_n with product ``p*q = p o q`` (functional composition)."""
    elements = sorted(permutations(range(n)))
    index = {e: i for i, e in enumerate(elements)}
    mult = [[index[compose(p, q)] for q in elements] for p in elements]
    return FiniteGroup(mult, elements, [cycle_label(p) for p in elements], f"S{n}")


def permutation_group_on(points, n):
    """Symmetric group on a subset of 0..n-1, elements are full permutations of n points."""
    points = list(points)
    elements = []
    for img in permutations(points):
        p = list(range(n))
        for a, b in zip(points, img):
            p[a] = b
        elements.append(tuple(p))
    elements.sort()
    index = {e: i for i, e in enumerate(elements)}
    mult = [[index[compose(p, q)] for q in elements] for p in elements]
    return FiniteGroup(mult, elements, [cycle_label(p) for p in elements], "S" + "".join(str(p + 1) for p in points))
