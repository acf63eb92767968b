"""Finite quandles as operation tables, standard families and extensions."""

from dataclasses import dataclass
from itertools import product

from .errors import (
    ClosureError,
    DynamicalCocycleError,
    InvalidSizeError,
    MalformedTableError,
    NotFiniteError,
    QuandleError,
)
from .groups import symmetric_group, transposition


@dataclass(frozen=True)
class QuandleReport:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None

    def __str__(self):
        if self.ok:
            return "quandle axioms hold"
        return f"axiom {self.axiom} fails at {self.witness}"


@dataclass(frozen=True)
class AffineStructure:
    """Presentation of an Alexander quandle as (Z_n)^d with ``a*b = T a + (I-T) b``.

    ``vectors[i]`` is the coordinate vector of element ``i``.
    """

    modulus: int
    tmat: tuple
    vectors: tuple

    @property
    def dim(self):
        return len(self.tmat)


def _check_table(table):
    try:
        rows = [list(r) for r in table]
    except TypeError as exc:
        raise MalformedTableError("operation table must be a list of rows") from exc
    n = len(rows)
    if n == 0:
        raise MalformedTableError("empty operation table")
    for r in rows:
        if len(r) != n:
            raise MalformedTableError(f"table is not square: row of length {len(r)} in a {n}-row table")
        for v in r:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise MalformedTableError(f"entry {v!r} outside 0..{n - 1}")
    return rows


def verify_quandle(table):
    """Check the three quandle axioms exhaustively.

    Returns a :class:`QuandleReport`; the witness is the first failing
    element, column, or triple.
    """
    op = _check_table(table)
    n = len(op)
    for x in range(n):
        if op[x][x] != x:
            return QuandleReport(False, "I", (x,))
    for y in range(n):
        seen = {}
        for x in range(n):
            v = op[x][y]
            if v in seen:
                return QuandleReport(False, "II", (seen[v], x, y))
            seen[v] = x
    for x in range(n):
        ox = op[x]
        for y in range(n):
            oxy = op[ox[y]]
            oy = op[y]
            for z in range(n):
                if oxy[z] != op[ox[z]][oy[z]]:
                    return QuandleReport(False, "III", (x, y, z))
    return QuandleReport(True)


class FiniteQuandle:
    """A finite quandle on 0..n-1 with right operation ``op[x][y] = x*y``.

    ``inv_op[x][y]`` is the inverse operation, the unique ``z`` with
    ``z*y = x``.
    """

    def __init__(self, table, name="X", labels=None, check=True, affine=None, embedding=None, group=None):
        op = _check_table(table)
        if check:
            rep = verify_quandle(op)
            if not rep.ok:
                raise QuandleError(f"{name}: {rep}")
        n = len(op)
        self.op = tuple(tuple(r) for r in op)
        inv = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                inv[op[x][y]][y] = x
        self.inv_op = tuple(tuple(r) for r in inv)
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        self.affine = affine
        # for conjugation quandles: group element index of each quandle element
        self.embedding = tuple(embedding) if embedding is not None else None
        self.group = group

    def __len__(self):
        return len(self.op)

    @property
    def order(self):
        return len(self.op)

    def __repr__(self):
        return f"FiniteQuandle({self.name}, order={len(self)})"

    def __eq__(self, other):
        return isinstance(other, FiniteQuandle) and self.op == other.op

    def __hash__(self):
        return hash(self.op)

    def star(self, x, y):
        return self.op[x][y]

    def bar(self, x, y):
        return self.inv_op[x][y]

    def act(self, x, y, e=1):
        """``x * y^e``: apply the inner automorphism of ``y`` e times (e may be negative)."""
        table = self.op if e >= 0 else self.inv_op
        for _ in range(abs(e)):
            x = table[x][y]
        return x

    def act_word(self, x, word):
        """Apply a sequence of ``(y, e)`` pairs, left to right."""
        for y, e in word:
            x = self.act(x, y, e)
        return x

    def is_trivial(self):
        return all(self.op[x][y] == x for x in range(len(self)) for y in range(len(self)))


def inner_automorphism(X, y):
    """The permutation ``x -> x*y`` as a tuple."""
    return tuple(X.op[x][y] for x in range(len(X)))


def trivial(n):
    if n <= 0:
        raise InvalidSizeError("quandle order must be positive")
    return FiniteQuandle([[x] * n for x in range(n)], f"T{n}", check=False)


def dihedral(n):
    """R_n on Z_n with ``i*j = 2j - i``."""
    if n <= 0:
        raise InvalidSizeError("dihedral quandle needs n >= 1")
    table = [[(2 * j - i) % n for j in range(n)] for i in range(n)]
    aff = AffineStructure(n, ((-1 % n,),), tuple((i,) for i in range(n)))
    return FiniteQuandle(table, f"R{n}", check=False, affine=aff)


def _companion(h, n):
    """Companion matrix of a monic polynomial h (low degree first) over Z_n."""
    d = len(h) - 1
    T = [[0] * d for _ in range(d)]
    for i in range(1, d):
        T[i][i - 1] = 1
    for i in range(d):
        T[i][d - 1] = (-h[i]) % n
    return T


def alexander(n, h=None, t=None):
    """Alexander quandle ``Z_n[t, t^-1]/(h)`` with ``a*b = t a + (1-t) b``.

    Give either ``h`` (coefficients, lowest degree first) or a unit ``t``
    in Z_n, which is shorthand for ``h = t_var - t``.
    """
    if n <= 0:
        raise NotFiniteError("modulus must be a positive integer")
    if (h is None) == (t is None):
        raise QuandleError("pass exactly one of h or t")
    from math import gcd

    if t is not None:
        if gcd(t, n) != 1:
            raise QuandleError(f"t={t} is not a unit mod {n}")
        h = [-t, 1]
    h = [c % n for c in h]
    while h and h[-1] == 0:
        h.pop()
    while h and h[0] == 0:
        h.pop(0)
    if not h:
        raise NotFiniteError("h vanishes mod n; the quotient is infinite")
    if gcd(h[-1], n) != 1 or gcd(h[0], n) != 1:
        raise NotFiniteError("leading and constant coefficients of h must be units mod n")
    lead_inv = pow(h[-1], -1, n)
    h = [(c * lead_inv) % n for c in h]
    d = len(h) - 1
    if d == 0:
        return FiniteQuandle([[0]], f"Alex(Z{n},{h})", check=False)
    T = _companion(h, n)
    vectors = list(product(range(n), repeat=d))
    # index = sum v_i n^i, so reverse the product order
    vectors = [tuple(reversed(v)) for v in vectors]
    index = {v: i for i, v in enumerate(vectors)}

    def star(a, b):
        out = []
        for r in range(d):
            s = 0
            for c in range(d):
                s += T[r][c] * (a[c] - b[c])
            out.append((s + b[r]) % n)
        return tuple(out)

    table = [[index[star(a, b)] for b in vectors] for a in vectors]
    labels = [",".join(map(str, v)) if d > 1 else str(v[0]) for v in vectors]
    aff = AffineStructure(n, tuple(tuple(r) for r in T), tuple(vectors))
    name = f"Alex(Z{n},t={t})" if t is not None else f"Alex(Z{n},h={h})"
    return FiniteQuandle(table, name, labels, check=False, affine=aff)


def conj_subquandle(G, subset, exponent=1, name=None):
    """Union of conjugacy classes of ``G`` with ``a*b = b^e a b^-e``.

    ``subset`` holds group element indices; it must be closed under
    conjugation by its own elements.
    """
    subset = list(dict.fromkeys(subset))
    if not subset:
        raise InvalidSizeError("empty subset")
    pos = {g: i for i, g in enumerate(subset)}
    table = []
    for a in subset:
        row = []
        for b in subset:
            be = G.power(b, exponent)
            c = G.mult[G.mult[be][a]][G.inv[be]]
            if c not in pos:
                raise ClosureError(f"{G.labels[b]} conjugates {G.labels[a]} outside the subset")
            row.append(pos[c])
        table.append(row)
    labels = [G.labels[g] for g in subset]
    return FiniteQuandle(table, name or f"Conj({G.name})", labels, check=True, embedding=subset, group=G)


def transpositions(n=5):
    """Transpositions of S_n as a conjugation quandle, ordered (1 2),(1 3),...,(n-1 n)."""
    G = symmetric_group(n)
    subset = [G.index[transposition(i, j, n)] for i in range(n) for j in range(i + 1, n)]
    return conj_subquandle(G, subset, 1, f"Transp(S{n})")


@dataclass(frozen=True)
class DynamicalCocycle:
    """``alpha[x][y][a][b]`` on a fiber ``S = 0..size-1`` over a base quandle."""

    base: FiniteQuandle
    size: int
    alpha: tuple

    def __call__(self, x, y, a, b):
        return self.alpha[x][y][a][b]


def make_dynamical_cocycle(X, size, fn):
    """Tabulate ``fn(x, y, a, b)`` into a :class:`DynamicalCocycle`."""
    n = len(X)
    alpha = tuple(
        tuple(tuple(tuple(fn(x, y, a, b) for b in range(size)) for a in range(size)) for y in range(n))
        for x in range(n)
    )
    return DynamicalCocycle(X, size, alpha)


def verify_dynamical_cocycle(dc):
    """Check the three dynamical cocycle conditions.

    Returns a :class:`QuandleReport` whose axiom field names the failing
    condition ("idempotence", "bijectivity", "cocycle").
    """
    X, S, al = dc.base, dc.size, dc.alpha
    n = len(X)
    for x in range(n):
        for a in range(S):
            if al[x][x][a][a] != a:
                return QuandleReport(False, "idempotence", (x, a))
    for x in range(n):
        for y in range(n):
            for b in range(S):
                col = {al[x][y][a][b] for a in range(S)}
                if len(col) != S:
                    return QuandleReport(False, "bijectivity", (x, y, b))
    op = X.op
    for x, y, z in product(range(n), repeat=3):
        xy, xz, yz = op[x][y], op[x][z], op[y][z]
        A1, A2 = al[xy][z], al[xz][yz]
        B1, B2, B3 = al[x][y], al[x][z], al[y][z]
        for a, b, c in product(range(S), repeat=3):
            if A1[B1[a][b]][c] != A2[B2[a][c]][B3[b][c]]:
                return QuandleReport(False, "cocycle", (x, y, z, a, b, c))
    return QuandleReport(True)


def dynamical_extension(dc, fiber_labels=None):
    """The extension ``S x X`` with ``(a,x)*(b,y) = (alpha_{x,y}(a,b), x*y)``.

    Element ``(a, x)`` has index ``x*|S| + a``.
    """
    rep = verify_dynamical_cocycle(dc)
    if not rep.ok:
        raise DynamicalCocycleError(f"dynamical cocycle condition '{rep.axiom}' fails at {rep.witness}", rep.axiom, rep.witness)
    X, S = dc.base, dc.size
    n = len(X)
    table = []
    for x in range(n):
        for a in range(S):
            row = []
            for y in range(n):
                for b in range(S):
                    row.append(X.op[x][y] * S + dc.alpha[x][y][a][b])
            table.append(row)
    fl = fiber_labels or [str(a) for a in range(S)]
    labels = [f"({fl[a]},{X.labels[x]})" for x in range(n) for a in range(S)]
    return FiniteQuandle(table, f"{X.name}~{S}", labels, check=False)

