"""Quandle modules: actions (eta, tau), colored braid matrices and module invariants.

A module action on ``A = Z^m`` (or ``Z_q^m``) assigns integer matrices
``eta[x][y]`` and ``tau[x][y]`` to each pair of colors.  At a positive
crossing with colors ``(x, y)`` above, the bead on the under strand
below is ``eta_{x,y} a + tau_{x,y} b + kappa_{x,y}``.
"""

from dataclasses import dataclass

from . import linforms as lf
from .braids import closure_colorings, get_convention, parse_braid
from .linalg import (
    cokernel,
    identity,
    mat_inverse_mod,
    mat_inverse_unimodular,
    mat_mod,
    mat_mul,
    mat_neg,
    mat_sub,
    zeros,
)
from .quandles import QuandleReport
from .results import InvariantResult


def _freeze(M):
    return tuple(tuple(r) for r in M)


@dataclass(frozen=True)
class ModuleAction:
    """``eta``/``tau`` tables of m x m integer matrices over Z (q=0) or Z_q.

    ``element`` optionally gives the matrix by which each quandle element
    acts, for actions coming from a module over the associated group
    (wreath and Alexander actions); weighted sums need it.
    """

    X: object
    m: int
    q: int
    eta: tuple
    tau: tuple
    element: tuple | None = None
    name: str = "A"

    def __post_init__(self):
        n = len(self.X)
        inv = {}
        for x in range(n):
            for y in range(n):
                E = self.eta[x][y]
                if E not in inv:
                    inv[E] = _freeze(mat_inverse_mod(E, self.q) if self.q else mat_inverse_unimodular(E))
        eta_inv = tuple(tuple(inv[self.eta[x][y]] for y in range(n)) for x in range(n))
        bar = self.X.inv_op
        # eta_bar_{z,y} = eta^-1_{z/y, y} and tau_bar_{z,y} = -eta_bar_{z,y} tau_{z/y, y}
        eta_bar = tuple(tuple(eta_inv[bar[z][y]][y] for y in range(n)) for z in range(n))
        tau_bar = tuple(
            tuple(_freeze(self._red(mat_neg(mat_mul(eta_bar[z][y], self.tau[bar[z][y]][y])))) for y in range(n))
            for z in range(n)
        )
        object.__setattr__(self, "eta_inv", eta_inv)
        object.__setattr__(self, "eta_bar", eta_bar)
        object.__setattr__(self, "tau_bar", tau_bar)
        if self.element is not None:
            einv = tuple(inv.get(E) or _freeze(mat_inverse_mod(E, self.q) if self.q else mat_inverse_unimodular(E)) for E in self.element)
            object.__setattr__(self, "element_inv", einv)

    def _red(self, M):
        return mat_mod(M, self.q)

    def word_matrix(self, word):
        """Matrix of a product of elements ``[(x, e), ...]`` acting on A, leftmost outermost."""
        if self.element is None:
            raise ValueError(f"action {self.name} has no element matrices")
        M = identity(self.m)
        for x, e in word:
            E = self.element[x] if e > 0 else self.element_inv[x]
            for _ in range(abs(e)):
                M = self._red(mat_mul(M, E))
        return M

    def with_modulus(self, q):
        return make_action(self.X, self.eta, self.tau, q, self.element, self.name)


def make_action(X, eta, tau, q=0, element=None, name="A"):
    def norm(M):
        return _freeze(mat_mod(M, q))

    n = len(X)
    eta = tuple(tuple(norm(eta[x][y]) for y in range(n)) for x in range(n))
    tau = tuple(tuple(norm(tau[x][y]) for y in range(n)) for x in range(n))
    m = len(eta[0][0])
    el = tuple(norm(E) for E in element) if element is not None else None
    return ModuleAction(X, m, q, eta, tau, el, name)


def permutation_matrix(X, y):
    """Matrix of ``x -> x*y`` on the basis indexed by X."""
    n = len(X)
    P = zeros(n, n)
    for x in range(n):
        P[X.op[x][y]][x] = 1
    return P


def wreath_action(X, q=0):
    """``eta_{x,y} = P(y)``, ``tau_{x,y} = I - P(x*y)`` on ``Z^|X|``."""
    n = len(X)
    P = [permutation_matrix(X, y) for y in range(n)]
    I = identity(n)
    eta = [[P[y] for y in range(n)] for x in range(n)]
    tau = [[mat_sub(I, P[X.op[x][y]]) for y in range(n)] for x in range(n)]
    return make_action(X, eta, tau, q, P, f"wreath({X.name})")


def alexander_action(X, t, q=0):
    """``eta = t``, ``tau = 1 - t`` for every pair; ``t`` is an int or an invertible matrix."""
    T = [[t]] if isinstance(t, int) else [list(r) for r in t]
    m = len(T)
    ImT = mat_sub(identity(m), T)
    n = len(X)
    eta = [[T] * n for _ in range(n)]
    tau = [[ImT] * n for _ in range(n)]
    return make_action(X, eta, tau, q, [T] * n, f"alexander(t={t})")


def trivial_action(X, m=1, q=0):
    n = len(X)
    I = identity(m)
    Z = zeros(m, m)
    return make_action(X, [[I] * n for _ in range(n)], [[Z] * n for _ in range(n)], q, [I] * n, "trivial")


def verify_module_action(A):
    """Check the four module relations for all x, y, z.

    The report's axiom field is the relation number 1-4.
    """
    X, q = A.X, A.q
    n = len(X)
    op = X.op
    eta, tau = A.eta, A.tau

    def mm(P, Q):
        return _freeze(mat_mod(mat_mul(P, Q), q))

    def add(P, Q):
        return _freeze(mat_mod([[a + b for a, b in zip(r, s)] for r, s in zip(P, Q)], q))

    I = _freeze(mat_mod(identity(A.m), q))
    for x in range(n):
        if add(tau[x][x], eta[x][x]) != I:
            return QuandleReport(False, "4", (x,))
    for x in range(n):
        for y in range(n):
            xy = op[x][y]
            for z in range(n):
                xz, yz = op[x][z], op[y][z]
                if mm(eta[xy][z], eta[x][y]) != mm(eta[xz][yz], eta[x][z]):
                    return QuandleReport(False, "1", (x, y, z))
                if mm(eta[xy][z], tau[x][y]) != mm(tau[xz][yz], eta[y][z]):
                    return QuandleReport(False, "2", (x, y, z))
                if _freeze(mat_mod(tau[xy][z], q)) != add(mm(eta[xz][yz], tau[x][z]), mm(tau[xz][yz], tau[y][z])):
                    return QuandleReport(False, "3", (x, y, z))
    return QuandleReport(True)


def crossing_block(A, x, y, sign, kappa=None):
    """``(L, c)`` for one crossing: beads below = ``L @ (a, b) + c``.

    ``x``, ``y`` are the colors above the crossing at positions j, j+1.
    ``c`` is a pair of vectors of linear forms (zero when no kappa).
    """
    m = A.m
    I, Z = identity(m), zeros(m, m)
    p = kappa.nparams if kappa is not None else 0
    zero = lf.zero_vector(m, p)
    if sign > 0:
        L = _block2(Z, I, A.eta[x][y], A.tau[x][y])
        c = (zero, kappa.value(x, y) if kappa is not None else zero)
    else:
        z = y
        y0 = x
        eb, tb = A.eta_bar[z][y0], A.tau_bar[z][y0]
        L = _block2(tb, eb, I, Z)
        if kappa is not None:
            c = (lf.neg(lf.act(eb, kappa.value(A.X.inv_op[z][y0], y0))), zero)
        else:
            c = (zero, zero)
    return mat_mod(L, A.q), (lf.reduce(c[0], A.q), lf.reduce(c[1], A.q))


def _block2(P, Q, R, S):
    top = [list(a) + list(b) for a, b in zip(P, Q)]
    bot = [list(a) + list(b) for a, b in zip(R, S)]
    return top + bot


@dataclass(frozen=True)
class ColoredBraidMap:
    """Affine map from top beads to bottom beads of a colored braid.

    ``linear`` is ``km x km``; ``affine`` is a tuple of k vectors of forms.
    """

    colors: tuple
    linear: tuple
    affine: tuple
    q: int

    def apply(self, beads):
        """Bottom beads for numeric top beads (list of k vectors)."""
        flat = [v for b in beads for v in b]
        m = len(flat) // len(beads)
        out = [sum(a * b for a, b in zip(row, flat)) for row in self.linear]
        res = []
        for s in range(len(beads)):
            vec = [out[s * m + i] + self.affine[s][i][-1] for i in range(m)]
            res.append(tuple(v % self.q if self.q else v for v in vec))
        return res


def braid_matrix(word, colors, A, kappa=None, convention=None):
    """Colored braid map for the given top colors (after the convention is applied)."""
    w = get_convention(convention).apply(parse_braid(word))
    X, m, q, k = A.X, A.m, A.q, w.strands
    colors = tuple(colors)
    p = kappa.nparams if kappa is not None else 0
    # rows[s] : m rows of the current map for strand s ; off[s] : affine part
    I = identity(k * m)
    rows = [[list(I[s * m + i]) for i in range(m)] for s in range(k)]
    off = [lf.zero_vector(m, p) for _ in range(k)]
    cols = list(colors)
    for a in w.letters:
        j = abs(a) - 1
        x, y = cols[j], cols[j + 1]
        Lblk, c = crossing_block(A, x, y, 1 if a > 0 else -1, kappa)
        TL = [r[:m] for r in Lblk[:m]]
        TR = [r[m:] for r in Lblk[:m]]
        BL = [r[:m] for r in Lblk[m:]]
        BR = [r[m:] for r in Lblk[m:]]
        rj, rj1 = rows[j], rows[j + 1]
        new_j = _combine(TL, rj, TR, rj1, q)
        new_j1 = _combine(BL, rj, BR, rj1, q)
        oj = lf.add(lf.add(lf.act(TL, off[j]), lf.act(TR, off[j + 1])), c[0])
        oj1 = lf.add(lf.add(lf.act(BL, off[j]), lf.act(BR, off[j + 1])), c[1])
        rows[j], rows[j + 1] = new_j, new_j1
        off[j], off[j + 1] = lf.reduce(oj, q), lf.reduce(oj1, q)
        if a > 0:
            cols[j], cols[j + 1] = y, X.op[x][y]
        else:
            cols[j], cols[j + 1] = X.inv_op[y][x], x
    linear = tuple(tuple(r) for s in range(k) for r in rows[s])
    return ColoredBraidMap(colors, linear, tuple(off), q)


def _combine(P, R1, Q, R2, q):
    # P @ R1 + Q @ R2, where R1, R2 are m x N row blocks
    N = len(R1[0])
    out = []
    for i in range(len(P)):
        acc = [0] * N
        for t, coef in enumerate(P[i]):
            if coef:
                r = R1[t]
                for c in range(N):
                    acc[c] += coef * r[c]
        for t, coef in enumerate(Q[i]):
            if coef:
                r = R2[t]
                for c in range(N):
                    acc[c] += coef * r[c]
        out.append([v % q for v in acc] if q else acc)
    return out


def module_invariant(word, X, A, convention=None, name="", colorings=None):
    """Cokernel of ``M - I`` for every closure coloring."""
    w = parse_braid(word)
    cols = colorings if colorings is not None else closure_colorings(w, X, convention=convention)
    values = []
    for col in cols:
        M = braid_matrix(w, col.colors, A, convention=convention).linear
        N = len(M)
        D = [[M[i][j] - int(i == j) for j in range(N)] for i in range(N)]
        values.append((cokernel(D, A.q), col.trivial))
    return InvariantResult("module", name, X.name, values, modulus=A.q, extra={"action": A.name})


def weighted_sum(colors, beads, A):
    """``sum_i u_i a_i`` with ``u_i = x_k ... x_{i+1}`` acting through element matrices."""
    k = len(colors)
    beads = [b if isinstance(b[0], tuple) else lf.constant_vector(b) for b in beads]
    total = lf.zero_vector(A.m, len(beads[0][0]) - 1)
    for i in range(k):
        U = A.word_matrix([(colors[t], 1) for t in range(k - 1, i, -1)])
        total = lf.add(total, lf.act(U, beads[i]))
    return lf.reduce(total, A.q)

