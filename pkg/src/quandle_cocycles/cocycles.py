"""Cochains with module coefficients, cocycle checks, searches and group constructions.

A cochain of degree n assigns to each n-tuple of quandle elements a
vector in ``A = Z^m`` or ``Z_q^m`` whose entries are linear forms in
named parameters (see :mod:`linforms`).  Coboundaries and cocycle
conditions come from the twisted boundary map

    d(x_1..x_{n+1}) = (-1)^{n+1} sum_i (-1)^i eta_{[..^x_i..],[x_i..]} (..^x_i..)
                    - (-1)^{n+1} sum_i (-1)^i (x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, ..)
                    + (-1)^{n+1} tau_{[x_1,x_3..],[x_2,x_3..]} (x_2..x_{n+1})

with ``[a_1..a_p]`` the left-normed product ``((a_1*a_2)*..)*a_p`` and
the sums over i = 2..n+1.  We take ``(delta f) = -f o d`` so that in
degree 1 ``delta f(x, y) = f(x*y) - eta_{x,y} f(x) - tau_{x,y} f(y)``.
"""

from dataclasses import dataclass
from itertools import product

from . import linforms as lf
from .errors import CocycleError, UnsupportedModulusError
from .groups import compose, cycle_label, perm_inverse, permutation_group_on
from .linalg import identity, kernel_mod_p, mat_neg, mat_mod, solve_affine
from .quandles import QuandleReport


class VectorCochain:
    """A cochain ``X^degree -> A`` with linear-form entries.

    Missing tuples are zero.  Values are reduced mod q on entry.
    """

    def __init__(self, X, degree, m, q=0, params=(), values=None):
        self.X = X
        self.degree = degree
        self.m = m
        self.q = q
        self.params = tuple(params)
        self._zero = lf.zero_vector(m, len(self.params))
        self.values = {}
        n = len(X)
        for key, vec in (values or {}).items():
            key = tuple(key)
            if len(key) != degree or any(not 0 <= k < n for k in key):
                raise CocycleError(f"bad cochain argument {key}")
            vec = tuple(tuple(f) for f in vec)
            if len(vec) != m or any(len(f) != len(self.params) + 1 for f in vec):
                raise CocycleError(f"value at {key} has the wrong shape")
            vec = lf.reduce(vec, q)
            if not lf.is_zero(vec, q):
                self.values[key] = vec

    @property
    def nparams(self):
        return len(self.params)

    def value(self, *args):
        return self.values.get(tuple(args), self._zero)

    __call__ = value

    def support(self):
        return sorted(self.values)

    def bind(self, values):
        """Numeric cochain obtained by substituting parameter values."""
        vals = {k: lf.bind(v, values) for k, v in self.values.items()}
        return VectorCochain(self.X, self.degree, self.m, self.q, (), vals)

    def __add__(self, other):
        vals = dict(self.values)
        for k, v in other.values.items():
            vals[k] = lf.add(vals.get(k, self._zero), v)
        return VectorCochain(self.X, self.degree, self.m, self.q, self.params, vals)

    def scaled(self, k):
        return VectorCochain(self.X, self.degree, self.m, self.q, self.params, {a: lf.scale(v, k) for a, v in self.values.items()})

    def is_zero(self):
        return not self.values

    def __eq__(self, other):
        return (
            isinstance(other, VectorCochain)
            and self.degree == other.degree
            and self.params == other.params
            and self.values == other.values
        )

    def __repr__(self):
        return f"VectorCochain(degree={self.degree}, m={self.m}, q={self.q}, params={self.params}, support={len(self.values)})"


def cochain_from_flat(X, degree, m, q, flat, params=()):
    """Cochain from a flat coordinate vector ordered by (tuple, component)."""
    vals = {}
    n = len(X)
    for t_idx, args in enumerate(product(range(n), repeat=degree)):
        vec = tuple((0,) * len(params) + (int(flat[t_idx * m + i]),) for i in range(m))
        vals[args] = vec
    return VectorCochain(X, degree, m, q, params, vals)


def cochain_to_flat(f):
    n = len(f.X)
    out = []
    for args in product(range(n), repeat=f.degree):
        out.extend(lf.numeric(f.value(*args)))
    return out


def left_normed(X, items):
    acc = items[0]
    for y in items[1:]:
        acc = X.op[acc][y]
    return acc


def boundary(A, xs):
    """Terms ``(matrix, tuple)`` of the twisted boundary of ``xs`` (length n+1)."""
    X = A.X
    n = len(xs) - 1
    I = identity(A.m)
    sgn = -1 if (n + 1) % 2 else 1
    terms = []
    for i in range(2, n + 2):
        s = sgn * (1 if i % 2 == 0 else -1)
        hat = xs[: i - 1] + xs[i:]
        L = left_normed(X, hat)
        R = left_normed(X, xs[i - 1:])
        E = A.eta[L][R]
        terms.append((E if s > 0 else mat_neg(E), hat))
        xi = xs[i - 1]
        shifted = tuple(X.op[a][xi] for a in xs[: i - 1]) + xs[i:]
        terms.append((mat_neg(I) if s > 0 else I, shifted))
    rest = (xs[0],) + xs[2:]
    T = A.tau[left_normed(X, rest)][left_normed(X, xs[1:])]
    terms.append((T if sgn > 0 else mat_neg(T), xs[1:]))
    return terms


def cocycle_defect(f, A, xs):
    """``f`` evaluated on the boundary of ``xs``; zero for every xs iff f is a cocycle."""
    total = f._zero
    for M, t in boundary(A, tuple(xs)):
        total = lf.add(total, lf.act(M, f.value(*t)))
    return lf.reduce(total, A.q)


def coboundary(f, A):
    """``delta f = -f o d`` as a cochain of one higher degree."""
    n = len(A.X)
    vals = {}
    for xs in product(range(n), repeat=f.degree + 1):
        vals[xs] = lf.neg(cocycle_defect(f, A, xs))
    return VectorCochain(A.X, f.degree + 1, f.m, A.q, f.params, vals)


def degenerate_tuples(n, degree):
    """Tuples on which a quandle cochain must vanish (adjacent repeats)."""
    out = []
    for xs in product(range(n), repeat=degree):
        if any(xs[i] == xs[i + 1] for i in range(degree - 1)):
            out.append(xs)
    return out


@dataclass(frozen=True)
class CocycleReport:
    ok: bool
    condition: str | None = None
    witness: tuple | None = None

    def __str__(self):
        return "cocycle conditions hold" if self.ok else f"{self.condition} condition fails at {self.witness}"


def _check_shape(f, A, degree):
    if f.degree != degree:
        raise CocycleError(f"expected a degree {degree} cochain, got degree {f.degree}")
    if f.m != A.m:
        raise CocycleError(f"cochain has {f.m} components but the module has rank {A.m}")
    if f.X is not A.X and f.X != A.X:
        raise CocycleError("cochain and module are over different quandles")


def verify_cocycle(f, A, degenerate=True):
    """Exhaustive check of ``f o d = 0`` (identically in the parameters) and degeneracy."""
    q = A.q
    n = len(A.X)
    if degenerate:
        for xs in degenerate_tuples(n, f.degree):
            if not lf.is_zero(f.value(*xs), q):
                return CocycleReport(False, "degeneracy", xs)
    for xs in product(range(n), repeat=f.degree + 1):
        if not lf.is_zero(cocycle_defect(f, A, xs), q):
            return CocycleReport(False, "cocycle", xs)
    return CocycleReport(True)


def verify_generalized_2cocycle(kappa, A):
    """``eta_{x*y,z} k_{x,y} + k_{x*y,z} = eta_{x*z,y*z} k_{x,z} + tau_{x*z,y*z} k_{y,z} + k_{x*z,y*z}`` and ``k_{x,x} = 0``."""
    _check_shape(kappa, A, 2)
    return verify_cocycle(kappa, A)


def verify_generalized_3cocycle(kappa, A):
    """Three-cocycle condition from the twisted boundary, plus ``k_{x,x,y} = k_{x,y,y} = 0``."""
    _check_shape(kappa, A, 3)
    return verify_cocycle(kappa, A)


def coboundary_matrix(A, degree, normalized=True):
    """Integer matrix of ``delta`` on cochains of the given degree.

    Columns are coordinates ``(tuple, component)`` of the source; with
    ``normalized`` the degenerate source coordinates are dropped.  Returns
    ``(matrix, source_tuples)``.
    """
    X, m = A.X, A.m
    n = len(X)
    src = [xs for xs in product(range(n), repeat=degree)]
    if normalized:
        deg = set(degenerate_tuples(n, degree))
        src = [xs for xs in src if xs not in deg]
    col = {xs: i for i, xs in enumerate(src)}
    rows = []
    for ys in product(range(n), repeat=degree + 1):
        block = [[0] * (len(src) * m) for _ in range(m)]
        for M, t in boundary(A, ys):
            if t not in col:
                continue
            base = col[t] * m
            for r in range(m):
                for c in range(m):
                    if M[r][c]:
                        block[r][base + c] -= M[r][c]
        rows.extend(block)
    return mat_mod(rows, A.q), src


@dataclass
class CocycleSpace:
    """Bases (mod a prime) of quandle cocycles and coboundaries in one degree."""

    degree: int
    q: int
    cocycles: list
    coboundaries: list

    @property
    def cohomology_dim(self):
        return len(self.cocycles) - len(self.coboundaries)


def search_cocycles(A, degree, q=None):
    """Cocycle and coboundary bases of the given degree over the prime field Z_q."""
    q = q if q is not None else A.q
    if q <= 1:
        raise UnsupportedModulusError("cocycle search needs a prime modulus")
    if A.q != q:
        A = A.with_modulus(q)
    X, m = A.X, A.m
    D, src = coboundary_matrix(A, degree)
    basis = kernel_mod_p(D, q, len(src) * m)
    n = len(X)

    def to_cochain(vec, tuples, deg):
        vals = {}
        for i, xs in enumerate(tuples):
            v = vec[i * m:(i + 1) * m]
            if any(v):
                vals[xs] = lf.constant_vector(v)
        return VectorCochain(X, deg, m, q, (), vals)

    cocycles = [to_cochain(v, src, degree) for v in basis]
    cobs = []
    if degree >= 2:
        Dm, src_m = coboundary_matrix(A, degree - 1)
        # image of delta from degree-1: column space of Dm, restricted to normalized targets
        idx = {xs: i for i, xs in enumerate(product(range(n), repeat=degree))}
        keep = [idx[xs] * m + c for xs in src for c in range(m)]
        img = [[Dm[r][c] for r in keep] for c in range(len(src_m) * m)]
        # row-reduce the spanning set to a basis
        for v in _row_basis(img, q):
            cobs.append(to_cochain(v, src, degree))
    elif degree == 1:
        cobs = []
    return CocycleSpace(degree, q, cocycles, cobs)


def _row_basis(rows, p):
    basis = []
    pivots = []
    for r in rows:
        v = [a % p for a in r]
        for b, pc in zip(basis, pivots):
            if v[pc]:
                k = v[pc]
                v = [(a - k * c) % p for a, c in zip(v, b)]
        pc = next((i for i, a in enumerate(v) if a), None)
        if pc is None:
            continue
        inv = pow(v[pc], -1, p)
        v = [a * inv % p for a in v]
        for i, b in enumerate(basis):
            if b[pc]:
                k = b[pc]
                basis[i] = [(a - k * c) % p for a, c in zip(b, v)]
        basis.append(v)
        pivots.append(pc)
    return basis


def is_coboundary(f, A):
    """Whether a numeric cochain is ``delta`` of a normalized cochain of lower degree."""
    if f.nparams:
        raise CocycleError("bind the parameters before testing for a coboundary")
    if f.degree < 2:
        return f.is_zero()
    D, src = coboundary_matrix(A, f.degree - 1)
    target = cochain_to_flat(f)
    return solve_affine(D, target, A.q) is not None


# --- group 2-cocycles and conjugation quandles -------------------------------------


@dataclass(frozen=True)
class GroupModule:
    """A finite group acting on ``Z_q^m`` (or ``Z^m``) by ``rho[g]``."""

    G: object
    rho: tuple
    q: int = 0

    @property
    def m(self):
        return len(self.rho[0])

    def act(self, g, v):
        return lf.reduce(lf.act(self.rho[g], v), self.q)


def trivial_group_module(G, m=1, q=0):
    I = tuple(tuple(r) for r in identity(m))
    return GroupModule(G, tuple(I for _ in range(G.order)), q)


def group_cocycle_defect(theta, GM, x, y, z):
    """``theta(x,y) + theta(xy,z) - x theta(y,z) - theta(x,yz)``."""
    G = GM.G
    xy, yz = G.mult[x][y], G.mult[y][z]
    lhs = lf.add(theta[x][y], theta[xy][z])
    rhs = lf.add(GM.act(x, theta[y][z]), theta[x][yz])
    return lf.reduce(lf.sub(lhs, rhs), GM.q)


def verify_group_2cocycle(theta, GM):
    G = GM.G
    for x, y, z in product(range(G.order), repeat=3):
        if not lf.is_zero(group_cocycle_defect(theta, GM, x, y, z), GM.q):
            return CocycleReport(False, "group cocycle", (x, y, z))
    return CocycleReport(True)


def group_coboundary(gamma, GM):
    """``delta gamma(x, y) = gamma(xy) - gamma(x) - x gamma(y)`` as a table."""
    G = GM.G
    return [
        [lf.reduce(lf.sub(lf.sub(gamma[G.mult[x][y]], gamma[x]), GM.act(x, gamma[y])), GM.q) for y in range(G.order)]
        for x in range(G.order)
    ]


def group_module_action(X, GM):
    """Action on a conjugation quandle ``x*y = y x y^-1``: ``eta_{x,y} = y``, ``tau_{x,y} = 1 - x*y``."""
    from .modules import make_action

    if X.embedding is None:
        raise CocycleError("quandle is not a conjugation quandle")
    emb = X.embedding
    n = len(X)
    I = identity(GM.m)
    el = [GM.rho[emb[x]] for x in range(n)]
    eta = [[el[y] for y in range(n)] for x in range(n)]
    tau = [[[[I[i][j] - el[X.op[x][y]][i][j] for j in range(GM.m)] for i in range(GM.m)] for y in range(n)] for x in range(n)]
    return make_action(X, eta, tau, GM.q, el, f"group({GM.G.name})")


def kappa_from_group_cocycle(theta, GM, X):
    """``kappa_{x,y} = theta(y, x) - theta(y x y^-1, y)`` on a conjugation quandle."""
    emb = X.embedding
    G = GM.G
    n = len(X)
    vals = {}
    for x in range(n):
        for y in range(n):
            gx, gy = emb[x], emb[y]
            conj = G.mult[G.mult[gy][gx]][G.inv[gy]]
            vals[(x, y)] = lf.sub(theta[gy][gx], theta[conj][gy])
    return VectorCochain(X, 2, GM.m, GM.q, (), vals)


def kappa_from_group_cocycle_long(theta, GM, X):
    """The same cocycle through ``theta(y,x) - (yx) theta(y^-1, y) + theta(yx, y^-1)``."""
    emb = X.embedding
    G = GM.G
    n = len(X)
    vals = {}
    for x in range(n):
        for y in range(n):
            gx, gy = emb[x], emb[y]
            yx = G.mult[gy][gx]
            yi = G.inv[gy]
            v = lf.sub(theta[gy][gx], GM.act(yx, theta[yi][gy]))
            vals[(x, y)] = lf.add(v, theta[yx][yi])
    return VectorCochain(X, 2, GM.m, GM.q, (), vals)


# --- non-abelian 2-cocycles ---------------------------------------------------------


class NonAbelianCocycle:
    """``beta[x][y]`` in a finite group H (products as in ``H.mult``)."""

    def __init__(self, X, H, table, name="beta"):
        self.X = X
        self.H = H
        self.table = tuple(tuple(r) for r in table)
        self.name = name

    def __call__(self, x, y):
        return self.table[x][y]


def verify_nonabelian_2cocycle(beta):
    """``beta(x,y) beta(x*y,z) = beta(x,z) beta(x*z,y*z)`` and ``beta(x,x) = 1``."""
    X, H, b = beta.X, beta.H, beta.table
    n = len(X)
    for x in range(n):
        if b[x][x] != H.identity:
            return QuandleReport(False, "normalization", (x,))
    op, mult = X.op, H.mult
    for x, y, z in product(range(n), repeat=3):
        if mult[b[x][y]][b[op[x][y]][z]] != mult[b[x][z]][b[op[x][z]][op[y][z]]]:
            return QuandleReport(False, "rack cocycle", (x, y, z))
    return QuandleReport(True)


def cocycle_from_section(X, x0, section, points):
    """Cocycle ``beta(x,y) = rho(t(x,y))`` from a section of the inner action.

    ``X`` is a conjugation quandle of permutations (``x*y = y x y^-1``),
    ``section[x]`` a permutation with ``section[x] x0 section[x]^-1 = x``
    and ``rho`` the restriction of the centralizer of ``x0`` to ``points``.
    Products of inner automorphisms and of H are read left to right, so
    ``t(x,y)`` is the composite of ``s(x)``, then ``y``, then
    ``s(x*y)^-1``, and H is the opposite of the symmetric group on
    ``points``.
    """
    G = X.group
    perms = [G.elements[g] for g in X.embedding]
    deg = len(perms[0])
    Hc = permutation_group_on(points, deg)
    H = Hc.opposite(name="Sym(" + ",".join(str(p + 1) for p in points) + ")")
    pts = set(points)
    n = len(X)
    table = []
    for x in range(n):
        row = []
        for y in range(n):
            xy = X.op[x][y]
            t = compose(perm_inverse(section[xy]), compose(perms[y], section[x]))
            if compose(compose(t, x0), perm_inverse(t)) != x0:
                raise CocycleError(f"t({X.labels[x]},{X.labels[y]}) does not centralize the base point")
            restricted = tuple(t[i] if i in pts else i for i in range(deg))
            if any(t[i] not in pts for i in pts):
                raise CocycleError("centralizer element does not preserve the chosen points")
            row.append(H.index[restricted])
        table.append(row)
    return NonAbelianCocycle(X, H, table, "section")


def transposition_section_cocycle(n=5):
    """Cocycle on the transpositions of S_n with ``x0 = (1 2)`` and ``s(i j) = (1 i)(2 j)``."""
    from .groups import transposition
    from .quandles import transpositions

    X = transpositions(n)
    x0 = transposition(0, 1, n)
    section = []
    for g in X.embedding:
        p = X.group.elements[g]
        i, j = [a for a in range(n) if p[a] != a]
        # (1 i)(2 j) in composition, with 1-based labels as in cycle notation;
        # (1 1) and (2 2) are the identity
        s = compose(transposition(0, i, n), transposition(1, j, n))
        section.append(s)
    for x, g in enumerate(X.embedding):
        target = X.group.elements[g]
        if compose(compose(section[x], x0), perm_inverse(section[x])) != target:
            raise CocycleError(f"section fails at {cycle_label(target)}")
    return cocycle_from_section(X, x0, section, list(range(2, n)))
