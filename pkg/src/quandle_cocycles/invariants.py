"""Conjugacy, generalized 2-cocycle and twist-spin 3-cocycle invariants of closed braids.

All computations use the frame described in :mod:`braids`: ``c(s, i)``
is the color of strand ``i`` just above letter ``s``, 1-based.
"""

from dataclasses import dataclass

from . import linforms as lf
from .braids import _grid, closure_colorings, closure_components, get_convention, mirror, parse_braid
from .cocycles import CocycleError
from .linalg import solve_affine
from .modules import braid_matrix
from .results import InvariantResult

# Twist-spin geometry frozen by calibration (see calibration.py): the
# horizontal sheet carries the color of the last strand, and the u-th
# twist acts on cocycle arguments by ``* c(1,k)^u``.
DEFAULT_AXIS = "last"
DEFAULT_OFFSET = 0

FORWARD = "forward"
REVERSED = "reversed"


def _prep(word, X, convention):
    w = get_convention(convention).apply(parse_braid(word))
    return w


def _colorings(w, X, colorings):
    # colorings are computed on the already transformed word
    if colorings is not None:
        return colorings
    return closure_colorings(w, X, convention="canonical")


# --- conjugacy invariant --------------------------------------------------------------


def component_weights(grid, beta, start):
    """Under-crossing weights ``(h, sign, x, y)`` met along the component through ``start``.

    The walk starts at the top of strand ``start`` and follows the
    orientation (downward), wrapping through the closure.
    """
    w = grid.word
    X = beta.X
    out = []
    pos = start
    while True:
        for s, a in enumerate(w.letters, start=1):
            j = abs(a)  # 1-based left strand of the crossing
            p = pos + 1
            if a > 0:
                if p == j:
                    x, y = grid.c(s, j), grid.c(s, j + 1)
                    out.append((beta(x, y), 1, x, y))
                    pos += 1
                elif p == j + 1:
                    pos -= 1
            else:
                if p == j + 1:
                    x, y = grid.c(s + 1, j), grid.c(s, j)
                    out.append((beta(x, y), -1, x, y))
                    pos -= 1
                elif p == j:
                    pos += 1
        if pos == start:
            break
    del X
    return out


def conjugacy_invariant(word, X, beta, convention=None, name="", colorings=None):
    """Per coloring, the tuple of conjugacy classes (canonical minimum) of the component products."""
    from .cocycles import verify_nonabelian_2cocycle

    if beta.X is not X and beta.X != X:
        raise CocycleError("cocycle is defined on a different quandle")
    rep = verify_nonabelian_2cocycle(beta)
    if not rep.ok:
        raise CocycleError(f"not a quandle 2-cocycle: {rep}", rep.witness)
    w = _prep(word, X, convention)
    H = beta.H
    cls = H.conjugacy_classes()
    comps = closure_components(w, convention="canonical")
    values = []
    products = []
    for col in _colorings(w, X, colorings):
        grid = _grid(w, X, col.colors)
        row = []
        raw = []
        for comp in comps:
            acc = H.identity
            for h, e, _, _ in component_weights(grid, beta, comp[0]):
                acc = H.mult[acc][h if e > 0 else H.inv[h]]
            raw.append(acc)
            row.append(cls[acc])
        values.append((tuple(row), col.trivial))
        products.append(tuple(raw))
    res = InvariantResult("conjugacy", name, X.name, values, extra={"group": H, "components": comps})
    res.extra["products"] = products
    return res


def class_labels(result):
    H = result.extra["group"]
    return [tuple(H.labels[h] for h in v) for v, _ in result.values]


# --- generalized 2-cocycle invariant ---------------------------------------------------


def crossing_weights(grid, A, kappa):
    """Boltzmann weight of each letter of a colored braid (list of vectors)."""
    w = grid.word
    k = w.strands
    out = []
    for s, a in enumerate(w.letters, start=1):
        j = abs(a)
        prefix = [(grid.c(s, i), 1) for i in range(k, j + 1, -1)]
        P = A.word_matrix(prefix)
        if a > 0:
            v = lf.act(P, kappa.value(grid.c(s, j), grid.c(s, j + 1)))
        else:
            v = lf.neg(lf.act(P, kappa.value(grid.c(s + 1, j), grid.c(s, j))))
        out.append(lf.reduce(v, A.q))
    return out


def coloring_contribution(grid, A, kappa):
    total = lf.zero_vector(A.m, kappa.nparams)
    for v in crossing_weights(grid, A, kappa):
        total = lf.add(total, v)
    return lf.reduce(total, A.q)


def _check_pair(X, A, kappa, degree):
    if A.X is not X and A.X != X:
        raise CocycleError("module action is over a different quandle")
    if kappa.degree != degree:
        raise CocycleError(f"need a degree {degree} cochain")
    if kappa.m != A.m:
        raise CocycleError(f"cochain rank {kappa.m} does not match module rank {A.m}")


def generalized_2cocycle_invariant(word, X, A, kappa, convention=None, name="", colorings=None):
    """Per coloring, the sum of the crossing weights of a 2-cocycle with module coefficients."""
    _check_pair(X, A, kappa, 2)
    w = _prep(word, X, convention)
    values = []
    for col in _colorings(w, X, colorings):
        grid = _grid(w, X, col.colors)
        values.append((coloring_contribution(grid, A, kappa), col.trivial))
    return InvariantResult("cocycle2", name, X.name, values, kappa.params, A.q)


# --- twist-spin invariant --------------------------------------------------------------


def axis_index(axis, k):
    if axis == "last":
        return k
    if axis == "first":
        return 1
    if isinstance(axis, int) and 1 <= axis <= k:
        return axis
    raise ValueError(f"bad axis {axis!r}")


def face_color(grid, X, s, j, kaxis, reverse):
    """Color of the face left of strand j at level s, seen from the horizontal sheet."""
    f = grid.c(1, kaxis)
    table = X.op if reverse else X.inv_op
    for i in range(kaxis, j - 1, -1):
        f = table[f][grid.c(s, i)]
    return f


def triple_point_weights(grid, X, A, kappa, u, orientation=FORWARD, axis=DEFAULT_AXIS, offset=DEFAULT_OFFSET):
    """Weights ``(B_left, B_right)`` of the two triple points of each letter in twist u."""
    w = grid.word
    n = w.strands
    kx = axis_index(axis, n)
    ck = grid.c(1, kx)
    e = u - offset

    def shift(*args):
        return tuple(X.act(a, ck, e) for a in args)

    out = []
    for s, a in enumerate(w.letters, start=1):
        j = abs(a)
        c = grid.c
        if orientation == FORWARD:
            P = A.word_matrix([(ck, -1)] + [(c(s, i), 1) for i in range(n, j + 1, -1)])
            f = face_color(grid, X, s, j, kx, False)
            if a > 0:
                left = lf.neg(lf.act(P, kappa.value(*shift(f, c(s, j), c(s, j + 1)))))
                right = lf.act(P, kappa.value(*shift(c(s, j), c(s, j + 1), ck)))
            else:
                left = lf.act(P, kappa.value(*shift(f, c(s + 1, j), c(s, j))))
                right = lf.neg(lf.act(P, kappa.value(*shift(c(s + 1, j), c(s, j), ck))))
        elif orientation == REVERSED:
            P = A.word_matrix([(c(s, i), -1) for i in range(n, j - 1, -1)])
            f = face_color(grid, X, s, j + 2, kx, True)
            if a > 0:
                left = lf.act(P, kappa.value(*shift(f, c(s + 1, j + 1), c(s, j + 1))))
                right = lf.neg(lf.act(P, kappa.value(*shift(c(s + 1, j + 1), c(s, j + 1), ck))))
            else:
                left = lf.neg(lf.act(P, kappa.value(*shift(f, c(s, j + 1), c(s, j)))))
                right = lf.act(P, kappa.value(*shift(c(s, j + 1), c(s, j), ck)))
        else:
            raise ValueError(f"orientation must be {FORWARD!r} or {REVERSED!r}")
        out.append((lf.reduce(left, A.q), lf.reduce(right, A.q)))
    return out


def twistspin_contribution(grid, X, A, kappa, twists, orientation=FORWARD, axis=DEFAULT_AXIS, offset=DEFAULT_OFFSET):
    total = lf.zero_vector(A.m, kappa.nparams)
    for u in range(1, twists + 1):
        for left, right in triple_point_weights(grid, X, A, kappa, u, orientation, axis, offset):
            total = lf.add(lf.add(total, left), right)
    return lf.reduce(total, A.q)


def twistspin_invariant(
    word, X, A, kappa, twists=2, orientation=FORWARD, axis=DEFAULT_AXIS, offset=DEFAULT_OFFSET,
    convention=None, name="", colorings=None,
):
    """Per coloring, the 3-cocycle state sum of the twist-spun surface."""
    if twists < 1:
        raise ValueError("twist count must be at least 1")
    _check_pair(X, A, kappa, 3)
    w = _prep(word, X, convention)
    values = []
    for col in _colorings(w, X, colorings):
        grid = _grid(w, X, col.colors)
        values.append((twistspin_contribution(grid, X, A, kappa, twists, orientation, axis, offset), col.trivial))
    extra = {"twists": twists, "orientation": orientation, "axis": axis, "offset": offset}
    return InvariantResult("twistspin", name, X.name, values, kappa.params, A.q, extra)


def twist_scaling_check(word, X, A, kappa, k, convention=None, **kw):
    """Whether Tw^{2k} equals k times Tw^2, coloring by coloring and as multisets."""
    base = twistspin_invariant(word, X, A, kappa, 2, convention=convention, **kw)
    big = twistspin_invariant(word, X, A, kappa, 2 * k, convention=convention, **kw)
    for (v2, _), (vk, _) in zip(base.values, big.values):
        if lf.reduce(lf.scale(v2, k), A.q) != vk:
            return False
    scaled = sorted(lf.reduce(lf.scale(v, k), A.q) for v, _ in base.values)
    return scaled == sorted(v for v, _ in big.values)


@dataclass
class ComparisonReport:
    """Two invariant multisets and whether they differ (which proves distinctness)."""

    kind: str
    first: InvariantResult
    second: InvariantResult

    @property
    def distinct(self):
        return self.first.counter() != self.second.counter()

    @property
    def verdict(self):
        if self.kind == "invertibility":
            return "non-invertible" if self.distinct else "inconclusive"
        return "chiral" if self.distinct else "inconclusive"


def invertibility_report(word, X, A, kappa, twists=2, convention=None, name="", **kw):
    fwd = twistspin_invariant(word, X, A, kappa, twists, FORWARD, convention=convention, name=name, **kw)
    rev = twistspin_invariant(word, X, A, kappa, twists, REVERSED, convention=convention, name=name, **kw)
    return ComparisonReport("invertibility", fwd, rev)


def chirality_report(word, X, A, kappa, convention=None, name=""):
    """Compare the 2-cocycle invariant of a closed braid with that of its mirror image."""
    w = parse_braid(word)
    a = generalized_2cocycle_invariant(w, X, A, kappa, convention=convention, name=name)
    b = generalized_2cocycle_invariant(mirror(w), X, A, kappa, convention=convention, name=name + "*")
    return ComparisonReport("chirality", a, b)


def extension_coloring_check(word, coloring, A, kappa, convention=None):
    """Whether a closure coloring lifts to the extension by kappa.

    Solves ``(M - I) a = -c`` for the colored braid map ``a -> M a + c``.
    When a lift exists the coloring's contribution must vanish; that is
    checked and a violation raises :class:`CocycleError`.
    """
    if kappa.nparams:
        raise CocycleError("bind the parameters before checking extensions")
    colors = coloring.colors if hasattr(coloring, "colors") else tuple(coloring)
    w = _prep(word, A.X, convention)
    cbm = braid_matrix(w, colors, A, kappa, convention="canonical")
    N = len(cbm.linear)
    D = [[cbm.linear[i][j] - int(i == j) for j in range(N)] for i in range(N)]
    rhs = [-v for vec in cbm.affine for v in lf.numeric(vec)]
    ok = solve_affine(D, rhs, A.q) is not None
    if ok:
        contrib = coloring_contribution(_grid(w, A.X, colors), A, kappa)
        if not lf.is_zero(contrib, A.q):
            raise CocycleError(f"extendable coloring {colors} has nonzero contribution {lf.numeric(contrib)}")
    return ok
