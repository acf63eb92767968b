"""Exact integer linear algebra on lists of lists of Python ints.

Smith normal form over Z, cokernels over Z and Z_q, kernels over Z_p and
affine solving.  Everything is exact; no floating point is involved.
"""

from dataclasses import dataclass
from math import gcd

from sympy import isprime

from .errors import UnsupportedModulusError


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[0] * c for _ in range(r)]


def mat_mul(A, B):
    Bt = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_neg(A):
    return [[-a for a in r] for r in A]


def mat_mod(A, q):
    if q == 0:
        return [list(r) for r in A]
    return [[a % q for a in r] for r in A]


def block(rows):
    """Assemble a matrix from a grid of equally sized blocks."""
    out = []
    for brow in rows:
        for i in range(len(brow[0])):
            line = []
            for B in brow:
                line.extend(B[i])
            out.append(line)
    return out


def mat_inverse_unimodular(A):
    """Inverse of an integer matrix with determinant +-1."""
    n = len(A)
    D, U, V = smith_decomposition(A)
    if any(abs(D[i][i]) != 1 for i in range(n)):
        raise ValueError("matrix is not invertible over Z")
    # U A V = D with D diagonal +-1, so A^-1 = V D U
    Dinv = [[D[i][j] for j in range(n)] for i in range(n)]
    return mat_mul(mat_mul(V, Dinv), U)


def mat_inverse_mod(A, q):
    """Inverse of a square matrix over Z_q (q > 1), by Gauss-Jordan on units.

    Falls back to the Smith decomposition when q is composite.
    """
    n = len(A)
    D, U, V = smith_decomposition(mat_mod(A, q))
    inv_diag = []
    for i in range(n):
        d = D[i][i] % q
        if gcd(d, q) != 1:
            raise ValueError("matrix is not invertible mod q")
        inv_diag.append(pow(d, -1, q))
    Dinv = [[inv_diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return mat_mod(mat_mul(mat_mul(V, Dinv), U), q)


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for r in M:
        r[i], r[j] = r[j], r[i]


def _add_row(M, src, dst, k):
    # row dst += k * row src
    rs, rd = M[src], M[dst]
    for c in range(len(rd)):
        if rs[c]:
            rd[c] += k * rs[c]


def _add_col(M, src, dst, k):
    for r in M:
        if r[src]:
            r[dst] += k * r[src]


def smith_decomposition(A, track=True):
    """Return ``(D, U, V)`` with ``U A V = D`` and D in Smith normal form.

    U and V are unimodular.  Pivots are chosen by smallest absolute value,
    which keeps intermediate entries small on the sparse matrices that
    occur here.  With ``track=False`` U and V are returned as None.
    """
    M = [list(map(int, r)) for r in A]
    nr = len(M)
    nc = len(M[0]) if nr else 0
    U = identity(nr) if track else None
    V = identity(nc) if track else None
    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            row = M[i]
            for j in range(t, nc):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            _swap_rows(M, i, t)
            if track:
                _swap_rows(U, i, t)
        if j != t:
            _swap_cols(M, j, t)
            if track:
                _swap_cols(V, j, t)
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if M[i][t]:
                    k = M[i][t] // p
                    if k:
                        _add_row(M, t, i, -k)
                        if track:
                            _add_row(U, t, i, -k)
                    if M[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if M[t][j]:
                    k = M[t][j] // p
                    if k:
                        _add_col(M, t, j, -k)
                        if track:
                            _add_col(V, t, j, -k)
                    if M[t][j]:
                        dirty = True
            if dirty:
                # move the smallest remaining entry of row/column t to the pivot
                cands = [(abs(M[i][t]), i, t) for i in range(t + 1, nr) if M[i][t]]
                cands += [(abs(M[t][j]), t, j) for j in range(t + 1, nc) if M[t][j]]
                _, i, j = min(cands)
                if i != t:
                    _swap_rows(M, i, t)
                    if track:
                        _swap_rows(U, i, t)
                if j != t:
                    _swap_cols(M, j, t)
                    if track:
                        _swap_cols(V, j, t)
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if M[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            _add_row(M, bad, t, 1)
            if track:
                _add_row(U, bad, t, 1)
        if M[t][t] < 0:
            M[t] = [-v for v in M[t]]
            if track:
                U[t] = [-v for v in U[t]]
        t += 1
    return M, U, V


def smith_normal_form(A):
    """Diagonal of the Smith normal form, length ``min(rows, cols)``.

    Entries are non-negative and each divides the next (zeros last).
    """
    if not A or not A[0]:
        return ()
    D, _, _ = smith_decomposition(A, track=False)
    return tuple(D[i][i] for i in range(min(len(D), len(D[0]))))


@dataclass(frozen=True)
class ModulePresentation:
    """A finitely generated abelian group ``Z^free_rank + sum Z_t``."""

    torsion: tuple
    free_rank: int

    def __str__(self):
        parts = [f"Z_{t}" for t in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"

    def sort_key(self):
        return (self.free_rank, len(self.torsion), self.torsion)

    def to_json(self):
        return {"torsion": list(self.torsion), "rank": self.free_rank}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["torsion"]), obj["rank"])


def cokernel(A, q=0, n_rows=None):
    """Cokernel of the integer matrix A (column span) over Z (q=0) or Z_q.

    Over Z_q the module is presented by ``[A | qI]``, so free summands
    show up as torsion ``q`` and the free rank is always 0.
    ``n_rows`` is needed only when A has no columns.
    """
    r = len(A) if A else (n_rows or 0)
    if q < 0:
        raise UnsupportedModulusError("modulus must be >= 0")
    if r == 0:
        return ModulePresentation((), 0)
    cols = len(A[0]) if A else 0
    if q > 0:
        M = [list(A[i]) + [q if i == j else 0 for j in range(r)] for i in range(r)] if A else [
            [q if i == j else 0 for j in range(r)] for i in range(r)
        ]
    else:
        M = [list(row) for row in A] if cols else [[0] for _ in range(r)]
    diag = list(smith_normal_form(M))
    diag += [0] * (r - len(diag))
    torsion = tuple(d for d in diag if d > 1)
    free = sum(1 for d in diag if d == 0)
    return ModulePresentation(torsion, free)


def kernel_mod_p(A, p, n_cols=None):
    """Basis of the right kernel of A over the field Z_p (p prime).

    Returned vectors are in reduced echelon form: each has a 1 in a free
    coordinate that is zero in the others.
    """
    if p <= 1 or not isprime(p):
        raise UnsupportedModulusError(f"kernel_mod_p needs a prime modulus, got {p}")
    nc = len(A[0]) if A else (n_cols or 0)
    M = [[a % p for a in row] for row in A]
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [v * inv % p for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                k = M[i][c]
                Mi, Mr = M[i], M[r]
                M[i] = [(a - k * b) % p for a, b in zip(Mi, Mr)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    pivset = set(pivots)
    basis = []
    for f in range(nc):
        if f in pivset:
            continue
        v = [0] * nc
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-M[i][f]) % p
        basis.append(v)
    return basis


def rank_mod_p(A, p, n_cols=None):
    nc = len(A[0]) if A else (n_cols or 0)
    return nc - len(kernel_mod_p(A, p, nc))


def solve_affine(A, b, q=0):
    """One solution x of ``A x = b`` over Z (q=0) or Z_q, or None."""
    if q < 0:
        raise UnsupportedModulusError("modulus must be >= 0")
    nr = len(A)
    if nr == 0:
        return []
    nc = len(A[0])
    D, U, V = smith_decomposition(mat_mod(A, q))
    c = mat_vec(U, b)
    y = [0] * nc
    for i in range(nr):
        d = D[i][i] if i < nc else 0
        ci = c[i] % q if q else c[i]
        if q:
            g = gcd(d, q)
            if ci % g:
                return None
            if d % q == 0:
                continue
            m = q // g
            y[i] = (ci // g) * pow((d // g) % m, -1, m) % m if m > 1 else 0
        else:
            if d == 0:
                if ci != 0:
                    return None
                continue
            if ci % d:
                return None
            y[i] = ci // d
    x = mat_vec(V, y)
    return [v % q for v in x] if q else x
