"""Vectors whose entries are integer linear forms in named parameters.

A form in parameters ``q1..qp`` is a tuple of ``p + 1`` ints: the
parameter coefficients followed by the constant term.  A vector is a
tuple of forms.  Numeric vectors are the case ``p = 0``.
"""


def zero_vector(m, p=0):
    return tuple((0,) * (p + 1) for _ in range(m))


def constant_vector(values, p=0):
    return tuple((0,) * p + (int(v),) for v in values)


def add(u, v):
    return tuple(tuple(a + b for a, b in zip(fu, fv)) for fu, fv in zip(u, v))


def sub(u, v):
    return tuple(tuple(a - b for a, b in zip(fu, fv)) for fu, fv in zip(u, v))


def neg(u):
    return tuple(tuple(-a for a in f) for f in u)


def scale(u, k):
    return tuple(tuple(k * a for a in f) for f in u)


def act(A, v):
    """Apply an integer matrix to a vector of forms."""
    width = len(v[0]) if v else 0
    out = []
    for row in A:
        acc = [0] * width
        for a, f in zip(row, v):
            if a:
                for c in range(width):
                    acc[c] += a * f[c]
        out.append(tuple(acc))
    return tuple(out)


def reduce(v, q):
    if not q:
        return tuple(tuple(f) for f in v)
    return tuple(tuple(a % q for a in f) for f in v)


def is_zero(v, q=0):
    return all(a % q == 0 if q else a == 0 for f in v for a in f)


def evaluate(v, values, q=0):
    """Substitute integer values for the parameters."""
    out = []
    for f in v:
        s = f[-1] + sum(c * x for c, x in zip(f[:-1], values))
        out.append(s % q if q else s)
    return tuple(out)


def bind(v, values):
    """Substitute values for the parameters, keeping the form shape with p = 0."""
    return tuple((f[-1] + sum(c * x for c, x in zip(f[:-1], values)),) for f in v)


def numeric(v):
    """Constant terms of a parameter-free vector."""
    return tuple(f[-1] for f in v)


def _signed_mod(a, q):
    # print residues in the symmetric range so -q1 reads as -q1, not 2q1
    if not q:
        return a
    a %= q
    return a - q if 2 * a > q else a


def format_form(f, params=(), q=0):
    terms = []
    for c, name in zip(f[:-1], params):
        c = _signed_mod(c, q)
        if c == 0:
            continue
        coef = "" if c == 1 else "-" if c == -1 else str(c)
        terms.append(f"{coef}{name}")
    const = _signed_mod(f[-1], q) if params else (f[-1] % q if q else f[-1])
    if const or not terms:
        terms.append(str(const))
    s = terms[0]
    for t in terms[1:]:
        s += t if t.startswith("-") else "+" + t
    return s


def format_vector(v, params=(), q=0):
    return "(" + ", ".join(format_form(f, params, q) for f in v) + ")"


def parse_form(text, params):
    """Parse ``2q1-q2+3`` style text into a form over ``params``."""
    import re

    text = text.replace(" ", "").replace("_", "")
    coeffs = [0] * (len(params) + 1)
    names = [p.replace("_", "") for p in params]
    if not text:
        raise ValueError("empty form")
    for sign, num, name in re.findall(r"([+-]?)(\d*)([A-Za-z]\w*)?", text):
        if not num and not name:
            if sign:
                raise ValueError(f"cannot parse form {text!r}")
            continue
        k = int(num) if num else 1
        if sign == "-":
            k = -k
        if name:
            if name not in names:
                raise ValueError(f"unknown parameter {name!r}")
            coeffs[names.index(name)] += k
        else:
            coeffs[-1] += k
    return tuple(coeffs)


def parse_vector(text, params):
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    return tuple(parse_form(part, params) for part in body.split(","))
