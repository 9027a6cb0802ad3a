"""Sparse integer polynomials with non-negative exponents.

A polynomial in ``k`` variables is a ``dict`` mapping exponent tuples of
length ``k`` to nonzero ints. Tuple comparison is lexicographic, which is
the monomial order used throughout (first variable largest).

These helpers back the Laurent ring: Laurent inputs are shifted into this
representation before division, GCD or determinant work.
"""

from __future__ import annotations

import math
from functools import reduce

Poly = dict  # tuple[int, ...] -> int


def add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def sub(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def scale(a: Poly, c: int) -> Poly:
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def mul(a: Poly, b: Poly) -> Poly:
    if len(a) > len(b):
        a, b = b, a
    out: Poly = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def shift(a: Poly, m: tuple[int, ...]) -> Poly:
    return {tuple(x + y for x, y in zip(e, m)): c for e, c in a.items()}


def exquo(a: Poly, b: Poly) -> Poly | None:
    """Exact quotient ``a / b``, or ``None`` when ``b`` does not divide ``a``.

    Uses repeated cancellation of the lex-leading term. If ``b`` divides the
    running remainder then the leading term of ``b`` divides its leading
    term, so a failed monomial or coefficient test proves non-divisibility.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    lb = max(b)
    cb = b[lb]
    if len(b) == 1:
        q = {}
        for e, c in a.items():
            m = tuple(x - y for x, y in zip(e, lb))
            if min(m, default=0) < 0 or c % cb:
                return None
            q[m] = c // cb
        return q
    # cheap necessary condition: per-variable degrees must fit
    for i in range(len(lb)):
        if max(e[i] for e in a) - min(e[i] for e in a) < max(e[i] for e in b) - min(e[i] for e in b):
            return None
    r = dict(a)
    q: Poly = {}
    rest = [(e, c) for e, c in b.items() if e != lb]
    while r:
        lr = max(r)
        cr = r.pop(lr)
        m = tuple(x - y for x, y in zip(lr, lb))
        if min(m, default=0) < 0 or cr % cb:
            return None
        c = cr // cb
        q[m] = c
        for e, v in rest:
            key = tuple(x + y for x, y in zip(e, m))
            nv = r.get(key, 0) - c * v
            if nv:
                r[key] = nv
            else:
                r.pop(key, None)
    return q


def is_constant(a: Poly) -> bool:
    return not a or (len(a) == 1 and not any(next(iter(a))))


def lead_sign(a: Poly) -> int:
    if not a:
        return 1
    return 1 if a[max(a)] > 0 else -1


# --- recursive view: univariate in the first variable -----------------------


def _to_uni(a: Poly) -> dict[int, Poly]:
    out: dict[int, Poly] = {}
    for e, c in a.items():
        out.setdefault(e[0], {})[e[1:]] = c
    return out


def _from_uni(u: dict[int, Poly]) -> Poly:
    out: Poly = {}
    for d, co in u.items():
        for e, c in co.items():
            out[(d,) + e] = c
    return out


def _uni_deg(u: dict[int, Poly]) -> int:
    return max(u) if u else -1


def _uni_lc(u: dict[int, Poly]) -> Poly:
    return u[max(u)]


def _uni_prem(a: dict[int, Poly], b: dict[int, Poly]) -> dict[int, Poly]:
    """Pseudo-remainder of ``a`` by ``b`` over the coefficient ring."""
    db = _uni_deg(b)
    lb = b[db]
    r = {d: c for d, c in a.items()}
    e = _uni_deg(a) - db + 1
    while r and _uni_deg(r) >= db:
        dr = _uni_deg(r)
        lr = r[dr]
        s = dr - db
        nr: dict[int, Poly] = {}
        for d, c in r.items():
            if d == dr:
                continue
            nr[d] = mul(c, lb)
        for d, c in b.items():
            if d == db:
                continue
            v = sub(nr.get(d + s, {}), mul(c, lr))
            if v:
                nr[d + s] = v
            else:
                nr.pop(d + s, None)
        r = {d: c for d, c in nr.items() if c}
        e -= 1
    if e > 0 and r:
        f = power(lb, e)
        r = {d: mul(c, f) for d, c in r.items()}
    return r


def power(a: Poly, n: int) -> Poly:
    k = len(next(iter(a))) if a else 0
    out: Poly = {(0,) * k: 1}
    base = a
    while n:
        if n & 1:
            out = mul(out, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return out


def _must_exquo(a: Poly, b: Poly) -> Poly:
    q = exquo(a, b)
    if q is None:
        raise ArithmeticError("internal error: expected exact division")
    return q


def _content(u: dict[int, Poly], k: int) -> Poly:
    return reduce(lambda x, y: gcd(x, y, k), u.values(), {})


def _primitive(u: dict[int, Poly], k: int) -> dict[int, Poly]:
    c = _content(u, k)
    if is_constant(c) and c.get((0,) * k, 0) == 1:
        return u
    return {d: _must_exquo(co, c) for d, co in u.items()}


def gcd(a: Poly, b: Poly, k: int) -> Poly:
    """GCD of two polynomials in ``k`` variables, lex-leading coefficient > 0.

    Recursive content / primitive-part split on the first variable with a
    subresultant remainder sequence for the primitive parts.
    """
    if not a:
        return scale(b, lead_sign(b))
    if not b:
        return scale(a, lead_sign(a))
    if k == 0:
        return {(): math.gcd(a[()], b[()])}
    if len(a) == 1 and len(b) == 1:
        (ea, ca), = a.items()
        (eb, cb), = b.items()
        return {tuple(map(min, ea, eb)): math.gcd(ca, cb)}
    ua, ub = _to_uni(a), _to_uni(b)
    ca, cb = _content(ua, k - 1), _content(ub, k - 1)
    c = gcd(ca, cb, k - 1)
    pa = {d: _must_exquo(co, ca) for d, co in ua.items()}
    pb = {d: _must_exquo(co, cb) for d, co in ub.items()}
    # strip common powers of the main variable
    sa, sb = min(pa), min(pb)
    low = min(sa, sb)
    pa = {d - sa: co for d, co in pa.items()}
    pb = {d - sb: co for d, co in pb.items()}
    if _uni_deg(pa) < _uni_deg(pb):
        pa, pb = pb, pa
    g = _subresultant(pa, pb, k - 1)
    g = {d + low: co for d, co in g.items()}
    out = _from_uni({d: mul(co, c) for d, co in g.items()})
    return scale(out, lead_sign(out))


def _subresultant(a: dict[int, Poly], b: dict[int, Poly], k: int) -> dict[int, Poly]:
    one = {(0,) * k: 1}
    if _uni_deg(b) == 0:
        return {0: one}
    g: Poly = one
    h: Poly = one
    while True:
        delta = _uni_deg(a) - _uni_deg(b)
        r = _uni_prem(a, b)
        if not r:
            break
        if _uni_deg(r) == 0:
            return {0: one}
        den = mul(g, power(h, delta))
        a, b = b, {d: _must_exquo(co, den) for d, co in r.items()}
        g = _uni_lc(a)
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = _must_exquo(power(g, delta), power(h, delta - 1))
    return _primitive(b, k)
