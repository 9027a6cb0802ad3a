import sympy
from hypothesis import strategies as st

from foxchi.laurent import LaurentPoly


def laurent_polys(num_vars, max_terms=5, lo=-3, hi=3, coeff=6):
    exps = st.tuples(*[st.integers(lo, hi)] * num_vars)
    return st.dictionaries(exps, st.integers(-coeff, coeff), max_size=max_terms).map(
        lambda d: LaurentPoly(num_vars, d)
    )


def nonzero_polys(num_vars, **kw):
    return laurent_polys(num_vars, **kw).filter(lambda p: not p.is_zero())


def monomials(num_vars, lo=-4, hi=4):
    return st.tuples(
        st.tuples(*[st.integers(lo, hi)] * num_vars), st.sampled_from([1, -1])
    ).map(lambda em: LaurentPoly(num_vars, {em[0]: em[1]}))


def to_sympy(p: LaurentPoly):
    syms = sympy.symbols(f"t1:{p.num_vars + 1}")
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Integer(c)
        for s, k in zip(syms, e):
            term *= s**k
        expr += term
    return expr, syms


def from_sympy(expr, syms) -> LaurentPoly:
    """Inverse of ``to_sympy`` for polynomial (non-negative exponent) expressions."""
    expr = sympy.expand(expr)
    if expr == 0:
        return LaurentPoly.zero(len(syms))
    poly = sympy.Poly(expr, *syms)
    return LaurentPoly(len(syms), {tuple(int(k) for k in e): int(c) for e, c in poly.terms()})
