"""Stable (n-independent) rewriting of h indices and the stable Pieri rule.

Everything here rests on the entrywise relation

    h_{r,s} = h_{r,s-1} + a_{s-r+1} * h_{r-1,s-1},

the stable part of the concrete shift identity (the n-dependent a_{n+s}
contribution vanishes in the inverse limit).  Along a determinant row the
difference s - r is constant, so the same relation rewrites a whole row at
once; iterating moves every second index onto the staircase 0, 1, ..., l-1,
after which straightening yields genuine partitions.
"""

from itertools import combinations_with_replacement

from .apoly import APoly
from .schursum import SchurSum
from .shapes import iv, pad
from .formal_ring import formal_pieri_terms, staircase, straighten


def tau_step(r, s):
    """One application of the stable relation to h_{r,s}.

    Returns [(r, s-1, 1), (r-1, s-1, a_{s-r+1})] as (first index, second
    index, APoly coefficient) triples.
    """
    if r < 1:
        raise ValueError("require r >= 1")
    return [
        (r, s - 1, APoly.one()),
        (r - 1, s - 1, APoly.var(s - r + 1)),
    ]


_ROW_CACHE = {}


def _reduce_row(g, d, l):
    """Rewrite a determinant row with labels (gamma, delta) = (g, d) to delta = -1.

    A row holds the entries h_{g+j, d+j} for j = 1..l, so the relation's
    a-index d - g + 1 is shared by the whole row.  Returns {g': APoly} with
    row(g, d) = sum coeff * row(g', -1); the row is identically zero once
    g + l < 0.
    """
    if g + l < 0:
        return {}
    if d == -1:
        return {g: APoly.one()}
    key = (g, d, l)
    cached = _ROW_CACHE.get(key)
    if cached is not None:
        return cached
    out = {}
    if d > -1:
        # row(g, d) = row(g, d-1) + a_{d-g+1} row(g-1, d-1)
        parts = [
            (_reduce_row(g, d - 1, l), APoly.one()),
            (_reduce_row(g - 1, d - 1, l), APoly.var(d - g + 1)),
        ]
    else:
        # row(g, d) = row(g, d+1) - a_{d-g+2} row(g-1, d)
        parts = [
            (_reduce_row(g, d + 1, l), APoly.one()),
            (_reduce_row(g - 1, d, l), APoly.var(d - g + 2, coeff=-1)),
        ]
    for table, factor in parts:
        for g2, c in table.items():
            nc = c * factor
            acc = out.get(g2)
            acc = nc if acc is None else acc + nc
            if acc.is_zero():
                out.pop(g2, None)
            else:
                out[g2] = acc
    _ROW_CACHE[key] = out
    return out


def reduce_to_staircase(mu, beta):
    """Rewrite s_{mu,beta} as a combination of staircase-labelled elements.

    Both vectors must have equal length l.  Each row i moves its second
    index from beta_i to i-1 independently; the output maps first-index
    vectors mu' (with implicit staircase second indices) to APoly
    coefficients.  Rows that vanish identically drop their terms.
    """
    mu = tuple(mu)
    beta = tuple(beta)
    if len(mu) != len(beta):
        raise ValueError("mu and beta must have equal length")
    l = len(mu)
    result = {(): APoly.one()}
    for i in range(1, l + 1):
        row = _reduce_row(mu[i - 1] - i, beta[i - 1] - i, l)
        nxt = {}
        for prefix, c in result.items():
            for g2, rc in row.items():
                key = prefix + (g2 + i,)
                nc = c * rc
                acc = nxt.get(key)
                acc = nc if acc is None else acc + nc
                if acc.is_zero():
                    nxt.pop(key, None)
                else:
                    nxt[key] = acc
        result = nxt
    return result


def K_d_closed(j, mu_j, m, d):
    """The documented closed-form second-index-lowering coefficient.

    Sum over integer chains j+d <= b_d <= ... <= b_1 <= j+m-1 of the
    products of a_{b_i - mu_j - m + 1}.  Exposed for documentation and
    cross-tests only: the lower bound makes the sum empty for m = 1, d = 1,
    while the authoritative row recursion yields a_{j - mu_j} there; the
    recursion matches this sum with lower bound j + d - 1 instead.
    """
    if d == 0:
        return APoly.one()
    total = APoly.zero()
    for chain in combinations_with_replacement(range(j + d, j + m), d):
        term = APoly.one()
        for b in chain:
            term = term * APoly.var(b - mu_j - m + 1)
        total = total + term
    return total


def G_d_closed(p, k, e, l, d):
    """The documented closed-form second-index-raising coefficient.

    (-1)^d times the sum over chains e-k <= b_1 <= ... <= b_d <= l-1 of
    the products of a_{b_i - p + k + i + 1}.
    """
    if d == 0:
        return APoly.one()
    total = APoly.zero()
    for chain in combinations_with_replacement(range(e - k, l), d):
        term = APoly.one()
        for i, b in enumerate(chain, start=1):
            term = term * APoly.var(b - p + k + i + 1)
        total = total + term
    return total if d % 2 == 0 else total * -1


_PIERI_CACHE = {}


def pieri_stable(p, e, mu):
    """Expansion of h_{p,e} * s_mu in the Schur basis, with APoly coefficients.

    Pipeline: the free-ring Pieri terms with staircase second indices, then
    staircase reduction of every term, then straightening, collecting
    coefficients per partition.
    """
    mu = iv(mu)
    key = (p, e, mu)
    cached = _PIERI_CACHE.get(key)
    if cached is not None:
        return cached
    if p == 0:
        result = SchurSum.single(mu)
        _PIERI_CACHE[key] = result
        return result
    if p < 0:
        return SchurSum.zero()
    l = len(mu)
    target = staircase(l + 1)
    out = SchurSum.zero()
    for m2, b2 in formal_pieri_terms(p, e, mu, staircase(l)):
        for mu_star, coeff in reduce_to_staircase(m2, b2).items():
            st = straighten(mu_star, target)
            if st is None:
                continue
            sign, part, _ = st
            out = out.add_term(part, coeff * sign)
    _PIERI_CACHE[key] = out
    return out


def multiply_by_h(p, e, S):
    """Coefficient-linear extension of the stable Pieri rule to SchurSum values."""
    if p < 0:
        return SchurSum.zero()
    if p == 0:
        return S
    out = SchurSum.zero()
    for mu, c in S.terms.items():
        out = out + pieri_stable(p, e, mu).scale(c)
    return out
