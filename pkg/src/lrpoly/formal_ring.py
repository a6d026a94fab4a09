"""The free commutative ring on indeterminates h_{r,s}.

Conventions: h_{0,s} = 1 for every s, and h_{r,s} = 0 whenever r < 0.  A word
is a sorted tuple of (r, s) pairs with r >= 1; a SignedHSum is an integer
linear combination of words.  Schur-type elements s_{mu,beta} are represented
by their expanded Jacobi-Trudi determinants.
"""

from itertools import permutations

from .shapes import iv, pad, perm_sign, compositions_of

EMPTY_WORD = ()


def make_word(pairs):
    """Canonical word from (r, s) factors; None encodes the zero element."""
    factors = []
    for r, s in pairs:
        if r < 0:
            return None
        if r > 0:
            factors.append((r, s))
    return tuple(sorted(factors))


class SignedHSum:
    """Integer linear combination of words in the free ring."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero():
        return SignedHSum({})

    @staticmethod
    def word(pairs, coeff=1):
        w = make_word(pairs)
        if w is None or coeff == 0:
            return SignedHSum({})
        return SignedHSum({w: coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, SignedHSum) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return SignedHSum(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if c == 0:
            return SignedHSum({})
        return SignedHSum({w: k * c for w, k in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(sorted(w1 + w2))
                nc = out.get(w, 0) + c1 * c2
                if nc:
                    out[w] = nc
                else:
                    del out[w]
        return SignedHSum(out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = self.terms[w]
            body = "*".join(f"h[{r},{s}]" for r, s in w) or "1"
            parts.append(f"{'+' if c >= 0 else '-'}{abs(c) if abs(c) != 1 or not w else ''}{body if abs(c) == 1 or not w else '*' + body}")
        return " ".join(parts)

    def __repr__(self):
        return f"SignedHSum({dict(self.terms)})"


def h_word(mu, beta):
    """The single product word h_{mu_1,beta_1} * h_{mu_2,beta_2} * ...

    Factors with mu_i = 0 are the unit and are dropped; any mu_i < 0 gives 0.
    """
    mu = tuple(mu)
    beta = tuple(beta)
    if len(beta) < len(mu):
        raise ValueError("beta must be at least as long as mu")
    return SignedHSum.word(zip(mu, beta))


def staircase(l):
    """The second-index vector (0, 1, ..., l-1)."""
    return tuple(range(l))


def jacobi_trudi(mu, beta=None, l=None):
    """Determinant expansion of s_{mu,beta} as a SignedHSum.

    Expands det(h_{mu_i + j - i, beta_i + j - i}) over permutations, applying
    the unit/zero conventions factor by factor.  beta defaults to the
    staircase (0, 1, ..., l-1).
    """
    mu = tuple(mu)
    if l is None:
        l = len(mu)
    if l < len(mu):
        raise ValueError("matrix size smaller than length of mu")
    mu = pad(mu, l)
    beta = staircase(l) if beta is None else pad(tuple(beta), l)
    if len(beta) < l:
        raise ValueError("beta must be at least as long as the matrix size")
    total = {}
    for omega in permutations(range(1, l + 1)):
        w = make_word(
            (mu[i] + omega[i] - (i + 1), beta[i] + omega[i] - (i + 1))
            for i in range(l)
        )
        if w is None:
            continue
        c = total.get(w, 0) + perm_sign(omega)
        if c:
            total[w] = c
        else:
            del total[w]
    return SignedHSum(total)


def straighten(mu, beta):
    """Sort the row labels of s_{mu,beta} into canonical strictly decreasing order.

    Works with gamma_i = mu_i - i and delta_i = beta_i - i, which the adjacent
    swap rule simply exchanges at the cost of a sign.  Returns None when the
    element is zero (two identical determinant rows, or a row that vanishes
    identically), otherwise (sign, mu*, beta*) with gamma* strictly decreasing.

    Raises when two rows share gamma but not delta; such elements have no
    canonical sorted form and never arise in the staircase pipeline.
    """
    mu = tuple(mu)
    beta = tuple(beta)
    l = max(len(mu), len(beta))
    mu = pad(mu, l)
    beta = pad(beta, l)
    gamma = [mu[i] - (i + 1) for i in range(l)]
    delta = [beta[i] - (i + 1) for i in range(l)]
    sign = 1
    # insertion sort on gamma, carrying delta along; each swap flips the sign
    for i in range(1, l):
        k = i
        while k > 0 and gamma[k] >= gamma[k - 1]:
            if gamma[k] == gamma[k - 1]:
                if delta[k] == delta[k - 1]:
                    return None
                raise ValueError(
                    "not straightenable: equal first labels with distinct second labels"
                )
            gamma[k], gamma[k - 1] = gamma[k - 1], gamma[k]
            delta[k], delta[k - 1] = delta[k - 1], delta[k]
            sign = -sign
            k -= 1
    # a sorted row whose first index stays negative across the whole row is 0
    for i in range(l):
        if gamma[i] + l < 0:
            return None
    mu_star = iv(gamma[i] + (i + 1) for i in range(l))
    beta_star = iv(delta[i] + (i + 1) for i in range(l))
    return sign, mu_star, beta_star


def formal_pieri_terms(p, e_val, mu, beta):
    """Index pairs in the expansion of h_{p,e_val} * s_{mu,beta}.

    One pair (mu + sigma, beta' + sigma) per composition sigma of p with
    length at most l(mu) + 1, where beta' appends e_val - p to the first
    l(mu) entries of beta.
    """
    mu = tuple(mu)
    beta = tuple(beta)
    l = len(mu)
    if len(beta) < l:
        raise ValueError("beta must be at least as long as mu")
    beta_prime = beta[:l] + (e_val - p,)
    mu_ext = pad(mu, l + 1)
    out = []
    for sigma in compositions_of(p, l + 1):
        s = pad(sigma, l + 1)
        out.append(
            (
                tuple(mu_ext[i] + s[i] for i in range(l + 1)),
                tuple(beta_prime[i] + s[i] for i in range(l + 1)),
            )
        )
    return out
