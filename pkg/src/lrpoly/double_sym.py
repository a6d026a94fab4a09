"""Symmetric polynomials in x_1..x_n with exact coefficients in Z[a].

Provides the deformed complete homogeneous polynomials h_p(x||a), their
index-shifted variants, Schur elements via determinant expansion, the
one-variable evaluation map, decomposition in the Schur basis, and a
brute-force oracle for the structure coefficients.  Also contains an
independent classical (all a_i = 0) Littlewood-Richardson implementation
used as a cross-check.
"""

from itertools import permutations, product

from .apoly import APoly, _mono_mul
from .schursum import SchurSum
from .shapes import iv, pad, is_partition, lambda_omega, partitions_of


class XPoly:
    """Polynomial in x_1..x_n over Z[a]; terms map exponent tuples to APoly."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero(n):
        return XPoly(n, {})

    @staticmethod
    def const(n, c):
        if isinstance(c, int):
            c = APoly.const(c)
        if c.is_zero():
            return XPoly(n, {})
        return XPoly(n, {(0,) * n: c})

    @staticmethod
    def one(n):
        return XPoly.const(n, 1)

    @staticmethod
    def x(i, n):
        """The variable x_i (1-based) in n variables."""
        e = [0] * n
        e[i - 1] = 1
        return XPoly(n, {tuple(e): APoly.one()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, XPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e)
            nc = c if nc is None else nc + c
            if nc.is_zero():
                out.pop(e, None)
            else:
                out[e] = nc
        return XPoly(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        """Multiply by an integer or APoly scalar."""
        if isinstance(c, int):
            c = APoly.const(c)
        if c.is_zero():
            return XPoly(self.n, {})
        return XPoly(self.n, {e: p * c for e, p in self.terms.items()})

    def __mul__(self, other):
        # accumulate coefficient terms at the raw-dict level: this is the
        # hot path of the oracle
        out = {}
        for e1, c1 in self.terms.items():
            t1 = c1.terms
            for e2, c2 in other.terms.items():
                e = tuple(u + v for u, v in zip(e1, e2))
                d = out.get(e)
                if d is None:
                    d = out[e] = {}
                for m1, k1 in t1.items():
                    for m2, k2 in c2.terms.items():
                        m = _mono_mul(m1, m2)
                        nk = d.get(m, 0) + k1 * k2
                        if nk:
                            d[m] = nk
                        else:
                            del d[m]
        return XPoly(self.n, {e: APoly(d) for e, d in out.items() if d})

    def permuted(self, perm):
        """Relabel variables: x_i -> x_{perm[i-1]} (perm is a 1-based image list)."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for i in range(self.n):
                ne[perm[i] - 1] = e[i]
            out[tuple(ne)] = c
        return XPoly(self.n, out)

    def is_symmetric(self):
        """Exact check under all adjacent transpositions."""
        for i in range(1, self.n):
            perm = list(range(1, self.n + 1))
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
            if self.permuted(perm) != self:
                return False
        return True

    def at_zero(self):
        """Specialize every a_i to 0, keeping integer coefficients."""
        out = {}
        for e, c in self.terms.items():
            k = c.at_zero()
            if k:
                out[e] = APoly.const(k)
        return XPoly(self.n, out)

    def to_json(self):
        return {
            "n": self.n,
            "terms": [
                {"x": list(e), "coeff": self.terms[e].to_json()}
                for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True)
            ],
        }

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            mono = "*".join(
                f"x_{i+1}" if k == 1 else f"x_{i+1}^{k}"
                for i, k in enumerate(e)
                if k
            )
            c = self.terms[e]
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    def __repr__(self):
        return f"XPoly(n={self.n}, {self})"


_H_CACHE = {}


def h_n(p, n):
    """Deformed complete homogeneous polynomial of degree p in n variables.

    Sum over n >= i_1 >= ... >= i_p >= 1 of the products
    prod_k (x_{i_k} - a_{i_k - k + 1}); h_0 = 1, and h_p = 0 for p > 0, n = 0.
    """
    if p < 0:
        return XPoly.zero(n)
    if p == 0:
        return XPoly.one(n)
    key = (p, n)
    cached = _H_CACHE.get(key)
    if cached is not None:
        return cached
    # G[m] at level k holds the partial sum over i_k >= ... >= i_p with i_k <= m
    G = [XPoly.one(n)] * (n + 1)
    for k in range(p, 0, -1):
        nxt = [XPoly.zero(n)] * (n + 1)
        for m in range(1, n + 1):
            factor = XPoly.x(m, n) + XPoly.const(n, APoly.var(m - k + 1, coeff=-1))
            nxt[m] = nxt[m - 1] + factor * G[m]
        G = nxt
    _H_CACHE[key] = G[n]
    return G[n]


def h_n_shifted(r, s, n):
    """tau^s applied to h_r: every a-index in every coefficient moves by s."""
    if r < 0:
        return XPoly.zero(n)
    if r == 0:
        return XPoly.one(n)
    base = h_n(r, n)
    if s == 0:
        return base
    return XPoly(n, {e: c.shift_indices(s) for e, c in base.terms.items()})


class _Sym:
    """Symmetric polynomial stored by one sorted exponent representative per orbit.

    terms maps trimmed weakly decreasing exponent tuples (partitions) to APoly
    coefficients.  The coefficient stored for key nu is the coefficient of the
    single monomial x^nu; all other orbit members carry the same coefficient
    by symmetry and are never materialized.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = terms if terms is not None else {}

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, _Sym)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            nc = out.get(e)
            nc = c if nc is None else nc + c
            if nc.is_zero():
                out.pop(e, None)
            else:
                out[e] = nc
        return _Sym(self.n, out)

    def scale(self, c):
        if isinstance(c, int):
            c = APoly.const(c)
        if c.is_zero():
            return _Sym(self.n, {})
        return _Sym(self.n, {e: p * c for e, p in self.terms.items()})

    def __mul__(self, other):
        """Orbit-wise product: convolve over candidate target partitions.

        coeff(nu) of the product is the sum over componentwise splits
        u + w = nu of coeff(sort(u)) * coeff(sort(w)); candidate nu are all
        partitions of a reachable degree with bounded length and first part.
        """
        if self.is_zero() or other.is_zero():
            return _Sym(self.n, {})
        # constant operands reduce to scaling
        if len(self.terms) == 1 and () in self.terms:
            c = self.terms[()]
            return other if c == APoly.one() else other.scale(c)
        if len(other.terms) == 1 and () in other.terms:
            c = other.terms[()]
            return self if c == APoly.one() else self.scale(c)
        degs1 = {sum(e) for e in self.terms}
        degs2 = {sum(e) for e in other.terms}
        degs = {d1 + d2 for d1 in degs1 for d2 in degs2}
        max1 = max((e[0] for e in self.terms if e), default=0)
        max2 = max((e[0] for e in other.terms if e), default=0)
        p1, p2 = self.terms, other.terms
        out = {}
        for d in degs:
            for nu in partitions_of(d, max_len=self.n, max_part=max1 + max2):
                acc = {}
                for u in product(*(range(v + 1) for v in nu)):
                    cu = p1.get(iv(sorted(u, reverse=True)))
                    if cu is None:
                        continue
                    cw = p2.get(
                        iv(sorted((v - x for v, x in zip(nu, u)), reverse=True))
                    )
                    if cw is None:
                        continue
                    for m1, k1 in cu.terms.items():
                        for m2, k2 in cw.terms.items():
                            m = _mono_mul(m1, m2)
                            nk = acc.get(m, 0) + k1 * k2
                            if nk:
                                acc[m] = nk
                            else:
                                del acc[m]
                if acc:
                    out[nu] = APoly(acc)
        return _Sym(self.n, out)


def _sym_from_xpoly(P):
    """Symmetric representative of a (known symmetric) dense polynomial."""
    return _Sym(
        P.n,
        {iv(e): c for e, c in P.terms.items() if all(
            e[i] >= e[i + 1] for i in range(len(e) - 1)
        )},
    )


def _distinct_permutations(values):
    """All distinct orderings of a multiset, without repetition."""
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    n = len(values)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in sorted(counts):
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                rec(prefix)
                prefix.pop()
                counts[v] += 1

    rec([])
    return out


def _sym_expand(S):
    """Dense polynomial with the full symmetric orbit of every stored term."""
    out = {}
    for nu, c in S.terms.items():
        for e in _distinct_permutations(pad(nu, S.n)):
            out[e] = c
    return XPoly(S.n, out)


_H_SYM_CACHE = {}


def _h_sym(r, s, n):
    """Symmetric representative of the shift-s deformed h of degree r."""
    key = (r, s, n)
    cached = _H_SYM_CACHE.get(key)
    if cached is None:
        base = _H_SYM_CACHE.get((r, 0, n))
        if base is None:
            base = _sym_from_xpoly(h_n(r, n))
            _H_SYM_CACHE[(r, 0, n)] = base
        if s == 0:
            cached = base
        else:
            cached = _Sym(
                n, {e: c.shift_indices(s) for e, c in base.terms.items()}
            )
        _H_SYM_CACHE[key] = cached
    return cached


_SCHUR_SYM_CACHE = {}


def _schur_sym(lam, n):
    """Schur element as a symmetric representative, by determinant expansion.

    The (i, j) entry of the determinant is the shift-(j-1) deformed h of
    degree lam_i + j - i; zero when the shape has more rows than variables.
    Minors are expanded along rows with memoization on the column set.
    """
    lam = iv(lam)
    if not is_partition(lam):
        raise ValueError("shape must be a partition")
    key = (lam, n)
    cached = _SCHUR_SYM_CACHE.get(key)
    if cached is not None:
        return cached
    l = len(lam)
    if l > n:
        result = _Sym(n, {})
    elif l == 0:
        result = _Sym(n, {(): APoly.one()})
    else:
        entries = [
            [
                _h_sym(lam[i] + j - i, j, n) if lam[i] + j - i >= 0 else None
                for j in range(l)
            ]
            for i in range(l)
        ]
        unit = _Sym(n, {(): APoly.one()})
        memo = {}

        def minor(cols):
            # determinant of rows 0..len(cols)-1 restricted to the column
            # tuple cols, expanded along the bottom row (which has the most
            # vanishing and unit entries for thin shapes)
            if not cols:
                return unit
            cached = memo.get(cols)
            if cached is not None:
                return cached
            i = len(cols) - 1
            total = _Sym(n, {})
            for pos, j in enumerate(cols):
                entry = entries[i][j]
                if entry is None or entry.is_zero():
                    continue
                sub = minor(cols[:pos] + cols[pos + 1 :])
                if sub.is_zero():
                    continue
                term = entry * sub
                sign = (i + pos) % 2  # cofactor sign of the bottom-row entry
                total = total + (term if sign == 0 else term.scale(-1))
            memo[cols] = total
            return total

        result = minor(tuple(range(l)))
    _SCHUR_SYM_CACHE[key] = result
    return result


_BRANCH_CACHE = {}


def _strip_removals(lam):
    """All (mu, strip boxes) with lam/mu a horizontal strip (mu = lam included)."""
    lam = iv(lam)
    l = len(lam)
    out = []

    def rec(i, built):
        if i == l:
            mu = iv(built)
            boxes = [
                (r + 1, c + 1)
                for r in range(l)
                for c in range((built[r] if r < len(built) else 0), lam[r])
            ]
            out.append((mu, boxes))
            return
        lo = lam[i + 1] if i + 1 < l else 0
        for v in range(lo, lam[i] + 1):
            rec(i + 1, built + [v])

    rec(0, [])
    return out


def _schur_sym_branch(lam, n):
    """Symmetric representative of the Schur element via variable splitting.

    Splitting off the boxes holding the minimal entry (a horizontal strip
    lam/mu whose boxes carry factors x_1 - a_{1-c}) expresses the element
    through shape-mu elements in one fewer variable with all a-indices
    shifted by one.  Equivalent to the determinant expansion (asserted by
    tests) but avoids products of large polynomials entirely.
    """
    lam = iv(lam)
    if not lam:
        return {(): APoly.one()}
    if len(lam) > n:
        return {}
    key = (lam, n)
    cached = _BRANCH_CACHE.get(key)
    if cached is not None:
        return cached
    result = {}
    for mu, boxes in _strip_removals(lam):
        inner = _schur_sym_branch(mu, n - 1)
        if not inner:
            continue
        s = len(boxes)
        # elementary symmetric sums of the strip's -a_{1-c(box)} values
        elem = [APoly.one()]
        for (r, c) in boxes:
            val = APoly.var(1 - (c - r), coeff=-1)
            elem.append(APoly.zero())
            for t in range(len(elem) - 1, 0, -1):
                elem[t] = elem[t] + elem[t - 1] * val
        for ktail, coeff in inner.items():
            shifted = coeff.shift_indices(1)
            lo = ktail[0] if ktail else 0
            for k1 in range(lo, s + 1):
                term = shifted * elem[s - k1]
                if term.is_zero():
                    continue
                kappa = (k1,) + ktail if k1 else ktail
                acc = result.get(kappa)
                acc = term if acc is None else acc + term
                if acc.is_zero():
                    result.pop(kappa, None)
                else:
                    result[kappa] = acc
    _BRANCH_CACHE[key] = result
    return result


def _schur_sym_fast(lam, n):
    """Schur element as a _Sym, via the branching recursion (oracle hot path)."""
    return _Sym(n, dict(_schur_sym_branch(lam, n)))


_SCHUR_CACHE = {}


def double_schur_n(lam, n):
    """Schur element of shape lam in n variables, as a dense polynomial."""
    lam = iv(lam)
    key = (lam, n)
    cached = _SCHUR_CACHE.get(key)
    if cached is None:
        cached = _sym_expand(_schur_sym(lam, n))
        _SCHUR_CACHE[key] = cached
    return cached


def phi_n(P):
    """Evaluation map: substitute x_n := a_n, landing in n-1 variables."""
    n = P.n
    if n < 1:
        raise ValueError("no variable to evaluate")
    out = {}
    for e, c in P.terms.items():
        k = e[-1]
        nc = c if k == 0 else c * APoly.var(n, exp=k)
        ne = e[:-1]
        acc = out.get(ne)
        acc = nc if acc is None else acc + nc
        if acc.is_zero():
            out.pop(ne, None)
        else:
            out[ne] = acc
    return XPoly(n - 1, out)


def _decompose_sym(S, basis_fn=None):
    """Greedy Schur-basis elimination on a symmetric representative.

    Among the terms of maximal total degree, the lexicographically greatest
    partition is the leading monomial of a unique basis element, whose
    coefficient is read off directly and subtracted.
    """
    n = S.n
    if basis_fn is None:
        basis_fn = _schur_sym
    work = dict(S.terms)
    result = {}
    while work:
        d = max(sum(e) for e in work)
        nu = max(e for e in work if sum(e) == d)
        if len(nu) > n:
            raise ValueError(f"not in span: leading exponent {nu}")
        c = work[nu]
        result[nu] = c
        basis = basis_fn(nu, n)
        for e, p in basis.terms.items():
            acc = work.get(e)
            delta = p * c
            acc = delta.scale(-1) if acc is None else acc - delta
            if acc.is_zero():
                work.pop(e, None)
            else:
                work[e] = acc
    return SchurSum(result)


def decompose(P):
    """Write a symmetric dense P as a SchurSum over Schur elements in P.n variables.

    The greedy elimination requires every leading exponent encountered to be
    weakly decreasing; a non-symmetric input surfaces as a "not in span" error.
    """
    n = P.n
    sym = _sym_from_xpoly(P)
    # guard: the sorted representatives must already account for every term
    rep_count = sum(len(_distinct_permutations(pad(e, n))) for e in sym.terms)
    if rep_count != len(P.terms):
        raise ValueError("not in span: polynomial is not symmetric")
    return _decompose_sym(sym)


_PRODUCT_CACHE = {}


def product_decomposition(lam, mu, n):
    """Decomposition of s_lam * s_mu in n variables, cached and symmetric in (lam, mu)."""
    lam, mu = iv(lam), iv(mu)
    key = (tuple(sorted((lam, mu))), n)
    cached = _PRODUCT_CACHE.get(key)
    if cached is None:
        cached = _decompose_sym(
            _schur_sym_fast(lam, n) * _schur_sym_fast(mu, n),
            basis_fn=_schur_sym_fast,
        )
        _PRODUCT_CACHE[key] = cached
    return cached


def c_oracle(lam, mu, nu):
    """Structure coefficient of s_nu in s_lam * s_mu, by brute force.

    Computed at two consecutive variable counts large enough for stability;
    the two decompositions must agree, which turns the (unknown) stability
    bound into a runtime check.
    """
    lam, mu, nu = iv(lam), iv(mu), iv(nu)
    n0 = sum(lam) + sum(mu) + 1
    d1 = product_decomposition(lam, mu, n0)
    d2 = product_decomposition(lam, mu, n0 + 1)
    if d1 != d2:
        raise ArithmeticError(f"unstable at chosen n: n0={n0} vs n0+1 disagree")
    return d1.coeff(nu)


def _horizontal_strip_extensions(mu, p):
    """All partitions obtained from mu by adding a horizontal strip of p boxes."""
    mu = iv(mu)
    l = len(mu)
    out = []

    def rec(i, prev_cap, remaining, built):
        if i == l + 1:
            if remaining == 0:
                out.append(iv(built))
            return
        base = mu[i] if i < l else 0
        hi = min(prev_cap, base + remaining)
        for v in range(base, hi + 1):
            rec(i + 1, base, remaining - (v - base), built + [v])

    rec(0, mu[0] + p if l else p, p, [])
    return out


def classical_lr(lam, mu, nu):
    """Classical Littlewood-Richardson coefficient, all a_i = 0.

    Independent integer implementation: alternating sum over permuted
    staircase compositions of iterated classical Pieri multiplications
    (horizontal strips), per the determinant expansion of the classical
    Jacobi-Trudi identity.
    """
    lam, mu, nu = iv(lam), iv(mu), iv(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    l = len(lam)
    if l == 0:
        return 1 if nu == mu else 0
    total = 0
    for omega in permutations(range(1, l + 1)):
        kappa, sign = lambda_omega(lam, omega)
        kappa = pad(kappa, l)
        if any(k < 0 for k in kappa):
            continue
        counts = {mu: 1}
        for i in range(l - 1, -1, -1):
            nxt = {}
            for part, cnt in counts.items():
                for ext in _horizontal_strip_extensions(part, kappa[i]):
                    nxt[ext] = nxt.get(ext, 0) + cnt
            counts = nxt
        total += sign * counts.get(nu, 0)
    return total
