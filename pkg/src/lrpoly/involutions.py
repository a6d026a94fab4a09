"""Sign- and weight-cancellation machinery on tableaux.

Three constructions live here:

* psi = psi2 . psi1, an involution pairing each "bad" stacked-Pieri tableau
  of shape kappa with a bad tableau of the swapped shape R-bar_{i,i+1} kappa,
  holding the row-word target fixed.  Bad tableaux are the fillings that feed
  the alternating Kostka sum but not the direct tableau rule; their weights
  cancel in aggregate across the two shapes (not entry by entry).
* monomial_involution, a weight-reversing involution on bad monomial (primed)
  tableaux of a single Pieri row: it converts an oversized plain entry into a
  primed entry of negated weight and back.
* pieri_bad_pair, a weight-preserving bijection between monomial tableaux
  whose row words target a non-horizontal-strip composition nu and those
  targeting R-bar_{i,i+1} nu.
"""

from itertools import product
from typing import NamedTuple, Optional

from .apoly import APoly
from .shapes import iv, pad, apply_rbar, is_horizontal_strip
from .tableaux import (
    Entry,
    ReverseTableau,
    bar,
    plain,
    row_order,
    column_order,
    row_word,
    apply_word,
)


class BadCell(NamedTuple):
    """Location and kind of the defect that makes a tableau bad."""

    row: int
    col: int
    condition: str  # "C2a" | "C2b" | "C2c"


def monomial_weight(U, mu):
    """Signed monomial weight of a monomial (primed) tableau.

    Plain unprimed entries contribute a_{k - rho_k} with rho the partition
    grown by the barred prefix in row order; primed entries contribute
    -a_{k - c}.  Barred entries only advance rho.
    """
    total = APoly.one()
    rho = list(mu)
    for i, j in row_order(U.shape):
        e = U.entry(i, j)
        k = e.value
        if e.barred:
            if k > len(rho):
                rho.extend([0] * (k - len(rho)))
            rho[k - 1] += 1
        elif e.primed:
            total = total * APoly.var(k - (j - i), coeff=-1)
        else:
            rk = rho[k - 1] if k <= len(rho) else 0
            total = total * APoly.var(k - rk)
    return total


def _val(T, i, j):
    """Absolute value of the entry at (i, j), or 0 outside the shape."""
    shape = T.shape
    if 1 <= i <= len(shape) and 1 <= j <= shape[i - 1]:
        return T.rows[i - 1][j - 1].value
    return 0


def _p1_break_column(T, mu, i):
    """Leftmost column where the column word of rows >= i stops being Yamanouchi.

    Returns None if the whole column word stays Yamanouchi when applied to mu.
    """
    shape = T.shape
    sub = [(r, c) for r, c in column_order(shape) if r >= i]
    rho = list(mu)
    good = True
    for r, c in sub:
        e = T.rows[r - 1][c - 1]
        if not e.barred:
            continue
        s = e.value
        if s > len(rho):
            rho.extend([0] * (s - len(rho)))
        rho[s - 1] += 1
        if s > 1 and rho[s - 2] < rho[s - 1]:
            good = False
        if s < len(rho) and rho[s - 1] < rho[s]:
            good = False
        if not good:
            return c
    return None


def classify_bad(T, mu, nu=None) -> Optional[BadCell]:
    """The unique bad cell of a stacked-Pieri tableau, or None if it is good.

    A tableau is bad when some row i exhibits one of: a non-Yamanouchi prefix
    of the column word of rows >= i (P1), a column-strictness failure against
    row i+1 (P2), or a shorter row than the one below it (P3).  The cell is
    fixed by taking i maximal, then the smallest offending column.
    """
    shape = T.shape
    l = len(shape)
    best_i = None
    breaks = {}
    for i in range(1, l + 1):
        bad_here = False
        bc = _p1_break_column(T, mu, i)
        if bc is not None and bc <= shape[i - 1]:
            bad_here = True
            breaks[i] = bc
        if i < l:
            if shape[i - 1] < shape[i]:
                bad_here = True
            for j in range(1, min(shape[i - 1], shape[i]) + 1):
                if _val(T, i, j) <= _val(T, i + 1, j):
                    bad_here = True
                    break
        if bad_here:
            best_i = i
    if best_i is None:
        return None
    i = best_i
    bc = breaks.get(i)
    for j in range(1, shape[i - 1] + 1):
        below = _val(T, i + 1, j)
        if j <= (shape[i] if i < l else 0) and _val(T, i, j) <= below:
            return BadCell(i, j, "C2b")
        if bc is not None and j >= bc and _val(T, i, j) > below:
            return BadCell(i, j, "C2a")
    return BadCell(i, shape[i] + 1, "C2c")


def _parse_blocks_after_barred(segment):
    """Sizes of the plain runs following each barred entry of the segment."""
    x = []
    for e in segment:
        if e.barred:
            x.append(0)
        else:
            x[-1] += 1
    return x


def _parse_blocks_before_barred(segment):
    """Sizes of the plain runs preceding each barred entry of the segment."""
    y = []
    cnt = 0
    for e in segment:
        if e.barred:
            y.append(cnt)
            cnt = 0
        else:
            cnt += 1
    if cnt:
        raise AssertionError("segment must end with a barred entry")
    return y


def _blocks_after(value, sizes):
    """[barred, sizes[0] plain, barred, sizes[1] plain, ...] of the value."""
    out = []
    for s in sizes:
        out.append(bar(value))
        out.extend([plain(value)] * s)
    return out


def _blocks_before(value, sizes):
    """[sizes[0] plain, barred, sizes[1] plain, barred, ...] of the value."""
    out = []
    for s in sizes:
        out.extend([plain(value)] * s)
        out.append(bar(value))
    return out


def psi1(T, cell):
    """Tail swap: move the rows-i/i+1 tails across, landing on shape R-bar kappa.

    For a C2a cell this includes "fixing the column ordering", which trades
    the block structure of the b's in row i against the c's in row i+1 before
    (case q >= r) or after (case q < r) the swap.
    """
    i, j, cond = cell
    rows = [list(r) for r in T.rows]
    ri = rows[i - 1]
    ri1 = rows[i]
    ki, ki1 = len(ri), len(ri1)
    if cond == "C2b":
        rows[i - 1] = ri[: j - 1] + ri1[j:]
        rows[i] = ri1[:j] + ri[j - 1 :]
        return ReverseTableau(rows)
    if cond == "C2c":
        rows[i - 1] = ri + ri1[ki + 1 :]
        rows[i] = ri1[: ki + 1]
        return ReverseTableau(rows)
    # C2a
    b = ri[j - 1].value
    if not ri[j - 1].barred or b != ri1[j - 1].value + 1:
        raise AssertionError("C2a cell must hold a barred entry one above the column partner")
    c = ri1[j - 1].value
    q = max(t + 1 for t, e in enumerate(ri) if e.value == b)
    seg_b = ri[j - 1 : q]
    s = sum(1 for e in seg_b if e.barred)
    x = _parse_blocks_after_barred(seg_b)
    # r: column of the s-th barred c at or right of column j+1 in row i+1
    count = 0
    r = None
    for t in range(j, ki1):
        if ri1[t].barred and ri1[t].value == c:
            count += 1
            if count == s:
                r = t + 1
                break
    if r is None:
        raise AssertionError("row word must supply enough barred entries below")
    y = _parse_blocks_before_barred(ri1[j : r])
    if q >= r:
        # fix the column ordering, then swap the tails from column r
        new_i = list(ri)
        new_i[j - 1 : r - 1] = _blocks_after(b, y)
        sigma = _blocks_before(c, x)
        new_i1 = list(ri1)
        new_i1[j : r] = sigma[: r - j]
        new_i[r - 1 : q] = sigma[r - j :]
        rows[i - 1] = new_i[: r - 1] + new_i1[r:]
        rows[i] = new_i1[:r] + new_i[r - 1 :]
        return ReverseTableau(rows)
    # q < r: swap the tails from column q, then fix the column ordering
    half_i = ri[:q] + ri1[q + 1 :]
    half_i1 = ri1[: q + 1] + ri[q:]
    if q < r - 1:
        half_i[j - 1 : r - 1] = _blocks_after(b, y)
        half_i1[j : q + 1] = _blocks_before(c, x)
    rows[i - 1] = half_i
    rows[i] = half_i1
    return ReverseTableau(rows)


def _run_bounds(row, value):
    """Half-open index range of the entries with the given absolute value."""
    lo = 0
    while lo < len(row) and row[lo].value > value:
        lo += 1
    hi = lo
    while hi < len(row) and row[hi].value == value:
        hi += 1
    return lo, hi


def psi2(T1, cell, mu):
    """Reorder barred entries so the row word again grows partitions.

    For each k up to the column partner value c, exchanges n_k barred k's at
    the end of row i+1 against n_k barred (k-1)'s at the start of the (k-1)
    run in row i, carrying the plain block sizes across unchanged.
    """
    i = cell.row
    rows = [list(r) for r in T1.rows]
    ri = rows[i - 1]
    ri1 = rows[i]
    if cell.condition == "C2c":
        # C2c is C2b with an empty X, so the column partner sits at the end
        # of the shortened row i+1 (originally box (i+1, kappa_i + 1)).
        c = ri1[-1].value if ri1 else 0
    else:
        c = ri1[cell.col - 1].value
    l = len(rows)
    mu = tuple(mu)

    def mu_at(k):
        return mu[k - 1] if k <= len(mu) else 0

    def barred_count(row_list, k):
        return sum(1 for e in row_list if e.barred and e.value == k)

    replacements = []
    for k in range(2, c + 1):
        r_k = sum(barred_count(rows[t], k) for t in range(i - 1, l))
        rp = sum(barred_count(rows[t], k - 1) for t in range(i + 1, l))
        n_k = max(mu_at(k) + r_k - mu_at(k - 1) - rp, 0)
        if n_k == 0:
            continue
        # P_k: through the first n_k barred (k-1)'s in row i
        lo, hi = _run_bounds(ri, k - 1)
        cnt = 0
        end = None
        for t in range(lo, hi):
            if ri[t].barred:
                cnt += 1
                if cnt == n_k:
                    end = t + 1
                    break
        if end is None:
            raise AssertionError("row i lacks the required barred entries")
        v = _parse_blocks_before_barred(ri[lo:end])
        # Q_k: from the n_k-th-from-last barred k in row i+1 through its run
        lo1, hi1 = _run_bounds(ri1, k)
        cnt = 0
        start = None
        for t in range(hi1 - 1, lo1 - 1, -1):
            if ri1[t].barred:
                cnt += 1
                if cnt == n_k:
                    start = t
                    break
        if start is None:
            raise AssertionError("row i+1 lacks the required barred entries")
        w = _parse_blocks_after_barred(ri1[start:hi1])
        replacements.append((lo, end, _blocks_after(k, v), start, hi1, _blocks_before(k - 1, w)))
    for lo, end, seg_i, start, hi1, seg_i1 in replacements:
        ri[lo:end] = seg_i
        ri1[start:hi1] = seg_i1
    return ReverseTableau(rows)


def psi(T, mu, nu=None):
    """The full bad-tableau involution: tail swap, then reorder barred entries."""
    cell = classify_bad(T, mu, nu)
    if cell is None:
        raise ValueError("tableau is good")
    return psi2(psi1(T, cell), cell, mu)


def _row_context(U, mu):
    """(row index, row list, l, y) for a single-row monomial tableau."""
    shape = U.shape
    e1 = len(shape)
    row = list(U.rows[-1])
    l = len(iv(mu))
    y = sum(1 for e in row if e.barred and e.value == l + 1)
    return e1, row, l, y


def _subscripts(row, e1, mu):
    """Weight subscript per position: k - rho_k for plain, k - c for primed."""
    rho = list(mu)
    subs = []
    for t, e in enumerate(row):
        k = e.value
        if e.barred:
            if k > len(rho):
                rho.extend([0] * (k - len(rho)))
            rho[k - 1] += 1
            subs.append(None)
        elif e.primed:
            subs.append(k - (t + 1 - e1))
        else:
            rk = rho[k - 1] if k <= len(rho) else 0
            subs.append(k - rk)
    return subs


def _rebuild(U, row):
    rows = [list(r) for r in U.rows]
    rows[-1] = row
    return ReverseTableau(rows)


def monomial_involution(U, mu):
    """Weight-reversing involution on bad monomial tableaux of a Pieri row.

    An entry is bad if it is plain unprimed with value above l = l(mu), or
    primed with subscript above l - y (y counting the barred (l+1)'s).  The
    selected entry with maximal subscript k is traded: a plain entry of
    weight a_k becomes a primed entry of weight -a_k further right, and vice
    versa, so double application restores the original.
    """
    e1, row, l, y = _row_context(U, mu)
    subs = _subscripts(row, e1, mu)
    bad_subs = [
        s
        for t, (e, s) in enumerate(zip(row, subs))
        if s is not None
        and ((not e.primed and e.value > l) or (e.primed and s > l - y))
    ]
    if not bad_subs:
        raise ValueError("tableau is good")
    k = max(bad_subs)
    primed_at = [
        t for t, (e, s) in enumerate(zip(row, subs)) if e.primed and s == k
    ]
    if primed_at:
        t = primed_at[0]
        if k > l + 1:
            new = [plain(k)] + row[:t] + row[t + 1 :]
        else:
            yp = l + 1 - k
            cnt = 0
            jp = 0
            for u, e in enumerate(row):
                if e.barred and e.value == l + 1:
                    cnt += 1
                    if cnt == yp:
                        jp = u + 1
                        break
            if cnt < yp:
                raise AssertionError("not enough barred entries for the unwinding")
            new = row[:jp] + [plain(l + 1)] + row[jp:t] + row[t + 1 :]
        return _rebuild(U, new)
    # plain case: leftmost plain unprimed entry with subscript k
    t = next(
        u
        for u, (e, s) in enumerate(zip(row, subs))
        if s == k and not e.primed and not e.barred
    )
    jp = None
    for u in range(t, len(row)):
        m = k + (u + 1 - e1)
        nxt = row[u + 1].value if u + 1 < len(row) else 0
        if m >= nxt and m >= 1:
            jp = u
            break
    if jp is None:
        raise AssertionError("no insertion point for the primed partner")
    m = k + (jp + 1 - e1)
    new = row[:t] + row[t + 1 : jp + 1] + [plain(m, primed=True)] + row[jp + 1 :]
    return _rebuild(U, new)


def derived_monomial_tableaux(p, e, mu, nu, vmax):
    """Single-row monomial tableaux whose weakly decreasing word takes mu to nu.

    Verification plumbing: enumerates every filling of the shape
    (0,...,0,p) whose barred entries realize the multiset nu - mu, with
    plain and primed values capped at vmax.  The word need not be
    Yamanouchi, so bad compositions nu are reachable.
    """
    mu = iv(mu)
    nu = tuple(nu)
    ln = len(nu)
    mup = pad(mu, ln)
    counts = [nu[k] - mup[k] for k in range(ln)]
    if any(c < 0 for c in counts):
        return
    need = sum(counts)
    row = []

    def rec(t, need):
        if need > p - t:
            return
        if t == p:
            if need == 0:
                yield ReverseTableau([[]] * e + [list(row)])
            return
        hi = row[-1].value if row else max(vmax, ln)
        for k in range(1, ln + 1):
            if k > hi or counts[k - 1] == 0:
                continue
            counts[k - 1] -= 1
            row.append(Entry(k, True, False))
            yield from rec(t + 1, need - 1)
            row.pop()
            counts[k - 1] += 1
        for k in range(1, min(hi, vmax) + 1):
            for primed in (False, True):
                row.append(Entry(k, False, primed))
                yield from rec(t + 1, need)
                row.pop()

    yield from rec(0, need)


def _fix_prime_order(row, i):
    """Restore weak decrease after a bad-pair rewrite, preserving monomials.

    Each violation sits at a primed i left of an (i+1)-valued entry or a
    primed i+1 right of an i-valued entry; the primed entry hops one box
    toward its run (adjusting its value), which keeps its weight monomial
    because the box content moves with it.
    """
    row = list(row)
    while True:
        t = next(
            (u for u in range(len(row) - 1) if row[u].value < row[u + 1].value),
            None,
        )
        if t is None:
            return row
        left, right = row[t], row[t + 1]
        if right.primed and right.value == i + 1 and left.value == i and not left.primed:
            row[t], row[t + 1] = plain(i, primed=True), left
        elif left.primed and left.value == i and right.value == i + 1 and not right.primed:
            row[t], row[t + 1] = right, plain(i + 1, primed=True)
        else:
            raise AssertionError("unfixable ordering violation")


def _bad_row_index(mu, nu):
    """Minimal i with nu_{i+1} - mu_i > 0 (the non-horizontal-strip witness)."""
    ln = len(nu)
    mu = pad(mu, ln)
    for i in range(1, ln):
        if nu[i] - mu[i - 1] > 0:
            return i
    raise AssertionError("nu is a horizontal strip over mu")


def _bad_pair_forward(U, mu, i, d):
    """Case d >= 0 of the bad-composition pairing on monomial tableaux."""
    e1, row, _, _ = _row_context(U, mu)
    if d == 0:
        return U
    # X: through the d-th barred i+1 counting left from the rightmost i+1
    pos_i1 = [t for t, e in enumerate(row) if e.value == i + 1]
    cnt = 0
    start = None
    for t in reversed(pos_i1):
        if row[t].barred:
            cnt += 1
            if cnt == d:
                start = t
                break
    if start is None:
        raise AssertionError("not enough barred entries for the pairing")
    xrange = range(start, pos_i1[-1] + 1)
    moved = [row[t] for t in xrange if not row[t].primed]
    x_low = [Entry(i, e.barred, False) for e in moved]
    y_seq = [e for e in row if e.value == i and not e.primed]
    empty = [t for t in xrange if not row[t].primed] + [
        t for t, e in enumerate(row) if e.value == i and not e.primed
    ]
    filler = y_seq + x_low
    new = list(row)
    for t, e in zip(empty, filler):
        new[t] = e
    return _rebuild(U, _fix_prime_order(new, i))


def pieri_bad_pair(U, mu):
    """Weight-preserving pairing across the two bad compositions nu and R-bar nu.

    With d = nu_{i+1} - nu_i - 1, the d >= 0 direction relabels d barred
    (i+1)'s as i's and reorders; the d < 0 direction is its exact inverse,
    found by searching the bounded set of candidate partners.
    """
    mu = iv(mu)
    nu, _ = apply_word(mu, row_word(U))
    if is_horizontal_strip(nu, mu):
        raise ValueError("nu is good")
    i = _bad_row_index(mu, nu)
    nu_p = pad(nu, i + 1)
    d = nu_p[i] - nu_p[i - 1] - 1
    if d >= 0:
        return _bad_pair_forward(U, mu, i, d)
    # d < 0: invert the forward map from the partner composition
    nu_t = apply_rbar(i, i + 1, nu)
    nu_tp = pad(nu_t, i + 1)
    mu_p = pad(mu, i + 1)
    row = list(U.rows[-1])
    pos = [t for t, e in enumerate(row) if e.value in (i, i + 1)]
    n_primed = sum(1 for t in pos if row[t].primed)
    b_hi = nu_tp[i] - mu_p[i]
    b_lo = nu_tp[i - 1] - mu_p[i - 1]
    matches = []
    for split in range(len(pos) + 1):
        segs = [(i + 1, split), (i, len(pos) - split)]
        for decors in product(("bar", "plain", "prime"), repeat=len(pos)):
            cand = []
            ok = True
            t = 0
            for value, count in segs:
                for _ in range(count):
                    dec = decors[t]
                    t += 1
                    if dec == "bar":
                        cand.append(bar(value))
                    elif dec == "prime":
                        cand.append(plain(value, primed=True))
                    else:
                        cand.append(plain(value))
            if sum(1 for e in cand if e.barred and e.value == i + 1) != b_hi:
                continue
            if sum(1 for e in cand if e.barred and e.value == i) != b_lo:
                continue
            if sum(1 for e in cand if e.primed) != n_primed:
                continue
            new = list(row)
            for t, e in zip(pos, cand):
                new[t] = e
            cand_t = _rebuild(U, new)
            try:
                if _bad_pair_forward(cand_t, mu, i, -d) == U:
                    matches.append(cand_t)
            except AssertionError:
                continue
    if len(matches) != 1:
        raise AssertionError(
            f"expected a unique partner, found {len(matches)}"
        )
    return matches[0]
