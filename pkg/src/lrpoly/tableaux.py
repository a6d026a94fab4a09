"""Reverse tableaux with barred/plain (optionally primed) entries.

A reverse tableau fills the boxes of a composition shape with entries whose
absolute values weakly decrease along each row.  Barred entries drive the row
and column words; plain entries carry binomial weights a_{k - rho_k} -
a_{k - c}, where rho is the partition grown so far by the word prefix and c
is the box content.  Priming a plain entry selects the second (negated)
monomial of its weight, which is how tableau weights expand into monomials.

Text format: one line per row, top to bottom; entries space-separated with a
trailing "~" for bars and a trailing "'" for primes, e.g. "2 2~ 1~".
"""

from typing import NamedTuple

from .apoly import APoly
from .shapes import iv, pad, is_partition


class Entry(NamedTuple):
    """A single tableau entry: positive value, barred or plain, optionally primed."""

    value: int
    barred: bool = False
    primed: bool = False


def bar(k):
    """A barred entry with value k."""
    if k < 1:
        raise ValueError("entry values must be positive")
    return Entry(k, barred=True)


def plain(k, primed=False):
    """A plain (unbarred) entry with value k, optionally primed."""
    if k < 1:
        raise ValueError("entry values must be positive")
    return Entry(k, barred=False, primed=primed)


def format_entry(entry):
    if entry.barred:
        return f"{entry.value}~"
    return f"{entry.value}'" if entry.primed else str(entry.value)


def parse_entry(text):
    body = text
    barred = primed = False
    if body.endswith("~"):
        barred = True
        body = body[:-1]
    elif body.endswith("'"):
        primed = True
        body = body[:-1]
    value = int(body)
    if value < 1:
        raise ValueError("entry values must be positive")
    if barred and primed:
        raise ValueError("barred entries are never primed")
    return Entry(value, barred, primed)


class ReverseTableau:
    """Rows of entries over a composition shape (zero-length rows allowed)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    def entry(self, i, j):
        """The entry in row i, column j (both 1-based)."""
        return self.rows[i - 1][j - 1]

    def is_valid(self):
        """Row condition: absolute values weakly decrease along each row."""
        for row in self.rows:
            for e in row:
                if e.value < 1 or (e.barred and e.primed):
                    return False
            for a, b in zip(row, row[1:]):
                if a.value < b.value:
                    return False
        return True

    def to_text(self):
        return "\n".join(" ".join(format_entry(e) for e in row) for row in self.rows)

    @staticmethod
    def from_text(text):
        rows = []
        for line in text.split("\n"):
            parts = line.split()
            rows.append(tuple(parse_entry(p) for p in parts))
        return ReverseTableau(rows)

    def __eq__(self, other):
        return isinstance(other, ReverseTableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"ReverseTableau({self.to_text()!r})"


def row_order(shape):
    """Boxes (i, j) read in rows from bottom to top, left to right in each row."""
    out = []
    for i in range(len(shape), 0, -1):
        for j in range(1, shape[i - 1] + 1):
            out.append((i, j))
    return out


def column_order(shape):
    """Boxes (i, j) read in columns left to right, bottom to top in each column."""
    out = []
    width = max(shape, default=0)
    for j in range(1, width + 1):
        for i in range(len(shape), 0, -1):
            if shape[i - 1] >= j:
                out.append((i, j))
    return out


def _boxes_in(order, shape):
    if order == "row":
        return row_order(shape)
    if order == "column":
        return column_order(shape)
    raise ValueError("order must be 'row' or 'column'")


def row_word(T):
    """Values of the barred entries, read in row order."""
    return tuple(
        T.entry(i, j).value for i, j in row_order(T.shape) if T.entry(i, j).barred
    )


def column_word(T):
    """Values of the barred entries, read in column order."""
    return tuple(
        T.entry(i, j).value for i, j in column_order(T.shape) if T.entry(i, j).barred
    )


def apply_word(mu, word):
    """Grow mu by adding a box to row s for each s in the word.

    Returns (terminal composition, yamanouchi) where yamanouchi is True iff
    every intermediate stage (including mu itself) is a partition.
    """
    rho = list(mu)
    good = is_partition(tuple(rho))
    for s in word:
        if s > len(rho):
            rho.extend([0] * (s - len(rho)))
        rho[s - 1] += 1
        if good and not (s == 1 or rho[s - 2] >= rho[s - 1]):
            good = False
        if good and not (s == len(rho) or rho[s - 1] >= rho[s]):
            good = False
    return iv(rho), good


def rho_at(T, mu, alpha, order):
    """mu grown by the barred-entry prefix up to and including box alpha."""
    prefix = []
    for box in _boxes_in(order, T.shape):
        e = T.entry(*box)
        if e.barred:
            prefix.append(e.value)
        if box == alpha:
            break
    else:
        raise ValueError("box not in shape")
    rho, _ = apply_word(mu, prefix)
    return rho


def _weight_from_rho(k, rho, c):
    rk = rho[k - 1] if k <= len(rho) else 0
    return APoly.var(k - rk) - APoly.var(k - c)


def entry_weight(T, mu, alpha, order):
    """The binomial a_{k - rho(alpha)_k} - a_{k - c(alpha)} for a plain entry."""
    i, j = alpha
    e = T.entry(i, j)
    if e.barred:
        raise ValueError("barred entry has no weight")
    rho = rho_at(T, mu, alpha, order)
    return _weight_from_rho(e.value, rho, j - i)


def tableau_weight(T, mu, order):
    """Product of the weights of all plain entries (empty product is 1)."""
    total = APoly.one()
    rho = list(mu)
    for i, j in _boxes_in(order, T.shape):
        e = T.entry(i, j)
        if e.barred:
            k = e.value
            if k > len(rho):
                rho.extend([0] * (k - len(rho)))
            rho[k - 1] += 1
        else:
            k = e.value
            rk = rho[k - 1] if k <= len(rho) else 0
            total = total * _weight_from_rho(k, rho, j - i)
            if total.is_zero():
                return total
    return total


def expand_monomials(T, mu, order):
    """All primed variants of T with their signed monomial weights.

    Each plain entry is either left unprimed (contributing the monomial
    a_{k - rho_k}) or primed (contributing -a_{k - c}).  The signed monomials
    over all 2^(#plain) variants sum to tableau_weight(T, mu, order).
    """
    boxes = _boxes_in(order, T.shape)
    choices = []  # (box, unprimed monomial, primed monomial)
    rho = list(mu)
    for i, j in boxes:
        e = T.entry(i, j)
        if e.barred:
            k = e.value
            if k > len(rho):
                rho.extend([0] * (k - len(rho)))
            rho[k - 1] += 1
        else:
            k = e.value
            rk = rho[k - 1] if k <= len(rho) else 0
            choices.append(
                ((i, j), APoly.var(k - rk), APoly.var(k - (j - i), coeff=-1))
            )
    out = [(T, APoly.one())]
    for box, unprimed, primed in choices:
        nxt = []
        for U, mono in out:
            nxt.append((U, mono * unprimed))
            rows = [list(r) for r in U.rows]
            bi, bj = box
            old = rows[bi - 1][bj - 1]
            rows[bi - 1][bj - 1] = Entry(old.value, False, True)
            nxt.append((ReverseTableau(rows), mono * primed))
        out = nxt
    return out


def _enumerate(shape, boxes, mu, nu, plain_cap, column_strict):
    """Backtracking core shared by the three enumerators.

    Fills the given traversal order box by box; the word of barred values in
    that order must be Yamanouchi and reach nu from mu.  plain_cap maps a row
    number to the largest allowed plain value; column_strict additionally
    requires each value to be strictly smaller than the entry directly below.
    """
    mu = tuple(mu)
    nu = tuple(nu)
    if not is_partition(mu) or not is_partition(nu):
        raise ValueError("mu and nu must be partitions")
    ln = len(nu)
    rho = list(pad(mu, ln))
    if any(rho[k] > nu[k] for k in range(ln)):
        return []
    need = sum(nu) - sum(mu)
    total_boxes = len(boxes)
    if need < 0 or need > total_boxes:
        return []
    grid = {}
    out = []

    def rec(t, need):
        if need > total_boxes - t:
            return
        if t == total_boxes:
            if need == 0:
                rows = [
                    tuple(grid[(i + 1, j + 1)] for j in range(shape[i]))
                    for i in range(len(shape))
                ]
                out.append(ReverseTableau(rows))
            return
        i, j = boxes[t]
        hi = grid[(i, j - 1)].value if j > 1 else None
        below = grid.get((i + 1, j)) if column_strict else None
        # barred candidates: stay inside nu and keep every prefix a partition
        for k in range(1, ln + 1):
            if hi is not None and k > hi:
                continue
            if below is not None and k <= below.value:
                continue
            if rho[k - 1] >= nu[k - 1]:
                continue
            if k > 1 and rho[k - 2] <= rho[k - 1]:
                continue
            rho[k - 1] += 1
            grid[(i, j)] = Entry(k, barred=True)
            rec(t + 1, need - 1)
            rho[k - 1] -= 1
        cap = plain_cap(i)
        if hi is not None:
            cap = min(cap, hi)
        lo = below.value + 1 if below is not None else 1
        for k in range(lo, cap + 1):
            grid[(i, j)] = Entry(k)
            rec(t + 1, need)
        grid.pop((i, j), None)

    rec(0, need)
    return out


def enumerate_lr_tableaux(lam, mu, nu, cap=None):
    """Shape-lam tableaux with Yamanouchi column word mu -> nu and strict columns.

    Plain values are capped at l(nu) (override with cap); barred values are
    bounded by the Yamanouchi condition automatically.
    """
    lam = tuple(lam)
    if cap is None:
        cap = len(tuple(nu))
    return _enumerate(
        lam, column_order(lam), mu, nu, lambda i: cap, column_strict=True
    )


def enumerate_pieri_tableaux(p, e, mu, nu, cap=None):
    """Single-row tableaux of shape (0,...,0,p) (row e+1) with Yamanouchi row word."""
    shape = (0,) * e + (p,)
    if cap is None:
        cap = len(tuple(nu))
    return _enumerate(
        shape, row_order(shape), mu, nu, lambda i: cap, column_strict=False
    )


def enumerate_k_tableaux(kappa, mu, nu, cap=None):
    """Shape-kappa stacked-Pieri tableaux with Yamanouchi row word mu -> nu.

    No column conditions; plain values in row i are capped at
    l(mu) + l(kappa) - i + 1 (override with a constant cap).
    """
    kappa = tuple(kappa)
    if any(k < 0 for k in kappa):
        return []
    lm = len(tuple(mu))
    lk = len(kappa)
    if cap is None:
        caps = lambda i: lm + lk - i + 1
    else:
        caps = lambda i: cap
    return _enumerate(kappa, row_order(kappa), mu, nu, caps, column_strict=False)
