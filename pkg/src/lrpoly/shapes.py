"""Integer vectors, compositions, partitions, boxes, and raising operators.

Integer vectors are plain tuples of ints with trailing zeros trimmed; two
vectors are equal iff their trimmed tuples are equal.  Partitions and
compositions are just integer vectors satisfying extra predicates.  All
functions here are pure and all values immutable.
"""

from itertools import permutations


def iv(entries):
    """Canonical integer vector: tuple with trailing zeros trimmed."""
    entries = tuple(int(e) for e in entries)
    n = len(entries)
    while n > 0 and entries[n - 1] == 0:
        n -= 1
    return entries[:n]


def pad(alpha, l):
    """alpha extended with zeros to length at least l."""
    alpha = tuple(alpha)
    return alpha + (0,) * (l - len(alpha)) if len(alpha) < l else alpha


def size(alpha):
    return sum(alpha)


def is_composition(alpha):
    return all(e >= 0 for e in alpha)


def is_partition(alpha):
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1)) and (
        len(alpha) == 0 or alpha[-1] >= 0
    )


def contains(alpha, beta):
    """True iff alpha_i >= beta_i for every i (missing entries read as 0)."""
    l = max(len(alpha), len(beta))
    a, b = pad(alpha, l), pad(beta, l)
    return all(a[i] >= b[i] for i in range(l))


def content(i, j):
    """Content j - i of the box in row i, column j (both 1-based)."""
    return j - i


def boxes(shape):
    """All boxes (i, j) of a composition diagram, row by row."""
    return [(i + 1, j + 1) for i, r in enumerate(shape) for j in range(r)]


def is_horizontal_strip(nu, mu):
    """True iff mu is contained in nu and nu/mu has at most one box per column."""
    if not contains(nu, mu):
        return False
    mu = pad(mu, len(nu))
    return all(nu[i + 1] <= mu[i] for i in range(len(nu) - 1))


def apply_raising(s, t, alpha):
    """Raising operator R_{st}: add 1 at position s, subtract 1 at position t (1-based)."""
    if not 1 <= s < t:
        raise ValueError("require 1 <= s < t")
    a = list(pad(alpha, t))
    a[s - 1] += 1
    a[t - 1] -= 1
    return iv(a)


def apply_rbar(i, j, alpha):
    """Swap entries i and j, then decrease entry i by 1 and increase entry j by 1.

    This is an involution on integer vectors.
    """
    if not 1 <= i < j:
        raise ValueError("require 1 <= i < j")
    a = list(pad(alpha, j))
    a[i - 1], a[j - 1] = a[j - 1] - 1, a[i - 1] + 1
    return iv(a)


def perm_sign(omega):
    """Sign of a permutation given as a tuple of 1-based images."""
    inv = 0
    for i in range(len(omega)):
        for j in range(i + 1, len(omega)):
            if omega[i] > omega[j]:
                inv += 1
    return -1 if inv % 2 else 1


def lambda_omega(lam, omega):
    """Permuted-staircase composition and its sign.

    With pi = (l-1, ..., 1, 0) and omega a permutation of {1..l}, returns
    (omega(lam + pi) - pi, sgn(omega)) where omega moves the entry at
    position i to position omega(i).  Entries may be negative.
    """
    l = len(omega)
    lam = pad(lam, l)
    if len(lam) > l:
        raise ValueError("permutation shorter than partition")
    pi = tuple(l - 1 - k for k in range(l))
    shifted = [lam[k] + pi[k] for k in range(l)]
    out = [0] * l
    for k in range(l):
        out[omega[k] - 1] = shifted[k]
    return iv(out[k] - pi[k] for k in range(l)), perm_sign(omega)


def all_permutations(l):
    """All permutations of {1..l} as tuples of images."""
    return [tuple(p) for p in permutations(range(1, l + 1))]


def compositions_of(p, max_len):
    """All compositions of p (as trimmed vectors) with length at most max_len."""
    out = []

    def rec(prefix, rest, slots):
        if slots == 0:
            if rest == 0:
                out.append(iv(prefix))
            return
        for k in range(rest + 1):
            rec(prefix + [k], rest - k, slots - 1)

    rec([], p, max_len)
    return out


def partitions_of(n, max_len=None, max_part=None):
    """All partitions of n, optionally bounded in length and largest part."""
    if max_len is None:
        max_len = n
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        if max_len < 1:
            break
        for rest in partitions_of(n - first, max_len - 1, first):
            out.append((first,) + rest)
    return out


def partitions_up_to(n, **kwargs):
    """All partitions of size 0..n."""
    out = []
    for k in range(n + 1):
        out.extend(partitions_of(k, **kwargs))
    return out
