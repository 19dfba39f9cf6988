"""The Brandt semigroup B_n plus a small symmetric-group toolkit.

B_n is ([n] x [n]) u {theta} with

    (i,j) + (k,l) = (i,l)  if j = k,   theta otherwise,

and theta a two-sided zero.  Elements are packed into integer codes so that
Cayley tables are plain integer arrays: code 0 is theta and (i,j) becomes
(i-1)*n + j.  The code order (theta first, then pairs lexicographically) is
the canonical element order used everywhere downstream.

Permutations on [n] are tuples in one-line notation with 1-based images:
sigma = (2, 1) sends 1 -> 2 and 2 -> 1.  They serialize as JSON arrays.
"""

import json
import re
from functools import lru_cache
from itertools import permutations

import numpy as np

THETA = 0

_PAIR_RE = re.compile(r"^\((\d+),(\d+)\)$")


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def size(n):
    """Number of elements of B_n (n^2 pairs plus theta)."""
    _check_n(n)
    return n * n + 1


def pair(i, j, n):
    """Integer code of the pair (i, j); indices are 1-based."""
    _check_n(n)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"pair ({i},{j}) out of range for n={n}")
    return (i - 1) * n + j


def unpair(code, n):
    """Pair (i, j) for a nonzero code, or None for theta."""
    if code == THETA:
        return None
    if not (1 <= code <= n * n):
        raise ValueError(f"element code {code} out of range for n={n}")
    return ((code - 1) // n + 1, (code - 1) % n + 1)


def elements(n):
    """All element codes of B_n in canonical order (theta first)."""
    return list(range(size(n)))


def add(a, b, n):
    """The Brandt operation on codes: (i,j)+(k,l) = (i,l) iff j = k."""
    if a == THETA or b == THETA:
        unpair(a, n), unpair(b, n)  # range check only
        return THETA
    i, j = unpair(a, n)
    k, l = unpair(b, n)
    return pair(i, l, n) if j == k else THETA


@lru_cache(maxsize=None)
def add_table(n):
    """Cayley table of B_n as a read-only (n^2+1) x (n^2+1) array."""
    m = size(n)
    t = np.zeros((m, m), dtype=np.int32)
    for a in range(1, m):
        for b in range(1, m):
            t[a, b] = add(a, b, n)
    t.setflags(write=False)
    return t


def idempotents(n):
    """The set {x : x + x = x}, i.e. theta and the diagonal pairs."""
    return {THETA} | {pair(k, k, n) for k in range(1, n + 1)}


def elem_str(code, n):
    """Serialized form: "(i,j)" or "theta"."""
    p = unpair(code, n)
    return "theta" if p is None else f"({p[0]},{p[1]})"


def parse_elem(s, n):
    if s == "theta":
        return THETA
    m = _PAIR_RE.match(s.strip())
    if not m:
        raise ValueError(f"not a Brandt element token: {s!r}")
    return pair(int(m.group(1)), int(m.group(2)), n)


# --- permutations -----------------------------------------------------------

def identity_perm(n):
    _check_n(n)
    return tuple(range(1, n + 1))


def check_perm(p):
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation in one-line notation: {p!r}")
    return tuple(p)


def enumerate_sn(n):
    """All n! permutations of [n], lexicographic by one-line notation."""
    _check_n(n)
    return list(permutations(range(1, n + 1)))


def perm_compose(p, q):
    """Left-action composition: i(pq) = (ip)q."""
    if len(p) != len(q):
        raise ValueError(f"permutation size mismatch: {len(p)} vs {len(q)}")
    return tuple(q[p[i] - 1] for i in range(len(p)))


def perm_inverse(p):
    inv = [0] * len(p)
    for i, ip in enumerate(p):
        inv[ip - 1] = i + 1
    return tuple(inv)


def perm_str(p):
    """One-line notation as a JSON integer array, e.g. [2,1]."""
    return "[" + ",".join(str(i) for i in p) + "]"


def parse_perm(s):
    p = json.loads(s)
    if not isinstance(p, list) or not all(isinstance(i, int) for i in p):
        raise ValueError(f"not a one-line permutation array: {s!r}")
    return check_perm(tuple(p))
