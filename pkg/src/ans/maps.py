"""Function tables on B_n and the canonical-form algebra.

An FMap is a tuple of length n^2+1 sending element codes to element codes;
position x holds the image of x, so evaluation is indexing and the argument
stands on the left: x(f o g) = (xf)g and x(f + g) = xf + xg.

The additive closure of the affine maps contains exactly four table shapes,
captured by the canonical forms:

    Zero                   the zero constant map xi_theta
    Constant(alpha)        xi_alpha for a nonzero pair alpha (full support)
    Singleton(src, dst)    src -> dst, everything else -> theta
    NSupport(k, q, sigma)  support is column k and (i,k) -> (i sigma, q)

Canonical text tokens (used in JSON exports and egg-box cells):
"xi_theta", "xi(i,j)", "<(k,l)->(p,q)>", "(k,q;[sigma])".

At n=1 the unique 1-support closure element fits both the Singleton and the
NSupport shape; classify() resolves it as NSupport(1, 1, id), so Singleton
never occurs at n=1.
"""

import math
import re
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from . import brandt
from .brandt import THETA


class NotAffineElement(ValueError):
    """Raised by classify() on a table outside the four closure shapes."""


def map_n(f):
    """Recover n from the table length n^2 + 1."""
    n = math.isqrt(len(f) - 1)
    if n < 1 or n * n + 1 != len(f):
        raise ValueError(f"table length {len(f)} is not n^2+1 for any n >= 1")
    return n


def _same_n(f, g):
    if len(f) != len(g):
        raise ValueError(f"table size mismatch: {len(f)} vs {len(g)}")
    return map_n(f)


def constant_map(alpha, n):
    """xi_alpha: every argument goes to alpha."""
    brandt.unpair(alpha, n)
    return (alpha,) * brandt.size(n)


def zero_map(n):
    return constant_map(THETA, n)


def evaluate(f, alpha):
    """Table lookup; the argument is written on the left."""
    n = map_n(f)
    brandt.unpair(alpha, n)
    return f[alpha]


def pointwise_add(f, g):
    """x(f+g) = xf + xg in B_n."""
    n = _same_n(f, g)
    t = brandt.add_table(n)
    return tuple(int(v) for v in t[list(f), list(g)])


def compose(f, g):
    """x(f o g) = (xf)g: apply f first, then g."""
    _same_n(f, g)
    return tuple(g[v] for v in f)


def support(f):
    """Arguments with nonzero image."""
    return frozenset(x for x, v in enumerate(f) if v != THETA)


def image(f):
    """The full image set, including theta when attained."""
    return frozenset(f)


def proj1(code, n):
    """First coordinate of a nonzero element code."""
    p = brandt.unpair(code, n)
    if p is None:
        raise ValueError("theta has no projections")
    return p[0]


def proj2(code, n):
    p = brandt.unpair(code, n)
    if p is None:
        raise ValueError("theta has no projections")
    return p[1]


def image_invariant(f) -> Optional[int]:
    """The common second coordinate q of all nonzero images, if one exists.

    Returns None when the image is {theta} or when no single q works.
    """
    n = map_n(f)
    qs = {proj2(v, n) for v in f if v != THETA}
    if len(qs) == 1:
        return qs.pop()
    return None


# --- canonical forms --------------------------------------------------------

@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Constant:
    alpha: Tuple[int, int]


@dataclass(frozen=True)
class Singleton:
    src: Tuple[int, int]
    dst: Tuple[int, int]


@dataclass(frozen=True)
class NSupport:
    k: int
    q: int
    sigma: Tuple[int, ...]


CanonicalElem = Union[Zero, Constant, Singleton, NSupport]


def canonical_key(c):
    """Sort key: Zero, then Constants, then Singletons, then NSupport."""
    if isinstance(c, Zero):
        return (0,)
    if isinstance(c, Constant):
        return (1,) + c.alpha
    if isinstance(c, Singleton):
        return (2,) + c.src + c.dst
    if isinstance(c, NSupport):
        return (3, c.k, c.q) + c.sigma
    raise TypeError(f"not a canonical element: {c!r}")


def check_canonical(c, n):
    """Validate a canonical form against an ambient n."""
    if isinstance(c, Zero):
        return c
    if isinstance(c, Constant):
        brandt.pair(*c.alpha, n)
        return c
    if isinstance(c, Singleton):
        if n == 1:
            raise ValueError("Singleton shape does not occur at n=1")
        brandt.pair(*c.src, n)
        brandt.pair(*c.dst, n)
        return c
    if isinstance(c, NSupport):
        if len(c.sigma) != n:
            raise ValueError(f"permutation length {len(c.sigma)} != n={n}")
        brandt.check_perm(c.sigma)
        if not (1 <= c.k <= n and 1 <= c.q <= n):
            raise ValueError(f"(k,q)=({c.k},{c.q}) out of range for n={n}")
        return c
    raise TypeError(f"not a canonical element: {c!r}")


def classify(f) -> CanonicalElem:
    """Canonical form of a closure-member table.

    Raises NotAffineElement for any table outside the four shapes; such
    tables are provably not in the additive closure of the affine maps.
    """
    n = map_n(f)
    supp = sorted(support(f))
    k = len(supp)
    if k == 0:
        return Zero()
    vals = set(f)
    if len(vals) == 1:
        v = f[0]
        if v != THETA and k == n * n + 1:
            return Constant(brandt.unpair(v, n))
    if THETA in support(f) or k == n * n + 1:
        # full support that is not constant, or theta in a partial support
        raise NotAffineElement(f"support of size {k} does not match any closure shape")
    if k == n:
        cols = {brandt.unpair(x, n)[1] for x in supp}
        qs = {proj2(f[x], n) for x in supp}
        if len(cols) == 1 and len(qs) == 1:
            kcol, q = cols.pop(), qs.pop()
            sigma = tuple(proj1(f[brandt.pair(i, kcol, n)], n) for i in range(1, n + 1))
            if sorted(sigma) == list(range(1, n + 1)):
                return NSupport(kcol, q, sigma)
        if k != 1:
            raise NotAffineElement("n-support table is not a column map")
    if k == 1:
        src = supp[0]
        return Singleton(brandt.unpair(src, n), brandt.unpair(f[src], n))
    raise NotAffineElement(f"support of size {k} does not match any closure shape")


def render(c: CanonicalElem, n) -> tuple:
    """Build the table of a canonical form."""
    check_canonical(c, n)
    if isinstance(c, Zero):
        return zero_map(n)
    if isinstance(c, Constant):
        return constant_map(brandt.pair(*c.alpha, n), n)
    if isinstance(c, Singleton):
        t = [THETA] * brandt.size(n)
        t[brandt.pair(*c.src, n)] = brandt.pair(*c.dst, n)
        return tuple(t)
    t = [THETA] * brandt.size(n)
    for i in range(1, n + 1):
        t[brandt.pair(i, c.k, n)] = brandt.pair(c.sigma[i - 1], c.q, n)
    return tuple(t)


def all_canonical(n):
    """Every closure element of B_n as a canonical form, canonical order."""
    out = [Zero()]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out.append(Constant((i, j)))
    if n >= 2:
        for k in range(1, n + 1):
            for l in range(1, n + 1):
                for p in range(1, n + 1):
                    for q in range(1, n + 1):
                        out.append(Singleton((k, l), (p, q)))
    for k in range(1, n + 1):
        for q in range(1, n + 1):
            for sigma in brandt.enumerate_sn(n):
                out.append(NSupport(k, q, sigma))
    return out


# --- text forms --------------------------------------------------------------

_CONST_RE = re.compile(r"^xi\((\d+),(\d+)\)$")
_SINGLE_RE = re.compile(r"^<\((\d+),(\d+)\)->\((\d+),(\d+)\)>$")
_NSUPP_RE = re.compile(r"^\((\d+),(\d+);(\[[\d,]*\])\)$")


def canonical_str(c) -> str:
    if isinstance(c, Zero):
        return "xi_theta"
    if isinstance(c, Constant):
        return f"xi({c.alpha[0]},{c.alpha[1]})"
    if isinstance(c, Singleton):
        return f"<({c.src[0]},{c.src[1]})->({c.dst[0]},{c.dst[1]})>"
    if isinstance(c, NSupport):
        return f"({c.k},{c.q};{brandt.perm_str(c.sigma)})"
    raise TypeError(f"not a canonical element: {c!r}")


def parse_canonical(s, n) -> CanonicalElem:
    s = s.strip()
    if s == "xi_theta":
        return Zero()
    m = _CONST_RE.match(s)
    if m:
        return check_canonical(Constant((int(m.group(1)), int(m.group(2)))), n)
    m = _SINGLE_RE.match(s)
    if m:
        k, l, p, q = (int(g) for g in m.groups())
        return check_canonical(Singleton((k, l), (p, q)), n)
    m = _NSUPP_RE.match(s)
    if m:
        sigma = brandt.parse_perm(m.group(3))
        return check_canonical(NSupport(int(m.group(1)), int(m.group(2)), sigma), n)
    raise ValueError(f"not a canonical element token: {s!r}")


def map_str(f) -> str:
    """Canonical token of a closure-member table."""
    return canonical_str(classify(f))
