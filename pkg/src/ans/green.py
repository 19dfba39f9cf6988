"""Green's relations and structural properties of the closure reducts.

Two independent routes are provided.  `green_brute` works on any Cayley
table, straight from the principal-ideal definitions with an identity
adjoined.  The `green_analytic_*` classifiers decide relatedness from the
canonical form alone, by the support and projection conditions; agreement
of the two routes is checked in tests, not assumed here.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from . import brandt, maps
from .closure import FiniteSemigroup
from .maps import Constant, NSupport, Singleton, Zero

RELATIONS = ("R", "L", "D", "J", "H")

SUBSET_NAMES = ("all", "K", "N", "constants", "singleton-ideal")


# --- brute force from the Cayley table ---------------------------------------

@dataclass
class GreenStructure:
    """Partitions of one reduct under R, L, D, J, H plus element flags."""
    label: str
    size: int
    classes: Dict[str, Tuple[Tuple[int, ...], ...]]
    class_of: Dict[str, Tuple[int, ...]]
    idempotent: Tuple[bool, ...]
    regular: Tuple[bool, ...]
    eventual_index: Tuple[int, ...]

    def counts(self) -> Dict[str, int]:
        return {rel: len(self.classes[rel]) for rel in RELATIONS}

    def related(self, rel, i, j) -> bool:
        return self.class_of[rel][i] == self.class_of[rel][j]

    def to_dict(self) -> dict:
        d = {rel: [list(c) for c in self.classes[rel]] for rel in RELATIONS}
        d["idempotents"] = [i for i, e in enumerate(self.idempotent) if e]
        d["regular"] = [i for i, r in enumerate(self.regular) if r]
        d["eventual_index"] = list(self.eventual_index)
        return d


def _group(keys) -> Tuple[Tuple[int, ...], ...]:
    classes = {}
    for i, k in enumerate(keys):
        classes.setdefault(k, []).append(i)
    return tuple(tuple(c) for c in sorted(classes.values(), key=lambda c: c[0]))


def _class_of(classes, m) -> Tuple[int, ...]:
    out = [0] * m
    for ci, members in enumerate(classes):
        for i in members:
            out[i] = ci
    return tuple(out)


def _partition_key(classes):
    return frozenset(frozenset(c) for c in classes)


def idempotents(sg: FiniteSemigroup) -> frozenset:
    t = sg.op
    return frozenset(int(i) for i in np.flatnonzero(t.diagonal() == np.arange(len(sg))))


def regular_elements(sg: FiniteSemigroup) -> frozenset:
    """Elements x with x y x = x for some y, by exhaustive search."""
    t = sg.op
    out = []
    for i in range(len(sg)):
        if np.any(t[t[i], i] == i):
            out.append(i)
    return frozenset(out)


def eventual_regularity(sg: FiniteSemigroup) -> Tuple[int, ...]:
    """Least r >= 1 such that the r-th power is regular, per element."""
    t = sg.op
    reg = regular_elements(sg)
    m = len(sg)
    out = []
    for i in range(m):
        p, r = i, 1
        while p not in reg:
            p, r = int(t[p, i]), r + 1
            if r > m:  # pigeonhole: the power sequence has cycled
                raise AssertionError(f"element {i} has no regular power")
        out.append(r)
    return tuple(out)


def green_brute(sg: FiniteSemigroup, jobs: int = 1) -> GreenStructure:
    """All five relations from principal ideals, with D = J asserted."""
    t = sg.op
    m = len(sg)

    def ideal_keys(lo, hi):
        r_keys, l_keys, j_keys = [], [], []
        for i in range(lo, hi):
            right = np.zeros(m, dtype=bool)
            right[t[i]] = True
            right[i] = True
            left = np.zeros(m, dtype=bool)
            left[t[:, i]] = True
            left[i] = True
            two = np.zeros(m, dtype=bool)
            two[t[t[:, i], :].ravel()] = True
            two |= right
            two |= left
            r_keys.append(right.tobytes())
            l_keys.append(left.tobytes())
            j_keys.append(two.tobytes())
        return r_keys, l_keys, j_keys

    jobs = max(1, int(jobs))
    if jobs == 1 or m < 64:
        r_keys, l_keys, j_keys = ideal_keys(0, m)
    else:
        from concurrent.futures import ThreadPoolExecutor
        step = -(-m // jobs)
        chunks = [(lo, min(lo + step, m)) for lo in range(0, m, step)]
        r_keys, l_keys, j_keys = [], [], []
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            for rk, lk, jk in pool.map(lambda c: ideal_keys(*c), chunks):
                r_keys += rk
                l_keys += lk
                j_keys += jk

    classes = {
        "R": _group(r_keys),
        "L": _group(l_keys),
        "J": _group(j_keys),
        "H": _group(list(zip(r_keys, l_keys))),
    }

    # D as the join of R and L via union-find
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for rel in ("R", "L"):
        for members in classes[rel]:
            root = find(members[0])
            for i in members[1:]:
                parent[find(i)] = root
    classes["D"] = _group([find(i) for i in range(m)])

    if _partition_key(classes["D"]) != _partition_key(classes["J"]):
        raise AssertionError("D and J partitions differ on a finite semigroup")

    idem = idempotents(sg)
    reg = regular_elements(sg)
    return GreenStructure(
        label=sg.label,
        size=m,
        classes=classes,
        class_of={rel: _class_of(classes[rel], m) for rel in RELATIONS},
        idempotent=tuple(i in idem for i in range(m)),
        regular=tuple(i in reg for i in range(m)),
        eventual_index=eventual_regularity(sg),
    )


@dataclass
class CountsRecord:
    label: str
    classes: Dict[str, int]
    class_sizes: Dict[str, Tuple[int, ...]]
    idempotents: int
    regular: int


def class_counts(gs: GreenStructure) -> CountsRecord:
    return CountsRecord(
        label=gs.label,
        classes=gs.counts(),
        class_sizes={rel: tuple(sorted(len(c) for c in gs.classes[rel]))
                     for rel in RELATIONS},
        idempotents=sum(gs.idempotent),
        regular=sum(gs.regular),
    )


# --- analytic classifiers on canonical forms ----------------------------------

def _common_n(f, g, n: Optional[int]):
    for c in (f, g):
        if isinstance(c, NSupport):
            m = len(c.sigma)
            if n is None:
                n = m
            elif n != m:
                raise ValueError(f"elements from different ambient n: {n} vs {m}")
    if n is not None:
        maps.check_canonical(f, n)
        maps.check_canonical(g, n)
    return n


def green_analytic_additive(f, g, rel: str, n: Optional[int] = None) -> bool:
    """Relatedness in the additive reduct, decided by canonical shape.

    Support equality is necessary for every relation.  On top of that, R
    compares first projections of the images, L compares second projections
    except on n-support elements where L is trivial, and D relaxes L's
    conditions to support only (with the row permutation retained on
    n-support elements, where D collapses to R).
    """
    _common_n(f, g, n)
    if rel == "J":
        rel = "D"
    if rel == "H":
        return (green_analytic_additive(f, g, "R")
                and green_analytic_additive(f, g, "L"))
    if rel not in ("R", "L", "D"):
        raise ValueError(f"unknown relation {rel!r}")
    if type(f) is not type(g):
        return False
    if isinstance(f, Zero):
        return True
    if isinstance(f, Constant):
        if rel == "R":
            return f.alpha[0] == g.alpha[0]
        if rel == "L":
            return f.alpha[1] == g.alpha[1]
        return True
    if isinstance(f, Singleton):
        if rel == "R":
            return f.src == g.src and f.dst[0] == g.dst[0]
        if rel == "L":
            return f.src == g.src and f.dst[1] == g.dst[1]
        return f.src == g.src
    if rel == "L":
        return f == g
    return f.k == g.k and f.sigma == g.sigma


def green_analytic_multiplicative(f, g, rel: str, n: Optional[int] = None) -> bool:
    """Relatedness in the multiplicative reduct, decided by canonical shape.

    Constants (with the zero map) are mutually R- and D-related; outside
    them R is support equality and D is support-size equality.  L is image
    equality for every shape.  H is the intersection of R and L.
    """
    _common_n(f, g, n)
    if rel == "J":
        rel = "D"
    if rel == "H":
        return (green_analytic_multiplicative(f, g, "R")
                and green_analytic_multiplicative(f, g, "L"))
    if rel not in ("R", "L", "D"):
        raise ValueError(f"unknown relation {rel!r}")
    cf = isinstance(f, (Zero, Constant))
    cg = isinstance(g, (Zero, Constant))
    if rel == "R":
        if cf or cg:
            return cf and cg
        if type(f) is not type(g):
            return False
        return f.src == g.src if isinstance(f, Singleton) else f.k == g.k
    if rel == "L":
        # image signatures: {alpha} for constants, {theta} for zero,
        # {theta, dst} for singletons, {theta} u column q for n-support
        if type(f) is not type(g):
            return False
        if isinstance(f, Zero):
            return True
        if isinstance(f, Constant):
            return f.alpha == g.alpha
        if isinstance(f, Singleton):
            return f.dst == g.dst
        return f.q == g.q
    if cf or cg:
        return cf and cg
    if type(f) is not type(g):
        return False
    return True


def analytic_structure(sg: FiniteSemigroup) -> Dict[str, Tuple[Tuple[int, ...], ...]]:
    """Partitions from the analytic classifiers, for cross-checking.

    Classes are built by grouping on per-element keys equivalent to the
    pairwise rules, so the cross-check against green_brute covers every
    pair without the quadratic loop.
    """
    forms = [maps.classify(f) for f in sg.elements]
    if sg.label == "additive":
        def keys(c):
            if isinstance(c, Zero):
                base = ("zero",)
                return {"R": base, "L": base, "D": base}
            if isinstance(c, Constant):
                return {"R": ("c", c.alpha[0]), "L": ("c", c.alpha[1]), "D": ("c",)}
            if isinstance(c, Singleton):
                return {"R": ("s", c.src, c.dst[0]),
                        "L": ("s", c.src, c.dst[1]),
                        "D": ("s", c.src)}
            return {"R": ("n", c.k, c.sigma), "L": ("n", c), "D": ("n", c.k, c.sigma)}
    elif sg.label == "multiplicative":
        def keys(c):
            if isinstance(c, (Zero, Constant)):
                img = c.alpha if isinstance(c, Constant) else None
                return {"R": ("c",), "L": ("c", img), "D": ("c",)}
            if isinstance(c, Singleton):
                return {"R": ("s", c.src), "L": ("s", c.dst), "D": ("s",)}
            return {"R": ("n", c.k), "L": ("n", c.q), "D": ("n",)}
    else:
        raise ValueError(f"unknown reduct label {sg.label!r}")

    per_rel = {"R": [], "L": [], "D": []}
    for c in forms:
        k = keys(c)
        for rel in per_rel:
            per_rel[rel].append(k[rel])
    out = {rel: _group(ks) for rel, ks in per_rel.items()}
    out["J"] = out["D"]
    out["H"] = _group(list(zip(per_rel["R"], per_rel["L"])))
    return out


# --- subsets and structural properties ----------------------------------------

@dataclass
class SubsetReport:
    name: str
    label: str
    size: int
    closed: bool
    regular: bool
    idempotents_commute: bool
    inverse: bool
    orthodox: bool
    iso_target: Optional[str] = None
    iso_holds: Optional[bool] = None


def subset_indices(sg: FiniteSemigroup, name: str) -> Tuple[int, ...]:
    """Member indices of a named subset, selected by support size.

    K (the additively regular elements) is computed from the table rather
    than by support size, which keeps it correct in the degenerate n=1
    case where the lone n-support element happens to be regular.
    """
    n = sg.n
    if name == "all":
        return tuple(range(len(sg)))
    if name == "K":
        if sg.label != "additive":
            raise ValueError("subset K is defined on the additive reduct")
        return tuple(sorted(regular_elements(sg)))
    if name == "N":
        if sg.label != "multiplicative":
            raise ValueError("subset N is defined on the multiplicative reduct")
        return tuple(i for i, f in enumerate(sg.elements)
                     if len(maps.support(f)) <= n)
    if name == "constants":
        return tuple(i for i, f in enumerate(sg.elements)
                     if len(maps.support(f)) in (0, n * n + 1))
    if name == "singleton-ideal":
        return tuple(i for i, f in enumerate(sg.elements)
                     if len(maps.support(f)) <= 1)
    raise ValueError(f"unknown subset {name!r}; expected one of {SUBSET_NAMES}")


def _restrict(sg: FiniteSemigroup, idx):
    """Restricted table in local indices; -1 marks products that escape."""
    if len(idx) == len(sg):
        return sg.op.astype(np.int64), True
    idx = np.asarray(idx, dtype=np.int64)
    lut = np.full(len(sg), -1, dtype=np.int64)
    lut[idx] = np.arange(len(idx))
    sub = lut[sg.op[np.ix_(idx, idx)]]
    return sub, bool((sub >= 0).all())


def _inverse_counts(t):
    """Number of inverses of each element: y with xyx = x and yxy = y."""
    m = t.shape[0]
    ar = np.arange(m)
    out = []
    for i in range(m):
        xyx_ok = t[t[i, :], i] == i
        yxy_ok = t[t[:, i], ar] == ar
        out.append(int(np.count_nonzero(xyx_ok & yxy_ok)))
    return out


def zero_direct_union_table(copies: int, m: int) -> np.ndarray:
    """Cayley table of a 0-direct union of `copies` disjoint B_m's.

    Element 0 is the shared zero; copy c occupies indices
    1 + c*m^2 .. (c+1)*m^2, in B_m code order.  Products across copies
    are zero.
    """
    badd = brandt.add_table(m)
    size = 1 + copies * m * m
    t = np.zeros((size, size), dtype=np.int32)
    block = badd[1:, 1:]
    for c in range(copies):
        base = 1 + c * m * m
        t[base:base + m * m, base:base + m * m] = np.where(block == 0, 0, base + block - 1)
    return t


def check_iso(table_a: np.ndarray, table_b: np.ndarray, bij) -> bool:
    """Does the bijection carry table_a onto table_b?"""
    bij = np.asarray(bij, dtype=np.int64)
    m = table_a.shape[0]
    if table_b.shape != (m, m) or sorted(bij.tolist()) != list(range(m)):
        return False
    return bool(np.array_equal(table_b[bij[:, None], bij[None, :]], bij[table_a]))


def _pair_code(p, n):
    return brandt.pair(p[0], p[1], n)


def _singleton_coords(c):
    """(src, dst) of a 1-support element; covers the n=1 shape collision."""
    if isinstance(c, Singleton):
        return c.src, c.dst
    if isinstance(c, NSupport) and len(c.sigma) == 1:
        return (1, c.k), (c.sigma[0], c.q)
    raise ValueError(f"not a 1-support element: {c!r}")


def _iso_certificate(sg: FiniteSemigroup, name, idx, sub):
    """Explicit bijection onto the claimed target, verified cell by cell."""
    n = sg.n
    forms = [maps.classify(sg.elements[i]) for i in idx]
    if name == "constants" and sg.label == "additive":
        target = brandt.add_table(n)
        bij = [0 if isinstance(c, Zero) else _pair_code(c.alpha, n) for c in forms]
        return f"B_{n}", check_iso(sub, np.asarray(target), bij)
    if name == "singleton-ideal" and sg.label == "additive":
        target = zero_direct_union_table(n * n, n)
        bij = []
        for c in forms:
            if isinstance(c, Zero):
                bij.append(0)
            else:
                src, dst = _singleton_coords(c)
                bij.append(1 + (_pair_code(src, n) - 1) * n * n + (_pair_code(dst, n) - 1))
        return f"0-direct union of {n * n} copies of B_{n}", check_iso(sub, target, bij)
    if name == "singleton-ideal" and sg.label == "multiplicative":
        target = brandt.add_table(n * n)
        bij = []
        for c in forms:
            if isinstance(c, Zero):
                bij.append(0)
            else:
                src, dst = _singleton_coords(c)
                bij.append(brandt.pair(_pair_code(src, n), _pair_code(dst, n), n * n))
        return f"B_{n * n}", check_iso(sub, np.asarray(target), bij)
    return None, None


def structural_checks(sg: FiniteSemigroup, subset: str) -> SubsetReport:
    """Closure, regularity, inverse/orthodox verdicts, and the isomorphism
    certificate (when one is claimed) for a named subset of one reduct."""
    idx = subset_indices(sg, subset)
    sub, closed = _restrict(sg, idx)
    if not closed:
        return SubsetReport(subset, sg.label, len(idx), False,
                            False, False, False, False)
    msub = FiniteSemigroup(sg.n, sg.label,
                           tuple(sg.elements[i] for i in idx), sub.astype(np.int32))
    reg = regular_elements(msub)
    regular = len(reg) == len(idx)
    idem = sorted(idempotents(msub))
    commute = all(sub[e, f] == sub[f, e] for e in idem for f in idem)
    inv_counts = _inverse_counts(sub)
    inverse = all(c == 1 for c in inv_counts)
    orthodox = regular and all(sub[sub[e, f], sub[e, f]] == sub[e, f]
                               for e in idem for f in idem)
    iso_target, iso_holds = _iso_certificate(sg, subset, idx, sub)
    return SubsetReport(subset, sg.label, len(idx), True, regular,
                        commute, inverse, orthodox, iso_target, iso_holds)
