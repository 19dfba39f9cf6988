"""Closed-form counting oracle.

Every count is a pure function of n, evaluated in exact integer
arithmetic.  These are the expected sides of the enumeration tests; the
measured sides come from the closure engine and the Green analysis.

The n = 1 case is degenerate: the single 1-support element doubles as the
n-support shape, so the census rows are fixed constants there instead of
the n >= 2 polynomials.
"""

from dataclasses import dataclass
from math import factorial
from typing import Dict


@dataclass(frozen=True)
class CountsTable:
    n: int
    end_count: int
    aut_count: int
    aff_count: int
    a_plus_total: int
    breakup: Dict[str, int]         # {"full", "n_support", "singleton", "zero"}
    additive: Dict[str, int]        # {"r", "l", "d", "idempotents", "regular"}
    multiplicative: Dict[str, int]  # {"r", "l", "d", "h", "idempotents"}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "end_count": self.end_count,
            "aut_count": self.aut_count,
            "aff_count": self.aff_count,
            "a_plus_total": self.a_plus_total,
            "breakup": dict(self.breakup),
            "additive": dict(self.additive),
            "multiplicative": dict(self.multiplicative),
        }


def counts(n: int) -> CountsTable:
    """All closed-form counts at a given n >= 1."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    f = factorial(n)
    breakup = {
        "full": n * n,
        "n_support": f * n * n,
        "singleton": n ** 4 if n >= 2 else 0,
        "zero": 1,
    }
    total = sum(breakup.values())
    if n == 1:
        additive = {"r": 3, "l": 3, "d": 3, "idempotents": 3, "regular": 3}
        multiplicative = {"r": 2, "l": 3, "d": 2, "h": 3, "idempotents": 3}
    else:
        additive = {
            "r": f * n + n ** 3 + n + 1,
            "l": f * n * n + n ** 3 + n + 1,
            "d": f * n + n * n + 2,
            "idempotents": n ** 3 + n + 1,
            "regular": n ** 4 + n * n + 1,
        }
        multiplicative = {
            "r": n * n + n + 1,
            "l": 2 * n * n + n + 1,
            "d": 3,
            "h": n ** 4 + 2 * n * n + 1,
            "idempotents": 2 * n * n + n + 1,
        }
    return CountsTable(
        n=n,
        end_count=f + n + 1,
        aut_count=f,
        aff_count=(f + 1) * n * n + 1,
        a_plus_total=total,
        breakup=breakup,
        additive=additive,
        multiplicative=multiplicative,
    )


def support_histogram_expected(n: int) -> Dict[int, int]:
    """Expected element count per support size, folding colliding sizes."""
    ct = counts(n)
    sizes = {"zero": 0, "singleton": 1, "n_support": n, "full": n * n + 1}
    hist: Dict[int, int] = {}
    for key, c in ct.breakup.items():
        if c:
            hist[sizes[key]] = hist.get(sizes[key], 0) + c
    return dict(sorted(hist.items()))


def eventual_regularity_max(n: int) -> int:
    """Largest eventual-regularity index in the additive reduct."""
    return 1 if n == 1 else 2
