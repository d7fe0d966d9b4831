"""Closed-form graded invariants: gap numbers, Betti tables, Hilbert series.

For a convex semigroup ring on s generators the minimal free resolution is
governed by the path-graph Stanley-Reisner ideal (t_i t_j : j > i+1): a
subset A of [s] contributes multiplicity gap(A) in homological position
|A| - 1 and internal degree sum(d_k, k in A).  Everything below is a
reorganization of that one subset sum, computed by dynamic programming so
that s up to 64 stays cheap, with closed forms for the totals.
"""

from dataclasses import dataclass
from math import comb

from .errors import BudgetExceeded

MAX_S = 64


def gap_number(subset, s=None) -> int:
    """Number of consecutive jumps exceeding 1 in a sorted index subset."""
    subset = list(subset)
    if any(b < 1 for b in subset):
        raise ValueError(f"indices must be >= 1, got {subset}")
    if any(subset[i] >= subset[i + 1] for i in range(len(subset) - 1)):
        raise ValueError(f"subset must be strictly increasing, got {subset}")
    if s is not None and subset and subset[-1] > s:
        raise ValueError(f"index {subset[-1]} out of range [1, {s}]")
    return sum(1 for i in range(len(subset) - 1) if subset[i + 1] - subset[i] > 1)


def _gap_sums(degrees):
    """{(|A|, sum of degrees over A): total gap(A)} over all subsets A.

    Position DP: walking left to right, a subset is extended by taking or
    skipping the current index; taking it adds a gap exactly when the subset
    is nonempty and the previous index was skipped.  States carry (size,
    degree sum, previous-index-taken flag) with two accumulators: subset
    count and accumulated gap total.
    """
    s = len(degrees)
    if s > MAX_S:
        raise BudgetExceeded(f"subset DP capped at s = {MAX_S}, got {s}")
    # state: (size, degsum, prev_taken) -> [count, gap_total]
    states = {(0, 0, False): [1, 0]}
    for d in degrees:
        nxt = {}
        for (size, degsum, prev), (count, gaps) in states.items():
            # skip this index
            key = (size, degsum, False)
            acc = nxt.setdefault(key, [0, 0])
            acc[0] += count
            acc[1] += gaps
            # take this index
            key = (size + 1, degsum + d, True)
            acc = nxt.setdefault(key, [0, 0])
            acc[0] += count
            acc[1] += gaps + (count if (size > 0 and not prev) else 0)
        states = nxt
    out = {}
    for (size, degsum, _), (count, gaps) in states.items():
        if gaps:
            key = (size, degsum)
            out[key] = out.get(key, 0) + gaps
    return out


@dataclass
class BettiTable:
    """Sparse (homological index, internal degree) -> multiplicity."""

    entries: dict
    grading: str = "standard"

    def total(self, i: int) -> int:
        return sum(m for (hi, _), m in self.entries.items() if hi == i)

    def max_index(self) -> int:
        return max((hi for (hi, _) in self.entries), default=0)

    def rows(self):
        return sorted(self.entries.items())

    def to_json(self):
        return [
            {"i": str(i), "j": str(j), "mult": str(m)}
            for (i, j), m in sorted(self.entries.items())
        ]


def graded_betti(degrees, grading="standard") -> BettiTable:
    """Betti table of a convex semigroup ring with generator degrees d_1..d_s.

    beta_{0,0} = 1; a subset A with |A| = i+1 and degree sum j contributes
    gap(A) to beta_{i,j}.  The degree list is the standard one (a_i + b_i)
    or the weighted one (w . c_i) depending on the grading tag; gap numbers
    do not depend on the tag, so the row totals never change.
    """
    entries = {(0, 0): 1}
    for (size, degsum), gaps in _gap_sums(tuple(degrees)).items():
        key = (size - 1, degsum)
        entries[key] = entries.get(key, 0) + gaps
    return BettiTable(entries, grading)


def total_betti(s: int, i: int) -> int:
    """i * C(s-1, i+1) for i >= 1, and 1 for i = 0."""
    if s < 1 or i < 0:
        raise ValueError("need s >= 1 and i >= 0")
    if i == 0:
        return 1
    return i * comb(s - 1, i + 1)


@dataclass
class HilbertSeries:
    """numerator / prod(1 - t^d) over the generator degrees d.

    Kept unreduced so the displayed closed form is bit-comparable; call
    ``reduced()`` to cancel common cyclotomic-free factors (1 - t^d).
    """

    numerator: dict            # exponent -> integer coefficient
    denominator_exponents: tuple

    def reduced(self) -> "HilbertSeries":
        num = dict(self.numerator)
        kept = []
        for d in self.denominator_exponents:
            q = _divide_by_one_minus_power(num, d)
            if q is None:
                kept.append(d)
            else:
                num = q
        return HilbertSeries(num, tuple(kept))

    def to_json(self):
        return {
            "numerator": {str(e): str(c) for e, c in sorted(self.numerator.items())},
            "denominator_exponents": [str(d) for d in self.denominator_exponents],
        }


def _divide_by_one_minus_power(num, d):
    """num / (1 - t^d) as a polynomial, or None if it does not divide."""
    maxe = max(num, default=0)
    quot = {}
    rem = dict(num)
    # synthetic division by (1 - t^d), highest exponent first
    for e in range(maxe, d - 1, -1):
        c = rem.get(e)
        if not c:
            continue
        quot[e - d] = quot.get(e - d, 0) - c
        rem[e - d] = rem.get(e - d, 0) + c
        del rem[e]
    if any(c for e, c in rem.items()):
        return None
    return {e: c for e, c in quot.items() if c}


def hilbert_series(degrees) -> HilbertSeries:
    """1 + sum over subsets A of (-1)^{|A|+1} gap(A) t^{deg A}, over
    prod_j (1 - t^{d_j})."""
    degrees = tuple(degrees)
    if any(d < 1 for d in degrees):
        raise ValueError("generator degrees must be >= 1")
    num = {0: 1}
    for (size, degsum), gaps in _gap_sums(degrees).items():
        sign = 1 if size % 2 else -1
        num[degsum] = num.get(degsum, 0) + sign * gaps
    num = {e: c for e, c in num.items() if c}
    return HilbertSeries(num, degrees)


def expand_series(series: HilbertSeries, n: int):
    """First n+1 power-series coefficients, by exact polynomial division."""
    if n < 0:
        raise ValueError("need n >= 0")
    coeffs = [0] * (n + 1)
    for e, c in series.numerator.items():
        if e <= n:
            coeffs[e] += c
    for d in series.denominator_exponents:
        for i in range(d, n + 1):
            coeffs[i] += coeffs[i - d]
    return coeffs


def residue_field_betti(s: int, i: int) -> int:
    """Betti numbers of the residue field over a two-dimensional normal
    semigroup ring on s generators: 1, s, then (s-2)^(i-2) (s-1)^2."""
    if s < 2 or i < 0:
        raise ValueError("need s >= 2 and i >= 0")
    if i == 0:
        return 1
    if i == 1:
        return s
    return (s - 2) ** (i - 2) * (s - 1) ** 2


def fiber_power_generator_count(exponents, k: int) -> int:
    """Number of minimal monomial generators of I^k for a 2-variable
    monomial ideal I given by its minimal generators."""
    if k < 0:
        raise ValueError("need k >= 0")
    if k == 0:
        return 1
    if k > 12:
        raise BudgetExceeded("power generator count capped at k = 12")
    pts = [tuple(p) for p in exponents]
    if any(len(p) != 2 for p in pts):
        raise ValueError("fiber power counts are implemented for 2-variable ideals")
    from itertools import combinations_with_replacement

    sums = {
        tuple(sum(q[c] for q in combo) for c in range(len(pts[0])))
        for combo in combinations_with_replacement(pts, k)
    }
    return len(_minimal_elements(sums))


def _minimal_elements(points):
    """Minimal elements of a set of 2D points under componentwise order."""
    pts = sorted(points)
    out = []
    best_b = None
    for (a, b) in pts:
        if best_b is None or b < best_b:
            out.append((a, b))
            best_b = b
    return out
