"""Minimal generators, membership, and order filtration of monomial subalgebras.

The central objects are weighted Veronese rings: fix positive weights w and a
degree d, and take the subalgebra spanned by all monomials whose weighted
degree is a multiple of d.  Exponent vectors of such monomials are exactly
the solutions of w . c == 0 (mod d), so minimal algebra generators are the
minimal nonzero solutions of that congruence.

In two variables the scan over y-exponents with a running minimum of
x-exponents is exact and complete; in three or more variables generators are
enumerated degree by degree up to a bound and the result carries a
completeness flag.
"""

from dataclasses import dataclass, field
from math import gcd, lcm

from .errors import BudgetExceeded
from .lattice import is_convex_sequence


@dataclass(frozen=True)
class VeroneseSpec:
    """Weights w_1..w_n (all >= 1) and a Veronese degree d >= 1."""

    weights: tuple
    degree: int

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.weights) < 2:
            raise ValueError("need at least two weights")
        if any(w < 1 for w in self.weights):
            raise ValueError(f"weights must be positive, got {self.weights}")
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")

    @property
    def n(self) -> int:
        return len(self.weights)

    def weighted_degree(self, point) -> int:
        return sum(w * e for w, e in zip(self.weights, point))


class SemigroupGens:
    """An ordered minimal generating set of a monomial subalgebra.

    ``gens`` is kept in canonical order: for 2D, first coordinates
    nonincreasing (so t_1 maps to the largest power of x); for higher
    dimension, ascending weighted degree with descending-lex tie break,
    matching the order in which generators are customarily listed.
    """

    def __init__(self, gens, weights=None, veronese_degree=None, complete=True):
        self.gens = tuple(tuple(int(x) for x in g) for g in gens)
        if not self.gens:
            raise ValueError("empty generating set")
        self.dim = len(self.gens[0])
        if any(len(g) != self.dim for g in self.gens):
            raise ValueError("generators have mixed dimensions")
        if any(min(g) < 0 for g in self.gens):
            raise ValueError("generators must have nonnegative exponents")
        if any(max(g) == 0 and min(g) == 0 for g in self.gens):
            raise ValueError("the zero vector cannot be a generator")
        self.weights = tuple(int(w) for w in weights) if weights is not None else None
        self.veronese_degree = veronese_degree
        self.complete = complete
        self._member_cache = {tuple([0] * self.dim): True}
        self._order_cache = {tuple([0] * self.dim): 0}

    @property
    def s(self) -> int:
        return len(self.gens)

    def standard_degrees(self):
        """Total degree a+b+... of each generator."""
        return tuple(sum(g) for g in self.gens)

    def weighted_degrees(self):
        if self.weights is None:
            return self.standard_degrees()
        return tuple(sum(w * e for w, e in zip(self.weights, g)) for g in self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"SemigroupGens({list(self.gens)!r})"


def _canonical_sort(gens, weights):
    dim = len(gens[0])
    if dim == 2:
        return sorted(gens, key=lambda g: (-g[0], g[1]))
    wd = lambda g: sum(w * e for w, e in zip(weights, g))
    return sorted(gens, key=lambda g: (wd(g), tuple(-e for e in g)))


def veronese_generators_2d(spec: VeroneseSpec) -> SemigroupGens:
    """Minimal generators of a 2-variable weighted Veronese ring, by congruence scan.

    For each y-exponent b in increasing order, the minimal x-exponent a
    solving w1*a == -w2*b (mod d) is a generator precisely when it drops
    strictly below every minimum seen so far; the scan stops once a == 0.
    """
    if spec.n != 2:
        raise ValueError("veronese_generators_2d requires exactly two weights")
    w1, w2 = spec.weights
    d = spec.degree
    g1 = gcd(w1, d)
    d1 = d // g1
    w1_inv = pow((w1 // g1) % d1, -1, d1) if d1 > 1 else 0
    gens = []
    best = None
    b = 0
    while True:
        r = (-w2 * b) % d
        if r % g1 == 0:
            a = ((r // g1) * w1_inv) % d1 if d1 > 1 else 0
            if b == 0:
                a = d1  # smallest positive solution; (0,0) is excluded
            if best is None or a < best:
                gens.append((a, b))
                best = a
                if a == 0:
                    break
        b += 1
    return SemigroupGens(gens, weights=spec.weights, veronese_degree=d, complete=True)


def default_degree_bound(spec: VeroneseSpec) -> int:
    """Sum of lcm(w_i, d)/d; in two variables this bound is provably complete."""
    return sum(lcm(w, spec.degree) // spec.degree for w in spec.weights)


def _monomials_of_weighted_degree(weights, target):
    """All exponent vectors e >= 0 with weights . e == target."""
    out = []

    def rec(i, remaining, prefix):
        if i == len(weights) - 1:
            q, r = divmod(remaining, weights[i])
            if r == 0:
                out.append(tuple(prefix + [q]))
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            rec(i + 1, remaining - e * w, prefix + [e])

    rec(0, target, [])
    return out


def veronese_generators_nd(spec: VeroneseSpec, bound=None) -> SemigroupGens:
    """Generators found degree-by-degree up to ``bound`` multiples of d.

    A candidate monomial of weighted degree k*d is discarded when some
    already-found generator divides it with quotient in the semigroup.  With
    n == 2 the default bound is forced by the lcm formula for the largest
    generator degree and the output is complete; for n >= 3 no degree bound
    is known in general, so the output is flagged incomplete (heuristic)
    unless the caller vouches for a larger bound.
    """
    if bound is None:
        bound = default_degree_bound(spec)
    if bound < 1:
        raise ValueError(f"degree bound must be >= 1, got {bound}")
    d = spec.degree
    gens = []

    def in_semigroup(point, memo):
        # membership over the generators found so far (all of lower degree)
        if all(x == 0 for x in point):
            return True
        key = point
        known = memo.get(key)
        if known is not None:
            return known
        ok = False
        for g in gens:
            if all(x >= y for x, y in zip(point, g)):
                if in_semigroup(tuple(x - y for x, y in zip(point, g)), memo):
                    ok = True
                    break
        memo[key] = ok
        return ok

    for k in range(1, bound + 1):
        memo = {}
        layer = []
        for cand in _monomials_of_weighted_degree(spec.weights, k * d):
            decomposable = False
            for g in gens:
                if all(x >= y for x, y in zip(cand, g)):
                    rest = tuple(x - y for x, y in zip(cand, g))
                    if in_semigroup(rest, memo):
                        decomposable = True
                        break
            if not decomposable:
                layer.append(cand)
        gens.extend(layer)
    complete = spec.n == 2
    return SemigroupGens(
        _canonical_sort(gens, spec.weights),
        weights=spec.weights,
        veronese_degree=d,
        complete=complete,
    )


def veronese_generators(spec: VeroneseSpec, bound=None) -> SemigroupGens:
    """Dispatch to the exact 2D scan or the bounded nD enumeration."""
    if spec.n == 2 and bound is None:
        return veronese_generators_2d(spec)
    return veronese_generators_nd(spec, bound)


def membership(gens: SemigroupGens, point) -> bool:
    """True iff ``point`` is a sum of generators (nonnegative integer combination)."""
    point = tuple(int(x) for x in point)
    if len(point) != gens.dim:
        raise ValueError(f"point dimension {len(point)} != generator dimension {gens.dim}")
    if min(point) < 0:
        return False
    cache = gens._member_cache
    known = cache.get(point)
    if known is not None:
        return known
    ok = False
    for g in gens.gens:
        if all(x >= y for x, y in zip(point, g)):
            if membership(gens, tuple(x - y for x, y in zip(point, g))):
                ok = True
                break
    cache[point] = ok
    return ok


def m_adic_order(gens: SemigroupGens, point) -> int:
    """Largest k such that ``point`` is a sum of k generators; order(0) = 0.

    This is the index of the filtration layer m^k \\ m^(k+1) containing the
    monomial, the grading of the associated graded ring.
    """
    point = tuple(int(x) for x in point)
    if not membership(gens, point):
        raise ValueError(f"{point} is not in the semigroup")
    cache = gens._order_cache
    known = cache.get(point)
    if known is not None:
        return known
    best = 0
    for g in gens.gens:
        if all(x >= y for x, y in zip(point, g)):
            rest = tuple(x - y for x, y in zip(point, g))
            if membership(gens, rest):
                k = 1 + m_adic_order(gens, rest)
                if k > best:
                    best = k
    cache[point] = best
    return best


def members_in_box(gens: SemigroupGens, bound: int):
    """All semigroup elements with every coordinate <= bound (2D only)."""
    if gens.dim != 2:
        raise ValueError("box enumeration implemented for 2D only")
    member = [[False] * (bound + 1) for _ in range(bound + 1)]
    member[0][0] = True
    for a in range(bound + 1):
        for b in range(bound + 1):
            if member[a][b]:
                continue
            for (ga, gb) in gens.gens:
                if a >= ga and b >= gb and member[a - ga][b - gb]:
                    member[a][b] = True
                    break
    return [(a, b) for a in range(bound + 1) for b in range(bound + 1) if member[a][b]]


def is_closed_under_division(gens: SemigroupGens, search_bound: int):
    """Search for semigroup monomials mu1, mu2 with mu1/mu2 a monomial outside
    the semigroup.  Returns (True, None) if no counterexample exists with
    coordinates <= search_bound, else (False, (mu1, mu2, quotient)).

    Veronese generating sets short-circuit to True: the quotient of two
    monomials with degrees divisible by d again has degree divisible by d.
    """
    if gens.veronese_degree is not None:
        return True, None
    members = members_in_box(gens, search_bound)
    member_set = set(members)
    for mu1 in members:
        for mu2 in members:
            if mu1 == mu2:
                continue
            diff = tuple(x - y for x, y in zip(mu1, mu2))
            if min(diff) < 0:
                continue
            if diff in member_set:
                continue
            if not membership(gens, diff):
                return False, (mu1, mu2, diff)
    return True, None


def max_gen_degree(spec: VeroneseSpec) -> int:
    """max(lcm(w1,d), lcm(w2,d)): the largest weighted degree of a minimal
    generator of a 2D Veronese ring with coprime weights."""
    if spec.n != 2:
        raise ValueError("max_gen_degree applies to two-variable specs")
    w1, w2 = spec.weights
    if gcd(w1, w2) != 1:
        raise ValueError(f"weights {spec.weights} are not coprime")
    return max(lcm(w1, spec.degree), lcm(w2, spec.degree))


def convex_sequence_of(gens: SemigroupGens):
    """The generators as a validated ConvexSequence (2D, canonical order)."""
    from .lattice import ConvexSequence

    return ConvexSequence.from_points(gens.gens)


def gens_are_convex(gens: SemigroupGens) -> bool:
    if gens.dim != 2:
        return False
    try:
        return is_convex_sequence(list(gens.gens))
    except ValueError:
        return False
