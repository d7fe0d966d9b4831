"""Deterministic Buchberger engine over exact rationals, and a toric-ideal oracle.

Monomials are dense exponent tuples; polynomials are dicts monomial ->
Fraction.  The engine is intentionally plain: normal pair selection with a
lexicographic tie break, Buchberger's coprimality criterion, full
auto-reduction at the end.  Everything is deterministic: same input, same
output, independent of hashing or thread count.

The toric ideal of a list of monomial generators m_1..m_s is the kernel of
t_i -> m_i.  Because the m_i are honest monomials (no Laurent inversion),
the kernel equals the elimination ideal (t_i - m_i : i) intersect k[t],
computed here with a block order in which the ambient x-variables dominate.
Pure lex on (x_1..x_n, t_1..t_s) is exactly such a block order.
"""

from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush
from math import comb

from .errors import BudgetExceeded

DEFAULT_MAX_PAIRS = 20000
DEFAULT_MAX_DEGREE = 60


@dataclass(frozen=True)
class TermOrder:
    """lex, grlex, or a two-block elimination order.

    ``priority`` lists variable indices from most to least significant;
    identity means t_1 > t_2 > ... in the usual sense (index 0 strongest).
    For ``elim``, the first ``block`` variables form the eliminated block,
    compared degree-first (grlex); ties fall through to lex on the rest, so
    basis elements free of the block form a lex Groebner basis of the
    elimination ideal.
    """

    kind: str = "lex"
    priority: tuple = None
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "elim"):
            raise ValueError(f"unknown term order kind {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs a positive block size")

    def key(self, mono):
        if self.kind == "elim":
            head = mono[: self.block]
            return (sum(head), head, mono[self.block :])
        m = mono if self.priority is None else tuple(mono[i] for i in self.priority)
        if self.kind == "grlex":
            return (sum(mono), m)
        return m


LEX = TermOrder("lex")
GRLEX = TermOrder("grlex")


def elimination_order(block: int) -> TermOrder:
    return TermOrder("elim", block=block)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a):
    return sum(a)


class Poly:
    """Immutable-by-convention sparse polynomial: dict monomial -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def binomial(cls, plus, minus):
        if plus == minus:
            return cls()
        return cls({tuple(plus): 1, tuple(minus): -1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def lead(self, order: TermOrder):
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def sub_scaled(self, coeff, mono, other: "Poly") -> "Poly":
        """self - coeff * x^mono * other"""
        res = dict(self.terms)
        for m, c in other.terms.items():
            mm = mono_mul(mono, m)
            val = res.get(mm, 0) - coeff * c
            if val:
                res[mm] = val
            else:
                res.pop(mm, None)
        out = Poly()
        out.terms = res
        return out

    def monic(self, order: TermOrder) -> "Poly":
        _, lc = self.lead(order)
        if lc == 1:
            return self
        out = Poly()
        out.terms = {m: c / lc for m, c in self.terms.items()}
        return out

    def total_degree(self):
        return max(mono_degree(m) for m in self.terms) if self.terms else 0

    def is_binomial(self):
        return len(self.terms) == 2

    def sorted_terms(self, order: TermOrder):
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def __repr__(self):
        return f"Poly({self.terms!r})"


@dataclass
class BinomialIdeal:
    """A generating set (usually a reduced Groebner basis) with its ambient data."""

    generators: list
    nvars: int
    order: TermOrder


def reduce(p: Poly, basis, order: TermOrder) -> Poly:
    """Full normal form of p modulo ``basis``.

    Deterministic: the largest reducible term is rewritten by the first
    generator (in list order) whose lead monomial divides it; irreducible
    terms are moved to the remainder.
    """
    leads = [g.lead(order) for g in basis]
    work = Poly(p.terms)
    remainder = {}
    while work:
        m, c = work.lead(order)
        for g, (lm, lc) in zip(basis, leads):
            if mono_divides(lm, m):
                work = work.sub_scaled(c / lc, mono_div(m, lm), g)
                break
        else:
            remainder[m] = c
            del work.terms[m]
    return Poly(remainder)


def s_polynomial(f: Poly, g: Poly, order: TermOrder) -> Poly:
    fm, fc = f.lead(order)
    gm, gc = g.lead(order)
    l = mono_lcm(fm, gm)
    lifted = Poly().sub_scaled(Fraction(-1) / fc, mono_div(l, fm), f)
    return lifted.sub_scaled(Fraction(1) / gc, mono_div(l, gm), g)


def _autoreduce(basis, order: TermOrder):
    """Minimalize lead monomials, then tail-reduce; output sorted by lead."""
    basis = [g for g in basis if g]
    basis.sort(key=lambda g: order.key(g.lead(order)[0]))
    kept = []
    for i, g in enumerate(basis):
        lm = g.lead(order)[0]
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            hm = h.lead(order)[0]
            if mono_divides(hm, lm) and (hm != lm or j < i):
                redundant = True
                break
        if not redundant:
            kept.append(g)
    reduced = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        r = reduce(g, others, order) if others else g
        if r:
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.lead(order)[0]))
    return reduced


def buchberger(generators, order: TermOrder, max_pairs=DEFAULT_MAX_PAIRS,
               max_degree=DEFAULT_MAX_DEGREE):
    """Reduced Groebner basis of the given generators.

    Pairs are processed by normal selection (smallest lcm in the term order)
    with lexicographic index tie break; the coprime-leads criterion prunes.
    Raises BudgetExceeded when more than ``max_pairs`` pairs are processed or
    a basis element exceeds ``max_degree``.
    """
    polys = [g.monic(order) for g in generators if g]
    if not polys:
        return []
    polys.sort(key=lambda g: order.key(g.lead(order)[0]))
    # inter-reduce the input list until stable (ideal-preserving)
    while True:
        nxt = []
        for p in polys:
            r = reduce(p, nxt, order) if nxt else p
            if r:
                nxt.append(r.monic(order))
        if nxt == polys:
            break
        polys = nxt

    basis = []        # all elements ever added (stable indices)
    leads = []
    alive = []        # indices of the current working basis
    pairs = set()     # critical pairs (i, j) with i < j; survivors of the criteria
    heap = []

    def coprime(a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))

    def add_element(h):
        """Gebauer-Moeller pair update for the new basis element h."""
        ih = len(basis)
        basis.append(h)
        lm_h = h.lead(order)[0]
        leads.append(lm_h)
        candidates = sorted(alive)
        lcm_with = {g: mono_lcm(lm_h, leads[g]) for g in candidates}
        # drop (h,g) when some other new pair's lcm properly divides its lcm
        survivors = [
            g
            for g in candidates
            if not any(
                lcm_with[f] != lcm_with[g] and mono_divides(lcm_with[f], lcm_with[g])
                for f in candidates
            )
        ]
        # one representative per lcm class, preferring a coprime pair
        # (a coprime representative retires the whole class)
        classes = {}
        for g in survivors:
            key = lcm_with[g]
            cur = classes.get(key)
            if cur is None:
                classes[key] = g
            elif coprime(lm_h, leads[g]) and not coprime(lm_h, leads[cur]):
                classes[key] = g
        # old pairs whose lcm is properly divisible by lt(h) are redundant
        for (a, b) in sorted(pairs):
            lcm_ab = mono_lcm(leads[a], leads[b])
            if (
                mono_divides(lm_h, lcm_ab)
                and mono_lcm(leads[a], lm_h) != lcm_ab
                and mono_lcm(leads[b], lm_h) != lcm_ab
            ):
                pairs.discard((a, b))
        for key, g in sorted(classes.items()):
            if not coprime(lm_h, leads[g]):
                pair = (g, ih)
                pairs.add(pair)
                heappush(heap, (order.key(key), pair))
        # retire alive elements with lead divisible by lt(h); their pending
        # pairs stay (the classical update keeps them sound)
        alive[:] = [g for g in alive if not mono_divides(lm_h, leads[g])]
        alive.append(ih)

    for p in polys:
        add_element(p)

    processed = 0
    while pairs:
        while True:
            _, pair = heappop(heap)
            if pair in pairs:
                break
        pairs.discard(pair)
        processed += 1
        if processed > max_pairs:
            raise BudgetExceeded(f"Buchberger pair budget {max_pairs} exceeded")
        i, j = pair
        s = s_polynomial(basis[i], basis[j], order)
        r = reduce(s, [basis[g] for g in alive], order)
        if r:
            if r.total_degree() > max_degree:
                raise BudgetExceeded(
                    f"Buchberger degree budget {max_degree} exceeded "
                    f"(element of degree {r.total_degree()})"
                )
            add_element(r.monic(order))
    return _autoreduce([basis[g] for g in alive], order)


def is_groebner_basis(basis, order: TermOrder, max_degree=4 * DEFAULT_MAX_DEGREE) -> bool:
    """True iff every S-polynomial reduces to zero.  No pruning criteria are
    applied: this is the honest certificate used to check the paper-level
    Groebner claims, not a completion."""
    basis = [g for g in basis if g]
    for i in range(len(basis)):
        for j in range(i):
            s = s_polynomial(basis[i], basis[j], order)
            if s.total_degree() > max_degree:
                raise BudgetExceeded("S-polynomial degree out of budget")
            if reduce(s, basis, order):
                return False
    return True


def initial_ideal(basis, order: TermOrder):
    """Minimal monomial generators of the lead-term ideal of a Groebner basis."""
    leads = sorted({g.lead(order)[0] for g in basis if g}, key=order.key)
    minimal = []
    for m in leads:
        if not any(mono_divides(n, m) for n in minimal if n != m):
            minimal.append(m)
    return minimal


def ideal_equal(a: BinomialIdeal, b: BinomialIdeal, max_pairs=DEFAULT_MAX_PAIRS,
                max_degree=DEFAULT_MAX_DEGREE) -> bool:
    """Mutual containment via reduction against each other's Groebner basis."""
    if a.nvars != b.nvars:
        raise ValueError("ideals live in different ambient rings")
    ga = buchberger(a.generators, a.order, max_pairs, max_degree)
    gb = buchberger(b.generators, b.order, max_pairs, max_degree)
    for g in a.generators:
        if reduce(g, gb, b.order):
            return False
    for g in b.generators:
        if reduce(g, ga, a.order):
            return False
    return True


def toric_ideal(gens, max_pairs=None, max_degree=None) -> BinomialIdeal:
    """Kernel of t_i -> m_i for the monomial generators m_i of ``gens``.

    Elimination with the x-block leading: run Buchberger on (m_i - t_i) over
    k[x_1..x_n, t_1..t_s] under a block order (grlex on the x-block, then
    lex on the t-block) and keep the basis elements free of x.  The result
    is the reduced lex Groebner basis of the kernel, all pure-difference
    binomials.  Degree budgets scale with the substitution monomials since
    intermediate elements legitimately exceed the plain polynomial default.
    """
    n = gens.dim
    s = len(gens.gens)
    if max_pairs is None:
        max_pairs = max(DEFAULT_MAX_PAIRS, 200 * s * s)
    if max_degree is None:
        max_degree = max(DEFAULT_MAX_DEGREE, 3 * max(sum(g) for g in gens.gens) + 6)
    order = elimination_order(n)
    polys = []
    for i, g in enumerate(gens.gens):
        xm = tuple(g) + tuple([0] * s)
        tm = tuple([0] * n) + tuple(1 if k == i else 0 for k in range(s))
        polys.append(Poly.binomial(xm, tm))
    basis = buchberger(polys, order, max_pairs=max_pairs, max_degree=max_degree)
    t_basis = []
    for g in basis:
        if all(all(m[k] == 0 for k in range(n)) for m in g.terms):
            proj = Poly({m[n:]: c for m, c in g.terms.items()})
            t_basis.append(_sign_normalized(proj, LEX))
    t_basis.sort(key=lambda g: LEX.key(g.lead(LEX)[0]))
    return BinomialIdeal(t_basis, s, LEX)


def _sign_normalized(p: Poly, order: TermOrder) -> Poly:
    m, c = p.lead(order)
    if c < 0:
        out = Poly()
        out.terms = {mm: -cc for mm, cc in p.terms.items()}
        return out
    return p


def minimal_generators(ideal: BinomialIdeal, degrees=None):
    """A minimal generating subset of the ideal's basis.

    Elements are processed in ascending (degree, lead) order; one is kept
    exactly when it does not reduce to zero against the ideal generated by
    those already kept.  For homogeneous input (toric ideals graded by the
    generator degrees) this yields a minimal homogeneous generating set.
    """
    order = ideal.order

    def wdeg(p):
        m = p.lead(order)[0]
        if degrees is None:
            return mono_degree(m)
        return sum(d * e for d, e in zip(degrees, m))

    elems = sorted(ideal.generators, key=lambda g: (wdeg(g), order.key(g.lead(order)[0])))
    kept = []
    kept_gb = []
    for g in elems:
        if kept and not reduce(g, kept_gb, order):
            continue
        kept.append(g)
        kept_gb = buchberger(kept, order)
    return kept


def binomial_to_json(p: Poly, order: TermOrder = LEX):
    """{"plus": {...}, "minus": {...}} with 1-based variable indices."""
    terms = p.sorted_terms(order)
    if len(terms) != 2 or terms[0][1] != -terms[1][1]:
        raise ValueError("not a pure-difference binomial")
    plus, minus = terms[0][0], terms[1][0]

    def packed(m):
        return {str(i + 1): e for i, e in enumerate(m) if e}

    return {"plus": packed(plus), "minus": packed(minus)}


def expected_minimal_minor_count(s: int) -> int:
    return comb(s - 1, 2)
