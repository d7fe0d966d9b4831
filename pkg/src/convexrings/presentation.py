"""Skeleton matrices for convex sequences, blank filling, and 2x2 minors.

The skeleton places one block per segment between consecutive corner points
along a diagonal, overlapping neighbouring blocks in a single shared cell.
A segment with g+1 points contributes the 2x(g) block

    [ t_j   t_{j+1} ... t_{j+g-1} ]
    [ t_{j+1} t_{j+2} ... t_{j+g} ]

while two consecutive corners contribute a degenerate 1x2 or 2x1 block;
maximal runs of degenerate blocks alternate orientation starting horizontal.

Filling: in a fully filled matrix whose minors all vanish under t_i -> m_i,
the substituted matrix has rank one, so every cell value is forced to
rho_row * kappa_col for Laurent monomials rho, kappa determined (up to a
global shift) by the variable cells.  We propagate those factors over the
skeleton, factor each blank's forced value over the semigroup with t-degree
at least two, and verify the result by substitution.
"""

from dataclasses import dataclass
from math import comb

from .errors import ConsistencyError, ContractViolation
from .groebner import LEX, Poly
from .lattice import ConvexSequence, corner_points
from .semigroup import SemigroupGens, m_adic_order, membership

BLANK = None


@dataclass(frozen=True)
class Block:
    kind: str      # "segment", "row" (1x2) or "col" (2x1)
    row: int       # top-left cell, 0-based
    col: int
    height: int
    width: int
    first_var: int  # 1-based index of the variable at the top-left cell


class PresentationMatrix:
    """Grid of entries: BLANK, or an exponent tuple over t_1..t_s.

    A cell holding t_i is stored as the unit tuple with 1 in slot i-1; a
    filled blank is a tuple of total degree >= 2.
    """

    def __init__(self, entries, nvars, blocks=()):
        self.entries = tuple(tuple(row) for row in entries)
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        self.nvars = nvars
        self.blocks = tuple(blocks)

    def entry(self, r, c):
        return self.entries[r][c]

    def is_variable(self, r, c):
        e = self.entries[r][c]
        return e is not None and sum(e) == 1

    def variable_index(self, r, c):
        """1-based t-index when the cell holds a bare variable, else None."""
        e = self.entries[r][c]
        if e is not None and sum(e) == 1:
            return e.index(1) + 1
        return None

    @property
    def filled(self):
        return all(e is not None for row in self.entries for e in row)

    def blank_cells(self):
        return [
            (r, c)
            for r in range(self.rows)
            for c in range(self.cols)
            if self.entries[r][c] is None
        ]

    def substitute(self, gens: SemigroupGens):
        """Cell values as exponent vectors in the ambient x-variables."""
        if not self.filled:
            raise ValueError("matrix has blank cells")
        dim = gens.dim
        out = []
        for row in self.entries:
            vals = []
            for e in row:
                vals.append(
                    tuple(sum(k * g[c] for k, g in zip(e, gens.gens)) for c in range(dim))
                )
            out.append(tuple(vals))
        return tuple(out)

    def render(self):
        """Bracketed text layout with one column per matrix column."""
        def fmt(e):
            if e is None:
                return "."
            parts = []
            for i, k in enumerate(e):
                if k == 1:
                    parts.append(f"t{i + 1}")
                elif k > 1:
                    parts.append(f"t{i + 1}^{k}")
            return "*".join(parts) if parts else "1"

        cells = [[fmt(e) for e in row] for row in self.entries]
        widths = [max(len(cells[r][c]) for r in range(self.rows)) for c in range(self.cols)]
        lines = []
        for r in range(self.rows):
            body = "  ".join(cells[r][c].rjust(widths[c]) for c in range(self.cols))
            lines.append(f"[ {body} ]")
        return "\n".join(lines)

    def to_json(self):
        ents = []
        for row in self.entries:
            out_row = []
            for e in row:
                if e is None:
                    out_row.append(None)
                elif sum(e) == 1:
                    out_row.append({"var": str(e.index(1) + 1)})
                else:
                    out_row.append(
                        {"mono": {str(i + 1): str(k) for i, k in enumerate(e) if k}}
                    )
            ents.append(out_row)
        return {"rows": str(self.rows), "cols": str(self.cols), "entries": ents}


def _unit(i, s):
    """Exponent tuple of the variable t_i (1-based)."""
    return tuple(1 if k == i - 1 else 0 for k in range(s))


def build_skeleton(seq: ConvexSequence) -> PresentationMatrix:
    """Skeleton matrix of a convex sequence: blocks along the diagonal,
    consecutive blocks overlapping in one cell, blanks elsewhere."""
    s = len(seq)
    if s < 2:
        raise ValueError("need at least two points to build a skeleton")
    corners = corner_points(seq)
    cells = {}
    blocks = []
    r = c = 0
    horizontal_next = True  # degenerate-run alternation starts 1x2
    for k in range(len(corners) - 1):
        j0, j1 = corners[k], corners[k + 1]
        gap = j1 - j0
        if gap >= 2:
            for dr in range(2):
                for dc in range(gap):
                    cells[(r + dr, c + dc)] = j0 + dr + dc
            blocks.append(Block("segment", r, c, 2, gap, j0))
            r, c = r + 1, c + gap - 1
            horizontal_next = True
        elif horizontal_next:
            cells[(r, c)] = j0
            cells[(r, c + 1)] = j1
            blocks.append(Block("row", r, c, 1, 2, j0))
            c += 1
            horizontal_next = False
        else:
            cells[(r, c)] = j0
            cells[(r + 1, c)] = j1
            blocks.append(Block("col", r, c, 2, 1, j0))
            r += 1
            horizontal_next = True
    nrows = max(rr for rr, _ in cells) + 1
    ncols = max(cc for _, cc in cells) + 1
    entries = [[BLANK] * ncols for _ in range(nrows)]
    for (rr, cc), var in cells.items():
        entries[rr][cc] = _unit(var, s)
    return PresentationMatrix(entries, s, blocks)


def _rank_one_targets(matrix: PresentationMatrix, gens: SemigroupGens):
    """Forced substituted value of every cell, from the variable cells.

    Returns a grid of integer 2-vectors (possibly with negative entries for
    genuinely impossible inputs, which the caller rejects).
    """
    dim = gens.dim
    known = {}
    for r in range(matrix.rows):
        for c in range(matrix.cols):
            i = matrix.variable_index(r, c)
            if i is not None:
                known[(r, c)] = gens.gens[i - 1]
    rho = {0: tuple([0] * dim)}
    kappa = {}
    # propagate row/column Laurent factors across the bipartite cell graph
    changed = True
    while changed:
        changed = False
        for (r, c), val in known.items():
            if r in rho and c not in kappa:
                kappa[c] = tuple(v - x for v, x in zip(val, rho[r]))
                changed = True
            elif c in kappa and r not in rho:
                rho[r] = tuple(v - x for v, x in zip(val, kappa[c]))
                changed = True
            elif r in rho and c in kappa:
                if tuple(x + y for x, y in zip(rho[r], kappa[c])) != tuple(val):
                    raise ContractViolation(
                        f"skeleton cell ({r + 1},{c + 1}) is inconsistent with a "
                        "rank-one filling; input is not a convex semigroup "
                        "closed under division"
                    )
    if len(rho) != matrix.rows or len(kappa) != matrix.cols:
        raise ConsistencyError("skeleton blocks do not chain into a connected grid")
    return [
        [tuple(x + y for x, y in zip(rho[r], kappa[c])) for c in range(matrix.cols)]
        for r in range(matrix.rows)
    ]


def _min_allowed_index(matrix: PresentationMatrix, r, c):
    """Variables below this index may not appear in the fill of cell (r, c).

    In any 2x2 minor whose diagonal cells are variables t_i, t_j (i < j),
    the off-diagonal entries must only involve t_k with k > i, or the lex
    lead term of the minor is no longer t_i t_j.  The binding constraints
    come from variables above the cell in its column and to its left in its
    row.
    """
    bound = 0
    for rr in range(r):
        i = matrix.variable_index(rr, c)
        if i is not None:
            bound = max(bound, i)
    for cc in range(c):
        i = matrix.variable_index(r, cc)
        if i is not None:
            bound = max(bound, i)
    return bound


def _factor_over(gens: SemigroupGens, target, min_index):
    """Factor ``target`` into generators with indices > min_index (1-based),
    maximizing the number of factors; returns an exponent tuple over t or
    None.  Ties prefer the largest generator index."""
    pool = list(range(len(gens.gens) - 1, min_index - 1, -1))
    zero = tuple([0] * gens.dim)
    best = {}

    def order_of(p):
        if p == zero:
            return 0
        if p in best:
            return best[p]
        out = -1
        for gi in pool:
            g = gens.gens[gi]
            if all(x >= y for x, y in zip(p, g)):
                sub = order_of(tuple(x - y for x, y in zip(p, g)))
                if sub >= 0 and sub + 1 > out:
                    out = sub + 1
        best[p] = out
        return out

    k = order_of(tuple(target))
    if k < 0:
        return None
    expo = [0] * len(gens.gens)
    p = tuple(target)
    remaining = k
    while p != zero:
        for gi in pool:
            g = gens.gens[gi]
            if all(x >= y for x, y in zip(p, g)):
                rest = tuple(x - y for x, y in zip(p, g))
                if order_of(rest) == remaining - 1:
                    expo[gi] += 1
                    p = rest
                    remaining -= 1
                    break
        else:
            return None
    return tuple(expo)


def fill_skeleton(matrix: PresentationMatrix, gens: SemigroupGens) -> PresentationMatrix:
    """Replace every blank with a t-monomial of degree >= 2 so that all 2x2
    minors vanish under substitution.

    Each blank's substituted value is forced by the rank-one structure; it
    is factored over the generators, avoiding variable indices that would
    break the lead-term structure of the minimal minors.  Raises
    ContractViolation when a forced value fails to factor, which certifies
    that the generators were not a convex sequence closed under division.
    """
    if matrix.nvars != len(gens.gens):
        raise ValueError("matrix and generators disagree on the number of variables")
    targets = _rank_one_targets(matrix, gens)
    entries = [list(row) for row in matrix.entries]
    for (r, c) in matrix.blank_cells():
        target = targets[r][c]
        cell = f"cell ({r + 1},{c + 1})"
        if min(target) < 0:
            raise ContractViolation(f"{cell}: forced value {target} leaves the quadrant")
        expo = _factor_over(gens, target, _min_allowed_index(matrix, r, c))
        if expo is None:
            expo = _factor_over(gens, target, 0)
        if expo is None:
            raise ContractViolation(
                f"{cell}: forced value {target} is not a product of generators; "
                "input is not closed under monomial division"
            )
        if sum(expo) < 2:
            raise ContractViolation(
                f"{cell}: forced value {target} only factors with t-degree < 2"
            )
        entries[r][c] = expo
    return PresentationMatrix(entries, matrix.nvars, matrix.blocks)


def _minor(matrix, r1, r2, c1, c2):
    """The 2x2 minor as a Poly in t, or None when it is identically zero."""
    a = matrix.entries[r1][c1]
    b = matrix.entries[r1][c2]
    c = matrix.entries[r2][c1]
    d = matrix.entries[r2][c2]
    if None in (a, b, c, d):
        raise ValueError("minor over blank cells")
    plus = tuple(x + y for x, y in zip(a, d))
    minus = tuple(x + y for x, y in zip(b, c))
    if plus == minus:
        return None
    return Poly.binomial(plus, minus)


def minors_2x2(matrix: PresentationMatrix):
    """All nonzero 2x2 minors, deduplicated, in row-major submatrix order."""
    if not matrix.filled:
        raise ValueError("matrix has blank cells; fill it first")
    out = []
    seen = set()
    for r1 in range(matrix.rows):
        for r2 in range(r1 + 1, matrix.rows):
            for c1 in range(matrix.cols):
                for c2 in range(c1 + 1, matrix.cols):
                    m = _minor(matrix, r1, r2, c1, c2)
                    if m is None:
                        continue
                    key = frozenset(m.terms)
                    if key in seen:
                        continue
                    seen.add(key)
                    out.append(m)
    return out


def minimal_minors(matrix: PresentationMatrix):
    """Minors of submatrices whose main-diagonal cells are bare variables,
    one per lead monomial; these are the minimal generators of the ideal.

    Raises ConsistencyError unless exactly C(s-1, 2) minors with pairwise
    distinct lead monomials survive.
    """
    if not matrix.filled:
        raise ValueError("matrix has blank cells; fill it first")
    s = matrix.nvars
    by_lead = {}
    order = []
    for r1 in range(matrix.rows):
        for r2 in range(r1 + 1, matrix.rows):
            for c1 in range(matrix.cols):
                for c2 in range(c1 + 1, matrix.cols):
                    if not (matrix.is_variable(r1, c1) and matrix.is_variable(r2, c2)):
                        continue
                    m = _minor(matrix, r1, r2, c1, c2)
                    if m is None:
                        continue
                    lead = m.lead(LEX)[0]
                    if lead not in by_lead:
                        by_lead[lead] = m
                        order.append(lead)
    expected = comb(s - 1, 2)
    if len(order) != expected:
        raise ConsistencyError(
            f"found {len(order)} minimal minors, expected C({s - 1},2) = {expected}"
        )
    return [by_lead[l] for l in sorted(order)]


def verify_presentation(matrix: PresentationMatrix, gens: SemigroupGens):
    """Check that every 2x2 minor vanishes under t_i -> m_i.

    Returns (True, None) or (False, witness) where the witness names the
    offending submatrix and its nonvanishing binomial.
    """
    values = matrix.substitute(gens)
    for r1 in range(matrix.rows):
        for r2 in range(r1 + 1, matrix.rows):
            for c1 in range(matrix.cols):
                for c2 in range(c1 + 1, matrix.cols):
                    lhs = tuple(x + y for x, y in zip(values[r1][c1], values[r2][c2]))
                    rhs = tuple(x + y for x, y in zip(values[r1][c2], values[r2][c1]))
                    if lhs != rhs:
                        return False, {
                            "rows": (r1 + 1, r2 + 1),
                            "cols": (c1 + 1, c2 + 1),
                            "minor": _minor(matrix, r1, r2, c1, c2),
                        }
    return True, None


def presentation_for(gens: SemigroupGens) -> PresentationMatrix:
    """Skeleton + fill in one go for a convex generating set."""
    seq = ConvexSequence.from_points(gens.gens)
    return fill_skeleton(build_skeleton(seq), gens)


# -- two-segment specializations ------------------------------------------


@dataclass(frozen=True)
class TwoSegmentSpec:
    """Parameters of V_{(1,c),d} whose generators lie on at most two segments.

    Writing d = c*m + r with 0 < r < c, that happens exactly when r divides
    c - 1, with q = (c-1)/r.  The degenerate cases c = 1 (single segment)
    and r = 0 never arise for coprime c < d except c = 1, which is treated
    as trivially two-segment with r = 0.
    """

    c: int
    d: int
    m: int
    r: int
    q: int


def two_segment_classify(c: int, d: int):
    """(is_two_segment, TwoSegmentSpec-or-None) for coprime 0 < c < d."""
    from math import gcd

    if not (0 < c < d):
        raise ValueError(f"need 0 < c < d, got c={c}, d={d}")
    if gcd(c, d) != 1:
        raise ValueError(f"c={c} and d={d} are not coprime")
    if c == 1:
        # single segment: generators (d-i, i) all lie on one line
        return True, TwoSegmentSpec(c, d, d, 0, 0)
    m, r = divmod(d, c)
    if (c - 1) % r != 0:
        return False, None
    return True, TwoSegmentSpec(c, d, m, r, (c - 1) // r)


def two_segment_generators(spec: TwoSegmentSpec) -> SemigroupGens:
    """The generator list of Prop-style two-segment rings, in t_1..t_s order:
    t_{i+1} -> x^{(m-i)c+r} y^i for i = 0..m, then the second segment
    t_{m+r+1-j} -> x^j y^{d-(mq+1)j} for j = 0..r-1."""
    c, d, m, r, q = spec.c, spec.d, spec.m, spec.r, spec.q
    if c == 1:
        pts = [(d - i, i) for i in range(d + 1)]
        return SemigroupGens(pts, weights=(1, 1), veronese_degree=d)
    s = m + r + 1
    pts = [None] * s
    for i in range(m + 1):
        pts[i] = ((m - i) * c + r, i)
    slope = m * q + 1
    for j in range(r):
        pts[m + r - j] = (j, d - slope * j)
    return SemigroupGens(pts, weights=(1, c), veronese_degree=d)


def two_segment_matrix(spec: TwoSegmentSpec):
    """The explicit presentation matrix for a two-segment ring.

    Returns (matrix, gens).  For m = r = 1 the displayed 3-row shape
    degenerates and the correct 2x2 matrix [[t1, t2], [t2^{q+1}, t3]] is
    emitted instead; for a single segment (c = 1) the generic 2x(s-1)
    catalecticant comes back.
    """
    c, d, m, r, q = spec.c, spec.d, spec.m, spec.r, spec.q
    gens = two_segment_generators(spec)
    s = len(gens.gens)

    def unit(i):
        return _unit(i, s)

    def mono(*pairs):
        e = [0] * s
        for i, k in pairs:
            e[i - 1] += k
        return tuple(e)

    if c == 1:
        entries = [
            [unit(i) for i in range(1, s)],
            [unit(i) for i in range(2, s + 1)],
        ]
        return PresentationMatrix(entries, s, (Block("segment", 0, 0, 2, s - 1, 1),)), gens
    if m == 1 and r == 1:
        entries = [
            [unit(1), unit(2)],
            [mono((2, q + 1)), unit(3)],
        ]
        return PresentationMatrix(entries, s), gens
    width = m + r - 1
    row1 = []
    for j in range(1, width + 1):
        if j <= m:
            row1.append(unit(j))
        elif j == m + 1:
            row1.append(mono((m + 1, q + 1)))
        else:
            # q-th power of the corner variable rides along the second segment
            row1.append(mono((m + 1, q), (j, 1)))
    row2 = [unit(j + 1) for j in range(1, width + 1)]
    row3 = []
    for j in range(1, width + 1):
        if j <= m - 1:
            row3.append(mono((j + 2, 1), (m + 1, q)))
        else:
            row3.append(unit(j + 2))
    return PresentationMatrix([row1, row2, row3], s), gens
