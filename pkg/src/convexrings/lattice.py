"""Exact lattice-point arithmetic: convex sequences, corner points, 2D cone normalization.

Points are plain tuples of nonnegative ints.  A convex sequence is a list of
2D points, monotone in the first coordinate, satisfying the componentwise
inequality 2*c[i] <= c[i-1] + c[i+1] at every interior index.  The canonical
storage order puts the first coordinates in nonincreasing order (largest
power of x first); input in the reversed order is accepted and flipped.

Everything here is integer arithmetic; collinearity is decided with exact
cross products, never floats.
"""

from dataclasses import dataclass
from math import gcd


def _check_points_2d(points):
    if not points:
        raise ValueError("empty point sequence")
    for p in points:
        if len(p) != 2:
            raise ValueError(f"expected 2-dimensional lattice points, got {tuple(p)}")
        if p[0] < 0 or p[1] < 0:
            raise ValueError(f"negative coordinate in lattice point {tuple(p)}")


def _is_monotone_first(points):
    """'up', 'down', or None according to the first coordinates."""
    xs = [p[0] for p in points]
    if all(xs[i] <= xs[i + 1] for i in range(len(xs) - 1)):
        return "up"
    if all(xs[i] >= xs[i + 1] for i in range(len(xs) - 1)):
        return "down"
    return None


def is_convex_sequence(points) -> bool:
    """True iff 2*c[i] <= c[i-1] + c[i+1] componentwise at every interior index.

    The points must already be sorted so the first coordinates are monotone
    (either direction); sequences of length 1 or 2 are vacuously convex.
    """
    points = [tuple(p) for p in points]
    _check_points_2d(points)
    if _is_monotone_first(points) is None:
        raise ValueError("points are not sorted monotonically in the first coordinate")
    for i in range(1, len(points) - 1):
        a, m, b = points[i - 1], points[i], points[i + 1]
        if 2 * m[0] > a[0] + b[0] or 2 * m[1] > a[1] + b[1]:
            return False
    return True


@dataclass(frozen=True)
class ConvexSequence:
    """A validated convex sequence in canonical order (first coordinates nonincreasing)."""

    points: tuple

    @classmethod
    def from_points(cls, points) -> "ConvexSequence":
        points = [tuple(int(x) for x in p) for p in points]
        _check_points_2d(points)
        direction = _is_monotone_first(points)
        if direction is None:
            raise ValueError("points are not sorted monotonically in the first coordinate")
        if direction == "up" and points[0][0] != points[-1][0]:
            points = points[::-1]
        if len(set(points)) != len(points):
            raise ValueError("convex sequence contains a repeated point")
        if not is_convex_sequence(points):
            raise ValueError("points do not form a convex sequence")
        return cls(tuple(points))

    def __len__(self):
        return len(self.points)

    @property
    def s(self) -> int:
        return len(self.points)


def corner_points(seq: ConvexSequence) -> list:
    """1-based indices of the corner points: both endpoints, plus every interior
    index where the convexity inequality is strict in at least one coordinate."""
    pts = seq.points
    s = len(pts)
    if s == 1:
        return [1]
    corners = [1]
    for i in range(1, s - 1):
        a, m, b = pts[i - 1], pts[i], pts[i + 1]
        if 2 * m[0] < a[0] + b[0] or 2 * m[1] < a[1] + b[1]:
            corners.append(i + 1)
    corners.append(s)
    return corners


def check_convex_property(seq: ConvexSequence, i: int, j: int, k: int):
    """Evaluate c[i] + c[j] <= c[i-k] + c[j+k] (1-based indices, componentwise).

    Returns (holds, strict_expected) where strict_expected is True iff some
    corner point of the sequence lies strictly between i-k and j+k; in that
    case the inequality is expected to be strict in at least one coordinate.
    """
    pts = seq.points
    s = len(pts)
    if not (1 <= i <= j <= s) or k < 0 or i - k < 1 or j + k > s:
        raise IndexError(f"indices (i={i}, j={j}, k={k}) out of range for s={s}")
    left = pts[i - 1 - k]
    right = pts[j - 1 + k]
    a, b = pts[i - 1], pts[j - 1]
    holds = a[0] + b[0] <= left[0] + right[0] and a[1] + b[1] <= left[1] + right[1]
    strict_expected = any(i - k < c < j + k for c in corner_points(seq))
    return holds, strict_expected


def _xgcd(a: int, b: int):
    """(g, x, y) with x*a + y*b == g == gcd(a, b), g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def normalize_cone(u, v):
    """Normal form (c, d) of the cone spanned by primitive vectors u, v.

    A unimodular map sends u to (1, 0) and v to (c, d) with 0 <= c < d and
    gcd(c, d) = 1; the lattice semigroup of the cone is then isomorphic to
    the weighted Veronese semigroup of V_{(1,c),d}.  The result depends only
    on the GL_2(Z)-orbit of the ordered pair (u, v).
    """
    u = (int(u[0]), int(u[1]))
    v = (int(v[0]), int(v[1]))
    for w in (u, v):
        if w == (0, 0) or gcd(w[0], w[1]) != 1:
            raise ValueError(f"cone generator {w} is not a primitive vector")
    d = cross(u, v)
    if d == 0:
        raise ValueError("cone generators are parallel; the cone is degenerate")
    g, p, q = _xgcd(u[0], u[1])
    # rows (p, q) and (-u1, u0) form a determinant-1 matrix sending u to (1, 0)
    c = p * v[0] + q * v[1]
    if d < 0:
        d = -d
    return c % d, d
