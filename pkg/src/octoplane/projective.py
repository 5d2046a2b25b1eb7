"""The projective plane over a normed algebra with conjugation.

Points are unit-norm triples (x, y, z) whose entries generate an
associative subalgebra, taken up to the equivalence that identifies
(x, y, z) with (xt, yt, zt) for unit t in that subalgebra.  Equivalence
is detected through the six invariant products

    x x*,  x y*,  x z*,  y y*,  y z*,  z z*

which determine the class completely.  Affine charts anchored at one of
the three coordinates identify pieces of the plane with pairs of algebra
elements, and the one-dimensional analogue (pairs instead of triples) is
identified with the sphere S^d.

Everything here runs in floating point over algebra dimension
d in {1, 2, 4, 8} with explicit tolerances; d = 8 (octonions) is the
default.  All values are immutable, all functions pure.
"""

from __future__ import annotations

import math
import random
from typing import Optional, Sequence

import numpy as np

from .algebra import CDNumber, LevelMismatchError

DEFAULT_TOL = 1e-9
#: Algebra dimensions the plane construction supports.
SUPPORTED_DIMS = (1, 2, 4, 8)
#: A functional coordinate below this cannot anchor a chart.
ANCHOR_FLOOR = 1e-12


class MembershipError(ValueError):
    """Raised when a triple or pair fails the defining constraints."""


class OutsideChartError(ValueError):
    """Raised when a chart is evaluated at a class outside its domain."""


class SeparationError(RuntimeError):
    """Raised when no functional separating two points could be found."""


def level_for_dim(dim: int) -> int:
    if dim not in SUPPORTED_DIMS:
        raise ValueError(f"dimension must be one of {SUPPORTED_DIMS}, got {dim}")
    return dim.bit_length() - 1


def _as_float(x: CDNumber) -> CDNumber:
    return CDNumber(x.level, tuple(float(c) for c in x.coords))


def _check_level(x: CDNumber) -> None:
    if x.level > 3:
        raise MembershipError(
            f"projective construction needs level <= 3, got {x.level}"
        )


def _associator_span(entries: Sequence[CDNumber], tol: float) -> None:
    """Require the associators of all orderings of the entries to vanish.

    This is the finite proxy for 'the subalgebra generated by the entries
    is associative': necessary always, and exact for triples produced by
    the charts.  Conjugates need no extra checks since w* differs from -w
    by a real and associators with real arguments vanish.
    """
    n = len(entries)
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k == i or k == j:
                    continue
                x, y, z = entries[i], entries[j], entries[k]
                err = ((x * y) * z - x * (y * z)).max_abs()
                if err > tol:
                    raise MembershipError(
                        f"entries do not associate: associator magnitude {err:.3e}"
                    )


class TriplePoint:
    """A representative (x, y, z) of a projective-plane point.

    Entries share a level <= 3, their squared norms sum to 1 within
    ``tol``, and all orderings of their associator vanish within ``tol``.
    """

    __slots__ = ("x", "y", "z")

    def __init__(self, x: CDNumber, y: CDNumber, z: CDNumber, tol: float = DEFAULT_TOL):
        if not (x.level == y.level == z.level):
            raise LevelMismatchError("triple entries must share a level")
        _check_level(x)
        total = x.norm_sq() + y.norm_sq() + z.norm_sq()
        if abs(total - 1.0) > tol:
            raise MembershipError(f"norms sum to {total!r}, expected 1")
        _associator_span((x, y, z), tol)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def __setattr__(self, name, value):
        raise AttributeError("TriplePoint is immutable")

    @property
    def level(self) -> int:
        return self.x.level

    def entries(self) -> tuple[CDNumber, CDNumber, CDNumber]:
        return (self.x, self.y, self.z)

    def __repr__(self):
        return f"TriplePoint({self.x!r}, {self.y!r}, {self.z!r})"


class LinePoint:
    """A representative (x, y) of a projective-line point; norms sum to 1."""

    __slots__ = ("x", "y")

    def __init__(self, x: CDNumber, y: CDNumber, tol: float = DEFAULT_TOL):
        if x.level != y.level:
            raise LevelMismatchError("pair entries must share a level")
        _check_level(x)
        total = x.norm_sq() + y.norm_sq()
        if abs(total - 1.0) > tol:
            raise MembershipError(f"norms sum to {total!r}, expected 1")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("LinePoint is immutable")

    @property
    def level(self) -> int:
        return self.x.level

    def __repr__(self):
        return f"LinePoint({self.x!r}, {self.y!r})"


class InvariantSextuple:
    """The six products that pin down a projective-plane class."""

    __slots__ = ("xx", "xy", "xz", "yy", "yz", "zz")

    def __init__(self, xx, xy, xz, yy, yz, zz, tol: float = DEFAULT_TOL):
        for name, diag in (("xx", xx), ("yy", yy), ("zz", zz)):
            imag = max(abs(c) for c in diag.coords[1:]) if diag.level > 0 else 0.0
            if imag > tol:
                raise MembershipError(f"{name}* must be real, imaginary size {imag:.3e}")
        trace = xx.coords[0] + yy.coords[0] + zz.coords[0]
        if abs(trace - 1.0) > tol:
            raise MembershipError(f"diagonal trace is {trace!r}, expected 1")
        for name, value in zip(self.__slots__, (xx, xy, xz, yy, yz, zz)):
            object.__setattr__(self, name, value)

    def __setattr__(self, name, value):
        raise AttributeError("InvariantSextuple is immutable")

    def as_tuple(self) -> tuple[CDNumber, ...]:
        return (self.xx, self.xy, self.xz, self.yy, self.yz, self.zz)

    def max_difference(self, other: "InvariantSextuple") -> float:
        return max(
            (a - b).max_abs() for a, b in zip(self.as_tuple(), other.as_tuple())
        )


class Functional:
    """A real triple (a, b, c) defining the map (x, y, z) -> ax + by + cz."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a: float, b: float, c: float):
        if a == 0 and b == 0 and c == 0:
            raise ValueError("functional coefficients must not all vanish")
        object.__setattr__(self, "a", float(a))
        object.__setattr__(self, "b", float(b))
        object.__setattr__(self, "c", float(c))

    def __setattr__(self, name, value):
        raise AttributeError("Functional is immutable")

    def coefficients(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def anchor(self) -> int:
        """Index of the chart-anchoring coordinate (largest coefficient)."""
        coeffs = self.coefficients()
        m = max(range(3), key=lambda i: abs(coeffs[i]))
        if abs(coeffs[m]) < ANCHOR_FLOOR:
            raise OutsideChartError(
                f"coefficients {coeffs} too small to anchor a chart"
            )
        return m

    def __repr__(self):
        return f"Functional({self.a}, {self.b}, {self.c})"


def invariants_of(p: TriplePoint) -> InvariantSextuple:
    """The six equivalence invariants of a representative."""
    x, y, z = p.entries()
    xc, yc, zc = x.conj(), y.conj(), z.conj()
    return InvariantSextuple(x * xc, x * yc, x * zc, y * yc, y * zc, z * zc)


def equivalent(p: TriplePoint, q: TriplePoint, tol: float = DEFAULT_TOL) -> bool:
    """Do two representatives name the same projective point?"""
    if p.level != q.level:
        raise LevelMismatchError("points must share a level")
    return invariants_of(p).max_difference(invariants_of(q)) <= tol


def line_invariants(p: LinePoint) -> tuple[CDNumber, CDNumber, CDNumber]:
    x, y = p.x, p.y
    return (x * x.conj(), x * y.conj(), y * y.conj())


def line_equivalent(p: LinePoint, q: LinePoint, tol: float = DEFAULT_TOL) -> bool:
    if p.level != q.level:
        raise LevelMismatchError("points must share a level")
    return all(
        (a - b).max_abs() <= tol
        for a, b in zip(line_invariants(p), line_invariants(q))
    )


def eval_functional(f: Functional, p: TriplePoint) -> CDNumber:
    """ax + by + cz; the class lies in the chart domain iff this is nonzero."""
    return p.x * f.a + p.y * f.b + p.z * f.c


def in_chart_domain(f: Functional, p: TriplePoint, tol: float = DEFAULT_TOL) -> bool:
    return math.sqrt(eval_functional(f, p).norm_sq()) > tol


def chart_forward(
    f: Functional, p: TriplePoint, tol: float = DEFAULT_TOL
) -> tuple[CDNumber, CDNumber]:
    """Chart map: the two non-anchor entries times conj(l)/|l|^2.

    Well-defined on classes because every factor is built from the six
    invariants; that is verified by tests, not assumed here.
    """
    m = f.anchor()
    ell = eval_functional(f, p)
    ns = ell.norm_sq()
    if math.sqrt(ns) <= tol:
        raise OutsideChartError("class lies outside this chart's domain")
    factor = ell.conj() / ns
    others = [e for i, e in enumerate(p.entries()) if i != m]
    return (others[0] * factor, others[1] * factor)


def chart_backward(f: Functional, u: CDNumber, v: CDNumber) -> TriplePoint:
    """Inverse chart: (u, v) into the anchor-m slot pattern, normalized.

    With anchor coefficient c_m and the remaining coefficients f_i, the
    anchor entry is (1 - sum f_i w_i) / c_m and the triple is scaled to
    unit norm.  The scale is positive even at u = v = 0, where the anchor
    entry is 1/c_m.
    """
    if u.level != v.level:
        raise LevelMismatchError("chart arguments must share a level")
    _check_level(u)
    m = f.anchor()
    coeffs = f.coefficients()
    u = _as_float(u)
    v = _as_float(v)
    slots: list[Optional[CDNumber]] = [None, None, None]
    others = [i for i in range(3) if i != m]
    slots[others[0]] = u
    slots[others[1]] = v
    s = CDNumber.one(u.level) - u * coeffs[others[0]] - v * coeffs[others[1]]
    t = s / coeffs[m]
    slots[m] = t
    r = math.sqrt(u.norm_sq() + v.norm_sq() + t.norm_sq())
    x, y, z = (w / r for w in slots)
    return TriplePoint(x, y, z)


_GRID = [
    (a, b, c)
    for a in (0.0, 1.0, -1.0)
    for b in (0.0, 1.0, -1.0)
    for c in (0.0, 1.0, -1.0)
    if (a, b, c) != (0.0, 0.0, 0.0)
]


def separating_functional(
    p: TriplePoint,
    q: TriplePoint,
    threshold: float = 1e-6,
    rng: Optional[random.Random] = None,
    max_attempts: int = 200,
) -> Functional:
    """A functional that vanishes on neither point.

    The vanishing sets are two planes in coefficient space, so a fixed
    sign grid almost always works; random unit triples are the fallback.
    """

    def score(f: Functional) -> float:
        return min(
            math.sqrt(eval_functional(f, p).norm_sq()),
            math.sqrt(eval_functional(f, q).norm_sq()),
        )

    best: Optional[Functional] = None
    best_score = 0.0
    for a, b, c in _GRID:
        f = Functional(a, b, c)
        s = score(f)
        if s > best_score:
            best, best_score = f, s
    if best is not None and best_score > threshold:
        return best

    rng = rng if rng is not None else random.Random(0)
    for _ in range(max_attempts):
        raw = [rng.gauss(0.0, 1.0) for _ in range(3)]
        norm = math.sqrt(sum(v * v for v in raw))
        if norm < 1e-12:
            continue
        f = Functional(*(v / norm for v in raw))
        if score(f) > threshold:
            return f
    raise SeparationError("no separating functional found; inputs degenerate?")


# -- the projective line, its sphere model, and the cell maps ------------


def line_include(p: LinePoint) -> TriplePoint:
    """[x, y] -> [x, y, 0]; embeds the line in the plane."""
    zero = CDNumber.zero(p.level)
    return TriplePoint(p.x, p.y, zero)


def attaching_map(x: CDNumber, y: CDNumber, tol: float = DEFAULT_TOL) -> LinePoint:
    """The sphere S^(2d-1) onto the projective line, (x, y) -> [x, y]."""
    return LinePoint(x, y, tol=tol)


def disk_extension(x: CDNumber, y: CDNumber, tol: float = DEFAULT_TOL) -> TriplePoint:
    """(x, y) in the unit disk to [x, y, sqrt(1 - |x|^2 - |y|^2)].

    Extends ``attaching_map`` over the disk.  The square root is not
    Lipschitz at the boundary, so the tol-wide band at |x|^2 + |y|^2 = 1
    is collapsed to the boundary itself; there the third entry is exactly
    zero and the image coincides with the included line point.
    """
    if x.level != y.level:
        raise LevelMismatchError("disk coordinates must share a level")
    slack = 1.0 - x.norm_sq() - y.norm_sq()
    if slack < -tol:
        raise MembershipError(f"norms exceed 1 by {-slack:.3e}")
    z = CDNumber.from_scalar(math.sqrt(slack) if slack > tol else 0.0, x.level)
    return TriplePoint(_as_float(x), _as_float(y), z, tol=tol)


def line_to_sphere(p: LinePoint) -> np.ndarray:
    """[x, y] -> (2 x y*, |x|^2 - |y|^2) in R^(d+1); lands on the unit sphere.

    Every component is one of the class invariants, so the map is constant
    on equivalence classes by construction.
    """
    w = (p.x * p.y.conj()) * 2.0
    t = p.x.norm_sq() - p.y.norm_sq()
    return np.array([float(c) for c in w.coords] + [float(t)])


def sphere_to_line(s: np.ndarray, tol: float = DEFAULT_TOL) -> LinePoint:
    """Inverse of ``line_to_sphere`` up to equivalence.

    Splits s = (w, t); whichever of 1 -/+ t is larger gives a stable real
    representative for y or x, and the other entry is read off from
    2 x y* = w.
    """
    s = np.asarray(s, dtype=float)
    dim = s.shape[0] - 1
    level = level_for_dim(dim)
    norm = float(np.linalg.norm(s))
    if abs(norm - 1.0) > tol:
        raise MembershipError(f"sphere point has norm {norm!r}")
    w, t = s[:-1], float(s[-1])
    if t <= 0.0:
        ry = math.sqrt((1.0 - t) / 2.0)
        y = CDNumber.from_scalar(ry, level)
        x = CDNumber(level, tuple(float(c) / (2.0 * ry) for c in w))
    else:
        rx = math.sqrt((1.0 + t) / 2.0)
        x = CDNumber.from_scalar(rx, level)
        y = CDNumber(level, tuple(float(c) / (2.0 * rx) for c in w)).conj()
    return LinePoint(x, y, tol=max(tol, 1e-7))


# -- seeded sampling helpers ----------------------------------------------


def random_unit(level: int, rng: random.Random) -> CDNumber:
    """Unit-norm element with Gaussian direction."""
    while True:
        coords = [rng.gauss(0.0, 1.0) for _ in range(1 << level)]
        norm = math.sqrt(sum(c * c for c in coords))
        if norm > 1e-6:
            return CDNumber(level, tuple(c / norm for c in coords))


def random_line_point(dim: int, rng: random.Random) -> LinePoint:
    level = level_for_dim(dim)
    while True:
        xs = [rng.gauss(0.0, 1.0) for _ in range(1 << level)]
        ys = [rng.gauss(0.0, 1.0) for _ in range(1 << level)]
        norm = math.sqrt(sum(c * c for c in xs) + sum(c * c for c in ys))
        if norm > 1e-6:
            x = CDNumber(level, tuple(c / norm for c in xs))
            y = CDNumber(level, tuple(c / norm for c in ys))
            return LinePoint(x, y)


def random_triple_point(dim: int, rng: random.Random) -> TriplePoint:
    """Random member of the constrained triple set, via a random chart."""
    level = level_for_dim(dim)
    anchor = rng.randrange(3)
    coeffs = [0.0, 0.0, 0.0]
    coeffs[anchor] = rng.choice((1.0, -1.0)) * rng.uniform(0.5, 2.0)
    scale = rng.uniform(0.2, 2.0)
    u = CDNumber(level, tuple(rng.gauss(0.0, scale) for _ in range(1 << level)))
    v = CDNumber(level, tuple(rng.gauss(0.0, scale) for _ in range(1 << level)))
    return chart_backward(Functional(*coeffs), u, v)


def random_unit_in_subalgebra(
    entries: Sequence[CDNumber], rng: random.Random
) -> CDNumber:
    """Unit element of the subalgebra generated by the given entries."""
    level = entries[0].level
    span = [CDNumber.one(level)]
    span.extend(entries)
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            span.append(entries[i] * entries[j])
    while True:
        u = CDNumber.zero(level)
        for w in span:
            u = u + w * rng.gauss(0.0, 1.0)
        norm = math.sqrt(u.norm_sq())
        if norm > 1e-6:
            return u / norm


def equivalent_representative(p: TriplePoint, rng: random.Random) -> TriplePoint:
    """A different representative (xu, yu, zu) of the same class."""
    u = random_unit_in_subalgebra(p.entries(), rng)
    return TriplePoint(p.x * u, p.y * u, p.z * u)


def equivalent_line_representative(p: LinePoint, rng: random.Random) -> LinePoint:
    u = random_unit_in_subalgebra((p.x, p.y), rng)
    return LinePoint(p.x * u, p.y * u)
