"""Cellular (co)homology and desk-scale Hopf-invariant evidence.

The homology engine is exact: integer Smith normal form with unimodular
transforms, applied to the boundary matrices of a CW description.  The
Hopf invariant of the cell-attaching sphere maps is not computed from
cup products here; instead two proxies are provided and labelled as
such: the bidegree of the multiplication (signs of determinants of the
left/right multiplication operators), and, for the complex case, the
Gauss linking number of two fiber circles of the classifying map.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

import numpy as np

from .algebra import CDNumber
from .projective import LinePoint, level_for_dim, random_unit, sphere_to_line

Matrix = list[list[int]]


class InconsistencyError(RuntimeError):
    """A computation produced results that contradict each other."""


class GeometryError(RuntimeError):
    """The linking-number geometry could not be set up robustly."""


# -- integer matrices ------------------------------------------------------


def _to_int_matrix(matrix) -> Matrix:
    rows = []
    for row in matrix:
        out = []
        for v in row:
            iv = int(v)
            if iv != v:
                raise ValueError(f"matrix entry {v!r} is not an integer")
            out.append(iv)
        rows.append(out)
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ValueError("ragged matrix")
    return rows


def _eye(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def _transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact integer matrix product."""
    if not a or not b:
        return _zeros(len(a), len(b[0]) if b else 0)
    n_inner = len(b)
    out = _zeros(len(a), len(b[0]))
    for i, row in enumerate(a):
        if len(row) != n_inner:
            raise ValueError("shape mismatch")
        orow = out[i]
        for k, v in enumerate(row):
            if v == 0:
                continue
            brow = b[k]
            for j, w in enumerate(brow):
                orow[j] += v * w
    return out


class SNFResult(NamedTuple):
    s: Matrix
    u: Matrix
    v: Matrix


def smith_normal_form(matrix) -> SNFResult:
    """Diagonalize an integer matrix: S = U A V with U, V unimodular.

    The diagonal of S is non-negative and each entry divides the next.
    Pivots are chosen with minimal nonzero absolute value, which keeps
    intermediate entries small on desk-scale inputs.
    """
    a = _to_int_matrix(matrix)
    m = len(a)
    n = len(a[0]) if m else 0
    u = _eye(m)
    v = _eye(n)

    def row_sub(mat, i, j, q):  # row i -= q * row j
        ri, rj = mat[i], mat[j]
        for k in range(len(ri)):
            ri[k] -= q * rj[k]

    def col_sub(mat, i, j, q):  # col i -= q * col j
        for row in mat:
            row[i] -= q * row[j]

    def row_swap(mat, i, j):
        mat[i], mat[j] = mat[j], mat[i]

    def col_swap(mat, i, j):
        for row in mat:
            row[i], row[j] = row[j], row[i]

    def row_neg(mat, i):
        mat[i] = [-x for x in mat[i]]

    def balanced_quotient(x: int, p: int) -> int:
        # remainder after subtracting q*p lies in (-p/2, p/2]
        q, r = divmod(x, p)
        if 2 * r > p:
            q += 1
        return q

    t = 0
    while t < min(m, n):
        while True:
            # re-select the global minimum every pass; together with the
            # balanced remainders this keeps intermediate entries small
            pivot = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < best):
                        best = abs(x)
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                row_swap(a, pi, t)
                row_swap(u, pi, t)
            if pj != t:
                col_swap(a, pj, t)
                col_swap(v, pj, t)
            if a[t][t] < 0:
                row_neg(a, t)
                row_neg(u, t)

            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = balanced_quotient(a[i][t], p)
                    if q:
                        row_sub(a, i, t, q)
                        row_sub(u, i, t, q)
                    if a[i][t] != 0:
                        dirty = True  # remainder < p; next pass repivots
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = balanced_quotient(a[t][j], p)
                    if q:
                        col_sub(a, j, t, q)
                        col_sub(v, j, t, q)
                    if a[t][j] != 0:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block; if not, folding the
            # offending row into row t produces a smaller remainder above
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_sub(a, t, offender, -1)  # row t += offending row
            row_sub(u, t, offender, -1)
        if a[t][t] == 0:
            break
        t += 1
    return SNFResult(a, u, v)


def invariant_factors(matrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith form."""
    s = smith_normal_form(matrix).s
    return tuple(s[i][i] for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i])


def _rank(matrix) -> int:
    return len(invariant_factors(matrix))


# -- finitely generated abelian groups -------------------------------------


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _chain_from_orders(orders: Iterable[int]) -> tuple[int, ...]:
    by_prime: dict[int, list[int]] = {}
    for d in orders:
        d = int(d)
        if d < 0:
            d = -d
        if d <= 1:
            continue
        for p, e in _factorize(d).items():
            by_prime.setdefault(p, []).append(e)
    if not by_prime:
        return ()
    length = max(len(v) for v in by_prime.values())
    chain = [1] * length
    for p, exps in by_prime.items():
        exps.sort()
        offset = length - len(exps)
        for i, e in enumerate(exps):
            chain[offset + i] *= p ** e
    return tuple(chain)


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in normal form.

    ``torsion`` is a divisibility chain: each coefficient is at least 2
    and divides the next.  For rational coefficients ``rank`` counts the
    vector-space dimension and the torsion list is empty.
    """

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        prev = None
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion coefficient {t} must be >= 2")
            if prev is not None and t % prev != 0:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
            prev = t

    @classmethod
    def from_parts(cls, rank: int, orders: Iterable[int] = ()) -> "AbelianGroup":
        return cls(rank, _chain_from_orders(orders))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


TRIVIAL_GROUP = AbelianGroup(0)


# -- coefficients -----------------------------------------------------------


@dataclass(frozen=True)
class CoefficientSpec:
    """One of: the integers, the integers mod m, or the rationals."""

    kind: str
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("Z", "Zmod", "Q"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "Zmod":
            if self.modulus is None or self.modulus < 2:
                raise ValueError("modular coefficients need a modulus >= 2")
        elif self.modulus is not None:
            raise ValueError(f"{self.kind} coefficients take no modulus")

    @classmethod
    def parse(cls, text: str) -> "CoefficientSpec":
        text = text.strip()
        if text == "Z":
            return INTEGERS
        if text == "Q":
            return RATIONALS
        if text.startswith("Zmod:"):
            return cls("Zmod", int(text.split(":", 1)[1]))
        raise ValueError(f"cannot parse coefficients {text!r}; use Z, Q or Zmod:m")

    def __str__(self):
        if self.kind == "Zmod":
            return f"Z/{self.modulus}"
        return self.kind


INTEGERS = CoefficientSpec("Z")
RATIONALS = CoefficientSpec("Q")


# -- CW descriptions ---------------------------------------------------------


class CWDescription:
    """Cells with dimensions plus integer boundary matrices.

    ``boundaries[d]`` maps d-chains to (d-1)-chains and has shape
    (#cells of dim d-1) x (#cells of dim d).  Omitted matrices are zero.
    The composite of consecutive boundaries must vanish.
    """

    def __init__(self, cells: Iterable[tuple[str, int]], boundaries: Mapping[int, object]):
        self.cells = tuple((str(cid), int(dim)) for cid, dim in cells)
        if any(dim < 0 for _, dim in self.cells):
            raise ValueError("cell dimensions must be non-negative")
        counts: dict[int, int] = {}
        for _, dim in self.cells:
            counts[dim] = counts.get(dim, 0) + 1
        self._counts = counts
        self.max_dim = max(counts) if counts else -1

        mats: dict[int, Matrix] = {}
        for d, mat in boundaries.items():
            mat = _to_int_matrix(mat)
            rows = len(mat)
            cols = len(mat[0]) if mat else 0
            if (rows, cols) != (self.cell_count(d - 1), self.cell_count(d)):
                raise ValueError(
                    f"boundary {d} has shape {(rows, cols)}, expected "
                    f"{(self.cell_count(d - 1), self.cell_count(d))}"
                )
            mats[int(d)] = mat
        self._boundaries = mats

        for d in range(1, self.max_dim + 1):
            lower = self.boundary(d)
            upper = self.boundary(d + 1)
            if lower and upper and any(
                any(x != 0 for x in row) for row in mat_mul(lower, upper)
            ):
                raise ValueError(f"boundary composite at dimension {d + 1} is nonzero")

    def cell_count(self, dim: int) -> int:
        return self._counts.get(dim, 0)

    def boundary(self, d: int) -> Matrix:
        if d in self._boundaries:
            return [row[:] for row in self._boundaries[d]]
        return _zeros(self.cell_count(d - 1), self.cell_count(d))

    def __repr__(self):
        dims = sorted(self._counts)
        body = ", ".join(f"{self._counts[d]}x{d}d" for d in dims)
        return f"CWDescription({body})"


_BUILTIN_BUILDERS = {
    "RP2": lambda: CWDescription(
        [("v", 0), ("a", 1), ("f", 2)], {1: [[0]], 2: [[2]]}
    ),
    "CP2": lambda: CWDescription([("v", 0), ("c2", 2), ("c4", 4)], {}),
    "HP2": lambda: CWDescription([("v", 0), ("c4", 4), ("c8", 8)], {}),
    "OP2": lambda: CWDescription([("v", 0), ("c8", 8), ("c16", 16)], {}),
    "OP1/S8": lambda: CWDescription([("v", 0), ("c8", 8)], {}),
    "hypothetical-OP3": lambda: CWDescription(
        [("v", 0), ("c8", 8), ("c16", 16), ("c24", 24)], {}
    ),
}


def builtin_cw(name: str) -> CWDescription:
    """Standard minimal cell structures by name."""
    try:
        return _BUILTIN_BUILDERS[name]()
    except KeyError:
        raise KeyError(
            f"unknown space {name!r}; available: {sorted(_BUILTIN_BUILDERS)}"
        ) from None


# -- (co)homology ------------------------------------------------------------


def homology(cw: CWDescription, k: int) -> AbelianGroup:
    """H_k with integer coefficients: ker boundary_k / im boundary_(k+1)."""
    n_k = cw.cell_count(k)
    if k < 0 or n_k == 0:
        return TRIVIAL_GROUP
    rank_in = _rank(cw.boundary(k)) if k >= 1 else 0
    upper = invariant_factors(cw.boundary(k + 1))
    free = n_k - rank_in - len(upper)
    return AbelianGroup.from_parts(free, (d for d in upper if d > 1))


def _integral_cohomology(cw: CWDescription, k: int) -> AbelianGroup:
    """H^k with integer coefficients, from the dualized (transposed) complex."""
    n_k = cw.cell_count(k)
    if k < 0 or n_k == 0:
        return TRIVIAL_GROUP
    delta_out = _transpose(cw.boundary(k + 1))  # C^k -> C^(k+1)
    delta_in = invariant_factors(_transpose(cw.boundary(k)))  # image in C^k
    free = n_k - _rank(delta_out) - len(delta_in)
    return AbelianGroup.from_parts(free, (d for d in delta_in if d > 1))


def cohomology(
    cw: CWDescription, k: int, coefficients: CoefficientSpec = INTEGERS
) -> AbelianGroup:
    """H^k of the cellular cochain complex with the given coefficients.

    Integral cohomology comes straight from Smith normal form of the
    transposed boundaries.  Rational coefficients keep only the free
    rank.  Mod-m coefficients use the universal-coefficient bookkeeping
    H^k(C; Z/m) = H^k(C; Z) (x) Z/m  (+)  Tor(H^(k+1)(C; Z), Z/m).
    """
    if coefficients.kind == "Z":
        return _integral_cohomology(cw, k)
    if coefficients.kind == "Q":
        return AbelianGroup(_integral_cohomology(cw, k).rank)
    m = coefficients.modulus
    here = _integral_cohomology(cw, k)
    above = _integral_cohomology(cw, k + 1)
    orders = [m] * here.rank
    orders.extend(gcd(t, m) for t in here.torsion)
    orders.extend(gcd(t, m) for t in above.torsion)
    return AbelianGroup.from_parts(0, (d for d in orders if d > 1))


def cohomology_profile(
    cw: CWDescription, coefficients: CoefficientSpec = INTEGERS
) -> list[AbelianGroup]:
    """Cohomology in every degree 0..max_dim."""
    return [cohomology(cw, k, coefficients) for k in range(cw.max_dim + 1)]


# -- Hopf-invariant proxies ---------------------------------------------------


def left_mult_matrix(b: CDNumber) -> np.ndarray:
    """Matrix of x -> b x in the coordinate basis."""
    dim = 1 << b.level
    cols = [(b * CDNumber.basis(b.level, j)).coords for j in range(dim)]
    return np.array(cols, dtype=float).T


def right_mult_matrix(a: CDNumber) -> np.ndarray:
    """Matrix of x -> x a in the coordinate basis."""
    dim = 1 << a.level
    cols = [(CDNumber.basis(a.level, j) * a).coords for j in range(dim)]
    return np.array(cols, dtype=float).T


def multiplication_bidegree(
    level: int, samples: int, seed: int = 0, det_tol: float = 1e-6
) -> tuple[int, int]:
    """Signs of det(left mult) and det(right mult) by unit elements.

    For a multiplication with multiplicative norm these operators are
    isometries of the unit sphere, so the determinants must be +-1 and of
    constant sign; the pair of signs is the bidegree of the product as a
    map of spheres.  This is the exact desk-scale proxy for the Hopf
    invariant of the attaching construction.
    """
    if level not in (1, 2, 3):
        raise ValueError(f"bidegree proxy supports levels 1..3, got {level}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    left_signs: set[int] = set()
    right_signs: set[int] = set()
    for _ in range(samples):
        for signs, mat in (
            (left_signs, left_mult_matrix(random_unit(level, rng))),
            (right_signs, right_mult_matrix(random_unit(level, rng))),
        ):
            det = float(np.linalg.det(mat))
            if abs(abs(det) - 1.0) > det_tol:
                raise InconsistencyError(
                    f"|det| = {abs(det)!r} off unit by more than {det_tol}"
                )
            signs.add(1 if det > 0 else -1)
    if len(left_signs) != 1 or len(right_signs) != 1:
        raise InconsistencyError(
            f"determinant signs not constant: {left_signs}, {right_signs}"
        )
    return (left_signs.pop(), right_signs.pop())


def gauss_linking_number(curve_a: np.ndarray, curve_b: np.ndarray) -> float:
    """Gauss double sum for two closed polygons in R^3 (midpoint rule)."""
    a = np.asarray(curve_a, dtype=float)
    b = np.asarray(curve_b, dtype=float)
    ra = (a + np.roll(a, -1, axis=0)) / 2.0
    da = np.roll(a, -1, axis=0) - a
    rb = (b + np.roll(b, -1, axis=0)) / 2.0
    db = np.roll(b, -1, axis=0) - b
    diff = ra[:, None, :] - rb[None, :, :]
    cross = np.cross(da[:, None, :], db[None, :, :])
    dist = np.linalg.norm(diff, axis=2)
    integrand = (diff * cross).sum(axis=2) / dist ** 3
    return float(integrand.sum() / (4.0 * math.pi))


def fiber_circle(point: LinePoint, segments: int) -> np.ndarray:
    """Points (x u, y u) in R^4 for unit complex u; the fiber over [x, y]."""
    if point.level != 1:
        raise ValueError("fiber circles are built at the complex level")
    out = np.empty((segments, 4))
    for k in range(segments):
        theta = 2.0 * math.pi * k / segments
        u = CDNumber(1, (math.cos(theta), math.sin(theta)))
        xu = point.x * u
        yu = point.y * u
        out[k] = (*xu.coords, *yu.coords)
    return out


def _projection_frame(pole: np.ndarray) -> np.ndarray:
    """Rotation in SO(4) sending ``pole`` to (0, 0, 0, 1)."""
    stacked = np.column_stack([pole, np.eye(4)])
    q, _ = np.linalg.qr(stacked)
    first = q[:, 0] if float(q[:, 0] @ pole) > 0 else -q[:, 0]
    frame = np.vstack([q[:, 1], q[:, 2], q[:, 3], first])
    if np.linalg.det(frame) < 0:
        frame[[0, 1]] = frame[[1, 0]]
    return frame


def _stereographic(points: np.ndarray, frame: np.ndarray) -> np.ndarray:
    rotated = points @ frame.T
    return rotated[:, :3] / (1.0 - rotated[:, 3:4])


def linking_hopf_invariant(
    samples: int = 10, segments: int = 256, seed: int = 0
) -> int:
    """Linking number of two fibers of the complex classifying map.

    Samples pairs of regular values on the 2-sphere, builds their fiber
    circles on the 3-sphere, projects stereographically from a pole away
    from both circles, and rounds the Gauss integral.  All sampled pairs
    must agree; the common integer (of magnitude 1) is returned.  This is
    the numerical oracle for the complex case, independent of the
    bidegree proxy.
    """
    if segments < 64:
        raise ValueError(f"segments must be >= 64, got {segments}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    values = []
    for _ in range(samples):
        for _attempt in range(64):
            v1 = rng.normal(size=3)
            v2 = rng.normal(size=3)
            n1, n2 = np.linalg.norm(v1), np.linalg.norm(v2)
            if n1 < 1e-6 or n2 < 1e-6:
                continue
            v1, v2 = v1 / n1, v2 / n2
            if math.acos(float(np.clip(v1 @ v2, -1.0, 1.0))) >= 0.1:
                break
        else:
            raise GeometryError("could not sample well-separated regular values")
        circles = [
            fiber_circle(sphere_to_line(v), segments) for v in (v1, v2)
        ]
        cloud = np.vstack(circles)
        candidates = [row for row in np.vstack([np.eye(4), -np.eye(4)])]
        candidates.extend(
            r / np.linalg.norm(r) for r in rng.normal(size=(8, 4))
        )
        pole = max(
            candidates,
            key=lambda c: float(np.min(np.linalg.norm(cloud - c, axis=1))),
        )
        if float(np.min(np.linalg.norm(cloud - pole, axis=1))) < 0.05:
            raise GeometryError("no usable stereographic pole found")
        frame = _projection_frame(np.asarray(pole, dtype=float))
        p1, p2 = (_stereographic(c, frame) for c in circles)
        lk = gauss_linking_number(p1, p2)
        rounded = int(round(lk))
        if abs(lk - rounded) > 0.2:
            raise GeometryError(f"linking integral {lk!r} too far from an integer")
        values.append(rounded)
    if len(set(values)) != 1:
        raise InconsistencyError(f"linking numbers disagree across samples: {values}")
    return values[0]


def ring_consistency_op3() -> str:
    """Additive cohomology of a would-be OP3 cell structure, plus the
    documented reason such a space cannot exist.  Report only; no Steenrod
    operations are computed."""
    cw = builtin_cw("hypothetical-OP3")
    lines = ["cohomology of the hypothetical OP3 cell structure (integer coefficients):"]
    for k in range(cw.max_dim + 1):
        group = cohomology(cw, k, INTEGERS)
        if not group.is_trivial:
            lines.append(f"  H^{k} = {group}")
    lines.append(
        "additive structure: Z in degrees 0, 8, 16, 24, zero elsewhere, "
        "consistent with a truncated polynomial ring Z[x]/(x^4) on a degree-8 class."
    )
    lines.append(
        "obstruction (cited result, not computed here): Steenrod powers mod 2 and 3 "
        "force the generator of a truncated polynomial cohomology ring Z[x]/(x^m), "
        "m > 3, to have degree 2 or 4, so no space realizes this ring with |x| = 8."
    )
    lines.append(
        "note: this report checks the additive cell computation only; Steenrod "
        "operations are out of scope for this tool."
    )
    return "\n".join(lines)
