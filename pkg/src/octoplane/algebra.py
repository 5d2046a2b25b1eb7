"""Arithmetic for the Cayley-Dickson tower of algebras over the reals.

Level n of the tower is a 2^n-dimensional real algebra: level 0 is R,
level 1 is C, level 2 the quaternions, level 3 the octonions, level 4
the sedenions, and so on.  Each level doubles the previous one via

    (a, b) * (c, d) = (a*c - conj(d)*b,  d*a + b*conj(c))
    conj((a, b))    = (conj(a), -b)
    |(a, b)|^2      = |a|^2 + |b|^2

Coordinates may be exact (int / Fraction, no rounding anywhere) or
double-precision floats.  All values are immutable and every operation
is a pure function, so everything here is safe to share across threads.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Scalar = Union[int, Fraction, float]

#: ``build_table`` refuses levels above this; tables grow as 4^level.
TABLE_LEVEL_CAP = 6


class LevelMismatchError(ValueError):
    """Raised when a binary operation mixes numbers of different levels."""


class TableSizeError(ValueError):
    """Raised when a requested multiplication table would be too large."""


class ZeroDivisorWarning(UserWarning):
    """conj(x)/|x|^2 stops being a reliable inverse once zero divisors exist."""


def _is_exact(value: Scalar) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


@lru_cache(maxsize=None)
def _flat_table(level: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Signed basis products at ``level``, flattened row-major.

    Returns (signs, indices) with e_i * e_j = signs[i*dim+j] * e_{indices[i*dim+j]}.
    Built by doubling the table one level at a time; this is the doubling
    product evaluated on basis elements, where conj(e_j) = e_j for j = 0
    and -e_j otherwise.
    """
    if level == 0:
        return (1,), (0,)
    prev_signs, prev_idx = _flat_table(level - 1)
    half = 1 << (level - 1)
    dim = 1 << level
    signs = [0] * (dim * dim)
    idxs = [0] * (dim * dim)
    for i in range(dim):
        row = i * dim
        for j in range(dim):
            if i < half and j < half:
                # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
                s, k = prev_signs[i * half + j], prev_idx[i * half + j]
            elif i < half:
                # (e_i, 0)(0, e_j') = (0, e_j' e_i)
                jj = j - half
                s, k = prev_signs[jj * half + i], prev_idx[jj * half + i] + half
            elif j < half:
                # (0, e_i')(e_j, 0) = (0, e_i' conj(e_j))
                ii = i - half
                c = 1 if j == 0 else -1
                s, k = c * prev_signs[ii * half + j], prev_idx[ii * half + j] + half
            else:
                # (0, e_i')(0, e_j') = (-conj(e_j') e_i', 0)
                ii, jj = i - half, j - half
                c = 1 if jj == 0 else -1
                s, k = -c * prev_signs[jj * half + ii], prev_idx[jj * half + ii]
            signs[row + j] = s
            idxs[row + j] = k
    return tuple(signs), tuple(idxs)


@lru_cache(maxsize=None)
def _struct_rows(level: int) -> tuple[tuple[tuple[int, int, int], ...], ...]:
    """Per-row (j, index, sign) triples; the multiply kernel's layout."""
    signs, idxs = _flat_table(level)
    dim = 1 << level
    return tuple(
        tuple((j, idxs[i * dim + j], signs[i * dim + j]) for j in range(dim))
        for i in range(dim)
    )


def _mul_coords(level: int, xc: tuple, yc: tuple) -> tuple:
    """Bilinear product of coordinate tuples through the basis table."""
    if level == 0:
        return (xc[0] * yc[0],)
    rows = _struct_rows(level)
    out = [0] * (1 << level)
    for i, v in enumerate(xc):
        if v == 0:
            continue
        for j, k, s in rows[i]:
            w = yc[j]
            if w != 0:
                if s == 1:
                    out[k] += v * w
                else:
                    out[k] -= v * w
    return tuple(out)


class CDNumber:
    """An element of the level-n Cayley-Dickson algebra.

    ``coords[i]`` is the coefficient of basis element e_i; the tuple has
    length 2^level.  Basis indexing follows the doubling order: the
    level-(n+1) pair (a, b) stores a's coordinates in the first half and
    b's in the second, so embeddings between levels preserve indices.
    """

    __slots__ = ("level", "coords")

    def __init__(self, level: int, coords: Iterable[Scalar]):
        coords = tuple(coords)
        if level < 0:
            raise ValueError(f"level must be non-negative, got {level}")
        if len(coords) != 1 << level:
            raise ValueError(
                f"level {level} needs {1 << level} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("CDNumber is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, level: int) -> "CDNumber":
        return cls(level, (0,) * (1 << level))

    @classmethod
    def one(cls, level: int) -> "CDNumber":
        return cls.basis(level, 0)

    @classmethod
    def basis(cls, level: int, index: int) -> "CDNumber":
        dim = 1 << level
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for level {level}")
        return cls(level, tuple(1 if i == index else 0 for i in range(dim)))

    @classmethod
    def from_scalar(cls, value: Scalar, level: int) -> "CDNumber":
        return cls(level, (value,) + (0,) * ((1 << level) - 1))

    # -- ring operations ----------------------------------------------

    def _require_same_level(self, other: "CDNumber") -> None:
        if self.level != other.level:
            raise LevelMismatchError(
                f"level mismatch: {self.level} vs {other.level}"
            )

    def __add__(self, other):
        if not isinstance(other, CDNumber):
            return NotImplemented
        self._require_same_level(other)
        return CDNumber(self.level, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, CDNumber):
            return NotImplemented
        self._require_same_level(other)
        return CDNumber(self.level, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CDNumber(self.level, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, CDNumber):
            self._require_same_level(other)
            return CDNumber(self.level, _mul_coords(self.level, self.coords, other.coords))
        if isinstance(other, (int, float, Fraction)):
            return CDNumber(self.level, tuple(a * other for a in self.coords))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return CDNumber(self.level, tuple(other * a for a in self.coords))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, Fraction)):
            if _is_exact(other) and self.is_exact():
                inv = Fraction(1, 1) / other
                return CDNumber(self.level, tuple(a * inv for a in self.coords))
            return CDNumber(self.level, tuple(a / other for a in self.coords))
        return NotImplemented

    # -- conjugation, norm, inverse ------------------------------------

    def conj(self) -> "CDNumber":
        """Conjugate: identity on e_0, sign flip on every other basis axis.

        Equals the recursive rule (a, b)* = (a*, -b) unrolled.
        """
        c = self.coords
        return CDNumber(self.level, (c[0],) + tuple(-a for a in c[1:]))

    def norm_sq(self) -> Scalar:
        """Squared norm, the sum of squared coordinates (kept exact when possible)."""
        total = 0
        for a in self.coords:
            total += a * a
        return total

    def inverse(self) -> "CDNumber":
        """conj(x) / |x|^2, the two-sided inverse at levels <= 3.

        At level >= 4 the same formula is returned but a ZeroDivisorWarning
        is emitted: with zero divisors around, multiplying by it does not
        undo multiplication by x.
        """
        ns = self.norm_sq()
        if ns == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.level >= 4:
            warnings.warn(
                f"inverse at level {self.level}: algebra has zero divisors",
                ZeroDivisorWarning,
                stacklevel=2,
            )
        conj = self.conj()
        if _is_exact(ns) and self.is_exact():
            return CDNumber(self.level, tuple(Fraction(a) / ns for a in conj.coords))
        return CDNumber(self.level, tuple(a / ns for a in conj.coords))

    # -- structure helpers ---------------------------------------------

    def embed(self, target_level: int) -> "CDNumber":
        """Zero-pad into a higher level; an index-preserving algebra map."""
        if target_level < self.level:
            raise ValueError(
                f"cannot embed level {self.level} into lower level {target_level}"
            )
        pad = (1 << target_level) - (1 << self.level)
        return CDNumber(target_level, self.coords + (0,) * pad)

    @property
    def real(self) -> Scalar:
        return self.coords[0]

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_exact(self) -> bool:
        return all(_is_exact(a) for a in self.coords)

    def max_abs(self) -> float:
        return max(abs(a) for a in self.coords)

    def isclose(self, other: "CDNumber", tol: float = 1e-9) -> bool:
        """Tolerance comparison; the only sanctioned way to compare floats."""
        self._require_same_level(other)
        return all(abs(a - b) <= tol for a, b in zip(self.coords, other.coords))

    # -- dunder plumbing -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, CDNumber):
            return NotImplemented
        return self.level == other.level and all(
            a == b for a, b in zip(self.coords, other.coords)
        )

    def __hash__(self):
        return hash((self.level, self.coords))

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            terms.append(str(a) if i == 0 else f"{a}*e{i}")
        body = " + ".join(terms) if terms else "0"
        return f"CDNumber(level={self.level}: {body})"


# -- module-level operations ------------------------------------------


def basis_element(level: int, index: int) -> CDNumber:
    """The basis vector e_index at the given level."""
    return CDNumber.basis(level, index)


def embed(x: CDNumber, target_level: int) -> CDNumber:
    return x.embed(target_level)


def inner_product(x: CDNumber, y: CDNumber) -> Scalar:
    """The bilinear form (conj(x)y + conj(y)x) / 2, returned as a scalar.

    conj(y)x is the conjugate of conj(x)y, so the sum is real and the value
    is just the e_0 coordinate of conj(x)y.  It coincides with the Euclidean
    dot product of the coordinate vectors.
    """
    x._require_same_level(y)
    return (x.conj() * y).coords[0]


class MultiplicationTable:
    """Signed basis-product table for one level of the tower.

    entry(i, j) = (sign, index) with e_i * e_j = sign * e_index.  Products
    of basis elements are always a single signed basis element, so the
    table describes multiplication completely.
    """

    __slots__ = ("level", "_signs", "_idxs")

    def __init__(self, level: int, signs: tuple[int, ...], idxs: tuple[int, ...]):
        self.level = level
        self._signs = signs
        self._idxs = idxs

    @property
    def dim(self) -> int:
        return 1 << self.level

    def entry(self, i: int, j: int) -> tuple[int, int]:
        dim = self.dim
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"indices ({i}, {j}) out of range for level {self.level}")
        p = i * dim + j
        return self._signs[p], self._idxs[p]

    def rows(self) -> list[list[tuple[int, int]]]:
        dim = self.dim
        return [
            [(self._signs[i * dim + j], self._idxs[i * dim + j]) for j in range(dim)]
            for i in range(dim)
        ]

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "basis": [f"e{i}" for i in range(self.dim)],
            "table": [
                [{"sign": s, "index": k} for s, k in row] for row in self.rows()
            ],
        }

    def __repr__(self):
        return f"MultiplicationTable(level={self.level}, dim={self.dim})"


def build_table(level: int) -> MultiplicationTable:
    """Close the doubling product over basis elements at ``level``.

    Guarded at level 6: the table has 4^level entries and nothing at desk
    scale needs more.
    """
    if level < 0:
        raise ValueError(f"level must be non-negative, got {level}")
    if level > TABLE_LEVEL_CAP:
        raise TableSizeError(
            f"level {level} table would have {4 ** level} entries; cap is {TABLE_LEVEL_CAP}"
        )
    signs, idxs = _flat_table(level)
    return MultiplicationTable(level, signs, idxs)


# -- JSON scalar/number helpers ----------------------------------------


def scalar_to_json(value: Scalar):
    """Exact scalars become 'num/den' decimal strings; floats stay numbers."""
    if _is_exact(value):
        return str(Fraction(value))
    return float(value)


def scalar_from_json(value) -> Scalar:
    if isinstance(value, str):
        return Fraction(value)
    return float(value)


def cd_to_json(x: CDNumber) -> dict:
    return {"level": x.level, "coords": [scalar_to_json(a) for a in x.coords]}


def cd_from_json(data: dict) -> CDNumber:
    return CDNumber(int(data["level"]), tuple(scalar_from_json(v) for v in data["coords"]))
