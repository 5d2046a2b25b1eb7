"""Property checkers for the Cayley-Dickson tower.

Each checker sweeps an exhaustive deterministic candidate set (basis
elements, plus two-term signed basis sums at level >= 4 where the
interesting failures live) and then a seeded batch of random exact
samples.  Verdicts are exact: a "fails" report always carries a
counterexample that violates the defining identity with no tolerance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .algebra import CDNumber, build_table, cd_to_json

MAX_CHECK_LEVEL = 6

#: Verdicts the tower is known to produce, by property name and level.
EXPECTED_HOLDS: dict[str, Callable[[int], bool]] = {
    "commutative": lambda level: level <= 1,
    "associative": lambda level: level <= 2,
    "alternative": lambda level: level <= 3,
    "flexible": lambda level: True,
    "norm_multiplicative": lambda level: level <= 3,
    "two_generated_associative": lambda level: level <= 3,
    "division": lambda level: level <= 3,
}


def expected_verdict(name: str, level: int) -> str:
    return "holds" if EXPECTED_HOLDS[name](level) else "fails"


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one property check at one level."""

    name: str
    level: int
    verdict: str  # "holds" | "fails"
    counterexample: Optional[tuple[CDNumber, ...]]
    samples: int  # candidate tuples examined, exhaustive sweeps included

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"

    def matches_expectation(self) -> bool:
        return self.verdict == expected_verdict(self.name, self.level)

    def to_json(self) -> dict:
        return {
            "property": self.name,
            "level": self.level,
            "verdict": self.verdict,
            "samples": self.samples,
            "counterexample": None
            if self.counterexample is None
            else [cd_to_json(x) for x in self.counterexample],
        }


def random_exact(level: int, rng: random.Random, span: int = 9) -> CDNumber:
    """Random element with integer coordinates in [-span, span]."""
    return CDNumber(level, tuple(rng.randint(-span, span) for _ in range(1 << level)))


def associator(x: CDNumber, y: CDNumber, z: CDNumber) -> CDNumber:
    """(xy)z - x(yz), exactly; zero iff the triple associates."""
    return (x * y) * z - x * (y * z)


def two_term_elements(level: int) -> list[CDNumber]:
    """All e_i + s*e_j with i < j and s = +/-1; the small-support pattern space."""
    dim = 1 << level
    out = []
    for i, j in itertools.combinations(range(dim), 2):
        for s in (1, -1):
            coords = [0] * dim
            coords[i] = 1
            coords[j] = s
            out.append(CDNumber(level, tuple(coords)))
    return out


def _check_level(level: int, samples: int, cap: int = MAX_CHECK_LEVEL) -> None:
    if not 0 <= level <= cap:
        raise ValueError(f"level must be in [0, {cap}], got {level}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")


def _basis(level: int, index: int) -> CDNumber:
    return CDNumber.basis(level, index)


def _run_pair_check(
    name: str,
    level: int,
    samples: int,
    seed: int,
    violates: Callable[[CDNumber, CDNumber], bool],
    basis_violation: Callable[[int], Optional[tuple[int, int]]],
    sweep_two_terms: bool,
) -> PropertyReport:
    tested = 0

    dim = 1 << level
    hit = basis_violation(level)
    tested += dim * dim
    if hit is not None:
        pair = (_basis(level, hit[0]), _basis(level, hit[1]))
        return PropertyReport(name, level, "fails", pair, tested)

    if sweep_two_terms and level >= 4:
        candidates = two_term_elements(level)
        for x in candidates:
            for y in candidates:
                tested += 1
                if violates(x, y):
                    return PropertyReport(name, level, "fails", (x, y), tested)

    rng = random.Random(seed)
    for _ in range(samples):
        x = random_exact(level, rng)
        y = random_exact(level, rng)
        tested += 1
        if violates(x, y):
            return PropertyReport(name, level, "fails", (x, y), tested)

    return PropertyReport(name, level, "holds", None, tested)


# -- basis sweeps through the signed table (integer arithmetic only) -----


def _basis_commutative_violation(level):
    t = build_table(level)
    for i in range(t.dim):
        for j in range(t.dim):
            if t.entry(i, j) != t.entry(j, i):
                return i, j
    return None


def _basis_alternative_violation(level):
    t = build_table(level)
    for i in range(t.dim):
        for j in range(t.dim):
            sjj, kjj = t.entry(j, j)
            s1, m = t.entry(i, j)
            s2, r = t.entry(m, j)
            # x(yy) = (xy)y: e_j^2 is sjj*e_0, so lhs = sjj*e_i
            if not (kjj == 0 and r == i and s1 * s2 == sjj):
                return i, j
            sii, kii = t.entry(i, i)
            s3, m3 = t.entry(i, j)
            s4, r4 = t.entry(i, m3)
            # (xx)y = x(xy)
            if not (kii == 0 and r4 == j and s3 * s4 == sii):
                return i, j
    return None


def _basis_flexible_violation(level):
    t = build_table(level)
    for i in range(t.dim):
        for j in range(t.dim):
            s1, m = t.entry(j, i)
            s2, r = t.entry(i, m)  # x(yx)
            s3, m3 = t.entry(i, j)
            s4, r3 = t.entry(m3, i)  # (xy)x
            if r != r3 or s1 * s2 != s3 * s4:
                return i, j
    return None


def _basis_norm_violation(level):
    # basis products are signed basis elements, so norms multiply as long
    # as each entry really is one; the sweep just re-reads the table
    t = build_table(level)
    for i in range(t.dim):
        for j in range(t.dim):
            s, _ = t.entry(i, j)
            if s not in (1, -1):
                return i, j
    return None


def _basis_associative_violation(level):
    t = build_table(level)
    dim = t.dim
    for i in range(dim):
        for j in range(dim):
            s1, m = t.entry(i, j)
            for k in range(dim):
                s2, r = t.entry(m, k)  # (ij)k
                s3, m3 = t.entry(j, k)
                s4, r3 = t.entry(i, m3)  # i(jk)
                if r != r3 or s1 * s2 != s3 * s4:
                    return i, j, k
    return None


# -- the public checkers --------------------------------------------------


def check_commutative(level: int, samples: int, seed: int = 0) -> PropertyReport:
    """xy = yx; survives only up to the complex numbers."""
    _check_level(level, samples)
    return _run_pair_check(
        "commutative",
        level,
        samples,
        seed,
        lambda x, y: x * y != y * x,
        _basis_commutative_violation,
        sweep_two_terms=False,
    )


def check_associative(level: int, samples: int, seed: int = 0) -> PropertyReport:
    """(xy)z = x(yz); survives up to the quaternions."""
    _check_level(level, samples)
    tested = 0
    hit = _basis_associative_violation(level)
    dim = 1 << level
    tested += dim ** 3
    if hit is not None:
        triple = tuple(_basis(level, i) for i in hit)
        return PropertyReport("associative", level, "fails", triple, tested)
    rng = random.Random(seed)
    for _ in range(samples):
        x, y, z = (random_exact(level, rng) for _ in range(3))
        tested += 1
        if not associator(x, y, z).is_zero():
            return PropertyReport("associative", level, "fails", (x, y, z), tested)
    return PropertyReport("associative", level, "holds", None, tested)


def check_alternative(level: int, samples: int, seed: int = 0) -> PropertyReport:
    """x(yy) = (xy)y and (xx)y = x(xy); survives up to the octonions.

    Basis pairs alone pass even at level 4, so from level 4 up the check
    also sweeps two-term signed basis sums, where the failures are.
    """
    _check_level(level, samples)

    def violates(x: CDNumber, y: CDNumber) -> bool:
        return x * (y * y) != (x * y) * y or (x * x) * y != x * (x * y)

    return _run_pair_check(
        "alternative",
        level,
        samples,
        seed,
        violates,
        _basis_alternative_violation,
        sweep_two_terms=True,
    )


def check_flexible(level: int, samples: int, seed: int = 0) -> PropertyReport:
    """x(yx) = (xy)x; holds at every level of the tower."""
    _check_level(level, samples)
    return _run_pair_check(
        "flexible",
        level,
        samples,
        seed,
        lambda x, y: x * (y * x) != (x * y) * x,
        _basis_flexible_violation,
        sweep_two_terms=False,
    )


def check_norm_multiplicative(level: int, samples: int, seed: int = 0) -> PropertyReport:
    """|xy|^2 = |x|^2 |y|^2 exactly; fails from the sedenions on."""
    _check_level(level, samples)

    def violates(x: CDNumber, y: CDNumber) -> bool:
        return (x * y).norm_sq() != x.norm_sq() * y.norm_sq()

    return _run_pair_check(
        "norm_multiplicative",
        level,
        samples,
        seed,
        violates,
        _basis_norm_violation,
        sweep_two_terms=True,
    )


def find_zero_divisors(level: int) -> list[tuple[CDNumber, CDNumber]]:
    """Nonzero pairs (u, v) with uv = 0, over all two-term signed basis sums.

    Exhaustive and sound over that pattern: every returned product is
    exactly zero, and every pattern pair with zero product is returned.
    Levels <= 3 are division algebras and return the empty list.
    """
    if level < 0:
        raise ValueError(f"level must be non-negative, got {level}")
    if level <= 3:
        return []
    if level > MAX_CHECK_LEVEL:
        raise ValueError(f"level must be <= {MAX_CHECK_LEVEL}, got {level}")
    candidates = two_term_elements(level)
    found = []
    for u in candidates:
        for v in candidates:
            if (u * v).is_zero():
                found.append((u, v))
    return found


def _word_closure(x: CDNumber, y: CDNumber, max_len: int) -> list[CDNumber]:
    """Distinct products of words in {x, y, x*, y*} up to ``max_len`` letters,
    under every parenthesization."""
    by_len: list[list[CDNumber]] = [[], [x, y, x.conj(), y.conj()]]
    for n in range(2, max_len + 1):
        layer = []
        for split in range(1, n):
            for a in by_len[split]:
                for b in by_len[n - split]:
                    layer.append(a * b)
        by_len.append(layer)
    seen: set[CDNumber] = set()
    out = []
    for layer in by_len[1:]:
        for w in layer:
            if w not in seen:
                seen.add(w)
                out.append(w)
    return out


def _greedy_span_basis(elements: Iterable[CDNumber]) -> list[CDNumber]:
    """Subset of the input spanning the same linear space, by exact elimination."""
    rows: list[tuple[int, list[Fraction]]] = []
    basis = []
    for el in elements:
        v = [Fraction(c) for c in el.coords]
        for pidx, prow in rows:
            if v[pidx] != 0:
                f = v[pidx] / prow[pidx]
                v = [a - f * b for a, b in zip(v, prow)]
        pivot = next((k for k, a in enumerate(v) if a != 0), None)
        if pivot is not None:
            rows.append((pivot, v))
            basis.append(el)
    return basis


def _subalgebra_associator_violation(
    x: CDNumber, y: CDNumber, max_len: int
) -> Optional[tuple[CDNumber, CDNumber, CDNumber]]:
    words = _word_closure(x, y, max_len)
    # the associator is trilinear, so it vanishes on all word triples iff
    # it vanishes on triples from a spanning subset of the words
    basis = _greedy_span_basis(words)
    for a in basis:
        for b in basis:
            ab = a * b
            for c in basis:
                if ab * c != a * (b * c):
                    return (a, b, c)
    return None


def check_two_generated_associativity(
    level: int, samples: int, seed: int = 0, word_length: int = 4
) -> PropertyReport:
    """Do x and y always generate an associative subalgebra?

    Words in {x, y, x*, y*} up to ``word_length`` letters are formed under
    all parenthesizations and all associators among them must vanish
    exactly.  True through the octonions, false for sedenions.
    """
    _check_level(level, samples, cap=4)
    if word_length < 2:
        raise ValueError("word_length must be at least 2")
    tested = 0

    def examine(x, y):
        hit = _subalgebra_associator_violation(x, y, word_length)
        if hit is not None:
            return PropertyReport(
                "two_generated_associative", level, "fails", hit, tested
            )
        return None

    if level >= 4:
        # deterministic prefix of the two-term pattern, so a failure
        # reproduces without any seed; the first violations sit early
        candidates = two_term_elements(level)
        pairs = itertools.islice(
            ((u, v) for u in candidates for v in candidates), 512
        )
        for u, v in pairs:
            tested += 1
            report = examine(u, v)
            if report is not None:
                return report

    rng = random.Random(seed)
    for _ in range(samples):
        x = random_exact(level, rng)
        y = random_exact(level, rng)
        tested += 1
        report = examine(x, y)
        if report is not None:
            return report
    return PropertyReport("two_generated_associative", level, "holds", None, tested)
