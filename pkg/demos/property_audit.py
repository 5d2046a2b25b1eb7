"""Which algebraic identities survive at which level of the tower.

Run:  python demos/property_audit.py
"""

from octoplane import (
    check_alternative,
    check_associative,
    check_commutative,
    check_flexible,
    check_norm_multiplicative,
    check_two_generated_associativity,
    expected_verdict,
    find_zero_divisors,
)

CHECKERS = [
    ("commutative", check_commutative),
    ("associative", check_associative),
    ("alternative", check_alternative),
    ("flexible", check_flexible),
    ("norm_multiplicative", check_norm_multiplicative),
]

print("verdict matrix (exact arithmetic, 200 random samples per cell):")
header = "level".ljust(22) + "".join(str(l).center(8) for l in range(5))
print(header)
for name, checker in CHECKERS:
    cells = []
    for level in range(5):
        report = checker(level, 200, seed=1)
        mark = "yes" if report.holds else "NO"
        assert report.verdict == expected_verdict(name, level)
        cells.append(mark.center(8))
    print(name.ljust(22) + "".join(cells))
print()

# Every "NO" above comes with a concrete counterexample that violates the
# identity with zero tolerance.  The first failure of alternativity:
report = check_alternative(4, 10)
x, y = report.counterexample
print("alternativity witness at level 4:")
print("  x        =", x)
print("  y        =", y)
print("  x*(y*y)  =", x * (y * y))
print("  (x*y)*y  =", (x * y) * y)
print()

# Sedenions have zero divisors; the scan below is exhaustive over pairs
# of two-term signed basis sums and every hit is exactly zero.
pairs = find_zero_divisors(4)
print(f"sedenion zero divisors of shape (e_i +- e_j, e_k +- e_l): {len(pairs)} pairs")
u, v = pairs[0]
print(f"  e.g. ({u}) * ({v}) =", u * v)
print()

# Two elements of the octonions always generate an associative
# subalgebra; two sedenions may not.
for level in (3, 4):
    report = check_two_generated_associativity(level, 20, seed=2)
    print(f"two-generated subalgebras associative at level {level}: {report.verdict}")
