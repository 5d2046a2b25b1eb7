"""A walk up the Cayley-Dickson tower: R, C, H, O, and the sedenions.

Run:  python demos/tower_basics.py
"""

from fractions import Fraction

from octoplane import CDNumber, basis_element, build_table, embed, inner_product

# Level n is the 2^n-dimensional algebra.  Basis element 0 is the unit.
names = {0: "reals", 1: "complexes", 2: "quaternions", 3: "octonions", 4: "sedenions"}
for level, name in names.items():
    print(f"level {level}: {name}, dimension {1 << level}")
print()

# The quaternion table, closed from the doubling product on basis elements.
table = build_table(2)
print("quaternion multiplication table (rows: left factor):")
for i in range(4):
    row = ["%+d*e%d" % table.entry(i, j) for j in range(4)]
    print(f"  e{i}:", "  ".join(row))
print()

# i*j = k but j*i = -k: commutativity is already gone at level 2.
i, j = basis_element(2, 1), basis_element(2, 2)
print("i*j =", i * j)
print("j*i =", j * i)
print()

# At level 3, associativity goes: the same three factors bracketed two
# ways give opposite answers.
e1, e2, e4 = (basis_element(3, k) for k in (1, 2, 4))
print("(e1*e2)*e4 =", (e1 * e2) * e4)
print("e1*(e2*e4) =", e1 * (e2 * e4))
print()

# Exact arithmetic: rational coordinates stay rational, and the
# conjugation identity x * conj(x) = |x|^2 holds with no rounding.
x = CDNumber(3, (Fraction(1, 2), 2, Fraction(-3, 4), 1, 0, 5, Fraction(2, 3), -1))
print("x           =", x)
print("x * conj(x) =", x * x.conj())
print("|x|^2       =", x.norm_sq())
print("x * x^-1    =", x * x.inverse())
print()

# The levels nest: complex i embeds to the octonion e1, and embedding
# commutes with multiplication.
ci = basis_element(1, 1)
print("complex i embedded into O:", embed(ci, 3))
q1 = CDNumber(2, (1, 2, 0, -1))
q2 = CDNumber(2, (0, 1, 1, 3))
assert embed(q1 * q2, 3) == embed(q1, 3) * embed(q2, 3)
print("embedding is multiplicative on quaternions: checked")
print()

# The coordinate dot product agrees with (conj(x)y + conj(y)x)/2.
y = basis_element(3, 2)
print("inner_product(x, e2) =", inner_product(x, y), "= coordinate of e2 in x")
