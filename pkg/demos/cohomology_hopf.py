"""Cell cohomology of the projective planes and the Hopf-invariant proxies.

Run:  python demos/cohomology_hopf.py
"""

from octoplane import (
    INTEGERS,
    RATIONALS,
    CoefficientSpec,
    builtin_cw,
    cohomology,
    cohomology_profile,
    linking_hopf_invariant,
    multiplication_bidegree,
    ring_consistency_op3,
    smith_normal_form,
)

# The engine is integer Smith normal form.
s, u, v = smith_normal_form([[2, 4], [6, 8]])
print("smith form of [[2,4],[6,8]]:", [s[0], s[1]])
print()

# Each projective plane has one cell in dimensions 0, d, 2d; all
# boundary maps vanish, so the cohomology is free on those degrees.
for name in ("RP2", "CP2", "HP2", "OP2"):
    cw = builtin_cw(name)
    profile = cohomology_profile(cw, INTEGERS)
    nonzero = {k: str(g) for k, g in enumerate(profile) if not g.is_trivial}
    print(f"H^*({name}; Z) = {nonzero}")
print()

# Coefficients behave as the universal-coefficient bookkeeping predicts.
rp2 = builtin_cw("RP2")
for coeffs in (INTEGERS, CoefficientSpec.parse("Zmod:2"), RATIONALS):
    row = [str(cohomology(rp2, k, coeffs)) for k in range(3)]
    print(f"H^*(RP2; {coeffs}) =", row)
print()

# Hopf-invariant evidence, desk scale.  Both methods are proxies for the
# cup-product definition, which is not computed from cell data here.
#
# 1. Bidegree: multiplication by a unit is an isometry, so the left and
#    right multiplication operators have determinants of constant sign.
for level, name in ((1, "complexes"), (2, "quaternions"), (3, "octonions")):
    print(f"bidegree proxy, {name}:", multiplication_bidegree(level, 500))

# 2. Linking: two fibers of the complex classifying map form a Hopf link;
#    the Gauss integral of the projected circles is +-1.
print("linking proxy (complex case):", linking_hopf_invariant(samples=10, segments=256))
print()

# Why the story stops at the plane:
print(ring_consistency_op3())
