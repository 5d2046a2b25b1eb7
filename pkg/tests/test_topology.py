import random

import numpy as np
import pytest

from octoplane.algebra import CDNumber
from octoplane.projective import random_unit, sphere_to_line
from octoplane.topology import (
    INTEGERS,
    RATIONALS,
    AbelianGroup,
    CoefficientSpec,
    CWDescription,
    InconsistencyError,
    builtin_cw,
    cohomology,
    cohomology_profile,
    fiber_circle,
    gauss_linking_number,
    homology,
    invariant_factors,
    left_mult_matrix,
    linking_hopf_invariant,
    multiplication_bidegree,
    right_mult_matrix,
    ring_consistency_op3,
    smith_normal_form,
)

from oracles import exact_det, int_mat_mul, invariant_factors_by_minors

Z2 = CoefficientSpec.parse("Zmod:2")
Z3 = CoefficientSpec.parse("Zmod:3")


def snf_is_valid(matrix):
    s, u, v = smith_normal_form(matrix)
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    assert int_mat_mul(int_mat_mul(u, [list(r) for r in matrix]), v) == s
    assert abs(exact_det(u)) == 1
    assert abs(exact_det(v)) == 1
    diag = [s[i][i] for i in range(min(m, n))]
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if b:
            assert a != 0 and b % a == 0
    assert all(s[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    return diag


# -- smith normal form ---------------------------------------------------------


def test_snf_zero_matrix():
    diag = snf_is_valid([[0, 0], [0, 0], [0, 0]])
    assert diag == [0, 0]


def test_snf_single_entry():
    assert snf_is_valid([[2]]) == [2]
    assert snf_is_valid([[-7]]) == [7]


def test_snf_frozen_example():
    assert snf_is_valid([[2, 4], [6, 8]]) == [2, 4]


def test_snf_random_properties():
    rng = random.Random(0)
    for _ in range(300):
        m = rng.randint(1, 8)
        n = rng.randint(1, 8)
        matrix = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        snf_is_valid(matrix)


def test_snf_against_minor_gcd_oracle():
    rng = random.Random(1)
    for _ in range(150):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        matrix = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        diag = [d for d in snf_is_valid(matrix) if d]
        assert diag == invariant_factors_by_minors(matrix)


def test_invariant_factors():
    assert invariant_factors([[2, 4], [6, 8]]) == (2, 4)
    assert invariant_factors([[0]]) == ()


def test_snf_rejects_non_integers():
    with pytest.raises(ValueError):
        smith_normal_form([[1.5]])


# -- abelian groups --------------------------------------------------------------


def test_group_normalization():
    assert AbelianGroup.from_parts(0, [2, 3]) == AbelianGroup(0, (6,))
    assert AbelianGroup.from_parts(0, [2, 2]) == AbelianGroup(0, (2, 2))
    assert AbelianGroup.from_parts(0, [4, 6]) == AbelianGroup(0, (2, 12))
    assert AbelianGroup.from_parts(1, [1, 1]) == AbelianGroup(1)


def test_group_validation():
    with pytest.raises(ValueError):
        AbelianGroup(-1)
    with pytest.raises(ValueError):
        AbelianGroup(0, (3, 4))  # 3 does not divide 4
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))


def test_group_str_and_json():
    assert str(AbelianGroup(0)) == "0"
    assert str(AbelianGroup(1)) == "Z"
    assert str(AbelianGroup(2, (2, 6))) == "Z^2 + Z/2 + Z/6"
    assert AbelianGroup(1, (2,)).to_json() == {"rank": 1, "torsion": [2]}


def test_coefficient_spec():
    assert CoefficientSpec.parse("Z") == INTEGERS
    assert CoefficientSpec.parse("Q") == RATIONALS
    assert CoefficientSpec.parse("Zmod:6").modulus == 6
    with pytest.raises(ValueError):
        CoefficientSpec.parse("Zmod:1")
    with pytest.raises(ValueError):
        CoefficientSpec.parse("F2")


# -- CW descriptions ----------------------------------------------------------------


def test_cw_validates_boundary_shapes():
    with pytest.raises(ValueError):
        CWDescription([("v", 0), ("f", 2)], {2: [[2], [3]]})


def test_cw_validates_dd_zero():
    # two 1-cells a,b and one 2-cell with boundary a+b, d1 nonzero composite
    with pytest.raises(ValueError):
        CWDescription(
            [("v", 0), ("w", 0), ("a", 1), ("f", 2)],
            {1: [[1], [-1]], 2: [[1]]},
        )


def test_cw_torus_is_accepted():
    torus = CWDescription(
        [("v", 0), ("a", 1), ("b", 1), ("f", 2)],
        {1: [[0, 0]], 2: [[0], [0]]},
    )
    assert str(homology(torus, 1)) == "Z^2"


def test_builtin_names():
    assert builtin_cw("OP2").cell_count(16) == 1
    assert builtin_cw("OP1/S8").max_dim == 8
    assert builtin_cw("hypothetical-OP3").cell_count(24) == 1
    with pytest.raises(KeyError):
        builtin_cw("OP4")


# -- homology and cohomology -----------------------------------------------------------


def test_homology_op2():
    op2 = builtin_cw("OP2")
    for k in range(-1, 18):
        expected = AbelianGroup(1) if k in (0, 8, 16) else AbelianGroup(0)
        assert homology(op2, k) == expected


def test_homology_rp2():
    rp2 = builtin_cw("RP2")
    assert [str(homology(rp2, k)) for k in range(3)] == ["Z", "Z/2", "0"]


def test_homology_sphere():
    s8 = builtin_cw("OP1/S8")
    assert [str(homology(s8, k)) for k in (0, 8, 4)] == ["Z", "Z", "0"]


def test_cohomology_op2_all_coefficient_families():
    op2 = builtin_cw("OP2")
    cases = {
        INTEGERS: AbelianGroup(1),
        Z2: AbelianGroup(0, (2,)),
        Z3: AbelianGroup(0, (3,)),
        RATIONALS: AbelianGroup(1),
    }
    for coeffs, unit in cases.items():
        for k in range(17):
            expected = unit if k in (0, 8, 16) else AbelianGroup(0)
            assert cohomology(op2, k, coeffs) == expected, (coeffs, k)


def test_cohomology_rp2():
    rp2 = builtin_cw("RP2")
    assert [str(cohomology(rp2, k)) for k in range(3)] == ["Z", "0", "Z/2"]
    assert [str(cohomology(rp2, k, Z2)) for k in range(3)] == ["Z/2", "Z/2", "Z/2"]
    assert [str(cohomology(rp2, k, Z3)) for k in range(3)] == ["Z/3", "0", "0"]
    assert [cohomology(rp2, k, RATIONALS).rank for k in range(3)] == [1, 0, 0]


def test_cohomology_cp2_hp2():
    cp2 = builtin_cw("CP2")
    assert [str(cohomology(cp2, k)) for k in range(5)] == ["Z", "0", "Z", "0", "Z"]
    hp2 = builtin_cw("HP2")
    assert [cohomology(hp2, k).rank for k in (0, 4, 8)] == [1, 1, 1]
    assert all(cohomology(hp2, k).is_trivial for k in (1, 2, 3, 5, 6, 7))


def test_cohomology_moore_space():
    # one 0-cell, one 1-cell, one 2-cell attached with degree 6
    moore = CWDescription([("v", 0), ("a", 1), ("f", 2)], {1: [[0]], 2: [[6]]})
    assert str(homology(moore, 1)) == "Z/6"
    assert str(cohomology(moore, 2)) == "Z/6"
    assert str(cohomology(moore, 1, Z2)) == "Z/2"
    assert str(cohomology(moore, 2, Z3)) == "Z/3"
    assert cohomology(moore, 2, RATIONALS).is_trivial


def test_cohomology_agrees_with_universal_coefficients_from_homology():
    # independent route: H^k(X; Z) = Z^rank(H_k) + torsion(H_(k-1))
    spaces = [builtin_cw(n) for n in ("RP2", "CP2", "OP2", "OP1/S8")]
    spaces.append(
        CWDescription([("v", 0), ("a", 1), ("f", 2)], {1: [[0]], 2: [[6]]})
    )
    for cw in spaces:
        for k in range(cw.max_dim + 1):
            hk = homology(cw, k)
            hk1 = homology(cw, k - 1) if k > 0 else AbelianGroup(0)
            expected = AbelianGroup.from_parts(hk.rank, hk1.torsion)
            assert cohomology(cw, k, INTEGERS) == expected, (cw, k)


def test_cohomology_profile_shape():
    profile = cohomology_profile(builtin_cw("OP2"))
    assert len(profile) == 17
    assert profile[8] == AbelianGroup(1)


# -- hopf proxies ------------------------------------------------------------------------


def test_left_mult_identity():
    assert np.allclose(left_mult_matrix(CDNumber.one(3)), np.eye(8))
    assert np.allclose(right_mult_matrix(CDNumber.one(2)), np.eye(4))


def test_mult_operators_are_isometries():
    rng = random.Random(2)
    for level in (1, 2, 3):
        b = random_unit(level, rng)
        for mat in (left_mult_matrix(b), right_mult_matrix(b)):
            gram = mat.T @ mat
            assert np.allclose(gram, np.eye(1 << level), atol=1e-12)


def test_bidegree_all_levels():
    for level in (1, 2, 3):
        assert multiplication_bidegree(level, 300, seed=level) == (1, 1)


def test_bidegree_rejects_bad_arguments():
    with pytest.raises(ValueError):
        multiplication_bidegree(4, 10)
    with pytest.raises(ValueError):
        multiplication_bidegree(2, 0)


def test_gauss_linking_reference_configurations():
    th = np.linspace(0.0, 2.0 * np.pi, 256, endpoint=False)
    circle_xy = np.stack([np.cos(th), np.sin(th), 0.0 * th], axis=1)
    far_circle = circle_xy + np.array([5.0, 0.0, 0.0])
    assert abs(gauss_linking_number(circle_xy, far_circle)) < 1e-3
    threaded = np.stack([1.0 + np.cos(th), 0.0 * th, np.sin(th)], axis=1)
    linked = gauss_linking_number(circle_xy, threaded)
    assert abs(abs(linked) - 1.0) < 1e-2


def test_fiber_circle_lies_on_three_sphere():
    rng = np.random.default_rng(3)
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    circle = fiber_circle(sphere_to_line(v), 64)
    assert np.allclose(np.linalg.norm(circle, axis=1), 1.0, atol=1e-12)


def test_linking_hopf_invariant_stable():
    values = {
        segments: linking_hopf_invariant(samples=10, segments=segments, seed=4)
        for segments in (128, 256, 512)
    }
    assert len(set(values.values())) == 1
    assert abs(values[128]) == 1


def test_linking_magnitude_matches_bidegree_product():
    left, right = multiplication_bidegree(1, 100)
    linked = linking_hopf_invariant(samples=3, segments=128, seed=8)
    assert abs(linked) == abs(left * right)


def test_linking_hopf_invariant_seed_stable():
    assert linking_hopf_invariant(5, 128, seed=0) == linking_hopf_invariant(
        5, 128, seed=99
    )


def test_linking_rejects_small_segment_count():
    with pytest.raises(ValueError):
        linking_hopf_invariant(2, 32)


def test_ring_consistency_report():
    report = ring_consistency_op3()
    for needle in ("H^0 = Z", "H^8 = Z", "H^16 = Z", "H^24 = Z", "Steenrod", "degree 2 or 4"):
        assert needle in report
