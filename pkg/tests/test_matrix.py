from fractions import Fraction

import pytest

from maxplus import (
    DiagonalScaling,
    MaxPlusMatrix,
    identity,
    kleene_star,
    mat_equal,
    mat_mul,
    mat_oplus,
    mat_power,
    max_cycle_mean,
    parse_matrix,
    render_matrix,
    scale,
    strictly_dominated_by,
    transpose,
    zeros,
)
from conftest import normalized, random_cyclic_matrix, random_matrix

from oracles import walk_power

N = None  # shorthand for -inf entries in literals


def M(rows):
    return MaxPlusMatrix(rows)


def test_mat_mul_identity_and_absorbing(rng):
    a = random_matrix(rng, 4)
    assert mat_mul(identity(4), a) == a
    assert mat_mul(a, identity(4)) == a
    assert mat_mul(a, zeros(4)) == zeros(4)


def test_mat_mul_hand_expansion():
    a = M([[N, 0], [0, N]])
    assert mat_mul(a, a) == M([[0, N], [N, 0]])


def test_mat_mul_dimension_mismatch():
    with pytest.raises(ValueError):
        mat_mul(identity(2), identity(3))


def test_mat_power_one_is_a(rng):
    a = random_matrix(rng, 3)
    assert mat_power(a, 1) == a
    with pytest.raises(ValueError):
        mat_power(a, 0)


def test_mat_power_matches_walk_dp_oracle(rng):
    for n in (2, 3, 4, 5):
        for _ in range(4):
            a = random_matrix(rng, n)
            for t in (1, 2, 3, 5, 8, 13, 20):
                assert mat_power(a, t).raw() == walk_power(a, t)


def test_power_entry_enumerates_length_three_walks():
    # 2x2 with zero off-diagonal: the best 1->1 walk of length 3 takes one loop.
    a = M([[-1, 0], [0, -2]])
    assert mat_power(a, 3)[0, 0].value == Fraction(-1)


def test_mat_power_squaring_equals_naive(rng):
    a = random_matrix(rng, 4)
    acc = a
    for t in range(2, 33):
        acc = mat_mul(acc, a)
        assert mat_power(a, t) == acc


def test_mat_mul_associative(rng):
    for _ in range(10):
        a, b, c = (random_matrix(rng, 4) for _ in range(3))
        assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


def test_kleene_star_of_zero_matrix_is_identity():
    assert kleene_star(zeros(3)) == identity(3)


def test_kleene_star_hand_example():
    a = M([[N, -1], [-1, N]])
    assert kleene_star(a) == M([[0, -1], [-1, 0]])


def test_kleene_star_idempotent_and_fixed_point(rng):
    for _ in range(10):
        a = normalized(random_cyclic_matrix(rng, 4))
        star = kleene_star(a)
        assert mat_mul(star, star) == star
        assert mat_oplus(identity(4), mat_mul(a, star)) == star


def test_kleene_star_rejects_positive_cycle():
    with pytest.raises(ValueError):
        kleene_star(M([[1]]))
    with pytest.raises(ValueError):
        kleene_star(M([[N, 2], [-1, N]]))


def test_scale_identity_and_inverse(rng):
    a = random_matrix(rng, 4)
    d0 = DiagonalScaling([0, 0, 0, 0])
    assert scale(a, d0) == a
    d = DiagonalScaling([Fraction(1, 2), -3, 2, Fraction(7, 3)])
    assert scale(scale(a, d), d.inverse()) == a


def test_scale_fixes_diagonal(rng):
    a = random_matrix(rng, 4)
    d = DiagonalScaling([1, -2, Fraction(3, 2), 0])
    b = scale(a, d)
    for i in range(4):
        assert b[i, i] == a[i, i]


def test_diagonal_scaling_rejects_bottom():
    with pytest.raises(ValueError):
        DiagonalScaling([0, None])


def test_strict_domination():
    z = zeros(3)
    b = M([[1, N, 0], [N, N, N], [0, 0, 0]])
    assert strictly_dominated_by(z, b)
    a = M([[0, N, N], [N, N, N], [N, N, N]])
    assert not strictly_dominated_by(a, a)  # finite equality forbidden
    assert strictly_dominated_by(M([[N, -1]] + [[N, N]]), M([[N, 0], [N, N]]))
    assert not strictly_dominated_by(M([[N, 0], [N, N]]), M([[N, -1], [N, N]]))


def test_transpose_involution_and_power_commute(rng):
    a = random_matrix(rng, 4)
    assert transpose(transpose(a)) == a
    for m in (1, 2, 3, 7, 10):
        assert mat_power(transpose(a), m) == transpose(mat_power(a, m))


def test_mat_oplus_with_zero(rng):
    a = random_matrix(rng, 3)
    assert mat_oplus(a, zeros(3)) == a
    assert mat_equal(mat_oplus(a, a), a)


def test_text_roundtrip(rng):
    for n in (1, 2, 5):
        a = random_matrix(rng, n)
        text = render_matrix(a)
        assert parse_matrix(text) == a
        assert render_matrix(parse_matrix(text)) == text


def test_parse_accepts_star_tokens_and_trailing_junk():
    a = parse_matrix("2\n* 1/2\n-3 *\n{\"provenance\": true}\n")
    assert a == M([[N, Fraction(1, 2)], [-3, N]])


@pytest.mark.parametrize(
    "bad",
    ["", "0\n", "2\n1 2\n", "2\n1 2 3\n4 5\n", "x\n1\n"],
)
def test_parse_rejects_malformed(bad):
    with pytest.raises(ValueError):
        parse_matrix(bad)


def test_dimension_one_is_legal():
    a = M([[Fraction(3, 2)]])
    assert mat_power(a, 4)[0, 0].value == 6
    assert max_cycle_mean(a).value == Fraction(3, 2)
    assert kleene_star(M([[-1]])) == identity(1)
