import pytest

from overq.series import (
    EXACT,
    Ring,
    Series,
    Zmod,
    _convolve_packed,
    _convolve_schoolbook,
    _invert_recurrence,
    make_series,
    one,
)
from overq.eta import euler_product


def poly_mul(a, b, n):
    # tiny reference used to derive expected values independently of Series
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < n:
                out[i + j] += x * y
    return out


# --- rings -------------------------------------------------------------------


def test_ring_canon():
    assert EXACT.canon(-5) == -5
    assert Zmod(4).canon(5) == 1
    assert Zmod(4).canon(-1) == 3


def test_ring_modulus_must_be_at_least_two():
    with pytest.raises(ValueError):
        Ring(1)
    with pytest.raises(ValueError):
        Zmod(0)


def test_unit_inverse():
    assert EXACT.unit_inverse(-1) == -1
    assert Zmod(9).unit_inverse(2) == 5
    with pytest.raises(ValueError):
        EXACT.unit_inverse(2)
    with pytest.raises(ValueError):
        Zmod(8).unit_inverse(6)


# --- construction ------------------------------------------------------------


def test_make_series_constant():
    s = make_series(EXACT, [1], 4)
    assert s.coeffs == (1, 0, 0, 0)


def test_make_series_canonical_reduction():
    s = make_series(Zmod(4), [5, -1], 3)
    assert s.coeffs == (1, 3, 0)
    assert s.to_text() == "1 + 3*q + 0*q^2 (mod 4; O(q^3))"


def test_make_series_round_trip():
    s = make_series(EXACT, [1, 2, 4, 8], 4)
    assert s.coeff(3) == 8
    assert s[3] == 8


def test_make_series_rejects_zero_order():
    with pytest.raises(ValueError):
        make_series(EXACT, [1], 0)


def test_make_series_rejects_excess_coeffs():
    with pytest.raises(ValueError):
        make_series(EXACT, [1, 2, 3], 2)


def test_series_is_immutable_and_hashable():
    s = make_series(EXACT, [1, 2], 3)
    with pytest.raises(AttributeError):
        s.ring = Zmod(2)
    assert hash(s) == hash(make_series(EXACT, [1, 2], 3))
    assert s == make_series(EXACT, [1, 2], 3)
    assert s != make_series(EXACT, [1, 2], 4)


def test_to_text_negative_coefficients():
    s = make_series(EXACT, [1, -1, 0, 2], 4)
    assert s.to_text() == "1 - 1*q + 0*q^2 + 2*q^3 (exact; O(q^4))"


def test_coeff_out_of_range():
    s = make_series(EXACT, [1], 2)
    with pytest.raises(IndexError):
        s.coeff(2)


# --- add / sub / neg ---------------------------------------------------------


def test_add_cancels():
    a = make_series(EXACT, [1, 1], 2)
    b = make_series(EXACT, [1, -1], 2)
    assert (a + b).coeffs == (2, 0)


def test_add_neg_gives_zero():
    s = make_series(EXACT, [3, -2, 7], 3)
    assert (s + (-s)).is_zero()


def test_characteristic_two():
    s = make_series(Zmod(2), [1, 1], 2)
    assert (s + s).is_zero()


def test_binary_ops_truncate_to_min_order():
    a = make_series(EXACT, [1, 2, 3], 3)
    b = make_series(EXACT, [1, 1], 2)
    assert (a + b).order == 2
    assert (a * b).order == 2
    assert (a - b).order == 2


def test_ring_mismatch_raises():
    a = make_series(EXACT, [1], 2)
    b = make_series(Zmod(2), [1], 2)
    for op in (lambda: a + b, lambda: a - b, lambda: a * b):
        with pytest.raises(ValueError):
            op()


# --- mul ---------------------------------------------------------------------


def test_mul_telescopes():
    a = make_series(EXACT, [1, -1], 4)
    b = make_series(EXACT, [1, 1, 1, 1], 4)
    assert (a * b).coeffs == (1, 0, 0, 0)


def test_mul_square():
    s = make_series(EXACT, [1, 1], 3)
    assert (s * s).coeffs == (1, 2, 1)


def test_mul_f1_squared_low_coefficient():
    # expand prod_{n<=2} (1 - q^n) = 1 - q - q^2 + q^3 and square it
    hand = poly_mul([1, -1, -1, 1], [1, -1, -1, 1], 3)
    assert hand[2] == -1
    f1 = euler_product(1, EXACT, 3)
    assert (f1 * f1).coeff(2) == -1


def test_kernels_agree_on_fixed_cases():
    cases = [
        ([1, -1, 2], [3, 0, -5], 3),
        (list(range(40)), list(range(40, 0, -1)), 40),
        ([10**30, -(10**31), 7], [1, 2, 3], 3),
        ([0, 0, 0], [1, 2, 3], 3),
    ]
    for a, b, n in cases:
        assert _convolve_packed(a, b, n) == _convolve_schoolbook(a, b, n)


# --- invert ------------------------------------------------------------------


def test_invert_geometric():
    s = make_series(EXACT, [1, -1], 8)
    assert s.invert().coeffs == (1,) * 8


def test_invert_is_involution_on_euler_product():
    f1 = euler_product(1, EXACT, 50)
    assert f1.invert().invert() == f1


def test_invert_gives_partition_numbers():
    # independent DP: p(n) by bounded-part counting
    upto = 5
    table = [1] + [0] * upto
    for part in range(1, upto + 1):
        for n in range(part, upto + 1):
            table[n] += table[n - part]
    assert table == [1, 1, 2, 3, 5, 7]
    inv = euler_product(1, EXACT, 6).invert()
    assert list(inv.coeffs) == table


def test_invert_mul_is_one():
    s = make_series(Zmod(9), [2, 5, 1, 7], 4)
    assert (s * s.invert()) == one(Zmod(9), 4)


def test_invert_requires_unit():
    with pytest.raises(ValueError):
        make_series(EXACT, [2, 1], 3).invert()
    with pytest.raises(ValueError):
        make_series(Zmod(8), [6, 1], 3).invert()


def test_invert_matches_recurrence(rng):
    from conftest import RING_POOL, random_unit_series

    for ring in RING_POOL:
        s = random_unit_series(rng, ring, 70)
        assert s.invert() == _invert_recurrence(s)


# --- pow ---------------------------------------------------------------------


def test_pow_cube():
    s = make_series(EXACT, [1, 1], 4)
    assert (s**3).coeffs == (1, 3, 3, 1)


def test_pow_zero_is_one():
    s = make_series(EXACT, [5, 1], 3)
    assert s**0 == one(EXACT, 3)


def test_pow_squares_to_substitution_mod_two():
    f1 = euler_product(1, Zmod(2), 100)
    assert f1**2 == f1.substitute_power(2)


def test_pow_exponent_additivity():
    s = make_series(EXACT, [1, 2, -1], 30)
    assert s**5 == (s**2) * (s**3)


def test_pow_negative_exponent():
    s = make_series(EXACT, [1, 1], 6)
    assert (s**-2) * (s**2) == one(EXACT, 6)


def test_pow_negative_requires_unit():
    with pytest.raises(ValueError):
        make_series(EXACT, [0, 1], 3) ** -1


# --- substitute_power --------------------------------------------------------


def test_substitute_power_basic():
    s = make_series(EXACT, [1, 1], 4)
    assert s.substitute_power(3).coeffs == (1, 0, 0, 1)


def test_substitute_power_identity():
    s = make_series(EXACT, [1, 2, 3], 3)
    assert s.substitute_power(1) is s


def test_substitute_power_matches_scaled_euler_product():
    f1 = euler_product(1, EXACT, 60)
    assert f1.substitute_power(2) == euler_product(2, EXACT, 60)


def test_substitute_power_rejects_zero():
    with pytest.raises(ValueError):
        make_series(EXACT, [1], 2).substitute_power(0)


# --- dissect / shift ---------------------------------------------------------


def test_dissect_basic():
    s = make_series(EXACT, [1, 2, 3, 4], 4)
    assert s.dissect(2, 1).coeffs == (2, 4)


def test_dissect_identity():
    s = make_series(EXACT, [1, 2, 3], 3)
    assert s.dissect(1, 0) == s


def test_dissect_reconstruction_fixed():
    s = make_series(EXACT, list(range(1, 13)), 12)
    for m in (2, 3, 4):
        total = None
        for r in range(m):
            piece = s.dissect(m, r).substitute_power(m).shift(r)
            total = piece if total is None else total + piece
        assert total == s.truncate(total.order)
        for r in range(m):
            piece = s.dissect(m, r)
            for j in range(piece.order):
                assert piece.coeff(j) == s.coeff(m * j + r)


def test_dissect_rejects_bad_residue():
    s = make_series(EXACT, [1, 2, 3], 3)
    with pytest.raises(ValueError):
        s.dissect(2, 2)
    with pytest.raises(ValueError):
        s.dissect(0, 0)


def test_dissect_beyond_order():
    s = make_series(EXACT, [1], 1)
    with pytest.raises(ValueError):
        s.dissect(3, 2)


def test_shift_basic():
    s = make_series(EXACT, [1, 1], 4)
    assert s.shift(2).coeffs == (0, 0, 1, 1)


def test_shift_zero_is_identity():
    s = make_series(EXACT, [1, 2], 2)
    assert s.shift(0) is s


def test_shift_past_order():
    s = make_series(EXACT, [1, 2], 2)
    assert s.shift(5).coeffs == (0, 0)


def test_shift_then_dissect_index_algebra():
    s = make_series(EXACT, list(range(1, 11)), 10)
    lhs = s.shift(1).dissect(2, 1)
    rhs = s.dissect(2, 0)
    assert lhs == rhs.truncate(lhs.order)


# --- reduce_ring / truncate --------------------------------------------------


def test_reduce_ring_basic():
    s = make_series(EXACT, [1, -2], 2)
    assert s.reduce_ring(2).coeffs == (1, 0)


def test_reduce_ring_is_multiplicative():
    a = make_series(EXACT, [3, -1, 4], 3)
    b = make_series(EXACT, [2, 7, -5], 3)
    assert (a * b).reduce_ring(6) == a.reduce_ring(6) * b.reduce_ring(6)


def test_reduce_ring_on_euler_square():
    sq = euler_product(1, EXACT, 3) ** 2
    assert sq.reduce_ring(4).coeff(1) == 2  # -2q reduces to 2q mod 4


def test_reduce_ring_rejects_modular_input():
    s = make_series(Zmod(4), [1], 2)
    with pytest.raises(ValueError):
        s.reduce_ring(2)


def test_truncate():
    s = make_series(EXACT, [1, 2, 3], 3)
    assert s.truncate(2).coeffs == (1, 2)
    assert s.truncate(3) is s
    with pytest.raises(ValueError):
        s.truncate(4)
    with pytest.raises(ValueError):
        s.truncate(0)


def test_order_one_series_behave_as_scalars():
    a = make_series(EXACT, [3], 1)
    b = make_series(EXACT, [-2], 1)
    assert (a * b).coeffs == (-6,)
    assert (a + b).coeffs == (1,)
    assert (a**3).coeffs == (27,)
