import random

from hypothesis import given, settings, strategies as st

from conftest import RING_POOL
from overq.series import (
    EXACT,
    Series,
    Zmod,
    _convolve_packed,
    _convolve_schoolbook,
    _invert_recurrence,
    make_series,
    one,
)

rings = st.sampled_from(RING_POOL)
small_ints = st.integers(min_value=-20, max_value=20)


def series_over(ring, min_order=1, max_order=48, elements=small_ints):
    return st.lists(elements, min_size=min_order, max_size=max_order).map(
        lambda cs: Series(ring, cs)
    )


@st.composite
def series_triples(draw):
    ring = draw(rings)
    order = draw(st.integers(min_value=1, max_value=48))
    mk = lambda: Series(ring, [draw(small_ints) for _ in range(order)])
    return mk(), mk(), mk()


@st.composite
def unit_series(draw, max_order=40):
    ring = draw(rings)
    order = draw(st.integers(min_value=1, max_value=max_order))
    coeffs = [draw(small_ints) for _ in range(order)]
    coeffs[0] = draw(st.sampled_from([1, -1]))
    return Series(ring, coeffs)


@st.composite
def exact_pairs(draw, max_order=40):
    order = draw(st.integers(min_value=1, max_value=max_order))
    a = Series(EXACT, [draw(small_ints) for _ in range(order)])
    b = Series(EXACT, [draw(small_ints) for _ in range(order)])
    return a, b


@given(series_triples())
def test_mul_commutes(triple):
    a, b, _ = triple
    assert a * b == b * a


@given(series_triples())
def test_mul_associates(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)


@given(series_triples())
def test_mul_distributes_over_add(triple):
    a, b, c = triple
    assert a * (b + c) == a * b + a * c


@given(unit_series())
def test_invert_is_right_inverse(s):
    assert s * s.invert() == one(s.ring, s.order)


@given(unit_series(max_order=30))
def test_newton_matches_recurrence(s):
    assert s.invert() == _invert_recurrence(s)


@settings(deadline=None)
@given(
    unit_series(max_order=24),
    st.integers(min_value=-3, max_value=5),
    st.integers(min_value=-3, max_value=5),
)
def test_pow_is_additive_in_the_exponent(s, e1, e2):
    assert s ** (e1 + e2) == (s**e1) * (s**e2)


@settings(deadline=None)
@given(rings, st.integers(min_value=1, max_value=64), st.sampled_from([2, 3, 4, 8, 16]), st.data())
def test_dissection_reconstructs_series(ring, extra, m, data):
    order = m + extra  # ensure every residue class has a known coefficient
    s = Series(ring, [data.draw(small_ints) for _ in range(order)])
    total = None
    for r in range(m):
        piece = s.dissect(m, r).substitute_power(m).shift(r)
        total = piece if total is None else total + piece
    assert total == s.truncate(total.order)
    for r in range(m):
        piece = s.dissect(m, r)
        for j in range(piece.order):
            assert piece.coeff(j) == s.coeff(m * j + r)


_REDUCIBLE_OPS = (
    ("add", lambda a, b: a + b),
    ("sub", lambda a, b: a - b),
    ("mul", lambda a, b: a * b),
    ("pow3", lambda a, b: a**3),
    ("subst2", lambda a, b: a.substitute_power(2)),
    ("shift3", lambda a, b: a.shift(3)),
    ("dissect", lambda a, b: a.dissect(2, 1) if a.order > 1 else a),
)


@settings(deadline=None)
@given(
    exact_pairs(),
    st.sampled_from([2, 3, 4, 8, 9, 16, 32, 2592]),
    st.sampled_from(_REDUCIBLE_OPS),
)
def test_reduction_is_a_ring_homomorphism(pair, modulus, op):
    a, b = pair
    _, fn = op
    reduced = fn(a, b).reduce_ring(modulus)
    mapped = fn(a.reduce_ring(modulus), b.reduce_ring(modulus))
    assert reduced == mapped


@settings(deadline=None)
@given(
    st.lists(st.integers(min_value=-(10**9), max_value=10**9), min_size=1, max_size=80),
    st.lists(st.integers(min_value=-(10**9), max_value=10**9), min_size=1, max_size=80),
)
def test_packed_kernel_matches_schoolbook(a, b):
    n = min(len(a), len(b))
    assert _convolve_packed(a, b, n) == _convolve_schoolbook(a, b, n)


@given(st.lists(st.integers(min_value=-(10**40), max_value=10**40), min_size=33, max_size=50))
def test_packed_kernel_handles_huge_coefficients(a):
    b = list(reversed(a))
    n = len(a)
    assert _convolve_packed(a, b, n) == _convolve_schoolbook(a, b, n)


def test_packed_kernel_thousand_randomized_cases():
    rng = random.Random(8201)
    for case in range(1000):
        n = rng.randint(1, 90)
        span = rng.choice([3, 100, 10**6, 10**18])
        a = [rng.randint(-span, span) for _ in range(n)]
        b = [rng.randint(-span, span) for _ in range(rng.randint(1, 90))]
        m = min(len(a), len(b))
        assert _convolve_packed(a, b, m) == _convolve_schoolbook(a, b, m), f"case {case}"


@given(rings, st.lists(small_ints, min_size=0, max_size=10), st.integers(min_value=1, max_value=16))
def test_make_series_pads_and_canonicalizes(ring, coeffs, pad):
    order = len(coeffs) + pad
    s = make_series(ring, coeffs, order)
    assert s.order == order
    if ring.is_modular:
        assert all(0 <= c < ring.modulus for c in s.coeffs)
    assert all(s.coeff(n) == 0 for n in range(len(coeffs), order))
