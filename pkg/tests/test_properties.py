"""Randomized invariants, kept cheap enough for every run."""

import random

from hypothesis import given, settings, strategies as st

import hopflab as hl
from hopflab import linalg
from hopflab.hopf import TensorElement
from hopflab.indicators import sweedler_power, sweedler_power_matrix

from conftest import load

FIELDS = [hl.Field(5), hl.Field(7), hl.Field(2, 2), hl.Field(5, 2)]

fields = st.sampled_from(FIELDS)


@st.composite
def field_and_elements(draw, count=3, nonzero_last=False):
    F = draw(fields)
    q = F.p**F.k
    xs = [draw(st.integers(0, q - 1)) for _ in range(count)]
    if nonzero_last and xs[-1] == 0:
        xs[-1] = 1
    return F, xs


@st.composite
def field_and_matrix(draw, max_n=4):
    F = draw(fields)
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_n))
    q = F.p**F.k
    A = [
        [draw(st.integers(0, q - 1)) for _ in range(m)]
        for _ in range(n)
    ]
    return F, A


@settings(max_examples=60, deadline=None)
@given(field_and_elements())
def test_field_ring_axioms(fe):
    F, (a, b, c) = fe
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.mul(a, F.one) == a


@settings(max_examples=60, deadline=None)
@given(field_and_elements(count=1, nonzero_last=True))
def test_field_inverses(fe):
    F, (a,) = fe
    assert F.mul(a, F.inv(a)) == F.one
    assert F.pow(a, F.p**F.k - 1) == F.one  # unit group order


@settings(max_examples=40, deadline=None)
@given(field_and_matrix())
def test_rank_nullity_and_kernel(fm):
    F, A = fm
    cols = len(A[0])
    ker = linalg.kernel_basis(F, A)
    assert linalg.rank(F, A) + len(ker) == cols
    for v in ker:
        assert linalg.mat_vec(F, A, v) == [0] * len(A)


@settings(max_examples=40, deadline=None)
@given(field_and_matrix(max_n=3), st.data())
def test_solve_recovers_image_vectors(fm, data):
    F, A = fm
    cols = len(A[0])
    q = F.p**F.k
    x = [data.draw(st.integers(0, q - 1)) for _ in range(cols)]
    b = linalg.mat_vec(F, A, x)
    sol = linalg.try_solve(F, A, b)
    assert sol is not None
    assert linalg.mat_vec(F, A, sol) == b


@settings(max_examples=30, deadline=None)
@given(field_and_matrix(max_n=3))
def test_min_poly_annihilates(fm):
    F, A = fm
    n = min(len(A), len(A[0]))
    M = [row[:n] for row in A[:n]]  # square it off
    mp = linalg.min_poly(F, M)
    acc = linalg.zeros(n, n)
    power = linalg.identity(F, n)
    for c in mp:
        acc = linalg.mat_add(F, acc, linalg.mat_scale(F, c, power))
        power = linalg.mat_mul(F, power, M)
    assert acc == linalg.zeros(n, n)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(FIELDS[:2]), st.lists(st.integers(0, 6), min_size=1, max_size=6), st.integers(0, 10**6))
def test_factorization_reconstructs(F, coeffs, seed):
    f = [F.from_int(c) for c in coeffs] + [F.one]  # monic by construction
    rng = random.Random(seed)
    factors = linalg.poly_factor(F, f, rng)
    prod = [F.one]
    for g, mult in factors:
        assert linalg.poly_deg(g) >= 1
        for _ in range(mult):
            prod = linalg.poly_mul(F, prod, g)
    assert linalg.poly_trim(prod) == linalg.poly_trim(f)


CORPUS_SAMPLE = ("c3_gf7", "s3_gf7", "k4dual_gf5", "q8_gf25")


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CORPUS_SAMPLE), st.integers(-3, 3), st.integers(-3, 3), st.data())
def test_sweedler_powers_convolve(name, m, n, data):
    # id^{*m} * id^{*n} = id^{*(m+n)} pointwise on basis elements
    H = load(name)
    F = H.field
    i = data.draw(st.integers(0, H.n - 1))
    Pm = sweedler_power_matrix(H, m)
    Pn = sweedler_power_matrix(H, n)
    acc = [0] * H.n
    for (j, k), c in H._delta([F.one if t == i else 0 for t in range(H.n)], 2).items():
        term = H._mul([F.mul(c, v) for v in [Pm[r][j] for r in range(H.n)]],
                      [Pn[r][k] for r in range(H.n)])
        acc = [F.add(a, t) for a, t in zip(acc, term)]
    want = [sweedler_power_matrix(H, m + n)[r][i] for r in range(H.n)]
    assert acc == want


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CORPUS_SAMPLE), st.data())
def test_tensor_flip_rotate(name, data):
    H = load(name)
    F = H.field
    q = F.p**F.k
    order = data.draw(st.integers(2, 3))
    entries = {}
    for _ in range(data.draw(st.integers(1, 4))):
        key = tuple(data.draw(st.integers(0, H.n - 1)) for _ in range(order))
        entries[key] = data.draw(st.integers(1, q - 1))
    t = TensorElement(H, order, entries)
    if order == 2:
        assert t.flip().flip() == t
        assert t.rotate(1) == t.flip()
    back = t
    for _ in range(order):
        back = back.rotate(1)
    assert back == t
    assert t.rotate(order) == t


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CORPUS_SAMPLE), st.data())
def test_counit_collapses_comultiplication(name, data):
    H = load(name)
    F = H.field
    i = data.draw(st.integers(0, H.n - 1))
    x = [F.one if t == i else 0 for t in range(H.n)]
    left = [0] * H.n
    right = [0] * H.n
    for (j, k), c in H._delta(x, 2).items():
        left = [F.add(a, F.mul(c, F.mul(H.counit[j], (F.one if t == k else 0)))) for t, a in enumerate(left)]
        right = [F.add(a, F.mul(c, F.mul(H.counit[k], (F.one if t == j else 0)))) for t, a in enumerate(right)]
    assert left == x
    assert right == x


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(("c3_gf7", "s3_gf7")), st.integers(-4, 6), st.data())
def test_sweedler_power_of_integral_matches_matrix(name, n, data):
    H = load(name)
    d = hl.integral_data(H)
    v = sweedler_power(H, d.lambda_H, n)
    M = sweedler_power_matrix(H, n)
    assert v == linalg.mat_vec(H.field, M, d.lambda_H)
