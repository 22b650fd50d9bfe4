import random

import pytest

import hopflab as hl
from hopflab.integrals import (
    IntegralData,
    NotSemisimple,
    compute_dual_integral,
    compute_integral,
    normalize_pair,
)

from conftest import SEMISIMPLE_CORPUS, load, pipeline


@pytest.mark.parametrize("name", SEMISIMPLE_CORPUS)
def test_integral_is_two_sided_and_epsilon_invariant(name):
    H = load(name)
    F = H.field
    lam = compute_integral(H)
    for i in range(H.n):
        b = H.basis(i)
        eps = H.counit[i]
        want = [F.mul(eps, c) for c in lam.coeffs]
        assert (b * lam).coeffs == want
        assert (lam * b).coeffs == want


def test_group_algebra_integral_direction():
    H = load("s3_gf7")
    lam = compute_integral(H)
    # Σ_g g, up to the normalization scalar
    assert len(set(lam.coeffs)) == 1 and lam.coeffs[0] != 0


def test_dual_group_algebra_integral_direction():
    H = load("s3dual_gf7")  # Λ = δ_e; identity permutation is basis 0
    lam = compute_integral(H)
    assert lam.coeffs[0] != 0
    assert all(c == 0 for c in lam.coeffs[1:])


def test_double_integral_direction():
    H = load("d_s3_gf7")  # Λ = δ_e ⊗ Σ_h h
    lam = compute_integral(H)
    support = {i for i, c in enumerate(lam.coeffs) if c}
    assert support == set(range(6))  # first block: g = e, all h
    assert len({lam.coeffs[i] for i in support}) == 1


@pytest.mark.parametrize("name", SEMISIMPLE_CORPUS)
def test_pairing_normalization(name):
    H, data, _ = pipeline(name)
    F = H.field
    # λ(Λ) = 1
    assert data.eval_dual(data.lambda_H) == F.one
    assert data.eps_of_lambda != 0


@pytest.mark.parametrize("name", SEMISIMPLE_CORPUS)
def test_frobenius_identity_suite(name):
    H, data, _ = pipeline(name)
    rep = hl.verify_frobenius_identities(H, data)
    assert rep.ok, "\n".join(e.line() for e in rep.failures())


@pytest.mark.parametrize("name", SEMISIMPLE_CORPUS)
def test_u_conjugation_and_grouplike(name):
    H, data, _ = pipeline(name)
    F = H.field
    from hopflab import linalg

    Lu = H.left_mult_matrix(data.u)
    Ru_inv = H.right_mult_matrix(data.u_inv)
    assert linalg.mat_mul(F, Lu, Ru_inv) == H.s_square_matrix()
    # g = S(u⁻¹)u is group-like
    g = H.element(data.g)
    assert H.comultiply(g) == hl.TensorElement.pure(H, g, g)
    assert H.counit_apply(g) == F.one


def test_pinned_c3_gf7_values():
    H, data, _ = pipeline("c3_gf7")
    assert data.lambda_H == [1, 1, 1]
    assert data.u == [3, 0, 0]
    assert data.u_inv == [5, 0, 0]
    assert data.eps_of_lambda == 3
    assert data.g == [1, 0, 0]


def test_involutory_members_have_unit_g():
    for name in ("c2_gf5", "s3_gf7", "q8_gf25", "d_s3_gf7", "k4dual_gf5"):
        H, data, _ = pipeline(name)
        assert data.g == list(H.unit)


@pytest.mark.parametrize("name", ["c2_gf5", "s3_gf7", "s3dual_gf7", "d_s3_gf7"])
def test_cocommutativity_equivalence_holds(name):
    H, data, _ = pipeline(name)
    rep = hl.cocommutativity_equivalence(H, data)
    assert rep.ok
    # all corpus members are involutory, so the equivalent statements are all true
    assert H.is_involutory()
    delta = hl.TensorElement(H, 2, H._delta(data.lambda_H, 2))
    assert delta == delta.flip()


def test_not_semisimple_rejection():
    H = load("c3_gf3")
    assert H.verify_axioms().ok  # the bialgebra itself is fine
    with pytest.raises(NotSemisimple):
        hl.integral_data(H)


def test_not_semisimple_is_epsilon_zero_not_pairing():
    # λ(Λ) = 1 is achievable for GF(3)[C3]; the failure must be ε(Λ) = 0
    H = load("c3_gf3")
    lam = compute_integral(H)
    eps = 0
    for i, c in enumerate(lam.coeffs):
        eps = H.field.add(eps, H.field.mul(c, H.counit[i]))
    assert eps == 0
    with pytest.raises(NotSemisimple, match="ε"):
        hl.integral_data(H)


def test_rescaled_integral_pair_still_valid():
    H, data, _ = pipeline("s3_gf7")
    F = H.field
    c = F.from_int(3)
    scaled = IntegralData(
        algebra=H,
        lambda_H=[F.mul(c, x) for x in data.lambda_H],
        lambda_dual=[F.div(x, c) for x in data.lambda_dual],
        u=[F.mul(c, x) for x in data.u],
        u_inv=[F.div(x, c) for x in data.u_inv],
        g=data.g,
        g_inv=data.g_inv,
        eps_of_lambda=F.mul(c, data.eps_of_lambda),
        dual_convention=data.dual_convention,
    )
    rep = hl.verify_frobenius_identities(H, scaled)
    assert rep.ok, "\n".join(e.line() for e in rep.failures())


def test_precondition_p_square():
    # dim 36 over GF(5): 25 < 36 must be refused even with valid axioms
    H = load("d_s3_gf7")
    import hopflab.builders as builders

    small = hl.Field(5)
    with pytest.raises(builders.PreconditionPSquare):
        D = hl.drinfeld_double(hl.BUNDLED_GROUPS["s3"], small)


def test_degenerate_direction_retry_left_convention():
    # every corpus member must end with a convention the anchor identity accepts
    for name in ("s3_gf7", "d_s3_gf7", "q8_gf25"):
        _, data, _ = pipeline(name)
        assert data.dual_convention in ("right", "left")
