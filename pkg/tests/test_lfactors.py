"""Closed-form L-factors, residues, recombination, three-way equality."""

from fractions import Fraction

import pytest

from rslocal import (
    BaseScalar,
    CuspidalDatum,
    Kind,
    LFactorSpec,
    PartialFraction,
    RationalFunction,
    RepDescriptor,
    l_cuspidal_pair,
    l_steinberg_pair,
    partial_fractions,
    recombine,
)

ONE = BaseScalar.one()
Q = BaseScalar.q_power(1)
QI = Q.inverse()

RHO = CuspidalDatum(1, 1, "rho")


def geom(pole, power=1):
    return RationalFunction.geometric(pole, power)


GRID = [
    (l, k, d, s0)
    for k in (1, 2, 3)
    for l in range(k, 7)
    for d in (1, 2, 3)
    for s0 in (Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(1), Fraction(-1))
]


# -- cuspidal pairs -------------------------------------------------------------


def test_cuspidal_tate_factor():
    assert l_cuspidal_pair(RHO, RHO.contragredient()) == geom(ONE)


def test_cuspidal_distinct_labels_trivial():
    tau = CuspidalDatum(1, 1, "tau", dual=True)
    assert l_cuspidal_pair(RHO, tau).is_one


def test_cuspidal_same_flag_trivial():
    assert l_cuspidal_pair(RHO, RHO).is_one


def test_cuspidal_torsion_two():
    rho = CuspidalDatum(2, 2, "rho")
    assert l_cuspidal_pair(rho, rho.contragredient()) == geom(ONE, 2)


def test_cuspidal_shift_moves_pole():
    val = l_cuspidal_pair(RHO, RHO.contragredient(), shift=Fraction(3, 2))
    assert val == geom(BaseScalar.q_power(Fraction(-3, 2)))


def test_cuspidal_twists_add_into_shift():
    a, b = Fraction(1, 2), Fraction(1)
    lhs = l_cuspidal_pair(RHO.twisted(a), RHO.contragredient().twisted(b))
    rhs = l_cuspidal_pair(RHO, RHO.contragredient(), shift=a + b)
    assert lhs == rhs


# -- steinberg pairs ----------------------------------------------------------


def test_steinberg_2_2():
    expected = geom(ONE) * geom(QI)
    assert l_steinberg_pair(LFactorSpec.unramified(2, 2)) == expected


def test_steinberg_3_1():
    assert l_steinberg_pair(LFactorSpec.unramified(3, 1)) == geom(QI)


def test_steinberg_distinct_inertial_trivial():
    spec = LFactorSpec.unramified(4, 2, distinct_inertial=True)
    assert l_steinberg_pair(spec).is_one


def test_denominator_degree_is_kd_and_numerator_one():
    for l, k, d, s0 in GRID:
        value = l_steinberg_pair(LFactorSpec.unramified(l, k, d=d, s0=s0))
        assert value.num.degree == 0 and value.num.constant_term.is_one
        assert value.den.degree == k * d, (l, k, d, s0)


def test_precondition_l_ge_k():
    with pytest.raises(ValueError):
        LFactorSpec.unramified(2, 3)


def test_spec_requires_steinberg_left():
    right = RepDescriptor.steinberg(1, RHO.contragredient())
    with pytest.raises(ValueError):
        LFactorSpec(RepDescriptor.sigma(2, RHO), right)
    with pytest.raises(ValueError):
        LFactorSpec(
            RepDescriptor.steinberg(2, RHO),
            RepDescriptor.product([RepDescriptor.steinberg(1, RHO).segment]),
        )


# -- partial fractions ------------------------------------------------------------


def test_residues_2_2():
    pf = partial_fractions(LFactorSpec.unramified(2, 2))
    (pole0, lam0), (pole1, lam1) = pf.terms
    assert pole0 == ONE and pole1 == QI
    assert lam0 == ONE / (ONE - QI)  # q/(q-1)
    assert lam1 == ONE / (ONE - Q)  # -1/(q-1)
    assert lam0 == Q / (Q - ONE)
    assert lam1 == -(ONE / (Q - ONE))


def test_single_pole_residue_is_one():
    pf = partial_fractions(LFactorSpec.unramified(5, 1))
    assert len(pf.terms) == 1
    assert pf.terms[0][1].is_one


def test_lambda_sum_is_one_on_grid():
    for l, k, d, s0 in GRID:
        pf = partial_fractions(LFactorSpec.unramified(l, k, d=d, s0=s0))
        assert pf.lambda_sum().is_one, (l, k, d, s0)


def test_residues_independent_of_l_and_s0():
    base = partial_fractions(LFactorSpec.unramified(3, 3, d=2))
    other = partial_fractions(
        LFactorSpec.unramified(6, 3, d=2, s0=Fraction(1, 2))
    )
    assert [lam for _, lam in base.terms] == [lam for _, lam in other.terms]


def test_recombination_identity_on_grid():
    for l, k, d, s0 in GRID:
        spec = LFactorSpec.unramified(l, k, d=d, s0=s0)
        assert recombine(partial_fractions(spec)) == l_steinberg_pair(spec), (
            l,
            k,
            d,
            s0,
        )


def test_recombine_single_term():
    pf = PartialFraction(1, ((ONE, ONE),))
    assert recombine(pf) == geom(ONE)


def test_recombine_at_origin_is_lambda_sum():
    spec = LFactorSpec.unramified(4, 3)
    pf = partial_fractions(spec)
    assert recombine(pf).expand(0).coeff(0) == pf.lambda_sum()


def test_repeated_pole_guard():
    with pytest.raises(ValueError):
        PartialFraction(1, ((ONE, ONE), (ONE, QI)))


def test_partial_fractions_rejects_trivial_factor():
    with pytest.raises(ValueError):
        partial_fractions(LFactorSpec.unramified(3, 2, distinct_inertial=True))


# -- three-way equality and covariance -----------------------------------------


def test_three_way_equality():
    for l, k, d, s0 in GRID:
        values = {
            l_steinberg_pair(
                LFactorSpec.unramified(l, k, d=d, s0=s0, right_kind=kind)
            )
            for kind in (Kind.STEINBERG, Kind.SIGMA, Kind.SPEH)
        }
        assert len(values) == 1, (l, k, d, s0)


def test_twist_covariance():
    # Moving s0 by t multiplies every pole by q^(t d) and fixes residues.
    for d in (1, 2, 3):
        base = LFactorSpec.unramified(4, 2, d=d, s0=0)
        for t in (Fraction(1, 2), Fraction(1), Fraction(-3, 2)):
            shifted = LFactorSpec.unramified(4, 2, d=d, s0=t)
            factor = BaseScalar.q_power(t * d)
            for i in range(2):
                assert shifted.pole(i) == base.pole(i) * factor
            lam_base = [lam for _, lam in partial_fractions(base).terms]
            lam_shift = [lam for _, lam in partial_fractions(shifted).terms]
            assert lam_base == lam_shift


def test_data_twists_shift_poles_oppositely():
    # Twisting either datum by nu^t substitutes X -> q^(-t) X.
    datum = CuspidalDatum(1, 1, "rho")
    left = RepDescriptor.steinberg(3, datum.twisted(Fraction(1, 2)))
    right = RepDescriptor.steinberg(2, datum.contragredient())
    spec = LFactorSpec(left, right)
    plain = LFactorSpec.unramified(3, 2)
    factor = BaseScalar.q_power(Fraction(-1, 2))
    for i in range(2):
        assert spec.pole(i) == plain.pole(i) * factor
