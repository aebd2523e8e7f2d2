import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from g2kit.dga import GENERATORS, CoframeDGA, DgaElement
from g2kit.scalars import ComplexRational


def rand_element(rng, max_words=3, max_len=2):
    terms = {}
    for _ in range(rng.randint(1, max_words)):
        word = tuple(
            rng.sample(range(len(GENERATORS)), rng.randint(0, max_len))
        )
        terms[word] = ComplexRational(
            Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))
        )
    return DgaElement(terms)


def test_word_canonicalization():
    a = DgaElement({(3, 1): ComplexRational(1)})
    b = DgaElement({(1, 3): ComplexRational(-1)})
    assert a == b
    assert DgaElement({(2, 2): ComplexRational(5)}).is_zero


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_canonicalization_idempotent(seed):
    rng = random.Random(seed)
    e = rand_element(rng)
    again = DgaElement(dict(e.terms))
    assert again == e


def test_generator_anticommutation():
    dga = CoframeDGA()
    t1, t2 = dga.theta(1), dga.theta(2)
    assert t1 * t2 == -(t2 * t1)
    assert (t1 * t1).is_zero


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_d_is_a_derivation(seed):
    rng = random.Random(seed)
    dga = CoframeDGA()
    a = rand_element(rng, max_words=2, max_len=1)
    b = rand_element(rng, max_words=2, max_len=2)
    # split a into homogeneous parts to apply the graded rule
    for word, c in a.terms.items():
        part = DgaElement({word: c})
        sign = -1 if len(word) % 2 else 1
        lhs = dga.d(part * b)
        rhs = dga.d(part) * b + (part * dga.d(b)).smul(ComplexRational(sign))
        assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_conj_involution_commutes_with_d(seed):
    rng = random.Random(seed)
    dga = CoframeDGA()
    e = rand_element(rng)
    assert dga.conj(dga.conj(e)) == e
    assert dga.d(dga.conj(e)) == dga.conj(dga.d(e))


def test_d_theta1_frozen():
    dga = CoframeDGA()
    expected = (
        -(dga.kappa(1, 1) * dga.theta(1))
        - dga.kappa(1, 2) * dga.theta(2)
        - dga.kappa(1, 3) * dga.theta(3)
        + (dga.theta_bar(2) * dga.theta_bar(3)).smul(Fraction(2))
    )
    assert dga.d(dga.theta(1)) == expected


def test_d_kappa12_frozen():
    # hand expansion: (k22 - k11) k12 + k32 k13 + 3 t1 t2b
    dga = CoframeDGA()
    expected = (
        (dga.kappa(2, 2) - dga.kappa(1, 1)) * dga.kappa(1, 2)
        + dga.kappa(3, 2) * dga.kappa(1, 3)
        + (dga.theta(1) * dga.theta_bar(2)).smul(Fraction(3))
    )
    assert dga.d(dga.kappa(1, 2)) == expected


def test_d_scalar_is_zero():
    dga = CoframeDGA()
    assert dga.d(DgaElement.scalar(ComplexRational(1))).is_zero


def test_d_volume_word_frozen():
    # d(t1 t2 t3) = 2 (t2 t3 t2b t3b + t1 t3 t1b t3b + t1 t2 t1b t2b)
    dga = CoframeDGA()
    t = dga.theta
    tb = dga.theta_bar
    lhs = dga.d(t(1) * t(2) * t(3))
    rhs = (
        t(2) * t(3) * tb(2) * tb(3)
        + t(1) * t(3) * tb(1) * tb(3)
        + t(1) * t(2) * tb(1) * tb(2)
    ).smul(Fraction(2))
    assert lhs == rhs


def test_d_squared_all_generators():
    dga = CoframeDGA()
    report = dga.verify_d_squared()
    assert len(report) == 14
    assert all(r["pass"] for r in report)


@pytest.mark.parametrize("mutation", CoframeDGA.MUTATIONS)
def test_mutations_detected(mutation):
    bad = CoframeDGA(mutation=mutation)
    report = bad.verify_d_squared()
    assert not all(r["pass"] for r in report)
    failing = [r for r in report if not r["pass"]]
    assert all(r["residual_terms"] for r in failing)


def test_unknown_mutation_rejected():
    with pytest.raises(ValueError):
        CoframeDGA(mutation="nonsense")


def test_invariant_form_identities():
    dga = CoframeDGA()
    report = dga.verify_invariant_form_identities()
    names = {r["check"] for r in report}
    assert names == {
        "d_omega_is_3_im_upsilon",
        "d_upsilon_is_2_omega_sq",
        "omega_wedge_upsilon_vanishes",
    }
    assert all(r["pass"] for r in report)


def test_invariant_identities_break_under_mutation():
    bad = CoframeDGA(mutation="dtheta-coeff")
    report = bad.verify_invariant_form_identities()
    assert not all(r["pass"] for r in report)


def test_frobenius_system():
    dga = CoframeDGA()
    report = dga.verify_frobenius_system()
    assert [r["generator"] for r in report] == list(dga.DEFAULT_FROBENIUS_SYSTEM)
    assert all(r["pass"] for r in report)


def test_frobenius_control_fails():
    dga = CoframeDGA()
    report = dga.verify_frobenius_system(("t1",))
    assert not all(r["pass"] for r in report)
    # the conjugate-pair term 2 t2b t3b survives modulo the ideal of t1 alone
    residual = report[0]["residual_terms"]
    assert {"word": ["t2b", "t3b"], "re": "2", "im": "0"} in residual


def test_report_schema():
    dga = CoframeDGA()
    for entry in dga.verify_d_squared():
        assert set(entry) == {"check", "generator", "residual_terms", "pass"}
