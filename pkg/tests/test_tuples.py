"""
Diophantine 元组层测试：校验、κ 分解、理想构造
"""

from fractions import Fraction
from functools import reduce
from math import gcd

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from normtuple.arith import fundamental_discriminant, is_squarefree, isqrt
from normtuple.errors import (
    DegenerateFieldError, DomainError, NotAPairError, PreconditionError,
)
from normtuple.field import SplitKind, field_new
from normtuple.ideal import ideal_mul, principal_ideal, unit_ideal
from normtuple.tuples import (
    construct_pair_ideals, construct_tuple_ideals, divisibility_check,
    find_principal_generators, kappa, kappa_pair, norm_decompose, scale_pair,
    search_tuples, verify_tuple,
)


def _fundamental_moduli(limit):
    return [n for n in range(-limit, limit + 1)
            if n != 0 and fundamental_discriminant(n).is_fundamental]


def _nondegenerate(limit):
    return [n for n in range(-limit, limit + 1)
            if n < 0 or (n > 0 and not isqrt(n)[1])]


def _squarefree_moduli(limit):
    return [n for n in range(-limit, limit + 1)
            if n not in (0, 1) and is_squarefree(n)]


# ---- verify ----

def test_verify_fermat_quadruple():
    report = verify_tuple([1, 3, 8, 120], 1)
    assert report.valid
    tup = report.dioph_tuple
    assert tup.m == 4
    assert tup.witness_values() == [2, 3, 11, 5, 19, 31]
    assert tup.witness(3, 4) == 31


def test_verify_d13_triple_any_order():
    report = verify_tuple([18, 2, 6], 13)
    assert report.valid
    assert report.elements == (2, 6, 18)
    assert report.dioph_tuple.witness_values() == [5, 7, 11]


def test_verify_cube_triple():
    report = verify_tuple([2, 171, 25326], 1, k=3)
    assert report.valid
    assert report.dioph_tuple.witness_values() == [7, 37, 163]


def test_verify_fourth_power_triple():
    tup = verify_tuple([1352, 9539880, 9768370], 1, k=4).dioph_tuple
    assert tup.witness(1, 2) == 337
    assert tup.witness(1, 3) == 339
    assert tup.witness(2, 3) == 3107


def test_verify_reports_first_failing_pair():
    report = verify_tuple([1, 2, 3], 1)
    assert not report.valid
    assert report.failing_pair == (1, 2)
    assert report.failing_value == 3
    assert report.dioph_tuple is None


def test_verify_zero_and_negative_values():
    assert verify_tuple([1, 3], -3).dioph_tuple.witness_values() == [0]
    report = verify_tuple([1, 2], -5)
    assert not report.valid
    assert report.failing_value == -3


def test_verify_rejects_bad_input():
    with pytest.raises(DomainError):
        verify_tuple([1, 3, 3], 1)
    with pytest.raises(DomainError):
        verify_tuple([0, 3], 1)
    with pytest.raises(DomainError):
        verify_tuple([1, 3], 1, k=1)
    with pytest.raises(DomainError):
        verify_tuple([], 1)


def test_singleton_is_trivially_valid():
    report = verify_tuple([7], 5)
    assert report.valid
    assert report.dioph_tuple.witnesses == ()


# ---- divisibility ----

def test_divisibility_check_examples():
    rep = divisibility_check(2, 6, -3)
    assert rep.ok
    assert rep.r == 3
    entries = {e.prime: e for e in rep.entries}
    assert entries[2].kind is SplitKind.INERT and entries[2].residue_degree == 2
    assert entries[2].divides and not entries[2].must_split
    assert entries[3].kind is SplitKind.RAMIFIED and not entries[3].must_split

    rep = divisibility_check(4, 11, 5)
    assert rep.ok
    entries = {e.prime: e for e in rep.entries}
    assert entries[11].must_split and entries[11].kind is SplitKind.SPLIT

    assert divisibility_check(1, 3, 13).entries[0].kind is SplitKind.SPLIT


def test_divisibility_check_rejects_non_pair():
    with pytest.raises(NotAPairError):
        divisibility_check(1, 2, 1)


def test_scaled_pair_keeps_divisibility():
    t1, t2, n = scale_pair(1, 4, 5, 3)
    assert (t1, t2, n) == (3, 12, 45)
    rep = divisibility_check(t1, t2, n)
    assert rep.ok
    three = [e for e in rep.entries if e.prime == 3][0]
    assert three.kind is SplitKind.INERT and not three.must_split


def test_scale_pair_rejects_composite():
    with pytest.raises(DomainError):
        scale_pair(1, 4, 5, 4)


@pytest.mark.parametrize("n", _nondegenerate(40))
def test_divisibility_holds_for_all_small_pairs(n):
    for tup in search_tuples(n, 2, 2, 40):
        rep = divisibility_check(*tup.elements, n)
        assert rep.ok, (tup.elements, rep.counterexamples)


@settings(max_examples=300, derandomize=True, deadline=None,
          suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(
    st.integers(min_value=1, max_value=100),
    st.integers(min_value=1, max_value=100),
    st.sampled_from([0, 1]),
)
def test_divisibility_on_generated_pairs(t1, t2, offset):
    assume(t1 != t2)
    r = isqrt(t1 * t2)[0] + offset
    n = r * r - t1 * t2
    assume(n != 0 and abs(n) <= 150)
    assume(n < 0 or not isqrt(n)[1])
    assert divisibility_check(t1, t2, n).ok


# ---- kappa / norm decomposition ----

def test_kappa_examples():
    assert kappa([2, 10], 5) == 2
    assert kappa([1, 3, 12], 13) == 1
    assert kappa([2, 6], -3) == 2
    assert kappa([4, 11], 5) == 1


def test_kappa_preconditions():
    with pytest.raises(PreconditionError):
        kappa([1, 6], 3)
    with pytest.raises(PreconditionError):
        kappa([5], 5)
    with pytest.raises(NotAPairError):
        kappa([1, 2], 5)


def test_norm_decompose_halved_triple():
    dec = norm_decompose([2, 6, 18], 13)
    assert dec.kappa == 2
    assert dec.halved
    assert dec.base_tuple == (1, 3, 9)
    assert [I.norm for I in dec.witness_ideals] == [1, 3, 9]
    assert dec.effective_modulus == Fraction(13, 4)
    assert dec.modulus_note == "13/4"


def test_norm_decompose_norm_pair():
    F = field_new(5)
    dec = norm_decompose([4, 11], 5)
    assert dec.kappa == 1
    assert dec.witness_ideals[0] == principal_ideal(F, F.element(2))
    assert dec.witness_ideals[1].norm == 11
    assert dec.effective_modulus == 5


def test_norm_decompose_tuple_containing_one():
    dec = norm_decompose([1, 3, 12], 13)
    assert dec.kappa == 1
    assert dec.witness_ideals[0] == unit_ideal(field_new(13))


def test_principal_generators_in_class_number_one_field():
    dec = norm_decompose([4, 11], 5)
    gens = find_principal_generators(dec, 10)
    assert all(g is not None for g in gens)
    for g, I in zip(gens, dec.witness_ideals):
        assert principal_ideal(I.field, g) == I


def test_general_kappa_for_non_fundamental_modulus():
    gk = kappa_pair(3, 12, 45)
    assert gk.kappa == 3
    assert gk.reduced_pair == (1, 4)
    assert gk.effective_modulus == 5
    assert [I.norm for I in gk.witness_ideals] == [1, 4]


def test_general_kappa_degenerate_modulus():
    with pytest.raises(DegenerateFieldError):
        kappa_pair(1, 3, 1)


def _check_decomposition(elements, n):
    dec = norm_decompose(elements, n)
    assert dec.kappa in (1, 2)
    assert tuple(dec.kappa * t for t in dec.base_tuple) == dec.elements
    assert tuple(I.norm for I in dec.witness_ideals) == dec.base_tuple
    if dec.kappa == 2:
        assert n % 2 == 1
        assert field_new(n).D % 8 == 5
    if reduce(gcd, elements) == 1 or 1 in elements:
        assert dec.kappa == 1


@pytest.mark.parametrize("n", _fundamental_moduli(40))
def test_every_small_tuple_decomposes(n):
    for m in (2, 3):
        for tup in search_tuples(n, 2, m, 50):
            _check_decomposition(tup.elements, n)


@pytest.mark.slow
@pytest.mark.parametrize("n", _fundamental_moduli(150))
def test_every_tuple_decomposes_full_sweep(n):
    for m in (2, 3):
        for tup in search_tuples(n, 2, m, 500):
            _check_decomposition(tup.elements, n)


@pytest.mark.parametrize("n", _nondegenerate(30))
def test_general_kappa_for_small_pairs(n):
    for tup in search_tuples(n, 2, 2, 40):
        gk = kappa_pair(*tup.elements, n)
        x, y = gk.reduced_pair
        assert (gk.kappa * x, gk.kappa * y) == tup.elements
        assert [I.norm for I in gk.witness_ideals] == [x, y]
        assert gk.effective_modulus == Fraction(n, gk.kappa ** 2)


# ---- pair construction ----

def test_construct_pair_example():
    F = field_new(5)
    pc = construct_pair_ideals(4, 11, 5)
    assert pc.x == 7
    assert pc.ideal1 == principal_ideal(F, F.element(2))
    assert pc.ideal1.norm == 4
    assert pc.ideal2.norm == 11
    assert pc.product_generator == F.from_sqrt_form(7, 1)
    assert ideal_mul(pc.ideal1, pc.ideal2) == principal_ideal(F, pc.product_generator)


def test_construct_pair_with_unit_element():
    F = field_new(-3)
    pc = construct_pair_ideals(1, 4, -3)
    assert pc.x == 1
    assert pc.ideal1.is_unit()
    assert pc.ideal2.norm == 4
    assert pc.product_generator == F.from_sqrt_form(1, 1)


def test_construct_pair_preconditions():
    with pytest.raises(PreconditionError):
        construct_pair_ideals(2, 6, -3)
    with pytest.raises(PreconditionError):
        construct_pair_ideals(4, 11, 45)
    with pytest.raises(NotAPairError):
        construct_pair_ideals(1, 2, 5)
    with pytest.raises(DegenerateFieldError):
        construct_pair_ideals(1, 3, 1)
    with pytest.raises(DomainError):
        construct_pair_ideals(0, 5, 5)


def test_construct_tuple_ideals_uses_coprime_pairs():
    out = construct_tuple_ideals([1, 3, 12], 13)
    assert set(out) == {(1, 2), (1, 3)}
    assert out[(1, 2)].ideal2.norm == 3
    assert out[(1, 3)].ideal2.norm == 12


def _check_constructions(n, bound):
    for tup in search_tuples(n, 2, 2, bound):
        a1, a2 = tup.elements
        if gcd(a1, a2) == 1:
            pc = construct_pair_ideals(a1, a2, n)
            assert (pc.ideal1.norm, pc.ideal2.norm) == (a1, a2)


@pytest.mark.parametrize("n", _squarefree_moduli(30))
def test_every_small_coprime_pair_constructs(n):
    _check_constructions(n, 40)


@pytest.mark.slow
@pytest.mark.parametrize("n", _squarefree_moduli(100))
def test_every_coprime_pair_constructs_full_sweep(n):
    _check_constructions(n, 300)


@pytest.mark.slow
@settings(max_examples=1000, derandomize=True, deadline=None,
          suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow])
@given(
    st.integers(min_value=1, max_value=500),
    st.integers(min_value=1, max_value=500),
    st.integers(min_value=-2, max_value=3),
)
def test_divisibility_on_many_generated_pairs(t1, t2, offset):
    assume(t1 != t2)
    r = isqrt(t1 * t2)[0] + offset
    assume(r >= 0)
    n = r * r - t1 * t2
    assume(n != 0 and abs(n) <= 150)
    assume(n < 0 or not isqrt(n)[1])
    assert divisibility_check(t1, t2, n).ok
