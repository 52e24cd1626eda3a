import math
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycloschur.partitions import (
    Multipartition,
    enumerate_multipartitions,
    parse_multipartition,
)
from cycloschur.schur import (
    BadSpecialisationError,
    CycloSpec,
    LaurentPoly,
    RootOfUnity,
    class_multicharge,
    cyclotomic_poly,
    defect_general,
    defect_integer,
    dipper_mathas_classes,
    nu_phi,
    q_integer,
    schur_factors,
    semisimple_check,
    specialize_integer,
)

Y = LaurentPoly.term(1)
ONE = LaurentPoly.one()


def test_laurent_basic_arithmetic():
    y_minus = LaurentPoly({1: 1, 0: -1})
    y_plus = LaurentPoly({1: 1, 0: 1})
    assert y_minus * y_plus == LaurentPoly({2: 1, 0: -1})
    assert (y_minus + y_plus) == LaurentPoly({1: 2})
    assert y_minus - y_minus == LaurentPoly.zero()
    assert LaurentPoly({-2: Fraction(1, 2)}) * LaurentPoly({2: 2}) == ONE
    assert (y_plus ** 2) == LaurentPoly({2: 1, 1: 2, 0: 1})


def test_laurent_zero_handling():
    zero = LaurentPoly.zero()
    assert zero.is_zero
    assert LaurentPoly({3: 0}).is_zero
    with pytest.raises(ValueError):
        zero.min_exp
    assert str(zero) == "0"


def test_laurent_exact_divide():
    y2_minus = LaurentPoly({2: 1, 0: -1})
    y_minus = LaurentPoly({1: 1, 0: -1})
    assert y2_minus.exact_divide(y_minus) == LaurentPoly({1: 1, 0: 1})
    with pytest.raises(ValueError):
        LaurentPoly({3: 1, 0: -1}).exact_divide(LaurentPoly({1: 1, 0: 1}))
    with pytest.raises(ZeroDivisionError):
        ONE.exact_divide(LaurentPoly.zero())
    # laurent shifts divide out exactly
    shifted = LaurentPoly({-1: 1, -3: -1})
    assert shifted.exact_divide(LaurentPoly({-2: 1})) == LaurentPoly({1: 1, -1: -1})


coeff = st.integers(-4, 4)
laurents = st.dictionaries(st.integers(-4, 4), coeff, max_size=5).map(LaurentPoly)


@given(laurents, laurents)
def test_laurent_product_divides_back(p, q):
    if q.is_zero:
        return
    assert (p * q).exact_divide(q) == p


def test_laurent_serialisation():
    p = LaurentPoly({-2: Fraction(1, 3), 1: -2})
    assert p.to_pairs() == ((-2, "1/3"), (1, "-2"))
    assert str(LaurentPoly({0: 1, -2: -1})) == "1 - y^-2"
    assert str(cyclotomic_poly(6)) == "y^2 - y + 1"


def test_cyclotomic_examples():
    assert cyclotomic_poly(1) == LaurentPoly({1: 1, 0: -1})
    assert cyclotomic_poly(2) == LaurentPoly({1: 1, 0: 1})
    assert cyclotomic_poly(6) == LaurentPoly({2: 1, 1: -1, 0: 1})
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


def _totient(e):
    return sum(1 for k in range(1, e + 1) if math.gcd(k, e) == 1)


def test_cyclotomic_degree_and_product():
    for m in range(1, 25):
        assert cyclotomic_poly(m).span == _totient(m)
        prod = ONE
        for d in range(1, m + 1):
            if m % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == LaurentPoly({m: 1, 0: -1})


def test_nu_phi_examples():
    assert nu_phi(LaurentPoly.term(5), 3) == 0
    squared = cyclotomic_poly(2) * cyclotomic_poly(2) * cyclotomic_poly(1)
    assert nu_phi(squared, 2) == 2
    assert nu_phi(LaurentPoly({6: 1, 0: -1}), 3) == 1
    with pytest.raises(ValueError):
        nu_phi(LaurentPoly.zero(), 2)


def test_q_integer():
    assert q_integer(1) == ONE
    assert q_integer(3) == LaurentPoly({0: 1, 1: 1, 2: 1})
    with pytest.raises(ValueError):
        q_integer(0)


def test_schur_factors_examples():
    single = schur_factors(parse_multipartition("1"))
    assert single.sign == 1
    assert single.q_exponent == 0
    assert single.q_integers == (1,)
    assert single.pair_factors == ()

    pair = schur_factors(parse_multipartition("1|0"))
    assert pair.sign == -1
    assert pair.q_exponent == 0
    assert pair.q_integers == (1,)
    assert pair.pair_factors == ((0, 0, 1),)
    assert pair.to_json() == {
        "sign": -1,
        "q_exp": 0,
        "qints": [1],
        "pairs": [[0, 0, 1]],
    }


def test_schur_factor_counts():
    for l in (1, 2, 3):
        for n in range(0, 5):
            for mp in enumerate_multipartitions(l, n):
                f = schur_factors(mp)
                assert len(f.q_integers) == n
                assert len(f.pair_factors) == n * (l - 1)
                assert all(h >= 1 for h in f.q_integers)
                assert f.sign == (-1) ** (n * (l - 1))


def test_specialize_integer_examples():
    assert specialize_integer(parse_multipartition("1"), (0,)) == ONE
    assert specialize_integer(parse_multipartition("1|0"), (0, 2)) == LaurentPoly(
        {0: 1, -2: -1}
    )
    with pytest.raises(BadSpecialisationError):
        specialize_integer(parse_multipartition("1|0"), (0, 0))


def test_defect_integer_known_values():
    assert defect_integer(parse_multipartition("3.1|2.1.1"), (0, 2), 2) == 8
    assert defect_integer(parse_multipartition("2|1|1.1"), (0, 1, 2), 3) == 1
    assert defect_integer(parse_multipartition("2.1.1|2.1.1"), (0, 2), 3) == 4


def test_defect_large_e_vanishes():
    # with charges far enough apart no charged hook vanishes, so a prime
    # beyond every hook leaves nothing to count
    mp = parse_multipartition("3.1|2.1.1")
    assert defect_integer(mp, (0, 9), 97) == 0
    # zero charged hooks count as divisible for every e
    assert defect_integer(mp, (0, 2), 97) == 2


def test_defect_e1_counts_nonzero_pair_hooks():
    for l in (2, 3):
        for n in range(0, 5):
            for mp in enumerate_multipartitions(l, n):
                s = tuple(9 * (a + 1) for a in range(l))  # far apart: all good
                assert defect_integer(mp, s, 1) == n * (l - 1)


def good_instances(max_l=3, max_n=5, es=(2, 3)):
    for l in range(1, max_l + 1):
        for n in range(0, max_n + 1):
            for mp in enumerate_multipartitions(l, n):
                for e in es:
                    for s in combinations_with_replacement(range(2 * e), l):
                        yield mp, s, e


def test_factor_rule_matches_polynomial_oracle():
    for mp, s, e in good_instances():
        try:
            poly = specialize_integer(mp, s)
        except BadSpecialisationError:
            continue
        assert defect_integer(mp, s, e) == nu_phi(poly, e), (mp, s, e)


def test_degree_bookkeeping():
    for mp, s, e in good_instances(max_l=2, max_n=4, es=(2,)):
        try:
            poly = specialize_integer(mp, s)
        except BadSpecialisationError:
            continue
        f = schur_factors(mp)
        expected = sum(h - 1 for h in f.q_integers) + sum(
            abs(h + s[a] - s[b]) for h, a, b in f.pair_factors
        )
        assert poly.span == expected


def test_difchoice_invariance():
    mp = parse_multipartition("2.1|1.1")
    for e in (2, 3, 4):
        base = defect_integer(mp, (0, 1), e)
        for shift_a in (0, e, 3 * e):
            for shift_b in (0, e, 2 * e):
                assert defect_integer(mp, (0 + shift_a, 1 + shift_b), e) == base


def test_root_of_unity():
    z = RootOfUnity(12, 4)
    assert z.element_order == 3
    assert (z * z).exponent == 8
    assert (z ** 3).is_one
    assert z.inverse().exponent == 8
    assert RootOfUnity(12, -1).exponent == 11
    with pytest.raises(ValueError):
        z * RootOfUnity(6, 1)
    with pytest.raises(ValueError):
        RootOfUnity(0, 1)


def test_semisimple_check():
    # u of large order, parameters far apart
    xi = [RootOfUnity(35, 0), RootOfUnity(35, 1)]
    u = RootOfUnity(35, 7)  # order 5
    assert semisimple_check(xi, u, 4)
    assert not semisimple_check(xi, u, 5)  # q-integer [5] dies
    # xi_b = u * xi_a kills a pair factor as soon as n >= 2
    xi_bad = [RootOfUnity(35, 0), RootOfUnity(35, 7)]
    assert not semisimple_check(xi_bad, u, 2)
    assert semisimple_check(xi_bad, u, 1)
    with pytest.raises(ValueError):
        semisimple_check([RootOfUnity(6, 1)], u, 2)


def test_dipper_mathas_classes_examples():
    ambient = 12
    u = RootOfUnity(ambient, 4)
    same = [RootOfUnity(ambient, 2), RootOfUnity(ambient, 2)]
    assert dipper_mathas_classes(same, u, 3) == ((0, 1),)
    distinct = [RootOfUnity(ambient, 0), RootOfUnity(ambient, 3)]
    assert dipper_mathas_classes(distinct, RootOfUnity(ambient, 0), 3) == ((0,), (1,))
    assert dipper_mathas_classes(distinct, u, 3) == ((0,), (1,))
    linked = [RootOfUnity(ambient, 0), RootOfUnity(ambient, 8)]
    assert dipper_mathas_classes(linked, u, 3) == ((0, 1),)


def test_dipper_mathas_transitive_closure():
    # 0 -> 1 and 1 -> 2 need h=1 each; 0 -> 2 directly needs h=2 > n-1
    ambient = 100
    u = RootOfUnity(ambient, 1)
    xi = [RootOfUnity(ambient, 0), RootOfUnity(ambient, 1), RootOfUnity(ambient, 2)]
    assert dipper_mathas_classes(xi, u, 2) == ((0, 1, 2),)


def test_class_multicharge():
    u = RootOfUnity(12, 4)
    assert class_multicharge((0,), [RootOfUnity(12, 5)], u) == (0,)
    xi = [RootOfUnity(12, 0), RootOfUnity(12, 8)]
    assert class_multicharge((0, 1), xi, u) == (0, 2)
    with pytest.raises(ValueError):
        class_multicharge((0, 1), [RootOfUnity(12, 0), RootOfUnity(12, 3)], u)
    with pytest.raises(ValueError):
        class_multicharge((), xi, u)


def test_cyclospec_validation():
    eta = RootOfUnity(12, 4)
    spec = CycloSpec(3, (0, 0, 1), 1, eta)
    assert spec.twist == (0, 1, 2)
    with pytest.raises(ValueError):
        CycloSpec(3, (0, 0), 1, eta)
    with pytest.raises(ValueError):
        CycloSpec(3, (0, 0, 1), 0, eta)
    with pytest.raises(ValueError):
        CycloSpec(5, (0,) * 5, 1, eta)  # 5 does not divide 12
    assert spec.u().exponent == 4
    assert spec.parameter(2).exponent == (2 * 4 + 1 * 4) % 12


def test_defect_general_remark_example():
    mp = parse_multipartition("2|0|0")
    at_eta3 = CycloSpec(3, (0, 0, 1), 1, RootOfUnity(12, 4))
    at_eta3_sq = CycloSpec(3, (0, 0, 1), 1, RootOfUnity(12, 8))
    assert defect_general(mp, at_eta3) == 2
    assert defect_general(mp, at_eta3_sq) == 0


def test_defect_general_semisimple_eta_gives_zero():
    # order-7 evaluation root, small hooks: nothing vanishes
    eta = RootOfUnity(14, 2)
    for mp in enumerate_multipartitions(2, 3):
        spec = CycloSpec(2, (0, 1), 1, eta)
        assert defect_general(mp, spec) == 0


def test_defect_general_integer_encoding_matches_defect_integer():
    # all-zero twist with eta of order e encodes plain integer multicharges
    for l in (1, 2, 3):
        for n in range(0, 5):
            mps = list(enumerate_multipartitions(l, n))
            for e in (2, 3):
                ambient = l * e
                eta = RootOfUnity(ambient, l)
                for s in combinations_with_replacement(range(e), l):
                    spec = CycloSpec(l, s, 1, eta, twist=(0,) * l)
                    for mp in mps:
                        f = schur_factors(mp)
                        if any(h + s[a] - s[b] == 0 for h, a, b in f.pair_factors):
                            with pytest.raises(BadSpecialisationError):
                                defect_general(mp, spec)
                            continue
                        assert defect_general(mp, spec) == defect_integer(mp, s, e)


def test_defect_general_splits_over_classes():
    # the defect is the sum over parameter classes of the class defect of
    # the restricted multipartition with its class multicharge
    specs = [
        # two singleton classes: the omega offset never lands in <u>
        CycloSpec(2, (0, 1), 1, RootOfUnity(12, 4)),
        CycloSpec(2, (0, 0), 1, RootOfUnity(12, 4)),
        # one joint class once n is large enough: u generates Z/6
        CycloSpec(2, (0, 1), 1, RootOfUnity(6, 1)),
        # level 3 at an order-4 root
        CycloSpec(3, (0, 1, 2), 1, RootOfUnity(12, 3)),
    ]
    seen_joint = seen_split = False
    for spec in specs:
        xi = [spec.parameter(a) for a in range(spec.level)]
        u = spec.u()
        e = u.element_order
        for n in (2, 3, 4):
            classes = dipper_mathas_classes(xi, u, n)
            seen_joint |= any(len(c) > 1 for c in classes)
            seen_split |= len(classes) > 1
            for mp in enumerate_multipartitions(spec.level, n):
                total = 0
                for members in classes:
                    sub = Multipartition([mp[a] for a in members])
                    charges = class_multicharge(members, xi, u)
                    total += defect_integer(sub, charges, e)
                assert defect_general(mp, spec) == total, (spec, mp)
    assert seen_joint and seen_split


def test_semisimple_implies_zero_defect():
    for l in (1, 2):
        for e_amb, t in ((22, 2), (26, 2)):
            if e_amb % l:
                continue
            eta = RootOfUnity(e_amb, t)
            for n in range(0, 5):
                charges = tuple(range(l))
                spec = CycloSpec(l, charges, 1, eta)
                xi = [spec.parameter(a) for a in range(l)]
                if not semisimple_check(xi, spec.u(), n):
                    continue
                for mp in enumerate_multipartitions(l, n):
                    assert defect_general(mp, spec) == 0
