"""Fiber classification table, catalog multiplicities, log transforms."""

import random
from fractions import Fraction

import pytest

from torsorkit.errors import DegenerateModel, UnsupportedType
from torsorkit.kodaira import (
    KodairaType,
    WeierstrassModel,
    catalog,
    classify_fiber,
    component_multiplicities,
    discriminant,
    fiber_report,
    log_transform,
    minimalize,
)
from torsorkit.laurent import LaurentPoly


def model(a, b):
    return WeierstrassModel(LaurentPoly(a), LaurentPoly(b))


def test_discriminant_examples():
    # a = -3, b = 2 + t: Delta = -432 t (4 + t)
    d = discriminant(model({0: -3}, {0: 2, 1: 1}))
    assert d == LaurentPoly({1: -1728, 2: -432})
    assert discriminant(model({}, {1: 1})) == LaurentPoly({2: -432})
    assert discriminant(model({1: 1}, {})) == LaurentPoly({3: -64})


def test_degenerate_model_rejected():
    with pytest.raises(DegenerateModel):
        discriminant(model({0: -3}, {0: 2}))  # 4*(-27) + 27*4 = 0
    with pytest.raises(DegenerateModel):
        discriminant(model({}, {}))


def test_coefficient_poles_are_unclassifiable():
    # negative valuations cannot be minimalized away; the table must refuse
    from torsorkit.errors import UnclassifiedValuations

    with pytest.raises(UnclassifiedValuations):
        classify_fiber(model({-4: 1}, {}))
    with pytest.raises(UnclassifiedValuations):
        classify_fiber(model({-2: -3}, {-3: 2, -2: 1}))
    # t^-1-twist of an I12 model: vd == 0 but the model is not integral,
    # so it must NOT be reported as a smooth fiber
    with pytest.raises(UnclassifiedValuations):
        classify_fiber(model({-4: -3}, {-6: 2, 6: 1}))


def test_minimalize():
    m = minimalize(model({4: 1}, {6: 1}))
    assert m.a == LaurentPoly({0: 1}) and m.b == LaurentPoly({0: 1})
    already = model({1: 1}, {2: 5})
    m2 = minimalize(already)
    assert m2.a == already.a and m2.b == already.b
    m3 = minimalize(model({}, {7: 1}))
    assert m3.a.is_zero() and m3.b == LaurentPoly({1: 1})


def test_minimalize_idempotent_and_type_preserving():
    rng = random.Random(9)
    for _ in range(50):
        a = LaurentPoly({rng.randint(0, 3): Fraction(rng.randint(1, 5))})
        b = LaurentPoly({rng.randint(0, 5): Fraction(rng.randint(1, 5))})
        m = WeierstrassModel(a, b)
        try:
            t1 = classify_fiber(m)
        except DegenerateModel:
            continue
        mm = minimalize(m)
        assert minimalize(mm) == mm
        assert classify_fiber(mm) == t1


CLASSIFY_CASES = [
    ({0: -3}, {0: 2, 1: 1}, "I1"),
    ({0: -3}, {0: 2, 2: 1}, "I2"),
    ({0: -3}, {0: 2, 3: 1}, "I3"),
    ({}, {1: 1}, "II"),
    ({1: 1}, {}, "III"),
    ({}, {2: 1}, "IV"),
    ({2: 1}, {3: 1}, "I0*"),
    ({2: -3}, {3: 2, 4: 1}, "I1*"),
    ({}, {4: 1}, "IV*"),
    ({3: 1}, {}, "III*"),
    ({}, {5: 1}, "II*"),
    ({0: -3}, {0: 1}, "I0"),
]


@pytest.mark.parametrize("a,b,tag", CLASSIFY_CASES)
def test_classify_examples(a, b, tag):
    assert classify_fiber(model(a, b)).tag == tag


def test_classify_quadratic_twist_family():
    # twisting I_n by t gives I_n*: a -> t^2 a, b -> t^3 b
    assert classify_fiber(model({2: 0}, {3: 1})).tag == "I0*"  # twist of y^2 = x^3 + 1
    for n in range(1, 6):
        twisted = model({2: -3}, {3: 2, n + 3: 1})
        data = fiber_report(twisted)
        assert data.kodaira.tag == f"I{n}*"
        assert data.v_delta == 6 + n
        assert data.component_count == n + 5


def test_unit_rescaling_invariance():
    rng = random.Random(13)
    cases = [model(a, b) for a, b, _ in CLASSIFY_CASES]
    tags = [classify_fiber(m).tag for m in cases]
    for _ in range(100):
        u = Fraction(rng.randint(1, 9) * rng.choice((1, -1)), rng.randint(1, 9))
        for m, tag in zip(cases, tags):
            scaled = WeierstrassModel(m.a * u**4, m.b * u**6)
            assert classify_fiber(scaled).tag == tag


# Kodaira catalog vectors, frozen from the classical classification table;
# the dual-graph cross-checks below tie them to v(Delta) and component counts.
CATALOG = {
    "I0": (1,),
    "I1": (1,),
    "I5": (1, 1, 1, 1, 1),
    "II": (1,),
    "III": (1, 1),
    "IV": (1, 1, 1),
    "I0*": (1, 1, 1, 1, 2),
    "I3*": (1, 1, 1, 1, 2, 2, 2, 2),
    "IV*": (1, 1, 1, 2, 2, 2, 3),
    "III*": (1, 1, 2, 2, 2, 3, 3, 4),
    "II*": (1, 2, 2, 3, 3, 4, 4, 5, 6),
}


def _type_from_tag(tag):
    if tag.endswith("*") and tag.startswith("I") and tag[1:-1].isdigit():
        return KodairaType("I*", int(tag[1:-1]))
    if tag.startswith("I") and tag[1:].isdigit():
        return KodairaType("I", int(tag[1:]))
    return KodairaType(tag)


@pytest.mark.parametrize("tag,vector", sorted(CATALOG.items()))
def test_component_multiplicities_catalog(tag, vector):
    assert component_multiplicities(_type_from_tag(tag)).entries == vector


def test_multiplicities_of_multiple_fibers():
    assert component_multiplicities(KodairaType("I", 2, m=3)).entries == (3, 3)
    assert component_multiplicities(KodairaType("I", 0, m=2)).entries == (2,)


def test_euler_number_bookkeeping():
    # multiplicative: v(Delta) = n = component count; additive: components + 1
    for row in catalog():
        kt = row.kodaira
        if kt.m != 1:
            assert row.v_delta is None
            continue
        if kt.family == "I":
            assert row.v_delta == kt.n
            assert row.component_count == max(kt.n, 1)
        else:
            assert row.v_delta == row.component_count + 1


def test_v_delta_hits_each_row_randomized():
    rng = random.Random(21)
    for _ in range(30):
        u = Fraction(rng.randint(1, 7))
        rows = {
            "II": (model({}, {1: u}), 2),
            "III": (model({1: u}, {}), 3),
            "IV": (model({}, {2: u}), 4),
            "I0*": (model({2: u}, {3: u}), 6),
            "IV*": (model({}, {4: u}), 8),
            "III*": (model({3: u}, {}), 9),
            "II*": (model({}, {5: u}), 10),
        }
        for tag, (m, vd) in rows.items():
            data = fiber_report(m)
            assert data.kodaira.tag == tag
            assert data.v_delta == vd
        n = rng.randint(1, 12)
        data = fiber_report(model({0: -3}, {0: 2, n: u}))
        assert data.kodaira.tag == f"I{n}" and data.v_delta == n


def test_log_transform():
    assert log_transform(KodairaType("I", 0), 2).tag == "2I0"
    assert log_transform(KodairaType("I", 2), 3).tag == "3I2"
    with pytest.raises(UnsupportedType):
        log_transform(KodairaType("II"), 2)
    with pytest.raises(UnsupportedType):
        log_transform(KodairaType("I", 1, m=2), 3)  # already multiple
    with pytest.raises(ValueError):
        log_transform(KodairaType("I", 1), 1)


def test_fiber_report_examples():
    data = fiber_report(model({}, {5: 1}))
    assert data.kodaira.tag == "II*" and data.min == 1 and data.gcd == 1
    data = fiber_report(model({0: -3}, {0: 2, 3: 1}))
    assert data.kodaira.tag == "I3"
    assert data.multiplicities.entries == (1, 1, 1)
    data = fiber_report(model({0: -3}, {0: 1}))
    assert data.kodaira.tag == "I0" and data.component_count == 1


def test_min_equals_gcd_across_catalog():
    for row in catalog(i_max=20, star_max=20, m_max=6, multiple_n_max=10):
        assert row.min == row.gcd
        if row.kodaira.m == 1:
            assert row.gcd == 1
        else:
            assert row.gcd == row.kodaira.m
