"""The group engine: collection, structure, coverings, fingerprints."""

import numpy as np
import pytest

from spinchar.groups import (CollectionError, GroupSchema, Group, SchemaError, Subgroup,
                             check_schema, covering_data, exhaustive_associativity,
                             find_param_isomorphism, get_group,
                             isomorphism_fingerprint, quotient_fingerprint,
                             random_triples_associative, schema,
                             verify_efficient_covering, verify_phi_automorphism)


def test_schema_catalog_guards():
    with pytest.raises(SchemaError):
        schema("NOPE")
    with pytest.raises(SchemaError):
        schema("G27", params=(1, 1))
    with pytest.raises(SchemaError):
        schema("G81_param")


def test_collection_examples():
    g27 = get_group("G27")
    x1, x3 = g27.generator("x1"), g27.generator("x3")
    assert (x3 * x1).exps == (1, 2, 1)
    assert (x1 * g27.identity()) == x1

    r243 = get_group("R243")
    n1, n3 = r243.generator("n1"), r243.generator("n3")
    prod = n3 * n1
    assert prod.exps == (1, 0, 1, 2, 1)
    assert r243.element_str(prod.code) == "z12^1 n1^1 n2^2 n3^1"


def test_commutators_and_conjugation():
    g81 = get_group("G81")
    xi1, xi2, xi3 = (g81.generator(n) for n in ("xi1", "xi2", "xi3"))
    assert xi1.commutator(xi3) == xi2
    assert xi1.commutator(xi2) == g81.generator("z12")
    r243 = get_group("R243")
    n1, n2, n3 = (r243.generator(n) for n in ("n1", "n2", "n3"))
    assert n2.commutator(n3) == r243.generator("z23")
    assert n1.commutator(n3) == n2
    assert n1.commutator(n2) == r243.generator("z12")
    # conjugate(g, h) = h g h^-1 agrees with the schema rule
    assert n1.conjugate_by(n3).exps == (1, 0, 1, 2, 0)
    assert g81.identity().order() == 1
    assert xi1.order() == 3


def test_element_text_round_trip():
    r243 = get_group("R243")
    for code in (0, 1, 100, 242):
        text = r243.element_str(code)
        assert r243.parse_element(text) == code
    assert r243.element_str(0) == "1"
    with pytest.raises(SchemaError):
        r243.parse_element("bogus^1")


def test_cross_schema_operations_rejected():
    g27 = get_group("G27")
    g81 = get_group("G81")
    with pytest.raises(SchemaError):
        g27.generator("x1") * g81.generator("xi1")


def test_enumerated_orders():
    assert len(get_group("G27").enumerate_elements()) == 27
    assert len(get_group("G81").enumerate_elements()) == 81
    assert len(get_group("GBAR").enumerate_elements()) == 81
    assert len(get_group("R243").enumerate_elements()) == 243
    for a in range(3):
        for b in range(3):
            assert len(get_group("G81_param", (a, b)).enumerate_elements()) == 81


def test_gsharp_order_settled_by_enumeration():
    # the presentation prose suggests 81*3; enumeration decides: 243,
    # with the adjoined central generator genuinely of order 9
    gsharp = get_group("GSHARP")
    assert len(gsharp.enumerate_elements()) == 243
    assert gsharp.generator("zeta").order() == 9
    assert (gsharp.generator("zeta") ** 3) == gsharp.generator("z12")


def test_center_and_derived():
    g27 = get_group("G27")
    assert g27.center_codes() == frozenset(g27.code_of((0, e, 0)) for e in range(3))
    r243 = get_group("R243")
    assert r243.center_codes() == frozenset(
        r243.code_of((a, b, 0, 0, 0)) for a in range(3) for b in range(3))
    assert r243.derived_codes() == frozenset(
        r243.code_of((a, b, 0, c, 0))
        for a in range(3) for b in range(3) for c in range(3))
    # outputs are verified subgroups
    t = r243.table
    for codes in (r243.center_codes(), r243.derived_codes()):
        arr = sorted(codes)
        assert all(int(t[a, b]) in codes for a in arr for b in arr)


def test_conjugacy_classes():
    g27 = get_group("G27")
    classes = g27.conjugacy_classes()
    assert len(classes) == 11
    assert sorted(len(m) for _, m in classes) == [1, 1, 1] + [3] * 8
    assert classes[0] == (0, (0,))  # the identity class is a singleton
    for rep, members in classes:
        assert rep == min(members)
    assert len(get_group("R243").conjugacy_classes()) == 35
    assert len(get_group("G81").conjugacy_classes()) == 17
    assert len(get_group("GBAR").conjugacy_classes()) == 17


def test_element_orders_divide_nine():
    for name in ("G27", "G81", "GBAR", "R243", "GSHARP"):
        for o in get_group(name).element_orders():
            assert o in (1, 3, 9)


def test_schema_soundness_and_associativity():
    for name, params in [("G27", None), ("G81", None), ("GBAR", None),
                         ("R243", None), ("GSHARP", None), ("G81_param", (1, 2))]:
        group = get_group(name, params)
        assert check_schema(group) == []
        assert exhaustive_associativity(group.table) is None
    assert random_triples_associative(get_group("GSHARP").table, 10000, seed=5) is None


def test_collection_matches_table():
    rng = np.random.default_rng(99)
    for name in ("G27", "G81", "R243", "GSHARP"):
        group = get_group(name)
        for _ in range(250):
            a, b = (int(x) for x in rng.integers(0, group.order, 2))
            assert group.mult_collect(a, b) == group.table[a, b]


def test_inconsistent_schema_fails_loudly():
    # phi(x3)x1 = x2 does not extend to order 3 on x3: phi^3(x1) != x1
    bad = GroupSchema("BAD", ("x1", "x2", "x3"), central={1},
                      conj_rules={(2, 0): (1,)})
    group = Group(bad)
    try:
        detected = (check_schema(group) != []
                    or exhaustive_associativity(group.table) is not None)
    except CollectionError:
        detected = True  # the engine refused the non-group table outright
    assert detected


def test_efficient_coverings():
    for big, small in [("R243", "G27"), ("R243", "G81"), ("R243", "GBAR"),
                       ("G81", "G27"), ("GBAR", "G27")]:
        gen_map, kernel = covering_data(big, small)
        report = verify_efficient_covering(get_group(big), kernel,
                                           get_group(small), gen_map)
        assert report.passed, (big, small, report.failures)


def test_covering_rejects_wrong_kernel():
    gen_map, _ = covering_data("R243", "G27")
    report = verify_efficient_covering(get_group("R243"), ("z12",),
                                       get_group("G27"), gen_map)
    assert not report.passed


def test_phi_automorphism_all_pairs():
    for a in range(3):
        for b in range(3):
            report = verify_phi_automorphism(a, b)
            assert report.passed, (a, b, report.failures)


def test_param_family_isomorphism_pattern():
    """|G'| = 81 always; brute force shows G' is isomorphic to the covering
    group exactly when b = 0 (four distinct isomorphism classes arise)."""
    fp81 = isomorphism_fingerprint(get_group("G81"))
    classes = set()
    for a in range(3):
        for b in range(3):
            fp = isomorphism_fingerprint(get_group("G81_param", (a, b)))
            assert fp.order == 81
            classes.add(fp.element_orders)
            assert (fp == fp81) == (b == 0)
            iso = find_param_isomorphism(a, b)
            assert (iso is not None) == (b == 0)
    assert len(classes) == 4


def test_fingerprints():
    assert isomorphism_fingerprint(get_group("G81")) == \
        isomorphism_fingerprint(get_group("GBAR"))
    assert isomorphism_fingerprint(get_group("G27")) != \
        isomorphism_fingerprint(get_group("G81"))
    r243 = get_group("R243")
    assert quotient_fingerprint(r243, ["z12"]) == \
        isomorphism_fingerprint(get_group("GBAR"))
    assert quotient_fingerprint(r243, ["z23"]) == \
        isomorphism_fingerprint(get_group("G81"))


def test_subgroup_helper():
    g81 = get_group("G81")
    U = Subgroup.generated(g81, ["z12", "xi1", "xi2"])
    assert U.order == 27
    assert not U.is_abelian()
    U0 = Subgroup.generated(g81, ["z12", "xi1"])
    assert U0.order == 9 and U0.is_abelian()
