import pytest

from blocklab.exactfield import BitMatrix, lowest_irreducible
from blocklab.glcat import (
    CENTRALIZER_STATEMENTS,
    KNOWN_ERRATA,
    CatalogueError,
    MatGroupGF2,
    action_invariants,
    all_subgroups,
    build_catalogue,
    catalogue_entry,
    close,
    computed_centralizer_log2,
    diagram_to_dot,
    frobenius_matrix,
    global_fixed_space,
    inclusion_diagram,
    is_faithful_odd,
    is_normal_subgroup,
    singer_cycle,
    subgroup_action_equivalent,
    subgroup_as_matgroup,
)


# -- closure and singer cycles ------------------------------------------------

def test_close_trivial_and_singer():
    assert close([], n=6).order == 1
    assert close([BitMatrix.identity(6)]).order == 1
    assert close([singer_cycle(6)]).order == 63


def test_close_of_the_mixed_order7_action():
    a = BitMatrix.companion(lowest_irreducible(3))
    g = BitMatrix.block_diag(a, a.pow(3))
    grp = close([g])
    assert grp.order == 7
    assert subgroup_action_equivalent(grp, catalogue_entry("(C7)_3").group)


def test_singer_cycle_orders_and_powers():
    for n in range(1, 9):
        assert singer_cycle(n).order() == (1 << n) - 1
    s = singer_cycle(6)
    for power, order, fixed in ((21, 3, 0), (9, 7, 0), (3, 21, 0), (7, 9, 0)):
        m = s.pow(power)
        assert m.order() == order
        assert global_fixed_space(close([m])).nrows == fixed


def test_closure_cap():
    with pytest.raises(CatalogueError):
        MatGroupGF2(6, [singer_cycle(6)], cap=10)


# -- catalogue ----------------------------------------------------------------

def test_catalogue_has_38_validated_entries():
    cat = build_catalogue()
    assert len(cat) == 38
    assert len({e.label for e in cat}) == 38
    for e in cat:
        assert is_faithful_odd(e.group)
        assert e.group.order % 2 == 1


def test_catalogue_fixed_dims_from_bullet_list():
    assert computed_centralizer_log2("(C3)_1", "E") == 4
    assert computed_centralizer_log2("(F21)_2", "E") == 1
    assert computed_centralizer_log2("(C15)_3", "E") == 0
    assert computed_centralizer_log2("(C15)_3", "C3") == 0
    assert computed_centralizer_log2("(C7)_1", "E") == 3


def test_centralizer_statement_table():
    mismatches = []
    for label, subject, stated in CENTRALIZER_STATEMENTS:
        got = computed_centralizer_log2(label, subject)
        if got != stated:
            mismatches.append((label, subject, stated, got))
    # exactly the one known discrepancy in the bullet list
    assert mismatches == [("(C21)_1", "E", 3, 1)]
    for (label, subject, stated), (rl, rs, rv) in KNOWN_ERRATA.items():
        assert computed_centralizer_log2(rl, rs) == rv


def test_action_invariants_examples():
    triv = close([], n=6)
    inv = action_invariants(triv)
    assert inv.fixed_space_dim_histogram == ((6, 1),)
    assert inv.orbit_sizes == ((1, 64),)

    c7_1 = catalogue_entry("(C7)_1")
    assert action_invariants(c7_1.group).global_fixed_dim == 3

    c63 = catalogue_entry("C63")
    assert action_invariants(c63.group).orbit_sizes == ((1, 1), (63, 1))


def test_orbit_sizes_sum_to_64():
    for e in build_catalogue():
        inv = action_invariants(e.group)
        assert sum(size * mult for size, mult in inv.orbit_sizes) == 64
        assert dict(inv.fixed_space_dim_histogram).get(6, 0) == 1


def test_is_faithful_odd_negatives():
    assert is_faithful_odd(close([BitMatrix.identity(6)]))
    swap = BitMatrix.from_rows([[0, 1], [1, 0]])
    assert not is_faithful_odd(close([swap]))


# -- equivalence --------------------------------------------------------------

def test_equivalence_reflexive_and_singer_cube_root():
    e = catalogue_entry("(C3)_3")
    assert subgroup_action_equivalent(e.group, e.group)
    sub = close([singer_cycle(6).pow(21)])
    assert subgroup_action_equivalent(e.group, sub)


def test_c7_2_and_c7_3_are_inequivalent():
    a = catalogue_entry("(C7)_2").group
    b = catalogue_entry("(C7)_3").group
    assert not subgroup_action_equivalent(a, b)


def test_equivalence_invariant_under_conjugation():
    import random
    rng = random.Random(7)
    from blocklab.exactfield import rref_gf2
    while True:
        t = BitMatrix([rng.getrandbits(6) for _ in range(6)], 6)
        if rref_gf2(t)[1] == 6:
            break
    tinv = t.inverse()
    for label in ("(C3xC3)_2", "(F21)_2", "C7:C9"):
        e = catalogue_entry(label).group
        conj = close([tinv * g * t for g in e.generators])
        assert subgroup_action_equivalent(e, conj)
        assert action_invariants(e).charpoly_multiset == action_invariants(conj).charpoly_multiset


def test_distinct_line_structure_of_c3xc3_classes():
    # an independently built three-distinct-lines representative
    w = BitMatrix.companion(lowest_irreducible(2))
    i2 = BitMatrix.identity(2)
    g1 = BitMatrix.block_diag(w, i2, w)
    g2 = BitMatrix.block_diag(i2, w, w)
    rep = close([g1, g2])
    assert subgroup_action_equivalent(rep, catalogue_entry("(C3xC3)_2").group)
    assert not subgroup_action_equivalent(rep, catalogue_entry("(C3xC3)_3").group)


def test_f21_subgroup_actions_match_their_definitions():
    # (F21)_3: the unique C7 acts like (C7)_2; (F21)_4: like (C7)_3
    for label, c7label in (("(F21)_3", "(C7)_2"), ("(F21)_4", "(C7)_3")):
        e = catalogue_entry(label).group
        c7_elems = [g for g in e.elements if not g.is_identity() and g.order() == 7]
        sub = MatGroupGF2(6, c7_elems, cap=8)
        assert sub.order == 7
        assert subgroup_action_equivalent(sub, catalogue_entry(c7label).group)


def test_f21xc3_central_c21_actions():
    for label, c21label in (("(F21xC3)_1", "(C21)_1"), ("(F21xC3)_2", "(C21)_2")):
        e = catalogue_entry(label).group
        # the unique C21 is generated by the order-21 elements with centralizing behavior:
        # in F21 x C3 every element of order 21 lies in the unique cyclic C21
        c21_elems = [g for g in e.elements if g.order() == 21]
        sub = MatGroupGF2(6, c21_elems, cap=64)
        assert sub.order == 21
        assert subgroup_action_equivalent(sub, catalogue_entry(c21label).group)


def test_pairwise_inequivalence_of_equal_order_entries():
    cat = build_catalogue()
    for i, a in enumerate(cat):
        for b in cat[i + 1:]:
            if a.group.order != b.group.order:
                continue
            assert not subgroup_action_equivalent(a.group, b.group), (a.label, b.label)


# -- subgroup machinery --------------------------------------------------------

def test_all_subgroups_of_f21():
    grp = catalogue_entry("(F21)_1").group
    subs = all_subgroups(grp)
    by_order = {}
    for s in subs:
        by_order[len(s)] = by_order.get(len(s), 0) + 1
    # F21: 1 trivial, 7 of order 3, 1 of order 7, 1 whole group
    assert by_order == {1: 1, 3: 7, 7: 1, 21: 1}
    c7 = next(s for s in subs if len(s) == 7)
    assert is_normal_subgroup(grp, c7)
    c3 = next(s for s in subs if len(s) == 3)
    assert not is_normal_subgroup(grp, c3)


# -- inclusion diagram ----------------------------------------------------------

def test_diagram_examples():
    edges = inclusion_diagram()
    styles = {(e.from_label, e.to_label): e.style for e in edges}
    assert ("(C3)_3", "(C15)_3") in styles
    assert styles[("(C7)_2", "(C21)_2")] == "solid"
    assert ("(C7)_2", "(C7)_3") not in styles
    assert ("(C7)_3", "(C7)_2") not in styles
    for e in edges:
        assert e.from_label != "1" and e.to_label != "1"
        h = catalogue_entry(e.from_label).group.order
        k = catalogue_entry(e.to_label).group.order
        assert k % h == 0 and (k // h) in (3, 5, 7, 11, 13, 31)


def test_dot_output_well_formed():
    dot = diagram_to_dot()
    assert dot.startswith("digraph")
    assert dot.count("{") == dot.count("}")
    assert dot.rstrip().endswith("}")
    for e in inclusion_diagram():
        assert f'"{e.from_label}" -> "{e.to_label}" [style={e.style}];' in dot
    # every node declared once, in catalogue order
    pos = [dot.index(f'"{entry.label}" [label=') for entry in build_catalogue()]
    assert pos == sorted(pos)
