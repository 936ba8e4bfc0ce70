import random

import numpy as np
import pytest

from blocklab.exactfield import BitMatrix, lowest_irreducible
from blocklab.glcat import subgroup_action_equivalent, catalogue_entry
from blocklab.grpcore import (
    ConcreteGroup,
    SdpGroup,
    central_extension_group,
    cyclic_group,
    direct_product,
    extraspecial_27_exponent9,
    from_matgroup,
    group_spec_of,
    heisenberg,
    klein_a4,
    model_group,
    parse_group_spec,
    perm_group,
    registry,
    sg729_group,
)

rng = random.Random(99)


# -- concrete groups -----------------------------------------------------------

def test_cyclic_and_product():
    c3 = cyclic_group(3)
    assert c3.order == 3 and c3.exponent() == 3
    c15 = direct_product(cyclic_group(5), c3)
    assert c15.order == 15 and c15.exponent() == 15


def test_heisenberg_groups():
    h3 = heisenberg(3)
    assert h3.order == 27 and h3.exponent() == 3
    assert len(h3.conjugacy_classes()[0]) == 11
    h7 = heisenberg(7)
    assert h7.order == 343 and h7.exponent() == 7
    assert len(h7.conjugacy_classes()[0]) == 55  # p^2 + p - 1


def test_extraspecial_27_exponent9():
    g = extraspecial_27_exponent9()
    assert g.order == 27 and g.exponent() == 9
    assert len(g.conjugacy_classes()[0]) == 11


def test_sg729_structure():
    P = sg729_group()
    assert P.order == 729
    assert P.exponent() == 3
    # random associativity spot checks of the collected multiplication
    for _ in range(500):
        x, y, z = (rng.randrange(729) for _ in range(3))
        assert P.table[P.table[x, y], z] == P.table[x, P.table[y, z]]
    # center = derived subgroup = <c1, c2, c3>, order 27
    idx = {e: i for i, e in enumerate(P.elements)}
    center = [x for x in range(729)
              if all(P.table[x, y] == P.table[y, x] for y in range(729))]
    assert len(center) == 27
    assert all(P.elements[x][:3] == (0, 0, 0) for x in center)
    # N = <a1, a2, F'> is (C3)^2 x 3^{1+2}+, with complement <a3>
    a1 = idx[(1, 0, 0, 0, 0, 0)]
    a2 = idx[(0, 1, 0, 0, 0, 0)]
    a3 = idx[(0, 0, 1, 0, 0, 0)]
    c1 = idx[(0, 0, 0, 1, 0, 0)]
    c2 = idx[(0, 0, 0, 0, 1, 0)]
    s = P.subgroup_closure([a1, a2])
    assert len(s) == 27  # 3^{1+2}+ inside
    k12 = P.subgroup_closure([c1, c2])
    assert len(k12) == 9 and len(s & k12) == 1
    n = P.subgroup_closure([a1, a2, c1, c2])
    assert len(n) == 243
    assert P.element_orders()[a3] == 3 and a3 not in n
    # 105 conjugacy classes
    assert len(P.conjugacy_classes()[0]) == 105


# -- semidirect products ---------------------------------------------------------

def test_a4_classes_and_centralizers():
    a4 = klein_a4()
    c = a4.conjugacy_classes()
    assert c.count == 4
    assert sorted(c.sizes.tolist()) == [1, 3, 4, 4]
    order3 = [int(r) for r, o in zip(c.reps, c.orders) if o == 3]
    assert a4.centralizer_order(order3[0]) == 3
    assert a4.centralizer_order(0) == 12


def test_trivial_complement_classes():
    g = model_group("1")
    assert g.order == 64
    assert g.conjugacy_classes().count == 64


def test_singer_model_group():
    g = model_group("C63")
    c = g.conjugacy_classes()
    assert c.count == 64
    assert int(c.regular.sum()) == 63
    singer_gen = g.encode(0, g.P.gens[0])
    assert g.centralizer_order(singer_gen) == 63
    assert g.element_order(singer_gen) == 63


def test_power_map():
    g = model_group("(C3)_1")
    c = g.conjugacy_classes()
    pm_full = g.power_map(g.exponent())
    ident_class = int(c.class_of[0])
    assert all(int(p) == ident_class for p in pm_full)
    pm1 = g.power_map(1)
    assert list(pm1) == list(range(c.count))
    # raising to the 2-part of the exponent lands exactly on the 2-regular classes
    pm_odd = g.power_map(64)
    image = {int(x) for x in pm_odd}
    regular = {i for i in range(c.count) if c.regular[i]}
    assert image == regular
    for i in range(c.count):
        assert bool(c.regular[int(pm_odd[i])])


def test_mul_inv_vectorized_consistency():
    g = model_group("(C7)_2")
    elems = np.arange(g.order, dtype=np.int64)
    sample = elems[rng.sample(range(g.order), 50)]
    inv = g.inv(sample)
    prod = g.mul(sample, inv)
    assert not prod.any()
    a, b, c = (int(sample[i]) for i in (0, 1, 2))
    assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))


def test_quotient_and_fusion_for_a4():
    a4 = klein_a4()
    q, fusion = a4.quotient_by_O2()
    assert q.order == 3
    c = a4.conjugacy_classes()
    # the two order-3 classes fuse to the two nontrivial classes of C3
    images = sorted(int(fusion.image_class[i]) for i in range(c.count) if c.orders[i] == 3)
    q_classes = q.conjugacy_classes()[0]
    assert len(set(images)) == 2
    # identity and the involution class both land on the trivial class
    triv = [int(fusion.image_class[i]) for i in range(c.count) if c.orders[i] in (1, 2)]
    assert set(triv) == {0}
    assert int(fusion.multiplicity[int(c.class_of[0])]) == 1


def test_fusion_center_map_is_multiplicative():
    # the projection to Q = G/D sends each class sum to an integer multiple of a
    # Q-class sum (uniform fibers), and respects products of class sums.
    g = model_group("(C3)_2")
    c = g.conjugacy_classes()
    q, fusion = g.quotient_by_O2()
    _, qsizes, qclass_of = q.conjugacy_classes()

    for i in range(c.count):
        members = np.nonzero(c.class_of == i)[0]
        pparts = members % g.nP
        assert set(qclass_of[pparts].tolist()) == {int(fusion.image_class[i])}
        counts = np.bincount(pparts, minlength=g.nP)
        target = np.nonzero(qclass_of == int(fusion.image_class[i]))[0]
        assert all(int(counts[t]) == int(fusion.multiplicity[i]) for t in target)

    def push(elements):
        """Multiset of images in Q, as a count vector over Q-elements."""
        return np.bincount(elements % g.nP, minlength=g.nP)

    for _ in range(20):
        i, j = rng.randrange(c.count), rng.randrange(c.count)
        mi = np.nonzero(c.class_of == i)[0]
        mj = np.nonzero(c.class_of == j)[0]
        lhs = push(g.mul(mi[:, None], mj[None, :]).ravel())
        pi, pj = push(mi), push(mj)
        rhs = np.zeros(g.nP, dtype=np.int64)
        for u in np.nonzero(pi)[0]:
            for v in np.nonzero(pj)[0]:
                rhs[q.table[u, v]] += int(pi[u]) * int(pj[v])
        assert np.array_equal(lhs, rhs)


def test_inertial_quotients():
    g = model_group("(C7)_3")
    iq = g.inertial_quotient()
    assert subgroup_action_equivalent(iq, catalogue_entry("(C7)_3").group)

    trivial = model_group("1")
    assert trivial.inertial_quotient().order == 1

    ex63_1 = central_extension_group("ex63_1")
    assert ex63_1.inertial_quotient().order == 45


def test_registry_orders_and_kernels():
    for entry in registry():
        g = central_extension_group(entry.label)
        assert g.order == entry.expected_order, entry.label
        assert g.inertial_quotient().order == entry.expected_iq_order, entry.label


def test_ex64_action_factors_through_c3xc3():
    g = central_extension_group("ex64")
    iq = g.inertial_quotient()
    assert iq.order == 9
    assert subgroup_action_equivalent(iq, catalogue_entry("(C3xC3)_3").group)


def test_ex61_image_types():
    b1 = central_extension_group("ex61_b1")
    assert subgroup_action_equivalent(b1.inertial_quotient(), catalogue_entry("(C3xC3)_1").group)
    b2 = central_extension_group("ex61_b2")
    assert subgroup_action_equivalent(b2.inertial_quotient(), catalogue_entry("(C3)^3").group)


def test_ex65_image_is_coordinate_c3_cubed():
    g = central_extension_group("ex65")
    assert subgroup_action_equivalent(g.inertial_quotient(), catalogue_entry("(C3)^3").group)


def test_nonhomomorphic_action_rejected():
    from blocklab.glcat import singer_cycle
    with pytest.raises(ValueError):
        # an order-3 generator acting by an order-63 matrix is no homomorphism
        SdpGroup(6, cyclic_group(3), [singer_cycle(6)], name="bad")


def test_group_spec_roundtrip():
    g = central_extension_group("ex63_2")
    text = group_spec_of(g)
    g2 = parse_group_spec(text)
    assert g2.order == g.order
    assert g2.conjugacy_classes().count == g.conjugacy_classes().count
    assert subgroup_action_equivalent(g2.inertial_quotient(), g.inertial_quotient())


def test_group_spec_matrix_generators():
    text = """
    {"n": 2, "name": "A4",
     "generators": [{"matrix": [[0, 1], [1, 1]], "action": [[0, 1], [1, 1]]}]}
    """
    g = parse_group_spec(text)
    assert g.order == 12
    assert g.conjugacy_classes().count == 4
