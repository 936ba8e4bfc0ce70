"""Finite groups (C_2)^n x| P with P of odd order, their conjugacy classes,
class fusion to P, and the registry of central-extension groups whose block
theory the harness verifies.

P is carried as a ConcreteGroup: an element list plus a Cayley table, built
from permutations, matrices, direct products, or an explicit collected
multiplication (used for the order-729 central extension).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Callable, Sequence

import numpy as np

from .exactfield import BitMatrix, lowest_irreducible, rref_gf2
from .glcat import (
    MatGroupGF2,
    catalogue_entry,
    frobenius_matrix,
    mult_matrix,
    singer_cycle,
)


# ---------------------------------------------------------------------------
# concrete finite groups
# ---------------------------------------------------------------------------

class ConcreteGroup:
    """Finite group as (element keys, Cayley table); index 0 is the identity."""

    def __init__(self, elements: Sequence, table: np.ndarray, gen_indices: Sequence[int],
                 name: str = ""):
        self.elements = list(elements)
        self.table = np.asarray(table, dtype=np.int32)
        self.gens = list(gen_indices)
        self.name = name
        self._inv: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self._classes: tuple | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def inverses(self) -> np.ndarray:
        if self._inv is None:
            k = self.order
            inv = np.empty(k, dtype=np.int32)
            rows, cols = np.nonzero(self.table == 0)
            inv[rows] = cols
            self._inv = inv
        return self._inv

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            k = self.order
            orders = np.ones(k, dtype=np.int64)
            cur = np.arange(k, dtype=np.int32)
            base = np.arange(k, dtype=np.int32)
            remaining = cur != 0
            n = 1
            while remaining.any():
                cur = self.table[cur, base]
                n += 1
                newly = remaining & (cur == 0)
                orders[newly] = n
                remaining &= cur != 0
            orders[0] = 1
            self._orders = orders
        return self._orders

    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders()))

    def conjugacy_classes(self) -> tuple[list[int], np.ndarray, np.ndarray]:
        """(class reps as least indices, class sizes, class_of array)."""
        if self._classes is None:
            k = self.order
            tab, inv = self.table, self.inverses()
            class_of = np.full(k, -1, dtype=np.int32)
            reps: list[int] = []
            sizes = []
            for x in range(k):
                if class_of[x] >= 0:
                    continue
                cls = len(reps)
                stack = [x]
                class_of[x] = cls
                members = 1
                while stack:
                    y = stack.pop()
                    for g in range(k):
                        z = int(tab[g, tab[y, inv[g]]])
                        if class_of[z] < 0:
                            class_of[z] = cls
                            members += 1
                            stack.append(z)
                reps.append(x)
                sizes.append(members)
            self._classes = (reps, np.array(sizes, dtype=np.int64), class_of)
        return self._classes

    def subgroup_closure(self, seed: Sequence[int]) -> set[int]:
        elems = {0} | {int(s) for s in seed}
        frontier = list(elems)
        while frontier:
            new = []
            for x in frontier:
                for g in seed:
                    y = int(self.table[x, g])
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return elems

    def __repr__(self) -> str:
        return f"ConcreteGroup({self.name or 'unnamed'}, order={self.order})"


def _closure_from_generators(gens: Sequence, mul: Callable, identity, name: str) -> ConcreteGroup:
    index = {identity: 0}
    elements = [identity]
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    new.append(y)
        frontier = new
    k = len(elements)
    table = np.empty((k, k), dtype=np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[mul(a, b)]
    gen_indices = [index[g] for g in gens]
    return ConcreteGroup(elements, table, gen_indices, name)


def perm_group(gens: Sequence[tuple[int, ...]], name: str = "") -> ConcreteGroup:
    """Group generated by permutations given as images tuples (0-based)."""
    if not gens:
        return ConcreteGroup([()], np.zeros((1, 1), dtype=np.int32), [], name)
    npts = len(gens[0])
    ident = tuple(range(npts))

    def mul(a, b):  # apply a first, then b
        return tuple(b[a[i]] for i in range(npts))

    return _closure_from_generators(list(gens), mul, ident, name)


def cyclic_group(n: int, name: str = "") -> ConcreteGroup:
    if n == 1:
        return perm_group([], name or f"C{n}")
    shift = tuple((i + 1) % n for i in range(n))
    return perm_group([shift], name or f"C{n}")


def from_matgroup(mg: MatGroupGF2, name: str = "") -> ConcreteGroup:
    table = mg.cayley()
    gen_indices = [mg.index[g] for g in mg.generators] or []
    return ConcreteGroup(list(mg.elements), table, gen_indices, name or (mg.name or ""))


def direct_product(a: ConcreteGroup, b: ConcreteGroup, name: str = "") -> ConcreteGroup:
    """Product group; element (i, j) gets index i * |b| + j."""
    ka, kb = a.order, b.order
    ta = a.table.astype(np.int64)
    tb = b.table.astype(np.int64)
    t = (ta[:, None, :, None] * kb + tb[None, :, None, :]).reshape(ka * kb, ka * kb)
    elements = [(a.elements[i], b.elements[j]) for i in range(ka) for j in range(kb)]
    gen_indices = [gi * kb for gi in a.gens] + [gj for gj in b.gens]
    return ConcreteGroup(elements, t, gen_indices, name)


def heisenberg(p: int, name: str = "") -> ConcreteGroup:
    """Extraspecial group p^{1+2} of exponent p, as permutations of p^2 points."""
    pts = [(u, w) for u in range(p) for w in range(p)]
    idx = {pt: i for i, pt in enumerate(pts)}
    a = tuple(idx[((u + 1) % p, w)] for (u, w) in pts)
    b = tuple(idx[(u, (w + u) % p)] for (u, w) in pts)
    return perm_group([a, b], name or f"{p}^(1+2)+")


def extraspecial_27_exponent9(name: str = "3^(1+2)-") -> ConcreteGroup:
    """C9 x| C3 with the generator acting as u -> 4u, on 9 points."""
    x = tuple((u + 1) % 9 for u in range(9))
    c = tuple((4 * u) % 9 for u in range(9))
    return perm_group([x, c], name)


# -- the order-729 group ((C3)^2 x 3^{1+2}+) x| C3 ----------------------------

# The free class-2 exponent-3 group on generators a1, a2, a3: elements are
# normal words a1^e1 a2^e2 a3^e3 c1^f1 c2^f2 c3^f3 with central commutators
# c1 = [a2,a3], c2 = [a3,a1], c3 = [a1,a2].  It splits as
# (<c1,c2> x <a1,a2,c3>) x| <a3> = ((C3)^2 x 3^{1+2}+) x| C3, and its derived
# subgroup <c1,c2,c3> is the kernel of the coordinate action on (C_2)^6.
def _sg729_mul(x: tuple, y: tuple) -> tuple:
    e1, e2, e3, f1, f2, f3 = x
    d1, d2, d3, g1, g2, g3 = y
    return (
        (e1 + d1) % 3,
        (e2 + d2) % 3,
        (e3 + d3) % 3,
        (f1 + g1 - e3 * d2) % 3,
        (f2 + g2 + e3 * d1) % 3,
        (f3 + g3 - e2 * d1) % 3,
    )


def sg729_group(name: str = "SmallGroup(729,122)") -> ConcreteGroup:
    gens = [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)]
    return _closure_from_generators(gens, _sg729_mul, (0, 0, 0, 0, 0, 0), name)


# ---------------------------------------------------------------------------
# semidirect products (C_2)^n x| P
# ---------------------------------------------------------------------------

@dataclass
class ConjClasses:
    reps: np.ndarray          # encoded representatives (least element per class)
    sizes: np.ndarray
    class_of: np.ndarray      # length |G|
    orders: np.ndarray        # order of each representative
    regular: np.ndarray       # bool: representative has odd order

    @property
    def count(self) -> int:
        return len(self.reps)


@dataclass
class FusionMap:
    target: "ConcreteGroup"
    image_class: np.ndarray    # per G-class: index of target class
    multiplicity: np.ndarray   # per G-class: |K| / |image class|


class SdpGroup:
    """The group (C_2)^n x| P for a ConcreteGroup P acting through GF(2) matrices.

    Elements are encoded as v * |P| + p. The action is stored as permutation
    arrays act[p] of F_2^n (matrices act on row vectors), validated to define a
    homomorphism on the Cayley-graph edges of P.
    """

    def __init__(self, n: int, P: ConcreteGroup, action_of_gens: Sequence[BitMatrix],
                 name: str = ""):
        if len(action_of_gens) != len(P.gens):
            raise ValueError("need one action matrix per generator of P")
        self.n = n
        self.P = P
        self.name = name
        self.nP = P.order
        self.order = (1 << n) * self.nP
        self.action_of_gens = tuple(action_of_gens)
        self.act = self._build_action()
        self._classes: ConjClasses | None = None

    # -- action --------------------------------------------------------------
    def _build_action(self) -> np.ndarray:
        n, P = self.n, self.P
        size = 1 << n
        act = np.full((P.order, size), -1, dtype=np.int32)
        act[0] = np.arange(size, dtype=np.int32)
        gen_arrays = {}
        for gi, mat in zip(P.gens, self.action_of_gens):
            if mat.nrows != n or mat.ncols != n:
                raise ValueError("action matrix has wrong shape")
            if rref_gf2(mat)[1] != n:
                raise ValueError("action matrix is singular")
            gen_arrays[gi] = np.fromiter((mat.row_vector(v) for v in range(size)),
                                         count=size, dtype=np.int32)
        # BFS over P, defining act[x*g] = act[x] o act[g] (apply g's array first)
        frontier = [0]
        defined = np.zeros(P.order, dtype=bool)
        defined[0] = True
        while frontier:
            new = []
            for x in frontier:
                for gi in P.gens:
                    y = int(P.table[x, gi])
                    composed = act[x][gen_arrays[gi]]
                    if not defined[y]:
                        act[y] = composed
                        defined[y] = True
                        new.append(y)
                    elif not np.array_equal(act[y], composed):
                        raise ValueError(f"{self.name}: action map is not a homomorphism")
            frontier = new
        if not defined.all():
            raise ValueError("generators do not generate P")
        return act

    def action_matrix(self, p: int) -> BitMatrix:
        """Matrix (row-vector convention) of the action of P-element p."""
        return BitMatrix([int(self.act[p, 1 << i]) for i in range(self.n)], self.n)

    # -- arithmetic on encoded elements --------------------------------------
    def encode(self, v: int, p: int) -> int:
        return v * self.nP + p

    def decode(self, g: int) -> tuple[int, int]:
        return divmod(g, self.nP)

    def mul(self, a, b):
        """Vectorized product of encoded elements (arrays or ints)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        v1, p1 = np.divmod(a, self.nP)
        v2, p2 = np.divmod(b, self.nP)
        v = v1 ^ self.act[p1, v2]
        p = self.P.table[p1, p2]
        out = v * self.nP + p
        return out if out.shape else int(out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        v, p = np.divmod(a, self.nP)
        pinv = self.P.inverses()[p]
        out = self.act[pinv, v].astype(np.int64) * self.nP + pinv
        return out if out.shape else int(out)

    def identity(self) -> int:
        return 0

    def element_order(self, g: int) -> int:
        x = g
        k = 1
        while x != 0:
            x = self.mul(x, g)
            k += 1
        return k

    def generators(self) -> list[int]:
        gens = [self.encode(1 << i, 0) for i in range(self.n)]
        gens += [self.encode(0, gi) for gi in self.P.gens]
        return gens

    # -- conjugacy classes ----------------------------------------------------
    def conjugacy_classes(self) -> ConjClasses:
        if self._classes is not None:
            return self._classes
        size = self.order
        all_elems = np.arange(size, dtype=np.int64)
        conj_maps = []
        for s in self.generators():
            sinv = self.inv(s)
            conj_maps.append(self.mul(self.mul(s, all_elems), sinv))
        class_of = np.full(size, -1, dtype=np.int32)
        reps = []
        sizes = []
        for x in range(size):
            if class_of[x] >= 0:
                continue
            cls = len(reps)
            stack = [x]
            class_of[x] = cls
            members = 1
            while stack:
                y = stack.pop()
                for cm in conj_maps:
                    z = int(cm[y])
                    if class_of[z] < 0:
                        class_of[z] = cls
                        members += 1
                        stack.append(z)
            reps.append(x)
            sizes.append(members)
        reps = np.array(reps, dtype=np.int64)
        sizes = np.array(sizes, dtype=np.int64)
        orders = np.array([self.element_order(int(r)) for r in reps], dtype=np.int64)
        classes = ConjClasses(reps, sizes, class_of,
                              orders, (orders % 2 == 1))
        self._classes = classes
        return classes

    def centralizer_order(self, g: int) -> int:
        c = self.conjugacy_classes()
        return self.order // int(c.sizes[c.class_of[g]])

    def power_map(self, m: int) -> np.ndarray:
        """Per class: the class index of rep^m."""
        c = self.conjugacy_classes()
        out = np.empty(c.count, dtype=np.int32)
        for i, r in enumerate(c.reps):
            x = 0
            e = m % int(c.orders[i])
            base = int(r)
            while e:
                if e & 1:
                    x = self.mul(x, base)
                base = self.mul(base, base)
                e >>= 1
            out[i] = c.class_of[x]
        return out

    def exponent(self) -> int:
        c = self.conjugacy_classes()
        return int(np.lcm.reduce(c.orders))

    # -- quotient by O_2 = D and fusion ---------------------------------------
    def quotient_by_O2(self) -> tuple[ConcreteGroup, FusionMap]:
        if self.nP % 2 == 0:
            raise ValueError("P must have odd order, so that O_2(G) = D")
        c = self.conjugacy_classes()
        q_reps, q_sizes, q_class_of = self.P.conjugacy_classes()
        image_class = np.empty(c.count, dtype=np.int32)
        mult = np.empty(c.count, dtype=np.int64)
        for i, r in enumerate(c.reps):
            _, p = self.decode(int(r))
            image_class[i] = q_class_of[p]
            mult[i] = int(c.sizes[i]) // int(q_sizes[q_class_of[p]])
            if int(c.sizes[i]) % int(q_sizes[q_class_of[p]]):
                raise RuntimeError("fusion multiplicity is not integral")
        return self.P, FusionMap(self.P, image_class, mult)

    def inertial_quotient(self) -> MatGroupGF2:
        """Image of P in GL_n(2), i.e. N_G(D)/C_G(D) since D is normal."""
        gens = [self.action_matrix(gi) for gi in self.P.gens]
        if not gens:
            return MatGroupGF2(self.n, [])
        return MatGroupGF2(self.n, gens, name=f"iq({self.name})")

    def __repr__(self) -> str:
        return f"SdpGroup({self.name or 'unnamed'}, n={self.n}, |P|={self.nP})"


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def model_group(label: str) -> SdpGroup:
    """(C_2)^6 x| E for a catalogue entry E <= GL_6(2) (faithful action)."""
    entry = catalogue_entry(label)
    P = from_matgroup(entry.group, name=entry.label)
    gens = [entry.group.elements[gi] for gi in P.gens]
    return SdpGroup(6, P, gens, name=f"(C2)^6:{entry.label}")


def sdp_from_action(n: int, P: ConcreteGroup, mats: Sequence[BitMatrix], name: str) -> SdpGroup:
    return SdpGroup(n, P, mats, name=name)


def klein_a4() -> SdpGroup:
    """A4 as (C_2)^2 x| C3."""
    w = BitMatrix.companion(lowest_irreducible(2))
    return SdpGroup(2, cyclic_group(3), [w], name="A4")


# ---------------------------------------------------------------------------
# the registry of §6-style central-extension groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegistryEntry:
    label: str
    description: str
    build: Callable[[], SdpGroup]
    expected_order: int
    expected_iq_order: int
    splitting_degree: int      # m with GF(2^m) a splitting field mod 2


def _bd(*blocks: BitMatrix) -> BitMatrix:
    return BitMatrix.block_diag(*blocks)


def _build_ex61_b1() -> SdpGroup:
    w = BitMatrix.companion(lowest_irreducible(2))
    i2 = BitMatrix.identity(2)
    P = heisenberg(3)
    mats = [_bd(w, i2, i2), _bd(i2, w, i2)]
    return SdpGroup(6, P, mats, name="((C2)^4:3^(1+2)+) x (C2)^2")


def _build_ex61_b2() -> SdpGroup:
    w = BitMatrix.companion(lowest_irreducible(2))
    i2 = BitMatrix.identity(2)
    i4 = BitMatrix.identity(4)
    P = direct_product(heisenberg(3), cyclic_group(3))
    mats = [_bd(w, i4), _bd(i2, w, i2), _bd(i4, w)]
    return SdpGroup(6, P, mats, name="((C2)^4:3^(1+2)+) x A4")


def _build_ex63_1() -> SdpGroup:
    i2 = BitMatrix.identity(2)
    i4 = BitMatrix.identity(4)
    w = BitMatrix.companion(lowest_irreducible(2))
    s4 = singer_cycle(4)
    P = direct_product(cyclic_group(5), heisenberg(3))
    mats = [_bd(s4.pow(3), i2), _bd(s4.pow(5), i2), _bd(i4, w)]
    return SdpGroup(6, P, mats, name="(C2)^6:(C5 x 3^(1+2)+)")


def _build_ex63_2() -> SdpGroup:
    a = BitMatrix.companion(lowest_irreducible(3))
    i3 = BitMatrix.identity(3)
    P = heisenberg(7)
    mats = [_bd(a, i3), _bd(i3, a)]
    return SdpGroup(6, P, mats, name="(C2)^6:7^(1+2)+")


def _c7c7_extraspecial3() -> ConcreteGroup:
    """(C7 x C7) x| 3^{1+2}+: permutations on 49 + 9 points."""
    pts49 = [(u, w) for u in range(7) for w in range(7)]
    pts9 = [(u, w) for u in range(3) for w in range(3)]
    idx49 = {pt: i for i, pt in enumerate(pts49)}
    idx9 = {pt: 49 + i for i, pt in enumerate(pts9)}

    def perm(map49, map9):
        images = [0] * 58
        for pt, i in idx49.items():
            images[i] = idx49[map49(pt)]
        for pt, i in idx9.items():
            images[i] = idx9[map9(pt)]
        return tuple(images)

    # perm_group composes left-to-right, so conjugation a x a^-1 applies a's
    # inverse map last: u -> 4u conjugates the +1-shift to a +2-shift.
    ident9 = lambda pt: pt
    x1 = perm(lambda p: ((p[0] + 1) % 7, p[1]), ident9)
    x2 = perm(lambda p: (p[0], (p[1] + 1) % 7), ident9)
    a = perm(lambda p: ((4 * p[0]) % 7, p[1]), lambda p: ((p[0] + 1) % 3, p[1]))
    b = perm(lambda p: (p[0], (4 * p[1]) % 7), lambda p: (p[0], (p[1] + p[0]) % 3))
    return perm_group([x1, x2, a, b], name="(C7xC7):3^(1+2)+")


def _build_ex63_3() -> SdpGroup:
    am = BitMatrix.companion(lowest_irreducible(3))
    f8 = frobenius_matrix(3)
    i3 = BitMatrix.identity(3)
    P = _c7c7_extraspecial3()
    mats = [_bd(am, i3), _bd(i3, am), _bd(f8, i3), _bd(i3, f8)]
    return SdpGroup(6, P, mats, name="(C2)^6:((C7xC7):3^(1+2)+)")


def _build_ex64() -> SdpGroup:
    w = BitMatrix.companion(lowest_irreducible(2))
    i2 = BitMatrix.identity(2)
    i4 = BitMatrix.identity(4)
    P = heisenberg(3)
    mats = [_bd(w, w, i2), _bd(i4, w)]
    return SdpGroup(6, P, mats, name="(C2)^6:3^(1+2)+ (non-faithful)")


def _build_ex65() -> SdpGroup:
    w = BitMatrix.companion(lowest_irreducible(2))
    i2 = BitMatrix.identity(2)
    i4 = BitMatrix.identity(4)
    P = sg729_group()
    mats = [_bd(w, i4), _bd(i2, w, i2), _bd(i4, w)]
    return SdpGroup(6, P, mats, name="(C2)^6:SmallGroup(729,122)")


_REGISTRY: tuple[RegistryEntry, ...] = (
    RegistryEntry("ex61_b1", "product of the (C2)^4 extraspecial-action block group with (C2)^2",
                  _build_ex61_b1, 64 * 27, 9, 2),
    RegistryEntry("ex61_b2", "product of the (C2)^4 extraspecial-action block group with A4",
                  _build_ex61_b2, 64 * 81, 27, 2),
    RegistryEntry("ex63_1", "(C2)^6 x| (C5 x 3^(1+2)+), central kernel C3",
                  _build_ex63_1, 64 * 135, 45, 4),
    RegistryEntry("ex63_2", "(C2)^6 x| 7^(1+2)+, central kernel C7",
                  _build_ex63_2, 64 * 343, 49, 3),
    RegistryEntry("ex63_3", "(C2)^6 x| ((C7xC7) x| 3^(1+2)+), central kernel C3",
                  _build_ex63_3, 64 * 1323, 441, 6),
    RegistryEntry("ex64", "(C2)^6 x| 3^(1+2)+ acting through C3 x C3, central kernel C3",
                  _build_ex64, 64 * 27, 9, 2),
    RegistryEntry("ex65", "(C2)^6 x| SmallGroup(729,122), derived subgroup (C3)^3 acts trivially",
                  _build_ex65, 64 * 729, 27, 2),
)


def registry() -> tuple[RegistryEntry, ...]:
    return _REGISTRY


@lru_cache(maxsize=None)
def central_extension_group(label: str) -> SdpGroup:
    for entry in _REGISTRY:
        if entry.label == label:
            g = entry.build()
            if g.order != entry.expected_order:
                raise RuntimeError(f"{label}: order {g.order} != {entry.expected_order}")
            iq = g.inertial_quotient()
            if iq.order != entry.expected_iq_order:
                raise RuntimeError(f"{label}: inertial quotient order {iq.order} != "
                                   f"{entry.expected_iq_order}")
            return g
    raise KeyError(f"unknown registry label: {label}")


# ---------------------------------------------------------------------------
# group-spec text format
# ---------------------------------------------------------------------------
#
# A JSON document:
#   {"n": 6,
#    "name": "...",
#    "generators": [
#       {"perm": [[1,2,3],[4,5]], "points": 9, "action": [[...], ...]},
#       {"matrix": [[0,1],[1,1]], "action": [[...], ...]}
#    ]}
# "perm" uses 1-based cycle notation; "matrix" is a GF(2) matrix generating a
# subgroup of some GL_k(2) used as the abstract group P. "action" is an n x n
# 0/1 matrix acting on row vectors of (C_2)^n.

def _cycles_to_images(cycles: list[list[int]], points: int) -> tuple[int, ...]:
    images = list(range(points))
    for cycle in cycles:
        for i, c in enumerate(cycle):
            images[c - 1] = cycle[(i + 1) % len(cycle)] - 1
    return tuple(images)


def _images_to_cycles(images: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(images)
    cycles = []
    for start in range(len(images)):
        if seen[start] or images[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = images[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = images[nxt]
        cycles.append([c + 1 for c in cyc])
    return cycles


def parse_group_spec(text: str) -> SdpGroup:
    doc = json.loads(text)
    n = int(doc["n"])
    gen_docs = doc["generators"]
    if not gen_docs:
        return SdpGroup(n, cyclic_group(1), [], name=doc.get("name", "user group"))
    kinds = {("perm" in g) for g in gen_docs}
    if len(kinds) != 1:
        raise ValueError("generators must all be permutations or all matrices")
    if "perm" in gen_docs[0]:
        points = int(gen_docs[0].get("points", 0)) or max(
            (max((max(c) for c in g["perm"]), default=1) for g in gen_docs), default=1)
        perms = [_cycles_to_images(g["perm"], points) for g in gen_docs]
        P = perm_group(perms, name=doc.get("name", ""))
    else:
        mats = [BitMatrix.from_rows(g["matrix"]) for g in gen_docs]
        P = from_matgroup(MatGroupGF2(mats[0].nrows, mats), name=doc.get("name", ""))
    actions = [BitMatrix.from_rows(g["action"]) for g in gen_docs]
    return SdpGroup(n, P, actions, name=doc.get("name", "user group"))


def group_spec_of(g: SdpGroup) -> str:
    """Serialize an SdpGroup whose P was built from permutations (or fallback
    to the regular representation) into the group-spec format."""
    gens = []
    for gi, mat in zip(g.P.gens, g.action_of_gens):
        elem = g.P.elements[gi]
        if isinstance(elem, tuple) and all(isinstance(x, (int, np.integer)) for x in elem):
            images = [int(x) for x in elem]
        else:
            # regular representation: right multiplication by the generator
            images = [int(g.P.table[x, gi]) for x in range(g.P.order)]
        gens.append({
            "perm": _images_to_cycles(images),
            "points": len(images),
            "action": mat.to_lists(),
        })
    return json.dumps({"n": g.n, "name": g.name, "generators": gens}, indent=1, sort_keys=True)
