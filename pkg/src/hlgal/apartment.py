"""The affine apartment: walls, faces, local root systems and sectors.

A wall is H_{c,n} = {x : <x, c> + n = 0} where c runs over the coroot
functionals of the root system and n over the integers.  Vertices are
rational points; an edge germ at a vertex is the exact vector pointing
along the edge.  Sidedness questions are always settled by evaluating
functionals at exact rational points, never by sign conventions on
abstract simple roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q

from .rootdata import RootSystem, Vec, pairing, vneg, vscale, vsub

SEGMENTS = ("whole", "first", "second")


@dataclass(frozen=True)
class EdgeType:
    """Type tag of a fundamental-gallery edge: which omega, which piece."""

    index: int  # 1-based Bourbaki index of the fundamental weight
    segment: str  # "whole" for one-edge galleries, else "first"/"second"

    def __post_init__(self):
        if self.segment not in SEGMENTS:
            raise ValueError("bad segment %r" % (self.segment,))

    def tag(self) -> str:
        return "%d:%s" % (self.index, self.segment)

    @staticmethod
    def from_tag(tag: str) -> "EdgeType":
        idx, seg = tag.split(":")
        return EdgeType(int(idx), seg)


@dataclass(frozen=True)
class Edge:
    start: Vec
    end: Vec
    etype: EdgeType

    @property
    def direction(self) -> Vec:
        return vsub(self.end, self.start)


@dataclass(frozen=True)
class AffineRoot:
    """A wall functional (c, n); the hyperplane is {x : <x,c> + n = 0}."""

    root: Vec
    level: int

    def evaluate(self, x: Vec) -> Q:
        return pairing(x, self.root) + self.level


@dataclass(frozen=True)
class Sector:
    """V + w(closed dominant chamber), stored by vertex and Weyl class."""

    vertex: Vec
    chamber_class: int


def sector_contains_direction(rs: RootSystem, sector: Sector, d: Vec) -> bool:
    return rs.is_dominant(rs.act(rs.inverse[sector.chamber_class], d))


def local_key(rs: RootSystem, vertex: Vec) -> tuple:
    """Indices of the positive walls passing through the vertex."""
    return tuple(
        k for k, c in enumerate(rs.pos_coroots) if pairing(vertex, c).denominator == 1
    )


def is_special(rs: RootSystem, vertex: Vec) -> bool:
    return len(local_key(rs, vertex)) == len(rs.pos_coroots)


class LocalRootSystem:
    """The finite Coxeter-complex shadow of the apartment at a vertex.

    Carries the sub-root-system Phi_V (as wall functionals), its Weyl
    group W_V as a subgroup of W, the local length function, the local
    simple system, and the base chamber: the W_V-chamber whose interior
    contains the generic antidominant direction.
    """

    def __init__(self, rs: RootSystem, key: tuple):
        self.rs = rs
        self.key = key
        self.pos_functionals = tuple(rs.pos_coroots[k] for k in key)

        pos_set = set(self.pos_functionals)
        gens = [rs.reflections[k] for k in key]
        members = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    u = rs.mul(g, w)
                    if u not in members:
                        members.add(u)
                        nxt.append(u)
            frontier = nxt
        self.elements = tuple(sorted(members, key=lambda i: (rs.length[i], i)))
        self.element_set = frozenset(self.elements)

        self.local_length = {}
        for i in self.elements:
            self.local_length[i] = sum(
                1 for c in self.pos_functionals if rs.act(i, c) not in pos_set
            )

        # simple system: indecomposable positive functionals
        simples = []
        for c in self.pos_functionals:
            decomposable = any(
                vsub(c, a) in pos_set for a in self.pos_functionals if a != c
            )
            if not decomposable:
                simples.append(c)
        self.simples = tuple(sorted(simples))
        self.simple_reflections = tuple(
            rs.index[rs.reflection_perm(c)] for c in self.simples
        )
        self.reflection_indices = tuple(rs.reflections[k] for k in key)

        # generic interior point of the base chamber (antidominant side)
        v0 = tuple(Q(rs.dim - k) for k in range(rs.dim))
        self.generic_dominant = v0
        self.generic_base = vneg(v0)

        self._chamber_of: dict = {}
        self._base_face: dict = {}
        self._words: dict = {}
        self._all_words: dict = {}
        self._orbits: dict = {}

    # chambers are u * base for u in elements
    def in_base_closure(self, d: Vec) -> bool:
        return all(pairing(d, c) <= 0 for c in self.simples)

    def in_chamber_closure(self, u: int, d: Vec) -> bool:
        return self.in_base_closure(self.rs.act(self.rs.inverse[u], d))

    def chamber_of_point(self, p: Vec) -> int:
        """The u with p in the open chamber u*base; p must avoid all local walls."""
        hit = self._chamber_of.get(p)
        if hit is None:
            for u in self.elements:
                x = self.rs.act(self.rs.inverse[u], p)
                if all(pairing(x, c) < 0 for c in self.simples):
                    hit = u
                    break
            else:
                raise ValueError("point lies on a local wall: %r" % (p,))
            self._chamber_of[p] = hit
        return hit

    def orbit(self, d: Vec) -> tuple:
        hit = self._orbits.get(d)
        if hit is None:
            seen = {d}
            frontier = [d]
            while frontier:
                nxt = []
                for u in frontier:
                    for s in self.simple_reflections:
                        t = self.rs.act(s, u)
                        if t not in seen:
                            seen.add(t)
                            nxt.append(t)
                frontier = nxt
            hit = tuple(sorted(seen))
            self._orbits[d] = hit
        return hit

    def base_face(self, d: Vec) -> Vec:
        """The unique W_V-translate of d lying in the closed base chamber."""
        hit = self._base_face.get(d)
        if hit is None:
            matches = [u for u in self.orbit(d) if self.in_base_closure(u)]
            if len(matches) != 1:
                raise AssertionError("orbit meets base closure %d times" % len(matches))
            hit = matches[0]
            self._base_face[d] = hit
        return hit

    def left_descents(self, u: int) -> list:
        return [
            k
            for k, s in enumerate(self.simple_reflections)
            if self.local_length[self.rs.mul(s, u)] < self.local_length[u]
        ]

    def reduced_word(self, u: int) -> tuple:
        hit = self._words.get(u)
        if hit is None:
            word = []
            cur = u
            while self.local_length[cur] > 0:
                k = min(self.left_descents(cur))
                word.append(k)
                cur = self.rs.mul(self.simple_reflections[k], cur)
            hit = tuple(word)
            self._words[u] = hit
        return hit

    def all_reduced_words(self, u: int) -> tuple:
        hit = self._all_words.get(u)
        if hit is None:
            if self.local_length[u] == 0:
                hit = ((),)
            else:
                words = []
                for k in self.left_descents(u):
                    rest = self.rs.mul(self.simple_reflections[k], u)
                    for tail in self.all_reduced_words(rest):
                        words.append((k,) + tail)
                hit = tuple(sorted(words))
            self._all_words[u] = hit
        return hit


_LOCAL_CACHE: dict = {}


def local_data(rs: RootSystem, vertex: Vec) -> LocalRootSystem:
    key = local_key(rs, vertex)
    return local_data_for_key(rs, key)


def local_data_for_key(rs: RootSystem, key: tuple) -> LocalRootSystem:
    cache = _LOCAL_CACHE.setdefault(id(rs), {})
    hit = cache.get(key)
    if hit is None:
        hit = LocalRootSystem(rs, key)
        cache[key] = hit
    return hit


def local_root_system(rs: RootSystem, vertex: Vec) -> LocalRootSystem:
    """Phi_V and its Weyl group; alpha is in Phi_V iff <V, alpha> is integral."""
    return local_data(rs, vertex)


def crossing_sign(rs: RootSystem, vertex: Vec, direction: Vec, wall: AffineRoot):
    """'positive', 'negative' or None for the germ (vertex, direction) at a wall.

    Positive means the vertex lies on the wall and the edge leaves into the
    strictly positive half-space; the wall functional must be a positive one.
    """
    if wall.root not in set(rs.pos_coroots):
        raise ValueError("crossing signs are defined for positive wall functionals")
    if wall.evaluate(vertex) != 0:
        return None
    side = pairing(direction, wall.root)
    if side > 0:
        return "positive"
    if side < 0:
        return "negative"
    return None


def phi_a_minus(rs: RootSystem, vertex: Vec, direction: Vec) -> frozenset:
    """Negative wall functionals through the vertex the germ leaves behind.

    {(-c, n) : c positive, <vertex, c> integral, edge not inside H^+}.
    """
    out = []
    for c in rs.pos_coroots:
        level = pairing(vertex, c)
        if level.denominator != 1:
            continue
        if pairing(direction, c) > 0:
            out.append(AffineRoot(vneg(c), int(level)))
    return frozenset(out)


def positive_crossings(rs: RootSystem, vertex: Vec, direction: Vec) -> int:
    return sum(
        1
        for c in rs.pos_coroots
        if pairing(vertex, c).denominator == 1 and pairing(direction, c) > 0
    )


def negative_crossings(rs: RootSystem, vertex: Vec, direction: Vec) -> int:
    return sum(
        1
        for c in rs.pos_coroots
        if pairing(vertex, c).denominator == 1 and pairing(direction, c) < 0
    )


def expected_germ(rs: RootSystem, etype: EdgeType) -> Vec:
    """The dominant reference germ for an edge type."""
    omega = rs.fundamental_weights[etype.index - 1]
    if etype.segment == "whole":
        return omega
    return vscale(Q(1, 2), omega)


def faces_at_vertex_of_type(
    rs: RootSystem, vertex: Vec, etype: EdgeType, reference_direction: Vec
) -> tuple:
    """All germs at the vertex of edges of the given type: the W_V-orbit
    of a reference germ.  The reference must itself be such a germ."""
    got = rs.dominant_rep(rs.canonical_weight(reference_direction))
    want = rs.dominant_rep(rs.canonical_weight(expected_germ(rs, etype)))
    if got != want:
        raise ValueError(
            "reference direction %r is not a germ of type %s" % (reference_direction, etype.tag())
        )
    return local_data(rs, vertex).orbit(reference_direction)


def edge_respects_walls(rs: RootSystem, edge: Edge) -> bool:
    """Face property: the open segment meets no wall it is not contained in."""
    for c in rs.pos_coroots:
        a = pairing(edge.start, c)
        b = pairing(edge.end, c)
        if a == b:
            continue
        lo, hi = (a, b) if a < b else (b, a)
        # an integer strictly inside (lo, hi) would be a wall crossing
        k = math.floor(lo) + 1
        if Q(k) < hi:
            return False
    return True
