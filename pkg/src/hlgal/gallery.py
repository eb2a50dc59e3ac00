"""Combinatorial one-skeleton galleries of a fixed type.

A gallery is an alternating chain of vertices and edges in the apartment,
starting at the origin, with source and target special.  The only gallery
types handled are concatenations of fundamental galleries; the standard
gallery for a dominant weight uses the Bourbaki block order
omega_1^{a_1} * ... * omega_n^{a_n}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction as Q

from .apartment import (
    Edge,
    EdgeType,
    expected_germ,
    faces_at_vertex_of_type,
    negative_crossings,
    phi_a_minus,
    positive_crossings,
)
from .rootdata import RootSystem, Vec, pairing, vadd, vscale, vsub

GalleryType = tuple  # tuple of EdgeType


@dataclass(frozen=True)
class Gallery:
    vertices: tuple  # V_0 .. V_{r+1}, V_0 = origin
    gtype: GalleryType

    def __post_init__(self):
        if len(self.vertices) != len(self.gtype) + 1:
            raise ValueError("vertex/type length mismatch")

    @property
    def edges(self) -> tuple:
        return tuple(
            Edge(self.vertices[i], self.vertices[i + 1], t)
            for i, t in enumerate(self.gtype)
        )

    @property
    def source(self) -> Vec:
        return self.vertices[0]

    @property
    def target(self) -> Vec:
        return self.vertices[-1]

    def num_edges(self) -> int:
        return len(self.gtype)

    def directions(self) -> tuple:
        return tuple(
            vsub(self.vertices[i + 1], self.vertices[i]) for i in range(len(self.gtype))
        )


def _origin(rs: RootSystem) -> Vec:
    return tuple(Q(0) for _ in range(rs.dim))


def minuscule_scale(rs: RootSystem, i: int) -> int:
    """Largest pairing of omega_i against a positive wall; 1 means minuscule."""
    omega = rs.fundamental_weights[i - 1]
    top = max(pairing(omega, c) for c in rs.pos_coroots)
    if top not in (1, 2):
        raise AssertionError("fundamental weight pairs beyond 2; outside A/B/C scope")
    return int(top)


def fundamental_type(rs: RootSystem, i: int) -> tuple:
    if minuscule_scale(rs, i) == 1:
        return (EdgeType(i, "whole"),)
    return (EdgeType(i, "first"), EdgeType(i, "second"))


def gamma_omega(rs: RootSystem, i: int) -> Gallery:
    """The fundamental gallery along [0, omega_i]."""
    if not 1 <= i <= rs.rank:
        raise ValueError("no fundamental weight with index %d" % i)
    omega = rs.fundamental_weights[i - 1]
    o = _origin(rs)
    if minuscule_scale(rs, i) == 1:
        return Gallery((o, omega), fundamental_type(rs, i))
    mid = vscale(Q(1, 2), omega)
    return Gallery((o, mid, omega), fundamental_type(rs, i))


def type_of_lambda(rs: RootSystem, lam: Vec) -> GalleryType:
    coeffs = rs.weight_coeffs(lam)
    if not rs.is_dominant_weight(lam):
        raise ValueError("lambda must be a dominant weight")
    gtype = []
    for i, a in enumerate(coeffs, start=1):
        gtype.extend(fundamental_type(rs, i) * int(a))
    return tuple(gtype)


def concat(rs: RootSystem, g1: Gallery, g2: Gallery) -> Gallery:
    """Concatenate, displacing g2 so its source lands on g1's target."""
    shift = vsub(g1.target, g2.source)
    moved = tuple(vadd(v, shift) for v in g2.vertices[1:])
    return Gallery(g1.vertices + moved, g1.gtype + g2.gtype)


def apply_weyl(rs: RootSystem, w: int, g: Gallery) -> Gallery:
    return Gallery(tuple(rs.act(w, v) for v in g.vertices), g.gtype)


def gamma_lambda(rs: RootSystem, lam: Vec) -> Gallery:
    """The standard minimal gallery for a dominant weight, Bourbaki order."""
    coeffs = rs.weight_coeffs(lam)
    if not rs.is_dominant_weight(lam):
        raise ValueError("lambda must be a dominant weight")
    g = Gallery((_origin(rs),), ())
    for i, a in enumerate(coeffs, start=1):
        for _ in range(int(a)):
            g = concat(rs, g, gamma_omega(rs, i))
    return g


def _blocks(gtype: GalleryType):
    """Split an edge-type sequence into fundamental blocks."""
    blocks = []
    k = 0
    while k < len(gtype):
        t = gtype[k]
        if t.segment == "whole":
            blocks.append((t,))
            k += 1
        elif t.segment == "first":
            if k + 1 >= len(gtype) or gtype[k + 1] != EdgeType(t.index, "second"):
                raise ValueError("dangling first-half edge in gallery type")
            blocks.append((t, gtype[k + 1]))
            k += 2
        else:
            raise ValueError("gallery type starts a block with a second half")
    return blocks


def enumerate_of_type(rs: RootSystem, gtype: GalleryType):
    """All galleries with source 0 of the given type, in a reproducible
    depth-first order (direction choices sorted lexicographically)."""
    blocks = _blocks(tuple(gtype))

    def rec(vertex, vertices, types_done, block_idx):
        if block_idx == len(blocks):
            yield Gallery(tuple(vertices), tuple(types_done))
            return
        block = blocks[block_idx]
        head = block[0]
        for d in faces_at_vertex_of_type(rs, vertex, head, expected_germ(rs, head)):
            v1 = vadd(vertex, d)
            if len(block) == 1:
                yield from rec(v1, vertices + [v1], types_done + [head], block_idx + 1)
            else:
                tail = block[1]
                for d2 in faces_at_vertex_of_type(rs, v1, tail, d):
                    v2 = vadd(v1, d2)
                    yield from rec(
                        v2, vertices + [v1, v2], types_done + [head, tail], block_idx + 1
                    )

    yield from rec(_origin(rs), [_origin(rs)], [], 0)


def count_of_type(rs: RootSystem, lam: Vec) -> int:
    """Product of the local orbit sizes along the standard gallery."""
    g = gamma_lambda(rs, lam)
    total = 1
    dirs = g.directions()
    for i, e in enumerate(g.edges):
        total *= len(faces_at_vertex_of_type(rs, e.start, e.etype, dirs[i]))
    return total


def crossing_counts(rs: RootSystem, g: Gallery) -> tuple:
    """(positive, negative, total) wall crossings over all (V_i, E_i)."""
    plus = minus = 0
    for v, d in zip(g.vertices, g.directions()):
        plus += positive_crossings(rs, v, d)
        minus += negative_crossings(rs, v, d)
    return plus, minus, plus + minus


def cell_dimension(rs: RootSystem, g: Gallery) -> int:
    """Sum of |Phi^a_-(V_i, E_i)|; the attracting-cell dimension."""
    return sum(len(phi_a_minus(rs, v, d)) for v, d in zip(g.vertices, g.directions()))


def _frac_str(x: Q) -> str:
    return "%d/%d" % (x.numerator, x.denominator) if x.denominator != 1 else str(x.numerator)


def gallery_to_jsonable(g: Gallery) -> dict:
    return {
        "vertices": [[_frac_str(x) for x in v] for v in g.vertices],
        "edge_types": [t.tag() for t in g.gtype],
    }


def gallery_to_json(g: Gallery) -> str:
    return json.dumps(gallery_to_jsonable(g), sort_keys=True)


def gallery_from_jsonable(data: dict) -> Gallery:
    vertices = tuple(tuple(Q(x) for x in v) for v in data["vertices"])
    gtype = tuple(EdgeType.from_tag(t) for t in data["edge_types"])
    return Gallery(vertices, gtype)


def gallery_from_json(text: str) -> Gallery:
    return gallery_from_jsonable(json.loads(text))
