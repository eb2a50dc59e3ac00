"""Assembly of the coefficient polynomials L_{lambda,mu}(q) and the
LS-gallery character.

Each positively folded gallery with target mu contributes
q^(length of the closest chamber at the origin) times the product of its
junction factors; the factors come from the residue module and all
arithmetic is exact, so the accumulation order does not matter.
"""

from __future__ import annotations

import multiprocessing
from collections import Counter

from .folding import enumerate_pf, is_LS, is_positively_folded
from .gallery import Gallery, enumerate_of_type, type_of_lambda
from .qpoly import QPoly, leading_data
from .residue import first_factor_exponent, junction_factor
from .rootdata import RootSystem, RootSystemSpec, Vec, build_root_system, vneg


def gallery_term(rs: RootSystem, g: Gallery) -> QPoly:
    """The summand q^{l(w_D0)} * prod_j U_j(q) of a positively folded gallery."""
    if g.num_edges() == 0:
        return QPoly.one()
    dirs = g.directions()
    total = QPoly.q_power(first_factor_exponent(rs, dirs[0]))
    for j in range(1, g.num_edges()):
        factor = junction_factor(rs, g.vertices[j], vneg(dirs[j - 1]), dirs[j])
        if factor.is_zero():
            raise AssertionError("empty junction factor on a positively folded gallery")
        total = total * factor
    return total


def _term_for_shard(args):
    family, rank, lam, mu, shard, nshards = args
    rs = build_root_system(RootSystemSpec(family, rank))
    galleries = enumerate_pf(rs, lam, mu)
    acc = QPoly.zero()
    for k, g in enumerate(galleries):
        if k % nshards == shard:
            acc = acc + gallery_term(rs, g)
    return acc.coeffs


def L_polynomial(rs: RootSystem, lam: Vec, mu: Vec, jobs: int = 1) -> QPoly:
    """L_{lambda,mu}(q) summed over positively folded galleries with target mu."""
    if not rs.is_dominant_weight(lam) or not rs.is_dominant_weight(mu):
        raise ValueError("lambda and mu must be dominant weights")
    if jobs > 1:
        args = [
            (rs.family, rs.rank, lam, mu, shard, jobs) for shard in range(jobs)
        ]
        with multiprocessing.Pool(jobs) as pool:
            partials = pool.map(_term_for_shard, args)
        total = QPoly.zero()
        for coeffs in partials:
            total = total + QPoly(coeffs)
        return total
    total = QPoly.zero()
    for g in enumerate_pf(rs, lam, mu):
        total = total + gallery_term(rs, g)
    return total


def character_LS(rs: RootSystem, lam: Vec) -> dict:
    """Multiplicity map target -> number of LS-galleries of the standard type.

    Keys are canonical weight vectors (type A drops the invariant line).
    """
    if not rs.is_dominant_weight(lam):
        raise ValueError("lambda must be a dominant weight")
    counts: Counter = Counter()
    for g in enumerate_of_type(rs, type_of_lambda(rs, lam)):
        if not is_positively_folded(rs, g):
            continue
        if is_LS(rs, g):
            counts[rs.canonical_weight(g.target)] += 1
    return dict(counts)


def character_to_jsonable(char: dict) -> list:
    def frac(x):
        return "%d/%d" % (x.numerator, x.denominator) if x.denominator != 1 else str(
            x.numerator
        )

    return [
        {"weight": [frac(x) for x in w], "mult": m}
        for w, m in sorted(char.items())
    ]


__all__ = [
    "L_polynomial",
    "character_LS",
    "character_to_jsonable",
    "gallery_term",
    "leading_data",
    "QPoly",
]
