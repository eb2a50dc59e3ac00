"""Minimality and positive folding of one-skeleton galleries.

The two-step test works in the residue at the junction vertex: the
outgoing germ must be reachable, inside its type orbit, from a germ that
forms a minimal pair with the incoming one, by reflections in local walls
that move the germ away from the antidominant cone.  The global test adds
the existence of a Bruhat-weakly-decreasing defining chain of chamber
classes containing the successive edges.
"""

from __future__ import annotations

from .apartment import local_data, local_data_for_key, local_key
from .gallery import Gallery, crossing_counts, enumerate_of_type, type_of_lambda
from .rootdata import RootSystem, Vec, is_zero, pairing, vadd, vneg, vsub


def is_minimal_pair(rs: RootSystem, d_e: Vec, d_f: Vec) -> bool:
    """Two germs at a common vertex lying in opposite sectors."""
    if is_zero(d_e) or is_zero(d_f):
        raise ValueError("zero direction")
    flip = rs.w0
    opp = frozenset(rs.mul(w, flip) for w in rs.chamber_classes_of_direction(d_f))
    return bool(rs.chamber_classes_of_direction(d_e) & opp)


_TWO_STEP_CACHE: dict = {}


def _two_step_pf(rs: RootSystem, key: tuple, d_in: Vec, d_out: Vec) -> bool:
    cache = _TWO_STEP_CACHE.setdefault(id(rs), {})
    memo_key = (key, d_in, d_out)
    hit = cache.get(memo_key)
    if hit is not None:
        return hit

    local = local_data_for_key(rs, key)
    reachable = set()
    frontier = []
    for f0 in local.orbit(d_out):
        if is_minimal_pair(rs, d_in, f0):
            reachable.add(f0)
            frontier.append(f0)
    # positive folds move the germ off the antidominant side of a local wall
    while frontier:
        nxt = []
        for d in frontier:
            for c, refl in zip(local.pos_functionals, local.reflection_indices):
                if pairing(d, c) < 0:
                    image = rs.act(refl, d)
                    if image not in reachable:
                        reachable.add(image)
                        nxt.append(image)
        frontier = nxt
    hit = d_out in reachable
    cache[memo_key] = hit
    return hit


def two_step_positively_folded(rs: RootSystem, e_in, vertex: Vec, e_out) -> bool:
    """Positive-folding test for a junction (E ⊃ V ⊂ F).

    Edge objects or plain germ vectors are accepted; as vectors, the
    incoming germ at V is V_prev - V and the outgoing one V_next - V.
    """
    d_in = vsub(e_in.start, e_in.end) if hasattr(e_in, "start") else e_in
    d_out = vsub(e_out.end, e_out.start) if hasattr(e_out, "start") else e_out
    return _two_step_pf(rs, local_key(rs, vertex), d_in, d_out)


def locally_positively_folded(rs: RootSystem, g: Gallery) -> bool:
    dirs = g.directions()
    for j in range(1, g.num_edges()):
        if not two_step_positively_folded(rs, vneg(dirs[j - 1]), g.vertices[j], dirs[j]):
            return False
    return True


def _bits(mask: int) -> list:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def defining_chain(rs: RootSystem, g: Gallery):
    """A Bruhat-weakly-decreasing witness chain (as element indices), or None.

    Forward pass: reachable_k = classes containing edge k dominated by
    something reachable at k-1.  The witness walks backwards taking the
    Bruhat-maximal choice, ties broken by shortest lexicographic reduced
    word; existence, not the particular witness, is the mathematical
    content.
    """
    dirs = g.directions()
    if not dirs:
        return ()
    feasible = [rs.chamber_class_mask(d) for d in dirs]
    reachable = [feasible[0]]
    for k in range(1, len(dirs)):
        mask = rs.below_closure_mask(reachable[-1]) & feasible[k]
        if mask == 0:
            return None
        reachable.append(mask)

    def pick_max(mask):
        cand = _bits(mask)
        maximal = [w for w in cand if not any(u != w and rs.bruhat_leq(w, u) for u in cand)]
        maximal.sort(key=lambda w: (-rs.length[w], rs.reduced_word(w)))
        return maximal[0]

    chain = [pick_max(reachable[-1])]
    for k in range(len(dirs) - 2, -1, -1):
        allowed = 0
        for w in _bits(reachable[k]):
            if rs.bruhat_leq(chain[0], w):
                allowed |= 1 << w
        chain.insert(0, pick_max(allowed))
    return tuple(chain)


def is_minimal(rs: RootSystem, g: Gallery) -> bool:
    """All edge directions fit in one common closed chamber."""
    mask = -1
    for d in g.directions():
        mask &= rs.chamber_class_mask(d)
        if mask == 0:
            return False
    return True


def is_positively_folded(rs: RootSystem, g: Gallery) -> bool:
    return locally_positively_folded(rs, g) and defining_chain(rs, g) is not None


def type_weight(rs: RootSystem, gtype) -> Vec:
    """Sum of the block fundamental weights of a gallery type."""
    acc = tuple(0 for _ in range(rs.dim))
    for t in gtype:
        if t.segment in ("whole", "first"):
            acc = vadd(acc, rs.fundamental_weights[t.index - 1])
    return acc


def is_LS(rs: RootSystem, g: Gallery) -> bool:
    """Maximal positive-crossing count among positively folded galleries."""
    if not is_positively_folded(rs, g):
        raise ValueError("LS test applies to positively folded galleries only")
    lam = type_weight(rs, g.gtype)
    bound = pairing(vadd(lam, g.target), rs.rho)
    plus = crossing_counts(rs, g)[0]
    if plus > bound:
        raise AssertionError("positive crossings exceed the degree bound")
    return plus == bound


def ls_fold_check(rs: RootSystem, g: Gallery) -> bool:
    """For a single fundamental block: reachable from a minimal gallery by
    LS-folds only.

    Folds act at the interior vertex.  A fold by a local wall is admitted
    when the W/Stab(omega) class of the tail drops in Bruhat order and the
    local coset length drops by exactly one (a fold minimal for the local
    root system); it is an LS-fold when the W/Stab(omega) coset length
    also drops by exactly one.
    """
    indices = {t.index for t in g.gtype}
    if len(indices) != 1 or g.num_edges() not in (1, 2):
        raise ValueError("ls_fold_check expects a single fundamental block")
    if not is_positively_folded(rs, g):
        raise ValueError("LS-fold test applies to positively folded galleries only")
    if g.num_edges() == 1:
        return True  # minuscule blocks have no interior vertex, no folds

    i = next(iter(indices))
    omega = rs.fundamental_weights[i - 1]
    mid = g.vertices[1]
    local = local_data(rs, mid)
    d1 = vsub(g.vertices[1], g.vertices[0])
    d2 = vsub(g.vertices[2], g.vertices[1])

    def coset_point(d):
        # half-edge germs: the ray through d meets W.omega at 2d
        return tuple(2 * x for x in d)

    local_len_cache: dict = {}

    def local_coset_length(d):
        hit = local_len_cache.get(d)
        if hit is None:
            dominant = [
                u
                for u in local.orbit(d)
                if all(pairing(u, c) >= 0 for c in local.pos_functionals)
            ]
            assert len(dominant) == 1
            nu0 = dominant[0]
            hit = min(
                local.local_length[u]
                for u in local.elements
                if rs.act(u, nu0) == d
            )
            local_len_cache[d] = hit
        return hit

    best_flag: dict = {}
    frontier = []
    for f0 in local.orbit(d1):
        if is_minimal_pair(rs, vneg(d1), f0):
            best_flag[f0] = True
            frontier.append(f0)
    while frontier:
        nxt = []
        for d in frontier:
            tau = coset_point(d)
            for refl in local.reflection_indices:
                image = rs.act(refl, d)
                if image == d:
                    continue
                kappa = coset_point(image)
                if kappa == tau or not rs.coset_leq(omega, kappa, tau):
                    continue  # not a positive fold
                if local_coset_length(image) != local_coset_length(d) - 1:
                    continue  # not minimal for the local root system
                ls_step = rs.coset_length(omega, kappa) == rs.coset_length(omega, tau) - 1
                flag = best_flag[d] and ls_step
                if image not in best_flag:
                    best_flag[image] = flag
                    nxt.append(image)
                elif flag and not best_flag[image]:
                    best_flag[image] = True
                    nxt.append(image)
        frontier = nxt
    return best_flag.get(d2, False)


def enumerate_pf(rs: RootSystem, lam: Vec, mu: Vec) -> tuple:
    """All positively folded galleries of the standard type with target mu."""
    if not rs.is_dominant_weight(lam) or not rs.is_dominant_weight(mu):
        raise ValueError("lambda and mu must be dominant weights")
    gtype = type_of_lambda(rs, lam)
    mu_c = rs.canonical_weight(mu)
    out = []
    for g in enumerate_of_type(rs, gtype):
        if rs.canonical_weight(g.target) != mu_c:
            continue
        if is_positively_folded(rs, g):
            out.append(g)
    return tuple(out)
