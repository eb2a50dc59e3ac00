"""Exact root-system, Weyl-group and Bruhat-order substrate for A_n, B_n, C_n.

Everything lives in the Bourbaki epsilon coordinates of the named family.
The lattice the rest of the library walks on (vertices of the apartment,
the lambda/mu inputs) is the *weight* lattice of that family; levels,
degrees and wall data pair those points against the *coroots*, used as
linear functionals via the ambient dot product.  In type A the two vector
families agree; in types B and C they are dual to each other, and keeping
both around is what makes the half-integral spin weight of B_n a special
vertex while the corresponding C_n weight is not.

All arithmetic is exact (fractions.Fraction); no floats anywhere.
Weyl group elements are signed permutations of the epsilon basis, stored
as tuples ``((image, sign), ...)`` meaning ``w(e_j) = sign * e_image``.
A RootSystem is immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

Vec = tuple  # tuple of Fraction coordinates
SignedPerm = tuple  # tuple of (image_index, sign) pairs

FAMILIES = ("A", "B", "C")
MAX_RANK = 4  # desk scale; |W| <= 384


def vector(xs) -> Vec:
    return tuple(Q(x) for x in xs)


def pairing(weight: Vec, covector: Vec) -> Q:
    """Exact ambient pairing <weight, covector>."""
    if len(weight) != len(covector):
        raise ValueError("dimension mismatch: %d vs %d" % (len(weight), len(covector)))
    return sum((a * b for a, b in zip(weight, covector)), Q(0))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(c, u: Vec) -> Vec:
    c = Q(c)
    return tuple(c * a for a in u)


def is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


def sp_identity(m: int) -> SignedPerm:
    return tuple((j, 1) for j in range(m))


def sp_act(w: SignedPerm, v: Vec) -> Vec:
    out = [Q(0)] * len(v)
    for j, (i, s) in enumerate(w):
        out[i] = v[j] if s == 1 else -v[j]
    return tuple(out)


def sp_mul(w1: SignedPerm, w2: SignedPerm) -> SignedPerm:
    # (w1 w2)(e_j) = w1(s2 e_i) for w2(e_j) = s2 e_i
    out = []
    for i2, s2 in w2:
        i1, s1 = w1[i2]
        out.append((i1, s1 * s2))
    return tuple(out)


def sp_inv(w: SignedPerm) -> SignedPerm:
    out = [None] * len(w)
    for j, (i, s) in enumerate(w):
        out[i] = (j, s)
    return tuple(out)


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int

    @property
    def ambient_dim(self) -> int:
        return self.rank + 1 if self.family == "A" else self.rank

    def validate(self):
        if self.family not in FAMILIES:
            raise ValueError("unsupported family %r (want A, B or C)" % (self.family,))
        if not (1 <= self.rank <= MAX_RANK):
            raise ValueError("unsupported rank %r (supported: 1..%d)" % (self.rank, MAX_RANK))


def _root_data(family: str, n: int):
    """Positive roots, aligned coroots and simple indices, Bourbaki order."""
    m = n + 1 if family == "A" else n

    def e(i):
        return tuple(Q(1) if k == i else Q(0) for k in range(m))

    pos_roots, pos_coroots = [], []
    if family == "A":
        for i in range(m):
            for j in range(i + 1, m):
                r = vsub(e(i), e(j))
                pos_roots.append(r)
                pos_coroots.append(r)
    elif family == "B":
        for i in range(n):
            pos_roots.append(e(i))
            pos_coroots.append(vscale(2, e(i)))
        for i in range(n):
            for j in range(i + 1, n):
                for sign in (1, -1):
                    r = vadd(e(i), vscale(sign, e(j)))
                    pos_roots.append(r)
                    pos_coroots.append(r)
    else:  # C
        for i in range(n):
            pos_roots.append(vscale(2, e(i)))
            pos_coroots.append(e(i))
        for i in range(n):
            for j in range(i + 1, n):
                for sign in (1, -1):
                    r = vadd(e(i), vscale(sign, e(j)))
                    pos_roots.append(r)
                    pos_coroots.append(r)

    simple_roots = []
    for i in range(n - 1):
        simple_roots.append(vsub(e(i), e(i + 1)))
    if family == "A":
        simple_roots.append(vsub(e(n - 1), e(n)))
    elif family == "B":
        simple_roots.append(e(n - 1))
    else:
        simple_roots.append(vscale(2, e(n - 1)))

    fundamental = []
    for i in range(1, n + 1):
        w = tuple(Q(1) if k < i else Q(0) for k in range(m))
        if family == "B" and i == n:
            w = tuple(Q(1, 2) for _ in range(m))
        fundamental.append(w)

    return pos_roots, pos_coroots, simple_roots, fundamental


class RootSystem:
    """Immutable bundle of exact root data plus the full Weyl group.

    Elements of W are addressed by integer index; index 0 is the identity
    and the list is sorted by (length, signed permutation) so that the
    ordering is reproducible.
    """

    def __init__(self, spec: RootSystemSpec):
        spec.validate()
        self.spec = spec
        self.family = spec.family
        self.rank = spec.rank
        self.dim = spec.ambient_dim

        pos_roots, pos_coroots, simple_roots, fundamental = _root_data(self.family, self.rank)
        order = sorted(range(len(pos_roots)), key=lambda k: pos_coroots[k])
        self.pos_roots = tuple(pos_roots[k] for k in order)
        self.pos_coroots = tuple(pos_coroots[k] for k in order)
        self.simple_roots = tuple(simple_roots)
        self.simple_coroots = tuple(
            self.pos_coroots[self.pos_roots.index(a)] for a in self.simple_roots
        )
        self.fundamental_weights = tuple(fundamental)
        self.rho = vscale(Q(1, 2), self._vsum(self.pos_coroots))
        self.rho_weight = vscale(Q(1, 2), self._vsum(self.pos_roots))

        self._build_group()
        self._build_bruhat()

        # memo tables
        self._chamber_classes: dict = {}
        self._orbit_minreps: dict = {}
        self._reduced_words: dict = {}
        self._all_reduced_words: dict = {}
        self._dominance_cache: dict = {}

    @staticmethod
    def _vsum(vs):
        acc = vs[0]
        for v in vs[1:]:
            acc = vadd(acc, v)
        return acc

    # ------------------------------------------------------------------ group

    def reflection_perm(self, root: Vec) -> SignedPerm:
        """The orthogonal reflection through root^perp, as a signed permutation."""
        m = self.dim
        norm = pairing(root, root)
        cols = []
        for j in range(m):
            ej = tuple(Q(1) if k == j else Q(0) for k in range(m))
            img = vsub(ej, vscale(2 * root[j] / norm, root))
            nz = [(k, c) for k, c in enumerate(img) if c != 0]
            if len(nz) != 1 or abs(nz[0][1]) != 1:
                raise ValueError("reflection is not a signed permutation")
            cols.append((nz[0][0], 1 if nz[0][1] > 0 else -1))
        return tuple(cols)

    def _build_group(self):
        m = self.dim
        gens = [self.reflection_perm(a) for a in self.simple_roots]
        seen = {sp_identity(m)}
        frontier = [sp_identity(m)]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    u = sp_mul(g, w)
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt

        pos_set = set(self.pos_roots)

        def length_of(w):
            return sum(1 for a in self.pos_roots if sp_act(w, a) not in pos_set)

        ranked = sorted(seen, key=lambda w: (length_of(w), w))
        self.elements = tuple(ranked)
        self.index = {w: i for i, w in enumerate(ranked)}
        self.length = tuple(length_of(w) for w in ranked)
        self.inverse = tuple(self.index[sp_inv(w)] for w in ranked)
        self.simple_reflections = tuple(self.index[g] for g in gens)
        self.reflections = tuple(self.index[self.reflection_perm(a)] for a in self.pos_roots)
        self.w0 = max(range(len(ranked)), key=lambda i: self.length[i])

    def act(self, i: int, v: Vec) -> Vec:
        return sp_act(self.elements[i], v)

    def mul(self, i: int, j: int) -> int:
        return self.index[sp_mul(self.elements[i], self.elements[j])]

    def order(self) -> int:
        return len(self.elements)

    # ----------------------------------------------------------------- bruhat

    def _build_bruhat(self):
        n = len(self.elements)
        by_length: dict = {}
        for i in range(n):
            by_length.setdefault(self.length[i], []).append(i)
        below = [0] * n
        for ell in sorted(by_length):
            for w in by_length[ell]:
                mask = 1 << w
                for t in self.reflections:
                    v = self.mul(t, w)
                    if self.length[v] == ell - 1:
                        mask |= below[v]
                below[w] = mask
        self.below_mask = tuple(below)

    def bruhat_leq(self, u: int, w: int) -> bool:
        return bool((self.below_mask[w] >> u) & 1)

    # ---------------------------------------------------------------- weights

    def weight(self, coeffs) -> Vec:
        """Sum a_i * omega_i for a coefficient vector in Bourbaki order."""
        if len(coeffs) != self.rank:
            raise ValueError("expected %d coefficients" % self.rank)
        acc = tuple(Q(0) for _ in range(self.dim))
        for a, w in zip(coeffs, self.fundamental_weights):
            acc = vadd(acc, vscale(a, w))
        return acc

    def weight_coeffs(self, v: Vec) -> tuple:
        return tuple(pairing(v, c) for c in self.simple_coroots)

    def is_dominant(self, v: Vec) -> bool:
        hit = self._dominance_cache.get(v)
        if hit is None:
            hit = all(pairing(v, c) >= 0 for c in self.simple_coroots)
            self._dominance_cache[v] = hit
        return hit

    def is_dominant_weight(self, v: Vec) -> bool:
        return self.is_dominant(v) and all(a.denominator == 1 and a >= 0 for a in self.weight_coeffs(v))

    def canonical_weight(self, v: Vec) -> Vec:
        """Canonical representative modulo the invariant line (type A only)."""
        if self.family != "A":
            return v
        shift = sum(v, Q(0)) / self.dim
        return tuple(a - shift for a in v)

    def weights_equal(self, u: Vec, v: Vec) -> bool:
        return self.canonical_weight(u) == self.canonical_weight(v)

    def dominant_rep(self, v: Vec) -> Vec:
        if self.family == "A":
            return tuple(sorted(v, reverse=True))
        return tuple(sorted((abs(a) for a in v), reverse=True))

    def weyl_orbit(self, v: Vec) -> tuple:
        seen = {v}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for s in self.simple_reflections:
                    t = self.act(s, u)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        return tuple(sorted(seen))

    def stabilizer(self, v: Vec) -> tuple:
        return tuple(i for i in range(self.order()) if self.act(i, v) == v)

    # --------------------------------------------------------------- chambers

    def chamber_classes_of_direction(self, d: Vec) -> frozenset:
        """The set {w : d in w(closed dominant chamber)}."""
        if is_zero(d):
            raise ValueError("zero direction has no chamber class")
        hit = self._chamber_classes.get(d)
        if hit is None:
            members = []
            for i in range(self.order()):
                if self.is_dominant(self.act(self.inverse[i], d)):
                    members.append(i)
            hit = frozenset(members)
            self._chamber_classes[d] = hit
        return hit

    def chamber_class_mask(self, d: Vec) -> int:
        mask = 0
        for i in self.chamber_classes_of_direction(d):
            mask |= 1 << i
        return mask

    def below_closure_mask(self, mask: int) -> int:
        out = 0
        i = 0
        while mask:
            if mask & 1:
                out |= self.below_mask[i]
            mask >>= 1
            i += 1
        return out

    # ----------------------------------------------------------- words/cosets

    def left_descents(self, w: int) -> list:
        return [k for k, s in enumerate(self.simple_reflections)
                if self.length[self.mul(s, w)] < self.length[w]]

    def reduced_word(self, w: int) -> tuple:
        """Lexicographically least reduced word (letters = simple indices)."""
        hit = self._reduced_words.get(w)
        if hit is None:
            word = []
            cur = w
            while self.length[cur] > 0:
                k = min(self.left_descents(cur))
                word.append(k)
                cur = self.mul(self.simple_reflections[k], cur)
            hit = tuple(word)
            self._reduced_words[w] = hit
        return hit

    def all_reduced_words(self, w: int) -> tuple:
        hit = self._all_reduced_words.get(w)
        if hit is None:
            if self.length[w] == 0:
                hit = ((),)
            else:
                words = []
                for k in self.left_descents(w):
                    rest = self.mul(self.simple_reflections[k], w)
                    for tail in self.all_reduced_words(rest):
                        words.append((k,) + tail)
                hit = tuple(sorted(words))
            self._all_reduced_words[w] = hit
        return hit

    def orbit_min_reps(self, omega: Vec) -> dict:
        """weight in W.omega -> index of the minimal-length w with w(omega) = weight."""
        hit = self._orbit_minreps.get(omega)
        if hit is None:
            reps = {}
            for i in sorted(range(self.order()), key=lambda i: (self.length[i], self.reduced_word(i))):
                img = self.act(i, omega)
                if img not in reps:
                    reps[img] = i
            hit = reps
            self._orbit_minreps[omega] = hit
        return hit

    def coset_length(self, omega: Vec, weight_point: Vec) -> int:
        """Length of a class in W/Stab(omega), addressed by the orbit point."""
        return self.length[self.orbit_min_reps(omega)[weight_point]]

    def coset_leq(self, omega: Vec, a: Vec, b: Vec) -> bool:
        """Bruhat order on W/Stab(omega) via minimal coset representatives."""
        reps = self.orbit_min_reps(omega)
        return self.bruhat_leq(reps[a], reps[b])


_CACHE: dict = {}


def build_root_system(spec: RootSystemSpec) -> RootSystem:
    """Build (and cache) the full root datum for a family/rank."""
    key = (spec.family, spec.rank)
    rs = _CACHE.get(key)
    if rs is None:
        rs = RootSystem(spec)
        _CACHE[key] = rs
    return rs


def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(RootSystemSpec(family, rank))


def bruhat_leq(rs: RootSystem, u: int, w: int) -> bool:
    return rs.bruhat_leq(u, w)


def chamber_classes_of_direction(rs: RootSystem, d: Vec) -> frozenset:
    return rs.chamber_classes_of_direction(d)
