"""Independent ground-truth computations.

The direct Hall-Littlewood expansion works with Laurent monomial maps:
exponent vectors (integer tuples after a per-family scaling) mapping to
polynomials in u = 1/q.  The Weyl sum is assembled over the explicit
common denominator and divided out exactly; any remainder is a fatal
internal-consistency error.  Characters come from the multiplicity
recursion on weight norms, dimensions from the product formula over
positive walls, type-A Kostka numbers from direct tableau counting.
None of this touches the gallery machinery.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .qpoly import QPoly
from .rootdata import RootSystem, Vec, pairing, vadd, vneg, vscale, vsub


def exponent_scale(rs: RootSystem) -> int:
    """Scale making every lattice exponent an integer vector."""
    if rs.family == "A":
        return rs.dim  # canonical form has denominators dividing n+1
    if rs.family == "B":
        return 2  # spin weights are half-integral
    return 1


def exponent_key(rs: RootSystem, v: Vec) -> tuple:
    scaled = vscale(exponent_scale(rs), rs.canonical_weight(v))
    out = []
    for x in scaled:
        if x.denominator != 1:
            raise ValueError("vector is not in the weight lattice: %r" % (v,))
        out.append(int(x))
    return tuple(out)


def _add_term(mapping: dict, key: tuple, coeff: QPoly):
    cur = mapping.get(key)
    new = coeff if cur is None else cur + coeff
    if new.is_zero():
        mapping.pop(key, None)
    else:
        mapping[key] = new


def _mul_binomial(mapping: dict, shift: tuple, a: QPoly, b: QPoly) -> dict:
    """mapping * (a + b*x^shift)."""
    out: dict = {}
    for key, c in mapping.items():
        if not a.is_zero():
            _add_term(out, key, c * a)
        if not b.is_zero():
            moved = tuple(k + s for k, s in zip(key, shift))
            _add_term(out, moved, c * b)
    return out


def _divide_by_one_minus(mapping: dict, shift: tuple) -> dict:
    """Exact division by (1 - x^shift).

    Along each lattice line m, m+shift, m+2shift, ... the quotient is the
    running prefix sum; exactness means the sum closes to zero past the
    support.  Raises ArithmeticError if it does not.
    """
    j = next(k for k, s in enumerate(shift) if s != 0)
    step = shift[j]
    lines: dict = {}
    for key, c in mapping.items():
        k = key[j] // step
        rep = tuple(x - k * s for x, s in zip(key, shift))
        lines.setdefault(rep, []).append((k, c))
    out: dict = {}
    for rep, terms in lines.items():
        terms.sort()
        by_k = dict(terms)
        running = QPoly.zero()
        for k in range(terms[0][0], terms[-1][0] + 1):
            c = by_k.get(k)
            if c is not None:
                running = running + c
            if not running.is_zero():
                out[tuple(x + k * s for x, s in zip(rep, shift))] = running
        if not running.is_zero():
            raise ArithmeticError("non-exact division in the Weyl-sum assembly")
    return out


def hall_littlewood_direct(rs: RootSystem, lam: Vec) -> dict:
    """The symmetric function P_lambda as {exponent key: polynomial in 1/q}.

    Built as the stabilizer-normalized Weyl sum of
    x^lambda * prod (1 - x^{-alpha}/q) / (1 - x^{-alpha}).
    """
    if not rs.is_dominant_weight(lam):
        raise ValueError("lambda must be a dominant weight")
    u = QPoly((0, 1))
    one = QPoly.one()
    pos_set = set(rs.pos_roots)

    total: dict = {}
    for w in range(rs.order()):
        term = {exponent_key(rs, rs.act(w, lam)): one}
        for alpha in rs.pos_roots:
            img = rs.act(w, alpha)
            beta = img if img in pos_set else vneg(img)
            shift = exponent_key(rs, vneg(beta))
            if img in pos_set:
                term = _mul_binomial(term, shift, one, -u)  # 1 - u x^{-beta}
            else:
                term = _mul_binomial(term, shift, u, -one)  # u - x^{-beta}
        for key, c in term.items():
            _add_term(total, key, c)

    stab_poly = QPoly.zero()
    for w in rs.stabilizer(lam):
        stab_poly = stab_poly + QPoly.q_power(rs.length[w])  # polynomial in u
    divided: dict = {}
    for key, c in total.items():
        divided[key] = c.divide_exact(stab_poly)

    for alpha in rs.pos_roots:
        divided = _divide_by_one_minus(divided, exponent_key(rs, vneg(alpha)))
    return divided


def L_from_expansion(rs: RootSystem, pmap: dict, lam: Vec, mu: Vec) -> QPoly:
    """q^{<lambda+mu, rho>} times the x^mu coefficient of an expansion map."""
    try:
        key = exponent_key(rs, mu)
    except ValueError:
        return QPoly.zero()
    coeff = pmap.get(key)
    if coeff is None:
        return QPoly.zero()
    n = pairing(vadd(lam, mu), rs.rho)
    if n.denominator != 1:
        raise ArithmeticError("degree shift is not integral; convention fault")
    n = int(n)
    if coeff.degree() > n:
        raise ArithmeticError("negative q-powers left in L; convention fault")
    out = [0] * (n + 1)
    for k, c in enumerate(coeff.coeffs):
        out[n - k] = c
    return QPoly(out)


def L_from_direct(rs: RootSystem, lam: Vec, mu: Vec) -> QPoly:
    """q^{<lambda+mu, rho>} times the x^mu coefficient of P_lambda."""
    if not rs.is_dominant_weight(lam) or not rs.is_dominant_weight(mu):
        raise ValueError("lambda and mu must be dominant weights")
    return L_from_expansion(rs, hall_littlewood_direct(rs, lam), lam, mu)


def schur_coefficient_map(rs: RootSystem, lam: Vec) -> dict:
    """The q -> infinity limit of P_lambda: u = 0 coefficientwise."""
    return {
        key: c.coeffs[0]
        for key, c in hall_littlewood_direct(rs, lam).items()
        if c.coeffs and c.coeffs[0] != 0
    }


def weyl_dimension(rs: RootSystem, lam: Vec) -> int:
    num = Q(1)
    shifted = vadd(lam, rs.rho_weight)
    for c in rs.pos_coroots:
        num *= pairing(shifted, c) / pairing(rs.rho_weight, c)
    if num.denominator != 1:
        raise ArithmeticError("non-integral dimension")
    return int(num)


def _dominant_weights_below(rs: RootSystem, lam: Vec) -> list:
    v0 = tuple(Q(rs.dim - k) for k in range(rs.dim))
    floor = min(pairing(rs.act(w, lam), v0) for w in range(rs.order()))
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for v in frontier:
            for alpha in rs.simple_roots:
                t = vsub(v, alpha)
                if t not in seen and pairing(t, v0) >= floor:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    doms = [v for v in seen if rs.is_dominant(v)]
    doms.sort(key=lambda v: -pairing(v, v0))
    return doms


def freudenthal_character(rs: RootSystem, lam: Vec) -> dict:
    """Full weight-multiplicity map of the irreducible with highest weight
    lambda, computed by the norm recursion; keys are canonical vectors."""
    if not rs.is_dominant_weight(lam):
        raise ValueError("lambda must be a dominant weight")
    rho = rs.rho_weight
    top_norm = pairing(vadd(lam, rho), vadd(lam, rho))
    mult: dict = {lam: 1}
    for mu in _dominant_weights_below(rs, lam):
        if mu == lam:
            continue
        denom = top_norm - pairing(vadd(mu, rho), vadd(mu, rho))
        acc = Q(0)
        for alpha in rs.pos_roots:
            k = 1
            while True:
                nu = vadd(mu, vscale(k, alpha))
                m = mult.get(rs.dominant_rep(nu))
                if not m:
                    break
                acc += 2 * m * pairing(nu, alpha)
                k += 1
        value = acc / denom
        if value.denominator != 1:
            raise ArithmeticError("non-integral multiplicity")
        if int(value) > 0:
            mult[mu] = int(value)
    out: dict = {}
    for mu, m in mult.items():
        for nu in rs.weyl_orbit(mu):
            out[rs.canonical_weight(nu)] = m
    return out


def _partition_shape(rs: RootSystem, lam: Vec) -> tuple:
    coeffs = [int(a) for a in rs.weight_coeffs(lam)]
    n = rs.rank
    return tuple(sum(coeffs[i:]) for i in range(n))


def kostka(rs: RootSystem, lam: Vec, mu: Vec) -> int:
    """Number of semistandard Young tableaux of shape lambda, content mu."""
    if rs.family != "A":
        raise ValueError("Kostka counting is a type-A oracle")
    if not rs.is_dominant_weight(lam) or not rs.is_dominant_weight(mu):
        raise ValueError("lambda and mu must be dominant weights")
    shape = [p for p in _partition_shape(rs, lam) if p > 0]
    cells = sum(shape)
    b = [int(x) for x in rs.weight_coeffs(mu)]
    n = rs.rank
    content = [sum(b[i:]) for i in range(n)] + [0]
    spread, rem = divmod(cells - sum(content), n + 1)
    if rem != 0:
        return 0
    content = [c + spread for c in content]
    if any(c < 0 for c in content):
        return 0

    rows = len(shape)
    counts = list(content)
    tableau = [[0] * r for r in shape]

    def fill(pos):
        filled = 0
        row = 0
        while row < rows and pos >= shape[row]:
            pos -= shape[row]
            row += 1
        if row == rows:
            return 1
        col = pos
        lo = 1
        if col > 0:
            lo = max(lo, tableau[row][col - 1])
        if row > 0:
            lo = max(lo, tableau[row - 1][col] + 1)
        total = 0
        for val in range(lo, n + 2):
            if counts[val - 1] == 0:
                continue
            counts[val - 1] -= 1
            tableau[row][col] = val
            total += fill(sum(shape[:row]) + col + 1)
            tableau[row][col] = 0
            counts[val - 1] += 1
        return total

    return fill(0)
