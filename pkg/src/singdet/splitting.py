"""Splitting lemma: peel off a nondegenerate quadratic form.

Odd characteristic: complete squares one variable at a time (ascending
variable index), extending the field when a diagonal coefficient is not a
square; the residual lives in the remaining corank-many variables and has
order at least 3.

Characteristic 2: extract hyperbolic planes x_i*x_j from the polar form of
the quadratic part.  Diagonal squares a*x^2 stay in the residual as free
coefficients (they cannot be removed and the classification keeps them as
moduli), so the residual has order 2 in general.
"""

from . import fieldtower
from .localalg import NotSingularError
from .polyring import Poly


class SplitResult:
    __slots__ = ("residual", "crk", "transformation", "square_coeffs",
                 "hyperbolic_pairs", "tower", "full")

    def __init__(self, residual, crk, transformation, square_coeffs,
                 hyperbolic_pairs, tower, full):
        self.residual = residual            # Poly in the first crk variables
        self.crk = crk
        self.transformation = transformation  # var -> Poly over full vars
        self.square_coeffs = square_coeffs  # unit squares split off (p != 2)
        self.hyperbolic_pairs = hyperbolic_pairs  # count of x_i*x_j planes
        self.tower = tower
        self.full = full                    # residual + quadratic normal form

    def to_json(self):
        return {
            "corank": self.crk,
            "residual": str(self.residual),
            "squares": len(self.square_coeffs),
            "hyperbolic_pairs": self.hyperbolic_pairs,
            "transformation": {v: str(g)
                               for v, g in self.transformation.items()},
        }


def _compose(tf, sub, f_vars):
    """Update composite transformation: apply sub after tf."""
    return {v: g.substitute(sub) for v, g in tf.items()}


def _identity(f):
    return {v: Poly.variable(f.tower, f.vars, v, f.trunc) for v in f.vars}


def split(f):
    if f.tower.p == 2:
        return _split_char2(f)
    return _split_odd(f)


def _split_odd(f):
    tower = f.tower
    n = len(f.vars)
    zero_m = (0,) * n
    if not tower.is_zero(f.coeff(zero_m)):
        raise NotSingularError("nonzero constant term")
    for i in range(n):
        if not tower.is_zero(f.coeff(tuple(int(j == i) for j in range(n)))):
            raise NotSingularError("nonzero linear part")
    tf = _identity(f)
    g = f
    eliminated = []
    square_coeffs = []
    while True:
        q = g.homogeneous_part(2)
        live = [i for i in range(n) if i not in eliminated]
        # find a live variable with a quadratic occurrence
        diag = None
        for i in live:
            if not tower.is_zero(q.coeff(tuple(2 * int(j == i)
                                               for j in range(n)))):
                diag = i
                break
        if diag is None:
            mixed = None
            for i in live:
                for j in live:
                    if i < j:
                        m = tuple(int(k == i) + int(k == j) for k in range(n))
                        if not tower.is_zero(q.coeff(m)):
                            mixed = (i, j)
                            break
                if mixed:
                    break
            if mixed is None:
                break  # quadratic part exhausted
            i, j = mixed
            # create a diagonal term: x_i -> x_i, x_j -> x_j + x_i
            sub = {f.vars[j]: Poly.variable(tower, f.vars, f.vars[j], g.trunc)
                   + Poly.variable(tower, f.vars, f.vars[i], g.trunc)}
            g = g.substitute(sub)
            tf = _compose(tf, sub, f.vars)
            continue
        i = diag
        xi = f.vars[i]
        sq = tuple(2 * int(j == i) for j in range(n))
        c = g.coeff(sq)
        # remove every term x_i^k * m (k = 1 or k >= 3) via the pivot c*x_i^2
        guard = 0
        while True:
            off = _offending(g, i, sq, tower)
            if off is None:
                break
            m, k, cm = off
            shift = tuple((e - int(t == i)) if t == i else e
                          for t, e in enumerate(m))
            coeff = tower.neg(tower.div(cm, tower.scalar_mul(2, c)))
            delta = Poly.monomial(tower, f.vars, shift, coeff, g.trunc)
            sub = {xi: Poly.variable(tower, f.vars, xi, g.trunc) + delta}
            g = g.substitute(sub)
            tf = _compose(tf, sub, f.vars)
            guard += 1
            if guard > 4 * (g.trunc or 40):
                raise AssertionError("square completion did not converge")
        # normalize c*x_i^2 to x_i^2 (field extension for the square root)
        tower2, root = fieldtower.sqrt(tower, tower.inv(c))
        if tower2 != tower:
            g = g.lift_to(tower2)
            tf = {v: h.lift_to(tower2) for v, h in tf.items()}
            tower = tower2
        sub = {xi: Poly.variable(tower, f.vars, xi, g.trunc).scale(root)}
        g = g.substitute(sub)
        tf = _compose(tf, sub, f.vars)
        eliminated.append(i)
        square_coeffs.append(tower.one())
    residual_vars = [v for k, v in enumerate(f.vars) if k not in eliminated]
    crk = len(residual_vars)
    sq_part = Poly(tower, f.vars,
                   {tuple(2 * int(j == i) for j in range(n)): tower.one()
                    for i in eliminated}, g.trunc)
    residual_embedded = g - sq_part
    residual = residual_embedded.project(residual_vars) if crk else \
        Poly.zero(tower, (), g.trunc)
    return SplitResult(residual, crk, tf, square_coeffs, 0, tower, g)


def _offending(g, i, sq, tower):
    """Lowest-degree term x_i^k * m with k = 1 or k >= 3 (excluding x_i^2)."""
    best = None
    for m, c in g.terms.items():
        k = m[i]
        if k == 0 or m == sq:
            continue
        if k == 2 and sum(m) == 2:
            continue
        if k == 1 or k >= 3 or (k == 2 and sum(m) > 2):
            d = sum(m)
            key = (d, m)
            if best is None or key < best[0]:
                best = (key, m, k, c)
    if best is None:
        return None
    return best[1], best[2], best[3]


def _split_char2(f):
    tower = f.tower
    n = len(f.vars)
    if not tower.is_zero(f.coeff((0,) * n)):
        raise NotSingularError("nonzero constant term")
    for i in range(n):
        if not tower.is_zero(f.coeff(tuple(int(j == i) for j in range(n)))):
            raise NotSingularError("nonzero linear part")
    tf = _identity(f)
    g = f
    used = []
    pairs = 0
    while True:
        q = g.homogeneous_part(2)
        live = [i for i in range(n) if i not in used]
        mixed = None
        for i in live:
            for j in live:
                if i < j:
                    m = tuple(int(k == i) + int(k == j) for k in range(n))
                    if not tower.is_zero(q.coeff(m)):
                        mixed = (i, j, q.coeff(m))
                        break
            if mixed:
                break
        if mixed is None:
            break
        i, j, cij = mixed
        xi, xj = f.vars[i], f.vars[j]
        # scale to make the plane coefficient 1
        sub = {xj: Poly.variable(tower, f.vars, xj, g.trunc).scale(
            tower.inv(cij))}
        g = g.substitute(sub)
        tf = _compose(tf, sub, f.vars)
        # clear the two diagonal squares of the plane first: x_i -> x_i+l*x_j
        # with d1*l^2 + l + d2 = 0 removes x_j^2, then x_j -> x_j+d1*x_i
        # removes x_i^2 (order matters, otherwise the sweep oscillates)
        sqi = tuple(2 * int(k == i) for k in range(n))
        sqj = tuple(2 * int(k == j) for k in range(n))
        d1, d2 = g.coeff(sqi), g.coeff(sqj)
        if not tower.is_zero(d2):
            tower2, lam = fieldtower.adjoin_root(
                tower, [d2, tower.one(), d1])
            if tower2 != tower:
                g = g.lift_to(tower2)
                tf = {v: h.lift_to(tower2) for v, h in tf.items()}
                tower = tower2
                lamr = lam
            else:
                lamr = lam
            sub = {xi: Poly.variable(tower, f.vars, xi, g.trunc)
                   + Poly.variable(tower, f.vars, xj, g.trunc).scale(lamr)}
            g = g.substitute(sub)
            tf = _compose(tf, sub, f.vars)
        d1 = g.coeff(sqi)
        if not tower.is_zero(d1):
            sub = {xj: Poly.variable(tower, f.vars, xj, g.trunc)
                   + Poly.variable(tower, f.vars, xi, g.trunc).scale(d1)}
            g = g.substitute(sub)
            tf = _compose(tf, sub, f.vars)
        # sweep all other terms involving x_i or x_j into the plane
        guard = 0
        target = tuple(int(k == i) + int(k == j) for k in range(n))
        while True:
            off = None
            for m, c in g.terms.items():
                if m == target:
                    continue
                if m[i] or m[j]:
                    key = (sum(m), m)
                    if off is None or key < off[0]:
                        off = (key, m, c)
            if off is None:
                break
            _, m, c = off
            if m[i]:
                # kill via x_j -> x_j + c * (m / x_i)
                shift = tuple(e - int(t == i) if t == i else e
                              for t, e in enumerate(m))
                sub = {xj: Poly.variable(tower, f.vars, xj, g.trunc)
                       + Poly.monomial(tower, f.vars, shift, c, g.trunc)}
            else:
                shift = tuple(e - int(t == j) if t == j else e
                              for t, e in enumerate(m))
                sub = {xi: Poly.variable(tower, f.vars, xi, g.trunc)
                       + Poly.monomial(tower, f.vars, shift, c, g.trunc)}
            g = g.substitute(sub)
            tf = _compose(tf, sub, f.vars)
            guard += 1
            if guard > 6 * (g.trunc or 40) * n:
                raise AssertionError("hyperbolic extraction did not converge")
        used.extend([i, j])
        pairs += 1
    residual_vars = [v for k, v in enumerate(f.vars) if k not in used]
    crk = n - 2 * pairs
    plane_part = Poly(tower, f.vars, {}, g.trunc)
    for k in range(0, len(used), 2):
        i, j = used[k], used[k + 1]
        m = tuple(int(t == i) + int(t == j) for t in range(n))
        plane_part = plane_part + Poly.monomial(tower, f.vars, m,
                                                trunc=g.trunc)
    residual_embedded = g - plane_part
    residual = residual_embedded.project(residual_vars) if crk else \
        Poly.zero(tower, (), g.trunc)
    return SplitResult(residual, crk, tf, [], pairs, tower, g)
