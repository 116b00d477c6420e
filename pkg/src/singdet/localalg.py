"""Local-ring computations at the origin.

Standard bases are computed with Buchberger's loop and the Mora weak
normal form for the local order (smallest total degree leads, graded
reverse lex tie-break).  The Milnor number is the count of standard
monomials of the Jacobian ideal; an independent truncated linear-algebra
oracle (Macaulay matrix ranks with a Nakayama-style stabilization
certificate) double-checks it without ever touching the Mora code path.
"""

import heapq
import math
from itertools import combinations_with_replacement

from .polyring import Poly, local_key


class NonIsolatedError(ArithmeticError):
    pass


class NotSingularError(ValueError):
    pass


class UnstabilizedError(ArithmeticError):
    def __init__(self, lower_bound, cap):
        super().__init__("did not stabilize below degree %d (mu >= %d)"
                         % (cap, lower_bound))
        self.lower_bound = lower_bound
        self.cap = cap


# ---------------------------------------------------------------------------
# Mora standard bases
# ---------------------------------------------------------------------------

def leading_term(f):
    """(monomial, coeff) maximal in the local order."""
    m = max(f.terms, key=local_key)
    return m, f.terms[m]


def ecart(f):
    return f.degree() - sum(leading_term(f)[0])


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _reduce_lead(h, g, tower):
    """h - (lt(h)/lt(g)) * g."""
    mh, ch = leading_term(h)
    mg, cg = leading_term(g)
    q = tuple(a - b for a, b in zip(mh, mg))
    c = tower.div(ch, cg)
    return h - g.mul_monomial(q, c)


def _elem(g):
    """Cached (poly, lead monomial, lead coeff, ecart, lead degree) tuple."""
    lm, lc = leading_term(g)
    d = sum(lm)
    return (g, lm, lc, g.degree() - d, d)


def _nf_elems(f, T):
    """Mora weak normal form of f against cached elements T (local order).

    Reducer choice: smallest ecart, ties by smallest leading monomial; the
    intermediate h joins the reducer list whenever its ecart is smaller.
    Reducers are kept sorted by that key so the scan stops at the first
    divisor.
    """
    tower = f.tower
    trunc = f.trunc
    zero = tower.zero()
    is_zero = tower.is_zero
    mul = tower.mul
    sub = tower.sub
    T = sorted(T, key=lambda e: (e[3], local_key(e[1])))
    h = dict(f.terms)
    # lazy min-heap on (degree, reversed exponents) tracks the local lead
    hq = [(sum(m), m[::-1], m) for m in h]
    heapq.heapify(hq)
    dh_ub = f.degree()  # upper bound; exact enough for truncated runs
    while h:
        while hq and hq[0][2] not in h:
            heapq.heappop(hq)
        if not hq:
            break
        dmh, _, mh = hq[0]
        hit = None
        for e in T:
            if e[4] > dmh:
                continue
            lm = e[1]
            ok = True
            for a, b in zip(lm, mh):
                if a > b:
                    ok = False
                    break
            if ok:
                hit = e
                break
        if hit is None:
            return f.clone(h)
        g, mg, cg, eg, _ = hit
        if trunc is None:
            dh_ub = max(sum(m) for m in h)
        if eg > dh_ub - dmh:
            he = _elem(f.clone(h))
            key = (he[3], local_key(he[1]))
            lo = 0
            while lo < len(T) and (T[lo][3], local_key(T[lo][1])) <= key:
                lo += 1
            T.insert(lo, he)
        q = tuple(a - b for a, b in zip(mh, mg))
        dq = dmh - sum(mg)
        c = tower.div(h[mh], cg)
        for m, gc in g.terms.items():
            dm = dq + sum(m)
            if trunc is not None and dm > trunc:
                continue
            mm = tuple(a + b for a, b in zip(q, m))
            old = h.get(mm)
            s = sub(old, mul(c, gc)) if old is not None else sub(zero, mul(c, gc))
            if is_zero(s):
                if old is not None:
                    del h[mm]
            else:
                if old is None:
                    heapq.heappush(hq, (dm, mm[::-1], mm))
                    if dm > dh_ub:
                        dh_ub = dm
                h[mm] = s
    return f.clone({})


def mora_normal_form(f, G):
    """Mora weak normal form of f against the polynomials G."""
    return _nf_elems(f, [_elem(g) for g in G if not g.is_zero()])


def _spoly(f, g, tower):
    mf, cf = leading_term(f)
    mg, cg = leading_term(g)
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    a = f.mul_monomial(tuple(x - y for x, y in zip(lcm, mf)),
                       tower.inv(cf))
    b = g.mul_monomial(tuple(x - y for x, y in zip(lcm, mg)),
                       tower.inv(cg))
    return a - b


def standard_basis(gens, max_steps=50000):
    """Standard basis of the ideal generated by gens w.r.t. the local order."""
    G = [g for g in gens if not g.is_zero()]
    if not G:
        return []
    tower = G[0].tower
    G = sorted(G, key=lambda g: local_key(leading_term(g)[0]), reverse=True)
    elems = [_elem(g) for g in G]
    heap = []

    def push_pairs(k):
        mk = elems[k][1]
        k_mono = len(G[k].terms) == 1
        for i in range(k):
            if k_mono and len(G[i].terms) == 1:
                continue  # s-polynomial of two monomials is zero
            mi = elems[i][1]
            lcm = tuple(max(a, b) for a, b in zip(mi, mk))
            if lcm == tuple(a + b for a, b in zip(mi, mk)):
                continue  # coprime leads
            heapq.heappush(heap, ((sum(lcm), lcm), i, k))

    for k in range(len(G)):
        push_pairs(k)
    steps = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        steps += 1
        if steps > max_steps:
            raise NonIsolatedError("standard basis computation did not finish")
        h = _nf_elems(_spoly(G[i], G[j], tower), elems)
        if h.is_zero():
            continue
        G.append(h)
        elems.append(_elem(h))
        push_pairs(len(G) - 1)
    return G


def bounded_standard_basis(gens, B):
    """Standard basis of the image of (gens) in K[x]/m^B.

    All arithmetic is truncated at degree B-1.  Terms of degree >= B never
    produce leading monomials below B (the local order leads on the lowest
    degree), so the computed leading ideal is exact for the ideal + m^B.
    """
    g0 = [g.truncated(B - 1) for g in gens]
    return standard_basis([g for g in g0 if not g.is_zero()])


def leading_ideal(G):
    return [leading_term(g)[0] for g in G]


def _staircase_monomials(leads, nvars, cap=None):
    """Monomials outside the monomial ideal generated by leads, or None if
    infinitely many (some variable has no pure power among the corners).
    With cap set, degrees are cut at the cap instead (working mod m^cap)."""
    bound = []
    for i in range(nvars):
        pure = [m[i] for m in leads
                if all(e == 0 for k, e in enumerate(m) if k != i)]
        if not pure and cap is None:
            return None
        bound.append(min(pure) if pure else cap)
    if cap is not None:
        bound = [min(b, cap) for b in bound]
    out = []
    stack = [(0,) * nvars]
    seen = set(stack)
    while stack:
        m = stack.pop()
        if cap is not None and sum(m) >= cap:
            continue
        if any(_divides(l, m) for l in leads):
            continue
        out.append(m)
        for i in range(nvars):
            if m[i] + 1 <= bound[i]:
                m2 = m[:i] + (m[i] + 1,) + m[i + 1:]
                if m2 not in seen:
                    seen.add(m2)
                    stack.append(m2)
    return sorted(out, key=local_key, reverse=True)


class MilnorResult:
    """Milnor number plus a monomial basis of the local algebra when finite."""

    __slots__ = ("mu", "standard_monomials", "vars")

    def __init__(self, mu, standard_monomials=None, vars=()):
        self.mu = mu
        self.standard_monomials = standard_monomials
        self.vars = vars

    @property
    def finite(self):
        return self.mu != math.inf

    def to_json(self):
        from .polyring import monomial_str
        if not self.finite:
            return {"mu": "infinite"}
        return {"mu": self.mu,
                "standard_monomials": [monomial_str(m, self.vars)
                                       for m in self.standard_monomials]}

    def __repr__(self):
        return "MilnorResult(mu=%s)" % (self.mu,)


def milnor(f, cutoff=None):
    """Milnor number via a standard basis of the Jacobian ideal.

    Works in truncated rings with an escalating degree bound B; the answer is
    certified exact when no standard monomial of j(f) + m^B reaches degree
    B-1.  When that never happens below the cutoff the singularity is
    reported as non-isolated (mu = infinity); the cutoff defaults to twice
    the working truncation, far beyond every finite value the classification
    can use.
    """
    tower = f.tower
    if not tower.is_zero(f.coeff((0,) * len(f.vars))):
        raise ValueError("nonzero constant term")
    partials = [g for g in f.jacobian() if not g.is_zero()]
    if not partials:
        return MilnorResult(math.inf, None, f.vars)
    if cutoff is None:
        base = f.trunc if f.trunc is not None else 4 * tower.p + 10
        cutoff = max(2 * base, f.degree() + 4)
    B = min(cutoff, max(6, min(f.degree() + 2, cutoff)))
    while True:
        try:
            G = bounded_standard_basis(partials, B)
        except NonIsolatedError:
            # step budget exhausted: same verdict as an uncertified cutoff
            return MilnorResult(math.inf, None, f.vars)
        sm = _staircase_monomials(leading_ideal(G), len(f.vars), cap=B)
        if all(sum(m) < B - 1 for m in sm):
            return MilnorResult(len(sm), sm, f.vars)
        if B >= cutoff:
            return MilnorResult(math.inf, None, f.vars)
        B = min(cutoff, 2 * B)


# ---------------------------------------------------------------------------
# independent truncated oracle (Macaulay matrix, no Mora machinery)
# ---------------------------------------------------------------------------

def _monomials_upto(nvars, d):
    out = []
    for total in range(d + 1):
        for c in combinations_with_replacement(range(nvars), total):
            m = [0] * nvars
            for i in c:
                m[i] += 1
            out.append(tuple(m))
    return out


class _RowSpace:
    """Sparse row space over a tower with incremental rank updates."""

    def __init__(self, tower):
        self.tower = tower
        self.pivots = {}  # column -> reduced row (dict col->rep, 1 at pivot)

    def reduce(self, row):
        tw = self.tower
        row = dict(row)
        while row:
            c = min(row)
            if c not in self.pivots:
                return row, c
            piv = self.pivots[c]
            f = row[c]
            for col, val in piv.items():
                s = tw.sub(row.get(col, tw.zero()), tw.mul(f, val))
                if tw.is_zero(s):
                    row.pop(col, None)
                else:
                    row[col] = s
        return row, None

    def add(self, row):
        row, c = self.reduce(row)
        if c is None:
            return False
        tw = self.tower
        inv = tw.inv(row[c])
        row = {col: tw.mul(inv, val) for col, val in row.items()}
        self.pivots[c] = row
        return True

    def contains(self, row):
        r, c = self.reduce(row)
        return c is None

    @property
    def rank(self):
        return len(self.pivots)


def milnor_truncated(f, cap=40):
    """dim of the local algebra by exact linear algebra in jets.

    Computes dim K[x]/(j(f) + m^N) for increasing N until every monomial of
    degree N lies in the span of the truncated Jacobian shifts, which
    certifies m^N is inside the Jacobian ideal; raises UnstabilizedError at
    the cap.
    """
    tower = f.tower
    n = len(f.vars)
    if not tower.is_zero(f.coeff((0,) * n)):
        raise ValueError("nonzero constant term")
    partials = [g for g in f.jacobian() if not g.is_zero()]
    last_dim = 0
    N = 3
    while N <= cap:
        # columns in decreasing local order (degree ascending), so pivots sit
        # on leading monomials and degree-N columns come last
        monos = sorted(_monomials_upto(n, N), key=local_key, reverse=True)
        index = {m: i for i, m in enumerate(monos)}
        n_low = sum(1 for m in monos if sum(m) < N)
        rows = []
        for g in partials:
            og = g.order()
            for u in _monomials_upto(n, max(0, N - og)):
                du = sum(u)
                row = {}
                for m, c in g.terms.items():
                    if du + sum(m) > N:
                        continue
                    row[index[tuple(a + b for a, b in zip(u, m))]] = c
                if row:
                    rows.append((min(row), row))
        rows.sort(key=lambda r: r[0])
        space = _RowSpace(tower)
        for _, row in rows:
            space.add(row)
        stabilized = all(space.contains({i: tower.one()})
                         for i in range(n_low, len(monos)))
        piv = space.pivots
        rank_low = sum(1 for c in piv if c < n_low)
        dim_low = n_low - rank_low
        last_dim = dim_low
        if stabilized:
            sm = [monos[i] for i in range(n_low) if i not in piv]
            return MilnorResult(dim_low, sorted(sm, key=local_key,
                                                reverse=True), f.vars)
        N = min(cap, N + max(2, N // 2)) if N < cap else cap + 1
    raise UnstabilizedError(last_dim, cap)


# ---------------------------------------------------------------------------
# corank
# ---------------------------------------------------------------------------

def _matrix_rank(tower, M):
    space = _RowSpace(tower)
    r = 0
    for row in M:
        d = {i: c for i, c in enumerate(row) if not tower.is_zero(c)}
        if d and space.add(d):
            r += 1
    return r


def corank(f):
    """Number of variables the splitting lemma cannot remove.

    For odd characteristic this is n minus the rank of the Hessian at the
    origin.  In characteristic 2 the Hessian degenerates; the polar form
    b(u, w) = q(u+w) - q(u) - q(w) of the quadratic part is used instead and
    diagonal squares do not count towards the rank.
    """
    tower = f.tower
    n = len(f.vars)
    if not tower.is_zero(f.coeff((0,) * n)):
        raise NotSingularError("nonzero constant term")
    for i in range(n):
        m = tuple(1 if j == i else 0 for j in range(n))
        if not tower.is_zero(f.coeff(m)):
            raise NotSingularError("nonzero linear part")
    q = f.homogeneous_part(2)
    H = [[tower.zero() for _ in range(n)] for _ in range(n)]
    for m, c in q.terms.items():
        idx = [i for i, e in enumerate(m) if e]
        if len(idx) == 1:
            i = idx[0]
            if tower.p != 2:
                H[i][i] = tower.scalar_mul(2, c)
        else:
            i, j = idx
            H[i][j] = c
            H[j][i] = c
    return n - _matrix_rank(tower, H)


# ---------------------------------------------------------------------------
# determinacy bound
# ---------------------------------------------------------------------------

def determinacy_bound(f, cutoff=None):
    """A sufficient right-determinacy degree: e + 2 for the least e with
    m^e contained in m^2 * j(f), membership checked by Mora normal forms.

    Membership is decided against a standard basis of m^2*j(f) + m^B; any
    success with e < B certifies genuine membership, so the bound is exact
    for the stated criterion.
    """
    n = len(f.vars)
    tower = f.tower
    partials = [g for g in f.jacobian() if not g.is_zero()]
    if not partials:
        raise NonIsolatedError("zero Jacobian ideal")
    gens = []
    for u in _monomials_upto(n, 2):
        if sum(u) != 2:
            continue
        for g in partials:
            gens.append(g.mul_monomial(u))
    if cutoff is None:
        base = f.trunc if f.trunc is not None else 4 * tower.p + 10
        cutoff = 2 * base + 8
    B = min(cutoff, max(8, f.degree() + 3))
    while True:
        G = bounded_standard_basis(gens, B)
        for e in range(1, B):
            ok = True
            for m in _monomials_upto(n, e):
                if sum(m) != e:
                    continue
                h = Poly.monomial(f.tower, f.vars, m, trunc=f.trunc)
                if not mora_normal_form(h, G).is_zero():
                    ok = False
                    break
            if ok:
                return e + 2
        if B >= cutoff:
            raise NonIsolatedError("no determinacy bound below %d" % cutoff)
        B = min(cutoff, 2 * B)


# ---------------------------------------------------------------------------
# modality floor certificates (two variables)
# ---------------------------------------------------------------------------

def _in_power_ideal(f, patterns):
    """Membership in a monomial ideal described by (min_a, min_b) corners."""
    for (a, b) in f.terms:
        if not any(a >= ca and b >= cb for ca, cb in patterns):
            return False
    return True


def modality_floor(f):
    """Largest certified lower bound 2+l from the two power-ideal families,
    plus the y*(x, y^3)^3 pattern (and its mirror) worth a floor of 3.

    Returns 0 when no certificate applies.
    """
    if len(f.vars) != 2 or f.is_zero():
        return 0
    best = 0
    l = 0
    while True:
        m = 3 + l
        fam1 = [(3, 0), (2, m), (1, 2 * m), (0, 3 * m)]
        fam2 = [(4, 0), (2, m), (0, 2 * m)]
        if _in_power_ideal(f, fam1) or _in_power_ideal(f, fam2):
            best = 2 + l
            l += 1
        else:
            break
    # f in <y> * <x, y^3>^3 (or the x/y mirror) also forces at least 3
    fam3 = [(3, 1), (2, 4), (1, 7), (0, 10)]
    fam3m = [(1, 3), (4, 2), (7, 1), (10, 0)]
    if best < 3 and (_in_power_ideal(f, fam3) or _in_power_ideal(f, fam3m)):
        best = 3
    return best
