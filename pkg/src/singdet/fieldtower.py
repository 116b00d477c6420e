"""Exact arithmetic in F_p and in towers of explicit finite extensions.

A tower starts at F_p and grows by adjoining roots of univariate
polynomials: each level is recorded by the monic minimal polynomial of
its generator over the level below.  Towers are immutable; adjoining a
root returns a new tower that extends the old one, and elements of the
old tower lift into the new one by zero padding.

Element representation ("rep"):
  * level 0: an int in [0, p)
  * level k: a tuple of exactly deg_k reps of level k-1 (coefficients of
    1, g_k, g_k^2, ... in little-endian order)

Reps are canonical, hashable and comparable once flattened to the F_p
coefficient vector, which fixes every root tie-break in the package.
"""

import random
from functools import lru_cache


class NonPrimeError(ValueError):
    pass


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldTower:
    """F_p extended by a chain of monic irreducible minimal polynomials.

    Towers are few and long-lived; prime-field instances swap in int-only
    arithmetic fast paths for the hot loops.
    """

    def __init__(self, p, levels=()):
        if not is_prime(p):
            raise NonPrimeError("characteristic must be prime, got %r" % (p,))
        self.p = p
        self.levels = tuple(levels)  # each entry: tuple of lower-level reps, monic
        self.degrees = tuple(len(m) - 1 for m in self.levels)
        deg = 1
        for d in self.degrees:
            deg *= d
        self.degree = deg
        self._order = p ** deg
        self.nlevels = len(self.levels)
        if not self.levels:
            # prime-field fast paths (the common case in hot loops)
            self.add = self._add_prime
            self.sub = self._sub_prime
            self.neg = self._neg_prime
            self.mul = self._mul_prime
            self.is_zero = self._is_zero_prime
            self.inv = self._inv_prime
            self.scalar_mul = self._scalar_mul_prime

    def _add_prime(self, a, b, level=None):
        return (a + b) % self.p

    def _sub_prime(self, a, b, level=None):
        return (a - b) % self.p

    def _neg_prime(self, a, level=None):
        return (-a) % self.p

    def _mul_prime(self, a, b, level=None):
        return (a * b) % self.p

    def _is_zero_prime(self, a, level=None):
        return a == 0

    def _inv_prime(self, a, level=None):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, self.p - 2, self.p)

    def _scalar_mul_prime(self, c, a, level=None):
        return (c * a) % self.p

    @property
    def order(self):
        return self._order

    def __eq__(self, other):
        return (isinstance(other, FieldTower)
                and self.p == other.p and self.levels == other.levels)

    def __hash__(self):
        return hash((self.p, self.levels))

    def __repr__(self):
        if not self.levels:
            return "GF(%d)" % self.p
        return "GF(%d^%d)@%d levels" % (self.p, self.degree, self.nlevels)

    def extends(self, other):
        """True if self is built on top of other (same p, prefix levels)."""
        return (self.p == other.p
                and self.levels[: other.nlevels] == other.levels)

    # ---- rep constructors -------------------------------------------------

    def zero(self, level=None):
        if level is None:
            level = self.nlevels
        r = 0
        for k in range(level):
            r = (r,) + (self.zero(k),) * (self.degrees[k] - 1)
        return r

    def one(self, level=None):
        if level is None:
            level = self.nlevels
        r = 1
        for k in range(level):
            r = (r,) + (self.zero(k),) * (self.degrees[k] - 1)
        return r

    def from_int(self, c, level=None):
        if level is None:
            level = self.nlevels
        r = c % self.p
        for k in range(level):
            r = (r,) + (self.zero(k),) * (self.degrees[k] - 1)
        return r

    def generator(self, idx=None):
        """Rep of the generator of level idx (1-based; default topmost)."""
        if idx is None:
            idx = self.nlevels
        if idx < 1 or idx > self.nlevels:
            raise ValueError("no generator %r" % (idx,))
        r = self.one(idx - 1)
        z = self.zero(idx - 1)
        r = (z, r) + (z,) * (self.degrees[idx - 1] - 2)
        for k in range(idx, self.nlevels):
            r = (r,) + (self.zero(k),) * (self.degrees[k] - 1)
        return r

    def lift_from(self, other, rep):
        """Lift a rep of subtower other into self by zero padding."""
        if not self.extends(other):
            raise ValueError("not a subtower")
        for k in range(other.nlevels, self.nlevels):
            rep = (rep,) + (self.zero(k),) * (self.degrees[k] - 1)
        return rep

    # ---- arithmetic on reps ----------------------------------------------

    def add(self, a, b, level=None):
        if level is None:
            level = self.nlevels
        if level == 0:
            return (a + b) % self.p
        return tuple(self.add(x, y, level - 1) for x, y in zip(a, b))

    def neg(self, a, level=None):
        if level is None:
            level = self.nlevels
        if level == 0:
            return (-a) % self.p
        return tuple(self.neg(x, level - 1) for x in a)

    def sub(self, a, b, level=None):
        if level is None:
            level = self.nlevels
        if level == 0:
            return (a - b) % self.p
        return tuple(self.sub(x, y, level - 1) for x, y in zip(a, b))

    def is_zero(self, a, level=None):
        if level is None:
            level = self.nlevels
        if level == 0:
            return a == 0
        return all(self.is_zero(x, level - 1) for x in a)

    def scalar_mul(self, c, a, level=None):
        """Multiply rep a by an int scalar c."""
        if level is None:
            level = self.nlevels
        if level == 0:
            return (c * a) % self.p
        return tuple(self.scalar_mul(c, x, level - 1) for x in a)

    def mul(self, a, b, level=None):
        if level is None:
            level = self.nlevels
        if level == 0:
            return (a * b) % self.p
        d = self.degrees[level - 1]
        lo = level - 1
        zero = self.zero(lo)
        # schoolbook product, then reduce by the level's minimal polynomial
        prod = [zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if self.is_zero(x, lo):
                continue
            for j, y in enumerate(b):
                if self.is_zero(y, lo):
                    continue
                prod[i + j] = self.add(prod[i + j], self.mul(x, y, lo), lo)
        m = self.levels[level - 1]
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if self.is_zero(c, lo):
                continue
            # x^k = x^(k-d) * (x^d) and x^d = -(m_0 + ... + m_{d-1} x^{d-1})
            for j in range(d):
                t = self.mul(c, m[j], lo)
                prod[k - d + j] = self.sub(prod[k - d + j], t, lo)
        return tuple(prod[:d])

    def inv(self, a, level=None):
        if level is None:
            level = self.nlevels
        if level == 0:
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
            return pow(a, self.p - 2, self.p)
        if self.is_zero(a, level):
            raise ZeroDivisionError("inverse of zero in tower")
        lo = level - 1
        # extended Euclid in (level-1)[t] against the minimal polynomial
        m = list(self.levels[level - 1])
        r0, r1 = m, _trim(self, list(a), lo)
        s0, s1 = [], [self.one(lo)]
        while r1:
            q, r = _divmod(self, r0, r1, lo)
            r0, r1 = r1, r
            s0, s1 = s1, _sub_poly(self, s0, _mul_poly(self, q, s1, lo), lo)
        # r0 = gcd (degree 0 since m irreducible), s0 * a = r0 mod m
        c = self.inv(r0[0], lo)
        out = [self.mul(c, x, lo) for x in s0]
        d = self.degrees[level - 1]
        out = out[:d] + [self.zero(lo)] * (d - len(out))
        return tuple(out)

    def div(self, a, b, level=None):
        return self.mul(a, self.inv(b, level), level)

    def pow(self, a, n, level=None):
        if level is None:
            level = self.nlevels
        if n < 0:
            return self.pow(self.inv(a, level), -n, level)
        r = self.one(level)
        while n:
            if n & 1:
                r = self.mul(r, a, level)
            a = self.mul(a, a, level)
            n >>= 1
        return r

    def frobenius(self, a):
        return self.pow(a, self.p)

    def pth_root(self, a):
        """Unique p-th root (Frobenius is bijective on a finite field)."""
        return self.pow(a, self.p ** (self.degree - 1)) if self.degree > 1 else a

    def nth_root_exists_locally(self, a, n):
        if self.is_zero(a):
            return True
        e = (self._order - 1) // _gcd_int(n, self._order - 1)
        return self.is_zero(self.sub(self.pow(a, e), self.one()))

    # ---- canonical flattening and order ------------------------------------

    def flatten(self, a, level=None):
        """F_p coefficient vector of rep a, little-endian product basis."""
        if level is None:
            level = self.nlevels
        if level == 0:
            return (a,)
        out = ()
        for x in a:
            out += self.flatten(x, level - 1)
        return out

    def unflatten(self, vec, level=None):
        if level is None:
            level = self.nlevels
        if level == 0:
            return vec[0] % self.p
        d = self.degrees[level - 1]
        step = len(vec) // d
        return tuple(self.unflatten(vec[i * step:(i + 1) * step], level - 1)
                     for i in range(d))

    def key(self, a):
        return self.flatten(a)

    def all_elements(self):
        """Iterate every element rep in canonical order (small towers only)."""
        k = self.degree
        p = self.p
        for idx in range(p ** k):
            vec = []
            m = idx
            for _ in range(k):
                vec.append(m % p)
                m //= p
            yield self.unflatten(tuple(vec))

    def rep_str(self, a):
        """Print a rep as a polynomial in g1, g2, ... over F_p."""
        vec = self.flatten(a)
        if all(c == 0 for c in vec):
            return "0"
        terms = []
        for idx, c in enumerate(vec):
            if c == 0:
                continue
            mono = _basis_mono_str(self, idx)
            if mono == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append("%d*%s" % (c, mono))
        return "+".join(reversed(terms))


def _basis_mono_str(tower, idx):
    parts = []
    for lvl, d in enumerate(tower.degrees, start=1):
        e = idx % d
        idx //= d
        if e == 1:
            parts.append("g%d" % lvl)
        elif e > 1:
            parts.append("g%d^%d" % (lvl, e))
    return "*".join(parts) if parts else "1"


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def _rep(self, other):
    if isinstance(other, FieldElement):
        if other.tower != self.tower:
            raise ValueError("elements of different towers")
        return other.rep
    if isinstance(other, int):
        return self.tower.from_int(other)
    return other


class FieldElement:
    """An element of a FieldTower with canonical rep; total order by
    lexicographic comparison of F_p coefficient vectors."""

    __slots__ = ("tower", "rep")

    def __init__(self, tower, rep):
        self.tower = tower
        self.rep = rep

    @classmethod
    def from_int(cls, tower, c):
        return cls(tower, tower.from_int(c))

    def lift(self, tower):
        return FieldElement(tower, tower.lift_from(self.tower, self.rep))

    def is_zero(self):
        return self.tower.is_zero(self.rep)

    def __add__(self, other):
        return FieldElement(self.tower, self.tower.add(self.rep, _rep(self, other)))

    def __sub__(self, other):
        return FieldElement(self.tower, self.tower.sub(self.rep, _rep(self, other)))

    def __mul__(self, other):
        return FieldElement(self.tower, self.tower.mul(self.rep, _rep(self, other)))

    def __truediv__(self, other):
        return FieldElement(self.tower, self.tower.div(self.rep, _rep(self, other)))

    def __pow__(self, n):
        return FieldElement(self.tower, self.tower.pow(self.rep, n))

    def __neg__(self):
        return FieldElement(self.tower, self.tower.neg(self.rep))

    def inverse(self):
        return FieldElement(self.tower, self.tower.inv(self.rep))

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.tower == other.tower and self.rep == other.rep

    def __hash__(self):
        return hash((self.tower.p, self.tower.nlevels, self.rep))

    def __lt__(self, other):
        return self.tower.key(self.rep) < other.tower.key(other.rep)

    def __str__(self):
        return self.tower.rep_str(self.rep)

    def __repr__(self):
        return "FieldElement(%s)" % self


# ---------------------------------------------------------------------------
# univariate polynomials over a tower: list of reps, ascending, no top zeros
# ---------------------------------------------------------------------------

def _trim(tower, coeffs, level=None):
    while coeffs and tower.is_zero(coeffs[-1], level):
        coeffs.pop()
    return coeffs


def _sub_poly(tower, a, b, level=None):
    n = max(len(a), len(b))
    z = tower.zero(level) if level is not None else tower.zero()
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else z
        y = b[i] if i < len(b) else z
        out.append(tower.sub(x, y, level))
    return _trim(tower, out, level)


def _mul_poly(tower, a, b, level=None):
    if not a or not b:
        return []
    z = tower.zero(level) if level is not None else tower.zero()
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if tower.is_zero(x, level):
            continue
        for j, y in enumerate(b):
            out[i + j] = tower.add(out[i + j], tower.mul(x, y, level), level)
    return _trim(tower, out, level)


def _divmod(tower, a, b, level=None):
    """Quotient and remainder of univariate polys over the tower."""
    a = list(a)
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    z = tower.zero(level) if level is not None else tower.zero()
    db = len(b) - 1
    inv_lead = tower.inv(b[-1], level)
    q = [z] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = tower.mul(a[-1], inv_lead, level)
        k = len(a) - 1 - db
        q[k] = c
        for j in range(db + 1):
            a[k + j] = tower.sub(a[k + j], tower.mul(c, b[j], level), level)
        _trim(tower, a, level)
    return _trim(tower, q, level), a


# public aliases used by the rest of the package
def uni_trim(tower, c):
    return _trim(tower, list(c))


def uni_add(tower, a, b):
    return _sub_poly(tower, a, [tower.neg(x) for x in b])


def uni_sub(tower, a, b):
    return _sub_poly(tower, a, b)


def uni_mul(tower, a, b):
    return _mul_poly(tower, a, b)


def uni_divmod(tower, a, b):
    return _divmod(tower, a, b)


def uni_scale(tower, c, a):
    return _trim(tower, [tower.mul(c, x) for x in a])


def uni_monic(tower, a):
    if not a:
        return []
    return uni_scale(tower, tower.inv(a[-1]), a)


def uni_eval(tower, a, x):
    r = tower.zero()
    for c in reversed(a):
        r = tower.add(tower.mul(r, x), c)
    return r


def uni_derivative(tower, a):
    out = []
    for i in range(1, len(a)):
        out.append(tower.scalar_mul(i, a[i]))
    return _trim(tower, out)


def uni_gcd(tower, a, b):
    a, b = _trim(tower, list(a)), _trim(tower, list(b))
    while b:
        _, r = _divmod(tower, a, b)
        a, b = b, r
    return uni_monic(tower, a)


def uni_pow_mod(tower, a, n, m):
    r = [tower.one()]
    a = _divmod(tower, a, m)[1]
    while n:
        if n & 1:
            r = _divmod(tower, _mul_poly(tower, r, a), m)[1]
        a = _divmod(tower, _mul_poly(tower, a, a), m)[1]
        n >>= 1
    return r


def uni_from_roots(tower, roots):
    f = [tower.one()]
    for r in roots:
        f = _mul_poly(tower, f, [tower.neg(r), tower.one()])
    return f


def uni_key(tower, a):
    return (len(a),) + tuple(tower.key(c) for c in a)


# ---------------------------------------------------------------------------
# factorization: squarefree / distinct degree / equal degree
# ---------------------------------------------------------------------------

def squarefree_decomposition(tower, f):
    """List of (squarefree monic factor, multiplicity), Yun-style in char p."""
    f = uni_monic(tower, f)
    if len(f) <= 1:
        return []
    out = {}
    _sqf_collect(tower, f, 1, out)
    return sorted(out.items(), key=lambda kv: (kv[1], uni_key(tower, kv[0])))


def _sqf_collect(tower, f, mult, out):
    p = tower.p
    df = uni_derivative(tower, f)
    if not df:
        # f = g(t^p); take p-th roots of coefficients and recurse
        g = [tower.pth_root(f[i]) for i in range(0, len(f), p)]
        _sqf_collect(tower, g, mult * p, out)
        return
    c = uni_gcd(tower, f, df)
    w = _divmod(tower, f, c)[0]  # product of squarefree part
    i = 1
    while len(w) > 1:
        y = uni_gcd(tower, w, c)
        z = _divmod(tower, w, y)[0]
        if len(z) > 1:
            key = tuple(tower.key(x) for x in z)
            _merge_factor(tower, z, mult * i, out)
        w = y
        c = _divmod(tower, c, y)[0]
        i += 1
    if len(c) > 1:
        _sqf_collect(tower, c, mult * p, out)


def _merge_factor(tower, z, mult, out):
    key = tuple(z)
    out[key] = out.get(key, 0) + mult


def distinct_degree_factorization(tower, f):
    """Split squarefree monic f into products of irreducibles per degree."""
    q = tower.order
    out = []
    h = [tower.zero(), tower.one()]  # t
    x = [tower.zero(), tower.one()]
    d = 0
    f = uni_monic(tower, list(f))
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = uni_pow_mod(tower, h, q, f)
        g = uni_gcd(tower, _sub_poly(tower, h, x), f)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod(tower, f, g)[0]
            if len(f) > 1:
                h = _divmod(tower, h, f)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def equal_degree_split(tower, f, d, rng):
    """One random split of monic squarefree f = product of irreducibles of
    degree d (len(f)-1 > d)."""
    q = tower.order
    n = len(f) - 1
    while True:
        r = [tower.unflatten(tuple(rng.randrange(tower.p)
                                   for _ in range(tower.degree)))
             for _ in range(n)]
        r = _trim(tower, r)
        if len(r) <= 1:
            continue
        g = uni_gcd(tower, r, f)
        if 1 < len(g) < len(f):
            return g
        if tower.p == 2:
            # trace map over GF(2^(k*d))
            h = list(r)
            acc = list(r)
            for _ in range(tower.degree * d - 1):
                h = uni_pow_mod(tower, h, 2, f)
                acc = _trim(tower, [tower.add(a, b) for a, b in
                                    _pad_pair(tower, acc, h)])
            g = uni_gcd(tower, acc, f)
        else:
            e = (q ** d - 1) // 2
            h = uni_pow_mod(tower, r, e, f)
            g = uni_gcd(tower, _sub_poly(tower, h, [tower.one()]), f)
        if 1 < len(g) < len(f):
            return g


def _pad_pair(tower, a, b):
    n = max(len(a), len(b))
    z = tower.zero()
    a = list(a) + [z] * (n - len(a))
    b = list(b) + [z] * (n - len(b))
    return zip(a, b)


def irreducible_factors(tower, f, seed=0):
    """Monic irreducible factors of f with multiplicity, canonically sorted."""
    f = _trim(tower, list(f))
    if len(f) <= 1:
        raise ValueError("cannot factor a constant")
    rng = random.Random((seed, tower.p, tower.degree, len(f)).__hash__())
    out = []
    for sqf, mult in squarefree_decomposition(tower, f):
        for part, d in distinct_degree_factorization(tower, list(sqf)):
            stack = [part]
            while stack:
                g = stack.pop()
                if len(g) - 1 == d:
                    out.append((uni_monic(tower, g), mult))
                    continue
                h = equal_degree_split(tower, g, d, rng)
                stack.append(h)
                stack.append(_divmod(tower, g, h)[0])
    out.sort(key=lambda fm: (len(fm[0]), uni_key(tower, fm[0])))
    return out


def roots_in(tower, f, seed=0):
    """All roots of f lying in the tower, canonically sorted, no multiplicity."""
    f = _trim(tower, list(f))
    if len(f) <= 1:
        return []
    # gcd with t^q - t isolates the split part
    q = tower.order
    h = uni_pow_mod(tower, [tower.zero(), tower.one()], q, f)
    lin = uni_gcd(tower, _sub_poly(tower, h, [tower.zero(), tower.one()]), f)
    if len(lin) <= 1:
        return []
    roots = []
    for g, _ in irreducible_factors(tower, lin, seed=seed):
        if len(g) == 2:
            roots.append(tower.neg(g[0]))
    roots.sort(key=tower.key)
    return roots


# ---------------------------------------------------------------------------
# the public tower operations of the package
# ---------------------------------------------------------------------------

def make_prime_field(p):
    """F_p as a degree-1 tower."""
    return FieldTower(p)


def adjoin_root(tower, coeffs, seed=0):
    """Return (tower', root rep in tower') with m(root) = 0.

    coeffs: univariate polynomial over the tower (list of reps or
    FieldElements, ascending).  If m already has a root in the tower the
    tower is returned unchanged with the smallest root in canonical order;
    otherwise the tower is extended by the canonically smallest irreducible
    factor of m.
    """
    m = [_coerce_rep(tower, c) for c in coeffs]
    m = _trim(tower, m)
    if len(m) <= 1:
        raise ValueError("polynomial must be nonconstant")
    rts = roots_in(tower, m, seed=seed)
    if rts:
        return tower, rts[0]
    facs = irreducible_factors(tower, m, seed=seed)
    minpoly = min((f for f, _ in facs if len(f) > 2),
                  key=lambda f: (len(f), uni_key(tower, f)), default=None)
    if minpoly is None:
        raise AssertionError("no root and no nonlinear factor")
    lifted = tuple(minpoly)
    new = FieldTower(tower.p, tower.levels + (lifted,))
    return new, new.generator()


def sqrt(tower, a, seed=0):
    """Return (tower', r) with r*r = a, extending the tower if needed.

    In characteristic 2 squaring is bijective, so the root is unique and no
    extension happens.  Otherwise the smaller square root in canonical order
    is returned.
    """
    a = _coerce_rep(tower, a)
    if tower.is_zero(a):
        return tower, a
    if tower.p == 2:
        return tower, tower.pth_root(a)
    t2, r = adjoin_root(tower, [tower.neg(a), tower.zero(), tower.one()],
                        seed=seed)
    return t2, r


def nth_root(tower, a, n, seed=0):
    """Return (tower', r) with r**n = a (smallest such r, extending if needed)."""
    a = _coerce_rep(tower, a)
    if n == 0:
        raise ValueError("0th root")
    if tower.is_zero(a):
        return tower, a
    # split out the p-part: in char p every element has a unique p^e-th root
    p = tower.p
    while n % p == 0:
        a = tower.pth_root(a)
        n //= p
    if n == 1:
        return tower, a
    m = [tower.neg(a)] + [tower.zero()] * (n - 1) + [tower.one()]
    return adjoin_root(tower, m, seed=seed)


def _coerce_rep(tower, c):
    if isinstance(c, FieldElement):
        if c.tower != tower:
            return tower.lift_from(c.tower, c.rep)
        return c.rep
    if isinstance(c, int):
        return tower.from_int(c)
    return c
