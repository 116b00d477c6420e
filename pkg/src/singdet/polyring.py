"""Sparse multivariate polynomials over a field tower.

A Poly carries its tower, an ordered tuple of variable names, a dict
mapping exponent tuples to nonzero coefficient reps, and a truncation
bound: every operation drops monomials of total degree above the bound
(None means exact arithmetic, used for homogeneous form work).

Weighted filtrations are exact: weight vectors are tuples of Fractions
derived from anchor monomials, so tests like v(alpha) > 1 never touch
floating point.
"""

from fractions import Fraction

from .fieldtower import FieldElement


class ParseError(ValueError):
    def __init__(self, msg, pos):
        super().__init__("%s (at position %d)" % (msg, pos))
        self.pos = pos


class DegenerateAnchorsError(ValueError):
    pass


def _min_trunc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Poly:
    __slots__ = ("tower", "vars", "terms", "trunc")

    def __init__(self, tower, vars, terms=None, trunc=None):
        self.tower = tower
        self.vars = tuple(vars)
        self.trunc = trunc
        t = {}
        if terms:
            for m, c in terms.items():
                if tower.is_zero(c):
                    continue
                if trunc is not None and sum(m) > trunc:
                    continue
                t[m] = c
        self.terms = t

    # ---- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, tower, vars, trunc=None):
        return cls(tower, vars, {}, trunc)

    @classmethod
    def constant(cls, tower, vars, c, trunc=None):
        n = len(vars)
        return cls(tower, vars, {(0,) * n: c}, trunc)

    @classmethod
    def variable(cls, tower, vars, name, trunc=None):
        i = list(vars).index(name)
        m = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(tower, vars, {m: tower.one()}, trunc)

    @classmethod
    def monomial(cls, tower, vars, exps, coeff=None, trunc=None):
        c = tower.one() if coeff is None else coeff
        return cls(tower, vars, {tuple(exps): c}, trunc)

    def clone(self, terms=None, trunc="keep"):
        t = self.trunc if trunc == "keep" else trunc
        return Poly(self.tower, self.vars,
                    self.terms if terms is None else terms, t)

    # ---- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.tower.zero())

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def order(self):
        """Minimal total degree of a term (-1 for the zero poly)."""
        return min((sum(m) for m in self.terms), default=-1)

    def used_vars(self):
        used = [False] * len(self.vars)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.tower == other.tower and self.vars == other.vars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    # ---- ring operations ----------------------------------------------------

    def _check(self, other):
        if self.tower != other.tower or self.vars != other.vars:
            raise ValueError("polynomials over different rings")

    def __add__(self, other):
        self._check(other)
        tw = self.tower
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = tw.add(t.get(m, tw.zero()), c)
            if tw.is_zero(s):
                t.pop(m, None)
            else:
                t[m] = s
        return Poly(tw, self.vars, t, _min_trunc(self.trunc, other.trunc))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        tw = self.tower
        return self.clone({m: tw.neg(c) for m, c in self.terms.items()})

    def scale(self, c):
        tw = self.tower
        if tw.is_zero(c):
            return Poly.zero(tw, self.vars, self.trunc)
        return self.clone({m: tw.mul(c, x) for m, x in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        tw = self.tower
        trunc = _min_trunc(self.trunc, other.trunc)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for m1, c1 in a.items():
            d1 = sum(m1)
            for m2, c2 in b.items():
                if trunc is not None and d1 + sum(m2) > trunc:
                    continue
                m = tuple(x + y for x, y in zip(m1, m2))
                c = tw.mul(c1, c2)
                s = tw.add(out.get(m, tw.zero()), c)
                if tw.is_zero(s):
                    out.pop(m, None)
                else:
                    out[m] = s
        return Poly(tw, self.vars, out, trunc)

    def __pow__(self, n):
        r = Poly.constant(self.tower, self.vars, self.tower.one(), self.trunc)
        b = self
        while n:
            if n & 1:
                r = r * b
            n >>= 1
            if n:
                b = b * b
        return r

    def mul_monomial(self, exps, coeff=None):
        tw = self.tower
        c = tw.one() if coeff is None else coeff
        d = sum(exps)
        out = {}
        for m, x in self.terms.items():
            if self.trunc is not None and sum(m) + d > self.trunc:
                continue
            out[tuple(a + b for a, b in zip(m, exps))] = tw.mul(c, x)
        return self.clone(out)

    # ---- truncation and jets -------------------------------------------------

    def truncated(self, trunc):
        return Poly(self.tower, self.vars, self.terms, trunc)

    def jet(self, k):
        """Monomials of total degree <= k (keeps the truncation bound)."""
        return self.clone({m: c for m, c in self.terms.items() if sum(m) <= k})

    def homogeneous_part(self, k):
        return self.clone({m: c for m, c in self.terms.items() if sum(m) == k})

    def quasijet(self, anchors):
        """Drop every monomial with weight > 1 for the anchor hyperplane."""
        v = WeightForm.from_anchors(anchors, len(self.vars))
        return self.clone({m: c for m, c in self.terms.items()
                           if v.of(m) <= 1}), v

    # ---- calculus -------------------------------------------------------------

    def derivative(self, var):
        i = self.vars.index(var) if isinstance(var, str) else var
        tw = self.tower
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0 or e % tw.p == 0:
                continue
            m2 = m[:i] + (e - 1,) + m[i + 1:]
            c2 = tw.scalar_mul(e, c)
            s = tw.add(out.get(m2, tw.zero()), c2)
            if tw.is_zero(s):
                out.pop(m2, None)
            else:
                out[m2] = s
        return self.clone(out)

    def jacobian(self):
        return [self.derivative(i) for i in range(len(self.vars))]

    # ---- variable plumbing -----------------------------------------------------

    def lift_to(self, tower):
        """Reinterpret over an extension tower."""
        if tower == self.tower:
            return self
        lf = tower.lift_from
        return Poly(tower, self.vars,
                    {m: lf(self.tower, c) for m, c in self.terms.items()},
                    self.trunc)

    def rename(self, new_vars):
        if len(new_vars) != len(self.vars):
            raise ValueError("arity mismatch")
        return Poly(self.tower, tuple(new_vars), self.terms, self.trunc)

    def permute(self, perm):
        """perm[i] = position of old variable i in the new exponent tuple."""
        out = {}
        n = len(self.vars)
        for m, c in self.terms.items():
            m2 = [0] * n
            for i, e in enumerate(m):
                m2[perm[i]] = e
            out[tuple(m2)] = c
        return Poly(self.tower, self.vars, out, self.trunc)

    def project(self, keep):
        """Restrict to the variables named in keep; other exponents must be 0."""
        idx = [self.vars.index(v) for v in keep]
        out = {}
        for m, c in self.terms.items():
            for i, e in enumerate(m):
                if e and i not in idx:
                    raise ValueError("term uses dropped variable %s"
                                     % self.vars[i])
            out[tuple(m[i] for i in idx)] = c
        return Poly(self.tower, tuple(keep), out, self.trunc)

    def embed(self, big_vars):
        """View in a larger variable list (new variables get exponent 0)."""
        pos = [list(big_vars).index(v) for v in self.vars]
        n = len(big_vars)
        out = {}
        for m, c in self.terms.items():
            m2 = [0] * n
            for i, e in enumerate(m):
                m2[pos[i]] = e
            out[tuple(m2)] = c
        return Poly(self.tower, tuple(big_vars), out, self.trunc)

    # ---- substitution -----------------------------------------------------------

    def substitute(self, images):
        """Compose with the map var -> Poly; missing vars map to themselves.

        Truncates eagerly at the working bound.
        """
        tw = self.tower
        trunc = self.trunc
        imgs = []
        for i, v in enumerate(self.vars):
            g = images.get(v)
            if g is None:
                g = Poly.variable(tw, self.vars, v, trunc)
            else:
                if g.tower != tw or g.vars != self.vars:
                    raise ValueError("substitution image over wrong ring")
                g = g.truncated(_min_trunc(trunc, g.trunc))
                trunc = _min_trunc(trunc, g.trunc)
            imgs.append(g)
        powers = [[Poly.constant(tw, self.vars, tw.one(), trunc), g]
                  for g in imgs]

        def pw(i, e):
            lst = powers[i]
            while len(lst) <= e:
                lst.append(lst[-1] * lst[1])
            return lst[e]

        acc = Poly.zero(tw, self.vars, trunc)
        for m, c in sorted(self.terms.items(), key=lambda mc: sum(mc[0])):
            part = Poly.constant(tw, self.vars, c, trunc)
            for i, e in enumerate(m):
                if e:
                    part = part * pw(i, e)
            acc = acc + part
        return acc

    # ---- printing ----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        tw = self.tower
        parts = []
        for m in sorted(self.terms, key=degrevlex_key, reverse=True):
            c = self.terms[m]
            cs = tw.rep_str(c)
            mono = monomial_str(m, self.vars)
            if mono == "1":
                parts.append(cs if "+" not in cs else "(%s)" % cs)
            elif cs == "1":
                parts.append(mono)
            elif "+" in cs:
                parts.append("(%s)*%s" % (cs, mono))
            else:
                parts.append("%s*%s" % (cs, mono))
        return "+".join(parts)

    def __repr__(self):
        return "Poly(%s)" % self


def monomial_str(m, vars):
    parts = []
    for v, e in zip(vars, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append("%s^%d" % (v, e))
    return "*".join(parts) if parts else "1"


# ---- monomial orders -------------------------------------------------------

def degrevlex_key(m):
    """Sort key: larger key = larger monomial in graded reverse lex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def local_key(m):
    """Sort key for the local order: larger key = leading.

    Leading monomial has the smallest total degree; ties are broken as in
    graded reverse lex.
    """
    return (-sum(m), tuple(-e for e in reversed(m)))


# ---- weight forms ------------------------------------------------------------

class WeightForm:
    """Rational linear form v with v(anchor) = 1 for all anchor monomials."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        self.weights = tuple(Fraction(w) for w in weights)

    @classmethod
    def from_anchors(cls, anchors, n):
        anchors = [tuple(a) for a in anchors]
        if len(anchors) != n:
            raise DegenerateAnchorsError(
                "need %d anchors, got %d" % (n, len(anchors)))
        # solve the square system A v = (1,...,1) exactly
        A = [[Fraction(e) for e in a] + [Fraction(1)] for a in anchors]
        for col in range(n):
            piv = next((r for r in range(col, n) if A[r][col] != 0), None)
            if piv is None:
                raise DegenerateAnchorsError("anchors do not determine a "
                                             "unique hyperplane")
            A[col], A[piv] = A[piv], A[col]
            A[col] = [x / A[col][col] for x in A[col]]
            for r in range(n):
                if r != col and A[r][col] != 0:
                    f = A[r][col]
                    A[r] = [x - f * y for x, y in zip(A[r], A[col])]
        return cls([A[r][n] for r in range(n)])

    def of(self, m):
        return sum((w * e for w, e in zip(self.weights, m)), Fraction(0))

    def __repr__(self):
        return "WeightForm(%s)" % (self.weights,)


def weighted_order(f, v):
    """Minimum weight of a stored monomial; raises on the zero polynomial."""
    if f.is_zero():
        raise ValueError("weighted order of the zero polynomial")
    return min(v.of(m) for m in f.terms)


# ---- parsing ----------------------------------------------------------------

def parse(text, tower, vars, trunc=None):
    """Parse '+'/'-' combinations of integer-coefficient monomials.

    Terms look like 3, x, 2*x^3*y, with variables drawn from vars.
    """
    vars = tuple(vars)
    toks = _tokenize(text)
    n = len(vars)
    tw = tower
    terms = {}
    i = 0
    sign = 1
    first = True

    def add_term(coeff, exps, pos):
        m = tuple(exps)
        c = tw.from_int(coeff)
        s = tw.add(terms.get(m, tw.zero()), c)
        if tw.is_zero(s):
            terms.pop(m, None)
        else:
            terms[m] = s

    while i < len(toks):
        kind, val, pos = toks[i]
        if kind == "op":
            if val == "+":
                sign = 1
            elif val == "-":
                sign = -1
            else:
                raise ParseError("unexpected operator %r" % val, pos)
            i += 1
            if i >= len(toks):
                raise ParseError("dangling operator", pos)
            first = False
            kind, val, pos = toks[i]
        elif not first:
            raise ParseError("expected + or -", pos)
        # one term: factors joined by '*'
        coeff = sign
        exps = [0] * n
        expect_factor = True
        while i < len(toks):
            kind, val, pos = toks[i]
            if kind == "op" and val == "*":
                if expect_factor:
                    raise ParseError("unexpected *", pos)
                expect_factor = True
                i += 1
                continue
            if kind == "op":
                break
            if not expect_factor:
                break
            if kind == "int":
                coeff *= val
                i += 1
            elif kind == "var":
                if val not in vars:
                    raise ParseError("unknown variable %r" % val, pos)
                j = vars.index(val)
                e = 1
                i += 1
                if i < len(toks) and toks[i][0] == "op" and toks[i][1] == "^":
                    i += 1
                    if i >= len(toks) or toks[i][0] != "int":
                        raise ParseError("expected exponent", pos)
                    e = toks[i][1]
                    if e < 0:
                        raise ParseError("negative exponent", toks[i][2])
                    i += 1
                exps[j] += e
            else:
                raise ParseError("unexpected token %r" % (val,), pos)
            expect_factor = False
        if expect_factor:
            raise ParseError("empty term", pos)
        add_term(coeff, exps, pos)
        first = False
        sign = 1
    return Poly(tower, vars, terms, trunc)


def _tokenize(text):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^":
            if ch == "*" and i + 1 < len(text) and text[i + 1] == "*":
                toks.append(("op", "^", i))
                i += 2
                continue
            toks.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("var", text[i:j], i))
            i = j
            continue
        raise ParseError("illegal character %r" % ch, i)
    if not toks:
        raise ParseError("empty input", 0)
    return toks
