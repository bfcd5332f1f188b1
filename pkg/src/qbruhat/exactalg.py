"""Exact scalars and exact linear algebra.

Every computation in this package runs over an exact coefficient tower:
rational numbers, Laurent polynomials in a formal variable q with rational
coefficients, and ratios of such polynomials.  No floating point is used
anywhere.  Arithmetic stays inside the Laurent ring whenever it can;
division promotes to the fraction field only when the quotient is not
itself a Laurent polynomial, and results whose reduced denominator is a
power of q are demoted back to Laurent form.  Consequently two equal
scalars always compare equal and print identically.

The matrix layer is deliberately plain: matrices are lists of lists of
scalars, and the central routine is a canonical reduced row echelon form.
Subspaces are stored by their echelon basis, so equality of subspaces is
equality of representations.
"""

from __future__ import annotations

from fractions import Fraction


def _fr(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected an integer or Fraction, got %r" % (x,))


class Laurent:
    """A Laurent polynomial in q with Fraction coefficients.

    Stored as a dict mapping integer exponents to nonzero coefficients.
    Instances are immutable in practice; do not mutate ``coeffs``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _fr(c)
                if c:
                    clean[int(e)] = c
        self.coeffs = clean
        self._hash = None

    @staticmethod
    def const(x):
        return Laurent({0: _fr(x)})

    @staticmethod
    def q_power(n):
        return Laurent({int(n): Fraction(1)})

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return not self.coeffs or set(self.coeffs) == {0}

    def is_monomial(self):
        return len(self.coeffs) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return self.coeffs.get(0, Fraction(0))

    def min_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = coerce_scalar(other)
        if isinstance(other, RatFun):
            return other + self
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-coerce_scalar(other))

    def __rsub__(self, other):
        return coerce_scalar(other) + (-self)

    def __mul__(self, other):
        other = coerce_scalar(other)
        if isinstance(other, RatFun):
            return other * self
        if not self.coeffs or not other.coeffs:
            return ZERO
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return ONE / (self ** (-n))
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        other = coerce_scalar(other)
        if isinstance(other, RatFun):
            return RatFun(self, ONE) / other
        if not other:
            raise ZeroDivisionError("division by zero scalar")
        if not self:
            return ZERO
        q_, r = _laurent_divmod(self, other)
        if not r:
            return q_
        return _make_ratfun(self, other)

    def __rtruediv__(self, other):
        return coerce_scalar(other) / self

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Laurent.const(other).coeffs
        if isinstance(other, RatFun):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.coeffs.get(0, Fraction(0)))
            else:
                self._hash = hash(tuple(sorted(self.coeffs.items())))
        return self._hash

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return "Laurent(%s)" % self


def _laurent_divmod(a, b):
    """Divide Laurent a by nonzero Laurent b: returns (quotient, remainder).

    The remainder is zero exactly when b divides a in the Laurent ring.
    """
    if not a:
        return ZERO, ZERO
    sa, sb = a.min_exp(), b.min_exp()
    # shift both to ordinary polynomials with nonzero constant term
    pa = {e - sa: c for e, c in a.coeffs.items()}
    pb = {e - sb: c for e, c in b.coeffs.items()}
    db = max(pb)
    lead = pb[db]
    quo = {}
    rem = dict(pa)
    while rem:
        da = max(rem)
        if da < db:
            break
        f = rem[da] / lead
        quo[da - db] = f
        for e, c in pb.items():
            ne = da - db + e
            s = rem.get(ne, 0) - f * c
            if s:
                rem[ne] = s
            elif ne in rem:
                del rem[ne]
    shift = sa - sb
    return (Laurent({e + shift: c for e, c in quo.items()}),
            Laurent({e + sa: c for e, c in rem.items()}))


def _poly_gcd(a, b):
    """Monic gcd of two ordinary polynomials given as exponent dicts."""
    a = dict(a)
    b = dict(b)
    while b:
        # a mod b
        db = max(b)
        lead = b[db]
        while a and max(a) >= db:
            da = max(a)
            f = a[da] / lead
            for e, c in b.items():
                ne = da - db + e
                s = a.get(ne, 0) - f * c
                if s:
                    a[ne] = s
                elif ne in a:
                    del a[ne]
        a, b = b, a
    if not a:
        return {0: Fraction(1)}
    lead = a[max(a)]
    return {e: c / lead for e, c in a.items()}


def _make_ratfun(num, den):
    """Build num/den in canonical form, demoting to Laurent when possible."""
    if not den:
        raise ZeroDivisionError("division by zero scalar")
    if not num:
        return ZERO
    sn, sd = num.min_exp(), den.min_exp()
    pn = {e - sn: c for e, c in num.coeffs.items()}
    pd = {e - sd: c for e, c in den.coeffs.items()}
    g = _poly_gcd(pn, pd)
    if max(g) > 0:
        gl = Laurent(g)
        pn_l, r1 = _laurent_divmod(Laurent(pn), gl)
        pd_l, r2 = _laurent_divmod(Laurent(pd), gl)
        assert not r1 and not r2
        pn, pd = pn_l.coeffs, pd_l.coeffs
    # make denominator monic
    lead = pd[max(pd)]
    pn = {e: c / lead for e, c in pn.items()}
    pd = {e: c / lead for e, c in pd.items()}
    shift = sn - sd
    if max(pd) == 0:
        return Laurent({e + shift: c for e, c in pn.items()})
    rf = RatFun.__new__(RatFun)
    rf.num = Laurent({e + shift: c for e, c in pn.items()})
    rf.den = Laurent(pd)
    rf._hash = None
    return rf


class RatFun:
    """A reduced ratio of Laurent polynomials outside the Laurent ring.

    Canonical form: the denominator is an ordinary polynomial, monic, with
    nonzero constant term and positive degree; numerator and denominator
    share no polynomial factor.  Every construction path goes through
    ``_make_ratfun``, which demotes to ``Laurent`` whenever the reduced
    denominator is trivial, so equal values always share a representation.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den):
        made = _make_ratfun(coerce_scalar(num), coerce_scalar(den))
        if isinstance(made, Laurent):
            # wrap anyway? no: keep canonical: raise to signal misuse
            self.num = made
            self.den = ONE
            self._hash = None
        else:
            self.num = made.num
            self.den = made.den
            self._hash = None

    def _pair(self):
        return self.num, self.den

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = coerce_scalar(other)
        if isinstance(other, Laurent):
            on, od = other, ONE
        else:
            on, od = other.num, other.den
        return _make_ratfun(self.num * od + on * self.den, self.den * od)

    __radd__ = __add__

    def __neg__(self):
        return _make_ratfun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-coerce_scalar(other))

    def __rsub__(self, other):
        return coerce_scalar(other) + (-self)

    def __mul__(self, other):
        other = coerce_scalar(other)
        if isinstance(other, Laurent):
            on, od = other, ONE
        else:
            on, od = other.num, other.den
        return _make_ratfun(self.num * on, self.den * od)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = coerce_scalar(other)
        if isinstance(other, Laurent):
            on, od = other, ONE
        else:
            on, od = other.num, other.den
        if not on:
            raise ZeroDivisionError("division by zero scalar")
        return _make_ratfun(self.num * od, self.den * on)

    def __rtruediv__(self, other):
        other = coerce_scalar(other)
        return other * (_make_ratfun(self.den, self.num))

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return (ONE / self) ** (-n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Laurent, int, Fraction)):
            # canonical RatFun always has a nontrivial denominator
            return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((hash(self.num), hash(self.den)))
        return self._hash

    def __str__(self):
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFun(%s)" % self


ZERO = Laurent({})
ONE = Laurent({0: 1})
Q = Laurent({1: 1})


def coerce_scalar(x):
    """Coerce ints and Fractions into the scalar tower."""
    if isinstance(x, (Laurent, RatFun)):
        return x
    if isinstance(x, (int, Fraction)):
        return Laurent.const(x)
    raise TypeError("cannot use %r as an exact scalar" % (x,))


def q_int(n, d=1):
    """The balanced q-integer (q_d^n - q_d^-n)/(q_d - q_d^-1), q_d = q^d."""
    n = int(n)
    if n < 0:
        return -q_int(-n, d)
    return Laurent({d * (n - 1 - 2 * k): 1 for k in range(n)})


def q_factorial(n, d=1):
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(k, d)
    return out


def q_binomial(n, k, d=1):
    if k < 0 or k > n:
        return ZERO
    num = q_factorial(n, d)
    den = q_factorial(k, d) * q_factorial(n - k, d)
    out = num / den
    assert isinstance(out, Laurent)
    return out


def format_laurent(p):
    """Canonical text form, ascending exponents: e.g. ``q^-1 + 2 + q``."""
    if not p.coeffs:
        return "0"
    parts = []
    for e in sorted(p.coeffs):
        c = p.coeffs[e]
        if e == 0:
            body = _format_coeff(c, standalone=True)
        else:
            qpart = "q" if e == 1 else "q^%d" % e
            if c == 1:
                body = qpart
            elif c == -1:
                body = "-" + qpart
            else:
                body = "%s*%s" % (_format_coeff(c, standalone=True), qpart)
        parts.append(body)
    text = parts[0]
    for body in parts[1:]:
        if body.startswith("-"):
            text += " - " + body[1:]
        else:
            text += " + " + body
    return text


def _format_coeff(c, standalone=False):
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def format_scalar(x):
    x = coerce_scalar(x)
    if isinstance(x, Laurent):
        return format_laurent(x)
    return str(x)


def parse_laurent(text):
    """Inverse of ``format_laurent`` on its canonical output."""
    text = text.strip()
    if text == "0":
        return ZERO
    text = text.replace(" - ", " + -")
    out = {}
    for term in text.split(" + "):
        term = term.strip()
        if "q" in term:
            coeff_s, _, qpart = term.partition("q")
            coeff_s = coeff_s.rstrip("*").strip()
            if coeff_s in ("", "+"):
                c = Fraction(1)
            elif coeff_s == "-":
                c = Fraction(-1)
            else:
                c = Fraction(coeff_s)
            e = 1 if not qpart else int(qpart.lstrip("^"))
        else:
            c = Fraction(term)
            e = 0
        out[e] = out.get(e, 0) + c
    return Laurent(out)


# ---------------------------------------------------------------------------
# matrices and subspaces


def mat_copy(rows):
    return [[coerce_scalar(x) for x in row] for row in rows]


def rref(rows):
    """Canonical reduced row echelon form.

    Returns (echelon_rows, pivot_columns).  Zero rows are dropped.  Pivots
    are normalized to one with zeros above and below, so the result is the
    unique canonical basis of the row space.
    """
    m = mat_copy(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        # prefer a cheap pivot (monomial) when one is available
        for i in range(pivot_row, len(m)):
            x = m[i][col]
            if isinstance(x, Laurent) and x and x.is_monomial():
                pivot_row = i
                break
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = ONE / m[r][col]
        m[r] = [x * inv if x else ZERO for x in m[r]]
        m[r][col] = ONE
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                row_i, row_r = m[i], m[r]
                for j in range(col, ncols):
                    if row_r[j]:
                        row_i[j] = row_i[j] - f * row_r[j]
                row_i[col] = ZERO
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def reduce_against(rows, pivots, vec):
    """Reduce ``vec`` against an echelon basis; returns the residue."""
    v = [coerce_scalar(x) for x in vec]
    for row, p in zip(rows, pivots):
        if v[p]:
            f = v[p]
            for j in range(p, len(v)):
                if row[j]:
                    v[j] = v[j] - f * row[j]
            v[p] = ZERO
    return v


def kernel(rows, ncols=None):
    """Canonical basis of the right kernel {x : M x = 0}."""
    if ncols is None:
        if not rows:
            raise ValueError("kernel of an empty matrix needs ncols")
        ncols = len(rows[0])
    ech, pivots = rref(rows)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(ech, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(v)
    ech2, _ = rref(basis)
    return ech2


def solve(rows, rhs):
    """One solution x of M x = rhs, or None when the system is inconsistent.

    Free coordinates are set to zero, which makes the answer canonical;
    when M has full column rank the solution is the unique one.
    """
    if not rows:
        if any(coerce_scalar(b) for b in rhs):
            return None
        return []
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    ech, pivots = rref(aug)
    x = [ZERO] * ncols
    for row, p in zip(ech, pivots):
        if p == ncols:
            return None
        x[p] = row[ncols]
    return x


def mat_mul(a, b):
    n = len(a)
    k = len(b)
    m = len(b[0]) if k else 0
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] = oi[j] + x * bt[j]
    return out


def identity_matrix(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


class Subspace:
    """A subspace of coordinate n-space stored by its canonical basis.

    Built through ``rref``, so two Subspace objects are equal exactly when
    they describe the same subspace of the same ambient space.
    """

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient, rows, pivots):
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @staticmethod
    def from_vectors(ambient, vectors):
        vecs = [v for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError("vector length %d does not match ambient %d"
                                 % (len(v), ambient))
        ech, piv = rref(vecs)
        return Subspace(ambient, ech, piv)

    @staticmethod
    def zero(ambient):
        return Subspace(ambient, [], [])

    @staticmethod
    def full(ambient):
        return Subspace(ambient, identity_matrix(ambient),
                        list(range(ambient)))

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, vec):
        res = reduce_against(self.rows, self.pivots, vec)
        return not any(res)

    def is_subspace_of(self, other):
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        return all(other.contains(row) for row in self.rows)

    def sum(self, other):
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        return Subspace.from_vectors(self.ambient, self.rows + other.rows)

    def orthogonal_complement(self):
        """All x with r . x = 0 for every basis row r (standard pairing)."""
        if not self.rows:
            return Subspace.full(self.ambient)
        basis = kernel(self.rows, self.ambient)
        ech, piv = rref(basis)
        return Subspace(self.ambient, ech, piv)

    def intersect(self, other):
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch")
        comp = self.orthogonal_complement().sum(other.orthogonal_complement())
        return comp.orthogonal_complement()

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient and self.pivots == other.pivots
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, tuple(self.pivots),
                     tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient)
