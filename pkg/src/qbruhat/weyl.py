"""Finite Weyl groups acting on fundamental-weight coordinates.

Elements are integer matrices.  The whole group is materialized eagerly,
which is the honest choice at the scales this package targets (orders in
the hundreds).  Lengths are computed by counting positive roots sent
negative, canonical reduced words are the lexicographically least ones,
and Bruhat order comes from the subword property; an independent
reflection-cover oracle lives in the test suite.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .exactalg import Laurent, Subspace, kernel, rref
from .cartan import build_cartan


class WeylElem:
    __slots__ = ("group", "idx", "mat", "length")

    def __init__(self, group, idx, mat, length):
        self.group = group
        self.idx = idx
        self.mat = mat
        self.length = length

    @property
    def word(self):
        return self.group.canonical_word(self)

    def act(self, mu):
        m = self.mat
        n = len(m)
        return tuple(sum(m[i][j] * mu[j] for j in range(n)) for i in range(n))

    def __mul__(self, other):
        return self.group.multiply(self, other)

    def inverse(self):
        return self.group.inverse(self)

    def is_identity(self):
        return self.length == 0

    def __eq__(self, other):
        if not isinstance(other, WeylElem):
            return NotImplemented
        return self.group is other.group and self.idx == other.idx

    def __hash__(self):
        return hash((id(self.group), self.idx))

    def __repr__(self):
        return "WeylElem(%s)" % (format_word(self.word),)


def format_word(word):
    if not word:
        return "e"
    return " ".join("s%d" % (i + 1) for i in word)


def parse_word(text, rank):
    """Parse a word like ``s1 s2 s1`` (or ``e``) into 0-based letters."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    letters = []
    for tok in text.split():
        if not tok.startswith("s"):
            raise ValueError("bad generator token %r" % (tok,))
        try:
            i = int(tok[1:])
        except ValueError:
            raise ValueError("bad generator token %r" % (tok,))
        if not 1 <= i <= rank:
            raise ValueError("generator index %d out of range 1..%d"
                             % (i, rank))
        letters.append(i - 1)
    return tuple(letters)


class WeylGroup:
    """A finite Weyl group with its Bruhat combinatorics."""

    _CACHE = {}

    def __init__(self, datum, max_order=500000):
        self.datum = datum
        self.rank = datum.rank
        gens_mats = [self._simple_matrix(i) for i in range(self.rank)]
        ident = tuple(tuple(1 if i == j else 0 for j in range(self.rank))
                      for i in range(self.rank))
        mats = {ident: 0}
        order = [ident]
        frontier = [ident]
        while frontier:
            new_frontier = []
            for m in frontier:
                for g in gens_mats:
                    p = _mat_mul_int(g, m)
                    if p not in mats:
                        mats[p] = len(order)
                        order.append(p)
                        new_frontier.append(p)
                        if len(order) > max_order:
                            raise ValueError(
                                "group order exceeds the cap %d" % max_order)
            frontier = new_frontier
        self._pos_root_fund = [datum.root_to_fund(c)
                               for c in datum.positive_roots]
        elems = []
        for idx, m in enumerate(order):
            elems.append(WeylElem(self, idx, m, self._length_of(m)))
        self.elements = elems
        self._index = {e.mat: e.idx for e in elems}
        self.identity = elems[0]
        self.gens = [elems[self._index[g]] for g in gens_mats]
        self._words = {0: ()}
        self._bruhat = {}
        self._inverse_idx = {}
        self.longest = max(elems, key=lambda e: e.length)
        n_pos = len(datum.positive_roots)
        if self.longest.length != n_pos:
            raise AssertionError("longest element length %d != %d"
                                 % (self.longest.length, n_pos))

    @classmethod
    def build(cls, datum_or_label, max_order=500000):
        if isinstance(datum_or_label, str):
            datum = build_cartan(datum_or_label)
        else:
            datum = datum_or_label
        key = datum.label
        if key not in cls._CACHE:
            cls._CACHE[key] = cls(datum, max_order=max_order)
        return cls._CACHE[key]

    def _simple_matrix(self, i):
        n = self.rank
        a = self.datum.cartan
        return tuple(tuple((1 if k == j else 0) - (a[k][i] if j == i else 0)
                           for j in range(n))
                     for k in range(n))

    def _length_of(self, mat):
        neg = 0
        n = self.rank
        for fund in self._pos_root_fund:
            img = tuple(sum(mat[i][j] * fund[j] for j in range(n))
                        for i in range(n))
            coords = self.datum.root_coords(img)
            if all(c <= 0 for c in coords):
                neg += 1
        return neg

    # -- group structure ------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def element(self, idx):
        return self.elements[idx]

    def multiply(self, x, y):
        return self.elements[self._index[_mat_mul_int(x.mat, y.mat)]]

    def inverse(self, x):
        if x.idx not in self._inverse_idx:
            inv = _mat_inv_int(x.mat)
            self._inverse_idx[x.idx] = self._index[inv]
        return self.elements[self._inverse_idx[x.idx]]

    def from_word(self, word):
        out = self.identity
        for i in word:
            out = self.multiply(out, self.gens[i])
        return out

    def parse(self, text):
        return self.from_word(parse_word(text, self.rank))

    def canonical_word(self, w):
        """The lexicographically least reduced word of w."""
        if w.idx not in self._words:
            i = next(i for i in range(self.rank) if self.left_descent(w, i))
            rest = self.multiply(self.gens[i], w)
            self._words[w.idx] = (i,) + self.canonical_word(rest)
        return self._words[w.idx]

    def left_descent(self, w, i):
        return self.multiply(self.gens[i], w).length < w.length

    def right_descent(self, w, i):
        return self.multiply(w, self.gens[i]).length < w.length

    def demazure_product(self, i, w):
        """The longer of s_i w and w."""
        sw = self.multiply(self.gens[i], w)
        return sw if sw.length > w.length else w

    # -- Bruhat order ---------------------------------------------------

    def bruhat_leq(self, y, z):
        """Subword property on the canonical reduced word of z."""
        key = (y.idx, z.idx)
        if key not in self._bruhat:
            self._bruhat[key] = self._bruhat_subword(y, z)
        return self._bruhat[key]

    def _bruhat_subword(self, y, z):
        if y.length > z.length:
            return False
        if y.length == z.length:
            return y.idx == z.idx
        if y.length == 0:
            return True
        zw = self.canonical_word(z)
        k = y.length
        for positions in combinations(range(len(zw)), k):
            v = self.identity
            for p in positions:
                v = self.multiply(v, self.gens[zw[p]])
            if v.length == k and v.idx == y.idx:
                return True
        return False

    def interval(self, y, z):
        """All w with y <= w <= z, sorted by (length, word)."""
        out = [w for w in self.elements
               if self.bruhat_leq(y, w) and self.bruhat_leq(w, z)]
        out.sort(key=lambda w: (w.length, w.word))
        return out

    # -- reflection-length data -----------------------------------------

    def fixed_lattice(self, w):
        """Kernel of w - 1 on the weight lattice, as an exact Subspace."""
        n = self.rank
        rows = [[Laurent.const(w.mat[i][j] - (1 if i == j else 0))
                 for j in range(n)] for i in range(n)]
        basis = kernel(rows, n)
        ech, piv = rref(basis)
        return Subspace(n, ech, piv)

    def fixed_space_rank(self, w):
        return self.fixed_lattice(w).dim

    def reflection_length(self, w):
        """Codimension of the fixed space (Carter's theorem)."""
        return self.rank - self.fixed_space_rank(w)

    def reflections(self):
        return [w for w in self.elements
                if w.length > 0 and self.fixed_space_rank(w) == self.rank - 1]

    # -- the diagram involution -----------------------------------------

    def theta(self):
        """Permutation t with w0 . omega_i = -omega_{t(i)} (0-based)."""
        w0 = self.longest
        out = []
        for i in range(self.rank):
            img = w0.act(self.datum.fund(i))
            target = None
            for j in range(self.rank):
                if img == self.datum.neg(self.datum.fund(j)):
                    target = j
                    break
            if target is None:
                raise AssertionError("longest element does not negate "
                                     "fundamental weight %d" % (i + 1))
            out.append(target)
        return tuple(out)

    def sorted_elements(self):
        return sorted(self.elements, key=lambda w: (w.length, w.word))

    def __repr__(self):
        return "WeylGroup(%s, order %d)" % (self.datum.label, len(self))


def _mat_mul_int(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n))
                       for j in range(n))
                 for i in range(n))


def _mat_inv_int(mat):
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)]
           + [Fraction(1 if j == i else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        f = aug[col][col]
        aug[col] = [x / f for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                g = aug[r][col]
                aug[r] = [x - g * y for x, y in zip(aug[r], aug[col])]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = aug[i][n + j]
            if v.denominator != 1:
                raise AssertionError("inverse is not integral")
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)
