"""Cartan data for the finite crystallographic types.

Weights are plain tuples of integers in fundamental-weight coordinates
throughout the package; this module owns the conversions and pairings.
The symmetric bilinear form is normalized so short roots have squared
length two, which keeps every pairing of a root-lattice element with an
integral weight an integer.
"""

from __future__ import annotations

from fractions import Fraction


_CHAIN_FAMILIES = {"A", "B", "C", "D", "E", "F", "G"}

_RANK_RANGE = {
    "A": (1, 8),
    "B": (2, 4),
    "C": (2, 4),
    "D": (4, 5),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _dynkin_edges(family, rank):
    """Edge list (i, j, a_ij, a_ji) on 0-based nodes, i < j."""
    edges = []
    if family == "A":
        for i in range(rank - 1):
            edges.append((i, i + 1, -1, -1))
    elif family == "B":
        # the last simple root is the short one
        for i in range(rank - 2):
            edges.append((i, i + 1, -1, -1))
        edges.append((rank - 2, rank - 1, -1, -2))
    elif family == "C":
        for i in range(rank - 2):
            edges.append((i, i + 1, -1, -1))
        edges.append((rank - 2, rank - 1, -2, -1))
    elif family == "D":
        for i in range(rank - 3):
            edges.append((i, i + 1, -1, -1))
        edges.append((rank - 3, rank - 2, -1, -1))
        edges.append((rank - 3, rank - 1, -1, -1))
    elif family == "E":
        # nodes 0,2,3,4,...,rank-1 form a chain; node 1 hangs off node 3
        chain = [0, 2, 3] + list(range(4, rank))
        for a, b in zip(chain, chain[1:]):
            edges.append((min(a, b), max(a, b), -1, -1))
        edges.append((1, 3, -1, -1))
    elif family == "F":
        edges.append((0, 1, -1, -1))
        edges.append((1, 2, -1, -2))
        edges.append((2, 3, -1, -1))
    elif family == "G":
        # first root short, second long
        edges.append((0, 1, -3, -1))
    return edges


def _cartan_matrix(family, rank):
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    for i, j, aij, aji in _dynkin_edges(family, rank):
        a[i][j] = aij
        a[j][i] = aji
    return tuple(tuple(row) for row in a)


def _symmetrizers(a):
    """Minimal positive integers d with d_i a_ij = d_j a_ji."""
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if i != j and a[i][j] and d[j] is None:
                d[j] = d[i] * Fraction(a[i][j], a[j][i])
                queue.append(j)
    if any(x is None for x in d):
        raise ValueError("Dynkin diagram is not connected")
    denom = 1
    for x in d:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [x * denom for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x.numerator)
    return tuple(int(x / g) for x in ints)


def _gcd(a, b):
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a if a else 1


def _invert_rational(mat):
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
    return tuple(tuple(row[n:]) for row in aug)


class CartanDatum:
    """Cartan matrix, symmetrizers, bilinear form and positive roots."""

    def __init__(self, label, family, rank):
        self.label = label
        self.family = family
        self.rank = rank
        self.cartan = _cartan_matrix(family, rank)
        self.d = _symmetrizers(self.cartan)
        self._inv_cartan = _invert_rational(self.cartan)
        self.positive_roots = self._close_roots()

    # -- weights (fundamental coordinates) ------------------------------

    def zero(self):
        return (0,) * self.rank

    def fund(self, i):
        """The i-th fundamental weight, 0-based index."""
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def rho(self):
        return (1,) * self.rank

    def simple_root(self, i):
        """Fundamental coordinates of the i-th simple root."""
        return tuple(self.cartan[k][i] for k in range(self.rank))

    def add(self, mu, nu):
        return tuple(a + b for a, b in zip(mu, nu))

    def sub(self, mu, nu):
        return tuple(a - b for a, b in zip(mu, nu))

    def neg(self, mu):
        return tuple(-a for a in mu)

    def coroot_pairing(self, mu, i):
        """<mu, alpha_i^vee>; in fundamental coordinates just mu[i]."""
        return mu[i]

    def root_coords(self, mu):
        """Coordinates of mu over the simple roots, as Fractions."""
        return tuple(sum(self._inv_cartan[i][j] * mu[j]
                         for j in range(self.rank))
                     for i in range(self.rank))

    def root_to_fund(self, coords):
        return tuple(sum(self.cartan[i][j] * coords[j]
                         for j in range(self.rank))
                     for i in range(self.rank))

    def in_root_lattice(self, mu):
        return all(c.denominator == 1 for c in self.root_coords(mu))

    def inner(self, mu, nu):
        """The W-invariant form (mu, nu), short roots of squared length 2."""
        r = self.root_coords(mu)
        return sum(r[j] * self.d[j] * nu[j] for j in range(self.rank))

    def dominance_leq(self, mu, nu):
        """True iff nu - mu is a nonnegative integer sum of simple roots."""
        diff = self.sub(nu, mu)
        coords = self.root_coords(diff)
        return all(c.denominator == 1 and c >= 0 for c in coords)

    def is_dominant(self, mu):
        return all(c >= 0 for c in mu)

    def is_regular_dominant(self, mu):
        return all(c > 0 for c in mu)

    def height(self, mu):
        """Sum of root coordinates; only sensible on root-lattice weights."""
        coords = self.root_coords(mu)
        total = sum(coords)
        if total.denominator != 1:
            raise ValueError("%r is not in the root lattice" % (mu,))
        return int(total)

    def depth(self, mu):
        """Sum of absolute root coordinates of a root-lattice weight."""
        coords = self.root_coords(mu)
        total = sum(abs(c) for c in coords)
        if total.denominator != 1:
            raise ValueError("%r is not in the root lattice" % (mu,))
        return int(total)

    # -- roots ----------------------------------------------------------

    def _close_roots(self):
        n = self.rank
        a = self.cartan
        simple = [tuple(1 if j == i else 0 for j in range(n))
                  for i in range(n)]
        seen = set(simple)
        queue = list(simple)
        while queue:
            c = queue.pop()
            for i in range(n):
                pairing = sum(a[i][j] * c[j] for j in range(n))
                new = list(c)
                new[i] -= pairing
                new = tuple(new)
                if new not in seen:
                    seen.add(new)
                    queue.append(new)
        pos = [c for c in seen if all(x >= 0 for x in c)]
        pos.sort(key=lambda c: (sum(c), c))
        return tuple(pos)

    def root_fund(self, root):
        """Fundamental coordinates of a root given in root coordinates."""
        return self.root_to_fund(root)

    def __repr__(self):
        return "CartanDatum(%s)" % self.label


_DATUM_CACHE = {}


def build_cartan(label):
    """Cartan datum for a type label such as ``A2``, ``B3`` or ``G2``."""
    if label in _DATUM_CACHE:
        return _DATUM_CACHE[label]
    if not label or label[0].upper() not in _CHAIN_FAMILIES:
        raise ValueError("unknown type label %r" % (label,))
    family = label[0].upper()
    try:
        rank = int(label[1:])
    except ValueError:
        raise ValueError("bad rank in type label %r" % (label,))
    lo, hi = _RANK_RANGE[family]
    if not lo <= rank <= hi:
        raise ValueError("rank %d out of the supported range %d..%d for %s"
                         % (rank, lo, hi, family))
    datum = CartanDatum(family + str(rank), family, rank)
    _DATUM_CACHE[label] = datum
    return datum
