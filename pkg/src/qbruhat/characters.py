"""Formal characters: Demazure operators and truncated cell characters.

A character is a finite integer combination of lattice points, stored in
fundamental-weight coordinates.  Demazure operators act monomial by
monomial, so the Weyl character of a dominant weight comes out of the
longest-word composite with no division anywhere.

The truncated cell character counts, up to a depth cutoff, the monoid
elements spanned by a Weyl translate of the negative roots, with
multiplicity the number of ways to write each point as a sum.  Depth of
a lattice point means the sum of the absolute values of its simple-root
coordinates.
"""

from __future__ import annotations

import json

SCHEMA_CHAR = "qbruhat/char-v1"


class FormalCharacter:
    """Finite integer combination of weights, with an optional depth window.

    The window marks the depth up to which coefficients are trustworthy;
    combining two characters keeps the smaller window.
    """

    __slots__ = ("datum", "terms", "window")

    def __init__(self, datum, terms=None, window=None):
        self.datum = datum
        self.terms = dict(terms or {})
        self.window = window

    @classmethod
    def monomial(cls, datum, mu, coeff=1, window=None):
        return cls(datum, {tuple(mu): coeff}, window)

    def coefficient(self, mu):
        return self.terms.get(tuple(mu), 0)

    def support(self):
        return sorted(self.terms)

    def mass(self):
        return sum(self.terms.values())

    def _merge_window(self, other):
        if self.window is None:
            return other.window
        if other.window is None:
            return self.window
        return min(self.window, other.window)

    def __add__(self, other):
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) + c
            if not out[mu]:
                del out[mu]
        return FormalCharacter(self.datum, out, self._merge_window(other))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if not c:
            return FormalCharacter(self.datum, {}, self.window)
        return FormalCharacter(self.datum,
                               {mu: c * v for mu, v in self.terms.items()},
                               self.window)

    def __mul__(self, other):
        out = {}
        add = self.datum.add
        for mu, c in self.terms.items():
            for nu, d in other.terms.items():
                key = add(mu, nu)
                out[key] = out.get(key, 0) + c * d
                if not out[key]:
                    del out[key]
        return FormalCharacter(self.datum, out, self._merge_window(other))

    def __eq__(self, other):
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        items = ", ".join("%s: %d" % (mu, c)
                          for mu, c in sorted(self.terms.items()))
        return "FormalCharacter({%s})" % items


def demazure_step(char, i):
    """Apply the i-th Demazure operator monomial by monomial."""
    datum = char.datum
    alpha = datum.simple_root(i)
    out = {}

    def bump(mu, c):
        out[mu] = out.get(mu, 0) + c
        if not out[mu]:
            del out[mu]

    for mu, c in char.terms.items():
        m = datum.coroot_pairing(mu, i)
        if m >= 0:
            for k in range(m + 1):
                bump(datum.sub(mu, tuple(k * a for a in alpha)), c)
        elif m == -1:
            continue
        else:
            for k in range(1, -m):
                bump(datum.add(mu, tuple(k * a for a in alpha)), -c)
    return FormalCharacter(datum, out, char.window)


def demazure_character(datum, group, w, lam):
    """Character of the Demazure piece attached to w at dominant lam."""
    if not datum.is_dominant(lam):
        raise ValueError("weight %s is not dominant" % (lam,))
    ch = FormalCharacter.monomial(datum, lam)
    for i in reversed(group.canonical_word(w)):
        ch = demazure_step(ch, i)
    return ch


_WEYL_CACHE = {}


def weyl_character(datum, group, lam):
    key = (datum.label, tuple(lam))
    if key not in _WEYL_CACHE:
        _WEYL_CACHE[key] = demazure_character(datum, group, group.longest,
                                              lam)
    return _WEYL_CACHE[key]


def weight_multiplicity(datum, group, lam, mu):
    return weyl_character(datum, group, lam).coefficient(mu)


def weyl_dim(datum, lam):
    """Dimension by the product formula; exact integer."""
    rho = datum.rho()
    num = 1
    den = 1
    shifted = datum.add(lam, rho)
    for coords in datum.positive_roots:
        alpha = datum.root_to_fund(coords)
        num_f = datum.inner(shifted, alpha)
        den_f = datum.inner(rho, alpha)
        num *= num_f.numerator * den_f.denominator
        den *= num_f.denominator * den_f.numerator
    assert num % den == 0
    return num // den


def cell_translate_character(group, w, depth):
    """Truncated character of the cone spanned by w applied to the
    negative roots: coefficient of mu counts multisets of those roots
    summing to mu, for every mu of depth at most the cutoff.

    Enumerates partitions directly with a positivity budget, so no
    cancellation between truncated factors can corrupt coefficients.
    """
    datum = group.datum
    roots = []
    for coords in datum.positive_roots:
        gamma = w.act(datum.neg(datum.root_to_fund(coords)))
        roots.append(gamma)
    roots.sort()
    wrho = w.act(datum.rho())
    for gamma in roots:
        f = -datum.inner(wrho, gamma)
        assert f.denominator == 1 and f > 0
    per_simple = []
    for i in range(datum.rank):
        f = datum.inner(wrho, datum.simple_root(i))
        per_simple.append(abs(int(f)))
    # Every target of depth <= cutoff satisfies budget(mu) <= cap, and the
    # budget is strictly positive on each root, so partial sums past the
    # cap can never reach a target and are safe to drop.
    budget_cap = depth * max(per_simple)

    counts = {datum.zero(): 1}
    for gamma in roots:
        new = dict(counts)
        cur = counts
        while True:
            nxt = {}
            for mu, c in cur.items():
                mu2 = datum.add(mu, gamma)
                if -datum.inner(wrho, mu2) > budget_cap:
                    continue
                nxt[mu2] = nxt.get(mu2, 0) + c
            if not nxt:
                break
            for mu, c in nxt.items():
                new[mu] = new.get(mu, 0) + c
            cur = nxt
        counts = new
    terms = {mu: c for mu, c in counts.items() if datum.depth(mu) <= depth}
    return FormalCharacter(datum, terms, window=depth)


def character_to_json(char, label, w_text, depth):
    datum = char.datum
    items = sorted(char.terms.items(),
                   key=lambda kv: (datum.depth(kv[0]), kv[0]))
    doc = {
        "schema": SCHEMA_CHAR,
        "type": label,
        "w": w_text,
        "depth": depth,
        "terms": [{"weight": list(mu), "coeff": c} for mu, c in items],
    }
    return json.dumps(doc, indent=2, sort_keys=True)
