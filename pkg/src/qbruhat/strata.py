"""The poset of comparable Bruhat pairs and its stratum ranks.

A pair (y, z) with y <= z in Bruhat order indexes a stratum; the partial
order used throughout is

    (y, z) >= (y', z')   iff   y <= y' and z' <= z,

so going down shrinks the interval from both ends at once.  Closures are
downward sets, Hasse edges are the covers of this order, and the rank
attached to a pair is the dimension of the fixed space of y^{-1} z.
"""

from __future__ import annotations

import csv
import io
import json

from .weyl import WeylGroup, format_word

SCHEMA_STRATA = "qbruhat/strata-v1"


class DiamondPoset:
    """All comparable pairs of a Weyl group, ordered by interval reversal.

    With an anchor a only the pairs y <= a <= z survive, i.e. the strata
    whose closure contains the anchored point.
    """

    def __init__(self, group, anchor=None):
        self.group = group
        self.anchor = anchor
        pairs = []
        for y in group.sorted_elements():
            for z in group.sorted_elements():
                if not group.bruhat_leq(y, z):
                    continue
                if anchor is not None:
                    if not (group.bruhat_leq(y, anchor)
                            and group.bruhat_leq(anchor, z)):
                        continue
                pairs.append((y, z))
        pairs.sort(key=lambda p: (p[0].length, p[0].word,
                                  p[1].length, p[1].word))
        self.pairs = pairs
        self._pos = {(y.idx, z.idx): k for k, (y, z) in enumerate(pairs)}

    def __len__(self):
        return len(self.pairs)

    def index(self, y, z):
        return self._pos[(y.idx, z.idx)]

    def geq(self, i, j):
        """pairs[i] >= pairs[j] in the interval-reversal order."""
        (y1, z1), (y2, z2) = self.pairs[i], self.pairs[j]
        g = self.group
        return g.bruhat_leq(y1, y2) and g.bruhat_leq(z2, z1)

    def closure(self, i):
        """Indices of all pairs below pairs[i], itself included."""
        return [j for j in range(len(self.pairs)) if self.geq(i, j)]

    def hasse_edges(self):
        """Covering edges (i, j) with pairs[i] covering pairs[j]."""
        n = len(self.pairs)
        down = [set(self.closure(i)) - {i} for i in range(n)]
        edges = []
        for i in range(n):
            for j in sorted(down[i]):
                if not any(j in down[k] for k in down[i]):
                    edges.append((i, j))
        return edges

    def stratum_rank(self, i):
        y, z = self.pairs[i]
        return self.group.fixed_space_rank(y.inverse() * z)

    def rank_table(self):
        return [self.stratum_rank(i) for i in range(len(self.pairs))]

    # -- serialization ---------------------------------------------------

    def to_json(self):
        doc = {
            "schema": SCHEMA_STRATA,
            "type": self.group.datum.label,
            "anchor": (format_word(self.anchor.word)
                       if self.anchor is not None else None),
            "pairs": [
                {"y": format_word(y.word), "z": format_word(z.word),
                 "rank": self.stratum_rank(k)}
                for k, (y, z) in enumerate(self.pairs)
            ],
            "edges": [[i, j] for i, j in self.hasse_edges()],
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_dot(self):
        lines = ["digraph strata {"]
        for k, (y, z) in enumerate(self.pairs):
            lines.append('  n%d [label="%s | %s (r=%d)"];'
                         % (k, format_word(y.word), format_word(z.word),
                            self.stratum_rank(k)))
        for i, j in self.hasse_edges():
            lines.append("  n%d -> n%d;" % (i, j))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["y", "z", "rank"])
        for k, (y, z) in enumerate(self.pairs):
            writer.writerow([format_word(y.word), format_word(z.word),
                             self.stratum_rank(k)])
        return buf.getvalue()


def order_isomorphic(p1, p2):
    """Whether two finite posets given as DiamondPosets are isomorphic.

    Backtracking over length-profile classes; fine at the sizes here.
    """
    n1, n2 = len(p1), len(p2)
    if n1 != n2:
        return False
    rel1 = [[p1.geq(i, j) for j in range(n1)] for i in range(n1)]
    rel2 = [[p2.geq(i, j) for j in range(n2)] for i in range(n2)]
    # invariants per node: (# above, # below)
    def profile(rel):
        n = len(rel)
        return [(sum(rel[k][i] for k in range(n)),
                 sum(rel[i][k] for k in range(n))) for i in range(n)]
    pr1, pr2 = profile(rel1), profile(rel2)
    if sorted(pr1) != sorted(pr2):
        return False
    order = sorted(range(n1), key=lambda i: pr1[i])
    assign = [None] * n1
    used = [False] * n2

    def backtrack(pos):
        if pos == n1:
            return True
        i = order[pos]
        for j in range(n2):
            if used[j] or pr1[i] != pr2[j]:
                continue
            ok = True
            for pos2 in range(pos):
                k = order[pos2]
                m = assign[k]
                if rel1[i][k] != rel2[j][m] or rel1[k][i] != rel2[m][j]:
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if backtrack(pos + 1):
                    return True
                assign[i] = None
                used[j] = False
        return False

    return backtrack(0)


def build_poset(label, anchor_text=None):
    group = WeylGroup.build(label)
    anchor = group.parse(anchor_text) if anchor_text else None
    return DiamondPoset(group, anchor=anchor)
