"""Tour of the poset of comparable pairs and its stratum ranks."""

from qbruhat.cartan import build_cartan
from qbruhat.strata import DiamondPoset, order_isomorphic
from qbruhat.weyl import WeylGroup, format_word


def describe(label, anchor_text=None):
    group = WeylGroup.build(build_cartan(label))
    anchor = group.parse(anchor_text) if anchor_text else None
    poset = DiamondPoset(group, anchor=anchor)
    title = label if not anchor_text else "%s anchored at %s" % (label,
                                                                 anchor_text)
    print("== %s: %d pairs ==" % (title, len(poset)))
    for k, (y, z) in enumerate(poset.pairs):
        print("  (%-8s, %-8s)  rank %d"
              % (format_word(y.word), format_word(z.word),
                 poset.stratum_rank(k)))
    print("  covering edges:", poset.hasse_edges())
    return poset


def main():
    describe("A1")
    a2 = describe("A2")

    print("\nRank bookkeeping in A2: the full interval pair keeps rank 1")
    print("because the longest element is itself a reflection, while in")
    print("B2 the longest element negates everything:")
    b2 = describe("B2")

    left = describe("A2", "s1")
    right = describe("A2", "s1 s2")
    print("\nThe two anchored posets above are order-isomorphic:",
          order_isomorphic(left, right))
    print("A2 and B2 full posets are not:", order_isomorphic(a2, b2))


if __name__ == "__main__":
    main()
