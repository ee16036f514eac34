"""The independent-set gadget, end to end.

Build the gadget for (C_6, k), color it from a size-k independent set,
and certify the biconditional with the exact solver. C_6 has
independence number 3, so the threshold coloring exists for k <= 3 and
provably not for k > 3.
"""

from harmonium import build, forward_coloring, is_harmonious, verify_equivalence
from harmonium.families import cycle


def main():
    g = cycle(6)
    inst = build(g, 3)
    print(f"gadget: {inst.gadget.n} vertices, {inst.gadget.m} edges, "
          f"threshold {inst.threshold}")
    c = forward_coloring(inst, {0, 2, 4})
    assert is_harmonious(inst.gadget, c)
    print(f"forward coloring from {{0,2,4}} uses {c.k} colors, verifier ok")
    for k in range(1, 7):
        rep = verify_equivalence(g, k)
        print(f"  k={k}: independent set {'yes' if rep.is_exists else 'no ':>3}, "
              f"threshold-colorable {'yes' if rep.colorable_at_threshold else 'no'}, "
              f"equivalent={rep.equivalent}")


if __name__ == "__main__":
    main()
