"""Merge reduction: how a graph collapses to K2, or refuses to.

Merging two pairs fuses the two non-adjacent cross couples of their
4-cycle into equivalence classes. A graph that reaches K2 after n-1
merges is bipartitely stable; a blocked merge exhibits a triangle, and
no alternative order can rescue such a graph.
"""

from stereograph import (
    check_order_invariance,
    from_pattern,
    gen_complete_ladder,
    reduce_to_k2,
    vertex_name,
)


def show(names):
    return "{" + ", ".join(vertex_name(v) for v in sorted(names)) + "}"


for bits, label in [((1, 1, 1), "all-crossed"), ((0, 0, 0), "ladder")]:
    g = from_pattern(3, bits)
    verdict = reduce_to_k2(g)
    print(f"{label} pattern {bits}: {'stable' if verdict.stable else 'unstable'}")
    for step in verdict.steps:
        left, right = step.classes
        print(f"  merged pairs {step.merged_pair}: {show(left)} / {show(right)}")
    if verdict.stable:
        sides = sorted(verdict.final_graph.class_partition(), key=min)
        print(f"  final sides: {show(sides[0])} and {show(sides[1])}")
    else:
        print(f"  blocking triangle: {show(verdict.blocking_witness)}")
    print(f"  every merge order agrees: {check_order_invariance(g)}")
    print()

# The verdict never depends on the order for any 4-pair graph either.
from stereograph import enumerate_all

agree = all(check_order_invariance(g) for g in enumerate_all(4))
print(f"all 64 four-pair graphs are merge-order invariant: {agree}")

kl6 = gen_complete_ladder(6)
print(f"6-pair ladder reduces to K2: {reduce_to_k2(kl6).stable}")
