"""
Nested cycles on a two-ended graph
==================================

Runs the enlargement engine on the square of the double ray (truncated to
a ball), prints each round's separator decomposition and witness sets, and
extracts the stable edge set: the finite image of the limit circle.  On a
two-ended graph the stable edges over the first region form two disjoint
paths, one per passage of the circle.
"""

from clawham import check_extraction_conditions, preset, run, stable_edge_set
from clawham.graph import FiniteGraph, components

state = run(preset("double-ray-square"), rounds=3, radius=20)
labels = state.ball.labels

def show(vs, limit=14):
    xs = sorted(labels[v] for v in vs)
    body = ", ".join(map(str, xs[:limit]))
    return f"[{body}{', ...' if len(xs) > limit else ''}]"

print(f"ball: {len(state.graph)} vertices within distance 20 of 0")
print(f"initial cycle covers {show(state.initial_cycle.order)}\n")
for r in state.rounds:
    print(f"round {r.index}: separator {show(r.dec.separator)}")
    print(f"  finite component {show(r.dec.finite_component)}")
    for j, m in sorted(r.witness_sets.items()):
        print(f"  witness set {j}: {show(m)}")
    print(f"  cycle now has {len(r.cycle)} vertices after {r.extension_count} extensions")

report = check_extraction_conditions(state)
print("\nextraction conditions all pass:", report.all_pass())

stable = stable_edge_set(state.cycles())
region = set(state.rounds[0].dec.finite_component)
inner = [e for e in stable if e[0] in region and e[1] in region]
sub = FiniteGraph(region, inner)
print("\nstable edges over the first region split into paths:")
for comp in components(sub):
    chain = sorted(labels[v] for v in comp)
    print("  ", chain)
