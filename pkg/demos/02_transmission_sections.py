# Which sets of nodes can talk at once?
#
# On a 3-node path the transmission sheaf has exactly four global sections:
# everybody silent, or exactly one node transmitting.

from jamtopo import BOT, enumerate_global_sections, is_section, stalk
from jamtopo.scenarios import path_complex, ring_complex

X = path_complex(3)
for c in X.sorted_cells():
    print(f"stalk at {c}: {sorted(x for x in stalk(X, c) if x is not BOT)} + silent")

print()
for s in enumerate_global_sections(X):
    row = "  ".join(f"{c}={'-' if v is BOT else v}" for c, v in s.values)
    print(f"active {s.active_nodes or '(none)'}: {row}")

# nodes 1 and 3 together would collide at node 2
clash = {(1,): 1, (3,): 3}
for v in (BOT, 1, 2, 3):
    trial = {**clash, (2,): v, (1, 2): 1 if v == 1 else BOT, (2, 3): 3 if v == 3 else BOT}
    print(f"middle node = {v!r}: section? {is_section(X, trial)}")

# longer networks allow spatial reuse
for n in (4, 5, 6):
    res = enumerate_global_sections(path_complex(n))
    pairs = [s.active_nodes for s in res if len(s.active_nodes) == 2]
    print(f"\n{n}-path: {len(res)} sections, simultaneous pairs {pairs}")

print("\n6-ring sections:", len(enumerate_global_sections(ring_complex(6))))
