# Knocking out one link and counting the pieces.
#
# Removing a facet's region of influence leaves at most rank H1(X, X - roi) + 1
# components. On a tree that count is exact; a loop gives the network a way
# around the damage, so the bound overshoots.

import sys

from jamtopo.scenarios import cycle_with_pendant, path_complex, ring_complex, spider_tree
from jamtopo.vulnerability import assess_all_facets, assess_facet, assess_node, write_local_csv

for name, X in [("6-path", path_complex(6)), ("6-ring", ring_complex(6))]:
    a = assess_facet(X, (3, 4))
    print(f"{name}, attack e34: {a.components} components, bound {a.bound}, H1 rank {a.h1_ambient_rank}")

print("\nfull report for a 4-cycle with a pendant edge:")
write_local_csv(sys.stdout, assess_all_facets(cycle_with_pendant()))

# jamming a node removes the union over every facet it belongs to
spider = spider_tree(legs=3, length=2)
print("\nspider, jam the center:", assess_node(spider, 0).components, "components")
