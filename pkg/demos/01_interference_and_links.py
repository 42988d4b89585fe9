# Building the two complexes for a small radio network.
#
# Three nodes sit on a unit equilateral triangle and can each be heard out to
# 0.55. The coverage disks overlap pairwise but have no common point, and
# no node is close enough to hear another.

from jamtopo import build_interference_complex, build_link_complex, facets
from jamtopo.network import NetworkScene, NodeSpec
from jamtopo.scenarios import fig1_scene

scene = fig1_scene()
for n in scene.nodes:
    print(f"node {n.id} at ({n.x:.3f}, {n.y:.3f}), radius {n.radius}")

I = build_interference_complex(scene)
L = build_link_complex(scene)

# interference: three edges, no triangle
print("\ninterference f-vector:", I.f_vector())
print("interference facets:", facets(I))

# links: nobody hears anybody
print("\nlink f-vector:", L.f_vector())
print("link facets:", facets(L))

# past the circumradius (~0.577) the three disks share the center
wider = NetworkScene(tuple(NodeSpec(n.id, n.x, n.y, radius=0.6) for n in scene.nodes))
print("\nwith radius 0.6:", build_interference_complex(wider).f_vector())
print("link complex still empty:", build_link_complex(wider).f_vector())
