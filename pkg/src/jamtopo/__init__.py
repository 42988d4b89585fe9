"""Simplicial-complex models of wireless networks and their jamming vulnerability."""

from .homology import (
    HomologyGroup,
    HomologySummary,
    SnfResult,
    betti,
    boundary_matrix,
    elementary_divisors,
    homology_summary,
    relative_betti,
    smith_normal_form,
)
from .network import (
    DegenerateSceneError,
    NetworkScene,
    NodeSpec,
    RadioModel,
    SceneError,
    build_complex,
    build_interference_complex,
    build_link_complex,
    build_link_graph,
    coverage_radius,
    disks_common_point,
    signal_level,
    validate_scene,
)
from .persistence import (
    JammerSpec,
    PersistenceDiagram,
    PersistencePair,
    RadiusGrid,
    jammed_nodes,
    jammer_diagram,
    persistent_h0,
    significant_generators,
    surviving_complex,
    sweep,
)
from .sheaf import (
    BOT,
    Section,
    active_region,
    enumerate_global_sections,
    is_section,
    restrict,
    roi_cell,
    roi_facet,
    roi_node,
    stalk,
)
from .simplicial import (
    Cell,
    NotOpenError,
    SimplicialComplex,
    closure,
    connected_components,
    euler_characteristic,
    facets,
    insert_closed,
    remove_open,
    star,
)
from .vulnerability import (
    FacetAssessment,
    GlobalAssessment,
    assess_all_facets,
    assess_cell,
    assess_facet,
    assess_jammers,
    assess_node,
)

__version__ = "0.1.0"
