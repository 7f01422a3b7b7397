"""irregwalk: verify, construct, and exactly compute irregularising walks.

A walk W irregularises a graph G when the multigraph G+W, obtained by adding
every walk edge with its traversal multiplicity, has no two adjacent vertices
of equal degree.  The package provides exact brute-force oracles, certified
constructive algorithms, closed forms for standard graph classes, a
polynomial tree solver, NP-hardness reduction gadgets, and a CLI.
"""

from ._backend import backend_name
from .closedform import (
    ClosedFormAnswer,
    mlw_complete,
    mlw_complete_bipartite,
    mlw_cycle,
    mlw_path,
    phi_path,
    phi_path_multiset,
)
from .constructive import (
    BoundedWitness,
    ProperLabelling,
    VertexColouring,
    chromatic_irregularise,
    doubled_euler_tour,
    exact_proper_labelling,
    greedy_irregularise,
    greedy_vertex_colouring,
    guiding_closed_walk,
    labelling_irregularise,
)
from .errors import (
    BadGuide,
    DimensionMismatch,
    DuplicateEdge,
    EmptyWalk,
    GraphConstructionError,
    ImproperColouring,
    ImproperLabelling,
    InvalidWalk,
    IrregwalkError,
    MethodInapplicable,
    NoLabellingWithinCap,
    NotATree,
    NotBipartite,
    NotConnected,
    NotCubic,
    NotNice,
    OrderTooSmall,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)
from .gadget import (
    GadgetInstance,
    build_path_gadget,
    build_walk_gadget,
    hamiltonian_cycle,
)
from .exact import (
    ExactResult,
    exact_mew,
    exact_mlw,
    exact_mvw,
    exact_phi,
    exists_irregularising_path,
)
from .graph import (
    EdgeMultiset,
    Graph,
    Walk,
    build_graph,
    degree_profile,
    format_edge_list,
    format_walk,
    is_connected,
    is_locally_irregular,
    is_nice,
    max_degree,
    parse_edge_list,
    parse_walk,
)
from .treedp import PsiTable, RootedTree, tree_mlw
from .walkops import (
    ConflictReport,
    NormalForm,
    check_irregularising,
    expand_normal_form,
    normalize_path_walk,
    normalize_walk,
)

__version__ = "0.1.0"
