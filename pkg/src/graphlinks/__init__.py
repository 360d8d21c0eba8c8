"""Graph-links toolkit: GF(2) invariants, moves, correspondences, search.

The modules split along the data they own:

- :mod:`graphlinks.gf2` dense symmetric matrices over GF(2)
- :mod:`graphlinks.graphs` labeled and looped simple graphs, isomorphism
- :mod:`graphlinks.moves` the two move systems and their descriptors
- :mod:`graphlinks.invariants` components, knot test, writhe
- :mod:`graphlinks.correspondence` chi/psi between the two worlds
- :mod:`graphlinks.chords` chord diagrams and realizability
- :mod:`graphlinks.search` bounded equivalence search with certificates
- :mod:`graphlinks.formats` text formats, :mod:`graphlinks.cli` the driver
"""

from .chords import ChordDiagram, interlacement, is_d_diagram, realize, wheel
from .correspondence import (
    DiagonalCompletion,
    InternalContradictionError,
    RoundtripReport,
    chi,
    complete_diagonal,
    complete_diagonal_forced,
    psi,
    roundtrip_check,
)
from .errors import (
    BudgetExceededError,
    PreconditionError,
    SameVertexError,
    TooLargeError,
    UnknownVertexError,
)
from .formats import (
    KIND_CHORD,
    KIND_LABELED,
    KIND_LOOPED,
    BadLabelError,
    Document,
    DuplicateNameError,
    ParseError,
    format_move,
    parse_document,
    parse_move,
    serialize_document,
)
from .gf2 import Gf2Matrix, SingularMatrixError
from .graphs import (
    LabeledGraph,
    LabeledVertex,
    LoopedGraph,
    LoopedVertex,
    all_graphs,
    are_isomorphic,
    canonical_form,
    labeled_from_matrix,
    local_complement,
    looped_from_matrix,
    pivot,
)
from .invariants import (
    NotAKnotError,
    WritheReport,
    component_count,
    is_graph_knot,
    knot_matrix,
    writhe,
    writhe_via_minor,
    writhe_via_minor_all,
)
from .moves import (
    GRAPH_FAMILIES,
    LOOP_FAMILIES,
    AdditionPayload,
    MoveDescriptor,
    MoveNotApplicableError,
    apply_graph_move,
    apply_loop_move,
    apply_move,
    inverse_descriptor,
    list_graph_moves,
    list_loop_moves,
    list_moves,
)
from .search import (
    EquivalenceResult,
    MoveCertificate,
    SearchBounds,
    invariant_distinguish,
    prove_equivalent,
    replay,
)

__version__ = "0.1.0"

__all__ = [
    "AdditionPayload",
    "BadLabelError",
    "BudgetExceededError",
    "ChordDiagram",
    "DiagonalCompletion",
    "Document",
    "DuplicateNameError",
    "EquivalenceResult",
    "GRAPH_FAMILIES",
    "Gf2Matrix",
    "InternalContradictionError",
    "KIND_CHORD",
    "KIND_LABELED",
    "KIND_LOOPED",
    "LOOP_FAMILIES",
    "LabeledGraph",
    "LabeledVertex",
    "LoopedGraph",
    "LoopedVertex",
    "MoveCertificate",
    "MoveDescriptor",
    "MoveNotApplicableError",
    "NotAKnotError",
    "ParseError",
    "PreconditionError",
    "RoundtripReport",
    "SameVertexError",
    "SearchBounds",
    "SingularMatrixError",
    "TooLargeError",
    "UnknownVertexError",
    "WritheReport",
    "all_graphs",
    "apply_graph_move",
    "apply_loop_move",
    "apply_move",
    "are_isomorphic",
    "canonical_form",
    "chi",
    "complete_diagonal",
    "complete_diagonal_forced",
    "component_count",
    "format_move",
    "interlacement",
    "invariant_distinguish",
    "inverse_descriptor",
    "is_d_diagram",
    "is_graph_knot",
    "knot_matrix",
    "labeled_from_matrix",
    "list_graph_moves",
    "list_loop_moves",
    "list_moves",
    "local_complement",
    "looped_from_matrix",
    "parse_document",
    "parse_move",
    "pivot",
    "prove_equivalent",
    "psi",
    "realize",
    "replay",
    "roundtrip_check",
    "serialize_document",
    "wheel",
    "writhe",
    "writhe_via_minor",
    "writhe_via_minor_all",
]
