"""de Bruijn tori from de Bruijn families and alternating de Bruijn sequences."""

from .errors import (
    BudgetExceeded,
    DeBruijnError,
    InvalidCycle,
    InvalidInput,
    InvalidLength,
    InvalidOrder,
    InvalidWindow,
    NotDeBruijn,
    NotEulerian,
    NotFound,
    ParseError,
    RenderError,
    SizeCondition,
    WrapFailure,
)
from .families import (
    DeBruijnFamily,
    FamilyReport,
    family_from_sequence,
    family_size_condition,
    generate_family,
    verify_family,
)
from .graphs import (
    AlternatingSequence,
    Digraph,
    EdgeCycle,
    build_alternating_graph,
    build_debruijn_graph,
    eulerian_cycle,
    generate_debruijn_sequence,
    glue_cycle,
    hamiltonian_cycle_alternating,
    line_digraph,
    tensor_product,
    verify_alternating,
)
from .torus import (
    ConstructionRecord,
    build_torus,
    interlace,
    locate_window,
    sigma,
    solve_parameters,
    verify_torus,
    wrap_check,
)
from .words import (
    Alphabet,
    CyclicString,
    Rotation,
    Torus,
    Window,
    cyclic_substring,
    is_alternating_word,
    is_debruijn_sequence,
    rotate,
    windows_of,
)

__version__ = "0.1.0"
