"""Hamiltonian Berge cycles in hypergraphs: degree conditions that force
them, constructions showing the conditions are sharp, and exact search.

The pieces fit together like this: ``core`` holds the objects and the
verifiers everything else answers to; ``conditions`` evaluates degree-
sequence tests; ``constructions`` builds the extremal families; ``solver``
decides instances exactly and rotates Hamiltonian paths; ``harness`` runs
seeded campaigns over all of it; ``cli`` exposes the lot as subcommands.
"""

from .conditions import (
    ConditionReport,
    Violation,
    chvatal_graph,
    conjecture_r_uniform,
    posa_graph,
    posa_nonuniform,
    posa_r_uniform,
)
from .constructions import (
    FAMILIES,
    ConstructionSpec,
    InfeasibleConstruction,
    designated_violation_tag,
    example1,
    example2,
    example3,
    generate,
    predicted_degree_sequence,
)
from .core import (
    MAX_VERTICES,
    BergeCycle,
    BergePath,
    DegreeSequence,
    DomainError,
    Hypergraph,
    IncidenceBipartite,
    PreconditionError,
    Verdict,
    incidence_bipartite,
    shift_left,
    shift_right,
    verify_berge_cycle,
    verify_berge_path,
)
from .formats import (
    Certificate,
    ParseError,
    load_bhg,
    read_bhg,
    read_certificate,
    save_bhg,
    verify_certificate,
    write_bhg,
    write_certificate,
)
from .harness import (
    OUTCOMES,
    CampaignConfig,
    CampaignReport,
    SampleProfile,
    TrialRecord,
    conjecture_search,
    default_sharpness_grid,
    reverify_refutation,
    sample_hypergraph,
    sharpness_campaign,
    trial_seed,
    verify_theorem_campaign,
)
from .solver import (
    CYCLE,
    NONE_EXISTS,
    PATH,
    UNKNOWN,
    RotationNotApplicable,
    RotationState,
    SearchBudget,
    SolveResult,
    extend_and_close,
    find_hamiltonian_berge_cycle,
    find_hamiltonian_berge_path,
    guaranteed_reachable_ends,
    is_hamiltonian_bruteforce,
    rotate_defining,
    rotate_double,
    rotate_nondefining,
    rotation_closure,
)

__version__ = "0.1.0"
