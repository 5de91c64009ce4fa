"""Weakness-maximising induction over finite statement lattices.

Build a finite world, fix a vocabulary, and everything else follows: valid
statements and their extension lattice, tasks and their model sets,
hypothesis selection by weakness, emergent representations of intervention
and identity, intent inference, and an exact discrete-network demonstration
that a switch variable reproduces graph surgery.
"""

from .errors import (
    EnumerationBudgetError,
    GoalMismatchError,
    InvalidStatementError,
    MalformedEventError,
    MismatchError,
    NetDefinitionError,
    NoParentTaskError,
    NoValidModelError,
    ScenarioFormatError,
    SilentHypothesisError,
    TaskDefinitionError,
    WeakdoError,
    WorldSpecError,
    ZeroProbabilityEvidenceError,
)
from .world import (
    Program,
    Totality,
    Vocabulary,
    World,
    build_world,
    make_vocabulary,
    projections,
    totality,
)
from .lang import (
    Language,
    Statement,
    extension,
    extension_of_set,
    is_higher_level,
    is_true,
    is_valid,
    project_statement,
    weakness,
    weakness_inclusion_exclusion,
)
from .task import (
    Decision,
    Task,
    TaskBounds,
    complete,
    count_tasks,
    decision_space,
    enumerate_tasks,
    forget_outliers,
    generalises,
    is_child,
    is_model,
    make_task,
    valid_models,
)
from .induction import (
    InductionResult,
    Policy,
    PolicyReport,
    PolicyRow,
    compare_policies,
    count_parents,
    enumerate_parents,
    generalisation_probability,
    induce,
    sample_parents,
)
from .causality import (
    Attribution,
    DiscreteNet,
    Identity,
    InterventionEvent,
    NetVariable,
    add_switch,
    attribute_party,
    conditional,
    do_surgery,
    intervention_residue,
    is_distinguishable,
    joint,
    make_net,
    raincoat_net,
    shared_identity,
    switch_equivalence_check,
)
from .mind import (
    Observation,
    Rationale,
    infer_intent,
    mirror_rationale,
    nested_intent,
)
from .experiments import (
    PremiseReport,
    PremiseRow,
    Report,
    enumerate_world_specs,
    random_world,
    raincoat_world,
    scenario_do_switch,
    scenario_raincoat,
    verify_premises,
    verify_premises_sweep,
    world_from_spec,
    world_label,
    write_report,
)
from .scenario import Scenario, load_scenario, run_scenario

__version__ = "0.1.0"
