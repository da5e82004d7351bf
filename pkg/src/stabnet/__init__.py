"""Stabilizer-state distribution over quantum networks.

Symplectic GF(2) Pauli algebra, graph states and their entanglement
ranks, Bell-pair contraction of node states, min-cut feasibility of
target states on a topology, and stabilizer-code composition, all
cross-checked by a small dense-vector oracle.
"""

from .codes import (
    CompositionError,
    StabilizerCode,
    compose,
    distance,
    five_qubit_code,
    singleton_max_distance,
    storage_bound,
)
from .contraction import (
    BellConvention,
    ContractionInstance,
    ContractionResult,
    Status,
    contract,
    contract_single_element,
    is_pure_stabilizer_state,
)
from .graphstate import (
    Bipartition,
    GraphState,
    augment,
    bipartitions,
    entanglement_rank,
    stabilizer_generators,
)
from .metrics import (
    NoiseSpec,
    RegularTreeSpec,
    Scheme,
    channel_count,
    latency,
    memory_qubits,
    success_probability,
)
from .network import (
    FeasibilityVerdict,
    NetworkTopology,
    feasibility,
    min_cut,
    repetition_state,
    to_contraction,
)
from .pauli import (
    AnticommutingGeneratorsError,
    MinusIdentityError,
    PauliOperator,
    PauliParseError,
    StabilizerGroup,
    commutes,
    contains,
    gf2_rank,
    multiply,
    parse_pauli,
    reduce_generators,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
