"""Two-qubit Heisenberg thermal states under a thermal-magnetic-classical dephasing channel."""

__version__ = "0.1.0"

from .channel import (  # noqa: E402
    ChannelParams,
    evolution_unitary,
    evolve_state,
    field_propagator,
    sinc_dephasing_factor,
    static_average,
)
from .measures import (  # noqa: E402
    MeasureRecord,
    entropic_uncertainty,
    fidelity_pair,
    fidelity_to_bell,
    fidelity_to_initial,
    l1_coherence,
    mixedness_entropy,
    negativity,
)
from .spin import (  # noqa: E402
    DerivedScales,
    SpinParams,
    XState,
    build_hamiltonian,
    derived_scales,
    hamiltonian_spectrum,
    thermal_state,
    thermal_state_eigenvalues,
)

__all__ = [
    "ChannelParams",
    "DerivedScales",
    "MeasureRecord",
    "SpinParams",
    "XState",
    "build_hamiltonian",
    "derived_scales",
    "entropic_uncertainty",
    "evolution_unitary",
    "evolve_state",
    "fidelity_pair",
    "fidelity_to_bell",
    "fidelity_to_initial",
    "field_propagator",
    "hamiltonian_spectrum",
    "l1_coherence",
    "mixedness_entropy",
    "negativity",
    "sinc_dephasing_factor",
    "static_average",
    "thermal_state",
    "thermal_state_eigenvalues",
]
