"""Energy flow and trace-distance non-Markovianity for the spin-boson model."""

from sbflow._core import (
    BackflowResult,
    BathParams,
    BLPResult,
    FlowTrace,
    GridSpec,
    HeatmapGrid,
    QubitState,
    StatePair,
    SystemParams,
    TimeGrid,
    Trajectory,
    backflow_measure,
    blp_closed_form,
    blp_measure,
    born_markov_population,
    bose_occupation,
    csch,
    dissipation_kernel,
    effective_spectral_density,
    energy_flow,
    kernel_time_derivatives,
    markov_rate,
    noise_kernel,
    noise_kernel_quadrature,
    propagate,
    resonance_curve,
    resonance_deviation,
    spectral_density,
    sweep_backflow,
    sweep_blp,
    sweep_resonance_deviation,
    trace_distance,
    trigamma,
    __version__,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
