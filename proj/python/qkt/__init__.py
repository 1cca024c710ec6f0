"""Pairwise concurrence of symmetric multi-qubit states and the quantum kicked top."""

from ._qkt import (
    analytic_concurrence,
    binary_entropy,
    chebyshev_step,
    classical_map,
    coherent_from_angles,
    concurrence,
    concurrence_series,
    dicke_concurrence_closed,
    dicke_state,
    entanglement_of_formation,
    epr_reduce,
    first_kick_concurrence,
    floquet,
    lyapunov,
    pairwise_concurrence,
    reduce_symmetric,
    spin_coherent,
    wootters,
)

__all__ = [
    "analytic_concurrence",
    "binary_entropy",
    "chebyshev_step",
    "classical_map",
    "coherent_from_angles",
    "concurrence",
    "concurrence_series",
    "dicke_concurrence_closed",
    "dicke_state",
    "entanglement_of_formation",
    "epr_reduce",
    "first_kick_concurrence",
    "floquet",
    "lyapunov",
    "pairwise_concurrence",
    "reduce_symmetric",
    "spin_coherent",
    "wootters",
]
