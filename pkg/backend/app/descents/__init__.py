"""Descent-preserving bijections on cycles, marked words and necklaces."""
from app.descents.perm_core import (
    CycleDecomposition,
    DescentSet,
    Permutation,
    canonical_cycle_form,
    descent_set,
    from_cycles,
    to_cycles,
)
from app.descents.phi_engine import phi, phi_traced, psi, psi_traced

__all__ = [
    'CycleDecomposition',
    'DescentSet',
    'Permutation',
    'canonical_cycle_form',
    'descent_set',
    'from_cycles',
    'phi',
    'phi_traced',
    'psi',
    'psi_traced',
    'to_cycles',
]
