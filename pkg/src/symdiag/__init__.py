"""Exact symmetric-matrix calculus for diagonal gates over Z_{2^k}.

Symmetric integer matrices at a level k describe diagonal gates whose
basis-state phases are quadratic forms modulo 2^k.  The package implements
their algebra exactly: Pauli conjugation with its recursion to lower
levels, tensor and group composition, synthesis from target diagonals,
symplectic lifts, and structured stabilizer tracking.  Every formula is
cross-checked against an independent dense-matrix oracle at small qubit
counts.
"""

from .diagonal import (
    ConjugationResult,
    InfeasibleDiagonalError,
    SymForm,
    ccz_companion,
    conjugate,
    diagonal_entries,
    enumerate_canonical_forms,
    full_recursion_trace,
    global_phase_exponent,
    group_add,
    group_negate,
    group_order,
    residual_exponent,
    residual_exponent_consistent,
    residual_exponent_list,
    residual_form,
    standard_gate_table,
    synthesize,
    tensor,
    xor_carry,
)
from .oracle import (
    conjugate_dense,
    dense_diagonal,
    dense_pauli,
    equal_up_to_global_phase,
    hierarchy_level,
)
from .pauli import PauliLabel, PhasedPauli, commutes, multiply, normalize_label, symplectic_inner
from .ring import binary_expansion, elementwise_product, xor_as_ring
from .symplectic import (
    CliffordGen,
    GammaMatrix,
    apply_gamma,
    basis_change_generator,
    gamma_of,
    hadamard_generator,
    partial_hadamard_generator,
    phase_generator,
    table1_generators,
)
from .tracker import (
    Circuit,
    StructuredGenerator,
    apply_clifford,
    apply_clifford_after_diagonal,
    apply_diagonal,
    circuit_from_dict,
    circuit_to_dict,
    initial_stabilizer,
    run_circuit,
    verify_against_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "CliffordGen",
    "ConjugationResult",
    "GammaMatrix",
    "InfeasibleDiagonalError",
    "PauliLabel",
    "PhasedPauli",
    "StructuredGenerator",
    "SymForm",
    "apply_clifford",
    "apply_clifford_after_diagonal",
    "apply_diagonal",
    "apply_gamma",
    "basis_change_generator",
    "binary_expansion",
    "ccz_companion",
    "circuit_from_dict",
    "circuit_to_dict",
    "commutes",
    "conjugate",
    "conjugate_dense",
    "dense_diagonal",
    "dense_pauli",
    "diagonal_entries",
    "elementwise_product",
    "enumerate_canonical_forms",
    "equal_up_to_global_phase",
    "full_recursion_trace",
    "gamma_of",
    "global_phase_exponent",
    "group_add",
    "group_negate",
    "group_order",
    "hadamard_generator",
    "hierarchy_level",
    "initial_stabilizer",
    "multiply",
    "normalize_label",
    "partial_hadamard_generator",
    "phase_generator",
    "residual_exponent",
    "residual_exponent_consistent",
    "residual_exponent_list",
    "residual_form",
    "run_circuit",
    "standard_gate_table",
    "symplectic_inner",
    "synthesize",
    "table1_generators",
    "tensor",
    "verify_against_oracle",
    "xor_as_ring",
    "xor_carry",
]
