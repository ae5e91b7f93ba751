"""Diagonal gates described by symmetric matrices over Z_{2^k}.

A symmetric m x m integer matrix R at level k fully describes the diagonal
gate whose entry at computational basis state v (a binary row vector) is
xi^(v R v^T mod 2^k) with xi = exp(2*pi*i / 2^k).  Basis states are indexed
big-endian: index(v) = sum_i v_i 2^(m-i), so v_1 is the most significant bit.

Conjugating a Hermitian Pauli by such a gate yields a global phase, a new
Pauli label, and a residual diagonal gate one level down, giving a recursion
that bottoms out in plain Pauli sign flips.  This module implements that
calculus exactly: evaluation, conjugation, tensor composition, the group law
on forms, and synthesis of a form from a target exponent list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import ring
from .pauli import PauliLabel


@dataclass(frozen=True)
class SymForm:
    """Symmetric matrix over Z_{2^k} in mixed-modulus canonical form.

    Diagonal entries live in [0, 2^k); off-diagonal entries pick up a
    factor 2 inside v R v^T, so only their residue mod 2^(k-1) matters and
    they are reduced to [0, 2^(k-1)) on construction.  Negative inputs are
    normalized the same way.  Level k = 0 means the empty form: the gate
    is the identity regardless of entries.
    """

    entries: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        k = ring.check_level(self.k, minimum=0)
        rows = [tuple(int(x) for x in row) for row in self.entries]
        m = len(rows)
        if any(len(row) != m for row in rows):
            raise ValueError("entries must form a square matrix")
        for i in range(m):
            for j in range(i + 1, m):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        diag_mod = ring.modulus(k)
        off_mod = ring.modulus(max(k - 1, 0))
        canon = tuple(
            tuple(
                rows[i][j] % diag_mod if i == j else rows[i][j] % off_mod
                for j in range(m)
            )
            for i in range(m)
        )
        object.__setattr__(self, "entries", canon)
        object.__setattr__(self, "k", k)

    @classmethod
    def zeros(cls, m: int, k: int) -> "SymForm":
        return cls(tuple((0,) * m for _ in range(m)), k)

    @classmethod
    def from_matrix(cls, mat, k: int) -> "SymForm":
        mat = np.atleast_2d(np.asarray(mat, dtype=np.int64))
        return cls(tuple(tuple(int(x) for x in row) for row in mat), k)

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.m, self.m)

    @property
    def diag(self) -> np.ndarray:
        return np.array([self.entries[i][i] for i in range(self.m)], dtype=np.int64)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def z_pauli_label(self) -> PauliLabel:
        """A level-1 form is the Z-type Pauli E(0, diagonal of R)."""
        if self.k != 1:
            raise ValueError(f"level-{self.k} forms are not Pauli gates")
        return PauliLabel((0,) * self.m, tuple(int(x) for x in self.diag))

    def to_dict(self) -> dict:
        return {"m": self.m, "k": self.k, "R": [list(row) for row in self.entries]}

    @classmethod
    def from_dict(cls, d: dict) -> "SymForm":
        form = cls(tuple(tuple(row) for row in d["R"]), d["k"])
        if "m" in d and d["m"] != form.m:
            raise ValueError(f"declared m={d['m']} but R is {form.m}x{form.m}")
        return form

    def __str__(self) -> str:
        return f"SymForm(k={self.k}, R={[list(r) for r in self.entries]})"


@dataclass(frozen=True)
class ConjugationResult:
    """One conjugation step: phase exponent, output Pauli, residual form.

    The identity reads, exactly as matrices,

        gate(R, k) E(p) gate(R, k)^dagger
            = xi^phase_exponent * E(label) * gate(residual, k-1),

    with xi = exp(2*pi*i / 2^level).  The output label is reduced to its
    binary layers; the sign produced by that reduction is already folded
    into phase_exponent.
    """

    level: int
    phase_exponent: int
    label: PauliLabel
    residual: "SymForm"

    def to_dict(self) -> dict:
        return {
            "phi": self.phase_exponent,
            "label": self.label.to_dict(),
            "R_tilde": [list(row) for row in self.residual.entries],
            "k_next": self.residual.k,
        }


class InfeasibleDiagonalError(Exception):
    """No symmetric form reproduces the requested exponent list.

    Carries a witness basis vector where verification failed; the failure
    is level-independent, since doubling exponents doubles both sides.
    """

    def __init__(self, witness: tuple[int, ...], level: int):
        self.witness = witness
        self.level = level
        super().__init__(
            f"no symmetric form matches the exponent at basis vector "
            f"{list(witness)} (level k={level})"
        )


def index_vectors(m: int) -> np.ndarray:
    """All binary vectors of length m as rows, in basis-index order."""
    if m < 0:
        raise ValueError("m must be non-negative")
    idx = np.arange(1 << m, dtype=np.int64)
    shifts = np.arange(m - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] >> shifts[None, :]) & 1


def basis_index(v) -> int:
    """Big-endian index of a binary vector: v_1 is the most significant bit."""
    v = ring.as_bit_vector(v)
    out = 0
    for x in v:
        out = (out << 1) | int(x)
    return out


def diagonal_entries(form: SymForm) -> np.ndarray:
    """Exponent list [v R v^T mod 2^k] over all basis vectors in index order."""
    V = index_vectors(form.m)
    vals = np.einsum("ij,jk,ik->i", V, form.matrix, V)
    return vals % ring.modulus(form.k)


def xor_carry(v, form: SymForm, w) -> int:
    """Carry term relating XOR to integer sums inside the quadratic form.

    For bit vectors v, w:  (v XOR w) R (v XOR w)^T
    = (v + w) R (v + w)^T - 4 * xor_carry(v, R, w)  (mod 2^k).
    It equals (v OR w) R (v AND w)^T.
    """
    v = ring.as_bit_vector(v)
    w = ring.as_bit_vector(w)
    ring.require_same_length(v, w)
    if len(v) != form.m:
        raise ValueError(f"length mismatch: vectors of {len(v)} vs form on {form.m}")
    meet = v * w
    return int(((v + w) - meet) @ form.matrix @ meet) % ring.modulus(form.k)


def _label_layers(form: SymForm, a, b):
    """Parity and second binary layers of a label pair, length-checked."""
    a = ring.as_int_vector(a)
    b = ring.as_int_vector(b)
    ring.require_same_length(a, b)
    if len(a) != form.m:
        raise ValueError(f"length mismatch: label on {len(a)}, form on {form.m}")
    return a & 1, (a >> 1) & 1, b & 1, (b >> 1) & 1


def residual_exponent(v, form: SymForm, a, b) -> int:
    """Exponent at basis state v of the residual diagonal after conjugation.

    Defined for levels k >= 2.  The constant part (independent of v) is the
    global phase exponent; the v-dependent part is twice a quadratic form
    one level down.
    """
    k = form.k
    if k < 2:
        raise ValueError("residual exponent needs level k >= 2")
    v = ring.as_bit_vector(v)
    a0, a1, b0, b1 = _label_layers(form, a, b)
    R = form.matrix
    val = (
        (1 - (1 << (k - 2))) * int(a0 @ R @ a0)
        + (1 << (k - 1)) * (int(a0 @ b1) + int(b0 @ a1))
        + (2 + (1 << (k - 1))) * int(v @ R @ a0)
        - 4 * xor_carry(v, form, a0)
    )
    return val % ring.modulus(k)


def residual_exponent_list(form: SymForm, a, b) -> np.ndarray:
    """residual_exponent over all basis vectors, in index order."""
    k = form.k
    if k < 2:
        raise ValueError("residual exponent needs level k >= 2")
    a0, a1, b0, b1 = _label_layers(form, a, b)
    R = form.matrix
    V = index_vectors(form.m)
    meet = V * a0[None, :]
    carry = np.einsum("ij,jk,ik->i", (V + a0[None, :]) - meet, R, meet)
    const = (1 - (1 << (k - 2))) * int(a0 @ R @ a0) + (1 << (k - 1)) * (
        int(a0 @ b1) + int(b0 @ a1)
    )
    vals = const + (2 + (1 << (k - 1))) * (V @ (R @ a0)) - 4 * carry
    return vals % ring.modulus(k)


def global_phase_exponent(form: SymForm, a, b) -> int:
    """The v-independent part of the residual exponent (levels k >= 2)."""
    k = form.k
    if k < 2:
        raise ValueError("global phase exponent needs level k >= 2")
    a0, a1, b0, b1 = _label_layers(form, a, b)
    R = form.matrix
    val = (1 - (1 << (k - 2))) * int(a0 @ R @ a0) + (1 << (k - 1)) * (
        int(a0 @ b1) + int(b0 @ a1)
    )
    return val % ring.modulus(k)


def residual_form(form: SymForm, a) -> SymForm:
    """Symmetric form of the residual diagonal gate, one level down.

    Built from the projections of R onto the support of a0; canonical at
    level k-1.  Requires k >= 2.
    """
    k = form.k
    if k < 2:
        raise ValueError("residual form needs level k >= 2")
    a0 = ring.as_int_vector(a) & 1
    if len(a0) != form.m:
        raise ValueError(f"length mismatch: vector of {len(a0)} vs form on {form.m}")
    R = form.matrix
    abar = 1 - a0
    a_row = a0 @ R
    D_a = np.diag(a0)
    D_abar = np.diag(abar)
    raw = (1 + (1 << (k - 2))) * np.diag(a_row) - (
        D_abar @ R @ D_a + D_a @ R @ D_abar + 2 * np.diag(a_row * a0)
    )
    return SymForm.from_matrix(raw, k - 1)


def conjugate(form: SymForm, p: PauliLabel) -> ConjugationResult:
    """Conjugate the Hermitian Pauli E(p) by the diagonal gate of `form`.

    For k >= 2 the result is xi^phi * E(a0, b0 + a0 R) * gate(R', k-1);
    the output label is reduced to binary layers with the reduction sign
    absorbed into phi, so the returned triple reproduces the conjugation
    exactly as matrices.

    For k = 1 the gate is itself a Pauli (a Z-type sign pattern), so the
    label passes through unchanged and only a sign remains; the residual
    is the empty level-0 form.
    """
    if p.m != form.m:
        raise ValueError(f"dimension mismatch: Pauli on {p.m}, form on {form.m}")
    k = form.k
    if k < 1:
        raise ValueError("conjugation needs level k >= 1")
    a0, a1, b0, b1 = _label_layers(form, p.a_vec, p.b_vec)
    if k == 1:
        d = form.diag
        phi = (int(a0 @ d) + int(a0 @ b1) + int(a1 @ b0)) % 2
        label = PauliLabel(tuple(a0), tuple(b0))
        return ConjugationResult(1, phi, label, SymForm.zeros(form.m, 0))
    M = ring.modulus(k)
    phi = global_phase_exponent(form, p.a_vec, p.b_vec)
    w = (b0 + a0 @ form.matrix) % M
    w1 = (w >> 1) & 1
    phi = (phi + (1 << (k - 1)) * int(a0 @ w1)) % M
    label = PauliLabel(tuple(a0), tuple(w & 1))
    return ConjugationResult(k, phi, label, residual_form(form, p.a_vec))


def residual_exponent_consistent(v, form: SymForm, a, b) -> bool:
    """Check residual_exponent == global phase + 2 v R' v^T  (mod 2^k)."""
    k = form.k
    q = residual_exponent(v, form, a, b)
    phi = global_phase_exponent(form, a, b)
    rt = residual_form(form, a)
    v = ring.as_bit_vector(v)
    rhs = (phi + 2 * int(v @ rt.matrix @ v)) % ring.modulus(k)
    return q == rhs


def full_recursion_trace(form: SymForm, p: PauliLabel) -> list[ConjugationResult]:
    """Conjugation steps at levels k, k-1, ..., 1.

    Each step conjugates the same input Pauli by the residual gate from
    the previous step, certifying the descent one level at a time.  A
    level-0 form (identity) yields an empty trace.
    """
    steps: list[ConjugationResult] = []
    current = form
    while current.k >= 1:
        res = conjugate(current, p)
        steps.append(res)
        current = res.residual
    return steps


def tensor(f1: SymForm, f2: SymForm) -> SymForm:
    """Block-diagonal form of the tensor product gate.

    The second factor must sit at a level l <= k of the first; its block is
    scaled by 2^(k-l) so both factors read phases in the same root of unity.
    """
    if f2.k > f1.k:
        raise ValueError(f"second factor level {f2.k} exceeds first level {f1.k}")
    m, n = f1.m, f2.m
    scale = 1 << (f1.k - f2.k)
    out = np.zeros((m + n, m + n), dtype=np.int64)
    out[:m, :m] = f1.matrix
    out[m:, m:] = scale * f2.matrix
    return SymForm.from_matrix(out, f1.k)


def _solve_weightwise(e: np.ndarray, m: int, k: int) -> np.ndarray | None:
    """Fix the diagonal from weight-1 exponents and off-diagonals from
    weight-2 exponents; None if an off-diagonal would need an odd half."""
    M = 1 << k
    R = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        R[i, i] = e[1 << (m - 1 - i)]
    for i in range(m):
        for j in range(i + 1, m):
            idx = (1 << (m - 1 - i)) | (1 << (m - 1 - j))
            t = int(e[idx] - R[i, i] - R[j, j]) % M
            if t % 2:
                return None
            R[i, j] = R[j, i] = t // 2
    return R


def synthesize(exponents, k_hint: int) -> SymForm:
    """Find the canonical form whose gate has the given diagonal exponents.

    The exponents index basis vectors big-endian modulo 2^k_hint; the
    first entry is treated as a global phase and subtracted from all.
    Weight-1 vectors fix the diagonal of R, weight-2 vectors fix the
    off-diagonals; if an off-diagonal value comes out odd, every exponent
    is doubled and the level incremented (one doubling always restores
    parity).  A final verification over all 2^m entries decides success;
    on failure the mismatching basis vector is raised as a witness, and no
    level escalation could ever repair it.
    """
    e = np.asarray(list(exponents), dtype=np.int64)
    n = len(e)
    if n < 2 or (n & (n - 1)) != 0:
        raise ValueError(f"exponent list length {n} is not a power of two >= 2")
    m = n.bit_length() - 1
    k = ring.check_level(k_hint)
    e = e % (1 << k)
    e = (e - e[0]) % (1 << k)
    for _ in range(2):
        R = _solve_weightwise(e, m, k)
        if R is None:
            k = ring.check_level(k + 1)
            e = (2 * e) % (1 << k)
            continue
        form = SymForm.from_matrix(R, k)
        mismatch = np.nonzero((diagonal_entries(form) - e) % (1 << k))[0]
        if len(mismatch):
            v = index_vectors(m)[mismatch[0]]
            raise InfeasibleDiagonalError(tuple(int(x) for x in v), k)
        return form
    raise AssertionError("unreachable: one doubling always fixes parity")


def group_add(f1: SymForm, f2: SymForm) -> SymForm:
    """Entrywise sum under the mixed-modulus rule; the group law on forms."""
    if (f1.m, f1.k) != (f2.m, f2.k):
        raise ValueError(
            f"mismatched forms: (m={f1.m}, k={f1.k}) vs (m={f2.m}, k={f2.k})"
        )
    return SymForm.from_matrix(f1.matrix + f2.matrix, f1.k)


def group_negate(f: SymForm) -> SymForm:
    """Inverse element for group_add."""
    return SymForm.from_matrix(-f.matrix, f.k)


def group_order(m: int, k: int) -> int:
    """Number of distinct diagonal gates described by canonical forms."""
    if m < 1:
        raise ValueError("m must be >= 1")
    ring.check_level(k)
    return (1 << (m * k)) * (1 << ((k - 1) * m * (m - 1) // 2))


def enumerate_canonical_forms(m: int, k: int):
    """Yield every canonical form at (m, k), group_order(m, k) in total."""
    if m < 1:
        raise ValueError("m must be >= 1")
    ring.check_level(k)
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    for diag in itertools.product(range(1 << k), repeat=m):
        for off in itertools.product(range(1 << (k - 1)), repeat=len(pairs)):
            mat = np.zeros((m, m), dtype=np.int64)
            for i in range(m):
                mat[i, i] = diag[i]
            for (i, j), val in zip(pairs, off):
                mat[i, j] = mat[j, i] = val
            yield SymForm.from_matrix(mat, k)


def ccz_companion() -> SymForm:
    """Three-qubit form whose gate is exp(i*pi/8 Z(x)Z(x)Z) * CCZ.

    The equality holds up to the global phase exp(-i*pi/8).  Off-diagonal
    entries -3 = 5 (mod 8) reduce to 1 in canonical form without changing
    the gate.
    """
    raw = [[7, 5, 5], [5, 7, 5], [5, 5, 7]]
    return SymForm.from_matrix(np.array(raw), 3)


def standard_gate_table() -> list[tuple[str, SymForm]]:
    """Named forms (all at level 3) for the standard one- and two-qubit
    diagonal gates: powers of T on one qubit, CZ/CP and one-sided P, Z
    embeddings on two qubits."""
    single = [
        ("I", 0),
        ("P", 2),
        ("Z", 4),
        ("Pdg", 6),
        ("T", 1),
        ("TZ", 5),
        ("Tdg", 7),
        ("TdgZ", 3),
    ]
    two = [
        ("CZ", [[0, 2], [2, 0]]),
        ("CP", [[0, 1], [1, 0]]),
        ("IxP", [[0, 0], [0, 2]]),
        ("IxZ", [[0, 0], [0, 4]]),
        ("PxI", [[2, 0], [0, 0]]),
        ("ZxI", [[4, 0], [0, 0]]),
    ]
    table = [(name, SymForm.from_matrix(np.array([[val]]), 3)) for name, val in single]
    table += [(name, SymForm.from_matrix(np.array(mat), 3)) for name, mat in two]
    return table
