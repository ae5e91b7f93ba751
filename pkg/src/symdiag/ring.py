"""Exact arithmetic over Z_{2^k}: residues, bit vectors, binary expansions.

Conventions shared by the whole package:

* vectors are numpy ``int64`` row vectors,
* a *bit vector* has entries in {0, 1},
* an integer vector x splits into binary layers x = x0 + 2 x1 + 4 x2 + ...,
  with each layer a bit vector of the same length,
* residues modulo 2^k are kept in the canonical range [0, 2^k).

The level exponent k is capped at MAX_LEVEL so quadratic forms and phase
exponents always fit native 64-bit integers with ample headroom.
"""

from __future__ import annotations

import numpy as np

#: Largest supported level exponent; 2^MAX_LEVEL is the largest modulus.
MAX_LEVEL = 16


def check_level(k: int, minimum: int = 1) -> int:
    """Validate a level exponent, returning it as a plain int."""
    if not isinstance(k, (int, np.integer)):
        raise TypeError(f"level must be an integer, got {type(k).__name__}")
    k = int(k)
    if k < minimum or k > MAX_LEVEL:
        raise ValueError(f"level k={k} outside [{minimum}, {MAX_LEVEL}]")
    return k


def modulus(k: int) -> int:
    """The modulus 2^k."""
    return 1 << check_level(k, minimum=0)


def residue(x, k: int):
    """Canonical residue(s) of x modulo 2^k, in [0, 2^k)."""
    m = modulus(k)
    if np.isscalar(x) or isinstance(x, (int, np.integer)):
        return int(x) % m
    return np.asarray(x, dtype=np.int64) % m


def as_int_vector(x) -> np.ndarray:
    """Coerce to a 1-d int64 vector with non-negative entries."""
    v = np.atleast_1d(np.asarray(x, dtype=np.int64))
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got shape {v.shape}")
    if v.size and v.min() < 0:
        raise ValueError("vector entries must be non-negative")
    return v


def as_bit_vector(x) -> np.ndarray:
    """Coerce to a 1-d vector with entries in {0, 1}."""
    v = as_int_vector(x)
    if v.size and v.max() > 1:
        raise ValueError("bit vector entries must be 0 or 1")
    return v


def require_same_length(v: np.ndarray, w: np.ndarray) -> None:
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")


def binary_expansion(x, layers: int) -> list[np.ndarray]:
    """Binary layers x0, x1, ... of an integer vector.

    Reassembling sum(2^i * x_i) reproduces x modulo 2^layers.
    """
    if layers < 1:
        raise ValueError("need at least one layer")
    v = as_int_vector(x)
    return [(v >> i) & 1 for i in range(layers)]


def layer(x, i: int) -> np.ndarray:
    """Single binary layer x_i of an integer vector."""
    return (as_int_vector(x) >> i) & 1


def from_layers(layers: list[np.ndarray]) -> np.ndarray:
    """Inverse of binary_expansion: sum(2^i * x_i)."""
    if not layers:
        raise ValueError("need at least one layer")
    acc = np.zeros_like(as_bit_vector(layers[0]))
    for i, li in enumerate(layers):
        acc = acc + (as_bit_vector(li) << i)
    return acc


def xor_as_ring(v, w, k: int) -> np.ndarray:
    """Bitwise XOR of two bit vectors, written in Z_{2^k}.

    Uses the ring identity v XOR w = v + w - 2 (v * w); the result always
    has entries in {0, 1}.
    """
    check_level(k)
    v = as_bit_vector(v)
    w = as_bit_vector(w)
    require_same_length(v, w)
    return (v + w - 2 * v * w) % modulus(k)


def elementwise_product(v, w) -> np.ndarray:
    """Entrywise product of two bit vectors of equal length."""
    v = as_bit_vector(v)
    w = as_bit_vector(w)
    require_same_length(v, w)
    return v * w
