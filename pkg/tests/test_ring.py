import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from symdiag import ring


def test_binary_expansion_examples():
    x0, x1 = ring.binary_expansion([3, 1], 2)
    assert x0.tolist() == [1, 1]
    assert x1.tolist() == [1, 0]

    layers = ring.binary_expansion([0, 0], 4)
    assert all(layer.tolist() == [0, 0] for layer in layers)

    x0, x1, x2 = ring.binary_expansion([5], 3)
    assert (x0.tolist(), x1.tolist(), x2.tolist()) == ([1], [0], [1])


def test_binary_expansion_needs_layer():
    with pytest.raises(ValueError):
        ring.binary_expansion([1], 0)


def test_xor_as_ring_examples():
    assert ring.xor_as_ring([1, 0], [1, 1], 3).tolist() == [0, 1]
    assert ring.xor_as_ring([1, 0, 1], [1, 0, 1], 2).tolist() == [0, 0, 0]
    assert ring.xor_as_ring([1, 1, 0], [0, 1, 1], 4).tolist() == [1, 0, 1]


def test_xor_as_ring_length_mismatch():
    with pytest.raises(ValueError, match="length mismatch"):
        ring.xor_as_ring([1, 0], [1], 3)


def test_elementwise_product_examples():
    assert ring.elementwise_product([1, 0], [1, 1]).tolist() == [1, 0]
    assert ring.elementwise_product([1, 1], [0, 0]).tolist() == [0, 0]
    assert ring.elementwise_product([1, 1], [1, 1]).tolist() == [1, 1]
    with pytest.raises(ValueError):
        ring.elementwise_product([1], [1, 0])


def test_residue_normalizes_negatives():
    assert ring.residue(-1, 3) == 7
    assert ring.residue(np.array([-1, 9]), 3).tolist() == [7, 1]


def test_level_cap():
    with pytest.raises(ValueError):
        ring.check_level(ring.MAX_LEVEL + 1)
    with pytest.raises(ValueError):
        ring.check_level(0)
    assert ring.check_level(0, minimum=0) == 0


bits = st.lists(st.integers(0, 1), min_size=1, max_size=8)


@given(data=st.data(), v=bits, k=st.integers(1, ring.MAX_LEVEL))
def test_xor_matches_bitwise(data, v, k):
    w = data.draw(st.lists(st.integers(0, 1), min_size=len(v), max_size=len(v)))
    out = ring.xor_as_ring(v, w, k)
    assert set(out.tolist()) <= {0, 1}
    assert out.tolist() == [x ^ y for x, y in zip(v, w)]


@given(
    x=st.lists(st.integers(0, (1 << ring.MAX_LEVEL) - 1), min_size=1, max_size=6),
    layers=st.integers(1, ring.MAX_LEVEL),
)
def test_expansion_roundtrip(x, layers):
    parts = ring.binary_expansion(x, layers)
    back = ring.from_layers(parts)
    assert np.array_equal(back % (1 << layers), np.array(x) % (1 << layers))
