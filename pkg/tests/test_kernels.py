import numpy as np
import pytest

from superasm import kernels
from superasm.scs.dp import DPTable

BACKENDS = kernels.available_backends()


def layers_for(w, backend):
    n = w.shape[0]
    t = DPTable.create(w, backend=backend)
    for s in range(1, n + 1):
        t.fill_plain(s)
    return t


@pytest.fixture(scope="module")
def weights():
    rng = np.random.default_rng(7)
    w = rng.integers(0, 6, size=(9, 9)).astype(np.int32)
    np.fill_diagonal(w, 0)
    return w


def test_default_backend_is_listed():
    assert kernels.BACKEND in BACKENDS
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


@pytest.mark.parametrize("backend", BACKENDS)
def test_corollary_layers_agree_with_reference(weights, backend):
    ref = layers_for(weights, "python")
    got = layers_for(weights, backend)
    for s in ref.layers:
        assert np.array_equal(ref.layers[s], got.layers[s])


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("s,k", [(9, 2), (9, 4), (9, 8), (6, 3), (3, 2)])
def test_split_layer_equals_plain_layer(weights, backend, s, k):
    t = layers_for(weights, "python")
    mod = kernels.get_backend(backend)
    got = mod.split_layer(t.layers[k], t.layers[s - k + 1], t.rank, t.masks[s], 9, s, k)
    assert np.array_equal(got, t.layers[s])


def test_singleton_layer():
    for b in BACKENDS:
        lay = kernels.get_backend(b).singleton_layer(3)
        assert lay[1, 1, 1] == 0 and lay[1, 0, 0] == kernels.NEG
