import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import hypergraphs
from hyperpart import BalanceSpec, CostMetric, kernels
from hyperpart.kernels import _pykernels
from hyperpart.solvers import _csr, _spec_arrays, brute_force_optimum

try:
    from hyperpart.kernels import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def call(mod, h, spec, metric, k, bound):
    node_cons, caps = _spec_arrays(h, spec, k)
    eptr, pins, nptr, nedges = _csr(h)
    return mod.bnb_search(h.n, k, eptr, pins, list(h.weights), nptr, nedges,
                          0 if metric is CostMetric.CUTNET else 1, node_cons, caps,
                          list(range(h.n)), bound, True, 10**8)


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_n=9, max_m=9), st.integers(2, 3), st.sampled_from([0, Fraction(1, 4)]),
       st.sampled_from(list(CostMetric)), st.integers(0, 6))
def test_backends_agree(h, k, eps, metric, bound):
    spec = BalanceSpec.single(eps)
    assert call(_pykernels, h, spec, metric, k, bound)[:3] == call(_ckernels, h, spec, metric, k, bound)[:3]


@settings(max_examples=80, deadline=None)
@given(hypergraphs(max_n=8), st.integers(2, 3), st.sampled_from(list(CostMetric)))
def test_pure_kernel_is_exact(h, k, metric):
    spec = BalanceSpec.single(Fraction(1, 4))
    opt = brute_force_optimum(h, spec, metric, k)
    status, best, _, _ = call(_pykernels, h, spec, metric, k, 10**6)
    if opt is None:
        assert status == kernels.NONE_BELOW
    else:
        assert status == kernels.FOUND and best == opt.cost


def test_pure_flag_forces_fallback():
    env = dict(os.environ, HYPERPART_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from hyperpart import kernels; print(kernels.BACKEND)"],
                         capture_output=True, text=True, env=env)
    assert out.stdout.strip() == "python"


@needs_compiled
def test_compiled_is_default():
    if os.environ.get("HYPERPART_PURE") in ("1", "true", "yes"):
        pytest.skip("fallback forced by the environment")
    assert kernels.BACKEND == "cython"
