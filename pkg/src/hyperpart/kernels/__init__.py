"""Kernel selection.

The compiled module is used when it imports cleanly; setting the
environment variable ``HYPERPART_PURE=1`` forces the Python fallback.
"""
import os

from . import _pykernels as pure

compiled = None
if os.environ.get("HYPERPART_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled
    except ImportError:
        compiled = None

active = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

FOUND = pure.FOUND
NONE_BELOW = pure.NONE_BELOW
OVER_BUDGET = pure.OVER_BUDGET


def bnb_search(*args):
    return active.bnb_search(*args)


TableBudget = pure.TableBudget


def pack_components(sizes, allowed, k, caps, max_cells=10**7):
    return active.pack_components(sizes, allowed, k, caps, max_cells)
