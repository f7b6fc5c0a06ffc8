"""Table kernels behind the finite-lattice algorithms.

The compiled Cython module is used when it was built; otherwise the
pure-Python module is used. Set ``HILBERT_LATTICE_PURE=1`` to force the
fallback (useful for the benchmark and for cross-checking).
"""
import os

from . import _pure

try:
    if os.environ.get("HILBERT_LATTICE_PURE"):
        raise ImportError("pure kernels forced")
    from . import _kernels as _impl

    BACKEND = "compiled"
except ImportError:
    _impl = _pure
    BACKEND = "pure"

FUNCTIONS = (
    "transitive_closure",
    "bound_tables",
    "modular_witness",
    "distributive_witness",
    "pentagon_witness",
    "commutation_matrix",
    "commuting_distributive_witness",
)

transitive_closure = _impl.transitive_closure
bound_tables = _impl.bound_tables
modular_witness = _impl.modular_witness
distributive_witness = _impl.distributive_witness
pentagon_witness = _impl.pentagon_witness
commutation_matrix = _impl.commutation_matrix
commuting_distributive_witness = _impl.commuting_distributive_witness


def compiled():
    """The compiled module, or None when only the fallback is available."""
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels


__all__ = ["BACKEND", "FUNCTIONS", "compiled", *FUNCTIONS]
