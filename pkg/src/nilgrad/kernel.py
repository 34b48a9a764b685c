"""Backend selection for the integer row-reduction kernel.

The compiled ``_kernel`` extension is used when it was built; otherwise the
pure-Python ``_kernel_py`` module is.  ``set_backend("python")`` forces the
fallback at run time (used by the benchmark and the backend equivalence
tests).  The compiled path works in int64 and raises ``OverflowError`` when
an entry grows too large; those matrices are redone exactly by the Python
path, so results never depend on the backend.
"""

from . import _kernel_py

try:
    from . import _kernel as _compiled
except ImportError:
    _compiled = None

_active = _compiled


def available_backends():
    names = ["python"]
    if _compiled is not None:
        names.insert(0, "cython")
    return names


def backend():
    return "cython" if _active is not None else "python"


def set_backend(name):
    """Select ``"cython"`` or ``"python"``; returns the previous backend name."""
    global _active
    previous = backend()
    if name == "python":
        _active = None
    elif name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernel is not built")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def echelon(rows, ncols, reduced=True):
    if _active is not None:
        try:
            return _active.echelon(rows, ncols, reduced)
        except OverflowError:
            pass
    return _kernel_py.echelon(rows, ncols, reduced)


def rank(rows, ncols):
    return len(echelon(rows, ncols, reduced=False)[1])
