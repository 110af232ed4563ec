"""Hot kernels with a compiled core and a pure-Python fallback.

The compiled extension (``cohconf._kernels._native``, built from Cython) is
preferred when importable; otherwise the numpy-based fallback in
:mod:`cohconf._kernels.pure` is used.  ``COHCONF_BACKEND=pure|native`` forces
a choice.  Both backends implement the same two entry points and produce
identical signature ids (eigenvalues agree to solver tolerance):

``signature_ids(codes, ncolors)``
    For an ``n x n`` int64 matrix of contiguous pair colors in ``[0, ncolors)``,
    assign each ordered pair an id determined by its refinement signature
    ``(own color, sorted multiset of (color(a,g), color(g,b)) over g)``.
    Ids are numbered by first occurrence in row-major order.  Returns
    ``(ids, count)``.  Signatures are keyed by full value in a dict, so
    equal hashes still compare the complete sorted signature (no silent
    hash collisions).

``jacobi_eigenvalues(a, tol_scale, max_sweeps)``
    Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
    sweeping until the off-diagonal Frobenius norm drops below
    ``tol_scale * ||A||_F``.  Returns the unsorted diagonal.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _native
except ImportError:  # extension not built
    _native = None  # type: ignore[assignment]


def available_backends() -> dict[str, object]:
    out: dict[str, object] = {"pure": pure}
    if _native is not None:
        out["native"] = _native
    return out


def get_backend(name: str | None = None):
    """Resolve a kernel backend module by name or environment/default."""
    if name is None:
        name = os.environ.get("COHCONF_BACKEND")
    if name is None:
        return _native if _native is not None else pure
    backends = available_backends()
    if name not in backends:
        raise ValueError(f"unknown backend {name!r}; have {sorted(backends)}")
    return backends[name]


def backend_name() -> str:
    return "native" if get_backend() is _native and _native is not None else "pure"


def signature_ids(codes, ncolors: int):
    return get_backend().signature_ids(codes, ncolors)


def jacobi_eigenvalues(a, tol_scale: float = 1e-10, max_sweeps: int = 100):
    return get_backend().jacobi_eigenvalues(a, tol_scale, max_sweeps)
