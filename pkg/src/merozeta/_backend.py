"""Select the exact kernel implementation at import time.

The compiled double description routine from ``_speedups`` is used when
it was built; otherwise, or when ``MEROZETA_PURE_PYTHON`` is set to a
non-empty value, everything runs on the pure-Python ``_exact`` module.
Both produce identical results.
"""

import os
from functools import partial

from merozeta import _exact
from merozeta._exact import (  # noqa: F401
    content,
    det,
    dot,
    frame_coords,
    hyperplane_normal,
    lattice_coords,
    primitive,
    rank,
    saturated_basis,
)

try:
    from merozeta import _speedups
except ImportError:  # extension not built
    _speedups = None


def available() -> list[str]:
    return ["python"] + (["cython"] if _speedups is not None else [])


def select(name: str) -> None:
    """Rebind the ray-enumeration kernels to ``"python"`` or ``"cython"``."""
    global NAME, cone_extreme_rays, polyhedron_facets, polytope_vertices, pulling_triangulation
    if name == "cython":
        if _speedups is None:
            raise ImportError("merozeta._speedups is not built")
        rays = _speedups.cone_extreme_rays
    elif name == "python":
        rays = _exact.cone_extreme_rays
    else:
        raise ValueError(f"unknown backend {name!r}")
    NAME = name
    cone_extreme_rays = rays
    polyhedron_facets = partial(_exact.polyhedron_facets, rays=rays)
    polytope_vertices = partial(_exact.polytope_vertices, rays=rays)
    pulling_triangulation = partial(_exact.pulling_triangulation, rays=rays)


select("cython" if _speedups is not None and not os.environ.get("MEROZETA_PURE_PYTHON") else "python")
