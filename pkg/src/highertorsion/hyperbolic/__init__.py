"""Complex hyperbolic geometry: ball model, simplices, cocycles."""

from .backend import available_backends, backend_name  # noqa: F401
from .core import (  # noqa: F401
    BoundaryPoint,
    CenterInfo,
    CHPoint,
    Isometry,
    SimplexMap,
    act,
    act_tangent,
    boundary_act,
    center,
    center_with_info,
    coboundary_residual,
    cocycle_eval,
    dist,
    geodesic,
    kahler_form,
    omega_value,
    random_isometry,
    ray_endpoint,
    simplex,
    tangent_norm,
)
from .elements_io import load_elements, save_elements  # noqa: F401
