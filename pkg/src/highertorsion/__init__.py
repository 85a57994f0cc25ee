"""Torsion classes of sphere bundles, exactly, plus a complex-hyperbolic
numerical harness for the associated group cocycles.

Subpackages and modules:

- ``zetapoly``:   exact coefficients (rationals times formal zeta symbols)
- ``sympoly``:    graded multivariate polynomials, symmetric-function tools
- ``reps``:       weight-multiset torus representations
- ``torsion``:    the torsion series of representation spheres
- ``chernweil``:  translation into Chern-class expressions
- ``cpn``:        evaluation in the cohomology of CP^n, nonvanishing reports
- ``hyperbolic``: ball model of CH^n, geodesic simplices, cocycle quadrature
- ``cli``:        the ``highertorsion`` command line tool
"""

__version__ = "0.1.0"

from .zetapoly import ZetaPoly, zeta_eval, zp_eval  # noqa: F401
