"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure NumPy
fallback is selected at import time); building it just speeds up the
hyperbolic-geometry kernels.  Run

    python setup.py build_ext --inplace

to compile in a source checkout, or install normally with pip, which
will attempt the build and fall back silently if no compiler or Cython
is available.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext = Extension(
        "highertorsion.hyperbolic._kernels_cy",
        ["src/highertorsion/hyperbolic/_kernels_cy.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)
except ImportError:
    pass

setup(ext_modules=ext_modules)
