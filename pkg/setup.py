"""Build script for the optional compiled evaluation kernel.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so the extension is marked optional: a missing or
failing C toolchain degrades to the pure-Python kernel instead of breaking
the install.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "hstorus._kernels_cy",
                ["src/hstorus/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
