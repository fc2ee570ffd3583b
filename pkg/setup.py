"""Build hook: compile the optional Cython kernel when Cython is available.

The package is fully functional without the extension; picboundary.kernels
falls back to the pure-Python implementation at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/picboundary/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
