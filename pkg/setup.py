"""Build script: compiles the optional sieve extension, tolerating failure.

The package works without the extension (a numpy fallback with identical
semantics is selected at import time), so any Cython/compiler problem here
downgrades to a warning instead of breaking the install.
"""

import os
import sys

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("AMIBOUNDS_PURE_PYTHON") != "1":
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "amibounds._native",
                    ["src/amibounds/_native.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
        sys.stderr.write(
            "amibounds: native extension build skipped (%s); "
            "pure-python kernels will be used\n" % (exc,)
        )
        ext_modules = []

setup(ext_modules=ext_modules)
