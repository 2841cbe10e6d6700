"""Build script: compiles the optional C extension for the hot kernels.

The package is pure Python by default.  If Cython and a C compiler are
available, ``quiddity._ckernels`` is built from the .pyx source and picked
up automatically at import time; otherwise the pure-Python kernels in
``quiddity._kernels`` are used.  Set QUIDDITY_NO_EXT=1 to skip the
extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("QUIDDITY_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "quiddity._ckernels",
                    ["src/quiddity/_ckernels.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
