"""Builds the optional compiled state-enumeration kernel.

The package works without it (a pure-Python fallback is selected at
import time), so a failed extension build is not fatal.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("matchnet._statecount", ["src/matchnet/_statecount.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
