"""Build script.

The compiled jet-arithmetic kernel is optional: if Cython or a C compiler
is unavailable the package installs anyway and falls back to the pure
Python implementation in mdkin._jet_pure.
"""
import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "mdkin._jet_cy",
                sources=["src/mdkin/_jet_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"warning: building without compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
