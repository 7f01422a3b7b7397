"""Build script for the optional compiled search kernel.

The package works without the extension (a pure-Python kernel with identical
behaviour is selected at import time), so any failure to compile is soft.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "irregwalk._walksearch",
                ["src/irregwalk/_walksearch.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
