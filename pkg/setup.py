"""Build script for the optional compiled enumeration kernel.

The package works without the extension: centroinv.kernels falls back to the
pure-Python census when the compiled module is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "centroinv._kernel",
                ["src/centroinv/_kernel.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
