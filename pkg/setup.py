import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and os.environ.get("LATTICE_GAP_PURE") != "1":
    ext_modules = cythonize(
        [
            Extension(
                "lattice_gap._kernel._speedups",
                ["src/lattice_gap/_kernel/_speedups.pyx"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
