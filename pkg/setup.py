import os

from setuptools import Extension, setup

# The compiled kernels are optional: the package falls back to the numpy
# implementations in torsorkit._kernels.fallback when the extension is
# missing.  Set TORSORKIT_PURE=1 to skip building it.
ext_modules = []
if not os.environ.get("TORSORKIT_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "torsorkit._kernels._speedups",
                    ["src/torsorkit/_kernels/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
