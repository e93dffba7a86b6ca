"""Build the optional Cython kernels.

The extension is marked optional: if it fails to compile, the package
falls back to the numpy implementation in ``xxcorr._kernels_py``.
"""
import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - build without Cython
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "xxcorr._kernels",
                ["src/xxcorr/_kernels.pyx"],
                include_dirs=[np.get_include()],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
