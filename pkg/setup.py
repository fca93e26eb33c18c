import os

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

openmp = [] if os.environ.get("ADAPTCC_NO_OPENMP") else ["-fopenmp"]

extensions = [
    Extension(
        "adaptcc._kernels",
        ["src/adaptcc/_kernels.pyx"],
        include_dirs=[np.get_include(), "src/adaptcc"],
        extra_compile_args=["-O3"] + openmp,
        extra_link_args=openmp,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
