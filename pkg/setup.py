from setuptools import Extension, setup

# The compiled kernels are an optional speed core: if Cython or a C compiler
# is missing the package still installs and falls back to the pure-Python
# kernels at import time.
try:
    import numpy as np
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "roughtv.kernels._fast",
                ["src/roughtv/kernels/_fast.pyx"],
                include_dirs=[np.get_include()],
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
