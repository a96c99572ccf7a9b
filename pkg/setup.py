"""Build script: compiles the optional Cython kernel when Cython is available.

The package is pure Python plus one optional compiled extension
(tonnetzlab.kernels._nnls_cy). Installation without Cython or a C compiler
still works; the package then falls back to the numpy kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    extensions = cythonize(
        [
            Extension(
                "tonnetzlab.kernels._nnls_cy",
                ["src/tonnetzlab/kernels/_nnls_cy.pyx"],
            )
        ],
        compiler_directives={"language_level": 3},
    )

for ext in extensions:
    # never fail the install over the accelerator
    ext.optional = True

setup(ext_modules=extensions)
