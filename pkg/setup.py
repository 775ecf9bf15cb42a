"""Build script: compiles the optional counting-kernel extension.

The package is fully functional without the extension (a pure Python /
numpy fallback is selected at import time), so the extension is marked
optional: a missing compiler or Cython only costs speed.
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
                "hornlab._kernels_cy",
                ["src/hornlab/_kernels_cy.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
