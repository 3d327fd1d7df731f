"""Build script for the compiled transform kernel.

The extension is optional: if Cython or a C compiler is missing the
package installs anyway and falls back to the pure-Python kernel.
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
                "rmfsym._kernels_cy",
                ["src/rmfsym/_kernels_cy.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
