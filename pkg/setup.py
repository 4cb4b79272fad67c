"""Build script: compiles the optional q-series Cython kernel.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so any failure here degrades to a warning rather
than aborting the install.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build extensions if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn("q-series extension not built (%s); "
                          "using the pure-Python kernels" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn("failed to compile %s (%s); "
                          "using the pure-Python kernels" % (ext.name, exc))


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "olim41._kernels._qseries_cy",
        ["src/olim41/_kernels/_qseries_cy.pyx"],
        # -ffp-contract=off: keep the compensated sums reproducible
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
