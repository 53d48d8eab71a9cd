"""Build script: compiles the optional scan kernel.

The compiled extension is a pure accelerator.  If it cannot be built the
package still installs and falls back to the numpy implementation of the
same kernels, so any build failure here is reported as a warning rather
than an error.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: building the compiled scan kernel failed; "
            f"the package will use the numpy fallback ({exc})",
            file=sys.stderr,
        )


ext_modules = []
if not os.environ.get("BIGRADED_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("bigraded._scan", ["src/bigraded/_scan.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:  # pragma: no cover - toolchain dependent
        print(
            "WARNING: Cython not available; skipping the compiled scan kernel",
            file=sys.stderr,
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
