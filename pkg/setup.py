"""Build script. The compiled kernel extension is optional: if Cython or a C
compiler is unavailable the package installs pure-Python only and selects the
fallback backend at import time."""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    # a failed extension build must not fail the install
    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:
            print(f"warning: skipping compiled kernels ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc})", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not found, installing pure-Python kernels only", file=sys.stderr)
        return []
    return cythonize(
        [Extension("gisalg._kernels", ["src/gisalg/_kernels.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
