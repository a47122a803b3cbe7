"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension; if Cython or a C++
toolchain is missing the build falls back to the pure-Python kernels.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Try to build the accelerator; on failure install pure-Python only."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"WARNING: skipping compiled kernels ({exc!r}); "
              f"the pure-Python backend will be used")


extension = Extension(
    "kktools._speedups",
    ["src/kktools/_speedups.pyx"],
    language="c++",
    extra_compile_args=["-O3", "-std=c++11"],
)

try:
    from Cython.Build import cythonize
    ext_modules = cythonize([extension],
                            compiler_directives={"language_level": "3"})
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
