"""Builds the optional compiled search kernel; the package works without it."""
from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler or no Cython: fall back to pure Python
            print(f"skipping compiled kernel: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping compiled kernel {ext.name}: {exc}")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("bidiears._kernel", ["src/bidiears/_kernel.pyx"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
