"""Build the optional Cython sweep kernels.

The package works without them: ``oamlink.kernels`` falls back to the
numpy implementation when the extension cannot be imported.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "oamlink._kernels",
                ["src/oamlink/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
