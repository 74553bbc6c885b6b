import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    compile_args = []
    if os.name == "posix":
        # keep float ops uncontracted so the kernel is bit-identical
        # to the pure-Python fallback
        compile_args = ["-O3", "-ffp-contract=off"]
    extensions = cythonize(
        [
            Extension(
                "lotkarank._scoring",
                ["src/lotkarank/_scoring.pyx"],
                extra_compile_args=compile_args,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
