import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("DEGENTRIG_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "degentrig._kernels",
                    ["src/degentrig/_kernels.pyx"],
                    # no FMA contraction: keeps results bit-identical to the Python fallback
                    extra_compile_args=["-O3", "-ffp-contract=off"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
