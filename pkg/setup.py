import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SONJ_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "sonj._kernel_c",
                    ["src/sonj/_kernel_c.pyx"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython: the pure-Python kernel backend is used instead.
        pass

setup(ext_modules=ext_modules)
