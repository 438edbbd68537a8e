import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in rootdom._pykernels when the extension is absent.
ext_modules = []
if os.environ.get("ROOTDOM_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "rootdom._ckernels",
                    ["src/rootdom/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
