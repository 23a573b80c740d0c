# python setup.py build_ext --inplace
#
# The compiled extension is optional: when Cython (or a C compiler) is not
# available the package falls back to the pure-Python search kernel.
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("hamcolor._bnb", ["src/hamcolor/_bnb.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
