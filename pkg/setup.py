from setuptools import setup

ext_modules = []
try:
    from setuptools.extension import Extension
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("pellian._kernel._intpoly", ["src/pellian/_kernel/_intpoly.pyx"])],
        language_level=3,
    )
except Exception:
    # no Cython available: the pure-Python kernel is used instead
    ext_modules = []

setup(ext_modules=ext_modules)
