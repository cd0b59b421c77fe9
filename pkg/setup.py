from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("fanoaut._rref_cy", ["src/fanoaut/_rref_cy.pyx"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    # no Cython: the pure-Python kernel is used at import time
    ext_modules = []

setup(ext_modules=ext_modules)
