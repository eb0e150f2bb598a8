from setuptools import Extension, setup

# The compiled Murnaghan-Nakayama kernel is optional: if Cython or a C++
# compiler is missing the install still succeeds and the package selects
# the pure-Python kernel at import time.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "foulkes._mn_cy",
                ["src/foulkes/_mn_cy.pyx"],
                language="c++",
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
