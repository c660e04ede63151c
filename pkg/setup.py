from setuptools import Extension, setup

# The compiled kernel is an optional accelerator: if Cython is unavailable
# the package installs pure-Python and jtalg.kernel falls back at import.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("jtalg._kernels", ["src/jtalg/_kernels.pyx"], language="c++")],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
