"""Build script: compiles the optional cube kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure to cythonize or
compile downgrades to a pure build instead of aborting the install.
"""

from setuptools import Extension, setup

extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("khoma._cubekernel", ["src/khoma/_cubekernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # no Cython / no compiler: pure-Python install
    print(f"khoma: skipping compiled kernel ({exc!r}); using pure-Python fallback")

setup(ext_modules=extensions)
