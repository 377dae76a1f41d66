from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension("altcert._ckernels", ["src/altcert/_ckernels.pyx"]),
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
)
