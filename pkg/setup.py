from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "kernsig._qf",
        sources=["src/kernsig/_qf.pyx"],
        extra_compile_args=["-O3", "-fopenmp"],
        extra_link_args=["-fopenmp"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
