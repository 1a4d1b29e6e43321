from setuptools import Extension, setup
from Cython.Build import cythonize

ext = Extension(
    "relayrates.kernels._lpdet",
    ["src/relayrates/kernels/_lpdet.pyx"],
)

setup(ext_modules=cythonize([ext], language_level="3"))
