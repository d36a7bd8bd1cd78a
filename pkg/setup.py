from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "mirrorquintic._fastkernels",
                ["src/mirrorquintic/_fastkernels.pyx"],
            )
        ],
        language_level=3,
    )
)
