from setuptools import Extension, setup

from Cython.Build import cythonize

# Plain -O2 keeps IEEE semantics: the compiled kernels must return floats
# bit-identical to the pure-Python fallback, so no -ffast-math and no
# -march=native here.
extensions = [
    Extension(
        "pmspace._kernels_cy",
        ["src/pmspace/_kernels_cy.pyx"],
        extra_compile_args=["-O2"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
