import setuptools

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            setuptools.Extension(
                "brmult._echelon",
                ["src/brmult/_echelon.pyx"],
                language="c",
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the pure-python backend in brmult._echelon_py is used at runtime
    ext_modules = []

setuptools.setup(ext_modules=ext_modules)
