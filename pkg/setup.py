from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # build without the compiled kernel
    ext_modules = []
else:
    import numpy

    ext_modules = cythonize(
        [
            Extension(
                "coact._closure",
                sources=["src/coact/_closure.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules, zip_safe=False)
