from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package still works without the compiled kernels: the pure-Python
    # fallback in faultspan._kernels is selected at import time.
    extensions = []
else:
    extensions = cythonize(
        [
            Extension(
                "faultspan._kernels._ckern",
                ["src/faultspan/_kernels/_ckern.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=extensions)
