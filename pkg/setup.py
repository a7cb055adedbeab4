"""Build script: compiles the optional Cython kernel.

The package is pure Python; ``weierwalls._kernel_c`` is an optional compiled
twin of ``weierwalls._kernel_py``.  If Cython (or a C compiler) is missing the
extension is simply skipped and the pure-Python kernel is used at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "weierwalls._kernel_c",
                ["src/weierwalls/_kernel_c.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
