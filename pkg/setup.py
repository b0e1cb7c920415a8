import os

from setuptools import setup

ext_modules = []
if os.environ.get("QTA_NO_EXTENSION", "") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("qta._fastkernel", ["src/qta/_fastkernel.pyx"],
                       optional=True)],
            language_level=3)
    except ImportError:
        # pure-Python kernel remains the fallback
        ext_modules = []

setup(ext_modules=ext_modules)
