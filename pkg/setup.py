import os

from setuptools import setup

extensions = []
if not os.environ.get("AFFSCHUR_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        extensions = cythonize(["src/affschur/_kernels.pyx"], language_level=3, quiet=True)

setup(ext_modules=extensions)
