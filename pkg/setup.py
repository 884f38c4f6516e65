"""Builds the optional compiled kernels; the package works without them."""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SCHUBERT_BCD_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("schubert_bcd._ckernels", ["src/schubert_bcd/_ckernels.pyx"], optional=True)],
            language_level=3,
        )

setup(ext_modules=ext_modules)
