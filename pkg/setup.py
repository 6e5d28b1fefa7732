"""Build hooks for the optional compiled kernels.

The package is pure Python plus one Cython extension
(``superproj._kernels._ext``).  If Cython or a C compiler is missing the
build degrades to the numpy fallback kernels; nothing else changes.
"""

from setuptools import find_packages, setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "superproj._kernels._ext",
                ["src/superproj/_kernels/_ext.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

# Name, layout and script are repeated from pyproject.toml: setuptools too
# old for PEP 660 falls back to `setup.py develop`, which never reads the
# [project] table and otherwise builds an UNKNOWN egg with the extension
# pointed at a nonexistent non-src path.
setup(
    name="superproj",
    version="0.1.0",
    package_dir={"": "src"},
    packages=find_packages("src"),
    entry_points={"console_scripts": ["superproj = superproj.cli:main"]},
    ext_modules=ext_modules,
)
