from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

# The CMake build links the static core; for pip installs we compile the
# core sources straight into the extension instead.
ext = Pybind11Extension(
    "bracketword._bracketword",
    sorted(glob("src/*.cpp")) + ["python/module.cpp"],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp", "mpfr"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
