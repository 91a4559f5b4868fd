"""CMake-backed build for the minktree extension module."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DMINKTREE_PYTHON_OUTPUT_DIR={extdir}",
            "-DMINKTREE_BUILD_CLI=OFF",
            "-DMINKTREE_BUILD_TESTS=OFF",
            "-DMINKTREE_BUILD_PYTHON=ON",
            f"-DPYTHON_EXECUTABLE={sys.executable}",
        ]
        source_dir = Path(__file__).resolve().parent
        subprocess.run(["cmake", str(source_dir), *cmake_args], cwd=build_dir, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "minktree_python",
             "-j", str(os.cpu_count() or 2)],
            cwd=build_dir,
            check=True,
        )


setup(
    packages=["minktree"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("minktree._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
