"""CMake-driven build of the _odeinv extension module."""

import shutil
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
        import pybind11

        source = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DODEINV_SKIP_TESTS=ON",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "odeinv_py", "-j"],
            check=True,
        )

        built = sorted(build_dir.glob("_odeinv*.so"))
        if not built:
            raise RuntimeError("CMake did not produce the _odeinv module")
        target = Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[-1], target)


setup(
    ext_modules=[CMakeExtension("odeinv._odeinv")],
    cmdclass={"build_ext": CMakeBuild},
)
