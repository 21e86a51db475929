import os
import pathlib
import sys

import pytest


def _load_core():
    try:
        from hojacobi import _core

        return _core
    except ImportError:
        pass
    # fall back to the extension built by a plain CMake build
    candidates = []
    env_dir = os.environ.get("HOJ_PYEXT_DIR")
    if env_dir:
        candidates.append(pathlib.Path(env_dir))
    candidates.append(pathlib.Path(__file__).resolve().parents[2] / "build")
    for cand in candidates:
        if cand.is_dir() and list(cand.glob("_core.*")):
            sys.path.insert(0, str(cand))
            import _core

            return _core
    raise RuntimeError(
        "hojacobi extension not found; pip install the package or build with CMake "
        "(set HOJ_PYEXT_DIR to the directory containing _core.*.so)"
    )


@pytest.fixture(scope="session")
def core():
    return _load_core()
