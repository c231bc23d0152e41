import importlib.util
import os
from pathlib import Path

import numpy as np
import pytest

from stegaug.pipeline import Batch, Sample

TOOLS = Path(__file__).resolve().parent.parent / "tools"


def _load_fixture_tool():
    spec = importlib.util.spec_from_file_location(
        "gen_cifar_fixture", TOOLS / "gen_cifar_fixture.py"
    )
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


@pytest.fixture(scope="session")
def cifar_batch_file(tmp_path_factory) -> Path:
    """A 10,000-record CIFAR-10 binary batch file.

    Uses a real batch file if STEGAUG_CIFAR10 points at one; otherwise a
    deterministic format-exact synthetic file.
    """
    env = os.environ.get("STEGAUG_CIFAR10")
    if env and Path(env).is_file():
        return Path(env)
    path = tmp_path_factory.mktemp("cifar") / "data_batch_1.bin"
    path.write_bytes(_load_fixture_tool().make_batch(10_000, seed=123))
    return path


def make_batch(n: int, shape=(3, 8, 8), label_dim: int = 10, seed: int = 0) -> Batch:
    rng = np.random.default_rng(seed)
    images = rng.integers(0, 256, size=(n, *shape), dtype=np.uint8)
    labels = np.zeros((n, label_dim), dtype=np.uint8)
    labels[np.arange(n), rng.integers(0, label_dim, n)] = 1
    return Batch([Sample(img, lab) for img, lab in zip(images, labels)])
