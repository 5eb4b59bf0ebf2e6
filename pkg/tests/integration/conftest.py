from pathlib import Path

import numpy as np
import pytest

DATA_DIR = Path(__file__).parent / "data"
PREFLIB_DIR = DATA_DIR / "preflib"


def data_path(name):
    return PREFLIB_DIR / name


def data_text(name):
    return data_path(name).read_text(encoding="utf-8")


class Factory(dict):
    __getattr__ = dict.__getitem__
    __setattr__ = dict.__setitem__


@pytest.fixture(scope="session")
def data_factory():
    return Factory(
        directory=PREFLIB_DIR,
        path=data_path,
        text=data_text,
    )


@pytest.fixture
def rng():
    return np.random.default_rng(19)
