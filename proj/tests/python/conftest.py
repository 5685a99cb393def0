import json
import pathlib

import pytest

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def small_splitter():
    return json.loads((DATA / "small_splitter.json").read_text())
