import pytest

from spatc import load_config
from spatc.emit import table_from_csv

from helpers import CORPUS, corpus_cases


@pytest.fixture(scope="session")
def cfg():
    return load_config()


@pytest.fixture(scope="session")
def corpus_root():
    return CORPUS


@pytest.fixture(scope="session")
def golden_tables():
    out = {}
    for case in corpus_cases():
        golden = case / "golden.csv"
        if golden.exists():
            out[case.name] = table_from_csv(golden.read_text("utf-8"))
    return out
