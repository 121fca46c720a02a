import pathlib

import pytest

from opinionrank import classifier, corpus

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def fixture_corpus() -> corpus.Corpus:
    return corpus.load_corpus(DATA_DIR / "fixture_corpus.jsonl")


@pytest.fixture(scope="session")
def lexicon() -> corpus.Lexicon:
    return corpus.load_lexicon(DATA_DIR / "positive.txt", DATA_DIR / "negative.txt")


@pytest.fixture(scope="session")
def model(fixture_corpus, lexicon) -> classifier.NBModel:
    return classifier.train(fixture_corpus, lexicon)
