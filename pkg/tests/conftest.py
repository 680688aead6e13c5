"""Shared fixtures: the bundled miniature datasets, loaded once per session."""

import pytest

from situnet import data_path
from situnet.cli import load_config, run_generation
from situnet.edges import filter_multiword, load_edges
from situnet.lexicon import load_frequencies, load_lexicon, load_stopwords
from situnet.relatedness import EsaRelatedness, build_esa_index, load_documents


def bundled(*parts) -> str:
    return str(data_path(*parts))


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(bundled("lexicon"))


@pytest.fixture(scope="session")
def frequencies():
    return load_frequencies(bundled("frequencies.tsv"))


@pytest.fixture(scope="session")
def stopwords():
    return load_stopwords(bundled("stopwords.txt"))


@pytest.fixture(scope="session")
def raw_store():
    return load_edges(bundled("conceptnet.tsv"))


@pytest.fixture(scope="session")
def store(raw_store, lexicon):
    return filter_multiword(raw_store, lexicon)


@pytest.fixture(scope="session")
def documents():
    return load_documents(bundled("esa_corpus.tsv"))


@pytest.fixture(scope="session")
def esa_index(documents, stopwords):
    return build_esa_index(documents, "raw_count", stopwords, 1)


@pytest.fixture(scope="session")
def provider(esa_index):
    return EsaRelatedness(esa_index)


@pytest.fixture(scope="session")
def scenario_products():
    """Full pipeline products for every bundled scenario config."""
    out = {}
    for name in ("mini", "recipe", "laundry", "cleaning"):
        config, _ = load_config(bundled("configs", f"{name}.cfg"))
        out[name] = (config, run_generation(config))
    return out
