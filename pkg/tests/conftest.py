"""Session fixtures: generated graph corpora, shared across test modules."""

import pytest

import corpus


@pytest.fixture(scope="session")
def corpus6():
    """All non-isomorphic connected graphs on at most 6 vertices (141)."""
    return corpus.connected_graphs_upto(6)


@pytest.fixture(scope="session")
def corpus7():
    """All non-isomorphic connected graphs on at most 7 vertices (996)."""
    return corpus.connected_graphs_upto(7)


@pytest.fixture(scope="session")
def corpus8():
    """All non-isomorphic connected graphs on at most 8 vertices (12113)."""
    return corpus.connected_graphs_upto(8)
