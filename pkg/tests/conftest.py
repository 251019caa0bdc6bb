import pytest

from mcheck.matrix import mal


@pytest.fixture
def mal_matrix():
    return mal()
