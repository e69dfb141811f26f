import pytest

from eulerkit import load_corpus, make_complex


@pytest.fixture
def tetra():
    return make_complex(["abc", "abd", "acd", "bcd"])


@pytest.fixture(params=["tetrahedron-surface", "rp2-6", "torus-7", "bowtie", "path-2"])
def corpus_complex(request):
    return request.param, load_corpus(request.param)
