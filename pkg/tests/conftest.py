import pytest

from helpers import complete, identity_corpus, path

CORPUS = identity_corpus()


def pytest_generate_tests(metafunc):
    if 'corpus_graph' in metafunc.fixturenames:
        metafunc.parametrize('corpus_graph', [g for _, g in CORPUS], ids=[name for name, _ in CORPUS])


@pytest.fixture
def k2():
    return complete(2)


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def p5():
    return path(5)
