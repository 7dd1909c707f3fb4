import pathlib

import pytest

from pathalg import QQ, load_algebra

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def fixture_text(name):
    return (FIXTURES / name).read_text(encoding="utf-8")


def fixture_path(name):
    return str(FIXTURES / name)


def line_quiver_doc(n):
    lines = ["vertex " + " ".join(str(i) for i in range(1, n + 1))]
    for i in range(1, n):
        lines.append(f"arrow a{i} {i} {i + 1}")
    return "\n".join(lines) + "\n"


@pytest.fixture
def t2():
    return load_algebra(line_quiver_doc(2), QQ)


@pytest.fixture
def cospan():
    return load_algebra(fixture_text("cospan.quiver"), QQ)


@pytest.fixture
def four_vertex():
    return load_algebra(fixture_text("four_vertex.quiver"), QQ)


@pytest.fixture
def six_vertex():
    return load_algebra(fixture_text("six_vertex.quiver"), QQ)


@pytest.fixture
def six_vertex_bound():
    return load_algebra(fixture_text("six_vertex_bound.quiver"), QQ)
