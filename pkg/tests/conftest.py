from pathlib import Path

import pytest

from mtopo import MSpace, build_topology, make_mset, parse_mset

DATA = Path(__file__).parent / "data"

_ACCEPTANCE_LINES = []


def record_acceptance(line):
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def topo_from(domain, w, ground, opens):
    space = MSpace(tuple(domain), w)
    return build_topology(make_mset(space, ground), [make_mset(space, u) for u in opens])


def build_f1():
    return topo_from(
        "ab", 3, {"a": 2, "b": 3}, [{}, {"a": 2, "b": 3}, {"a": 1}, {"b": 2}, {"a": 1, "b": 2}]
    )


def build_f2():
    return topo_from(
        "abcd",
        5,
        {"a": 5, "b": 3, "c": 5, "d": 5},
        [
            {},
            {"a": 5, "b": 3, "c": 5, "d": 5},
            {"a": 1, "b": 2, "c": 3, "d": 2},
            {"a": 1, "c": 3},
            {"b": 2, "d": 5},
            {"a": 1, "b": 2, "c": 3, "d": 5},
            {"b": 2, "d": 2},
        ],
    )


@pytest.fixture(scope="session")
def f1():
    return build_f1()


@pytest.fixture(scope="session")
def f2():
    return build_f2()


@pytest.fixture
def ms():
    """``ms(topo_or_space, "{1/a,3/b}")`` parses a literal in that space."""

    def parse(where, text):
        space = where if isinstance(where, MSpace) else where.space
        return parse_mset(text, space)

    return parse
