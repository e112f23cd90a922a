import random
from importlib import resources

import pytest
from hypothesis import strategies as st

from scaledim import FormalContext, ManyValuedContext, PreScaling
from scaledim.formats import parse_cxt, parse_mv


def data_bytes(name):
    return resources.files("scaledim.data").joinpath(name).read_bytes()


def make_context(rows, objects=None, attributes=None):
    """Context from strings of 'X'/'.'."""
    n, m = len(rows), len(rows[0]) if rows else 0
    objects = objects or [f"g{i + 1}" for i in range(n)]
    attributes = attributes or [f"m{j + 1}" for j in range(m)]
    return FormalContext(tuple(objects), tuple(attributes),
                         tuple(tuple(c == "X" for c in r) for r in rows))


def random_context(rng, max_objects=5, max_attributes=6):
    n = rng.randint(0, max_objects)
    m = rng.randint(0, max_attributes)
    p = rng.choice([0.3, 0.5, 0.7])
    rows = ["".join("X" if rng.random() < p else "." for _ in range(m)) for _ in range(n)]
    return make_context(rows, [f"g{i + 1}" for i in range(n)], [f"m{j + 1}" for j in range(m)])


def random_mv(rng, max_objects=5, max_attributes=3, max_values=4, complete=True):
    n = rng.randint(1, max_objects)
    k = rng.randint(1, max_attributes)
    attrs = [f"a{j + 1}" for j in range(k)]
    orders = {a: [f"{a}v{i}" for i in range(rng.randint(1, max_values))] for a in attrs}
    rows = []
    for _ in range(n):
        row = []
        for a in attrs:
            if not complete and rng.random() < 0.2:
                row.append(None)
            else:
                row.append(rng.choice(orders[a]))
        rows.append(tuple(row))
    mv = ManyValuedContext(tuple(f"g{i + 1}" for i in range(n)), tuple(attrs), tuple(rows))
    return mv, PreScaling.ordered(orders)


@st.composite
def contexts(draw, max_objects=6, max_attributes=6):
    n = draw(st.integers(0, max_objects))
    m = draw(st.integers(0, max_attributes))
    cells = draw(st.lists(st.lists(st.booleans(), min_size=m, max_size=m),
                          min_size=n, max_size=n))
    return FormalContext(tuple(f"g{i + 1}" for i in range(n)),
                         tuple(f"m{j + 1}" for j in range(m)),
                         tuple(tuple(r) for r in cells))


@pytest.fixture
def rng():
    return random.Random(20240613)


@pytest.fixture
def drive():
    return parse_cxt(data_bytes("drive.cxt"))


@pytest.fixture
def diag3():
    return parse_cxt(data_bytes("diag3.cxt"))


@pytest.fixture
def nominal2():
    return make_context(["X.", ".X"], ["a", "b"], ["p", "q"])


@pytest.fixture
def staircase():
    return make_context(["XX", ".X"])


@pytest.fixture
def fig2():
    return parse_mv(data_bytes("fig2.csv"), data_bytes("fig2-scaling.json"))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda l: int(l.split()[1])):
            terminalreporter.write_line(line)
