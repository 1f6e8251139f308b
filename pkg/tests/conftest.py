import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from partlat import build, enumerate_partial_lattices, parse
from partlat import figures as figs


@pytest.fixture(scope="session")
def corpus4():
    return list(enumerate_partial_lattices(4))


@pytest.fixture(scope="session")
def corpus5():
    return list(enumerate_partial_lattices(5))


@pytest.fixture(scope="session")
def fig1():
    return build(parse(figs.FIG1_TEXT))


@pytest.fixture(scope="session")
def fig2():
    return build(parse(figs.FIG2_TEXT))


@pytest.fixture(scope="session")
def fig3():
    return build(parse(figs.FIG3_TEXT))


@pytest.fixture(scope="session")
def fig4():
    return build(parse(figs.FIG4_TEXT))


@pytest.fixture(scope="session")
def fig9():
    return build(parse(figs.FIG9_TEXT))


KITE_TEXT = """\
plattice
elements o l r t
join o l = l
join o r = r
join o t = t
join r t = t
meet o l = o
meet o r = o
meet o t = o
meet l r = o
meet l t = o
meet r t = r
"""


@pytest.fixture(scope="session")
def kite():
    """Four elements with a total meet and two undefined joins: o < l, o < r < t."""
    return build(parse(KITE_TEXT))
