import pytest

from simrel import FairAts, FairTs, parse_system, ts_to_ats

FIX1_TEXT = """\
ats
obs p q
states 0 1
init 0
label 0 p
label 1 q
act1 0 a b
act2 0 x y
act1 1 a
act2 1 x
trans 0 a x 0
trans 0 a y 1
trans 0 b x 1
trans 0 b y 1
trans 1 a x 0
"""

FIX2_TEXT = """\
ts
obs p q
states 0 1
init 0
label 0 p
label 1 q
edge 0 1
edge 1 1
"""

FIX3_TEXT = """\
ts
obs p q
states 0
init 0
label 0 p
edge 0 0
"""

FIX4_TEXT = FIX2_TEXT + "fair 1\n"


@pytest.fixture(scope="session")
def fix1():
    return parse_system(FIX1_TEXT)


@pytest.fixture(scope="session")
def fix2():
    return parse_system(FIX2_TEXT)


@pytest.fixture(scope="session")
def fix3():
    return parse_system(FIX3_TEXT)


@pytest.fixture(scope="session")
def fix4():
    return parse_system(FIX4_TEXT)


@pytest.fixture(scope="session")
def fix2_ats(fix2):
    return ts_to_ats(fix2)


@pytest.fixture(scope="session")
def fix3_ats(fix3):
    return ts_to_ats(fix3)


@pytest.fixture(scope="session")
def fix4_fair_ats(fix4):
    return FairAts(ts_to_ats(fix4.ts), fix4.fair)


@pytest.fixture(scope="session")
def fix2_nofair(fix2):
    return FairTs(fix2, frozenset())


@pytest.fixture(scope="session")
def fix3_nofair(fix3):
    return FairTs(fix3, frozenset())
