import pytest

from k4t.tree import parse_tree

TWO_CORE = "(((()())()))"
PATH_THREE_CORE = "((((()())())()))"
BINARY = "((((()())(()()))(()())))"
ROOT_DEG4 = "(((()())()()))"
DIR2_CHILD = "(((()(()()))))"
STAR3 = "((()()))"
PATH = "((((()))))"


@pytest.fixture
def binary_tree():
    """Cores in preorder: r=1, u1=2, w1=3, w2=6, u2=9."""
    return parse_tree(BINARY)


@pytest.fixture
def two_core():
    """c1=1, c2=2."""
    return parse_tree(TWO_CORE)
