"""Pytest configuration and fixtures."""

import itertools
from collections.abc import Iterator

import pytest

from pfhat.action import build_epf_set
from pfhat.character import character_vector
from pfhat.models import ExtendedPF, Permutation, SymFun
from pfhat.settings import set_settings
from pfhat.symfun import frobenius


@pytest.fixture(autouse=True)
def reset_settings() -> Iterator[None]:
    """Drop any settings a test installed so the next one reads the environment again."""
    yield
    set_settings(None)


@pytest.fixture
def s3() -> list[Permutation]:
    """All six permutations of [3]."""
    return [Permutation(p) for p in itertools.permutations(range(1, 4))]


@pytest.fixture
def s4() -> list[Permutation]:
    """All 24 permutations of [4]."""
    return [Permutation(p) for p in itertools.permutations(range(1, 5))]


@pytest.fixture
def epf_4_3() -> list[ExtendedPF]:
    """PF̂_{4,3}, which contains the worked example 0003."""
    return build_epf_set(4, 3)


@pytest.fixture
def frob_3_1() -> SymFun:
    """Frobenius characteristic of τ_{3,1}: p_21/2 + p_111/2."""
    return frobenius(character_vector(3, 1))


@pytest.fixture
def frob_3_3() -> SymFun:
    """Frobenius characteristic of τ_{3,3}: p_3 + p_21/2 + p_111/2."""
    return frobenius(character_vector(3, 3))
