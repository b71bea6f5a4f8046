"""
Pytest configuration and fixtures
"""

import json
import tempfile
from pathlib import Path
from typing import List, Sequence

import numpy as np
import pytest

from kuratowski.core.enumeration import spaces_up_to
from kuratowski.core.topology import PointSet, TopSpace, prefix_space


@pytest.fixture
def temp_output_dir():
    """Create temporary directory for test outputs"""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


def space_from_closures(closures: Sequence[Sequence[int]]) -> TopSpace:
    """Build a space from the closure of each singleton (1-indexed points)"""
    n = len(closures)
    spec = np.zeros((n, n), dtype=bool)
    for y, members in enumerate(closures):
        for x in members:
            spec[x - 1, y] = True
    return TopSpace(spec)


def points(space: TopSpace, *labels: int) -> PointSet:
    return PointSet.from_points(labels, space.point_count)


@pytest.fixture
def sierpinski():
    """Point 1 is open, point 2 is closed and lies in the closure of 1"""
    return space_from_closures([[1, 2], [2]])


@pytest.fixture
def vee():
    """Two open points over one closed point: k{1} = {1,2}, k{3} = {2,3}"""
    return space_from_closures([[1, 2], [2], [2, 3]])


@pytest.fixture
def prefix10():
    return prefix_space(10)


@pytest.fixture(scope="session")
def small_spaces() -> List[TopSpace]:
    """One space per isomorphism class, up to 3 points"""
    return list(spaces_up_to(3))


@pytest.fixture(scope="session")
def spaces_to_4() -> List[TopSpace]:
    """One space per isomorphism class, up to 4 points"""
    return list(spaces_up_to(4))


@pytest.fixture
def non_transitive_file(temp_output_dir):
    """1 in k{2} and 2 in k{3}, but 1 not in k{3}"""
    path = temp_output_dir / "broken.json"
    path.write_text(json.dumps({"points": 3, "closure": [[True, True, False], [False, True, True], [False, False, True]]}))
    return path


@pytest.fixture
def sierpinski_file(temp_output_dir, sierpinski):
    path = temp_output_dir / "sierpinski.json"
    path.write_text(json.dumps(sierpinski.to_json()))
    return path
