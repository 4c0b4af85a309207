from pathlib import Path

import pytest

from polydissect.orbits import canonical_orbit_count, formula

DATA = Path(__file__).parent / "data"

TABLES = [
    ("triangulations_cyclic.txt", "cyclic", 3),
    ("triangulations_dihedral.txt", "dihedral", 3),
    ("almost_triangulations_cyclic.txt", "cyclic", 4),
    ("two_face_dissections_cyclic.txt", "cyclic", 5),
    ("two_face_dissections_dihedral.txt", "dihedral", 5),
]


def read_table(name):
    rows = {}
    for line in (DATA / name).read_text().splitlines():
        if line and not line.startswith("#"):
            n, v = line.split()
            rows[int(n)] = int(v)
    return rows


@pytest.mark.parametrize("name,group,offset", TABLES)
def test_sequence_file(name, group, offset):
    rows = read_table(name)
    assert rows
    for n, v in rows.items():
        assert formula(n, n - offset, group) == v, (name, n)
        if n <= 9:
            assert canonical_orbit_count(n, n - offset, group) == v, (name, n)
