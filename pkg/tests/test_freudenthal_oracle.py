"""Sanity checks for the recursive dimension oracle.

The oracle computes weight multiplicities from scratch in coordinate
realizations of the classical families, so before it can referee the
closed-form dimension code it has to reproduce dimensions every textbook
lists.
"""

import pytest

from freudenthal_oracle import _dominant_rep, _orbit_size, _tables, freudenthal_dim

# (family, rank, fundamental-coordinates, dimension) for modules whose
# dimensions are standard knowledge: vector/spin/adjoint representations
# and a few small symmetric powers.
KNOWN_DIMENSIONS = [
    ("A", 1, (1,), 2),
    ("A", 1, (3,), 4),
    ("A", 2, (1, 0), 3),
    ("A", 2, (0, 1), 3),
    ("A", 2, (1, 1), 8),     # adjoint of sl3
    ("A", 2, (2, 0), 6),
    ("A", 3, (1, 0, 0), 4),
    ("A", 3, (0, 1, 0), 6),
    ("A", 3, (1, 0, 1), 15),  # adjoint of sl4
    ("B", 2, (1, 0), 5),
    ("B", 2, (0, 1), 4),      # spin
    ("B", 2, (0, 2), 10),     # adjoint of so5
    ("B", 3, (1, 0, 0), 7),
    ("B", 3, (0, 1, 0), 21),  # adjoint of so7
    ("B", 3, (0, 0, 1), 8),   # spin
    ("C", 2, (1, 0), 4),
    ("C", 2, (0, 1), 5),
    ("C", 2, (2, 0), 10),     # adjoint of sp4
    ("C", 2, (1, 1), 16),
    ("C", 2, (0, 2), 14),
    ("C", 3, (1, 0, 0), 6),
    ("C", 3, (0, 1, 0), 14),
    ("C", 3, (0, 0, 1), 14),
    ("C", 3, (2, 0, 0), 21),  # adjoint of sp6
    ("D", 4, (1, 0, 0, 0), 8),
    ("D", 4, (0, 1, 0, 0), 28),  # adjoint of so8
    ("D", 4, (0, 0, 1, 0), 8),   # half spin
    ("D", 4, (0, 0, 0, 1), 8),   # other half spin
    ("D", 5, (1, 0, 0, 0, 0), 10),
    ("D", 5, (0, 0, 0, 0, 1), 16),
]


@pytest.mark.parametrize("family,rank,coords,expected", KNOWN_DIMENSIONS)
def test_known_dimensions(family, rank, coords, expected):
    assert freudenthal_dim(family, rank, coords) == expected


def test_zero_weight_is_one_dimensional():
    for family, rank in [("A", 2), ("B", 3), ("C", 2), ("D", 4)]:
        assert freudenthal_dim(family, rank, (0,) * rank) == 1


def test_orbit_sizes():
    omegas = _tables("A", 2)[1]
    assert _orbit_size("A", omegas[0]) == 3
    omegas = _tables("D", 4)[1]
    assert _orbit_size("D", omegas[0]) == 8   # vector weights +-e_i
    omegas = _tables("B", 3)[1]
    assert _orbit_size("B", omegas[2]) == 8   # spin weights (+-1/2)^3


def test_dominant_rep_parity():
    # D family: an odd number of sign flips is repaired through the last
    # coordinate; an even number sorts back to the original dominant vector
    omegas = _tables("D", 4)[1]
    spin = omegas[3]                    # (1/2, 1/2, 1/2, 1/2)
    flipped = (spin[0], -spin[1], spin[2], -spin[3])
    assert _dominant_rep("D", flipped) == spin
    odd = (spin[0], spin[1], spin[2], -spin[3])
    rep = _dominant_rep("D", odd)
    assert rep[-1] < 0 and tuple(abs(c) for c in rep) == spin


def test_duality_pairing():
    from fractions import Fraction

    from freudenthal_oracle import _dot
    tables = _tables("C", 3)
    alphas, omegas = tables[0], tables[1]
    for i, om in enumerate(omegas):
        for j, al in enumerate(alphas):
            coroot_pair = 2 * _dot(om, al) / _dot(al, al)
            assert coroot_pair == Fraction(int(i == j))
