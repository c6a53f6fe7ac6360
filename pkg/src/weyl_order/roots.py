"""Classical root systems A/B/C/D described through their positive coroots.

Each positive coroot is stored by its coefficients over the simple coroots
h_1..h_N; for the classical families every coefficient lies in {0, 1, 2}.
A coroot with some coefficient equal to 2 is said to have height two, and
for those the doubled block starts right after an initial run of ones: the
pair (i, j) with the ones on [i, j-1] and the twos starting at j is its
window marker, and h_i + ... + h_{j-1} (when i < j) is its window partner.

Two constructions are kept side by side:

* a closed-form table of interval and doubled-interval patterns, and
* a generative closure from the Cartan matrix (positive roots of the dual
  system expressed over its simple roots).

The two are compared as sets; ``coroot_table_report`` surfaces any gap.
The validated list used everywhere else is the generated one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .weights import Weight

FAMILIES = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 1, "D": 3}


@dataclass(frozen=True)
class Coroot:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def height(self) -> int:
        """2 when some coefficient equals 2, else 1."""
        return 2 if 2 in self.coeffs else 1

    @property
    def window(self) -> tuple[int, int] | None:
        """(i, j) marker of a height-two coroot, 1-based; None at height one."""
        if self.height != 2:
            return None
        first_nonzero = next(t for t, c in enumerate(self.coeffs) if c)
        first_two = self.coeffs.index(2)
        return (first_nonzero + 1, first_two + 1)

    def window_partner_coeffs(self) -> tuple[int, ...] | None:
        """Coefficients of the interval h_i+...+h_{j-1} below the doubled block.

        None when this coroot has height one, or when the doubled block
        starts immediately (i = j, no room for a partner).
        """
        w = self.window
        if w is None or w[0] == w[1]:
            return None
        i, j = w
        return tuple(1 if i <= t + 1 <= j - 1 else 0 for t in range(len(self.coeffs)))

    def __str__(self) -> str:
        terms = []
        for t, c in enumerate(self.coeffs):
            if c == 1:
                terms.append(f"h{t + 1}")
            elif c:
                terms.append(f"{c}h{t + 1}")
        return "+".join(terms) or "0"


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    coroots: tuple[Coroot, ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def coroot_by_coeffs(self, coeffs: tuple[int, ...]) -> Coroot | None:
        return _coroot_index(self).get(tuple(coeffs))

    def __str__(self) -> str:
        return self.name


@lru_cache(maxsize=None)
def _coroot_index(rs: RootSystem) -> dict:
    return {h.coeffs: h for h in rs.coroots}


def _check_family_rank(family: str, rank: int):
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if rank < _MIN_RANK[family]:
        raise ValueError(f"{family}{rank}: rank must be >= {_MIN_RANK[family]}")


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix with entry [i][j] = <alpha_j, h_i> (Bourbaki numbering)."""
    _check_family_rank(family, rank)
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if rank >= 2:
        if family == "B":
            a[rank - 1][rank - 2] = -2  # short alpha_n against long alpha_{n-1}
        elif family == "C":
            a[rank - 2][rank - 1] = -2
        elif family == "D":
            a[rank - 1][rank - 2] = a[rank - 2][rank - 1] = 0
            a[rank - 1][rank - 3] = a[rank - 3][rank - 1] = -1
    return a


def _positive_roots_from_cartan(a: list[list[int]]) -> set[tuple[int, ...]]:
    """Positive roots as simple-root coefficient vectors, by string closure."""
    rank = len(a)
    roots = {tuple(1 if t == i else 0 for t in range(rank)) for i in range(rank)}
    frontier = set(roots)
    while frontier:
        new = set()
        for c in frontier:
            for i in range(rank):
                pair = sum(a[i][j] * c[j] for j in range(rank))
                down = 0
                probe = list(c)
                while True:
                    probe[i] -= 1
                    if probe[i] < 0 or tuple(probe) not in roots:
                        break
                    down += 1
                if down - pair > 0:
                    up = list(c)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        new.add(cand)
        roots |= new
        frontier = new
    return roots


def generated_positive_coroots(family: str, rank: int) -> set[tuple[int, ...]]:
    """Coroot coefficient vectors = positive roots of the dual system.

    The dual system's Cartan matrix is the transpose, so the closure runs
    on that.
    """
    a = cartan_matrix(family, rank)
    dual = [[a[j][i] for j in range(rank)] for i in range(rank)]
    return _positive_roots_from_cartan(dual)


def _ival(rank: int, i: int, j: int, two_from: int | None = None,
          extra: tuple[int, ...] = ()) -> tuple[int, ...]:
    """Ones on [i, j], optionally twos from two_from through j, plus extras."""
    v = [0] * rank
    for t in range(i, j + 1):
        v[t - 1] = 1
    if two_from is not None:
        for t in range(two_from, j + 1):
            v[t - 1] = 2
    for t in extra:
        v[t - 1] += 1
    return tuple(v)


def closed_form_coroot_table(family: str, rank: int) -> set[tuple[int, ...]]:
    """Literal interval/doubled-interval patterns, deduplicated as a set."""
    _check_family_rank(family, rank)
    n = rank
    table = {_ival(n, i, j) for i in range(1, n + 1) for j in range(i, n + 1)}
    if family == "C":
        # h_i+...+h_{j-1} + 2h_j+...+2h_n, strictly i < j
        table |= {_ival(n, i, n, two_from=j)
                  for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    elif family == "B":
        # h_i+...+h_{j-1} + 2h_j+...+2h_{n-1} + h_n, i <= j (j = n collapses
        # onto the plain interval, so the set union absorbs it)
        table |= {_ival(n, i, n - 1, two_from=j, extra=(n,))
                  for i in range(1, n + 1) for j in range(i, n + 1) if j <= n - 1}
        table |= {_ival(n, i, n) for i in range(1, n + 1)}  # the j = n rows
    elif family == "D":
        # h_i+...+h_{n-2} + h_n for i <= n-2
        table |= {_ival(n, i, n - 2, extra=(n,)) for i in range(1, n - 1)}
        # h_i+...+h_{j-1} + 2h_j+...+2h_{n-2} + h_{n-1} + h_n for i < j < n-1
        table |= {_ival(n, i, n - 2, two_from=j, extra=(n - 1, n))
                  for i in range(1, n - 1) for j in range(i + 1, n - 1)}
    return table


def coroot_table_report(family: str, rank: int) -> dict:
    """Set difference between the closed-form table and the generated list."""
    table = closed_form_coroot_table(family, rank)
    generated = generated_positive_coroots(family, rank)
    return {
        "family": family,
        "rank": rank,
        "extra_in_table": sorted(table - generated),
        "missing_from_table": sorted(generated - table),
    }


def expected_table_report(family: str, rank: int) -> dict:
    """The documented discrepancy: the D table carries one phantom entry.

    For D_n the interval h_{n-1} + h_n is listed by the closed form but the
    nodes n-1 and n are not adjacent, so it is not a coroot.  A/B/C tables
    agree with the generated sets exactly.
    """
    extra = []
    if family == "D":
        phantom = [0] * rank
        phantom[rank - 2] = phantom[rank - 1] = 1
        extra = [tuple(phantom)]
    return {
        "family": family,
        "rank": rank,
        "extra_in_table": extra,
        "missing_from_table": [],
    }


@lru_cache(maxsize=None)
def root_system(family: str, rank: int | None = None) -> RootSystem:
    """Build a root system, accepting root_system('C', 2) or root_system('C2')."""
    if rank is None:
        name = family.strip()
        if len(name) < 2 or name[0] not in FAMILIES or not name[1:].isdigit():
            raise ValueError(f"cannot parse root system {family!r}")
        family, rank = name[0], int(name[1:])
    _check_family_rank(family, rank)
    coeffs = sorted(generated_positive_coroots(family, rank),
                    key=lambda c: (sum(c), c))
    return RootSystem(family, rank, tuple(Coroot(c) for c in coeffs))


def positive_coroots(rs: RootSystem) -> tuple[Coroot, ...]:
    return rs.coroots


# -- embedding of the rank-n base lattice ---------------------------------

def base_rank(rs: RootSystem) -> int:
    """Rank of the base lattice embedded into rs (spin nodes excluded)."""
    if rs.family in ("A", "C"):
        return rs.rank
    if rs.family == "B":
        return rs.rank - 1
    return rs.rank - 2


@dataclass(frozen=True)
class EmbeddedWeight:
    """Weight of a root system, coordinates over all fundamental weights."""

    system: RootSystem
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.system.rank:
            raise ValueError("coordinate length disagrees with rank")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def iota(w: Weight, rs: RootSystem) -> EmbeddedWeight:
    """Embed a base-lattice weight, zero on the spin nodes."""
    if base_rank(rs) != w.rank:
        raise ValueError(
            f"rank-{w.rank} weight is not admissible for {rs.name} "
            f"(expected base rank {base_rank(rs)})")
    return EmbeddedWeight(rs, w.omega + (0,) * (rs.rank - w.rank))


def pairing(w: EmbeddedWeight, h: Coroot) -> int:
    """Evaluation w(h) = sum of coordinates against coroot coefficients."""
    if len(h.coeffs) != w.system.rank:
        raise ValueError("coroot does not belong to this system")
    return sum(c * k for c, k in zip(w.coords, h.coeffs))


def rho(rs: RootSystem) -> EmbeddedWeight:
    """Half-sum of positive roots: the all-ones weight."""
    return EmbeddedWeight(rs, (1,) * rs.rank)


def rho_value(h: Coroot) -> int:
    """rho(h) is simply the coefficient sum."""
    return sum(h.coeffs)
