"""Degree sequences: graphicality, 2-tree realizability, and the parameters
of 2-trees whose degree sequence is (D^r, 3^x, 2^y).

A 2-tree on n vertices is r-central when exactly r vertices attain the
maximum degree D, and has tail degrees in {2, 3} when every other vertex has
degree 2 or 3.  Writing x for the number of degree-3 vertices and y for the
number of degree-2 vertices, the handshake identity r*D + 3x + 2y = 4n - 6
together with r + x + y = n pins x and y as closed forms in (n, r, D).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class DegreeSequence:
    """A degree sequence stored in nonincreasing order."""

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degs = tuple(self.degrees)
        for d in degs:
            if not isinstance(d, int) or d < 0:
                raise ValueError(f"degrees must be nonnegative integers, got {d!r}")
        object.__setattr__(self, "degrees", tuple(sorted(degs, reverse=True)))

    @classmethod
    def of(cls, degrees: Iterable[int]) -> "DegreeSequence":
        return cls(tuple(degrees))

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse comma- or whitespace-separated degrees, e.g. "6,6,3,3,2,2"."""
        parts = text.replace(",", " ").split()
        if not parts:
            raise ValueError("empty degree sequence")
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise ValueError(f"bad degree sequence {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, i: int) -> int:
        return self.degrees[i]

    def total(self) -> int:
        return sum(self.degrees)


def erdos_gallai_graphic(d: DegreeSequence) -> bool:
    """True when d is realizable by a simple graph (Erdos-Gallai).

    Checks the even-sum condition and, for every k in 1..n, the inequality
    sum of the k largest degrees <= k(k-1) + sum over the rest of min(d_i, k).
    """
    degs = d.degrees
    n = len(degs)
    if n == 0:
        return True
    if degs[0] >= n:
        return False
    if sum(degs) % 2 != 0:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += degs[k - 1]
        tail = sum(min(degs[i], k) for i in range(k, n))
        if prefix > k * (k - 1) + tail:
            return False
    return True


def bose_two_tree_sequence(d: DegreeSequence) -> bool:
    """True when d is the degree sequence of some 2-tree on n = len(d) >= 3
    vertices.

    The test is a closed-form characterization: with D sorted nonincreasing,
      (0) every entry is at least 2,
      (1) the entries sum to 4n - 6,
      (2) the maximum entry is at most n - 1,
      (3) at least two entries equal 2,
      (4) D is not of the form (d, d, d, d, 2, ..., 2) with d >= 5,
      (5) if every entry is even, the number of entries equal to 2 is at
          least n/3 + 1 (tested exactly as 3 * n2 >= n + 3).
    """
    degs = d.degrees
    n = len(degs)
    if n < 3:
        raise ValueError("2-trees need at least 3 vertices")
    if degs[-1] < 2:
        return False
    if sum(degs) != 4 * n - 6:
        return False
    if degs[0] > n - 1:
        return False
    n2 = sum(1 for x in degs if x == 2)
    if n2 < 2:
        return False
    if (
        n >= 4
        and degs[0] == degs[3] >= 5
        and all(x == 2 for x in degs[4:])
    ):
        return False
    if all(x % 2 == 0 for x in degs) and 3 * n2 < n + 3:
        return False
    return True


@dataclass(frozen=True)
class CentralProfile:
    """Tail parameters of an r-central 2-tree candidate: x vertices of degree
    3 and y of degree 2 outside the r-vertex core of degree delta."""

    n: int
    r: int
    delta: int
    x: int
    y: int
    feasible: bool

    def degree_sequence(self) -> DegreeSequence:
        if not self.feasible:
            raise ValueError(
                f"no (n={self.n}, r={self.r}, delta={self.delta}) graph exists"
            )
        return DegreeSequence((self.delta,) * self.r + (3,) * self.x + (2,) * self.y)


def tail_params(n: int, r: int, delta: int) -> CentralProfile:
    """Solve for (x, y) at the given core size and degree, with feasibility.

    x = 2n + 2r - 6 - r*delta and y = r*delta - n - 3r + 6 always satisfy
    r + x + y = n and r*delta + 3x + 2y = 4n - 6; the profile is feasible
    when some strong r-central 2-tree with these parameters can exist.
    """
    if r not in (1, 2, 3):
        raise ValueError(f"core size r must be 1, 2 or 3, got {r}")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    x = 2 * n + 2 * r - 6 - r * delta
    y = r * delta - n - 3 * r + 6
    return CentralProfile(n, r, delta, x, y, _feasible(n, r, delta, x, y))


def _feasible(n: int, r: int, delta: int, x: int, y: int) -> bool:
    # two degenerate shapes sit outside the general rules: the triangle is
    # the unique all-core graph, and the diamond has a single top vertex
    # under the convention that ties within degree 3 still leave it 1-central
    if (n, r, delta) == (3, 3, 2):
        return True
    if (n, r, delta) == (4, 1, 3):
        return True
    if delta < 2 or delta > n - 1:
        return False
    if x < 0 or y < 2:
        return False
    # a tail vertex may never tie the core degree
    if delta == 3 and x > 0:
        return False
    if delta == 2 and y > 0:
        return False
    return True


def delta_range(n: int, r: int) -> range:
    """All feasible core degrees for (n, r), as a range.

    The feasible set is an interval: r=1 forces delta = n-1, r=2 gives
    ceil((n+2)/2)..n-1, r=3 gives ceil((n+5)/3)..floor(2n/3), plus the
    lone degenerate point delta=2 at n=3, r=3.
    """
    if r not in (1, 2, 3):
        raise ValueError(f"core size r must be 1, 2 or 3, got {r}")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    feas = [delta for delta in range(2, n) if tail_params(n, r, delta).feasible]
    if not feas:
        return range(0)
    lo, hi = feas[0], feas[-1]
    if feas != list(range(lo, hi + 1)):
        raise AssertionError("feasible core degrees are not an interval")
    return range(lo, hi + 1)


def central_sequence(n: int, r: int, delta: int) -> DegreeSequence:
    """The degree sequence (delta^r, 3^x, 2^y); raises when infeasible."""
    return tail_params(n, r, delta).degree_sequence()


def divisibility_check(profile: CentralProfile) -> bool:
    """Parity and residue facts forced by the closed forms: x is even when
    r = 2, and x + 2y is divisible by 3 when r = 3."""
    if profile.r == 2:
        return profile.x % 2 == 0
    if profile.r == 3:
        return (profile.x + 2 * profile.y) % 3 == 0
    return True
