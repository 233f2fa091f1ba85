"""Stable sets of cycles and the vertex geometry behind the alternating
constant.

The feasible region of the one-loop cycle system, scaled to magic sum 1,
is affinely the fractional stable-set polytope of the n-cycle.  Its
vertices split into one integral vertex per stable set (ring coordinate
1 on the set, loop coordinate 1 exactly on the edges the set misses
entirely) and, for odd n only, the all-halves fractional vertex.  The
fractional vertex together with the vertices of the maximum stable sets
spans a simplex whose lattice-point series 1 / ((1-t)^n (1-t^2)) carries
the entire pole at t = -1.

Everything here is exact: vertices are tuples of ints and Fractions,
independence is a rational rank computation, and the series expansion is
an exact quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .matrices import rational_rank
from .poly import Coeff, Poly, coeff_to_str, series_quotient


class EvenN(ValueError):
    """Operation is defined for odd cycle lengths only."""


def stable_sets(n: int) -> list[tuple[int, ...]]:
    """All stable sets of the n-cycle, as sorted vertex tuples.

    Includes the empty set.  Vertices are 0-based and adjacency wraps,
    so i and (i+1) mod n can never both appear.
    """
    if n < 3:
        raise ValueError("cycle stable sets need n >= 3")
    found = []
    for mask in range(1 << n):
        if any(mask >> i & 1 and mask >> ((i + 1) % n) & 1 for i in range(n)):
            continue
        found.append(tuple(i for i in range(n) if mask >> i & 1))
    found.sort(key=lambda s: (len(s), s))
    return found


def stable_set_sizes(n: int) -> dict[int, int]:
    """Number of stable sets of each size, by enumeration."""
    sizes: dict[int, int] = {}
    for s in stable_sets(n):
        sizes[len(s)] = sizes.get(len(s), 0) + 1
    return sizes


def kaplansky_count(n: int, k: int) -> int:
    """Closed-form number of size-k stable sets of the n-cycle."""
    if k == 0:
        return 1
    if k > n // 2:
        return 0
    assert (n * comb(n - k, k)) % (n - k) == 0
    return n * comb(n - k, k) // (n - k)


def max_stable_count(n: int) -> int:
    """Number of maximum stable sets, counted by enumeration."""
    sizes = stable_set_sizes(n)
    return sizes[max(sizes)]


@dataclass(frozen=True)
class Vertex:
    """A vertex of the scaled one-loop cycle polytope.

    ``alpha`` holds the loop coordinates, ``beta`` the ring coordinates;
    ``support`` is the defining stable set for integral vertices and None
    for the fractional vertex.
    """

    alpha: tuple[Coeff, ...]
    beta: tuple[Coeff, ...]
    support: Optional[tuple[int, ...]]

    @property
    def is_fractional(self) -> bool:
        return self.support is None

    def coordinates(self) -> tuple[Coeff, ...]:
        return self.alpha + self.beta

    def beta_total(self) -> Fraction:
        return sum(map(Fraction, self.beta), Fraction(0))

    def check(self) -> None:
        """Defining equalities and nonnegativity, exactly."""
        n = len(self.beta)
        for i in range(n):
            if self.beta[i] + self.alpha[i] + self.beta[(i + 1) % n] != 1:
                raise AssertionError(f"vertex violates ring equation at {i}")
        if any(c < 0 for c in self.coordinates()):
            raise AssertionError("vertex has a negative coordinate")

    def to_json_obj(self) -> dict[str, object]:
        return {
            "alpha": [coeff_to_str(c) for c in self.alpha],
            "beta": [coeff_to_str(c) for c in self.beta],
            "stable_set": None if self.support is None else list(self.support),
        }


def vertex_for_stable_set(n: int, support: tuple[int, ...]) -> Vertex:
    members = set(support)
    beta = tuple(1 if i in members else 0 for i in range(n))
    alpha = tuple(
        0 if (i in members or (i + 1) % n in members) else 1 for i in range(n)
    )
    return Vertex(alpha=alpha, beta=beta, support=tuple(sorted(support)))


def fractional_vertex(n: int) -> Vertex:
    if n % 2 == 0:
        raise EvenN("even cycles have no fractional vertex")
    half = Fraction(1, 2)
    return Vertex(alpha=(0,) * n, beta=(half,) * n, support=None)


def vertices(n: int) -> list[Vertex]:
    """All vertices: one per stable set, plus the fractional one when n is odd."""
    out = [vertex_for_stable_set(n, s) for s in stable_sets(n)]
    if n % 2 == 1:
        out.append(fractional_vertex(n))
    for v in out:
        v.check()
    return out


def hyperplane_vertices(n: int) -> list[Vertex]:
    """Integral vertices on the slice where the ring coordinates sum to (n-1)/2.

    For odd n these are exactly the vertices of the maximum stable sets;
    the fractional vertex sits strictly above the slice and every other
    integral vertex strictly below.
    """
    if n % 2 == 0:
        raise EvenN("the slice construction needs odd n")
    level = Fraction(n - 1, 2)
    return [v for v in vertices(n) if not v.is_fractional and v.beta_total() == level]


def simplex_vertices(n: int) -> list[Vertex]:
    """The n+1 affinely independent points spanning the singular simplex."""
    return hyperplane_vertices(n) + [fractional_vertex(n)]


def affinely_independent(points: list[Vertex]) -> bool:
    """Exact rank test on homogenized coordinates."""
    rows = [list(v.coordinates()) + [1] for v in points]
    return rational_rank(rows) == len(points)


def simplex_series(n: int, order: int) -> list[Fraction]:
    """Lattice-point series of the singular simplex: 1 / ((1-t)^n (1-t^2))."""
    if n % 2 == 0:
        raise EvenN("the singular simplex exists for odd n only")
    denominator = Poly((1, -1)) ** n * Poly((1, 0, -1))
    return series_quotient(Poly((1,)), denominator, order)
