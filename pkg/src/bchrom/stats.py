"""Colourings and their exact statistics: p.m.f., mean, variance.

Every quantity is an exact rational (fractions.Fraction); nothing here ever
touches floating point, so equality checks against closed forms are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph


class ColouringMismatchError(ValueError):
    """Colouring does not cover exactly the vertex set of the graph."""


@dataclass(frozen=True)
class Colouring:
    """Total assignment of colours 1..k to vertices 1..n.

    colours[i] is the colour of vertex i+1.  Declared colour count k may
    exceed the number of colours actually used; surjectivity is checked by
    validators, not by the type.
    """

    k: int
    colours: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"colour count must be >= 1, got {self.k}")
        for i, c in enumerate(self.colours):
            if not (1 <= c <= self.k):
                raise ValueError(f"vertex {i + 1} has colour {c} outside 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.colours)

    def colour_of(self, v: int) -> int:
        return self.colours[v - 1]

    def strengths(self) -> tuple[int, ...]:
        """Class cardinalities theta(c_1)..theta(c_k)."""
        out = [0] * self.k
        for c in self.colours:
            out[c - 1] += 1
        return tuple(out)

    def colour_class(self, colour: int) -> frozenset[int]:
        if not (1 <= colour <= self.k):
            raise ValueError(f"colour {colour} outside 1..{self.k}")
        return frozenset(v for v in range(1, self.n + 1) if self.colours[v - 1] == colour)

    def reversed_labels(self) -> "Colouring":
        """Replace each colour i by k+1-i (mirror of the labelling)."""
        return Colouring(self.k, tuple(self.k + 1 - c for c in self.colours))

    def relabelled(self, perm: dict[int, int]) -> "Colouring":
        """Apply a colour permutation {old: new}."""
        return Colouring(self.k, tuple(perm[c] for c in self.colours))


@dataclass(frozen=True)
class ColourDistribution:
    """Strength vector and the induced p.m.f. f(i) = theta(c_i) / n."""

    k: int
    n: int
    strengths: tuple[int, ...]
    pmf: tuple[Fraction, ...]

    def __post_init__(self):
        if sum(self.strengths) != self.n:
            raise ValueError("strengths must sum to the vertex count")
        if any(f != Fraction(t, self.n) for t, f in zip(self.strengths, self.pmf)):
            raise ValueError("pmf inconsistent with strengths")


@dataclass(frozen=True)
class ChromaStats:
    """Exact mean and variance of the colour index of a random vertex."""

    mean: Fraction
    variance: Fraction

    def as_pair(self) -> tuple[Fraction, Fraction]:
        return (self.mean, self.variance)


def _check_cover(g: Graph, c: Colouring) -> None:
    if c.n != g.n:
        raise ColouringMismatchError(f"colouring covers {c.n} vertices, graph has {g.n}")


def is_proper(g: Graph, c: Colouring) -> bool:
    """True iff no edge of g is monochromatic under c."""
    _check_cover(g, c)
    return all(c.colours[u - 1] != c.colours[v - 1] for u, v in g.edges)


def b_vertices(g: Graph, c: Colouring, colour: int) -> frozenset[int]:
    """Vertices of the given class whose neighbourhood meets every other class.

    Diagnostic decomposition of the b-colouring condition: a class is
    b-valid iff this set is non-empty (vacuously so when k = 1).
    """
    _check_cover(g, c)
    if not (1 <= colour <= c.k):
        raise ValueError(f"colour {colour} outside 1..{c.k}")
    others = set(range(1, c.k + 1)) - {colour}
    found = []
    for v in range(1, g.n + 1):
        if c.colours[v - 1] != colour:
            continue
        seen = {c.colours[w - 1] for w in g.adjacency[v]}
        if others <= seen:
            found.append(v)
    return frozenset(found)


def is_b_colouring(g: Graph, c: Colouring) -> bool:
    """Proper, uses every colour 1..k, and every class contains a b-vertex."""
    _check_cover(g, c)
    if not is_proper(g, c):
        return False
    strengths = c.strengths()
    if any(t == 0 for t in strengths):
        return False
    return all(b_vertices(g, c, colour) for colour in range(1, c.k + 1))


def distribution(g: Graph, c: Colouring) -> ColourDistribution:
    """Exact p.m.f. induced by class sizes.  Defined for any assignment,
    proper or not; validity is checked separately so callers can compose."""
    _check_cover(g, c)
    strengths = c.strengths()
    pmf = tuple(Fraction(t, g.n) for t in strengths)
    return ColourDistribution(c.k, g.n, strengths, pmf)


def mean(d: ColourDistribution) -> Fraction:
    """Sum of i * f(i) over colours, exact."""
    return sum((i * f for i, f in enumerate(d.pmf, start=1)), Fraction(0))


def variance(d: ColourDistribution) -> Fraction:
    """Sum of i^2 * f(i) minus the squared mean, exact."""
    m1 = mean(d)
    m2 = sum((i * i * f for i, f in enumerate(d.pmf, start=1)), Fraction(0))
    return m2 - m1 * m1


def stats_from_strengths(strengths) -> ChromaStats:
    """Mean/variance of the colour index when class i has the given size."""
    n = sum(strengths)
    if n == 0:
        raise ValueError("empty strength vector")
    m1 = sum(i * t for i, t in enumerate(strengths, start=1))
    m2 = sum(i * i * t for i, t in enumerate(strengths, start=1))
    mean_ = Fraction(m1, n)
    return ChromaStats(mean_, Fraction(m2, n) - mean_ * mean_)


def colouring_stats(g: Graph, c: Colouring) -> ChromaStats:
    """Mean/variance of a colouring of g (any assignment)."""
    d = distribution(g, c)
    return ChromaStats(mean(d), variance(d))
