"""Closed-form minimal crossing numbers, cross-checked against search."""

from __future__ import annotations

from dataclasses import dataclass

from .search import SearchQuery, enumerate_solutions

__all__ = [
    "CrossValidation",
    "CrossValidationError",
    "MinIntersectionQuery",
    "NoFillingPairError",
    "cross_validate",
    "min_intersection",
]


class NoFillingPairError(Exception):
    """The surface carries no filling pair at all (sphere with p <= 3)."""


class CrossValidationError(Exception):
    """The search-determined minimum disagrees with the closed form."""


@dataclass(frozen=True)
class MinIntersectionQuery:
    genus: int
    punctures: int

    def __post_init__(self) -> None:
        if self.genus < 0 or self.punctures < 0:
            raise ValueError("genus and punctures must be non-negative")

    @property
    def defined(self) -> bool:
        """Whether any filling pair exists on this surface."""
        return not (self.genus == 0 and self.punctures <= 3)

    def value(self) -> int:
        return min_intersection(self.genus, self.punctures)


def min_intersection(genus: int, punctures: int) -> int:
    """Minimal crossing count of a filling pair on the given surface.

    Raises :class:`NoFillingPairError` on the sphere with at most three
    punctures, where no two curves can fill.
    """
    if genus < 0 or punctures < 0:
        raise ValueError("genus and punctures must be non-negative")
    if genus == 0:
        if punctures <= 3:
            raise NoFillingPairError(
                f"no filling pair exists on the sphere with {punctures} punctures"
            )
        return punctures - 2 if punctures % 2 == 0 else punctures - 1
    if genus == 2:
        low, general = 4, 2 * genus + punctures - 2
        if punctures == 2 and low != general:
            raise AssertionError("overlapping branches disagree at genus 2, two punctures")
        return low if punctures <= 2 else general
    return 2 * genus - 1 if punctures == 0 else 2 * genus + punctures - 2


@dataclass(frozen=True)
class CrossValidation:
    genus: int
    punctures: int
    n_max: int
    counts: tuple[tuple[int, int], ...]
    smallest_nonempty: int | None
    expected: int | None

    def lines(self) -> list[str]:
        out = [f"genus={self.genus} punctures={self.punctures}"]
        out.extend(f"n={n}: {count} solutions" for n, count in self.counts)
        out.append(f"smallest_nonempty={self.smallest_nonempty}")
        out.append(f"closed_form={self.expected}")
        return out


def cross_validate(
    genus: int,
    punctures: int,
    n_max: int,
    max_nodes: int = 10**9,
    max_seconds: float = 600.0,
) -> CrossValidation:
    """Probe search emptiness for every n up to ``n_max`` against the table.

    Raises :class:`CrossValidationError` when the search finds a smallest
    nonempty n that contradicts the closed form (or finds any solution on
    a surface where no filling pair should exist).
    """
    counts: list[tuple[int, int]] = []
    smallest: int | None = None
    for n in range(1, n_max + 1):
        result = enumerate_solutions(
            SearchQuery(genus, punctures, n, max_nodes=max_nodes, max_seconds=max_seconds)
        )
        counts.append((n, result.raw_count))
        if result.raw_count and smallest is None:
            smallest = n
    try:
        expected: int | None = min_intersection(genus, punctures)
    except NoFillingPairError:
        expected = None

    if expected is None:
        if smallest is not None:
            raise CrossValidationError(
                f"found a filling pair at n = {smallest} on a surface that admits none"
            )
    elif expected <= n_max:
        if smallest != expected:
            raise CrossValidationError(
                f"search minimum {smallest} != closed form {expected} "
                f"for genus {genus}, punctures {punctures}"
            )
    elif smallest is not None:
        raise CrossValidationError(
            f"solution at n = {smallest} sits below the closed form {expected}"
        )
    return CrossValidation(genus, punctures, n_max, tuple(counts), smallest, expected)
