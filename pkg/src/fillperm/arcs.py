"""Labeled oriented arcs of a two-curve filling system.

A pair of closed curves crossing n times cuts each curve into n arcs.
Every arc carries both orientations, giving 4n directed arcs numbered
1..4n: symbol 2i-1 is the i-th arc of the first curve ("alpha"), symbol
2i the i-th arc of the second ("beta"), and adding 2n reverses the
orientation.  Text form is ``a3``, ``b2``; an apostrophe marks the
reversed copy, as in ``a5'``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .permutations import CycleDecomposition, Permutation

__all__ = [
    "ALPHA",
    "BETA",
    "ArcLabel",
    "LabelScheme",
    "curve_advance",
    "index_of",
    "label_of",
    "parse_label",
    "reversal_pairing",
]

ALPHA = "alpha"
BETA = "beta"

_LABEL = re.compile(r"([ab])(\d+)(')?\Z")


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError("crossing count n must be at least 1")


@dataclass(frozen=True)
class ArcLabel:
    """One directed arc: which curve, which arc index, which orientation."""

    curve: str
    index: int
    inverted: bool = False

    def __post_init__(self) -> None:
        if self.curve not in (ALPHA, BETA):
            raise ValueError(f"curve must be {ALPHA!r} or {BETA!r}, got {self.curve!r}")
        if self.index < 1:
            raise ValueError("arc index starts at 1")

    def flipped(self) -> ArcLabel:
        return ArcLabel(self.curve, self.index, not self.inverted)

    def __str__(self) -> str:
        mark = "'" if self.inverted else ""
        return f"{self.curve[0]}{self.index}{mark}"


def parse_label(token: str) -> ArcLabel:
    """Inverse of ``str(label)``: accepts ``a3``, ``b12``, ``a5'``."""
    m = _LABEL.match(token)
    if m is None:
        raise ValueError(f"bad arc label {token!r}")
    curve = ALPHA if m.group(1) == "a" else BETA
    return ArcLabel(curve, int(m.group(2)), m.group(3) is not None)


def label_of(j: int, n: int) -> ArcLabel:
    """Label of directed-arc symbol ``j`` in a system with ``n`` crossings.

    >>> str(label_of(19, 5))
    "a5'"
    >>> str(label_of(6, 5))
    'b3'
    """
    _check_n(n)
    if not 1 <= j <= 4 * n:
        raise ValueError(f"symbol {j} outside 1..{4 * n}")
    inverted = j > 2 * n
    base = j - 2 * n if inverted else j
    if base % 2:
        return ArcLabel(ALPHA, (base + 1) // 2, inverted)
    return ArcLabel(BETA, base // 2, inverted)


def index_of(label: ArcLabel, n: int) -> int:
    """Symbol of ``label``; inverse of :func:`label_of`."""
    _check_n(n)
    if label.index > n:
        raise ValueError(f"arc index {label.index} exceeds n = {n}")
    base = 2 * label.index - 1 if label.curve == ALPHA else 2 * label.index
    return base + 2 * n if label.inverted else base


@dataclass(frozen=True)
class LabelScheme:
    """The symbol/arc bijection for a fixed crossing count."""

    n: int

    def __post_init__(self) -> None:
        _check_n(self.n)

    def label_of(self, j: int) -> ArcLabel:
        return label_of(j, self.n)

    def index_of(self, label: ArcLabel) -> int:
        return index_of(label, self.n)

    def labels(self) -> tuple[ArcLabel, ...]:
        return tuple(label_of(j, self.n) for j in range(1, 4 * self.n + 1))


def reversal_pairing(n: int) -> Permutation:
    """The involution matching each directed arc with its reversal.

    Shifts every symbol by 2n modulo 4n; with n = 1 this is (1,3)(2,4).
    """
    _check_n(n)
    m = 4 * n
    return Permutation(((j + 2 * n - 1) % m) + 1 for j in range(1, m + 1))


def curve_advance(n: int) -> Permutation:
    """Send each directed arc to the next arc along its own curve.

    Forward arcs advance with the curve orientation, reversed arcs
    against it, so the permutation splits into four cycles of length n
    (all fixed points when n = 1).
    """
    _check_n(n)
    cycles = (
        tuple(range(1, 2 * n, 2)),
        tuple(range(2, 2 * n + 1, 2)),
        tuple(range(4 * n - 1, 2 * n, -2)),
        tuple(range(4 * n, 2 * n + 1, -2)),
    )
    return Permutation.from_cycles(CycleDecomposition(4 * n, cycles))
