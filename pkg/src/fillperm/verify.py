"""Validation of filling permutations and reconstruction of the glued surface.

A filling permutation on 4n symbols records, for every directed arc, which
side comes next when walking clockwise around each complementary polygon
of a two-curve system with n crossings.  ``validate`` reports every
structural condition separately so a failing certificate shows exactly
where it breaks; ``glue`` rebuilds the polygon decomposition with edge
pairing, vertex classes, Euler characteristic and puncture placement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arcs import ArcLabel, curve_advance, label_of, reversal_pairing
from .permutations import Permutation

__all__ = [
    "CheckResult",
    "FillingInstance",
    "GluedSurface",
    "ValidationReport",
    "check_filling_equation",
    "corner_rotation",
    "faces_as_words",
    "glue",
    "validate",
    "vertex_classes",
]


@dataclass(frozen=True)
class FillingInstance:
    """A candidate certificate: permutation plus claimed genus and punctures."""

    sigma: Permutation
    genus: int
    punctures: int

    def __post_init__(self) -> None:
        if self.sigma.degree % 4:
            raise ValueError(f"degree {self.sigma.degree} is not a multiple of 4")
        if self.genus < 0 or self.punctures < 0:
            raise ValueError("genus and punctures must be non-negative")

    @property
    def n(self) -> int:
        """Crossing count encoded by the degree."""
        return self.sigma.degree // 4


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        suffix = f" ({self.detail})" if self.detail else ""
        return f"{self.name}: {tag}{suffix}"


@dataclass(frozen=True)
class ValidationReport:
    n: int
    checks: tuple[CheckResult, ...]

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def lines(self) -> list[str]:
        out = [f"n={self.n}"]
        out.extend(c.line() for c in self.checks)
        out.append(f"result: {'VALID' if self.valid else 'INVALID'}")
        return out


def _require_quarter_degree(sigma: Permutation) -> int:
    if sigma.degree % 4:
        raise ValueError(f"degree {sigma.degree} is not a multiple of 4")
    return sigma.degree // 4


def check_filling_equation(sigma: Permutation) -> bool:
    """Whether side, reversal, side again advances each arc along its curve."""
    n = _require_quarter_degree(sigma)
    rev = reversal_pairing(n)
    adv = curve_advance(n)
    return sigma.compose(rev.compose(sigma)) == adv


def corner_rotation(sigma: Permutation) -> Permutation:
    """Map each polygon corner to the next corner around the same point.

    The corner after side j goes to the corner after the reversal of the
    side following j.  Orbits are the vertex classes of the glued
    surface; for a genuine filling permutation every orbit is a 4-cycle.
    """
    n = _require_quarter_degree(sigma)
    return reversal_pairing(n).compose(sigma)


def vertex_classes(sigma: Permutation) -> tuple[tuple[int, ...], ...]:
    """Orbits of the corner rotation, each starting at its smallest member."""
    rot = corner_rotation(sigma)
    seen = [False] * sigma.degree
    classes: list[tuple[int, ...]] = []
    for j in range(1, sigma.degree + 1):
        if seen[j - 1]:
            continue
        orbit = [j]
        seen[j - 1] = True
        k = rot(j)
        while k != j:
            orbit.append(k)
            seen[k - 1] = True
            k = rot(k)
        classes.append(tuple(orbit))
    return tuple(classes)


def _face_components(sigma: Permutation, rev: Permutation) -> int:
    """Connected components of the face-adjacency graph under edge gluing."""
    cycles = sigma.to_cycles().cycles
    face_of = {}
    for i, cycle in enumerate(cycles):
        for s in cycle:
            face_of[s] = i
    parent = list(range(len(cycles)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(1, sigma.degree + 1):
        a, b = find(face_of[j]), find(face_of[rev(j)])
        if a != b:
            parent[a] = b
    return len({find(i) for i in range(len(cycles))})


def validate(instance: FillingInstance) -> ValidationReport:
    """Run all nine structural checks; nothing raises, failures are reported."""
    sigma = instance.sigma
    g, p = instance.genus, instance.punctures
    n = instance.n
    degree = sigma.degree
    rev = reversal_pairing(n)
    adv = curve_advance(n)
    checks: list[CheckResult] = []

    checks.append(CheckResult("degree-divisible-by-4", True, f"degree {degree} = 4*{n}"))

    offender = next((j for j in range(1, degree + 1) if (j + sigma(j)) % 2 == 0), None)
    checks.append(
        CheckResult(
            "parity-reversing",
            offender is None,
            "" if offender is None else f"symbol {offender} maps to {sigma(offender)} of the same parity",
        )
    )

    bad = next((j for j in range(1, degree + 1) if sigma(rev(sigma(j))) != adv(j)), None)
    checks.append(
        CheckResult(
            "filling-equation",
            bad is None,
            ""
            if bad is None
            else f"at symbol {bad}: side-reversal-side gives {sigma(rev(sigma(bad)))}, curve advance gives {adv(bad)}",
        )
    )

    faces = sigma.cycle_count()
    expected_faces = n + 2 - 2 * g
    if faces == expected_faces:
        face_detail = f"{faces} faces force genus {g}"
    else:
        face_detail = f"{faces} cycles, expected n+2-2g = {expected_faces}"
    checks.append(CheckResult("cycle-count", faces == expected_faces, face_detail))

    bigons = sigma.two_cycle_count()
    checks.append(
        CheckResult(
            "two-cycle-bound",
            bigons <= p,
            "" if bigons <= p else f"{bigons} bigon faces but only {p} punctures",
        )
    )

    checks.append(
        CheckResult(
            "puncture-feasibility",
            p <= expected_faces,
            "" if p <= expected_faces else f"p = {p} exceeds n+2-2g = {expected_faces}",
        )
    )

    classes = vertex_classes(sigma)
    bad_orbit = next((c for c in classes if len(c) != 4), None)
    if bad_orbit is not None:
        vertex_detail = f"orbit of {bad_orbit[0]} has size {len(bad_orbit)}, expected 4"
    elif len(classes) != n:
        vertex_detail = f"{len(classes)} vertex classes, expected n = {n}"
    else:
        vertex_detail = ""
    checks.append(CheckResult("vertex-classes", vertex_detail == "", vertex_detail))

    chi = len(classes) - 2 * n + faces
    checks.append(
        CheckResult(
            "euler-characteristic",
            chi == 2 - 2 * g,
            "" if chi == 2 - 2 * g else f"V-E+F = {chi}, expected 2-2g = {2 - 2 * g}",
        )
    )

    components = _face_components(sigma, rev)
    checks.append(
        CheckResult(
            "connectivity",
            components == 1,
            "" if components == 1 else f"{components} components after gluing",
        )
    )

    return ValidationReport(n, tuple(checks))


def faces_as_words(sigma: Permutation) -> tuple[tuple[ArcLabel, ...], ...]:
    """One boundary word per polygon, faces in canonical cycle order."""
    n = _require_quarter_degree(sigma)
    return tuple(tuple(label_of(s, n) for s in cycle) for cycle in sigma.to_cycles().cycles)


@dataclass(frozen=True)
class GluedSurface:
    """The polygon decomposition cut out by a filling permutation."""

    n: int
    face_cycles: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[ArcLabel, ...], ...]
    edge_pairing: tuple[tuple[int, int], ...]
    vertex_classes: tuple[tuple[int, ...], ...]
    euler_characteristic: int
    genus: int
    puncture_assignment: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_classes)

    @property
    def edge_count(self) -> int:
        return 2 * self.n

    @property
    def face_count(self) -> int:
        return len(self.face_cycles)

    def lines(self) -> list[str]:
        """Face words, one per line; a trailing ``*`` marks a puncture."""
        out = []
        for k, (word, punctured) in enumerate(zip(self.faces, self.puncture_assignment), start=1):
            line = f"F{k}: " + " ".join(str(lab) for lab in word)
            if punctured:
                line += " *"
            out.append(line)
        return out


def glue(sigma: Permutation, punctures: int) -> GluedSurface:
    """Rebuild the closed-up surface and place punctures deterministically.

    Every bigon face must hold a puncture; remaining punctures go to the
    other faces in ascending canonical cycle order, at most one each.
    """
    if punctures < 0:
        raise ValueError("punctures must be non-negative")
    n = _require_quarter_degree(sigma)
    if not sigma.is_parity_reversing() or not check_filling_equation(sigma):
        raise ValueError("gluing needs a parity-reversing permutation satisfying the filling equation")

    face_cycles = sigma.to_cycles().cycles
    words = tuple(tuple(label_of(s, n) for s in cycle) for cycle in face_cycles)
    classes = vertex_classes(sigma)
    if any(len(c) != 4 for c in classes):
        raise RuntimeError("internal inconsistency: a corner orbit is not a 4-cycle")

    chi = len(classes) - 2 * n + len(face_cycles)
    if (2 - chi) % 2:
        raise RuntimeError("internal inconsistency: odd Euler characteristic defect")
    genus = (2 - chi) // 2

    bigons = [i for i, c in enumerate(face_cycles) if len(c) == 2]
    if punctures < len(bigons):
        raise ValueError(f"{len(bigons)} bigon faces must all be punctured but p = {punctures}")
    if punctures > len(face_cycles):
        raise ValueError(f"p = {punctures} exceeds the {len(face_cycles)} available faces")
    assignment = [0] * len(face_cycles)
    for i in bigons:
        assignment[i] = 1
    remaining = punctures - len(bigons)
    for i in range(len(face_cycles)):
        if remaining == 0:
            break
        if assignment[i] == 0:
            assignment[i] = 1
            remaining -= 1

    rev = reversal_pairing(n)
    pairing = tuple((j, rev(j)) for j in range(1, 2 * n + 1))
    return GluedSurface(
        n=n,
        face_cycles=face_cycles,
        faces=words,
        edge_pairing=pairing,
        vertex_classes=classes,
        euler_characteristic=chi,
        genus=genus,
        puncture_assignment=tuple(assignment),
    )
