"""Double-bigon surgery: trade one crossing for three.

The move acts at one vertex of the glued surface.  The second curve is
rerouted so that it crosses the first curve three times where it used to
cross once; between consecutive new crossings sit two bigons, and each
receives a puncture.  Parameters move as (genus, p, n) -> (genus, p+2,
n+2).  The rewrite is purely local: the four corners at the chosen
vertex are spliced, two bigon faces appear, and both curves are
renumbered by walking them from their original first arcs.  The output
is re-validated rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .permutations import Permutation
from .verify import FillingInstance, validate, vertex_classes

__all__ = ["SurgerySite", "available_sites", "double_bigon", "extend_to"]


@dataclass(frozen=True)
class SurgerySite:
    """A vertex class, identified by its smallest corner symbol."""

    vertex_class: int


def available_sites(instance: FillingInstance) -> tuple[SurgerySite, ...]:
    return tuple(SurgerySite(c[0]) for c in vertex_classes(instance.sigma))


def double_bigon(instance: FillingInstance, site: SurgerySite) -> FillingInstance:
    """Apply the move at ``site`` and return the enlarged certificate.

    Raises ValueError for an invalid input instance or a site that names
    no vertex class; raises RuntimeError if the rewritten permutation
    fails validation, which would indicate an internal bug.
    """
    report = validate(instance)
    if not report.valid:
        failing = ", ".join(c.name for c in report.failures())
        raise ValueError(f"surgery needs a valid instance; failing checks: {failing}")
    sigma = instance.sigma
    n = instance.n
    half = 2 * n

    orbit = next((c for c in vertex_classes(sigma) if c[0] == site.vertex_class), None)
    if orbit is None:
        raise ValueError(f"no vertex class is labeled {site.vertex_class}")

    # The four corners at the vertex: each curve arrives along a forward
    # arc and departs along one whose reversal also ends here.
    a_in = next(s for s in orbit if s % 2 == 1 and s <= half)
    b_in = next(s for s in orbit if s % 2 == 0 and s <= half)
    a_out = next(s for s in orbit if s % 2 == 1 and s > half) - half
    b_out = next(s for s in orbit if s % 2 == 0 and s > half) - half

    # Crossing handedness: after the incoming second-curve side comes
    # either the outgoing first-curve arc or the reversed incoming one.
    after_b = sigma(b_in)
    if after_b == a_out:
        right_handed = True
    elif after_b == a_in + half:
        right_handed = False
    else:
        raise RuntimeError("internal inconsistency: corner orbit does not close up")

    m = n + 2
    ai, bi = (a_in + 1) // 2, b_in // 2

    def remap(s: int) -> int:
        # Old symbol -> new symbol; the two fresh arcs per curve slot in
        # right after the arcs arriving at the chosen vertex.
        inverted = s > half
        base = s - half if inverted else s
        if base % 2:
            idx = (base + 1) // 2
            idx = idx if idx <= ai else idx + 2
            out = 2 * idx - 1
        else:
            idx = base // 2
            idx = idx if idx <= bi else idx + 2
            out = 2 * idx
        return out + 2 * m if inverted else out

    def flip(s: int) -> int:
        return s + 2 * m if s <= 2 * m else s - 2 * m

    na1, na2 = 2 * (ai + 1) - 1, 2 * (ai + 2) - 1
    nb1, nb2 = 2 * (bi + 1), 2 * (bi + 2)

    images = [0] * (4 * m)
    for s in range(1, 4 * n + 1):
        images[remap(s) - 1] = remap(sigma(s))

    def put(s: int, v: int) -> None:
        images[s - 1] = v

    if right_handed:
        # Rerouted strand first meets the new first-curve arcs, so the
        # corner after b_in picks up the fresh arcs in curve-one order.
        put(remap(b_in), na1)
        put(na1, nb2)
        put(nb2, remap(a_out))
        put(remap(b_out + half), flip(na2))
        put(flip(na2), flip(nb1))
        put(flip(nb1), remap(a_in + half))
        put(nb1, flip(na1))
        put(flip(na1), nb1)
        put(na2, flip(nb2))
        put(flip(nb2), na2)
    else:
        put(remap(a_in), nb1)
        put(nb1, na2)
        put(na2, remap(b_out))
        put(remap(a_out + half), flip(nb2))
        put(flip(nb2), flip(na1))
        put(flip(na1), remap(b_in + half))
        put(na1, flip(nb1))
        put(flip(nb1), na1)
        put(nb2, flip(na2))
        put(flip(na2), nb2)

    result = FillingInstance(Permutation(images), instance.genus, instance.punctures + 2)
    after = validate(result)
    if not after.valid:
        failing = ", ".join(c.name for c in after.failures())
        raise RuntimeError(f"internal inconsistency: surgery output failed validation ({failing})")
    return result


def extend_to(instance: FillingInstance, target_punctures: int) -> FillingInstance:
    """Apply the surgery until the puncture count reaches the target.

    The site is chosen deterministically at every step: the vertex class
    containing the smallest corner symbol.
    """
    if target_punctures < instance.punctures:
        raise ValueError("target puncture count lies below the current one")
    if (target_punctures - instance.punctures) % 2:
        raise ValueError("the surgery adds punctures in pairs; parity mismatch")
    if not validate(instance).valid:
        raise ValueError("extension needs a valid instance")
    current = instance
    while current.punctures < target_punctures:
        current = double_bigon(current, SurgerySite(1))
    return current
