"""Bundled example certificates, in cycle notation."""

GENUS2_BASE = "(1,2,19,14)(3,8,15,16,9,4,17,18,5,10,11,12)(6,13,20,7)"
"""Five-crossing filling pair on the genus-2 surface with three punctures."""

TORUS_BASE = "(1,2,3,4)"
"""One-crossing filling pair on the closed torus."""

SPHERE_FOUR_BASE = "(1,2)(3,6)(4,5)(7,8)"
"""Two-crossing, all-bigon filling pair on the four-punctured sphere."""
