"""Named example clutters used by the tests, the harness and the CLI."""
from __future__ import annotations

from .core import Clutter, complement, face, faces


def dual_example() -> Clutter:
    """Three triangles 125, 235, 345 on [5]."""
    return Clutter.from_labels("125 235 345", n=5)


def vdec_example() -> Clutter:
    """2-clutter on [6] whose dual complex is vertex decomposable."""
    return Clutter.from_labels("123 124 134 234 345 346 126", n=6)


OCTAHEDRON_COMPLEMENT = "126 136 146 156 124 246 245 234"


def octahedron() -> Clutter:
    """Boundary of the octahedron (antipodes 16, 24, 35) plus the four triangles on 35.

    Given through its complement, which is the generator list of the
    admissible order it is known to carry.
    """
    return complement(Clutter.from_labels(OCTAHEDRON_COMPLEMENT, n=6))


def hollow_octahedron() -> Clutter:
    """The eight boundary triangles of the octahedron, without the interior ones."""
    return Clutter.from_labels("123 125 134 145 236 256 346 456", n=6)


DUNCE_HAT = "124 127 128 134 135 136 156 178 235 237 238 245 348 367 456 468 678"


def dunce_hat() -> Clutter:
    """An 8-vertex, 17-triangle triangulation of the dunce hat."""
    return Clutter.from_labels(DUNCE_HAT, n=8)


def dunce_hat_plus() -> Clutter:
    """The dunce hat with the extra triangle 278 (which closes the clique 1278)."""
    c = dunce_hat()
    return c.with_circuits(c.circuits | {face("278")})


def wheel_graph() -> Clutter:
    """Hub 1 joined to the 5-cycle 2-3-5-6-4: a non-chordal graph whose ascent is chordal.

    This is the first hit of ``harness.find_figure_graph``.
    """
    return Clutter.from_labels("12 13 14 15 16 23 24 35 46 56", n=6)


def octahedron_admissible_order() -> list[int]:
    return faces("126 136 146 156 124 246 245 234")


def octahedron_ascent_order() -> list[int]:
    return faces("1236 1246 1256 1346 1356 1456 1234 1245 2346 2456 2345")


def octahedron_elimination() -> list[int]:
    return faces("12 14 46 26 13 23 36 34")


def vdec_elimination() -> list[int]:
    return faces("26 46 12 13 23 35")


FIXTURES = {
    "dual-example": dual_example,
    "vdec-example": vdec_example,
    "octahedron": octahedron,
    "hollow-octahedron": hollow_octahedron,
    "dunce-hat": dunce_hat,
    "dunce-hat-plus": dunce_hat_plus,
    "wheel": wheel_graph,
}
