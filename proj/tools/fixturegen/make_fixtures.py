"""Writes the map payloads of fixtures/ from polyhedra and saved search results."""

import os
import sys

from pcmap import Map, medial, parse
from polyhedra import cube, dodecahedron, tetrahedron, truncated_icosahedron

HERE = os.path.dirname(os.path.abspath(__file__))


def saved(name, keep_curves=True):
    with open(os.path.join(HERE, name)) as f:
        m = parse(f.read())
    if not keep_curves:
        m.curve = None
    return m


def bare(m):
    m.curve = None
    return m


def two_cycle():
    return Map([1, 0, 3, 2], [2, 3, 0, 1])


FIXTURES = {
    "two_circles": lambda: medial(two_cycle()),
    "k4": lambda: bare(tetrahedron()),
    "octahedron": lambda: medial(tetrahedron()),
    "cube": lambda: bare(cube()),
    "cube_medial": lambda: medial(cube()),
    "fig1b": lambda: saved("n5chi4_8.map"),
    "fig4_n7": lambda: saved("found_n7_s11.map"),
    "fig4_n9": lambda: saved("found_n9_s107.map"),
    "fig4_n10": lambda: saved("found_n10_s204.map"),
    "fig6a": lambda: medial(dodecahedron()),
    "fig8": lambda: saved("fig8_K4_K4.map", keep_curves=False),
    "fig10": lambda: medial(truncated_icosahedron()),
    "crowning18": lambda: saved("g18_v10_1_E.map", keep_curves=False),
}


def main(out):
    for name, make in FIXTURES.items():
        m = make()
        assert m.euler_ok(), name
        with open(os.path.join(out, name + ".map"), "w") as f:
            f.write(m.dump())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join(HERE, "..", "..", "fixtures"))
