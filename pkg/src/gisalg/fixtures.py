"""Named example graphs, also shipped as files under fixtures/.

chain<n>   v_n -> ... -> v_0 along edges e_n ... e_1
loop1      one vertex x with one loop a (bicyclic monoid plus zero)
loopx      loop a at x with two escape branches: x -e-> y -f-> z,
           x -g-> xp -h-> yp, and y -k-> yp
bouquet<n> one vertex o with n loops a, b, c, ... (polycyclic monoid P_n)

loopxf is loopx with an extra edge fp: z -> x closing a circuit through e.
"""

import re
import string

from gisalg.errors import ConstructionError
from gisalg.graphs import Graph


def chain(n):
    if n < 0:
        raise ConstructionError("chain length must be nonnegative")
    vertices = [f"v{i}" for i in range(n + 1)]
    edges = {f"e{i}": (f"v{i}", f"v{i - 1}") for i in range(1, n + 1)}
    return Graph(vertices, edges)


def loop1():
    return Graph(["x"], {"a": ("x", "x")})


def loopx():
    return Graph(
        ["x", "y", "z", "xp", "yp"],
        {
            "a": ("x", "x"),
            "e": ("x", "y"),
            "f": ("y", "z"),
            "g": ("x", "xp"),
            "h": ("xp", "yp"),
            "k": ("y", "yp"),
        },
    )


def loopxf():
    base = loopx()
    edges = dict(base.edges)
    edges["fp"] = ("z", "x")
    return Graph(base.vertices, edges)


def bouquet(n):
    if not 1 <= n <= 26:
        raise ConstructionError("bouquet size must be between 1 and 26")
    return Graph(["o"], {string.ascii_lowercase[i]: ("o", "o") for i in range(n)})


FIXTURE_PATTERNS = ["bouquet<n>", "chain<n>", "loop1", "loopx"]


def fixture(name):
    """Resolve a fixture name to a Graph, or None if the name matches no
    pattern."""
    if name == "loop1":
        return loop1()
    if name == "loopx":
        return loopx()
    m = re.fullmatch(r"chain(\d+)", name)
    if m:
        return chain(int(m.group(1)))
    m = re.fullmatch(r"bouquet(\d+)", name)
    if m:
        n = int(m.group(1))
        if 1 <= n <= 26:
            return bouquet(n)
    return None
