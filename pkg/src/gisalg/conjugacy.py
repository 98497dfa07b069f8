"""Conjugacy of closed inverse subsemigroups.

L and K are conjugate when some element (s,t) satisfies
(t,s) L (s,t) subset-of K and (s,t) K (t,s) subset-of L.  Conjugacy never
mixes kinds, and within each kind it reduces to a statement about the
defining paths: equal roots for finite chains, rotation-equivalent primitive
roots for infinite chains, rotation-equivalent circuits for cycle types.
"""

from gisalg.elements import Element, inverse, multiply
from gisalg.errors import WrongKindError
from gisalg.graphs import Path, circuit_shift, concat
from gisalg.subsemigroups import bounded_elements, membership


def are_conjugate(a, b):
    if a.kind != b.kind:
        return False
    if a.kind == "improper":
        return True
    if a.kind == "finite-chain":
        return a.w.start == b.w.start
    if a.kind == "infinite-chain":
        # canonical circuits are primitive, so rotation equivalence of the
        # stored circuits is exactly rotation equivalence of the roots
        return circuit_shift(a.c, b.c) is not None
    return circuit_shift(a.p, b.p) is not None


def _check_bounded(a, b, conj, bound):
    # verify (t,s) a (s,t) lands in b and back, over bounded slices
    ic = inverse(conj)
    for x in bounded_elements(a, bound):
        y = multiply(multiply(ic, x), conj)
        if y.is_zero or not membership(b, y):
            return False
    for x in bounded_elements(b, bound):
        y = multiply(multiply(conj, x), ic)
        if y.is_zero or not membership(a, y):
            return False
    return True


def conjugator(a, b):
    """An element (s,t) conjugating a onto b, or None.

    The containment direction is (t,s)·a·(s,t) inside b.
    """
    if a.kind == "improper" or b.kind == "improper":
        raise WrongKindError("conjugator is defined for proper subsemigroups")
    if not are_conjugate(a, b):
        return None
    if a.kind == "finite-chain":
        return Element(a.w, b.w)
    if a.kind == "cycle":
        # p = vu and q = uv: conjugate by (v followed by a's anchor, b's anchor)
        j = circuit_shift(a.p, b.p)
        v = Path(a.p.edges[j:], a.p.verts[j:])
        return Element(concat(v, a.d), b.d)
    # infinite chains: drop a's tail, then b's tail preceded by the rotation
    # offset alpha, where a.c = alpha beta and b.c = beta alpha
    i = circuit_shift(a.c, b.c)
    alpha = Path(a.c.edges[:i], a.c.verts[: i + 1])
    conj = Element(a.q, concat(alpha, b.q))
    bound = 2 * len(a.c.edges) + max(
        len(conj.left.edges), len(conj.right.edges)
    ) + 2
    if not _check_bounded(a, b, conj, bound):
        raise AssertionError("bounded conjugation check failed for infinite chains")
    return conj
