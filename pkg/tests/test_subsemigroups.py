"""Classification, membership, canonical forms, and the generated() decision."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bruteforce import (
    bf_chain_members,
    bf_cycle_members,
    bf_infchain_members,
    bf_mul,
)
from gisalg import (
    IMPROPER,
    ConstructionError,
    CycleType,
    Element,
    FiniteChain,
    InfiniteChain,
    ParseError,
    WrongKindError,
    ZERO,
    bounded_elements,
    classify,
    enumerate_elements,
    generated,
    idempotent,
    make,
    membership,
    min_idempotent,
    parse_element,
    parse_subsemigroup,
    root,
    up_set,
)

# ------------------------------------------------------ constructors


def test_finite_chain(loopx):
    w = loopx.path(["e", "f"])
    L = FiniteChain(w)
    assert classify(L) == "finite-chain"
    assert L.literal() == "chain e.f"
    assert L == FiniteChain(loopx.path(["e", "f"])) and hash(L) == hash(
        FiniteChain(w)
    )
    assert root(L) == "x"
    assert min_idempotent(L) == idempotent(w)


def test_cycle_type(loopx, bouquet2):
    p, d = loopx.path(["a", "a"]), loopx.path(["e", "f"])
    L = CycleType(p, d)
    assert classify(L) == "cycle"
    assert L.literal() == "cycle a.a e.f"
    with pytest.raises(WrongKindError):
        root(L)
    with pytest.raises(WrongKindError):
        # idempotents descend (p^r d, p^r d) without end, so no minimum
        min_idempotent(L)
    with pytest.raises(ConstructionError):
        CycleType(d, p)  # d is not a circuit
    with pytest.raises(ConstructionError):
        CycleType(p, loopx.path(["f"], at="y"))  # paths must be coinitial
    ab = bouquet2.path("ab")
    with pytest.raises(ConstructionError):
        CycleType(ab, bouquet2.path("a"))  # shared first edge
    CycleType(ab, bouquet2.path("b"))  # distinct first edges are fine


def test_infinite_chain_canonical_form(loop1, bouquet2):
    # the circuit is replaced by its primitive root
    L = InfiniteChain(loop1.path(["a", "a"]), loop1.empty_path("x"))
    assert (L.c.literal(), L.q.literal()) == ("a", "@x")
    # rotations describing the same ray normalize to one presentation
    A = InfiniteChain(bouquet2.path("ab"), bouquet2.path("b"))
    B = InfiniteChain(bouquet2.path("ba"), bouquet2.path("bb"))
    assert A == B
    assert (A.c.literal(), A.q.literal()) == ("a.b", "b")
    # the circuit is never a prefix of the stored tail
    C = InfiniteChain(bouquet2.path("ab"), bouquet2.path("ababb"))
    assert (C.c.literal(), C.q.literal()) == ("a.b", "b")
    assert classify(A) == "infinite-chain"
    assert A.literal() == "infchain a.b b"
    with pytest.raises(ConstructionError):
        InfiniteChain(bouquet2.path("a"), loop1.empty_path("x"))


def test_improper():
    assert classify(IMPROPER) == "improper"
    assert IMPROPER.literal() == "improper"
    with pytest.raises(WrongKindError):
        root(IMPROPER)
    with pytest.raises(WrongKindError):
        min_idempotent(IMPROPER)


def test_make_and_parse(loopx):
    assert make("chain", loopx.path(["e", "f"])) == FiniteChain(
        loopx.path(["e", "f"])
    )
    assert parse_subsemigroup(loopx, "cycle a.a e.f") == CycleType(
        loopx.path(["a", "a"]), loopx.path(["e", "f"])
    )
    assert parse_subsemigroup(loopx, "infchain a @x") == InfiniteChain(
        loopx.path(["a"]), loopx.empty_path("x")
    )
    assert parse_subsemigroup(loopx, "improper") is IMPROPER
    for bad in ["", "chain", "chain e.f extra", "cycle a.a", "frob e.f", "improper x"]:
        with pytest.raises(ParseError):
            parse_subsemigroup(loopx, bad)
    with pytest.raises(ConstructionError):
        parse_subsemigroup(loopx, "cycle e.f a.a")
    with pytest.raises(ConstructionError):
        make("cycle", loopx.path(["a"]))  # wrong arity


# ------------------------------------------------------- membership


def test_membership_examples(loopx):
    L = parse_subsemigroup(loopx, "cycle a.a e.f")
    yes = ["(e.f|a.a.e.f)", "(e.f|e.f)", "(f|f)", "(@z|@z)",
           "(a.e.f|a.a.a.e.f)", "(a.a.e.f|e.f)"]
    no = ["(e.f|a.e.f)", "(a.e.f|e.f)", "(g|g)", "(e.k|e.k)", "(f|k)", "0"]
    for lit in yes:
        assert membership(L, parse_element(loopx, lit)), lit
    for lit in no:
        assert not membership(L, parse_element(loopx, lit)), lit


def test_membership_distinguishes_exponents(loop1, loopx):
    # (d, p d) witnesses L(p,d) against L(p^2,d)
    a1 = parse_element(loop1, "(@x|a)")
    assert membership(parse_subsemigroup(loop1, "cycle a @x"), a1)
    assert not membership(parse_subsemigroup(loop1, "cycle a.a @x"), a1)
    aef = parse_element(loopx, "(e.f|a.e.f)")
    assert membership(parse_subsemigroup(loopx, "cycle a e.f"), aef)
    assert not membership(parse_subsemigroup(loopx, "cycle a.a e.f"), aef)


def test_membership_improper(loopx):
    for lit in ["(e.f|a.e.f)", "(g|g)", "0"]:
        assert membership(IMPROPER, parse_element(loopx, lit))


@pytest.mark.parametrize(
    "kind,args,bound",
    [
        ("chain", ("e.f",), 5),
        ("cycle", ("a", "e.f"), 5),
        ("cycle", ("a.a", "e.f"), 6),
        ("infchain", ("a", "@x"), 5),
    ],
)
def test_membership_matches_bruteforce_loopx(loopx, kind, args, bound):
    L = parse_subsemigroup(loopx, " ".join((kind,) + args))
    if kind == "chain":
        want = bf_chain_members(L.w, bound)
    elif kind == "cycle":
        want = bf_cycle_members(L.p, L.d, bound)
    else:
        want = bf_infchain_members(L.c, L.q, bound)
    got = {
        x
        for x in enumerate_elements(loopx, bound)
        if not x.is_zero and membership(L, x)
    }
    assert got == want


def test_membership_matches_bruteforce_bouquet(bouquet2):
    L = CycleType(bouquet2.path("ab"), bouquet2.empty_path("o"))
    want = bf_cycle_members(L.p, L.d, 4)
    got = {
        x
        for x in enumerate_elements(bouquet2, 4)
        if not x.is_zero and membership(L, x)
    }
    assert got == want
    M = InfiniteChain(bouquet2.path("ab"), bouquet2.path("b"))
    want = bf_infchain_members(M.c, M.q, 4)
    got = {
        x
        for x in enumerate_elements(bouquet2, 4)
        if not x.is_zero and membership(M, x)
    }
    assert got == want


def test_bounded_elements_is_membership_slice(loopx, bouquet2):
    for g, L in [
        (loopx, parse_subsemigroup(loopx, "cycle a e.f")),
        (loopx, parse_subsemigroup(loopx, "chain e.f")),
        (loopx, parse_subsemigroup(loopx, "infchain a @x")),
        (bouquet2, parse_subsemigroup(bouquet2, "cycle a.b @o")),
        (bouquet2, parse_subsemigroup(bouquet2, "improper")),
    ]:
        for bound in (0, 2, 4):
            got = bounded_elements(L, bound, graph=g)
            assert len(got) == len(set(got))
            want = {
                x
                for x in enumerate_elements(g, bound)
                if membership(L, x) and not x.is_zero
            }
            if classify(L) == "improper":
                want.add(ZERO)
            assert set(got) == want


def test_bounded_elements_frozen_count(loopx):
    L = parse_subsemigroup(loopx, "cycle a e.f")
    assert len(bounded_elements(L, 4)) == 11


def test_membership_closed_under_products_and_up(loopx):
    L = parse_subsemigroup(loopx, "cycle a.a e.f")
    members = bounded_elements(L, 6)
    for x, y in itertools.product(members[:24], repeat=2):
        z = bf_mul(x, y)
        assert not z.is_zero
        assert membership(L, z)
    for x in members:
        for y in up_set(x):
            assert membership(L, y)


# -------------------------------------------------------- generated


def test_generated_single_pair(loopx, bouquet2, loop1):
    assert generated([parse_element(loopx, "(e.f|a.e.f)")]) == parse_subsemigroup(
        loopx, "cycle a e.f"
    )
    assert generated(
        [parse_element(loopx, "(e.f|a.a.e.f)")]
    ) == parse_subsemigroup(loopx, "cycle a.a e.f")
    assert generated([parse_element(bouquet2, "(@o|a.b)")]) == parse_subsemigroup(
        bouquet2, "cycle a.b @o"
    )
    assert generated([parse_element(bouquet2, "(b|a.b.b)")]) == parse_subsemigroup(
        bouquet2, "cycle a.b b"
    )
    assert generated([parse_element(loop1, "(a|@x)")]) == parse_subsemigroup(
        loop1, "cycle a @x"
    )


def test_generated_exponent_gcd(loop1):
    gens = [parse_element(loop1, "(@x|a.a)"), parse_element(loop1, "(@x|a.a.a)")]
    assert generated(gens) == parse_subsemigroup(loop1, "cycle a @x")
    assert generated(gens[:1]) == parse_subsemigroup(loop1, "cycle a.a @x")


def test_generated_idempotents(loopx):
    gens = [parse_element(loopx, "(f|f)"), parse_element(loopx, "(e.f|e.f)")]
    assert generated(gens) == parse_subsemigroup(loopx, "chain e.f")
    assert generated([parse_element(loopx, "(@z|@z)")]) == parse_subsemigroup(
        loopx, "chain @z"
    )


def test_generated_improper_cases(loopx, bouquet2):
    # suffix-incomparable idempotents already multiply to zero
    assert generated(
        [parse_element(loopx, "(g|g)"), parse_element(loopx, "(e.f|e.f)")]
    ) is IMPROPER
    assert generated([ZERO]) is IMPROPER
    assert generated(
        [parse_element(loopx, "(e.f|a.e.f)"), parse_element(loopx, "(e.k|a.e.k)")]
    ) is IMPROPER
    # the closure of these hits zero even though the pre-checks pass
    assert generated(
        [parse_element(bouquet2, "(@o|a.b)"), parse_element(bouquet2, "(a.a.b|a.a.b)")]
    ) is IMPROPER
    assert generated([parse_element(bouquet2, "(b.b|b.a.b)")]) is IMPROPER
    # mixed circuits with distinct primitive roots
    assert generated(
        [parse_element(bouquet2, "(@o|a.b)"), parse_element(bouquet2, "(@o|b.a)")]
    ) is IMPROPER


def test_generated_requires_generators():
    with pytest.raises(ConstructionError):
        generated([])


def test_generated_members_stay_members(loopx, bouquet2):
    cases = [
        (loopx, ["(e.f|a.e.f)", "(f|f)"]),
        (loopx, ["(e.f|a.a.e.f)", "(a.e.f|a.e.f)"]),
        (bouquet2, ["(b|a.b.b)", "(b.b|b.b)"]),
    ]
    for g, lits in cases:
        gens = [parse_element(g, lit) for lit in lits]
        L = generated(gens)
        for x in gens:
            assert membership(L, x)


word3 = st.lists(st.sampled_from("ab"), min_size=0, max_size=3)


@given(st.lists(st.tuples(word3, word3), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_generated_contains_generators(bouquet2, pairs):
    gens = [
        Element(bouquet2.path(l, at="o"), bouquet2.path(r, at="o"))
        for l, r in pairs
    ]
    L = generated(gens)
    for x in gens:
        assert membership(L, x)


@given(st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=3),
       st.data())
@settings(max_examples=40, deadline=None)
def test_generated_on_acyclic_is_chain_or_improper(chain3, lens, data):
    # an acyclic graph admits no cycle or infinite-chain subsemigroups
    paths = []
    for n in lens:
        start = data.draw(st.sampled_from(["v0", "v1", "v2", "v3"]))
        names = [f"e{i}" for i in range(int(start[1]), int(start[1]) - n, -1)]
        if int(start[1]) - n < 0:
            names = names[: int(start[1])]
        paths.append(chain3.path(names, at=start) if names else
                     chain3.empty_path(start))
    gens = []
    for i, p in enumerate(paths):
        q = paths[(i + 1) % len(paths)]
        if p.start == q.start:
            gens.append(Element(p, q))
        else:
            gens.append(Element(p, p))
    L = generated(gens)
    assert classify(L) in ("finite-chain", "improper")
