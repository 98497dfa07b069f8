"""Error hierarchy.  Every domain error carries a short category tag that the
command line interface reports verbatim."""


class GisalgError(Exception):
    category = "error"


class ParseError(GisalgError):
    """Malformed graph text, path literal, element literal, or CLI argument."""

    category = "parse"


class CompositionError(GisalgError):
    """Paths that do not compose or do not share the required vertex."""

    category = "composition-undefined"


class UnknownVertexError(GisalgError):
    category = "unknown-vertex"


class ZeroUpSetError(GisalgError):
    """The zero element lies below everything, so its up-set is the whole
    semigroup and is not returned as a finite set."""

    category = "infinite-up-set"


class ConstructionError(GisalgError):
    """Invalid arguments to a constructor: bad graph data, a cycle-type
    subsemigroup whose paths share a prefix, an empty generating set."""

    category = "construction"


class WrongKindError(GisalgError):
    """Operation applied to a value of the wrong kind, such as asking for the
    root of a subsemigroup that is not a finite chain."""

    category = "wrong-kind"


class NotACosetError(GisalgError):
    """Coset operations on an element t with t t^-1 outside the subsemigroup."""

    category = "not-a-coset"


class InfiniteIndexError(GisalgError):
    """Representative enumeration requested where the coset index is infinite."""

    category = "infinite-index"
