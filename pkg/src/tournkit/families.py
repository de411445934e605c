"""The six chain-indexed families, their checked quotients, and small witnesses."""

from __future__ import annotations

from .core import (
    ASCENDING,
    DESCENDING,
    ChainSpec,
    Tournament,
    TournamentError,
    chain,
    chain_tournament,
    cycle3,
    lex_sum,
    make_tournament,
    skew_product,
)
from .decomp import acyclic_components

KINDS = ("c3", "v", "t", "u", "h", "k")

_Y = frozenset({"h0", "v0"})
X_SETS = {
    "t": frozenset({"d0^-1", "d1^-1", "h1"}) | _Y,
    "u": frozenset({"d0", "d1", "h1^-1"}) | _Y,
    "h": frozenset({"d0^-1", "d1", "h1"}) | _Y,
    "k": frozenset({"d0^-1", "d1", "h1^-1"}) | _Y,
}

WITNESS_NAMES = ("tau1", "tau2", "T5", "U7", "V7", "H3")


def _as_spec(c) -> ChainSpec:
    if isinstance(c, ChainSpec):
        return c
    return ChainSpec(int(c), ASCENDING)


def family(kind: str, c) -> Tournament:
    """Member of one of the six families over the given finite chain."""
    spec = _as_spec(c)
    if kind not in KINDS:
        raise TournamentError("OUT_OF_RANGE", f"unknown family kind {kind!r}")
    if spec.length < 1:
        raise TournamentError("EMPTY_CHAIN", "family chains need at least one vertex")
    if kind == "c3":
        return lex_sum(chain_tournament(spec), [cycle3()] * spec.length)
    if kind == "v":
        return _v_family(spec)
    return skew_product(spec, X_SETS[kind])


def _v_family(spec: ChainSpec) -> Tournament:
    """Two stacked chains plus an apex fed by the upper level and feeding the lower."""
    length = spec.length
    c = chain_tournament(spec)
    apex = 2 * length
    edges = []
    for x in range(length):
        edges.append((2 * x, 2 * x + 1))
        edges.append((apex, 2 * x))
        edges.append((2 * x + 1, apex))
        for y in range(length):
            if c.edge(x, y):
                for i in (0, 1):
                    for j in (0, 1):
                        edges.append((2 * x + i, 2 * y + j))
    return make_tournament(2 * length + 1, edges)


def checked_family(kind: str, c) -> Tournament:
    """Quotient of a family member by its acyclic components."""
    return acyclic_components(family(kind, c)).quotient


def schmerl_trotter(tag: str, h: int) -> Tournament:
    """The classical odd-order tournaments on 0..2h given by three clauses.

    tag "t"/"u": 0..h is a chain for both; h+1..2h is a chain for t and a
    reversed chain for u; for i < h, positions i+1..h beat i+h+1 and i+h+1
    beats 0..i.  tag "v": 0..2h-1 is a chain, odd vertices beat 2h, 2h beats
    even vertices.
    """
    if tag not in ("t", "u", "v"):
        raise TournamentError("OUT_OF_RANGE", f"unknown tag {tag!r}")
    if h < 2:
        raise TournamentError("H_TOO_SMALL", "need h >= 2")
    n = 2 * h + 1
    edges = []
    if tag == "v":
        edges.extend((i, j) for i in range(2 * h) for j in range(i + 1, 2 * h))
        for i in range(h):
            edges.append((2 * i + 1, 2 * h))
            edges.append((2 * h, 2 * i))
        return make_tournament(n, edges)
    edges.extend((i, j) for i in range(h + 1) for j in range(i + 1, h + 1))
    for i in range(h + 1, n):
        for j in range(i + 1, n):
            edges.append((i, j) if tag == "t" else (j, i))
    for i in range(h):
        for j in range(i + 1, h + 1):
            edges.append((j, i + h + 1))
        for k in range(i + 1):
            edges.append((i + h + 1, k))
    return make_tournament(n, edges)


def witness(name: str) -> Tournament:
    """Small separators: each lives in exactly one of the six families."""
    single = chain(1)
    if name == "tau1":
        return lex_sum(chain(2), [cycle3(), cycle3()])
    if name == "tau2":
        # one vertex of a 3-cycle blown up into a 3-cycle (5 vertices)
        return lex_sum(cycle3(), [cycle3(), single, single])
    if name == "T5":
        return schmerl_trotter("t", 2)
    if name == "U7":
        return schmerl_trotter("u", 3)
    if name == "V7":
        return schmerl_trotter("v", 3)
    if name == "H3":
        return family("h", 3)
    raise TournamentError("UNKNOWN_WITNESS", f"no witness named {name!r}")


def witness_family(name: str) -> str:
    """Which family a witness separates from the other five."""
    return {"tau1": "c3", "tau2": "k", "T5": "t", "U7": "u", "V7": "v", "H3": "h"}[name]


def family_size(kind: str, length: int) -> int:
    if kind == "c3":
        return 3 * length
    if kind == "v":
        return 2 * length + 1
    return 2 * length


def descending(length: int) -> ChainSpec:
    return ChainSpec(length, DESCENDING)
