"""Census of induced subtournaments, sums of chains, and series fitting."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .core import (
    Tournament,
    TournamentError,
    canonical_form,
    chain,
    lex_sum,
    restrict,
)
from .decomp import acyclic_components

UNBOUNDED = None

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class ProfileSeries:
    values: tuple[int, ...]
    k: int | None = None
    numerator: tuple[int, ...] | None = None


@dataclass(frozen=True)
class SumSpec:
    """A sum of chains over a finite index tournament.

    caps[i] is the chain length placed on index vertex i; UNBOUNDED (None)
    marks a chain that grows without bound.
    """

    index: Tournament
    caps: tuple[int | None, ...]

    def __post_init__(self):
        if len(self.caps) != self.index.n:
            raise TournamentError("ARITY_MISMATCH", f"{self.index.n} index vertices, {len(self.caps)} caps")
        for c in self.caps:
            if c is not UNBOUNDED and c < 0:
                raise TournamentError("OUT_OF_RANGE", "caps must be non-negative or UNBOUNDED")


def _subset_codes(t: Tournament, n: int, budget: int) -> set[int]:
    if comb(t.n, n) > budget:
        raise TournamentError("BUDGET_EXCEEDED", f"C({t.n},{n}) subsets exceed budget {budget}")
    codes = set()
    for subset in itertools.combinations(range(t.n), n):
        codes.add(canonical_form(restrict(t, subset)).bits)
    return codes


def profile_count(t: Tournament, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of isomorphism types among the n-vertex induced subtournaments."""
    if n < 0:
        raise TournamentError("OUT_OF_RANGE", "n must be non-negative")
    if n > t.n:
        return 0
    return len(_subset_codes(t, n, budget))


def profile_sequence(t: Tournament, n_max: int, budget: int = DEFAULT_BUDGET) -> ProfileSeries:
    return ProfileSeries(tuple(profile_count(t, n, budget) for n in range(n_max + 1)))


def sum_profile(spec: SumSpec, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Profile value of the (possibly unbounded) sum of chains at size n.

    Enumerates the vectors of per-index chain contributions summing to n,
    materialises each as a finite lex sum, and counts distinct types.
    """
    if spec.index.n > 8:
        raise TournamentError("INDEX_TOO_LARGE", f"index limited to 8 vertices, got {spec.index.n}")
    if n < 0:
        raise TournamentError("OUT_OF_RANGE", "n must be non-negative")
    codes = set()
    seen = 0
    for vec in _bounded_vectors(spec.caps, n):
        seen += 1
        if seen > budget:
            raise TournamentError("BUDGET_EXCEEDED", f"more than {budget} contribution vectors")
        support = [i for i, m in enumerate(vec) if m]
        t = lex_sum(restrict(spec.index, support), [chain(vec[i]) for i in support])
        codes.add(canonical_form(t).bits)
    return len(codes)


def _bounded_vectors(caps, total):
    if not caps:
        if total == 0:
            yield ()
        return
    head, rest = caps[0], caps[1:]
    top = total if head is UNBOUNDED else min(head, total)
    for m in range(top + 1):
        for tail in _bounded_vectors(rest, total - m):
            yield (m,) + tail


def sum_profile_sequence(spec: SumSpec, n_max: int, budget: int = DEFAULT_BUDGET) -> ProfileSeries:
    return ProfileSeries(tuple(sum_profile(spec, n, budget) for n in range(n_max + 1)))


def series_fit(series, k: int) -> list[int] | None:
    """Numerator of the generating series against a k-fold partition denominator.

    Multiplies the counting series by (1-x)(1-x^2)...(1-x^k) and accepts the
    result as a polynomial when the last max(k(k+1)/2, 1) coefficients vanish;
    returns its coefficients, or None when the tail is provably non-zero.
    A zero tail shorter than the window means the truncation cannot decide,
    so TOO_FEW_TERMS is raised instead of answering.
    """
    values = list(series.values if isinstance(series, ProfileSeries) else series)
    if k < 0:
        raise TournamentError("OUT_OF_RANGE", "k must be non-negative")
    window = max(k * (k + 1) // 2, 1)
    needed = max(2 * k + 4, window + 1)
    if len(values) < needed:
        raise TournamentError("TOO_FEW_TERMS", f"need at least {needed} terms, got {len(values)}")
    q = values
    for i in range(1, k + 1):
        q = [q[j] - (q[j - i] if j >= i else 0) for j in range(len(q))]
    if all(c == 0 for c in q[len(q) - window:]):
        while q and q[-1] == 0:
            q.pop()
        return q
    if q[-1] == 0:
        raise TournamentError("TOO_FEW_TERMS", "zero tail shorter than the stabilisation window")
    return None


def age_leq(a: Tournament, b: Tournament, n_max: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Every induced type of a up to size n_max also occurs in b."""
    for n in range(min(n_max, a.n) + 1):
        if n > b.n:
            return False
        if not _subset_codes(a, n, budget) <= _subset_codes(b, n, budget):
            return False
    return True


def growth_of_sum(spec: SumSpec) -> dict:
    """Polynomial growth data of an unbounded sum of chains.

    Index vertices with cap 0 are dropped; chains over one acyclic component
    of the index merge into a single chain, so p counts those components and
    k the components holding at least one unbounded cap.  The profile grows
    like n**(k-1).
    """
    live = [i for i, c in enumerate(spec.caps) if c is UNBOUNDED or c > 0]
    reduced = restrict(spec.index, live)
    comp = acyclic_components(reduced).blocks
    p = len(comp)
    k = sum(1 for b in comp if any(spec.caps[live[v]] is UNBOUNDED for v in b))
    return {"p": p, "k": k, "degree": k - 1}


def stabilized_profile(build, n_max: int, start: int = 2, limit: int | None = None,
                       budget: int = DEFAULT_BUDGET) -> tuple[list[int], tuple[int, int]]:
    """Profile of an increasing family, grown until two consecutive sizes agree.

    build(N) returns the N-th member.  Values are non-decreasing in N and
    constant once every type of size <= n_max fits, so agreement between N
    and N+1 is taken as stabilisation; both N values are returned.
    """
    if limit is None:
        limit = n_max + 3
    prev = None
    prev_n = None
    for size in range(start, limit + 1):
        t = build(size)
        if t.n < n_max:
            continue
        vals = [profile_count(t, i, budget) for i in range(n_max + 1)]
        if prev is not None and vals == prev:
            return vals, (prev_n, size)
        prev, prev_n = vals, size
    raise TournamentError("BUDGET_EXCEEDED", f"no stabilisation up to size {limit}")
