"""Closed forms, recurrences, and bounds used as independent profile oracles."""

from __future__ import annotations

from functools import lru_cache

from .core import TournamentError

C3_RECURRENCE = "C3_RECURRENCE"
CAMERON_DIAMOND_FREE = "CAMERON_DIAMOND_FREE"
K_CLOSED = "K_CLOSED"
K_RECURRENCE = "K_RECURRENCE"
U_LOWER = "U_LOWER"
H_LOWER = "H_LOWER"
V_LOWER = "V_LOWER"

FORMULA_TAGS = (
    C3_RECURRENCE,
    CAMERON_DIAMOND_FREE,
    K_CLOSED,
    K_RECURRENCE,
    U_LOWER,
    H_LOWER,
    V_LOWER,
)

# floor form of the C3 recurrence: round(d * c**n); c is the real root of
# x**3 = x**2 + 1
A000930_C = 1.465571231876768
A000930_D = 0.611491991950812


@lru_cache(maxsize=None)
def _c3_value(n: int) -> int:
    if n < 3:
        return 1
    return _c3_value(n - 1) + _c3_value(n - 3)


@lru_cache(maxsize=None)
def _k_value(n: int) -> int:
    # profile of the K family via its dilation recurrence
    if n <= 2:
        return 1
    return 1 + sum((n - j - 1) * _k_value(j) for j in range(1, n - 1))


def euler_totient(n: int) -> int:
    """Count of 1..n coprime to n, by trial-division factoring."""
    if n < 1:
        raise TournamentError("DOMAIN", f"totient needs n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def partition_count(k: int, n: int) -> int:
    """Partitions of n into at most k parts."""
    if k < 0 or n < 0:
        raise TournamentError("DOMAIN", f"need k, n >= 0, got k={k}, n={n}")
    return _partition(k, n)


@lru_cache(maxsize=None)
def _partition(k: int, n: int) -> int:
    if n == 0:
        return 1
    if k == 0:
        return 0
    if n < k:
        return _partition(n, n)
    return _partition(k - 1, n) + _partition(k, n - k)


def _cameron(n: int) -> int:
    total = 0
    for d in range(1, n + 1, 2):
        if n % d == 0:
            total += euler_totient(d) * 2 ** (n // d)
    if total % (2 * n):
        raise TournamentError("NON_INTEGER", f"divisor sum not divisible by 2n at n={n}")
    return total // (2 * n)


def formula_value(kind: str, n: int) -> int:
    """Evaluate one of the tagged closed forms / recurrences / bounds at n."""
    if kind == C3_RECURRENCE:
        if n < 0:
            raise TournamentError("DOMAIN", "recurrence defined for n >= 0")
        return _c3_value(n)
    if kind == CAMERON_DIAMOND_FREE:
        if n < 1:
            raise TournamentError("DOMAIN", "count defined for n >= 1")
        return _cameron(n)
    if kind == K_CLOSED:
        if n < 2:
            raise TournamentError("DOMAIN", "closed form defined for n >= 2")
        return 2 ** (n - 2)
    if kind == K_RECURRENCE:
        if n < 3:
            raise TournamentError("DOMAIN", "recurrence defined for n >= 3")
        return _k_value(n)
    if kind == U_LOWER:
        if n < 0:
            raise TournamentError("DOMAIN", "bound defined for n >= 0")
        return max(2 ** (n - 2) - 1 - (n - 1) * (n - 2) // 2, 0) if n >= 2 else 0
    if kind == H_LOWER:
        if n < 0:
            raise TournamentError("DOMAIN", "bound defined for n >= 0")
        return max(2 ** (n - 4) - (n - 3) - 1, 0) if n >= 4 else 0
    if kind == V_LOWER:
        if n < 0:
            raise TournamentError("DOMAIN", "bound defined for n >= 0")
        return 2 ** (n - 5) if n >= 5 else 0
    raise TournamentError("DOMAIN", f"unknown formula tag {kind!r}")


def a000930_floor_form(n: int) -> int:
    """Float evaluation round(d * c**n), cross-checked against the recurrence."""
    if n < 0:
        raise TournamentError("DOMAIN", "defined for n >= 0")
    value = int(A000930_D * A000930_C ** n + 0.5)
    if n <= 30 and value != _c3_value(n):
        raise TournamentError("PRECISION", f"floor form disagrees with recurrence at n={n}")
    return value
