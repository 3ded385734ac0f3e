"""Recursive Betti-number routes and their internal consistency checks.

Two memoized recursions live here.  The long-path recursion computes
Betti numbers of long(n-1)^s * long(n)^t from the splitting off the first
generator.  The mixed/corner recursion is mutual: each mixed-chain step
contributes a corner family one cycle size down, and each corner-chain step
a mixed family one size down, so values at n reduce to values at n-1 and
n-2 until the closed reduced-power form takes over at t = 0.

Both recursions are pure; the memo tables only affect speed, never values.
"""
from __future__ import annotations

from collections import Counter

from .families import corner_chain_pairs, mixed_chain_pairs
from .formulas import reduced_power_betti, short_path_betti

_long_memo: dict[tuple[int, int, int, int], int] = {}
_bc_memo: dict[tuple, int] = {}


def clear_caches() -> None:
    """Drop all memoized values (results must be unaffected)."""
    _long_memo.clear()
    _bc_memo.clear()


def long_path_rec(n: int, s: int, t: int, i: int) -> int:
    """Betti number of long(n-1)^s * long(n)^t by the splitting recursion.

    Negative s, t or i give 0.  At n = 2 the ideal is (x1,x2)^t, whose
    Betti numbers are t+1 and t; at t = 0 the product is a flat extension
    of a single power one cycle size down.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    if s < 0 or t < 0 or i < 0:
        return 0
    key = (n, s, t, i)
    cached = _long_memo.get(key)
    if cached is not None:
        return cached
    if n == 2:
        val = t + 1 if i == 0 else (t if i == 1 else 0)
    elif t == 0:
        val = (1 if i == 0 else 0) if s == 0 else long_path_rec(n - 1, 0, s, i)
    else:
        val = (long_path_rec(n, s, 0, i)
               + long_path_rec(n, s + 1, t - 1, i)
               + long_path_rec(n, s, 0, i - 1))
    _long_memo[key] = val
    return val


def _bc(which: str, n: int, s: int, t: int, i: int, strict: bool) -> int:
    if s < 0 or t < 0 or i < 0:
        return 0
    key = (which, strict, n, s, t, i)
    cached = _bc_memo.get(key)
    if cached is not None:
        return cached
    if n == 2:
        if which == "mixed":
            val = 1 if i == 0 else 0
        else:  # (x1,x2)^t regardless of s
            val = t + 1 if i == 0 else (t if i == 1 else 0)
    elif t == 0:
        val = reduced_power_betti(n, s, i)
    elif which == "mixed":
        val = _bc("mixed", n - 1, s + t, 0, i, strict)
        for a, b in mixed_chain_pairs(s, t):
            val += _bc("corner", n - 1, a, b, i, strict) + _bc("corner", n - 1, a, b, i - 1, strict)
    else:
        val = _bc("mixed", n - 1, s, 0, i, strict)
        for a, b in corner_chain_pairs(s, t, strict=strict):
            val += _bc("mixed", n - 1, a, b, i, strict) + _bc("mixed", n - 1, a, b, i - 1, strict)
    if val < 0:
        raise ArithmeticError(
            f"negative value in {which} recursion at {(n, s, t, i)}: {val}")
    _bc_memo[key] = val
    return val


def mixed_rec(n: int, s: int, t: int, i: int, strict_delta: bool = False) -> int:
    """Betti number of reduced^s * full^t via the mutual chain recursion."""
    if n < 2:
        raise ValueError("need n >= 2")
    return _bc("mixed", n, s, t, i, strict_delta)


def corner_rec(n: int, s: int, t: int, i: int, strict_delta: bool = False) -> int:
    """Betti number of reduced^s * (x1,xn)^t via the mutual chain recursion.

    strict_delta switches the corner-chain multiset to its closed form,
    which over-counts by one at s = 0; exposed to demonstrate that the
    chain-derived multiset is the one the oracle confirms.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return _bc("corner", n, s, t, i, strict_delta)


def composed_support(s: int, t: int, strict_delta: bool = False) -> Counter:
    """Multiplicities of the pairs reached by composing the two chain reductions.

    One corner-chain expansion per mixed-chain pair; the result is supported
    inside support_envelope(s, t).
    """
    if s < 0 or t < 1:
        raise ValueError("need s >= 0 and t >= 1")
    out: Counter = Counter()
    for a, b in mixed_chain_pairs(s, t):
        out.update(corner_chain_pairs(a, b, strict=strict_delta))
    return out


def short_path_pd_rec(n: int, s: int, t: int) -> int:
    """Projective dimension of reduced^s * full^t by the support recursion.

    Bases: the n = 2 family is the whole ring (pd 0); at n = 3 every power
    with t >= 1 has pd 2.  Above that, pd is the larger of min(n-3, s+t)
    and 2 + the worst pd among the composed-support families two sizes down.
    """
    if n < 2 or s < 0 or t < 1:
        raise ValueError("need n >= 2, s >= 0, t >= 1")
    if n == 2:
        return 0
    if n == 3:
        return 2
    deepest = 0
    for (u, v), mult in composed_support(s, t).items():
        if mult > 0 and v >= 1:
            deepest = max(deepest, short_path_pd_rec(n - 2, u, v))
    return max(min(n - 3, s + t), deepest + 2)


# ---------------------------------------------------------------------------
# Residuals of the self-recurrences.  Each returns (left side) - (right side)
# of the corresponding recurrence; the contract is 0.  route selects whether
# the terms are evaluated through the chain recursion or the closed form.
# ---------------------------------------------------------------------------

def _route(route: str):
    if route == "recursion":
        return mixed_rec
    if route == "closed":
        return short_path_betti
    raise ValueError(f"unknown route {route!r} (expected 'recursion' or 'closed')")


def shift_residual(n: int, s: int, i: int, route: str = "recursion") -> int:
    """Residual of the t = 1 recurrence stepping s to s+1 (hypotheses n >= 4, s >= 0)."""
    if n < 4 or s < 0:
        raise ValueError("hypotheses need n >= 4 and s >= 0")
    f = _route(route)

    def tilde(nn, ss, tt, ii):
        return f(nn, ss, tt, ii) + f(nn, ss, tt, ii - 1)

    def dbl(nn, ss, tt, ii):
        return f(nn, ss, tt, ii) + 2 * f(nn, ss, tt, ii - 1) + f(nn, ss, tt, ii - 2)

    lhs = f(n, s + 1, 1, i)
    rhs = (f(n, s, 1, i)
           + f(n - 1, s + 2, 0, i) - f(n - 1, s + 1, 0, i)
           + tilde(n - 2, s + 1, 0, i)
           + sum(dbl(n - 2, j, 1, i) for j in range(s + 1))
           + dbl(n - 2, 0, 0, i))
    return lhs - rhs


def exchange_residual(n: int, s: int, t: int, i: int, route: str = "recursion") -> int:
    """Residual of the recurrence exchanging (s, t) with (s+1, t-1) (needs t >= 2)."""
    if n < 4 or s < 0 or t < 2:
        raise ValueError("hypotheses need n >= 4, s >= 0 and t >= 2")
    f = _route(route)

    def dbl(nn, ss, tt, ii):
        return f(nn, ss, tt, ii) + 2 * f(nn, ss, tt, ii - 1) + f(nn, ss, tt, ii - 2)

    lhs = f(n, s, t, i) - f(n, s + 1, t - 1, i)
    if s <= t:
        rhs = sum(dbl(n - 2, 0, j, i) for j in range(s + 1))
    else:
        rhs = (sum(dbl(n - 2, 0, j, i) for j in range(t))
               + (s - t + 1) * dbl(n - 2, 0, t, i)
               + sum((s - t + 1 - ell) * (dbl(n - 2, ell, t, i) - dbl(n - 2, ell, t - 1, i))
                     for ell in range(1, s - t + 1)))
    return lhs - rhs
