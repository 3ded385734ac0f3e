"""Ideal families attached to the cycle graph.

Two path-ideal families recur throughout:

* the *long-path* family: products of n-1 consecutive variables around the
  n-cycle (each generator omits exactly one variable);
* the *short-path* family: products of n-2 consecutive variables, together
  with its *reduced* variant, which drops the generator starting at x2.
  The reduced ideal satisfies reduced(n) = (f1) + xn * reduced(n-1), the
  coupling both recursions run on.

The mixed family reduced^s * full^t and the corner family
reduced^s * (x1,xn)^t decompose along the xn-grading; the graded components
and their partial tail sums are constructed here, as are the index-pair
sets that track which smaller families the chain steps contribute.
"""
from __future__ import annotations

from .monomials import Monomial, MonomialIdeal, variable


def path_generator(n: int, start: int, length: int) -> Monomial:
    """Cyclic product of `length` consecutive variables from x_start (1-based)."""
    if not 1 <= start <= n or not 1 <= length <= n:
        raise ValueError(f"bad path generator ({n=}, {start=}, {length=})")
    exps = [0] * n
    for k in range(length):
        exps[(start - 1 + k) % n] += 1
    return Monomial(exps)


def cycle_path_ideal(n: int, m: int) -> MonomialIdeal:
    """The m-path ideal of the n-cycle: all n cyclic products of m consecutive variables."""
    if n < 2:
        raise ValueError("need n >= 2")
    if not 2 <= m <= n:
        raise ValueError(f"path length m={m} outside 2..{n}")
    return MonomialIdeal([path_generator(n, i, m) for i in range(1, n + 1)], n)


def long_path_ideal(n: int) -> MonomialIdeal:
    """(n-1)-path ideal of the n-cycle; n=2 means (x1, x2)."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        return MonomialIdeal([variable(1, 2), variable(2, 2)])
    return cycle_path_ideal(n, n - 1)


def short_path_ideal(n: int) -> MonomialIdeal:
    """(n-2)-path ideal of the n-cycle; n=2 means the whole ring, n=3 the variables."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        return MonomialIdeal.unit(2)
    return MonomialIdeal([path_generator(n, i, n - 2) for i in range(1, n + 1)], n)


def reduced_short_path_ideal(n: int) -> MonomialIdeal:
    """short_path_ideal(n) with the generator starting at x2 dropped; n=2 -> unit."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n == 2:
        return MonomialIdeal.unit(2)
    return MonomialIdeal(
        [path_generator(n, i, n - 2) for i in range(1, n + 1) if i != 2], n)


def short_path_pair(n: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """(full, reduced) short-path ideals in ambient n."""
    return short_path_ideal(n), reduced_short_path_ideal(n)


def corner_ideal(n: int) -> MonomialIdeal:
    """(x1, xn): the variables not supporting the dropped generator."""
    if n < 2:
        raise ValueError("need n >= 2")
    return MonomialIdeal([variable(1, n), variable(n, n)], n)


def mixed_power(n: int, s: int, t: int) -> MonomialIdeal:
    """reduced^s * full^t for the short-path pair in ambient n."""
    _check_st(n, s, t)
    return reduced_short_path_ideal(n) ** s * short_path_ideal(n) ** t


def corner_power(n: int, s: int, t: int) -> MonomialIdeal:
    """reduced^s * (x1,xn)^t in ambient n."""
    _check_st(n, s, t)
    return reduced_short_path_ideal(n) ** s * corner_ideal(n) ** t


def stacked_reduced_power(n: int, s: int, t: int) -> MonomialIdeal:
    """reduced(n-1)^s (flat-embedded) * reduced(n)^t in ambient n."""
    _check_st(n, s, t)
    if n == 2:
        return MonomialIdeal.unit(2)
    return (reduced_short_path_ideal(n - 1).embed(n) ** s
            * reduced_short_path_ideal(n) ** t)


def _check_st(n, s, t):
    if n < 2:
        raise ValueError("need n >= 2")
    if s < 0 or t < 0:
        raise ValueError("exponents must be nonnegative")


def graded_component(n: int, s: int, t: int, d: int, family: str) -> MonomialIdeal:
    """d-th xn-graded component of the mixed ("mixed") or corner ("corner") family.

    The mixed family splits as sum over d of xn^d * component_d * reduced(n-1)^d;
    the corner family as sum over d of xn^d * component_d.
    """
    _check_st(n, s, t)
    if n < 3:
        raise ValueError("graded components need n >= 3")
    if not 0 <= d <= s + t:
        raise ValueError(f"component index d={d} outside 0..{s + t}")
    f1 = path_generator(n, 1, n - 2)
    if family == "mixed":
        head = MonomialIdeal([f1, path_generator(n, 2, n - 2)], n)
        if d <= s:
            return f1 ** (s - d) * head ** t
        return head ** (s + t - d)
    if family == "corner":
        x1 = variable(1, n)
        reduced_below = reduced_short_path_ideal(n - 1).embed(n)
        scaled_full = MonomialIdeal([f1], n) + x1 * reduced_below
        if d < min(s, t):
            return (f1 ** (s - d) * x1 ** (t - d)) * scaled_full ** d
        if s <= d < t:
            return x1 ** (t - d) * scaled_full ** s
        if t <= d < s:
            return f1 ** (s - d) * (reduced_below ** (d - t) * scaled_full ** t)
        return reduced_below ** (d - t) * scaled_full ** (s + t - d)
    raise ValueError(f"unknown family {family!r}")


def chain_piece(n: int, s: int, t: int, d: int, family: str) -> MonomialIdeal:
    """Summand contributed at xn-degree d: component_d * reduced(n-1)^d for
    the mixed family, component_d alone for the corner family."""
    comp = graded_component(n, s, t, d, family)
    if family == "mixed":
        return comp * reduced_short_path_ideal(n - 1).embed(n) ** d
    return comp


def chain_tail(n: int, s: int, t: int, j: int, family: str) -> MonomialIdeal:
    """Partial sum of the xn-graded decomposition from component j upward.

    tail(s+t) is the top piece; tail(j) = piece(j) + xn * tail(j+1), and
    tail(0) recovers the family itself.
    """
    if not 0 <= j <= s + t:
        raise ValueError(f"chain index j={j} outside 0..{s + t}")
    if family not in ("mixed", "corner"):
        raise ValueError(f"unknown family {family!r}")
    xn = variable(n, n)
    tail = chain_piece(n, s, t, s + t, family)
    for d in range(s + t - 1, j - 1, -1):
        tail = chain_piece(n, s, t, d, family) + xn * tail
    return tail


def mixed_chain_pairs(s: int, t: int) -> list[tuple[int, int]]:
    """Parameter pairs, one per mixed-chain step, of the corner families the
    steps reduce to (ambient drops by one).  Needs t >= 1; length is s + t."""
    if t < 1:
        raise ValueError("mixed chain pairs need t >= 1")
    return [(j, t) for j in range(s + 1)] + [(s + j, t - j) for j in range(1, t)]


def corner_chain_pairs(s: int, t: int, strict: bool = False) -> list[tuple[int, int]]:
    """Parameter pairs, one per corner-chain step, of the mixed families the
    steps reduce to.  Needs t >= 1.

    The default enumerates the chain steps directly (length s + t).  With
    strict=True the closed-form multiset is used instead; the two agree for
    s >= 1 but strict gives one extra (0,0) at s = 0, which the corner family
    itself refutes (it has t+1 minimal generators, not t+2).
    """
    if t < 1:
        raise ValueError("corner chain pairs need t >= 1")
    if strict:
        if s <= t:
            return ([(0, j) for j in range(s)] + [(0, s)] * (t - s + 1)
                    + [(j, s - j) for j in range(1, s)])
        return ([(0, j) for j in range(t + 1)]
                + [(j, t) for j in range(1, s - t + 1)]
                + [(s - t + j, t - j) for j in range(1, t)])
    pairs = []
    for d in range(s + t):
        if d < min(s, t):
            pairs.append((0, d))
        elif s <= d < t:
            pairs.append((0, s))
        elif t <= d < s:
            pairs.append((d - t, t))
        else:
            pairs.append((d - t, s + t - d))
    return pairs


def support_envelope(s: int, t: int) -> set[tuple[int, int]]:
    """All pairs the two-step composition of chain reductions can reach."""
    if s < 0 or t < 0:
        raise ValueError("need s, t >= 0")
    half = (s + t) // 2
    pairs = {(0, 0)}
    for v in range(1, min(half, t) + 1):
        for u in range(s + t - 2 * v + 1):
            pairs.add((u, v))
    return pairs
