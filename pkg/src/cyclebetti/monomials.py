"""Exact monomial and monomial-ideal arithmetic.

Monomials are exponent vectors over a fixed ambient variable count n,
printed as ``x1^2*x3`` (unit is ``1``).  Ideals always carry their canonical
minimal generating set: no generator divides another, and generators are
sorted by (total degree, exponent vector), so structural equality is ideal
equality.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

# Exponents are plain Python ints; anything past this bound is a bug
# upstream, not a value we silently carry.
MAX_EXPONENT = 2**31


class AmbientMismatchError(ValueError):
    """Raised when two operands live in different polynomial rings."""


class Monomial:
    """An exponent vector; immutable, hashable, ambient = len(exponents)."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e > MAX_EXPONENT:
                raise ValueError(f"exponent {e} exceeds 2^31")
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def ambient(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> tuple[int, ...]:
        """0-based indices of variables dividing the monomial."""
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def _check(self, other: "Monomial"):
        if self.ambient != other.ambient:
            raise AmbientMismatchError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other):
        if isinstance(other, Monomial):
            self._check(other)
            return Monomial(a + b for a, b in zip(self.exponents, other.exponents))
        if isinstance(other, MonomialIdeal):
            return other * self
        return NotImplemented

    def __pow__(self, e: int) -> "Monomial":
        if e < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(a * e for a in self.exponents)

    def extend(self, ambient: int) -> "Monomial":
        """Flat extension into a larger ring (pad with zero exponents)."""
        if ambient < self.ambient:
            raise ValueError("cannot shrink ambient")
        return Monomial(self.exponents + (0,) * (ambient - self.ambient))

    def sort_key(self):
        return (self.degree, self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __str__(self):
        parts = [
            f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
            for i, e in enumerate(self.exponents) if e > 0
        ]
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self.exponents!r})"


def variable(i: int, ambient: int) -> Monomial:
    """The monomial x_i (1-based) in the given ambient."""
    if not 1 <= i <= ambient:
        raise ValueError(f"variable index {i} outside 1..{ambient}")
    return Monomial(1 if j == i - 1 else 0 for j in range(ambient))


def one(ambient: int) -> Monomial:
    return Monomial((0,) * ambient)


_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")


def monomial_exponents(text: str) -> dict[int, int]:
    """Parse ``x1^2*x3`` into {1: 2, 3: 1}; ``1`` parses to {}."""
    text = text.strip()
    if text == "1":
        return {}
    powers: dict[int, int] = {}
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if not m:
            raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
        idx, exp = int(m.group(1)), int(m.group(2) or 1)
        if idx < 1:
            raise ValueError(f"variable index must be >= 1 in {text!r}")
        powers[idx] = powers.get(idx, 0) + exp
    return powers


def parse_monomial(text: str, ambient: int) -> Monomial:
    powers = monomial_exponents(text)
    if powers and max(powers) > ambient:
        raise ValueError(f"monomial {text!r} does not fit in {ambient} variables")
    return Monomial(powers.get(i + 1, 0) for i in range(ambient))


def minimalize(gens: Sequence[Monomial]) -> tuple[Monomial, ...]:
    """Drop duplicates and every monomial divisible by another; sort canonically."""
    unique = sorted(set(gens), key=Monomial.sort_key)
    kept: list[Monomial] = []
    for g in unique:
        # any divisor of g that survives minimalization has degree <= deg g,
        # so checking against already-kept monomials suffices
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal in canonical form.

    The zero ideal has no generators; the unit ideal has the single
    generator 1.  Operators: ``*`` product, ``**`` power, ``+`` sum,
    ``&`` intersection.
    """

    __slots__ = ("ambient", "gens")

    def __init__(self, gens: Iterable[Monomial], ambient: int | None = None):
        gens = tuple(gens)
        if ambient is None:
            if not gens:
                raise ValueError("ambient required for the zero ideal")
            ambient = gens[0].ambient
        for g in gens:
            if g.ambient != ambient:
                raise AmbientMismatchError(
                    f"generator {g} has ambient {g.ambient}, expected {ambient}")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "gens", minimalize(gens))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def zero(cls, ambient: int) -> "MonomialIdeal":
        return cls((), ambient)

    @classmethod
    def unit(cls, ambient: int) -> "MonomialIdeal":
        return cls((one(ambient),), ambient)

    @classmethod
    def parse(cls, text: str, ambient: int | None = None) -> "MonomialIdeal":
        """Parse the text form ``(x1*x2, x2^2)``."""
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError("ideal text form must be parenthesized")
        inner = text[1:-1].strip()
        if not inner:
            return cls.zero(ambient if ambient is not None else 1)
        parts = [p.strip() for p in inner.split(",")]
        if ambient is None:
            ambient = max((max(monomial_exponents(p), default=0) for p in parts),
                          default=1) or 1
        return cls([parse_monomial(p, ambient) for p in parts], ambient)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def contains(self, m: Monomial) -> bool:
        """Membership: some minimal generator divides m."""
        return any(g.divides(m) for g in self.gens)

    def is_subideal_of(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def min_degree(self) -> int:
        if self.is_zero():
            raise ValueError("zero ideal has no generator degree")
        return self.gens[0].degree

    def _check(self, other: "MonomialIdeal"):
        if self.ambient != other.ambient:
            raise AmbientMismatchError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __mul__(self, other):
        if isinstance(other, MonomialIdeal):
            self._check(other)
            return MonomialIdeal(
                (a * b for a in self.gens for b in other.gens), self.ambient)
        if isinstance(other, Monomial):
            return MonomialIdeal((other * g for g in self.gens), self.ambient)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, t: int) -> "MonomialIdeal":
        if t < 0:
            raise ValueError("negative ideal power")
        result = MonomialIdeal.unit(self.ambient)
        for _ in range(t):
            result = result * self
        return result

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.gens + other.gens, self.ambient)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection via pairwise lcms of the generators."""
        self._check(other)
        return MonomialIdeal(
            {a.lcm(b) for a in self.gens for b in other.gens}, self.ambient)

    def embed(self, ambient: int) -> "MonomialIdeal":
        """Flat extension of the ideal into a larger ring."""
        return MonomialIdeal((g.extend(ambient) for g in self.gens), ambient)

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.ambient == other.ambient and self.gens == other.gens)

    def __hash__(self):
        return hash((self.ambient, self.gens))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal({str(self)}, ambient={self.ambient})"
