"""Ground-truth graded Betti numbers of arbitrary monomial ideals.

The multigraded Betti number at a multidegree b equals the dimension of a
reduced homology group of the upper Koszul complex at b, and nonzero values
only occur at joins of generator multidegrees.  So: enumerate the lcm
lattice, build each upper Koszul complex, take ranks of boundary matrices
over a prime field, and accumulate into a graded table.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .monomials import Monomial, MonomialIdeal

DEFAULT_PRIME = 32003
DEFAULT_LATTICE_CAP = 200_000


class LatticeCapError(RuntimeError):
    """lcm lattice grew past the configured cap; fail loudly, never degrade."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def lcm_lattice(ideal: MonomialIdeal, cap: int = DEFAULT_LATTICE_CAP) -> list[tuple[int, ...]]:
    """All joins (componentwise maxima) of nonempty sets of generator degrees.

    Returned sorted, so iteration order is deterministic.  Raises
    LatticeCapError beyond `cap` elements.
    """
    if ideal.is_zero() or ideal.is_unit():
        raise ValueError("lcm lattice needs a nonzero, non-unit ideal")
    gens = [g.exponents for g in ideal.gens]
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for b in frontier:
            for g in gens:
                join = tuple(map(max, b, g))
                if join not in lattice:
                    lattice.add(join)
                    fresh.add(join)
                    if len(lattice) > cap:
                        raise LatticeCapError(
                            f"lcm lattice exceeds cap of {cap} elements")
        frontier = fresh
    return sorted(lattice)


@dataclass
class SimplicialComplex:
    """Faces grouped by dimension; each face a sorted tuple of vertex indices.

    The empty face lives in dimension -1.  A void complex has no faces at
    all (not even the empty one).
    """
    vertices: tuple[int, ...]
    faces: dict[int, list[tuple[int, ...]]]

    def is_void(self) -> bool:
        return not self.faces

    def face_counts(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in self.faces.items()}


def _koszul_faces(gen_rows: np.ndarray, bexp: tuple[int, ...]) -> dict[int, list[tuple[int, ...]]]:
    support = [v for v, e in enumerate(bexp) if e > 0]
    b_arr = np.asarray(bexp, dtype=np.int64)
    faces: dict[int, list[tuple[int, ...]]] = {}
    for size in range(len(support) + 1):
        level = []
        for subset in combinations(support, size):
            q = b_arr.copy()
            for v in subset:
                q[v] -= 1
            if bool((gen_rows <= q).all(axis=1).any()):
                level.append(subset)
        if level:
            faces[size - 1] = level
    return faces


def upper_koszul(ideal: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    """Upper Koszul complex of the ideal at multidegree b.

    Vertices are the support of b; a squarefree subset is a face when the
    quotient monomial still lies in the ideal.  Void when b itself does not.
    """
    if ideal.ambient != b.ambient:
        raise ValueError("ambient mismatch between ideal and multidegree")
    gen_rows = np.array([g.exponents for g in ideal.gens], dtype=np.int64)
    if gen_rows.size == 0:
        gen_rows = gen_rows.reshape(0, ideal.ambient)
    return SimplicialComplex(
        vertices=tuple(b.support),
        faces=_koszul_faces(gen_rows, b.exponents),
    )


def _rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank over GF(p) by dense Gaussian elimination."""
    a = np.array(matrix % p, dtype=np.int64)
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if a[r, col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            a[[rank, pivot]] = a[[pivot, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = np.nonzero(a[rank + 1:, col])[0]
        if below.size:
            rows = below + rank + 1
            a[rows] = (a[rows] - np.outer(a[rows, col], a[rank])) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def homology_dims(cx: SimplicialComplex, p: int = DEFAULT_PRIME) -> list[int]:
    """Dimensions of reduced homology over GF(p), starting at degree -1.

    Entry k of the result is dim of reduced H_(k-1).  Conventions: the void
    complex gives [], and the complex whose only face is the empty face has
    reduced H_(-1) of dimension 1.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if cx.is_void():
        return []
    index = {d: {f: j for j, f in enumerate(fs)} for d, fs in cx.faces.items()}
    top = max(cx.faces)
    ranks: dict[int, int] = {}
    for d in range(0, top + 1):
        upper = cx.faces.get(d, [])
        lower = index.get(d - 1, {})
        if not upper or not lower:
            continue
        # boundary drops vertices in increasing position with alternating signs
        m = np.zeros((len(lower), len(upper)), dtype=np.int64)
        for j, face in enumerate(upper):
            for k in range(len(face)):
                sub = face[:k] + face[k + 1:]
                m[lower[sub], j] = 1 if k % 2 == 0 else p - 1
        ranks[d] = _rank_mod_p(m, p)
    dims = []
    for d in range(-1, top + 1):
        n_faces = len(cx.faces.get(d, []))
        dims.append(n_faces - ranks.get(d, 0) - ranks.get(d + 1, 0))
    return dims


@dataclass
class BettiTable:
    """Finite map (homological index i, total degree j) -> count."""
    entries: dict[tuple[int, int], int]
    ambient: int
    char: int | None = None

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    @classmethod
    def from_totals(cls, totals, initial_degree: int, ambient: int,
                    char: int | None = None) -> "BettiTable":
        """Table of a linear resolution: row j - i = initial_degree."""
        return cls({(i, i + initial_degree): v for i, v in enumerate(totals) if v},
                   ambient, char)

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.pd() + 1)]

    def pd(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table")
        return max(i for i, _ in self.entries)

    def reg(self) -> int:
        if not self.entries:
            raise ValueError("empty Betti table")
        return max(j - i for i, j in self.entries)

    def rows(self) -> list[int]:
        """Degree rows j - i carrying a nonzero entry."""
        return sorted({j - i for i, j in self.entries})

    def is_single_row(self) -> bool:
        return len(self.rows()) == 1

    def graded(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def sorted_entries(self) -> list[tuple[int, int, int]]:
        return [(i, j, self.entries[(i, j)]) for i, j in sorted(self.entries)]

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def shifted(self, by: int) -> "BettiTable":
        return BettiTable({(i, j + by): v for (i, j), v in self.entries.items()},
                          self.ambient, self.char)


def graded_betti(ideal: MonomialIdeal, p: int = DEFAULT_PRIME,
                 cap: int = DEFAULT_LATTICE_CAP, threads: int = 1) -> BettiTable:
    """Full graded Betti table of a nonzero, non-unit monomial ideal over GF(p).

    Per-multidegree work is independent; with threads > 1 it runs on a
    thread pool, merged in lattice order so the result is identical to the
    single-threaded one.
    """
    lattice = lcm_lattice(ideal, cap)
    gen_rows = np.array([g.exponents for g in ideal.gens], dtype=np.int64)

    def dims_at(bexp):
        support = tuple(v for v, e in enumerate(bexp) if e > 0)
        faces = _koszul_faces(gen_rows, bexp)
        return homology_dims(SimplicialComplex(support, faces), p)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            all_dims = list(pool.map(dims_at, lattice))
    else:
        all_dims = [dims_at(b) for b in lattice]

    entries: dict[tuple[int, int], int] = {}
    for bexp, dims in zip(lattice, all_dims):
        degree = sum(bexp)
        for i, h in enumerate(dims):
            if h:
                entries[(i, degree)] = entries.get((i, degree), 0) + h
    return BettiTable(entries, ideal.ambient, p)
