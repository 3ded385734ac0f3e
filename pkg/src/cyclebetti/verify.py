"""Cross-route validation: splitting audits and formula/recursion/oracle sweeps.

Every comparison is exact integer equality; there are no tolerances
anywhere.  Results come back as Report records that serialize to JSON
lines, one per line, schema {case, status, witness?, millis}.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass

from . import families, formulas, recursion
from .monomials import Monomial, MonomialIdeal, variable
from .oracle import (BettiTable, DEFAULT_LATTICE_CAP, DEFAULT_PRIME,
                     graded_betti)


@dataclass
class Report:
    case: str
    status: str  # "match" | "mismatch" | "skipped"
    witness: dict | None = None
    millis: int = 0

    @property
    def ok(self) -> bool:
        return self.status != "mismatch"

    def to_json(self) -> str:
        payload: dict = {"case": self.case, "status": self.status}
        if self.witness is not None:
            payload["witness"] = self.witness
        payload["millis"] = self.millis
        return json.dumps(payload)


def _timed(case: str, check) -> Report:
    """Run check() -> witness-or-None and wrap the outcome."""
    start = time.perf_counter()
    witness = check()
    millis = int((time.perf_counter() - start) * 1000)
    status = "match" if witness is None else "mismatch"
    return Report(case, status, witness, millis)


# ---------------------------------------------------------------------------
# Oracle access with caching (ideals are immutable and hashable).
# ---------------------------------------------------------------------------

_table_cache: dict[tuple, BettiTable] = {}


def oracle_table(ideal: MonomialIdeal, char: int = DEFAULT_PRIME,
                 cap: int = DEFAULT_LATTICE_CAP, threads: int = 1) -> BettiTable:
    key = (ideal, char, cap)
    table = _table_cache.get(key)
    if table is None:
        table = _table_cache[key] = graded_betti(ideal, char, cap, threads)
    return table


def clear_oracle_cache() -> None:
    _table_cache.clear()


# ---------------------------------------------------------------------------
# Family cases and per-route total Betti sequences.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyCase:
    """A concrete family member: kind in {"long-power", "mixed", "corner"}.

    long-power is long(n)^t; mixed is reduced(n)^s * full(n)^t (t = 0 gives
    the plain reduced power); corner is reduced(n)^s * (x1,xn)^t.
    """
    kind: str
    n: int
    s: int = 0
    t: int = 0

    def label(self) -> str:
        if self.kind == "long-power":
            return f"long-power(n={self.n},t={self.t})"
        return f"{self.kind}(n={self.n},s={self.s},t={self.t})"

    def ideal(self) -> MonomialIdeal:
        if self.kind == "long-power":
            return families.long_path_ideal(self.n) ** self.t
        if self.kind == "mixed":
            return families.mixed_power(self.n, self.s, self.t)
        if self.kind == "corner":
            return families.corner_power(self.n, self.s, self.t)
        raise ValueError(f"unknown family kind {self.kind!r}")

    def initial_degree(self) -> int:
        if self.kind == "long-power":
            return (self.n - 1) * self.t
        if self.kind == "mixed":
            return (self.n - 2) * (self.s + self.t)
        return (self.n - 2) * self.s + self.t

    def closed_pd_reg(self) -> tuple[int, int] | None:
        if self.kind == "long-power":
            return formulas.long_path_pd_reg(self.n, self.t)
        if self.kind == "mixed":
            if self.t == 0:
                return formulas.reduced_power_pd_reg(self.n, self.s)
            return formulas.short_path_pd_reg(self.n, self.s, self.t)
        return None


def _strip(seq: list[int]) -> list[int]:
    while seq and seq[-1] == 0:
        seq.pop()
    return seq


def route_totals(case: FamilyCase, route: str, char: int = DEFAULT_PRIME,
                 strict_delta: bool = False, cap: int = DEFAULT_LATTICE_CAP,
                 threads: int = 1) -> list[int]:
    """Total Betti sequence (i = 0, 1, ...) of the case by the given route.

    Routes: "oracle", "closed", "recursion", "series".  Projective dimension
    of an ideal is below the ambient variable count, so scanning i through
    the ambient is exhaustive for the non-oracle routes.
    """
    n, s, t = case.n, case.s, case.t
    if route == "oracle":
        return _strip(oracle_table(case.ideal(), char, cap, threads).totals())
    span = range(n + 1)
    if case.kind == "long-power":
        if route == "closed":
            vals = [formulas.long_path_betti(n, t, i) for i in span]
        elif route == "recursion":
            vals = [recursion.long_path_rec(n, 0, t, i) for i in span]
        elif route == "series":
            vals = [formulas.series_betti(n, t, i) for i in span]
        else:
            raise ValueError(f"route {route!r} not applicable to {case.kind}")
    elif case.kind == "mixed":
        if route == "closed":
            vals = [formulas.short_path_betti(n, s, t, i) for i in span]
        elif route == "recursion":
            vals = [recursion.mixed_rec(n, s, t, i, strict_delta) for i in span]
        else:
            raise ValueError(f"route {route!r} not applicable to {case.kind}")
    elif case.kind == "corner":
        if route == "recursion":
            vals = [recursion.corner_rec(n, s, t, i, strict_delta) for i in span]
        else:
            raise ValueError(f"route {route!r} not applicable to corner families")
    else:
        raise ValueError(f"unknown family kind {case.kind!r}")
    return _strip(vals)


def _compare_totals(pairs):
    """pairs: list of (route_name, totals). Witness on first disagreement."""
    ref_name, ref = pairs[0]
    for name, totals in pairs[1:]:
        width = max(len(ref), len(totals))
        for i in range(width):
            a = ref[i] if i < len(ref) else 0
            b = totals[i] if i < len(totals) else 0
            if a != b:
                return {"i": i, "routes": [ref_name, name],
                        "values": [str(a), str(b)]}
    return None


def cross_validate(cases, routes, chars=(DEFAULT_PRIME,), strict_delta=False,
                   cap=DEFAULT_LATTICE_CAP, threads=1) -> list[Report]:
    """Compare total Betti sequences across routes, case by case.

    The oracle route is expanded once per characteristic and additionally
    audited for single-row linearity and for pd/reg against the closed
    formulas (when the case has them).
    """
    reports = []
    for case in cases:
        expanded = []
        for route in routes:
            if route == "oracle":
                expanded.extend(("oracle", p) for p in chars)
            else:
                expanded.append((route, None))

        def compute():
            pairs = []
            for route, p in expanded:
                name = f"oracle(p={p})" if route == "oracle" else route
                pairs.append((name, route_totals(
                    case, route, char=p or DEFAULT_PRIME,
                    strict_delta=strict_delta, cap=cap, threads=threads)))
            return _compare_totals(pairs)

        reports.append(_timed(f"{case.label()} routes={'/'.join(r for r, _ in expanded)}",
                              compute))

        for route, p in expanded:
            if route != "oracle":
                continue
            reports.append(_timed(f"{case.label()} oracle(p={p}) audit",
                                  lambda case=case, p=p: _audit_oracle(case, p, cap, threads)))
    return reports


def _audit_oracle(case: FamilyCase, char, cap, threads):
    """Single-row linearity plus pd/reg against the closed formulas."""
    table = oracle_table(case.ideal(), char, cap, threads)
    degree = case.initial_degree()
    if table.rows() != [degree]:
        return {"aspect": "linearity", "rows": table.rows(), "expected_row": degree}
    closed = case.closed_pd_reg()
    if closed is not None:
        if (table.pd(), table.reg()) != closed:
            return {"aspect": "pd/reg", "oracle": [table.pd(), table.reg()],
                    "closed": list(closed)}
    return None


# ---------------------------------------------------------------------------
# Betti-splitting audit.
# ---------------------------------------------------------------------------

def check_splitting(total: MonomialIdeal, left: MonomialIdeal, right: MonomialIdeal,
                    char: int = DEFAULT_PRIME, cap: int = DEFAULT_LATTICE_CAP,
                    threads: int = 1, label: str | None = None) -> Report:
    """Audit the splitting identity beta_i(total) = beta_i(left) + beta_i(right)
    + beta_{i-1}(left & right), plus the pd and reg max-formulas it implies.
    """
    if total != left + right:
        raise ValueError("not a decomposition: total != left + right")
    case = label or f"split {total_label(total, left, right)}"

    def compute():
        tp = oracle_table(total, char, cap, threads)
        tl = oracle_table(left, char, cap, threads)
        tr = oracle_table(right, char, cap, threads)
        tm = oracle_table(left & right, char, cap, threads)
        top = max(tp.pd(), tl.pd(), tr.pd(), tm.pd() + 1)
        for i in range(top + 1):
            want = tl.total(i) + tr.total(i) + (tm.total(i - 1) if i >= 1 else 0)
            got = tp.total(i)
            if got != want:
                return {"i": i, "values": [str(got), str(want)]}
        if tp.pd() != max(tl.pd(), tr.pd(), tm.pd() + 1):
            return {"aspect": "pd", "values":
                    [tp.pd(), max(tl.pd(), tr.pd(), tm.pd() + 1)]}
        if tp.reg() != max(tl.reg(), tr.reg(), tm.reg() - 1):
            return {"aspect": "reg", "values":
                    [tp.reg(), max(tl.reg(), tr.reg(), tm.reg() - 1)]}
        return None

    return _timed(f"{case} (p={char})", compute)


def total_label(total, left, right) -> str:
    def short(ideal):
        text = str(ideal)
        return text if len(text) <= 40 else f"<{len(ideal)} gens, deg {ideal.min_degree()}>"
    return f"{short(total)} = {short(left)} + {short(right)}"


# ---------------------------------------------------------------------------
# Named suites.  Defaults encode the acceptance criteria.
# ---------------------------------------------------------------------------

EXAMPLE_ROW_N = 27
EXAMPLE_ROW_T = 4
EXAMPLE_ROW_TOTALS = (27405, 98658, 136332, 89181, 27405, 3654, 378, 27, 1)
EXAMPLE_ROW_PD_REG = (8, 100)

LONG_DESK_SET = tuple((n, t) for n in (3, 4, 5) for t in (1, 2, 3)) + ((6, 1), (6, 2))
SHORT_DESK_SET = ((4, 1), (4, 2), (5, 1), (5, 2), (6, 1), (6, 2), (7, 1))


def suite_example_row(**opt) -> list[Report]:
    n, t = EXAMPLE_ROW_N, EXAMPLE_ROW_T

    def compute():
        pd, reg = formulas.short_path_pd_reg(n, 0, t)
        if (pd, reg) != EXAMPLE_ROW_PD_REG:
            return {"aspect": "pd/reg", "values": [[pd, reg], list(EXAMPLE_ROW_PD_REG)]}
        got = tuple(formulas.short_path_betti(n, 0, t, i) for i in range(pd + 1))
        if got != EXAMPLE_ROW_TOTALS:
            return {"aspect": "totals", "values": [list(map(str, got)),
                                                   list(map(str, EXAMPLE_ROW_TOTALS))]}
        if formulas.short_path_betti(n, 0, t, pd + 1) != 0:
            return {"aspect": "vanishing", "i": pd + 1}
        return None

    return [_timed(f"example row short-power(n={n},t={t})", compute)]


def suite_long_path_oracle(chars=(2, DEFAULT_PRIME), **opt) -> list[Report]:
    cases = [FamilyCase("long-power", n, 0, t) for n, t in LONG_DESK_SET]
    return cross_validate(cases, ["closed", "oracle"], chars=chars, **_sweep_opt(opt))


def suite_short_path_oracle(chars=(DEFAULT_PRIME,), **opt) -> list[Report]:
    cases = [FamilyCase("mixed", n, 0, t) for n, t in SHORT_DESK_SET]
    return cross_validate(cases, ["closed", "oracle"], chars=chars, **_sweep_opt(opt))


def suite_main_identity(n_max=12, st_max=8, **opt) -> list[Report]:
    reports = []
    for n in range(2, n_max + 1):
        def compute(n=n):
            for s in range(st_max + 1):
                for t in range(st_max + 1):
                    for i in range(2 * (s + t) + 3):
                        a = recursion.mixed_rec(n, s, t, i)
                        b = formulas.short_path_betti(n, s, t, i)
                        if a != b:
                            return {"s": s, "t": t, "i": i,
                                    "values": [str(a), str(b)]}
            return None
        reports.append(_timed(
            f"main identity recursion==closed n={n} s,t<={st_max}", compute))
    return reports


def suite_three_route(n_max=10, t_max=8, chars=(DEFAULT_PRIME,), **opt) -> list[Report]:
    reports = []
    for n in range(2, n_max + 1):
        def compute(n=n):
            for t in range(1, t_max + 1):
                for i in range(n + 2):
                    rec = recursion.long_path_rec(n, 0, t, i)
                    gf = formulas.series_betti(n, t, i)
                    closed = formulas.long_path_betti(n, t, i)
                    if not rec == gf == closed:
                        return {"t": t, "i": i,
                                "values": [str(rec), str(gf), str(closed)]}
            return None
        reports.append(_timed(
            f"three-route long-power n={n} t<={t_max}", compute))
    cases = [FamilyCase("long-power", n, 0, t) for n, t in LONG_DESK_SET]
    for case in cases:
        for p in chars:
            reports.append(_timed(
                f"{case.label()} oracle(p={p}) audit",
                lambda case=case, p=p: _audit_oracle(
                    case, p, opt.get("cap", DEFAULT_LATTICE_CAP), opt.get("threads", 1))))
    return reports


def suite_splittings(char=DEFAULT_PRIME, **opt) -> list[Report]:
    cap = opt.get("cap", DEFAULT_LATTICE_CAP)
    threads = opt.get("threads", 1)
    reports = []

    # (a) splitting off the first generator of the long-path product
    for n in (4, 5):
        f1 = families.path_generator(n, 1, n - 1)
        below = families.long_path_ideal(n - 1).embed(n)
        here = families.long_path_ideal(n)
        for s in range(0, 4):
            for t in range(1, 4 - s):
                total = below ** s * here ** t
                left = below ** s * MonomialIdeal([f1 ** t], n)
                right = variable(n, n) * (below ** (s + 1) * here ** (t - 1))
                reports.append(check_splitting(
                    total, left, right, char, cap, threads,
                    label=f"long-power split n={n} s={s} t={t}"))

    # (b) every chain step of the mixed and corner decompositions
    for n in (4, 5):
        for s in range(0, 3):
            for t in range(0, 3):
                for family in ("mixed", "corner"):
                    for j in range(s + t):
                        piece = families.chain_piece(n, s, t, j, family)
                        rest = variable(n, n) * families.chain_tail(n, s, t, j + 1, family)
                        total = families.chain_tail(n, s, t, j, family)
                        reports.append(check_splitting(
                            total, piece, rest, char, cap, threads,
                            label=f"{family} chain split n={n} s={s} t={t} j={j}"))
                        reports.append(_timed(
                            f"{family} chain intersection n={n} s={s} t={t} j={j}",
                            lambda piece=piece, rest=rest, n=n: (
                                None if (piece & rest) == variable(n, n) * piece
                                else {"aspect": "intersection identity"})))

    # (c) splitting off the first generator of the stacked reduced product
    for n in (4, 5):
        f1 = families.path_generator(n, 1, n - 2)
        below = families.reduced_short_path_ideal(n - 1).embed(n)
        for s in range(0, 4):
            for t in range(1, 4 - s):
                total = families.stacked_reduced_power(n, s, t)
                left = below ** s * MonomialIdeal([f1 ** t], n)
                right = variable(n, n) * families.stacked_reduced_power(n, s + 1, t - 1)
                reports.append(check_splitting(
                    total, left, right, char, cap, threads,
                    label=f"stacked split n={n} s={s} t={t}"))
    return reports


def suite_residuals(seed=20240613, count=1000, **opt) -> list[Report]:
    rng = random.Random(seed)
    reports = []

    def sweep(name, draw, evaluate):
        def compute():
            for _ in range(count):
                args = draw()
                if evaluate(*args) != 0:
                    return {"args": list(args)}
            return None
        reports.append(_timed(name, compute))

    sweep("shift residual, recursion route",
          lambda: (rng.randint(4, 12), rng.randint(0, 8), rng.randint(0, 20)),
          lambda n, s, i: recursion.shift_residual(n, s, i, "recursion"))
    sweep("exchange residual, recursion route",
          lambda: (rng.randint(4, 12), rng.randint(0, 8), rng.randint(2, 8),
                   rng.randint(0, 24)),
          lambda n, s, t, i: recursion.exchange_residual(n, s, t, i, "recursion"))
    sweep("shift residual, closed route",
          lambda: (rng.randint(4, 16), rng.randint(0, 10), rng.randint(0, 24)),
          lambda n, s, i: recursion.shift_residual(n, s, i, "closed"))
    sweep("exchange residual, closed route",
          lambda: (rng.randint(4, 16), rng.randint(0, 10), rng.randint(2, 10),
                   rng.randint(0, 28)),
          lambda n, s, t, i: recursion.exchange_residual(n, s, t, i, "closed"))

    def binomial_residuals(n, m, s):
        binom = formulas.binomial
        yield binom(n + 1, s + 1) - binom(n, s) - binom(n, s + 1)
        yield (binom(n, m) - binom(n - 2, m - 2) - 2 * binom(n - 2, m - 1)
               - binom(n - 2, m))
        yield (sum(binom(n + j, m) for j in range(s + 1))
               - binom(n + s + 1, m + 1) + binom(n, m + 1))
        yield (sum(j * binom(n + j, m) for j in range(s + 1))
               - s * binom(n + s + 1, m + 1) + binom(n + s + 1, m + 2)
               - binom(n + 1, m + 2))

    sweep("binomial identities",
          lambda: (rng.randint(2, 60), rng.randint(0, 60), rng.randint(0, 60)),
          lambda n, m, s: sum(abs(r) for r in binomial_residuals(n, m, s)))
    return reports


def suite_delta_edge(char=DEFAULT_PRIME, **opt) -> list[Report]:
    """The corner-chain closed form over-counts at s = 0; the chain multiset
    is what the oracle confirms.  Both facts are asserted, so the discrepancy
    is a tested statement rather than a silent patch."""
    n, t = 4, 2
    corner = families.corner_power(n, 0, t)
    reports = []

    def compute_default():
        got = recursion.corner_rec(n, 0, t, 0)
        want = oracle_table(corner, char).total(0)
        return None if got == want == t + 1 else {"values": [str(got), str(want)]}

    def compute_strict():
        got = recursion.corner_rec(n, 0, t, 0, strict_delta=True)
        want = oracle_table(corner, char).total(0)
        # the strict (closed-form) multiset must over-count by exactly one
        return None if got == t + 2 and want == t + 1 else \
            {"values": [str(got), str(want)]}

    reports.append(_timed(f"delta edge default corner(n={n},t={t})", compute_default))
    reports.append(_timed(f"delta edge strict over-counts corner(n={n},t={t})",
                          compute_strict))
    return reports


def suite_support_facts(**opt) -> list[Report]:
    reports = []

    def marginal_multiplicity():
        for total in range(2, 13):
            for t in range(1, total + 1):
                s = total - t
                mult = recursion.composed_support(s, t)[(total - 2, 1)]
                if mult != 1:
                    return {"s": s, "t": t, "multiplicity": mult}
        return None

    def containment():
        for s in range(9):
            for t in range(1, 9):
                envelope = families.support_envelope(s, t)
                stray = set(recursion.composed_support(s, t)) - envelope
                if stray:
                    return {"s": s, "t": t, "outside": sorted(stray)[:3]}
        return None

    def pd_agreement():
        for n in range(2, 13):
            for total in range(1, 9):
                for t in range(1, total + 1):
                    s = total - t
                    rec = recursion.short_path_pd_rec(n, s, t)
                    closed = formulas.short_path_pd_reg(n, s, t)[0]
                    support = max(
                        (i for i in range(n + 1)
                         if formulas.short_path_betti(n, s, t, i) != 0), default=0)
                    if not rec == closed == support:
                        return {"n": n, "s": s, "t": t,
                                "values": [rec, closed, support]}
        return None

    reports.append(_timed("composed support multiplicity at (s+t-2, 1)",
                          marginal_multiplicity))
    reports.append(_timed("composed support inside envelope", containment))
    reports.append(_timed("pd recursion == closed == support", pd_agreement))
    return reports


SUITES = {
    "example-row": suite_example_row,
    "long-path-oracle": suite_long_path_oracle,
    "short-path-oracle": suite_short_path_oracle,
    "main-identity": suite_main_identity,
    "three-route": suite_three_route,
    "splittings": suite_splittings,
    "residuals": suite_residuals,
    "delta-edge": suite_delta_edge,
    "support-facts": suite_support_facts,
}


def _sweep_opt(opt: dict) -> dict:
    return {k: opt[k] for k in ("strict_delta", "cap", "threads") if k in opt}


def run_suite(name: str, **opt) -> list[Report]:
    """Run one named suite, or every suite for name == "all"."""
    if name == "all":
        reports = []
        for fn in SUITES.values():
            reports.extend(fn(**opt))
        return reports
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choices: {', '.join(SUITES)} or all")
    return SUITES[name](**opt)


def run_config(config: dict, **opt) -> list[Report]:
    """Run a config of the shape {"suites": [...]} and/or {"sweeps": [...]}.

    Each sweep gives a family kind, inclusive [lo, hi] ranges for its
    parameters, a route list, and optionally characteristics.
    """
    reports = []
    for name in config.get("suites", []):
        reports.extend(run_suite(name, **opt))
    for sweep in config.get("sweeps", []):
        kind = sweep["kind"]
        lo_n, hi_n = sweep.get("n", [2, 2])
        lo_s, hi_s = sweep.get("s", [0, 0])
        lo_t, hi_t = sweep.get("t", [0, 0])
        cases = [FamilyCase(kind, n, s, t)
                 for n in range(lo_n, hi_n + 1)
                 for s in range(lo_s, hi_s + 1)
                 for t in range(lo_t, hi_t + 1)]
        reports.extend(cross_validate(
            cases, sweep.get("routes", ["closed", "oracle"]),
            chars=tuple(sweep.get("chars", [DEFAULT_PRIME])), **_sweep_opt(opt)))
    return reports
