# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The named cross-checks run by the `verify` command.

Every check receives a `VerifyContext`, compares two independent computations over its range of n,
and returns a `CheckRecord`. Checks register themselves in `CHECKS` through the `check` decorator;
the registration order is the report order.
"""

import time
from dataclasses import dataclass
from typing import Callable

from deepdiff import DeepDiff

from .. import arith, euler, oracle, spectrum
from ..spectrum import asymptotics
from ..contracts import errors
from ..contracts.dtos.check import CheckRecord
from ..contracts.logger import Logger

LEGENDRE_DIAGONAL_MAX = 1000
ASYMPTOTIC_N = 2001
ASYMPTOTIC_M = 500
DESCENT_SAMPLES = 16


@dataclass
class VerifyContext:
    """
    The bounds and resources of one suite run.

    Attributes:
        n_max (int): The largest odd n for the spectrum and Euler characteristic checks.
        oracle_max (int): The largest odd n for the brute-force checks.
        enumeration_max (int): The largest odd n whose configurations are all built as objects.
        realization_max (int): The largest odd n whose configurations are placed on the sphere.
        j_set_max (int): The largest s for the J_s/K_s comparison.
        jobs (int): Worker processes of the brute-force census, 0 for one per core.
        budget (int): The brute-force budget.
        partition_bits (int): The number of top word bits split across workers.
        logger (Logger): Progress goes to debug, failures to error.
    """
    n_max: int
    oracle_max: int
    logger: Logger
    enumeration_max: int = 15
    realization_max: int = 11
    j_set_max: int = 1000
    jobs: int = 1
    budget: int = oracle.DEFAULT_BUDGET
    partition_bits: int = oracle.DEFAULT_PARTITION_BITS

    def odd_n(self) -> range:
        return range(3, self.n_max + 1, 2)

    def oracle_n(self) -> range:
        return range(3, self.oracle_max + 1, 2)


class _Tally:
    """ Counts compared cases and keeps the first failure. """

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures = 0
        self.detail = ""

    def expect(self, condition: bool, detail: Callable[[], str]):
        self.cases += 1
        if not condition:
            self.failures += 1
            if not self.detail:
                self.detail = detail()

    def record(self) -> CheckRecord:
        detail = self.detail
        if self.failures > 1:
            detail = f"{detail} (and {self.failures - 1} more)"
        return CheckRecord(name=self.name, passed=self.failures == 0, cases=self.cases,
                           detail=detail)


CheckFunc = Callable[[VerifyContext, _Tally], None]
CHECKS: dict[str, CheckFunc] = {}


def check(name: str):
    """ Registers a check function under name. """
    def register(func: CheckFunc) -> CheckFunc:
        if name in CHECKS:
            raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                          f"check {name} registered twice")
        CHECKS[name] = func
        return func
    return register


def run_check(name: str, ctx: VerifyContext) -> CheckRecord:
    """
    Runs one registered check. An exception raised inside the check fails it with the exception's
    message instead of aborting the suite.
    """
    tally = _Tally(name)
    started = time.perf_counter()
    try:
        CHECKS[name](ctx, tally)
    except errors.CommonPolygonError as err:
        ctx.logger.error(f"check {name} raised: {err.debug_messages()}")
        tally.failures += 1
        tally.detail = tally.detail or f"raised {err.err_kind.value}: {err}"
    result = tally.record()
    elapsed = time.perf_counter() - started
    if result.passed:
        ctx.logger.debug(f"check {name} passed {result.cases} cases in {elapsed:.3f}s")
    else:
        ctx.logger.error(f"check {name} failed: {result.detail}")
    return result


@check("arith.pifraction-order")
def _pifraction_order(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        values = spectrum.build_spectrum(n).values
        for low, high in zip(values, values[1:]):
            tally.expect(low < high and low.as_fraction() < high.as_fraction()
                         and arith.compare(low, high) is arith.Ordering.LESS,
                         lambda: f"n={n}: {low} and {high} are out of order")


@check("arith.totient-paths")
def _totient_paths(ctx: VerifyContext, tally: _Tally):
    limit = 2 * ctx.n_max + 1
    sieve = arith.totient_sieve(limit)
    for k in range(1, limit + 1):
        by_gcd = arith.totient.totient_by_gcd(k)
        by_factors = arith.totient.totient_by_factorization(k)
        tally.expect(by_gcd == by_factors == sieve[k],
                     lambda: f"φ({k}): gcd {by_gcd}, factorization {by_factors}, sieve {sieve[k]}")


@check("arith.legendre-paths")
def _legendre_paths(ctx: VerifyContext, tally: _Tally):
    for s in range(1, (ctx.n_max - 1) // 2 + 1):
        x, d = 2 * ((s + 1) // 2) - 1, 4 * s + 2
        direct = arith.totient.legendre_totient_by_gcd(x, d)
        sieved = arith.totient.legendre_totient_by_inclusion_exclusion(x, d)
        tally.expect(direct == sieved,
                     lambda: f"φ({x}, {d}): direct {direct}, inclusion-exclusion {sieved}")


@check("arith.pascal")
def _pascal(ctx: VerifyContext, tally: _Tally):
    for n in range(1, 2 * ctx.n_max + 2):
        for k in range(-1, n + 2):
            left = arith.binomial(n, k)
            right = arith.binomial(n - 1, k - 1) + arith.binomial(n - 1, k)
            tally.expect(left == right, lambda: f"C({n},{k})={left} but Pascal gives {right}")


@check("arith.binomial-split")
def _binomial_split(ctx: VerifyContext, tally: _Tally):
    for m in range(1, (ctx.n_max - 1) // 2 + 1):
        for s in range(1, m + 1):
            left = arith.binomial(2 * m, m + s + 1) + arith.binomial(2 * m, m - s)
            right = arith.binomial(2 * m + 1, m - s)
            tally.expect(left == right,
                         lambda: f"m={m} s={s}: C(2m,m+s+1)+C(2m,m−s)={left}, C(2m+1,m−s)={right}")


@check("arith.legendre-diagonal")
def _legendre_diagonal(ctx: VerifyContext, tally: _Tally):
    for k in range(1, LEGENDRE_DIAGONAL_MAX + 1):
        diagonal = arith.legendre_totient(k, k)
        totient = arith.euler_totient(k)
        tally.expect(diagonal == totient, lambda: f"φ({k}, {k})={diagonal} but φ({k})={totient}")


@check("arith.psi-capital")
def _psi_capital(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        by_sum = arith.psi_capital(n)
        by_mobius = arith.psi_capital_mobius(n)
        tally.expect(by_sum == by_mobius,
                     lambda: f"n={n}: Ψ by totients {by_sum}, by Möbius {by_mobius}")


@check("spectrum.level-count")
def _level_count(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        counted = spectrum.build_spectrum(n).level_count()
        tally.expect(counted == spectrum.phi_capital(n),
                     lambda: f"n={n}: {counted} levels but Φ={spectrum.phi_capital(n)}")


@check("spectrum.critical-points")
def _critical_points(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        counted = spectrum.build_spectrum(n).total_count()
        closed = spectrum.count_critical_points(n)
        by_strata = spectrum.count_critical_points_by_strata(n)
        tally.expect(counted == closed == by_strata,
                     lambda: f"n={n}: spectrum {counted}, closed form {closed}, s-sum {by_strata}")


@check("spectrum.coprime-gamma")
def _coprime_gamma(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        pairs = spectrum.coprime_gamma(n)
        levels = spectrum.build_spectrum(n).levels
        tally.expect(len(pairs) == len(levels)
                     and sorted(pair.value for pair in pairs) == [item.value for item in levels],
                     lambda: f"n={n}: {len(pairs)} coprime pairs for {len(levels)} levels")


@check("spectrum.shared-level")
def _shared_level(ctx: VerifyContext, tally: _Tally):
    if ctx.n_max < 9:
        return
    built = spectrum.build_spectrum(9)
    level = built.levels[built.find(arith.reduce(2, 3)) - 1]
    found = {(item.pair.alpha, item.pair.beta): item.index for item in level.strata}
    tally.expect(found == {(3, 2): 4, (9, 6): 5},
                 lambda: f"n=9: level 2/3 carries {found}")


@check("spectrum.edge-values")
def _edge_values(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        built = spectrum.build_spectrum(n)
        for side in spectrum.EdgeSide:
            for i in spectrum.edge_range(n, side):
                if not 1 <= i <= built.level_count():
                    continue
                edge = spectrum.zeta_edge(n, side, i)
                pair = built.levels[i - 1].coprime_stratum().pair
                tally.expect(edge.value == built.zeta(i) and edge.pair == pair,
                             lambda: f"n={n} {side.value} ζ_{i}: {edge.value} {edge.pair}, "
                                     f"spectrum {built.zeta(i)} {pair}")


@check("spectrum.half-pi-position")
def _half_pi_position(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        position = spectrum.half_pi_position(n)
        expected = spectrum.phi_capital(n) - spectrum.psi(n)
        tally.expect(position.k == expected and len(spectrum.theta_set(n)) == spectrum.psi(n),
                     lambda: f"n={n}: k={position.k}, Φ−ψ={expected}")


@check("spectrum.index-parity")
def _index_parity(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        m = (n - 1) // 2
        for item in spectrum.build_spectrum(n).strata():
            tally.expect(item.index % 2 == (m - item.pair.s - 1) % 2,
                         lambda: f"n={n} {item.pair}: index {item.index} has the parity of β")


@check("spectrum.theta-set")
def _theta_set(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        theta = spectrum.theta_set(n)
        above = {value for value in spectrum.build_spectrum(n).values if value > spectrum.HALF}
        tally.expect(theta == above,
                     lambda: f"n={n}: θ has {len(theta)} values, {len(above)} levels lie above π/2")


@check("spectrum.asymptotics")
def _asymptotics(ctx: VerifyContext, tally: _Tally):
    levels = asymptotics.levels_ratio(ASYMPTOTIC_N, spectrum.phi_capital(ASYMPTOTIC_N))
    psi_value = arith.psi_capital_mobius(ASYMPTOTIC_N)
    psi_ratio = asymptotics.psi_capital_ratio(ASYMPTOTIC_N, psi_value)
    n = 2 * ASYMPTOTIC_M + 1
    points = asymptotics.critical_points_ratio(ASYMPTOTIC_M, spectrum.count_critical_points(n))
    tally.expect(0.95 <= levels <= 1.05, lambda: f"n={ASYMPTOTIC_N}: Φ ratio {levels:.4f}")
    tally.expect(0.95 <= psi_ratio <= 1.05, lambda: f"n={ASYMPTOTIC_N}: Ψ ratio {psi_ratio:.4f}")
    tally.expect(0.99 <= points <= 1.01, lambda: f"m={ASYMPTOTIC_M}: |U| ratio {points:.4f}")


@check("euler.sphere-seed")
def _sphere_seed(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        table = euler.omega_table(n)
        top = spectrum.build_spectrum(n).levels[-1].value
        above = arith.midpoint(top, arith.reduce(n, n + 1))
        value = euler.chi(n, above).chi
        tally.expect(table[-1] == 2 and value == euler.EMPTY_CHI,
                     lambda: f"n={n}: Ω_(Φ-1)={table[-1]}, χ above ζ_Φ = {value}")


@check("euler.ascent")
def _ascent(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        rebuilt = euler.ascent_check(n)
        table = euler.omega_table(n)
        tally.expect(rebuilt[:-1] == table and rebuilt[-1] == euler.EMPTY_CHI,
                     lambda: f"n={n}: ascent ends at {rebuilt[-1]}")


@check("euler.closed-low")
def _closed_low(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        table = euler.omega_table(n)
        p, _ = spectrum.edge_bounds(n)
        for i in range(min(p, len(table) - 1) + 1):
            closed = euler.omega_closed_low(n, i)
            tally.expect(closed == table[i],
                         lambda: f"n={n}: Ω_{i} closed {closed}, descent {table[i]}")


@check("euler.closed-high")
def _closed_high(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        table = euler.omega_table(n)
        _, q = spectrum.edge_bounds(n)
        for i in range(min(q, len(table) - 1) + 1):
            closed = euler.omega_closed_high(n, i)
            tally.expect(closed == table[-1 - i],
                         lambda: f"n={n}: Ω_(Φ-1-{i}) closed {closed}, descent {table[-1 - i]}")


@check("euler.recurrences")
def _recurrences(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        report = euler.recurrence_check(n)
        tally.expect(report.passed, lambda: f"n={n}: {report.mismatches[0]}")


@check("euler.example-values")
def _example_values(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        for label, (formula, descent) in euler.example_values(n).items():
            tally.expect(formula == descent,
                         lambda: f"n={n}: {label} formula {formula}, descent {descent}")


@check("euler.half-pi")
def _half_pi(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        value = euler.chi_half_pi(n)
        tally.expect(value == euler.chi(n, spectrum.HALF).chi, lambda: f"n={n}: χ(π/2)={value}")


@check("euler.floor-half-identity")
def _floor_half_identity(ctx: VerifyContext, tally: _Tally):
    for m in range(1, (ctx.n_max - 1) // 2 + 1):
        value = euler.floor_half_binomial_sum(m)
        tally.expect(value == 2 ** (2 * m - 2), lambda: f"m={m}: sum {value} ≠ 2^{2 * m - 2}")


def _sampled(count: int) -> list[int]:
    """ Every index for short tables, otherwise about DESCENT_SAMPLES spread over them. """
    step = max(1, count // DESCENT_SAMPLES)
    return sorted(set(range(0, count, step)) | {count - 1})


@check("euler.interval-constancy")
def _interval_constancy(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        built = spectrum.build_spectrum(n)
        table = euler.omega_table(n)
        for i in _sampled(len(table)):
            low, high = built.zeta(i), built.zeta(i + 1)
            samples = {euler.chi(n, arith.midpoint(low, high)).chi,
                       euler.chi(n, arith.mediant(low, high)).chi}
            tally.expect(samples == {table[i]},
                         lambda: f"n={n} interval {i}: samples give {samples}, table {table[i]}")


@check("euler.at-critical-half")
def _at_critical_half(ctx: VerifyContext, tally: _Tally):
    for n in ctx.odd_n():
        rows = euler.chi_table(n)
        for row in rows:
            tally.expect(2 * (row.at - row.above) == row.below - row.above,
                         lambda: f"n={n} at {row.value}: below {row.below}, at {row.at}, "
                                 f"above {row.above}")
        for i in _sampled(len(rows)):
            direct = euler.chi(n, rows[i].value).chi
            tally.expect(direct == rows[i].at,
                         lambda: f"n={n} at {rows[i].value}: χ={direct}, table {rows[i].at}")


@check("oracle.counts")
def _oracle_counts(ctx: VerifyContext, tally: _Tally):
    for n in ctx.oracle_n():
        observed = oracle.count_by_stratum(n, ctx.jobs, ctx.budget, ctx.partition_bits,
                                           ctx.logger)
        predicted = {item.pair: item.count for item in spectrum.build_spectrum(n).strata()}
        total = sum(observed.values())
        tally.expect(observed == predicted and total == spectrum.count_critical_points(n),
                     lambda: f"n={n}: {_diff(predicted, observed)}")


@check("oracle.levels")
def _oracle_levels(ctx: VerifyContext, tally: _Tally):
    for n in ctx.oracle_n():
        observed = oracle.count_by_level(n, ctx.jobs, ctx.budget, ctx.partition_bits,
                                         ctx.logger)
        levels = spectrum.build_spectrum(n).levels
        predicted = {level.value: level.total_count() for level in levels}
        tally.expect(observed == predicted, lambda: f"n={n}: {_diff(predicted, observed)}")


@check("oracle.index-and-signature")
def _oracle_index(ctx: VerifyContext, tally: _Tally):
    for n in range(3, min(ctx.oracle_max, ctx.enumeration_max) + 1, 2):
        strata = {item.pair: item for item in spectrum.build_spectrum(n).strata()}
        configs = oracle.enumerate_configs(n, ctx.budget)
        tally.expect(len(configs) == spectrum.count_critical_points(n),
                     lambda: f"n={n}: {len(configs)} configurations")
        for config in configs:
            item = strata[oracle.classify(config)]
            mu = oracle.index_mu(config)
            rho = oracle.signature_rho(config)
            tally.expect(mu == item.index and sum(rho) == n - 2
                         and config.realized_a == item.value,
                         lambda: f"n={n} {config.word} w={config.winding}: index {mu}, "
                                 f"expected {item.index}, signature {rho}")


@check("oracle.realization")
def _oracle_realization(ctx: VerifyContext, tally: _Tally):
    for n in range(3, min(ctx.oracle_max, ctx.realization_max) + 1, 2):
        for config in oracle.iter_configs(n, ctx.budget):
            report = oracle.check_realization(config)
            tally.expect(report.passed(),
                         lambda: f"n={n} {config.word} w={config.winding}: side error "
                                 f"{max(report.side_errors)}, winding error {report.winding_error}")


@check("oracle.j-set")
def _oracle_j_set(ctx: VerifyContext, tally: _Tally):
    for s in range(1, ctx.j_set_max + 1):
        result = oracle.check_j_set(s)
        tally.expect(result.passed, lambda: f"s={s}: {result}")


def _diff(predicted: dict, observed: dict) -> str:
    """ A readable difference of two count maps keyed by pairs or angles. """
    def as_text(counts: dict) -> dict:
        return {str(key): value for key, value in counts.items()}
    return DeepDiff(as_text(predicted), as_text(observed)).pretty() or "no difference"


def check_names() -> list[str]:
    return list(CHECKS)
