# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
The six commands. Each builds a typed payload, wraps it into an `OutputRecord` and decides the
exit code; rendering is left to `render`.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from .angles import parse_angle
from .. import euler, oracle, spectrum
from ..arith import PiFraction
from ..bootstrap.config import ConfigurationStruct
from ..contracts import errors
from ..contracts.dtos.asymptotics import AsymptoticRecord, AsymptoticsPayload
from ..contracts.dtos.check import VerifyPayload
from ..contracts.dtos.chi import (ChiPayload, ContributionRecord, OmegaEntryRecord, OmegaPayload,
                                  PositionRecord)
from ..contracts.dtos.common.base import OutputRecord
from ..contracts.dtos.oracle import OracleLevelRecord, OraclePayload, OracleStratumRecord
from ..contracts.dtos.spectrum import FractionRecord, LevelRecord, SpectrumPayload, StratumRecord
from ..contracts.logger import Logger
from ..spectrum import CriticalStratum
from ..spectrum.asymptotics import asymptotics_table
from ..verify import VerifyContext, run_suite


@dataclass
class CommandResult:
    """
    The outcome of one command.

    Attributes:
        record (OutputRecord): The schema-versioned record.
        payload (Any): The typed payload the record was built from, for plain and csv rendering.
        exit_code (int): 0, or 1 when a comparison inside the command failed.
    """
    record: OutputRecord
    payload: Any
    exit_code: int = errors.EXIT_OK


def _result(command: str, n: int, payload: Any, passed: bool = True) -> CommandResult:
    record = OutputRecord(command=command, n=n, payload=payload.to_dict())
    return CommandResult(record=record, payload=payload,
                         exit_code=errors.EXIT_OK if passed else errors.EXIT_VERIFICATION_FAILED)


def fraction_record(value: PiFraction) -> FractionRecord:
    return FractionRecord(num=value.num, den=value.den)


def stratum_record(item: CriticalStratum) -> StratumRecord:
    return StratumRecord(alpha=item.pair.alpha, beta=item.pair.beta,
                         value=fraction_record(item.value), count=str(item.count),
                         index=item.index)


def cmd_spectrum(n: int) -> CommandResult:
    """
    One record per level with its strata, plus Φ(n), |Uₙ| and ψ(n).
    """
    built = spectrum.build_spectrum(n)
    payload = SpectrumPayload(
        levels=[LevelRecord(value=fraction_record(level.value),
                            strata=[stratum_record(item) for item in level.strata])
                for level in built.levels],
        phi=str(spectrum.phi_capital(n)),
        critical_points=str(spectrum.count_critical_points(n)),
        psi=str(spectrum.psi(n)))
    return _result("spectrum", n, payload)


def cmd_chi(n: int, a_text: str, snap_den: Optional[int], tolerance: Fraction,
            logger: Logger) -> CommandResult:
    """
    χ(Mₙ(a)) with the position of a and every increment of the descent.
    """
    a = parse_angle(a_text, snap_den, tolerance)
    result = euler.chi(n, a, logger)
    position = result.position
    payload = ChiPayload(
        a=fraction_record(a),
        chi=str(result.chi),
        position=PositionRecord(kind=position.kind.value, interval=position.interval,
                                value=fraction_record(position.value)
                                if position.value is not None else None),
        contributions=[ContributionRecord(stratum=stratum_record(item.stratum),
                                          increment=str(item.increment), landing=item.landing)
                       for item in result.contributions])
    return _result("chi", n, payload)


def cmd_omega(n: int) -> CommandResult:
    """
    Ω₀, ..., Ω_{Φ(n)−1}, each flagged with the closed forms covering it. Exit code 1 when a
    closed form disagrees.
    """
    table = euler.omega_table(n)
    p, q = spectrum.edge_bounds(n)
    last = len(table) - 1
    entries = []
    for i, value in enumerate(table):
        covering = []
        agreed = True
        if i <= p:
            covering.append("low")
            agreed = agreed and euler.omega_closed_low(n, i) == value
        if last - i <= q:
            covering.append("high")
            agreed = agreed and euler.omega_closed_high(n, last - i) == value
        entries.append(OmegaEntryRecord(i=i, value=str(value),
                                        closed_form="+".join(covering) or None,
                                        matched=agreed if covering else None))
    passed = all(entry.matched is not False for entry in entries)
    return _result("omega", n, OmegaPayload(entries=entries, passed=passed), passed)


def verify_context(config: ConfigurationStruct, logger: Logger, n_max: Optional[int] = None,
                   oracle_max: Optional[int] = None, jobs: Optional[int] = None,
                   extended: bool = False) -> VerifyContext:
    """
    Resolves the suite bounds: explicit values win over the configuration, and --extended selects
    the extended brute-force and J_s bounds.
    """
    settings = config.Verify
    if oracle_max is None:
        oracle_max = settings.ExtendedOracleMax if extended else settings.OracleMax
    ctx = VerifyContext(
        n_max=settings.NMax if n_max is None else n_max,
        oracle_max=oracle_max,
        logger=logger,
        enumeration_max=settings.EnumerationMax,
        realization_max=settings.RealizationMax,
        j_set_max=settings.ExtendedJSetMax if extended else settings.JSetMax,
        jobs=config.Oracle.Jobs if jobs is None else jobs,
        budget=config.Oracle.Budget,
        partition_bits=config.Oracle.PartitionBits)
    spectrum.require_odd_n(ctx.n_max)
    spectrum.require_odd_n(ctx.oracle_max)
    if ctx.oracle_max > ctx.budget:
        raise errors.new_common_error(
            errors.ErrKind.LIMIT_EXCEEDED,
            f"--oracle-max {ctx.oracle_max} exceeds the brute-force budget {ctx.budget}")
    if ctx.jobs < 0:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"--jobs must be ≥ 0, got {ctx.jobs}")
    return ctx


def cmd_verify(ctx: VerifyContext, names: Optional[list[str]] = None) -> CommandResult:
    """
    Runs the suite; exit code 1 when any check fails.
    """
    payload: VerifyPayload = run_suite(ctx, names)
    return _result("verify", ctx.n_max, payload, payload.passed)


def cmd_oracle(n: int, jobs: int, budget: int, partition_bits: int,
               logger: Logger) -> CommandResult:
    """
    Brute-force counts per stratum and per level next to the spectrum's predictions; exit code 1
    on any difference.
    """
    if jobs < 0:
        raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                      f"--jobs must be ≥ 0, got {jobs}")
    observed = oracle.count_by_stratum(n, jobs, budget, partition_bits, logger)
    built = spectrum.build_spectrum(n)

    strata = []
    for item in built.strata():
        found = observed.get(item.pair, 0)
        strata.append(OracleStratumRecord(alpha=item.pair.alpha, beta=item.pair.beta,
                                          observed=str(found), predicted=str(item.count),
                                          matched=found == item.count))
    levels = []
    for level in built.levels:
        found = sum(observed.get(item.pair, 0) for item in level.strata)
        levels.append(OracleLevelRecord(value=fraction_record(level.value), observed=str(found),
                                        predicted=str(level.total_count()),
                                        matched=found == level.total_count()))
    total = sum(observed.values())
    predicted = spectrum.count_critical_points(n)
    passed = (total == predicted and set(observed) <= {item.pair for item in built.strata()}
              and all(record.matched for record in strata + levels))
    if not passed:
        logger.error(f"brute force for n={n} disagrees with the spectrum")
    payload = OraclePayload(total_observed=str(total), total_predicted=str(predicted),
                            strata=strata, levels=levels, passed=passed)
    return _result("oracle", n, payload, passed)


def cmd_asymptotics(n_max: int, samples: int) -> CommandResult:
    """
    Exact counts and asymptotic ratios for log-spaced odd n up to n_max.
    """
    rows = [AsymptoticRecord(n=row.n, critical_points=str(row.critical_points),
                             phi=str(row.levels), psi_capital=str(row.psi_capital),
                             ratio_critical_points=row.ratio_critical_points,
                             ratio_levels=row.ratio_levels,
                             ratio_psi_capital=row.ratio_psi_capital)
            for row in asymptotics_table(n_max, samples)]
    return _result("asymptotics", n_max, AsymptoticsPayload(rows=rows))
