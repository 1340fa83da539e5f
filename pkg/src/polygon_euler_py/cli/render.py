# Copyright (C) 2024 IOTech Ltd
# SPDX-License-Identifier: Apache-2.0

"""
Renders a command result as a plain table, json or csv.

json is the `OutputRecord` with sorted keys. csv has one header row and one row per level, table
entry, check or sample; fractions are written "p/q" and counts as decimal integers.
"""

import csv
import io

from .commands import CommandResult
from ..contracts import errors
from ..contracts.dtos.asymptotics import AsymptoticsPayload
from ..contracts.dtos.check import VerifyPayload
from ..contracts.dtos.chi import ChiPayload, OmegaPayload
from ..contracts.dtos.oracle import OraclePayload
from ..contracts.dtos.spectrum import FractionRecord, SpectrumPayload


def fraction_text(value: FractionRecord) -> str:
    return f"{value.num}/{value.den}"


def _flag(passed: bool) -> str:
    return "ok" if passed else "FAILED"


def _spectrum_plain(n: int, payload: SpectrumPayload) -> list[str]:
    lines = [f"critical values of μ for n={n}"]
    for i, level in enumerate(payload.levels, start=1):
        strata = ", ".join(f"({item.alpha},{item.beta}) count={item.count} index={item.index}"
                           for item in level.strata)
        lines.append(f"  ζ_{i} = {fraction_text(level.value)}·π  {strata}")
    lines.append(f"Φ({n})={payload.phi}  |U_{n}|={payload.critical_points}  ψ({n})={payload.psi}")
    return lines


def _spectrum_rows(payload: SpectrumPayload) -> list[list]:
    rows = [["level", "value", "alpha", "beta", "count", "index"]]
    for i, level in enumerate(payload.levels, start=1):
        for item in level.strata:
            rows.append([i, fraction_text(level.value), item.alpha, item.beta, item.count,
                         item.index])
    return rows


def _chi_plain(n: int, payload: ChiPayload) -> list[str]:
    position = payload.position
    if position.kind == "at-critical":
        where = f"at-critical ζ_{position.interval} = {fraction_text(position.value)}·π"
    else:
        where = f"interval {position.interval} (ζ_{position.interval}, ζ_{position.interval + 1})"
    lines = [f"χ(M_{n}({fraction_text(payload.a)}·π)) = {payload.chi}", f"position: {where}",
             "contributions:"]
    for item in payload.contributions:
        stratum = item.stratum
        action = "landing" if item.landing else "crossing"
        lines.append(f"  ({stratum.alpha},{stratum.beta}) {fraction_text(stratum.value)}·π "
                     f"count={stratum.count} index={stratum.index} "
                     f"{action} {int(item.increment):+d}")
    return lines


def _chi_rows(n: int, payload: ChiPayload) -> list[list]:
    position = payload.position
    return [["n", "a", "chi", "position", "interval"],
            [n, fraction_text(payload.a), payload.chi, position.kind, position.interval]]


def _omega_plain(n: int, payload: OmegaPayload) -> list[str]:
    lines = [f"Ω table for n={n}"]
    for entry in payload.entries:
        note = ""
        if entry.closed_form:
            note = f"  [{entry.closed_form}: {_flag(entry.matched)}]"
        lines.append(f"  Ω_{entry.i} = {entry.value}{note}")
    return lines


def _omega_rows(payload: OmegaPayload) -> list[list]:
    rows = [["i", "omega", "closed_form", "matched"]]
    for entry in payload.entries:
        rows.append([entry.i, entry.value, entry.closed_form or "",
                     "" if entry.matched is None else str(entry.matched).lower()])
    return rows


def _verify_plain(payload: VerifyPayload) -> list[str]:
    lines = [f"verification with n ≤ {payload.n_max}, brute force n ≤ {payload.oracle_max}"]
    for item in payload.checks:
        detail = f"  {item.detail}" if item.detail else ""
        lines.append(f"  {_flag(item.passed):6} {item.name} ({item.cases} cases){detail}")
    passed = sum(1 for item in payload.checks if item.passed)
    lines.append(f"{passed}/{len(payload.checks)} checks passed")
    return lines


def _verify_rows(payload: VerifyPayload) -> list[list]:
    rows = [["check", "passed", "cases", "detail"]]
    rows.extend([item.name, str(item.passed).lower(), item.cases, item.detail]
                for item in payload.checks)
    return rows


def _oracle_plain(n: int, payload: OraclePayload) -> list[str]:
    lines = [f"brute-force census for n={n}: {payload.total_observed} configurations, "
             f"|U_{n}|={payload.total_predicted}"]
    for item in payload.strata:
        lines.append(f"  ({item.alpha},{item.beta}) observed={item.observed} "
                     f"predicted={item.predicted} {_flag(item.matched)}")
    for item in payload.levels:
        lines.append(f"  {fraction_text(item.value)}·π observed={item.observed} "
                     f"predicted={item.predicted} {_flag(item.matched)}")
    return lines


def _oracle_rows(payload: OraclePayload) -> list[list]:
    rows = [["kind", "key", "observed", "predicted", "matched"]]
    rows.extend(["stratum", f"({item.alpha},{item.beta})", item.observed, item.predicted,
                 str(item.matched).lower()] for item in payload.strata)
    rows.extend(["level", fraction_text(item.value), item.observed, item.predicted,
                 str(item.matched).lower()] for item in payload.levels)
    return rows


def _asymptotics_plain(payload: AsymptoticsPayload) -> list[str]:
    lines = [f"{'n':>7} {'Φ·π²/n²':>10} {'Ψ·π²/2n²':>10} {'|U|/asymptote':>14}"]
    lines.extend(f"{row.n:>7} {row.ratio_levels:>10.6f} {row.ratio_psi_capital:>10.6f} "
                 f"{row.ratio_critical_points:>14.6f}" for row in payload.rows)
    return lines


def _asymptotics_rows(payload: AsymptoticsPayload) -> list[list]:
    rows = [["n", "critical_points", "phi", "psi_capital", "ratio_critical_points",
             "ratio_levels", "ratio_psi_capital"]]
    rows.extend([row.n, row.critical_points, row.phi, row.psi_capital,
                 repr(row.ratio_critical_points), repr(row.ratio_levels),
                 repr(row.ratio_psi_capital)] for row in payload.rows)
    return rows


def _plain(result: CommandResult) -> str:
    n, payload = result.record.n, result.payload
    match result.record.command:
        case "spectrum":
            lines = _spectrum_plain(n, payload)
        case "chi":
            lines = _chi_plain(n, payload)
        case "omega":
            lines = _omega_plain(n, payload)
        case "verify":
            lines = _verify_plain(payload)
        case "oracle":
            lines = _oracle_plain(n, payload)
        case _:
            lines = _asymptotics_plain(payload)
    return "\n".join(lines)


def _csv(result: CommandResult) -> str:
    n, payload = result.record.n, result.payload
    match result.record.command:
        case "spectrum":
            rows = _spectrum_rows(payload)
        case "chi":
            rows = _chi_rows(n, payload)
        case "omega":
            rows = _omega_rows(payload)
        case "verify":
            rows = _verify_rows(payload)
        case "oracle":
            rows = _oracle_rows(payload)
        case _:
            rows = _asymptotics_rows(payload)
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    return buffer.getvalue().rstrip("\n")


def render(result: CommandResult, output_format: str) -> str:
    """
    Renders result in output_format.

    Raises:
        CommonPolygonError: CONTRACT_INVALID for an unknown format.
    """
    match output_format:
        case "plain":
            return _plain(result)
        case "json":
            return result.record.to_json()
        case "csv":
            return _csv(result)
        case _:
            raise errors.new_common_error(errors.ErrKind.CONTRACT_INVALID,
                                          f"unknown output format {output_format!r}")
