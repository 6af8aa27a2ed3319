"""Assemble analysis reports from library calls.

Every number in a report comes straight from a library function; this
module only decides which functions to call and how to name the results.
"""

from __future__ import annotations

from dataclasses import asdict

from . import matrix as em
from .domain import INTEGERS
from .errors import InputError, RejectedError
from .monomial import MonomialMap, is_monic, is_nondegenerate, is_retraction
from .oracle import (
    default_degree_cap,
    enumerate_idempotent,
    monoid_same_image,
    rational_rank,
)
from .same_retract import count_same_retract, enumerate_same_retract, gamma_sets, same_image
from .structure import associated_monic, decompose, polynomial_ring_witness
from .textio import ParsedInput, render_map
from .transform import is_standard, standardize

EQUIVALENTS_LIMIT = 10**4


class TooManyError(InputError):
    """Materializing the requested listing needs ``--force``."""


def rows(M: em.ExponentMatrix) -> list[list[int]]:
    return [list(r) for r in M.rows]


def as_map(parsed: ParsedInput) -> MonomialMap:
    if parsed.kind == "map":
        return parsed.value
    return em.to_monic_map(parsed.value, INTEGERS)


def as_matrix(parsed: ParsedInput) -> em.ExponentMatrix:
    """The exponent matrix of the input, or of its associated monic map."""
    if parsed.kind == "matrix":
        return parsed.value
    phi = parsed.value
    if is_monic(phi):
        return em.from_monic_map(phi)
    return em.from_monic_map(associated_monic(phi).monic_map)


def verify(parsed: ParsedInput) -> tuple[dict, int]:
    phi = as_map(parsed)
    flags = {
        "retraction": is_retraction(phi),
        "monic": is_monic(phi),
        "nondegenerate": is_nondegenerate(phi),
    }
    return flags, 0 if flags["retraction"] else 1


def standardization(M: em.ExponentMatrix) -> dict:
    S, sigma = standardize(M)
    return {"input_is_standard": is_standard(M), "matrix": rows(S), "sigma": list(sigma.mapping)}


def witness(M: em.ExponentMatrix, parsed: ParsedInput) -> dict:
    S, sigma = standardize(M)
    d = parsed.value.domain if parsed.kind == "map" else INTEGERS
    w = polynomial_ring_witness(S, d)
    return {"sigma": list(sigma.mapping), "standard_matrix": rows(S), **w.to_dict()}


def equivalents(M: em.ExponentMatrix, force: bool = False) -> dict:
    g = gamma_sets(M)
    count = g.count
    if count > EQUIVALENTS_LIMIT and not force:
        raise TooManyError(f"{count} matrices share this retract; pass --force to list them")
    return {**g.to_dict(), "count": count, "matrices": [rows(m) for m in enumerate_same_retract(M)]}


def _association(phi: MonomialMap) -> dict:
    a = associated_monic(phi)
    return {
        "lambdas": [str(x) for x in a.lambdas],
        "lambda_consistent": a.lambda_consistent,
        "all_lambdas_units": a.all_lambdas_units,
        "idempotent_witnesses": [[i, str(w)] for i, w in a.idempotent_witnesses],
        "theta_checks": [
            {"i": t.i, "j": t.j, "theta": str(t.theta), "holds": t.holds} for t in a.theta_checks
        ],
        "monic_map": render_map(a.monic_map).splitlines(),
    }


def analyze(parsed: ParsedInput, force: bool = False) -> tuple[dict, int]:
    """Run every analysis that applies; ``status`` is 1 if any was refused."""
    report: dict = {"input": {"kind": parsed.kind, "n": parsed.value.n}}
    report.update(
        dict.fromkeys(
            ["validity", "exponent_matrix", "structure", "standardization", "retract", "gamma", "count", "equivalents"]
        )
    )
    report["notes"] = []
    flags, _ = verify(parsed)
    report["validity"] = flags
    try:
        M = as_matrix(parsed)
    except RejectedError as exc:
        report["notes"].append(str(exc))
        return report, 1
    report["exponent_matrix"] = rows(M)
    idem = em.is_idempotent(M)
    report["structure"] = {
        **asdict(em.structure_report(M)),
        "idempotent": idem,
        "rank": em.rank(M) if idem else None,
    }
    if not idem:
        report["notes"].append("exponent matrix is not idempotent: not a retraction")
        return report, 1
    report["standardization"] = standardization(M)
    if not M.has_nonzero_rows():
        report["notes"].append("degenerate retraction: retract, gamma and count need every variable in the image")
        return report, 1
    monic_phi = em.to_monic_map(M, as_map(parsed).domain)
    s = decompose(monic_phi)
    retract = {
        "p": s.p,
        "N1": list(s.N1),
        "N2": list(s.N2),
        "psi": {str(i): str(s.psi[i]) for i in s.N1},
        "witness": witness(M, parsed),
    }
    if parsed.kind == "map" and not is_monic(parsed.value):
        retract["association"] = assoc = _association(parsed.value)
        if not assoc["all_lambdas_units"]:
            report["notes"].append(
                "some coefficient is not a unit: the witness certifies the associated monic map's "
                "image, which may differ from this map's image"
            )
    report["retract"] = retract
    g = gamma_sets(M)
    report["gamma"] = g.to_dict()
    report["count"] = g.count
    if g.count <= EQUIVALENTS_LIMIT or force:
        report["equivalents"] = [rows(m) for m in enumerate_same_retract(M)]
    else:
        report["notes"].append(f"{g.count} equivalents not listed; pass --force")
    return report, 0


def oracle_check(n: int, bound: int, cap: int | None = None, workers: int | None = None) -> tuple[dict, int]:
    """Cross-validate the theorem-driven code against brute force for one ``(n, bound)`` cell."""
    census = enumerate_idempotent(n, bound, workers=workers)
    nondeg = census.nondegenerate_matrices()
    mismatches: dict[str, int] = {
        "rank_vs_trace": 0,
        "structure_clauses": 0,
        "characterization": 0,
        "count_vs_enumeration": 0,
        "enumeration_vs_census": 0,
        "monoid_vs_same_image": 0,
    }
    for M in census:
        if rational_rank(M) != M.trace:
            mismatches["rank_vs_trace"] += 1
        if not em.structure_report(M).all_ok:
            mismatches["structure_clauses"] += 1
    for M in nondeg:
        if not em.characterize_nonzero_rows(M):
            mismatches["characterization"] += 1
        listed = enumerate_same_retract(M)
        if len(listed) != count_same_retract(M):
            mismatches["count_vs_enumeration"] += 1
        if any(m.max_entry > bound for m in listed):
            mismatches["enumeration_vs_census"] += 1
            continue
        same = [other for other in nondeg if same_image(M, other)]
        if set(listed) != set(same) or len(set(listed)) != len(listed):
            mismatches["enumeration_vs_census"] += 1
    for M in nondeg:
        for other in nondeg:
            c = cap if cap is not None else default_degree_cap(M, other)
            if monoid_same_image(M, other, c) != same_image(M, other):
                mismatches["monoid_vs_same_image"] += 1
    summary = {
        "n": n,
        "bound": bound,
        "census": len(census),
        "nondegenerate": len(nondeg),
        "pairs": len(nondeg) ** 2,
        "mismatches": mismatches,
        "ok": not any(mismatches.values()),
    }
    return summary, 0 if summary["ok"] else 1
