"""End-to-end checks: the dilation congruence count ≡ χ (mod n) on whole
complexes, per-simplex prime-power sub-checks, deterministic fuzzing over
generated complexes, and per-dilation probing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import SimplicialComplex, euler_characteristic, generate_complex
from .counting import (DEFAULT_ENUMERATION_LIMIT, count_complex,
                       count_complex_additive, enumeration_estimate)
from .documents import complex_to_document
from .ehrhart import SimplexCongruenceReport, verify_simplex_congruence
from .errors import InputError
from .numtheory import DilationPlan, dilation_plan

VERIFY_ENUMERATION_BUDGET = 20_000
SUBCHECK_ENUMERATION_BUDGET = 512
FUZZ_KEEP_CYCLE = (Fraction(1), Fraction(3, 4), Fraction(1, 2), Fraction(1, 4))


@dataclass(frozen=True)
class VerificationReport:
    """One run of the main congruence on one complex."""

    input_id: str
    modulus: int
    plan: DilationPlan
    euler: int
    dilation: int
    count: int
    method: str
    count_residue: int
    euler_residue: int
    verdict: str  # "pass" or "fail"
    subchecks: tuple[SimplexCongruenceReport, ...]

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def all_passed(self) -> bool:
        return self.passed and all(r.passed for r in self.subchecks)

    def as_dict(self) -> dict:
        return {"input_id": self.input_id, "modulus": self.modulus,
                "plan": self.plan.as_dict(), "euler": self.euler,
                "dilation": self.dilation, "count": self.count,
                "method": self.method, "count_residue": self.count_residue,
                "euler_residue": self.euler_residue, "verdict": self.verdict,
                "subchecks": [r.as_dict() for r in self.subchecks]}


def run_verify(c: SimplicialComplex, n: int, *, input_id: str = "complex",
               enumeration_budget: int = VERIFY_ENUMERATION_BUDGET,
               limit: int = DEFAULT_ENUMERATION_LIMIT) -> VerificationReport:
    """Count lattice points of the complex dilated by the planned factor and
    compare the residue with the Euler characteristic mod n; also run the
    prime-power congruence sub-check on every maximal simplex.

    Enumeration is used while the total box estimate fits the budget;
    beyond it the additive counter takes over (interior counts by verified
    polynomial evaluation), which is exact at any dilation.
    """
    plan = dilation_plan(c.ambient_dim, n)
    t = plan.dilation
    euler = euler_characteristic(c)
    if not c.faces:
        count, method = 0, "enumeration"
    elif enumeration_estimate(c, t) <= enumeration_budget:
        count, method = count_complex(c, t, limit=limit), "enumeration"
    else:
        count = count_complex_additive(c, t, interiors="ehrhart", limit=limit)
        method = "additive"
    subchecks = []
    for face in c.maximal_faces:
        s = c.simplex(face)
        for term in plan.terms:
            subchecks.append(verify_simplex_congruence(
                s, term.prime, term.dilation_exponent,
                enumeration_budget=SUBCHECK_ENUMERATION_BUDGET, limit=limit))
    count_residue = count % n
    euler_residue = euler % n
    return VerificationReport(
        input_id=input_id, modulus=n, plan=plan, euler=euler, dilation=t,
        count=count, method=method, count_residue=count_residue,
        euler_residue=euler_residue,
        verdict="pass" if count_residue == euler_residue else "fail",
        subchecks=tuple(subchecks))


@dataclass(frozen=True)
class FuzzFailure:
    trial: int
    sub_seed: int
    keep: str
    document: dict
    report: VerificationReport

    def as_dict(self) -> dict:
        return {"trial": self.trial, "sub_seed": self.sub_seed,
                "keep": self.keep, "document": self.document,
                "report": self.report.as_dict()}


@dataclass(frozen=True)
class FuzzSummary:
    dim: int
    grid: int
    modulus: int
    trials: int
    seed: int
    dilation: int
    passes: int
    failures: int
    failed: tuple[FuzzFailure, ...]

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {"dim": self.dim, "grid": self.grid, "modulus": self.modulus,
                "trials": self.trials, "seed": self.seed,
                "dilation": self.dilation, "passes": self.passes,
                "failures": self.failures,
                "failed": [f.as_dict() for f in self.failed]}


def _trial_seed(seed: int, trial: int) -> int:
    # Fixed integer mix so sub-streams are reproducible and documented.
    return (seed * 6364136223846793005 + (trial + 1) * 1442695040888963407) % (2 ** 63)


def run_fuzz(dim: int, grid: int, n: int, trials: int, seed: int, *,
             enumeration_budget: int = VERIFY_ENUMERATION_BUDGET,
             limit: int = DEFAULT_ENUMERATION_LIMIT) -> FuzzSummary:
    """Generate `trials` complexes and run the full verification on each.

    Trial i uses keep fraction FUZZ_KEEP_CYCLE[i % 4] and the sub-seed
    _trial_seed(seed, i), so a summary is byte-for-byte reproducible from
    (dim, grid, n, trials, seed).  Any failing trial is serialized in full
    for replay.
    """
    if not isinstance(trials, int) or isinstance(trials, bool) or trials < 1:
        raise InputError(f"trials must be an integer >= 1, got {trials!r}")
    plan = dilation_plan(dim, n)
    passes = 0
    failed = []
    for trial in range(trials):
        keep = FUZZ_KEEP_CYCLE[trial % len(FUZZ_KEEP_CYCLE)]
        sub_seed = _trial_seed(seed, trial)
        complex_ = generate_complex(dim, grid, keep, sub_seed)
        report = run_verify(complex_, n, input_id=f"trial-{trial}",
                            enumeration_budget=enumeration_budget, limit=limit)
        if report.all_passed:
            passes += 1
        else:
            failed.append(FuzzFailure(
                trial=trial, sub_seed=sub_seed, keep=str(keep),
                document=complex_to_document(complex_).as_dict(),
                report=report))
    return FuzzSummary(dim=dim, grid=grid, modulus=n, trials=trials,
                       seed=seed, dilation=plan.dilation, passes=passes,
                       failures=len(failed), failed=tuple(failed))


@dataclass(frozen=True)
class ProbeRow:
    dilation: int
    count: int
    count_residue: int
    congruent: bool

    def as_dict(self) -> dict:
        return {"dilation": self.dilation, "count": self.count,
                "count_residue": self.count_residue, "congruent": self.congruent}


@dataclass(frozen=True)
class ProbeReport:
    """Per-dilation truth table of the congruence for t = 1..t_max."""

    input_id: str
    modulus: int
    euler: int
    euler_residue: int
    planned_dilation: int
    rows: tuple[ProbeRow, ...]

    def as_dict(self) -> dict:
        return {"input_id": self.input_id, "modulus": self.modulus,
                "euler": self.euler, "euler_residue": self.euler_residue,
                "planned_dilation": self.planned_dilation,
                "rows": [r.as_dict() for r in self.rows]}


def probe_dilations(c: SimplicialComplex, n: int, t_max: int, *,
                    input_id: str = "complex",
                    limit: int = DEFAULT_ENUMERATION_LIMIT) -> ProbeReport:
    """Count at every dilation 1..t_max and flag which satisfy the
    congruence; exploratory, since the planned dilation is sufficient but
    not always minimal."""
    if not isinstance(t_max, int) or isinstance(t_max, bool) or t_max < 1:
        raise InputError(f"t_max must be an integer >= 1, got {t_max!r}")
    plan = dilation_plan(c.ambient_dim, n)
    euler = euler_characteristic(c)
    euler_residue = euler % n
    rows = []
    for t in range(1, t_max + 1):
        count = count_complex(c, t, limit=limit)
        rows.append(ProbeRow(dilation=t, count=count,
                             count_residue=count % n,
                             congruent=count % n == euler_residue))
    return ProbeReport(input_id=input_id, modulus=n, euler=euler,
                       euler_residue=euler_residue,
                       planned_dilation=plan.dilation, rows=tuple(rows))
