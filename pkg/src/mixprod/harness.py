"""Exhaustive formula-vs-oracle sweep over all canonical mixed products up
to a size bound, with machine-readable reporting."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import AMBIENT_CAP, Ambient, MixedProductSpec, realize_spec
from .errors import CapExceeded
from .homology import RATIONALS, FieldSpec
from .invariants import oracle_report
from .mixed import (
    formula_report,
    koszul_cycle_witness,
    syzygy_witness,
    verify_koszul_cycle,
    verify_syzygy_witness,
)

#: Invariants compared between the two routes, in report order.
COMPARED = ("dim", "depth", "pd", "reg_of_ideal", "reg_of_quotient", "cm")


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 3
    max_m: int = 3
    fields: tuple[FieldSpec, ...] = (RATIONALS,)
    include_witness_checks: bool = True

    def __post_init__(self) -> None:
        if self.max_n < 0 or self.max_m < 0:
            raise ValueError("sweep bounds must be nonnegative")
        if self.max_n + self.max_m > AMBIENT_CAP:
            raise CapExceeded(
                f"sweep bounds ({self.max_n},{self.max_m}) exceed the "
                f"{AMBIENT_CAP}-variable cap"
            )


@dataclass(frozen=True)
class Mismatch:
    spec: MixedProductSpec
    field: FieldSpec
    invariant: str
    formula_value: int | bool
    oracle_value: int | bool


@dataclass(frozen=True)
class WitnessFailure:
    spec: MixedProductSpec
    kind: str  # "syzygy" | "koszul"


@dataclass(frozen=True)
class SweepReport:
    config: SweepConfig
    cases_run: int
    mismatches: tuple[Mismatch, ...]
    witness_failures: tuple[WitnessFailure, ...]
    elapsed_seconds: float

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.witness_failures

    def to_json_dict(self) -> dict:
        return {
            "config": {
                "max_n": self.config.max_n,
                "max_m": self.config.max_m,
                "fields": [str(f) for f in self.config.fields],
                "include_witness_checks": self.config.include_witness_checks,
            },
            "cases_run": self.cases_run,
            "mismatches": [
                {
                    "ambient": {"n": mm.spec.ambient.n, "m": mm.spec.ambient.m},
                    "ideal": [list(t) for t in mm.spec.terms],
                    "field": str(mm.field),
                    "invariant": mm.invariant,
                    "formula": mm.formula_value,
                    "oracle": mm.oracle_value,
                }
                for mm in self.mismatches
            ],
            "witness_failures": [
                {
                    "ambient": {"n": wf.spec.ambient.n, "m": wf.spec.ambient.m},
                    "ideal": [list(t) for t in wf.spec.terms],
                    "kind": wf.kind,
                }
                for wf in self.witness_failures
            ],
            "elapsed_seconds": self.elapsed_seconds,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SweepReport":
        cfg = SweepConfig(
            max_n=d["config"]["max_n"],
            max_m=d["config"]["max_m"],
            fields=tuple(FieldSpec.parse(f) for f in d["config"]["fields"]),
            include_witness_checks=d["config"]["include_witness_checks"],
        )

        def spec_of(entry: dict) -> MixedProductSpec:
            amb = Ambient(entry["ambient"]["n"], entry["ambient"]["m"])
            return MixedProductSpec(amb, tuple((k, l) for k, l in entry["ideal"]))

        mms = tuple(
            Mismatch(
                spec=spec_of(e),
                field=FieldSpec.parse(e["field"]),
                invariant=e["invariant"],
                formula_value=e["formula"],
                oracle_value=e["oracle"],
            )
            for e in d["mismatches"]
        )
        wfs = tuple(
            WitnessFailure(spec=spec_of(e), kind=e["kind"]) for e in d["witness_failures"]
        )
        return cls(cfg, d["cases_run"], mms, wfs, d["elapsed_seconds"])


def enumerate_specs(max_n: int, max_m: int) -> list[MixedProductSpec]:
    """All canonical mixed product descriptions over every ambient (n, m)
    with n <= max_n, m <= max_m, n+m >= 1: single terms (k,l) != (0,0) and
    two-term sums (q,r)+(s,t) with 0 <= q < s <= n, 0 <= t < r <= m."""
    if max_n < 0 or max_m < 0:
        raise ValueError("bounds must be nonnegative")
    if max_n + max_m > AMBIENT_CAP:
        raise CapExceeded(
            f"bounds ({max_n},{max_m}) exceed the {AMBIENT_CAP}-variable cap"
        )
    out: list[MixedProductSpec] = []
    for n in range(max_n + 1):
        for m in range(max_m + 1):
            if n + m == 0:
                continue
            amb = Ambient(n, m)
            for k in range(n + 1):
                for l in range(m + 1):
                    if (k, l) != (0, 0):
                        out.append(MixedProductSpec(amb, ((k, l),)))
            for s in range(1, n + 1):
                for q in range(s):
                    for r in range(1, m + 1):
                        for t in range(r):
                            out.append(MixedProductSpec(amb, ((q, r), (s, t))))
    return out


def _evaluate_case(
    spec: MixedProductSpec, fld: FieldSpec
) -> list[Mismatch]:
    formula = formula_report(spec)
    oracle = oracle_report(realize_spec(spec), fld)
    out = []
    for name in COMPARED:
        fv, ov = getattr(formula, name), getattr(oracle, name)
        if fv != ov:
            out.append(Mismatch(spec, fld, name, fv, ov))
    return out


def _check_witnesses(spec: MixedProductSpec) -> list[WitnessFailure]:
    out = []
    if len(spec.terms) == 2:
        if not verify_syzygy_witness(syzygy_witness(spec)):
            out.append(WitnessFailure(spec, "syzygy"))
    return out


def run_sweep(cfg: SweepConfig, jobs: int = 1) -> SweepReport:
    """Compare formula_report against oracle_report on every enumerated
    description and field. Failures are collected, not raised. Work units
    are independent (spec, field) pairs; with jobs > 1 they are fanned out
    to worker processes and merged back in enumeration order, so the
    report does not depend on scheduling."""
    start = time.perf_counter()
    specs = enumerate_specs(cfg.max_n, cfg.max_m)
    units = [(spec, fld) for spec in specs for fld in cfg.fields]
    mismatches: list[Mismatch] = []
    if jobs > 1 and units:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for found in pool.map(_evaluate_star, units, chunksize=8):
                mismatches.extend(found)
    else:
        for spec, fld in units:
            mismatches.extend(_evaluate_case(spec, fld))
    witness_failures: list[WitnessFailure] = []
    if cfg.include_witness_checks:
        for spec in specs:
            witness_failures.extend(_check_witnesses(spec))
        seen_ambients = []
        for spec in specs:
            if spec.ambient not in seen_ambients:
                seen_ambients.append(spec.ambient)
        for amb in seen_ambients:
            if amb.n >= 1 and amb.m >= 1:
                if not verify_koszul_cycle(koszul_cycle_witness(amb)):
                    witness_failures.append(
                        WitnessFailure(MixedProductSpec(amb, ((1, 1),)), "koszul")
                    )
    return SweepReport(
        config=cfg,
        cases_run=len(units),
        mismatches=tuple(mismatches),
        witness_failures=tuple(witness_failures),
        elapsed_seconds=time.perf_counter() - start,
    )


def _evaluate_star(unit: tuple[MixedProductSpec, FieldSpec]) -> list[Mismatch]:
    return _evaluate_case(*unit)
