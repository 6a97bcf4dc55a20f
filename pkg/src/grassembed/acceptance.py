"""Self-verification suite behind ``grassembed verify``.

Each criterion returns a :class:`CriterionResult`; failures carry the violated
identity and the smallest input (in iteration order) that breaks it.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable

from .dims import dim_gl
from .errors import InconsistencyError, VerificationFailure
from .lr import lr_coefficients, square_split, tensor_decompose, tensor_decompose_bruteforce
from .moduli import (
    PairConfig,
    center_weight,
    full_report,
    gs_module,
    lemma_center_weight,
    lemma_components,
    lowest_weight,
    moduli_complement,
)
from .partitions import Partition, partitions_of
from .symfunc import SchurExpansion

RUNTIME_BUDGET_S = 20 * 60
MAX_LISTED_FAILURES = 5


@dataclass(frozen=True)
class Scope:
    name: str
    lr_max_size: int
    lemma_ms: tuple[int, ...]
    lemma_ks: tuple[int, ...]
    split_ms: tuple[int, ...]
    split_ks: tuple[int, ...]


SCOPES = {
    "quick": Scope("quick", 4, (2,), (1, 2), (2,), (1, 2)),
    "full": Scope("full", 6, (2, 3), (1, 2, 3, 4), (2, 3), (1, 2, 3)),
}


@dataclass
class CriterionResult:
    number: int
    title: str
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] criterion {self.number}: {self.title} ({self.checked} checks, {self.elapsed:.1f}s)"


def _lr_partitions(max_size: int) -> list[Partition]:
    return [p for s in range(max_size + 1) for p in partitions_of(s, max_rows=4)]


def lr_oracle_equivalence(scope: Scope, res: CriterionResult) -> None:
    ps = _lr_partitions(scope.lr_max_size)
    pairs = sorted(((a, b) for a in ps for b in ps), key=lambda ab: (ab[0].size + ab[1].size, ab[0].parts, ab[1].parts))
    for lam, mu in pairs:
        res.checked += 1
        fast = lr_coefficients(lam, mu, 6)
        slow = tensor_decompose_bruteforce(lam, mu, 6)
        if fast != slow:
            res.failures.append(f"lr_coefficients({lam}, {mu}, n=6) = {fast} but character route gives {slow}")


def lemma_reproduction(scope: Scope, res: CriterionResult) -> None:
    for m in scope.lemma_ms:
        for k in scope.lemma_ks:
            cfg = PairConfig(m, k)
            res.checked += 1
            got = tensor_decompose(cfg.base, cfg.base, cfg.n)
            listed = [lam for _, _, lam in lemma_components(cfg)]
            want = SchurExpansion(cfg.n, [(lam, 1) for lam in listed])
            if len(set(listed)) != len(listed):
                res.failures.append(f"m={m}, k={k}: indexed list repeats a partition")
            if got != want:
                res.failures.append(f"m={m}, k={k}: tensor square {got} != indexed list {want}")
            if any(c != 1 for _, c in got.items()):
                res.failures.append(f"m={m}, k={k}: tensor square not multiplicity free: {got}")


def lowest_weight_formula(scope: Scope, res: CriterionResult) -> None:
    for m in scope.lemma_ms:
        for k in scope.lemma_ks:
            cfg = PairConfig(m, k)
            for i, j, lam in lemma_components(cfg):
                res.checked += 1
                w = center_weight(lowest_weight(lam, cfg.n), m)
                want = lemma_center_weight(cfg, i, j)
                if w != want:
                    res.failures.append(f"m={m}, k={k}, (i,j)=({i},{j}): center weight {w} != {want}")
                if m == 2 and w != -2 * k + 2 * i + j:
                    res.failures.append(f"m=2, k={k}, (i,j)=({i},{j}): center weight {w} != -2k+2i+j")


def parity_split(scope: Scope, res: CriterionResult) -> None:
    for m in scope.split_ms:
        for k in scope.split_ks:
            cfg = PairConfig(m, k)
            res.checked += 1
            try:
                split = square_split(cfg.base, cfg.n)
            except InconsistencyError as exc:
                res.failures.append(f"m={m}, k={k}: {exc}")
                continue
            d = dim_gl(cfg.base, cfg.n)
            dsym = sum(c * dim_gl(p, cfg.n) for p, c in split.sym.items())
            dalt = sum(c * dim_gl(p, cfg.n) for p, c in split.alt.items())
            if (dsym, dalt) != (d * (d + 1) // 2, d * (d - 1) // 2):
                res.failures.append(f"m={m}, k={k}: dim S^2={dsym}, dim L^2={dalt}, d={d}")
            top = Partition((2 * k, 2 * k))
            nxt = Partition((2 * k, 2 * k - 1, 1))
            if split.parity_of(top) != "sym":
                res.failures.append(f"m={m}, k={k}: {top} not in S^2 (parity {split.parity_of(top)})")
            if split.parity_of(nxt) != "alt":
                res.failures.append(f"m={m}, k={k}: {nxt} not in Lambda^2 (parity {split.parity_of(nxt)})")


def gs_determination(scope: Scope, res: CriterionResult) -> None:
    for m in scope.split_ms:
        for k in scope.split_ks:
            res.checked += 1
            try:
                gs = gs_module(PairConfig(m, k))
            except VerificationFailure as exc:
                res.failures.append(str(exc))
                continue
            if gs.below_threshold != [(0, 0), (0, 1)] or gs.partition != Partition((2 * k, 2 * k)):
                res.failures.append(f"m={m}, k={k}: gs result {gs.partition}, surviving {gs.below_threshold}")


def dimension_sum_rules(scope: Scope, res: CriterionResult) -> None:
    for lam, n, want in ((Partition((1, 1)), 4, 6), (Partition((2, 2)), 4, 20)):
        res.checked += 1
        if dim_gl(lam, n) != want:
            res.failures.append(f"dim_gl({lam}, {n}) = {dim_gl(lam, n)}, expected {want}")
    ps = _lr_partitions(scope.lr_max_size)
    for lam in ps:
        for mu in ps:
            res.checked += 1
            e = tensor_decompose(lam, mu, 6)
            lhs = sum(c * dim_gl(nu, 6) for nu, c in e.items())
            if lhs != dim_gl(lam, 6) * dim_gl(mu, 6):
                res.failures.append(f"tensor_decompose({lam}, {mu}, 6): sum {lhs} != product of dims")
    for m in scope.lemma_ms:
        for k in scope.lemma_ks:
            cfg = PairConfig(m, k)
            res.checked += 1
            e = tensor_decompose(cfg.base, cfg.base, cfg.n)
            d = dim_gl(cfg.base, cfg.n)
            if sum(c * dim_gl(nu, cfg.n) for nu, c in e.items()) != d * d:
                res.failures.append(f"m={m}, k={k}: tensor square dims do not sum to d^2={d * d}")


def rigidity_smoke(scope: Scope, res: CriterionResult) -> None:
    cfg = PairConfig(2, 1)
    res.checked += 1
    comp = moduli_complement(cfg)
    if comp.expansion != SchurExpansion(4, {Partition((1, 1, 1, 1)): 1}) or comp.complex_dim != 1:
        res.failures.append(f"m=2, k=1: complement {comp.expansion} with complex dim {comp.complex_dim}")
    report = full_report(cfg)
    if report.paper_corollary_list:
        res.failures.append(f"m=2, k=1: corollary list should be the empty sum, got {report.paper_corollary_list}")
    if "corollary_empty_iff_vk_su_nontrivial_part_empty" not in report.match_flags:
        res.failures.append("m=2, k=1: report does not relate the empty corollary sum to the computed complement")
    if not any("empty" in s for s in report.notes) or not any("trivial" in s for s in report.notes):
        res.failures.append(f"m=2, k=1: report notes missing rigidity discussion: {report.notes}")


def paper_crosscheck_emitted(scope: Scope, res: CriterionResult) -> None:
    needed = {
        "remark_formula_vs_vk_real_dim",
        "example_formula_vs_vk_real_dim",
        "corollary_dim_vs_vk_complex_dim",
    }
    for m in scope.split_ms:
        for k in scope.split_ks:
            res.checked += 1
            cfg = PairConfig(m, k)
            a = full_report(cfg)
            b = full_report(cfg)
            ja = json.dumps(a.to_json(), sort_keys=True)
            if ja != json.dumps(b.to_json(), sort_keys=True) or a.match_flags != b.match_flags:
                res.failures.append(f"m={m}, k={k}: report not deterministic")
            missing = needed - a.match_flags.keys()
            if missing:
                res.failures.append(f"m={m}, k={k}: flags missing {sorted(missing)}")
            if (m == 2) != (a.paper_example_value is not None):
                res.failures.append(f"m={m}, k={k}: example value presence wrong")
            if a.vk_real_dim != 2 * a.vk_complex_dim:
                res.failures.append(f"m={m}, k={k}: real dim {a.vk_real_dim} != 2 * complex dim {a.vk_complex_dim}")


CRITERIA: list[tuple[int, str, Callable[[Scope, CriterionResult], None]]] = [
    (1, "LR oracle equivalence", lr_oracle_equivalence),
    (2, "tensor-square lemma reproduction", lemma_reproduction),
    (3, "lowest-weight formula", lowest_weight_formula),
    (4, "parity split identities", parity_split),
    (5, "GS determination", gs_determination),
    (6, "dimension sum rules", dimension_sum_rules),
    (7, "rigidity smoke test", rigidity_smoke),
    (8, "paper cross-check emitted", paper_crosscheck_emitted),
]


def run_criterion(number: int, scope: Scope | str = "full") -> CriterionResult:
    scope = SCOPES[scope] if isinstance(scope, str) else scope
    _, title, fn = next(c for c in CRITERIA if c[0] == number)
    res = CriterionResult(number, title)
    start = time.perf_counter()
    try:
        fn(scope, res)
    except (VerificationFailure, InconsistencyError) as exc:
        res.failures.append(f"{type(exc).__name__}: {exc}")
    res.elapsed = time.perf_counter() - start
    return res


def run_all(scope: Scope | str = "full") -> list[CriterionResult]:
    scope = SCOPES[scope] if isinstance(scope, str) else scope
    start = time.perf_counter()
    results = [run_criterion(num, scope) for num, _, _ in CRITERIA]
    total = CriterionResult(9, f"verify --scope {scope.name} within {RUNTIME_BUDGET_S}s budget")
    total.checked = 1
    total.elapsed = time.perf_counter() - start
    if total.elapsed >= RUNTIME_BUDGET_S:
        total.failures.append(f"took {total.elapsed:.0f}s")
    results.append(total)
    return results
