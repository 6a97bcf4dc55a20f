"""Center-weight filtration of F(k pi_2)^{(x)2} and the moduli dimension count.

Everything here is for the pair (SU(m+2), S(U(m) x U(2))), i.e. Gr_m(C^{m+2}),
with U(m+2) highest weights written as partitions padded to n = m + 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import ENGINE_VERSION, SCHEMA_VERSION
from .dims import dim_gl, example_formula, remark_formula
from .errors import VerificationFailure
from .lr import SquareSplit, square_split, su_label, tensor_decompose
from .partitions import Partition, sort_key
from .symfunc import SchurExpansion

Weight = tuple[int, ...]


@dataclass(frozen=True)
class PairConfig:
    m: int
    k: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")

    @property
    def n(self) -> int:
        return self.m + 2

    @property
    def base(self) -> Partition:
        """Highest weight (k, k, 0, ...) of F(k pi_2)."""
        return Partition((self.k, self.k))


@dataclass(frozen=True)
class ComponentRecord:
    i: int
    j: int
    lam: Partition
    parity: str
    center_weight: Fraction
    dim: int


def component_partition(k: int, i: int, j: int) -> Partition:
    return Partition((2 * k - i, 2 * k - i - j, i + j, i))


def lemma_components(cfg: PairConfig) -> list[tuple[int, int, Partition]]:
    """The (i, j)-indexed summands V(2k-i, 2k-i-j, i+j, i, 0, ...), 0 <= j <= k-i."""
    k = cfg.k
    return [(i, j, component_partition(k, i, j)) for i in range(k + 1) for j in range(k - i + 1)]


def check_lemma_components(cfg: PairConfig) -> SchurExpansion:
    """Compare the indexed list with the LR engine; raise on any mismatch."""
    engine = tensor_decompose(cfg.base, cfg.base, cfg.n)
    listed = SchurExpansion(cfg.n, [(lam, 1) for _, _, lam in lemma_components(cfg)])
    if engine != listed:
        extra = sorted(set(engine.coeffs) ^ set(listed.coeffs), key=sort_key)
        raise VerificationFailure(
            f"m={cfg.m}, k={cfg.k}: tensor square {engine} differs from indexed list {listed} (symmetric difference {extra})"
        )
    return engine


def lowest_weight(lam, n: int) -> Weight:
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    return tuple(reversed(lam.padded(n)))


def center_weight(w: Sequence[int], m: int) -> Fraction:
    """Exponent of y for Y = diag(y^{1/m} x m, y^{-1/2}, y^{-1/2}) acting on weight w."""
    if len(w) != m + 2:
        raise ValueError(f"weight {tuple(w)} must have length m+2 = {m + 2}")
    return Fraction(sum(w[:m]), m) - Fraction(w[m] + w[m + 1], 2)


def lemma_center_weight(cfg: PairConfig, i: int, j: int) -> Fraction:
    """Closed form -2k + (1 + 2/m) i + (1/2 + 1/m) j."""
    m = cfg.m
    return -2 * cfg.k + (1 + Fraction(2, m)) * i + (Fraction(1, 2) + Fraction(1, m)) * j


def gs_threshold(cfg: PairConfig) -> Fraction:
    return -2 * cfg.k + Fraction(1, cfg.m) + Fraction(1, 2)


def gs_threshold_from_factors(cfg: PairConfig) -> Fraction:
    """Threshold rebuilt as weight(V_0) + weight(m V_0).

    V_0 is spanned by the lowest weight vector of F(k pi_2); m V_0 is
    C^m (x) C^{2*} twisted by V_0, whose extreme vector has torus weight
    e_1 - e_{m+1} on top of V_0's.
    """
    m, n = cfg.m, cfg.n
    v0 = center_weight(lowest_weight(cfg.base, n), m)
    cotangent = [0] * n
    cotangent[0] = 1
    cotangent[m] = -1
    mv0 = center_weight(cotangent, m) + v0
    return v0 + mv0


@dataclass(frozen=True)
class GSResult:
    partition: Partition
    threshold: Fraction
    weights: dict[tuple[int, int], Fraction]
    below_threshold: list[tuple[int, int]]
    in_sym: list[tuple[int, int]]


def gs_module(cfg: PairConfig, split: SquareSplit | None = None) -> GSResult:
    """Two-stage filter: center weight <= threshold, then membership in S^2."""
    split = split or square_split(cfg.base, cfg.n)
    thr = gs_threshold(cfg)
    comps = lemma_components(cfg)
    weights = {(i, j): center_weight(lowest_weight(lam, cfg.n), cfg.m) for i, j, lam in comps}
    below = [(i, j) for i, j, _ in comps if weights[(i, j)] <= thr]
    by_index = {(i, j): lam for i, j, lam in comps}
    in_sym = [ij for ij in below if by_index[ij] in split.sym]
    if below != [(0, 0), (0, 1)]:
        raise VerificationFailure(
            f"m={cfg.m}, k={cfg.k}: components at or below threshold {thr} are {below}, expected [(0, 0), (0, 1)]"
        )
    if in_sym != [(0, 0)]:
        raise VerificationFailure(
            f"m={cfg.m}, k={cfg.k}: surviving symmetric components are {in_sym}, expected [(0, 0)]"
        )
    return GSResult(by_index[(0, 0)], thr, weights, below, in_sym)


@dataclass(frozen=True)
class Complement:
    expansion: SchurExpansion
    removed: Partition
    complex_dim: int
    real_dim: int


def moduli_complement(cfg: PairConfig, split: SquareSplit | None = None, gs: GSResult | None = None) -> Complement:
    split = split or square_split(cfg.base, cfg.n)
    gs = gs or gs_module(cfg, split)
    if split.sym[gs.partition] != 1:
        raise VerificationFailure(
            f"m={cfg.m}, k={cfg.k}: {gs.partition} occurs {split.sym[gs.partition]} times in S^2, expected once"
        )
    rest = split.sym - SchurExpansion(cfg.n, {gs.partition: 1})
    cdim = sum(c * dim_gl(lam, cfg.n) for lam, c in rest.items())
    return Complement(rest, gs.partition, cdim, 2 * cdim)


def corollary_list(cfg: PairConfig) -> list[Partition]:
    """Summands V(2k-2i, 2i, 0, ...) for 1 <= i, 2i <= k, as printed."""
    k = cfg.k
    return [Partition((2 * k - 2 * i, 2 * i)) for i in range(1, k // 2 + 1)]


def y_exponent_closed_form(ks: Sequence[int], m: int, upper: int) -> Fraction:
    """-k_1/2 - (1/m) sum_{i=2}^{upper} (m+2-i) k_i, with ks = (k_1, ..., k_{m+1})."""
    total = -Fraction(ks[0], 2)
    for i in range(2, upper + 1):
        total -= Fraction((m + 2 - i) * ks[i - 1], m)
    return total


def _check(name: str, printed, computed, agree, detail: str = "") -> dict:
    return {"claim": name, "printed": printed, "computed": computed, "agree": agree, "detail": detail}


@dataclass
class ModuliReport:
    config: PairConfig
    components: list[ComponentRecord]
    gs: GSResult
    complement: Complement
    base_dim: int
    sym_dim: int
    paper_remark_value: int | Fraction
    paper_example_value: int | Fraction | None
    paper_corollary_list: list[Partition]
    paper_corollary_complex_dim: int
    checks: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def gs_module(self) -> Partition:
        return self.gs.partition

    @property
    def threshold(self) -> Fraction:
        return self.gs.threshold

    @property
    def vk_candidate(self) -> SchurExpansion:
        return self.complement.expansion

    @property
    def vk_complex_dim(self) -> int:
        return self.complement.complex_dim

    @property
    def vk_real_dim(self) -> int:
        return self.complement.real_dim

    @property
    def image_moduli_dim(self) -> int:
        # generic S^1-orbits are circles; freeness of the action is not established
        return self.vk_real_dim - 1 if self.vk_real_dim >= 1 else 0

    @property
    def match_flags(self) -> dict[str, bool | None]:
        return {c["claim"]: c["agree"] for c in self.checks}

    def to_json(self) -> dict:
        cfg = self.config
        return {
            "schema_version": SCHEMA_VERSION,
            "engine_version": ENGINE_VERSION,
            "config": {"m": cfg.m, "k": cfg.k, "n": cfg.n},
            "base": {"lambda": cfg.base.to_json(), "dim": str(self.base_dim)},
            "components": [
                {
                    "i": c.i,
                    "j": c.j,
                    "lambda": list(c.lam.padded(cfg.n)),
                    "parity": c.parity,
                    "center_weight": _rat(c.center_weight),
                    "dim": str(c.dim),
                }
                for c in self.components
            ],
            "threshold": _rat(self.threshold),
            "gs": {
                "module": list(self.gs_module.padded(cfg.n)),
                "below_threshold": [list(ij) for ij in self.gs.below_threshold],
                "in_sym": [list(ij) for ij in self.gs.in_sym],
            },
            "sym_dim": str(self.sym_dim),
            "vk_candidate": _expansion_json(self.vk_candidate, cfg.n),
            "vk_complex_dim": str(self.vk_complex_dim),
            "vk_real_dim": str(self.vk_real_dim),
            "image_moduli_dim": str(self.image_moduli_dim),
            "image_moduli_dim_kind": "generic",
            "paper": {
                "remark_value": _num(self.paper_remark_value),
                "example_value": None if self.paper_example_value is None else _num(self.paper_example_value),
                "corollary_list": [list(p.padded(cfg.n)) for p in self.paper_corollary_list],
                "corollary_complex_dim": str(self.paper_corollary_complex_dim),
                "corollary_real_dim": str(2 * self.paper_corollary_complex_dim),
            },
            "checks": [_jsonable(c) for c in self.checks],
            "match_flags": self.match_flags,
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        cfg = self.config
        lines = [f"Gr_{cfg.m}(C^{cfg.n}), degree k={cfg.k}, n={cfg.n}", ""]
        lines.append(format_component_table(self.components, cfg.n))
        lines.append("")
        lines.append(f"dim F(k pi_2)            {self.base_dim}")
        lines.append(f"dim S^2                  {self.sym_dim}")
        lines.append(f"GS threshold             {_fmt(self.threshold)}")
        lines.append(f"below threshold (i,j)    {self.gs.below_threshold}")
        lines.append(f"  of which in S^2        {self.gs.in_sym}")
        lines.append(f"GS module                V{_label(self.gs_module, cfg.n)}")
        vk = " + ".join(f"{c}*V{_label(p, cfg.n)}" if c != 1 else f"V{_label(p, cfg.n)}" for p, c in self.vk_candidate.items())
        lines.append(f"V_k                      {vk or '0'}")
        lines.append(f"dim_C V_k                {self.vk_complex_dim}")
        lines.append(f"dim_R V_k                {self.vk_real_dim}")
        lines.append(f"image moduli (generic)   {self.image_moduli_dim}")
        lines.append("")
        lines.append("printed formulas:")
        lines.append(f"  remark                 {self.paper_remark_value}")
        if self.paper_example_value is not None:
            lines.append(f"  example (m=2)          {self.paper_example_value}")
        cor = ", ".join(f"V{_label(p, cfg.n)}" for p in self.paper_corollary_list)
        lines.append(f"  corollary list         [{cor}]  dim_C={self.paper_corollary_complex_dim}")
        lines.append("")
        lines.append("match_flags:")
        width = max(len(c["claim"]) for c in self.checks)
        for c in self.checks:
            verdict = {True: "agree", False: "DISAGREE", None: "n/a"}[c["agree"]]
            lines.append(f"  {c['claim']:<{width}}  {verdict}")
        if self.notes:
            lines.append("")
            lines.append("notes:")
            lines.extend(f"  - {s}" for s in self.notes)
        return "\n".join(lines) + "\n"


def _rat(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def _num(x) -> dict | str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return _rat(x)
    return str(int(x))


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return _rat(obj)
    if isinstance(obj, Partition):
        return obj.to_json()
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, int) and not isinstance(obj, bool):
        return str(obj)
    return obj


def _expansion_json(e: SchurExpansion, n: int) -> list[dict]:
    return [{"lambda": list(p.padded(n)), "mult": c} for p, c in e.items()]


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _label(p: Partition, n: int) -> str:
    return "(" + ",".join(map(str, p.padded(n))) + ")"


def format_component_table(components: Sequence[ComponentRecord], n: int) -> str:
    rows = [("i", "j", "lambda", "parity", "center_weight", "dim")]
    for c in components:
        rows.append((str(c.i), str(c.j), _label(c.lam, n), c.parity, _fmt(c.center_weight), str(c.dim)))
    widths = [max(len(r[a]) for r in rows) for a in range(6)]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows)


def component_records(cfg: PairConfig, split: SquareSplit | None = None) -> list[ComponentRecord]:
    split = split or square_split(cfg.base, cfg.n)
    out = []
    for i, j, lam in lemma_components(cfg):
        parity = split.parity_of(lam)
        if parity not in ("sym", "alt"):
            raise VerificationFailure(f"m={cfg.m}, k={cfg.k}: component {lam} has parity {parity!r}")
        w = center_weight(lowest_weight(lam, cfg.n), cfg.m)
        out.append(ComponentRecord(i, j, lam, parity, w, dim_gl(lam, cfg.n)))
    return out


def paper_checks(cfg: PairConfig, report: ModuliReport) -> tuple[list[dict], list[str]]:
    """Printed claims vs engine values. Neither side is treated as authoritative."""
    m, k, n = cfg.m, cfg.k, cfg.n
    checks: list[dict] = []
    notes: list[str] = []
    engine = tensor_decompose(cfg.base, cfg.base, n)

    line1 = SchurExpansion(
        n, [(Partition((2 * k - i, 2 * k - j, j, i)), 1) for i in range(k + 1) for j in range(i, k + 1)]
    )
    checks.append(_check("lemma_tensor_square_first_indexing", len(line1), len(engine), line1 == engine))
    line2 = SchurExpansion(n, [(lam, 1) for _, _, lam in lemma_components(cfg)])
    checks.append(_check("lemma_tensor_square_ij_indexing", len(line2), len(engine), line2 == engine))

    # third display line: F(j pi_1 + (2k-2i-2j) pi_2 + j pi_3 + i pi_4); pi_4 does not exist for SU(4)
    printed_su, computed_su = [], []
    for i, j, lam in lemma_components(cfg):
        want = [0] * (n - 1)
        want[0] += j
        want[1] += 2 * k - 2 * i - 2 * j
        want[2] += j
        if n - 1 >= 4:
            want[3] += i
        printed_su.append(want)
        computed_su.append(list(su_label(lam, n)))
    detail = "pi_4 term dropped (SU(4) has rank 3), matching the m=2 example's form" if n - 1 < 4 else ""
    checks.append(_check("lemma_su_labels", printed_su, computed_su, printed_su == computed_su, detail))

    comp_weights = [c.center_weight for c in report.components]
    formula = [lemma_center_weight(cfg, c.i, c.j) for c in report.components]
    checks.append(_check("lowest_weight_lemma_formula", formula, comp_weights, formula == comp_weights))
    if m == 2:
        ex = [-2 * k + 2 * c.i + c.j for c in report.components]
        checks.append(_check("example_lowest_weight_formula", ex, comp_weights, [Fraction(x) for x in ex] == comp_weights))

    # the lemma statement names V(2k-i, 2k-i-j, j, i) while its proof uses (.., i+j, i)
    stmt_printed, stmt_computed, invalid = [], [], []
    for c in report.components:
        shape = (2 * k - c.i, 2 * k - c.i - c.j, c.j, c.i)
        if any(shape[a] < shape[a + 1] for a in range(3)):
            invalid.append([c.i, c.j])
            continue
        stmt_printed.append(lemma_center_weight(cfg, c.i, c.j))
        stmt_computed.append(center_weight(lowest_weight(Partition(shape), n), m))
    checks.append(
        _check(
            "lowest_weight_lemma_statement_shape",
            stmt_printed,
            stmt_computed,
            stmt_printed == stmt_computed,
            f"(i,j) where V(2k-i,2k-i-j,j,i) is not a partition: {invalid}" if invalid else "",
        )
    )

    direct = [center_weight(lowest_weight(c.lam, n), m) for c in report.components]
    labels = [su_label(c.lam, n) for c in report.components]
    closed_m = [y_exponent_closed_form(ks, m, m) for ks in labels]
    closed_m1 = [y_exponent_closed_form(ks, m, m + 1) for ks in labels]
    checks.append(_check("y_action_closed_form_upper_limit_m", closed_m, direct, closed_m == direct))
    checks.append(_check("y_action_closed_form_upper_limit_m_plus_1", closed_m1, direct, closed_m1 == direct))

    # display entry n-2 of V_n(...) is written k_{m-2} + k_{n-1}; successive differences give k_{n-2} + k_{n-1}
    if m - 2 >= 1:
        lit = [ks[m - 3] + ks[n - 2] for ks in labels]
        act = [c.lam.padded(n)[n - 3] - c.lam.padded(n)[n - 1] for c in report.components]
        checks.append(_check("su_conversion_display_entry", lit, act, lit == act))
    else:
        checks.append(_check("su_conversion_display_entry", None, None, None, "k_{m-2} = k_0 is undefined for m=2"))

    thr_direct = gs_threshold_from_factors(cfg)
    checks.append(_check("gs_threshold_from_factor_weights", report.threshold, thr_direct, report.threshold == thr_direct))
    checks.append(_check("gs_module", Partition((2 * k, 2 * k)), report.gs_module, report.gs_module == Partition((2 * k, 2 * k))))

    r = report.paper_remark_value
    checks.append(_check("remark_formula_vs_vk_real_dim", r, report.vk_real_dim, r == report.vk_real_dim))
    checks.append(_check("remark_formula_vs_vk_complex_dim", r, report.vk_complex_dim, r == report.vk_complex_dim))
    r_shift = remark_formula(m + 2, k)
    checks.append(
        _check(
            "remark_formula_with_m_read_as_n_vs_vk_real_dim",
            r_shift,
            report.vk_real_dim,
            r_shift == report.vk_real_dim,
            "misprint hypothesis: binomials written for n = m + 2",
        )
    )
    if report.paper_example_value is not None:
        e = report.paper_example_value
        checks.append(_check("example_formula_vs_vk_real_dim", e, report.vk_real_dim, e == report.vk_real_dim))
        alt = example_formula(k) - example_formula_first_term(k) + example_formula_first_term(k, power=1)
        checks.append(
            _check(
                "example_formula_with_(1+k)^1_vs_vk_real_dim",
                alt,
                report.vk_real_dim,
                alt == report.vk_real_dim,
                "misprint hypothesis: (1+k)^5 in the second term read as (1+k)^1",
            )
        )
    else:
        checks.append(_check("example_formula_vs_vk_real_dim", None, report.vk_real_dim, None, "printed only for m=2"))

    cor = report.paper_corollary_list
    cor_dim = report.paper_corollary_complex_dim
    checks.append(_check("corollary_dim_vs_vk_complex_dim", cor_dim, report.vk_complex_dim, cor_dim == report.vk_complex_dim))
    cor_exp = SchurExpansion(n, [(p, 1) for p in cor])
    checks.append(
        _check(
            "corollary_list_vs_vk_candidate",
            [p.to_json() for p in cor],
            [p.to_json() for p in report.vk_candidate.partitions()],
            cor_exp == report.vk_candidate,
        )
    )

    su_trivial = [p for p in report.vk_candidate.partitions() if len(set(p.padded(n))) == 1]
    nontrivial = [p for p in report.vk_candidate.partitions() if p not in su_trivial]
    checks.append(
        _check(
            "corollary_empty_iff_vk_su_nontrivial_part_empty",
            not cor,
            not nontrivial,
            (not cor) == (not nontrivial),
            "vk summands that are SU(n)-trivial (determinant powers) are set aside",
        )
    )
    if not cor:
        notes.append("corollary index range 1 <= i, 2i <= k is empty at this k")
    if not report.vk_candidate:
        notes.append("computed complement is zero: rigid case")
    if su_trivial:
        labels_txt = ", ".join(_label(p, n) for p in su_trivial)
        notes.append(
            f"computed complement contains SU({n})-trivial summand(s) {labels_txt}; "
            "as U(n) labels these are not the corollary's size-2k partitions"
        )
    if cor and cor[0].size != 4 * k:
        notes.append(f"corollary summands have size {2 * k}; every tensor-square constituent has size {4 * k}")
    return checks, notes


def example_formula_first_term(k: int, power: int = 5) -> Fraction:
    k = Fraction(k)
    return Fraction(1, 144) * (1 + k) ** power * (2 + k) ** 2 * (3 + k) * (24 + k * (4 + k) * (7 + k * (4 + k)))


def full_report(cfg: PairConfig, split: SquareSplit | None = None) -> ModuliReport:
    n = cfg.n
    split = split or square_split(cfg.base, n)
    check_lemma_components(cfg)
    components = component_records(cfg, split)
    gs = gs_module(cfg, split)
    comp = moduli_complement(cfg, split, gs)
    d = dim_gl(cfg.base, n)
    cor = corollary_list(cfg)
    report = ModuliReport(
        config=cfg,
        components=components,
        gs=gs,
        complement=comp,
        base_dim=d,
        sym_dim=d * (d + 1) // 2,
        paper_remark_value=remark_formula(cfg.m, cfg.k),
        paper_example_value=example_formula(cfg.k) if cfg.m == 2 else None,
        paper_corollary_list=cor,
        paper_corollary_complex_dim=sum(dim_gl(p, n) for p in cor),
    )
    report.checks, report.notes = paper_checks(cfg, report)
    return report
