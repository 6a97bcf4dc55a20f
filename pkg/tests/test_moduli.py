import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grassembed.dims import dim_gl
from grassembed.errors import VerificationFailure
from grassembed.lr import SquareSplit, square_split, tensor_decompose
from grassembed.moduli import (
    PairConfig,
    center_weight,
    check_lemma_components,
    component_records,
    corollary_list,
    full_report,
    gs_module,
    gs_threshold,
    gs_threshold_from_factors,
    lemma_components,
    lowest_weight,
    moduli_complement,
    y_exponent_closed_form,
)
from grassembed.partitions import Partition
from grassembed.symfunc import SchurExpansion

RANGE = [(m, k) for m in (2, 3, 4) for k in (1, 2, 3, 4)]


@pytest.mark.parametrize("m, k", [(1, 1), (2, 0)])
def test_pair_config_rejects(m, k):
    with pytest.raises(ValueError):
        PairConfig(m, k)


def test_lemma_components_k1():
    got = [(i, j, lam.padded(4)) for i, j, lam in lemma_components(PairConfig(2, 1))]
    assert got == [(0, 0, (2, 2, 0, 0)), (0, 1, (2, 1, 1, 0)), (1, 0, (1, 1, 1, 1))]


def test_lemma_components_k2_indices():
    got = [(i, j) for i, j, _ in lemma_components(PairConfig(3, 2))]
    assert got == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


@pytest.mark.parametrize("m, k", RANGE)
def test_lemma_components_match_lr(m, k):
    cfg = PairConfig(m, k)
    comps = lemma_components(cfg)
    assert len(comps) == (k + 1) * (k + 2) // 2
    assert check_lemma_components(cfg) == tensor_decompose((k, k), (k, k), m + 2)


def test_lowest_weight_examples():
    assert lowest_weight((2, 2), 4) == (0, 0, 2, 2)
    assert lowest_weight((1,), 3) == (0, 0, 1)
    k, i, j = 3, 1, 1
    assert lowest_weight((2 * k - i, 2 * k - i - j, i + j, i), 6) == (0, 0, i, i + j, 2 * k - i - j, 2 * k - i)


@pytest.mark.parametrize("m, k", RANGE)
def test_center_weight_of_components(m, k):
    cfg = PairConfig(m, k)
    for i, j, lam in lemma_components(cfg):
        w = center_weight(lowest_weight(lam, m + 2), m)
        assert w == -2 * k + (1 + Fraction(2, m)) * i + (Fraction(1, 2) + Fraction(1, m)) * j
        assert (2 * m) % w.denominator == 0
        if m == 2:
            assert w == -2 * k + 2 * i + j


def test_center_weight_determinant_neutral():
    for m in (2, 3, 5):
        assert center_weight((1,) * (m + 2), m) == 0
    with pytest.raises(ValueError):
        center_weight((1, 2, 3), 2)


@given(st.integers(2, 6).flatmap(lambda m: st.tuples(st.just(m), st.lists(st.integers(-9, 9), min_size=m + 2, max_size=m + 2), st.integers(-5, 5))))
def test_center_weight_twist_invariant_and_additive(args):
    m, w, t = args
    assert center_weight([x + t for x in w], m) == center_weight(w, m)
    assert center_weight([2 * x for x in w], m) == 2 * center_weight(w, m)


def test_threshold_examples():
    for k in range(1, 6):
        assert gs_threshold(PairConfig(2, k)) == -2 * k + 1
    assert gs_threshold(PairConfig(4, 1)) == Fraction(-5, 4)


@pytest.mark.parametrize("m, k", RANGE)
def test_threshold_from_factor_weights(m, k):
    cfg = PairConfig(m, k)
    assert gs_threshold_from_factors(cfg) == gs_threshold(cfg)


@pytest.mark.parametrize("m, k", RANGE)
def test_threshold_dichotomy(m, k):
    cfg = PairConfig(m, k)
    thr = gs_threshold(cfg)
    for i, j, lam in lemma_components(cfg):
        w = center_weight(lowest_weight(lam, m + 2), m)
        if i >= 1 or j > 1:
            assert w > thr
        else:
            assert w <= thr


@pytest.mark.parametrize("m, k", [(2, 1), (3, 2), (2, 3), (4, 2)])
def test_gs_module(m, k):
    gs = gs_module(PairConfig(m, k))
    assert gs.partition == Partition((2 * k, 2 * k))
    assert gs.below_threshold == [(0, 0), (0, 1)]
    assert gs.in_sym == [(0, 0)]


def test_gs_module_flags_inconsistent_split():
    cfg = PairConfig(2, 1)
    real = square_split(cfg.base, cfg.n)
    swapped = SquareSplit(real.alt, real.sym)
    with pytest.raises(VerificationFailure):
        gs_module(cfg, swapped)


def test_complement_m2_k1():
    comp = moduli_complement(PairConfig(2, 1))
    assert comp.expansion == SchurExpansion(4, {Partition((1, 1, 1, 1)): 1})
    assert comp.removed == Partition((2, 2))
    assert (comp.complex_dim, comp.real_dim) == (1, 2)


def test_complement_m2_k2():
    comp = moduli_complement(PairConfig(2, 2))
    want = {Partition((4, 2, 2)): 1, Partition((3, 3, 1, 1)): 1, Partition((2, 2, 2, 2)): 1}
    assert comp.expansion == SchurExpansion(4, want)
    # d = 20: dim S^2 = 210, dim V(4,4,0,0) = 105
    assert comp.complex_dim == 210 - 105 == 84 + 20 + 1
    assert comp.real_dim == 210


@pytest.mark.parametrize("m, k", [(m, k) for m in (2, 3, 4) for k in (1, 2, 3)])
def test_complement_dimension_identity(m, k):
    cfg = PairConfig(m, k)
    comp = moduli_complement(cfg)
    d = dim_gl((k, k), m + 2)
    assert comp.real_dim == 2 * (d * (d + 1) // 2 - dim_gl((2 * k, 2 * k), m + 2))
    assert comp.expansion.is_nonnegative()


@pytest.mark.parametrize("m, k", [(2, 1), (2, 3), (3, 2), (3, 3)])
def test_component_records_sum_rules(m, k):
    cfg = PairConfig(m, k)
    recs = component_records(cfg)
    d = dim_gl((k, k), m + 2)
    assert sum(r.dim for r in recs) == d * d
    assert sum(r.dim for r in recs if r.parity == "sym") == d * (d + 1) // 2
    assert {r.parity for r in recs} == {"sym", "alt"}


def test_corollary_list():
    assert corollary_list(PairConfig(2, 1)) == []
    assert corollary_list(PairConfig(2, 2)) == [Partition((2, 2))]
    assert corollary_list(PairConfig(3, 5)) == [Partition((8, 2)), Partition((6, 4))]


def test_y_closed_form_bounds():
    # F(k pi_2) with m = 2: ks = (0, k, 0); both bounds see only k_2
    assert y_exponent_closed_form((0, 3, 0), 2, 2) == -3
    # k_{m+1} is dropped by the printed upper limit m
    assert y_exponent_closed_form((0, 0, 1), 2, 2) == 0
    assert y_exponent_closed_form((0, 0, 1), 2, 3) == Fraction(-1, 2)
    assert center_weight(lowest_weight((1, 1, 1), 4), 2) == Fraction(-1, 2)


def test_report_m2_k1():
    r = full_report(PairConfig(2, 1))
    assert r.gs_module == Partition((2, 2))
    assert r.vk_candidate == SchurExpansion(4, {Partition((1, 1, 1, 1)): 1})
    assert (r.vk_complex_dim, r.vk_real_dim, r.image_moduli_dim) == (1, 2, 1)
    assert r.paper_corollary_list == []
    assert r.paper_remark_value == 0
    assert r.paper_example_value == 632
    flags = r.match_flags
    assert flags["corollary_empty_iff_vk_su_nontrivial_part_empty"] is True
    assert flags["remark_formula_vs_vk_real_dim"] is False
    assert flags["remark_formula_with_m_read_as_n_vs_vk_real_dim"] is True
    assert flags["example_formula_with_(1+k)^1_vs_vk_real_dim"] is True
    assert flags["y_action_closed_form_upper_limit_m_plus_1"] is True
    assert flags["su_conversion_display_entry"] is None


def test_report_m2_k2_corollary():
    r = full_report(PairConfig(2, 2))
    assert r.paper_corollary_list == [Partition((2, 2))]
    assert r.paper_corollary_complex_dim == 20
    assert r.match_flags["corollary_dim_vs_vk_complex_dim"] is False


def test_report_m3_has_no_example_value():
    r = full_report(PairConfig(3, 1))
    assert r.paper_example_value is None
    assert r.match_flags["example_formula_vs_vk_real_dim"] is None


@pytest.mark.parametrize("m, k", [(2, 1), (3, 2)])
def test_report_json_schema(m, k):
    data = full_report(PairConfig(m, k)).to_json()
    text = json.dumps(data, sort_keys=True)
    assert json.loads(text) == data
    assert data["schema_version"] == 1
    assert set(data["threshold"]) == {"num", "den"}
    assert isinstance(data["vk_real_dim"], str)
    assert all(isinstance(c["dim"], str) for c in data["components"])
    assert [(c["i"], c["j"]) for c in data["components"]] == [(i, j) for i, j, _ in lemma_components(PairConfig(m, k))]
    assert data["image_moduli_dim_kind"] == "generic"
    assert int(data["vk_real_dim"]) == 2 * int(data["vk_complex_dim"])


def test_rigid_outcome_is_not_an_error():
    # an empty complement is reported, not raised: fake a split whose S^2 holds only the GS summand
    cfg = PairConfig(2, 1)
    real = square_split(cfg.base, cfg.n)
    only_gs = SquareSplit(SchurExpansion(4, {Partition((2, 2)): 1}), real.alt)
    comp = moduli_complement(cfg, only_gs)
    assert len(comp.expansion) == 0
    assert comp.real_dim == 0
