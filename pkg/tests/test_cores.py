import math

import numpy as np
import pytest

import hornlab as hl

PI = math.pi


def test_n_of_E_boundary_cases(example):
    assert hl.n_of_E(example, PI**2) == 1  # b_1 = 1 sits exactly on the threshold
    assert hl.n_of_E(example, 16 * PI**2) == 2
    assert hl.n_of_E(example, 0.5 * PI**2) == 0


def test_n_of_E_threshold_property(example):
    for e in np.logspace(2, 9, 40):
        n = hl.n_of_E(example, e)
        assert n >= 1
        thr = PI / math.sqrt(e)
        assert example.b(n) >= thr * (1 - 1e-12)
        assert example.b(n + 1) < thr * (1 + 1e-12)


def test_n_of_E_nesting(example):
    es = np.logspace(1, 8, 50)
    ns = [hl.n_of_E(example, e) for e in es]
    assert all(a <= b for a, b in zip(ns, ns[1:]))


def test_core_stats_example_energy(example):
    core = hl.core_stats(example, 16 * PI**2)
    assert core.n == 2
    assert core.volume == 3.0  # 1*1 + 8*(1/4)
    assert core.perimeter_union == 20.0  # 2*9 + 2*1
    assert core.perimeter_sum == 20.5  # 2(1+1) + 2(8+0.25)
    assert core.perimeter_union <= core.perimeter_sum


def test_core_stats_empty(example):
    core = hl.core_stats(example, 1.0)
    assert core.n == 0 and core.volume == 0.0


def test_core_volume_closed_form(example):
    # on this domain f(k)*b_k = k, so the area telescopes to n(n+1)/2
    for e in np.logspace(2, 8, 40):
        core = hl.core_stats(example, e)
        assert core.volume == core.n * (core.n + 1) / 2


def test_core_monotone_geometry(example):
    es = np.logspace(2, 8, 40)
    cores = [hl.core_stats(example, e) for e in es]
    for a, b in zip(cores, cores[1:]):
        assert a.volume <= b.volume
        assert a.perimeter_union <= b.perimeter_union
        assert a.perimeter_sum <= b.perimeter_sum


def test_perimeter_conventions_gap_bound(example):
    # |sum - union| <= 2*sum b_k + 2*b_1 by the staircase accounting
    for e in np.logspace(2, 8, 20):
        core = hl.core_stats(example, e)
        n = core.n
        bound = 2 * math.fsum(example.b(k) for k in range(1, n + 1)) + 2 * example.b(1)
        assert abs(core.perimeter_sum - core.perimeter_union) <= bound + 1e-9


def test_fit_growth_exact_power_law():
    es = np.logspace(2, 6, 12)
    fit = hl.fit_growth([(e, e**1.5) for e in es])
    assert fit.exponent == pytest.approx(1.5, abs=1e-12)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
    assert fit.coefficient == pytest.approx(1.0, rel=1e-10)
    assert fit.energy_range == (es[0], es[-1])


def test_fit_growth_guards():
    with pytest.raises(ValueError):
        hl.fit_growth([(10.0**k, 1.0) for k in range(5)])  # too few
    with pytest.raises(ValueError):
        hl.fit_growth([(10.0**k, -1.0) for k in range(12)])


def test_weyl_residual_sum_convention(example):
    for e in np.logspace(2, 7, 25):
        dec = hl.weyl_decomposition(example, e, "sum")
        scale = max(
            1.0, abs(dec.volume_term), abs(dec.perimeter_term), abs(dec.g_term)
        )
        assert abs(dec.residual) <= 1e-6 * scale
        assert dec.reconstruction == hl.lower_count(example, e)
        assert not dec.advisory


def test_weyl_residual_union_convention(example):
    # dropping interior walls leaves a residual ~ 2(sum b_k - b_1)*sqrt(E)/4pi,
    # i.e. about 0.103*sqrt(E) on this domain; assert the O(sqrt(E)) envelope
    ratios = []
    for e in np.logspace(3, 7, 25):
        dec = hl.weyl_decomposition(example, e, "union")
        ratios.append(abs(dec.residual) / math.sqrt(e))
    assert max(ratios) <= 0.2
    assert ratios[-1] >= 0.05  # the defect is genuinely first order in sqrt(E)


def test_weyl_advisory_for_nonsummable(harmonic):
    dec = hl.weyl_decomposition(harmonic, 1e4, "sum")
    assert dec.advisory
    scale = max(1.0, abs(dec.volume_term))
    assert abs(dec.residual) <= 1e-6 * scale  # identity holds regardless


def test_weyl_g_bound(example):
    for e in np.logspace(3, 7, 15):
        dec = hl.weyl_decomposition(example, e, "union")
        core = hl.core_stats(example, e)
        assert abs(dec.g_term) <= 0.25 * core.perimeter_union * math.sqrt(e)


def test_weyl_rejects_unknown_convention(example):
    with pytest.raises(hl.SpecError):
        hl.weyl_decomposition(example, 100.0, "fancy")


def test_sweep_row_keys(example):
    row = hl.sweep_row(example, 1e4)
    assert list(row) == [
        "E", "n_E", "N_lower", "N_upper", "gap", "gap_certificate", "vol2",
        "perim_union", "perim_sum", "vol_term", "perim_term", "g_term", "residual",
    ]
    assert row["N_lower"] == 8413
