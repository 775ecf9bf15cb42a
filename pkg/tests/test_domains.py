import json
import math
from concurrent.futures import ThreadPoolExecutor

import pytest

import hornlab as hl


def test_a_recursion(example):
    assert hl.a_of(example, 1) == 0.0
    assert hl.a_of(example, 2) == 1.0
    assert hl.a_of(example, 4) == 36.0  # 1 + 8 + 27


def test_a_increments_match_f(example):
    example.warm(200)
    for k in range(1, 200):
        step = hl.a_of(example, k + 1) - hl.a_of(example, k)
        f = example.f(k)
        assert step == pytest.approx(f, rel=4e-16, abs=0.0)


def test_memo_growth_order_independent():
    d1 = hl.example_domain()
    d2 = hl.example_domain()
    hi = d1.b(500)
    lo = d1.b(3)
    assert d2.b(3) == lo
    assert d2.b(500) == hi


def test_concurrent_reads_consistent(example):
    def worker(k):
        return example.a(k)

    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(worker, [97, 311, 54, 700, 97, 311] * 20))
    solo = hl.example_domain()
    for k, v in zip([97, 311, 54, 700, 97, 311] * 20, results):
        assert v == solo.a(k)


def test_validate_example_passes(example):
    report = hl.validate_domain(example, 100)
    assert report.ok
    assert report.summable_b == "yes"


def test_validate_harmonic_flags_nonsummable(harmonic):
    report = hl.validate_domain(harmonic, 100)
    assert report.ok
    assert report.summable_b == "no"
    assert harmonic.b_sum_estimate is None


def test_validate_increasing_b_fails():
    dom = hl.SimpleDomain(hl.power(1, 1), hl.power(1, 1))
    report = hl.validate_domain(dom, 50)
    failed = {name for name, passed, _ in report.checks if not passed}
    assert "b non-increasing" in failed
    assert "b converges to 0" in failed
    assert not report.ok


def test_validate_decaying_width_fails():
    dom = hl.SimpleDomain(hl.power(1, -2), hl.power(1, -0.5))
    report = hl.validate_domain(dom, 50)
    failed = {name for name, passed, _ in report.checks if not passed}
    assert "f bounded below by a positive constant" in failed


def test_validate_horizon_guard(example):
    with pytest.raises(hl.SpecError):
        hl.validate_domain(example, 1)


def test_b_sum_estimate_example(example):
    assert example.b_sum_estimate == pytest.approx(math.pi**2 / 6, rel=1e-14)


def test_parse_domain_and_file_loading(tmp_path):
    cfg = {
        "b": {"kind": "power", "coefficient": 1, "exponent": -2},
        "f": {"kind": "power", "coefficient": 1, "exponent": 3},
    }
    path = tmp_path / "dom.json"
    path.write_text(json.dumps(cfg))
    dom = hl.load_domain(str(path))
    assert dom.b(2) == 0.25
    assert dom.f(2) == 8.0


def test_parse_domain_rejects_unknown_fields():
    with pytest.raises(hl.SpecError):
        hl.parse_domain({"b": {"kind": "power", "coefficient": 1, "exponent": -2}})
    with pytest.raises(hl.SpecError):
        hl.parse_domain(
            {
                "b": {"kind": "power", "coefficient": 1, "exponent": -2},
                "f": {"kind": "power", "coefficient": 1, "exponent": 3},
                "extra": 1,
            }
        )


def test_load_domain_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(hl.SpecError):
        hl.load_domain(str(path))
    with pytest.raises(hl.SpecError):
        hl.load_domain(str(tmp_path / "missing.json"))


def test_presets():
    assert set(hl.PRESETS) == {"example", "harmonic"}
    assert hl.load_domain("example").f(2) == 8.0
