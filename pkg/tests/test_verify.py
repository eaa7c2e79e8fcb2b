import json
from fractions import Fraction

import pytest

import quasiflags.characters as characters
from quasiflags.characters import Character, TorusWeight
from quasiflags.localization import ParameterPoint
from quasiflags.verify import (GenericityExhausted, run_properties, verify_main,
                               verify_toda)


def test_verify_main_passes_small_scales():
    for n, degree in ((2, 5), (3, 3)):
        report = verify_main(n, degree, trials=3, seed=42)
        assert report["verdict"] == "pass"
        assert len(report["trials"]) == 3
        for trial in report["trials"]:
            assert trial["all_equal"]
            assert trial["first_mismatch"] is None


def test_verify_main_explicit_point():
    pt = ParameterPoint((Fraction(7, 3), Fraction(-7, 3)), Fraction(1), Fraction(3, 2))
    report = verify_main(2, 6, trials=5, seed=0, explicit_point=pt)
    assert report["verdict"] == "pass"
    assert len(report["trials"]) == 1   # explicit point short-circuits sampling


def test_verify_main_explicit_nongeneric_point_exhausts():
    pt = ParameterPoint((Fraction(1), Fraction(-1)), Fraction(1), Fraction(1))
    with pytest.raises(GenericityExhausted):
        verify_main(2, 4, trials=1, seed=0, explicit_point=pt)


def test_verify_toda_passes():
    report = verify_toda(3, 3, trials=3, seed=9)
    assert report["verdict"] == "pass"
    for trial in report["trials"]:
        for diag in trial["limit_diagnostics"]:
            assert diag["errors_strictly_decreasing"]


def test_properties_pass_default_scale():
    report = run_properties(3, 3, seed=15)
    failed = [r["name"] for r in report["records"] if not r["passed"]]
    assert report["verdict"] == "pass", failed


def test_reports_are_deterministic_and_worker_invariant():
    base = json.dumps(verify_main(3, 3, trials=2, seed=77), sort_keys=True)
    again = json.dumps(verify_main(3, 3, trials=2, seed=77), sort_keys=True)
    threaded = json.dumps(verify_main(3, 3, trials=2, seed=77, jobs=3), sort_keys=True)
    assert base == again == threaded
    other_seed = json.dumps(verify_main(3, 3, trials=2, seed=78), sort_keys=True)
    assert base != other_seed


def _transposed_pair_character(original):
    def flipped(d, d_prime, n):
        char = original(d, d_prime, n)
        mirrored = {TorusWeight(tuple(-c for c in w.a_coeffs), w.x_coeff): m
                    for w, m in char.terms.items()}
        return Character(mirrored)
    return flipped


def test_injected_sign_fault_fails_at_lowest_degree(monkeypatch):
    original = characters.pair_character
    characters.clear_caches()
    monkeypatch.setattr(characters, "pair_character",
                        _transposed_pair_character(original))
    try:
        report = verify_main(2, 4, trials=1, seed=5)
        assert report["verdict"] == "fail"
        trial = report["trials"][0]
        assert trial["first_mismatch"] == "1"
        assert trial["comparisons"][0]["equal"]      # degree zero still agrees
        assert not trial["comparisons"][1]["equal"]  # lowest degree witnesses
    finally:
        monkeypatch.undo()
        characters.clear_caches()


def test_fault_free_after_cache_reset():
    report = verify_main(2, 4, trials=1, seed=5)
    assert report["verdict"] == "pass"
