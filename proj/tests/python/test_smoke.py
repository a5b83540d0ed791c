import pytest

import normone


def test_builtin_fields():
    names = normone.builtin_fields()
    for n in ("Qi", "Qsqrt-3", "Qsqrt-5", "Qzeta5"):
        assert n in names


def test_torsion_counts():
    assert normone.count_sk(normone.load_field("Qi"), "1") == 4
    assert normone.count_sk(normone.load_field("Qsqrt-3"), "1") == 6
    assert normone.count_sk(normone.load_field("Qzeta5"), "1") == 10


def test_sqrt5_height_matches_oracle():
    F = normone.load_field("Qi")
    pts = normone.enumerate_sk(F, "sqrt(5)")
    assert len(pts) == 12 == normone.count_sk(F, "sqrt(5)")
    assert sum(p["torsion"] for p in pts) == 4


def test_quadrant_points():
    pts = normone.enumerate_sk(normone.load_field("Qi"), "sqrt(5)", arc="0:pi/2")
    assert sorted((p["gamma"][0], p["gamma"][1], p["m"]) for p in pts) == [(1, 0, 1), (3, 4, 5), (4, 3, 5)]


def test_count_report():
    r = normone.count_report(normone.load_field("Qi"), "5", oracle=True)
    assert r["sieve"] == r["oracle"] == 36
    assert r["status"] == "ok"


def test_constants():
    c = normone.constants(normone.load_field("Qi"))
    assert c["A_K"] == pytest.approx(0.20264236728467552, rel=1e-12)


def test_s2_and_histogram():
    assert normone.count_s2("0:pi", "1") == 4
    csv = normone.histogram_csv(normone.load_field("Qi"), "10", 4)
    assert csv.splitlines()[0] == "bin_lo,bin_hi,count"
    assert sum(int(line.split(",")[2]) for line in csv.splitlines()[1:]) == normone.count_sk(normone.load_field("Qi"), "10")


def test_config_error():
    with pytest.raises(ValueError):
        normone.load_field("nope")
