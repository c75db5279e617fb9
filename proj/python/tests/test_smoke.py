import pytest

import grkoszul


def test_b5_koszul_exact():
    r = grkoszul.koszul_check("model:b5", max_degree=8)
    assert r["koszul"] and r["exact"]
    assert r["gldim"] == 2


def test_cubic_witness():
    r = grkoszul.koszul_check("model:cubic", max_degree=8)
    assert not r["koszul"]
    assert "degree-2 syzygy head in grade 3" in r["witness"]


def test_a1_table_all_ones():
    table = grkoszul.kl_table("A", 1, 5, 6)
    assert table[("e", "e")] == [1]
    assert all(c == [1] for c in table.values())
    assert all(c == [1] for c in grkoszul.kl_table("A", 1, 5, 6, inverse=True).values())


def test_predicted_layers():
    layers = grkoszul.predict_layers("A", 1, 5, [5])
    assert layers == [[([5], 1)], [([3], 1)]]
    assert grkoszul.lcf_dimension("A", 1, 5, [5]) == 2


def test_run_matches_cli_contract():
    status, out, _ = grkoszul.run(["algebra", "koszul-check", "model:b5", "--max-degree", "8"])
    assert status == 0
    assert "koszul=true" in out
    for line in out.splitlines():
        assert line.startswith("#") or "=" in line
    status, _, err = grkoszul.run(["algebra", "koszul-check", "/nonexistent.qalg"])
    assert status == 2 and err


def test_errors_are_typed():
    with pytest.raises(grkoszul.InputError):
        grkoszul.koszul_check("model:nope")
    with pytest.raises(grkoszul.Error):
        grkoszul.koszul_check("model:nope")


def test_selftest():
    assert all(grkoszul.selftest().values())
