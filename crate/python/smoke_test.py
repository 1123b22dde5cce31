"""Smoke test for the totalcolor extension module.

Build and install first, e.g. `pip install --no-build-isolation -e crates/py`
or `maturin develop -m crates/py/Cargo.toml`, then run this script.
"""

import totalcolor as tc


def main():
    assert "all8" in tc.presets() and len(tc.presets()) == 17

    c5 = tc.family("cycle:5")
    r = tc.solve(c5, preset="all8")
    assert r["status"] == "exact" and r["value"] == 5, r
    assert tc.verify(c5, r["witness"], preset="all8")["ok"]

    # edge i of the coloring is the i-th entry of tc.edges(c5)
    edges = tc.edges(c5)
    colors = {(i, (i + 1) % 5): i + 1 for i in range(5)}
    ec = [colors.get((a, b), colors.get((b, a))) for a, b in edges]
    fixture = {"k": 5, "vertex_colors": [4, 5, 1, 2, 3], "edge_colors": ec}
    assert tc.verify(c5, fixture, preset="all8")["ok"]
    fixture["vertex_colors"][1] = 4
    bad = tc.verify(c5, fixture, preset="all8")
    assert not bad["ok"] and bad["violations"][0]["kind"] == "improper"

    k5 = tc.family("complete:5")
    r = tc.solve(k5, preset="v_vdtc")
    assert r["status"] == "infeasible_structurally" and len(r["twin_pairs"]) == 10

    star = tc.family("star:5")
    assert tc.solve(star, conditions=["C7"], witness=False)["value"] == 5

    rep = tc.construct("compose", tc.family("kb:3,2"))
    assert rep["verdict"]["ok"] and rep["output"]["k"] == 6

    checks = tc.bounds(c5)
    assert checks and not any(c["holds"] is False for c in checks)

    assert len(tc.connected_graphs(3, 5)) == 29

    try:
        tc.solve("zz", preset="mu")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed graph6 accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
