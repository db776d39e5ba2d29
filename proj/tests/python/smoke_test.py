"""End-to-end checks of the python module against values the C++ tests pin.

Runnable directly (python smoke_test.py) or under pytest; the module path
comes from PYTHONPATH, which the ctest registration points at the build tree.
"""

import json

import streamsub_py as sp


FN = json.dumps({
    "type": "modular",
    "weights": {"0": 5, "1": 3, "2": 1},
})
CONS = json.dumps({
    "k": 2,
    "matroids": [{"type": "uniform", "ground": [0, 1, 2], "rank": 2}],
})


def rat(j):
    return j["num"] / j["den"]


def test_exact_modular():
    r = json.loads(sp.exact(FN, CONS))
    assert r["ids"] == [0, 1]
    assert r["value"] == 8


def test_greedy_run_report():
    rep = json.loads(sp.run(FN, CONS, json.dumps({
        "algorithm": "greedy", "alpha": "0", "verify": True,
    })))
    assert rep["schema_version"] == 1
    assert rep["result"]["ids"] == [0, 1]
    assert rat(rep["result"]["value"]) == 8
    assert rep["bound_check"]["satisfied"]
    assert rep["stream"]["passes"] == 1


def test_exchange_displaces_cheapest():
    # Ascending delivery fills the rank; the heavy last element must push
    # out the cheapest member.
    fn = json.dumps({"type": "modular", "weights": {"0": 1, "1": 1, "2": 3}})
    rep = json.loads(sp.run(fn, CONS, json.dumps({
        "algorithm": "greedy", "alpha": "0", "beta": "1",
    })))
    assert rep["result"]["ids"] == [1, 2]
    assert rep["taken_count"] == 3
    exits = rep["logs"]["exits"]
    assert len(exits) == 1 and exits[0]["id"] == 0 and exits[0]["replaced_by"] == 2


def test_generated_roundtrip_and_determinism():
    fn1, cons1, _ = sp.generate("coverage-partition", 9, 3, 11)
    fn2, cons2, _ = sp.generate("coverage-partition", 9, 3, 11)
    assert fn1 == fn2 and cons1 == cons2
    opts = json.dumps({"algorithm": "iterated", "alpha": "auto",
                       "offline": "exact", "seed": 4, "verify": True})
    r1 = sp.run(fn1, cons1, opts)
    r2 = sp.run(fn1, cons1, opts)
    assert r1 == r2
    assert json.loads(r1)["bound_check"]["satisfied"]


def test_randomized_trials():
    fn, cons, _ = sp.generate("cut-cardinality", 8, 2, 3)
    rep = json.loads(sp.run(fn, cons, json.dumps({
        "algorithm": "randomized", "alpha": "auto", "trials": 5,
        "seed": 9, "verify": True,
    })))
    assert rep["trials"]["count"] == 5
    assert rep["bound_check"]["satisfied"]
    opt = json.loads(sp.exact(fn, cons))["value"]
    assert rat(rep["result"]["value"]) <= opt


def test_selftest_clean():
    r = json.loads(sp.selftest(2, 17))
    assert r["total_violations"] == 0
    assert r["total_checked"] > 0


def test_bad_input_raises():
    try:
        sp.run(FN, CONS, json.dumps({"algorithm": "nope"}))
    except RuntimeError:
        pass
    else:
        raise AssertionError("unknown algorithm must raise")


def main():
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print("python smoke tests passed")


if __name__ == "__main__":
    main()
