"""Smoke test for the pyxos extension.

Build first:  cargo build -p xos-py --release
Then run:     python3 crates/py/python/smoke_test.py [path/to/libpyxos.so]
"""

import importlib.machinery
import importlib.util
import json
import os
import sys
from pathlib import Path


def load(path):
    loader = importlib.machinery.ExtensionFileLoader("pyxos", str(path))
    spec = importlib.util.spec_from_file_location("pyxos", str(path), loader=loader)
    module = importlib.util.module_from_spec(spec)
    loader.exec_module(module)
    return module


def locate():
    if len(sys.argv) > 1:
        return Path(sys.argv[1])
    if "PYXOS_LIB" in os.environ:
        return Path(os.environ["PYXOS_LIB"])
    root = Path(__file__).resolve().parents[3]
    for profile in ("release", "debug"):
        candidate = root / "target" / profile / "libpyxos.so"
        if candidate.exists():
            return candidate
    sys.exit("libpyxos.so not found; run `cargo build -p xos-py --release`")


def main():
    px = load(locate())

    rep = px.XosRepresentation([[3, -1, 2], [1, 2, -5]])
    assert (rep.n, rep.width) == (3, 2)
    assert rep.evaluate([0, 2]) == 5
    assert rep.evaluate([]) == 0
    assert rep.check_star() == (False, (0, 1))

    inst = rep.to_instance()
    r = px.solve(inst, "exact2")
    assert r["value"] == 5 and r["output"] == [0, 2], r
    assert r["oracle_calls"] <= 28

    oracle = px.CountingOracle(inst)
    oracle.value([0])
    oracle.peek([1, 2])
    assert oracle.calls == 1

    general = px.Instance.hard_general(8, 2, seed=7)
    assert px.solve(general, "brute")["value"] == 4
    assert general.planted_optimum()[1] == 4
    verdicts = px.classify(general)
    assert verdicts["normalized"][0] and not verdicts["monotone"][0]

    kxos = px.Instance.hard_kxos(3, 4, 1, seed=1)
    assert kxos.n == 20
    assert px.solve(kxos, "kminus1")["value"] >= 36

    additive = px.Instance.explicit([[2, 0, 5, 1]])
    assert all(holds for holds, _ in px.classify(additive).values())

    a = px.solve(px.Instance.random(12, 2, seed=3), "sample", epsilon="1", seed=9, allow_fallback=False)
    b = px.solve(px.Instance.random(12, 2, seed=3), "sample", epsilon="1", seed=9, allow_fallback=False)
    assert a == b

    config = {
        "instance": json.loads(px.Instance.needle(24, 12, 6).to_json()),
        "reseed_instance": True,
        "algorithm": {"algo": "probe", "queries": 10, "size": 6},
        "trials": 20,
        "base_seed": 4,
        "format": "csv",
    }
    csv = px.bench(json.dumps(config))
    assert csv.splitlines()[0] == px.CSV_HEADER
    assert csv == px.bench(json.dumps(config))

    try:
        px.XosRepresentation([[1, 2], [3]])
    except ValueError:
        pass
    else:
        raise AssertionError("ragged rows accepted")

    print("pyxos smoke test passed")


if __name__ == "__main__":
    main()
