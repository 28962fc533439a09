"""Smoke test for the kstab_py extension module.

Build the module first (see README), then run:

    python python/smoke_test.py
"""

import json
import sys
from fractions import Fraction

import kstab_py


def main():
    assert set(kstab_py.EXAMPLES) == {"lixu-cubic", "conic-double-line"}

    cubic = kstab_py.Configuration.example("lixu-cubic")
    assert cubic.dimension == 1
    assert cubic.central_fiber == ["Z2^3 - Z0*Z3^2", "Z1^2", "Z1*Z2", "Z1*Z3"], cubic.central_fiber

    p = cubic.profile(2)
    assert (p["N"], p["n"], p["B"]) == (7, 6, 1)
    assert Fraction(p["gamma"]) == Fraction(1, 7)

    report = cubic.analyze(lmax=10)
    assert [Fraction(r["s"]) for r in report["rows"]] == [-l for l in range(1, 11)]
    assert report["invariants"]["DF1"] == "0"
    assert report["invariants"]["F1_class"] == "minus_infinity"
    assert report["invariants"]["s_closed_form"] == "-l"

    conic = kstab_py.Configuration(
        ["Z0", "Z1", "Z2"], ["Z1^2 - Z0*Z2"], ["Z0", "Z2"], {"Z1": 1}
    )
    checks = conic.checks(cap=10)
    assert checks["growth"] == "FAIL" and checks["reduced_fiber"] == "PASS"
    assert json.loads(conic.report_json(lmax=4))["invariants"]["DF1"] == "-1/2"
    assert conic.report_csv(lmax=2).splitlines()[0] == "l,N,n,B,gamma,norm,q,s"

    names = ["Z0", "Z1", "Z2", "Z3"]
    twisted = ["Z1^2 - Z0*Z2", "Z1*Z2 - Z0*Z3", "Z2^2 - Z1*Z3"]
    assert len(kstab_py.groebner_basis(names, twisted)) == 3
    assert "Z2^3 - Z0*Z3^2" in kstab_py.initial_ideal(names, twisted, [0, 1, 0, 0])
    assert kstab_py.normalize_polynomial(names, "-Z0*Z3^2 + Z2^3") == "Z2^3 - Z0*Z3^2"
    assert kstab_py.limit(["0", "-6"], ["1", "3"]) == "-2"
    assert kstab_py.limit(["0", "0", "-1"], ["1", "1"]) == "-infinity"
    assert kstab_py.interpolate([("0", "1"), ("1", "4"), ("2", "7"), ("3", "10")], 2) == ["1", "3"]

    for bad in (
        lambda: kstab_py.Configuration(["X", "Y", "Z", "T"], ["X*T - Y*Z"], ["X", "T", "Y"], {"Z": 2}),
        lambda: kstab_py.Configuration.example("unknown"),
        lambda: kstab_py.limit(["1"], ["0"]),
    ):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("kstab_py smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
