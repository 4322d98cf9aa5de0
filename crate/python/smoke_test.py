"""Smoke test for the Python bindings: exact arithmetic, tables, charts and a suite run."""

import json
import sys

import eiii_atlas_py as ea


def check(cond, what):
    if not cond:
        print(f"FAIL {what}")
        sys.exit(1)
    print(f"ok   {what}")


def main():
    half = ea.Scalar("1/2")
    r2 = ea.Scalar.sqrt2()
    check(r2 * r2 == ea.Scalar("2"), "sqrt2 squared is 2")
    x = ea.Scalar("3/2") + half * r2
    check(x * x.inverse() == ea.Scalar("1"), "inverse of 3/2 + sqrt2/2")
    check((ea.Scalar.i() * ea.Scalar.i()) == ea.Scalar("-1"), "i squared is -1")

    table = ea.octonion_table()
    check(len(table) == 8 and table[1][1] == -1 and table[1][2] == 4, "octonion table e1e1 = -e0, e1e2 = e3")
    e1, e2 = ea.Octonion.unit(1), ea.Octonion.unit(2)
    check(e1 * e2 == ea.Octonion.unit(3), "e1 * e2 = e3 through the class")
    check((e1 * e2).norm2() == ea.Scalar("1"), "unit norm")

    d16 = json.loads(ea.fierz_table(16, "even"))
    check(d16["matrix"][0] == ["1/128", "-1/128", "1/128", "-1/128", "1/256"], "D=16 Fierz row A0")

    f4 = json.loads(ea.structure_constants("f4"))
    check(f4["dim"] == 52, "f4 structure constants")

    p0 = ea.Vector27.lowest()
    check(p0.on_orbit() and p0.cubic().is_zero(), "lowest weight is on the orbit")
    p = ea.orbit_sample(7, 5)
    check(p.on_orbit(), "orbit sample satisfies the quadratic relations")
    check(p.diamond(p).is_zero(), "orbit points square to zero under the diamond product")
    try:
        proj = json.loads(p.orbit_projection())
        check(len(proj["diag"]) == 3, "orbit projection")
    except ValueError as e:
        check("s + t = 0" in str(e), "orbit projection rejects the stratum at infinity")

    psi = [1] + [0] * 15
    point, projected = ea.solve("s", json.dumps({"psi": psi, "s": 1}))
    check(point.on_orbit() and not projected, "s chart solve")
    try:
        ea.solve("tplus", json.dumps({"t": 0, "eta": [1] + [0] * 7, "u": [0] * 8}))
        check(False, "t+ = 0 rejected")
    except ValueError as e:
        check("tcoord must be nonzero" in str(e), "t+ = 0 rejected")

    passed, report = ea.verify("octonion", seed=1, trials=5)
    check(passed and json.loads(report)["suite"] == "octonion", "octonion suite passes")
    again = ea.verify("octonion", seed=1, trials=5)[1]
    check(report == again, "reports are byte-identical")
    print("all smoke checks passed")


if __name__ == "__main__":
    main()
