"""Smoke test for the `fsing` Python module.

Builds the extension with cargo unless FSING_MODULE_DIR points at a directory
that already holds an importable `fsing` module, then exercises the main
entry points.
"""

import json
import os
import shutil
import subprocess
import sys
import sysconfig
import tempfile
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    prebuilt = os.environ.get("FSING_MODULE_DIR")
    if prebuilt:
        sys.path.insert(0, prebuilt)
        import fsing
        return fsing
    subprocess.run(
        ["cargo", "build", "--release", "-p", "fsing-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / ("libfsing.dylib" if sys.platform == "darwin" else "libfsing.so")
    target = Path(tempfile.mkdtemp(prefix="fsing-py-"))
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy(lib, target / ("fsing" + suffix))
    sys.path.insert(0, str(target))
    import fsing
    return fsing


def main():
    fsing = load_module()

    r = fsing.Ring(5, ["U", "V", "Y", "Z"], ["U*V", "U*Z", "Z*(V - Y^2)"], weights=["2", "2", "1", "1"])
    member, nf = r.member("Y^3*Z^4", ["Y^2*(U^2 - Z^4)"])
    assert not member and nf == "Y^3*Z^4", (member, nf)
    v = r.frobenius_closure("Y^3*Z^4", ["Y^2*(U^2 - Z^4)"], e_max=3)
    assert v.status == "InFrobeniusClosureAt(1)" and v.decided, v
    assert fsing.Ring(2, ["U", "V", "Y", "Z"], ["U*V", "U*Z", "Z*(V - Y^2)"]).fedder().status == "NotFPure"
    assert r.fedder(["U*V", "U*Z", "Z*V"]).status == "FPure"

    ex61 = fsing.Ring.from_file("ex61.ring")
    flags = "normal,dim2,cohen-macaulay,coprime-order,avoids-minimal-primes,large-char"
    assert ex61.a_invariant(flags) == "-1"
    order = ex61.class_order(["V", "W"], "U", denominator="T^3", n_max=4)
    assert order["order"] == 3 and order["deg_u"] == "-1", order
    _, _, _, a_cover = fsing.cover_stats(order["order"], order["deg_u"])
    assert Fraction(a_cover) == Fraction(1, 3)
    assert ex61.f_regular_dim2(["V", "W"], "U", flags, denominator="T^3", n_max=4).status == "NotFRegular"
    assert ex61.f_rational_dim2(flags).status == "FRational"
    bare = fsing.Ring(5, ["T", "U", "V", "W"], ex61.relations, weights=["1", "4", "4", "4"])
    try:
        bare.a_invariant("")
    except ValueError as e:
        assert "cohen-macaulay" in str(e)
    else:
        raise AssertionError("a missing hypothesis must raise")

    d = fsing.Divisor.family(2, [1, 2, 3, 4, 5])
    assert d.degree == "5/2" and d.a_invariant() == -1
    ob = d.fpure_obstruction(7)
    assert ob.status == "NotFPure" and ob.certificate == ["-3"], ob
    assert d.section_dims(7, 4) == [1, 1, 6, 6, 11]
    assert fsing.family_presentation_holds(2, [1, 2, 3, 4, 5], 7)
    assert fsing.Divisor("1/2*(X - 1*Y)").scale(3).round_down() == fsing.Divisor("1*(X - 1*Y)")

    code, text = fsing.run(["corpus", "ex62"])
    report = json.loads(text)
    assert code == 0 and report["failures"] == [], report["failures"]
    print("python smoke test passed")


if __name__ == "__main__":
    main()
