"""Smoke test for the `unichar` extension module."""

import json
from fractions import Fraction

import unichar


def main():
    p = unichar.compute("sp", 1, 1, [1])
    assert str(p) == "x1 + x1^-1 + z1", p
    assert p == unichar.LaurentPoly("z1 + x1 + x1^-1")
    assert str(unichar.compute("sp", 0, 0, [])) == "1"
    assert str(unichar.compute("sp", 1, 0, [2, 1], [1])) == str(unichar.matrix_element("sp", [1], [2, 1], 1, 0))

    sq = unichar.LaurentPoly("x1 + x1^-1") * unichar.LaurentPoly("x1 + x1^-1")
    assert str(sq) == "x1^2 + 2 + x1^-2", sq
    assert unichar.LaurentPoly("x1^2 - x1^-2").evaluate({"x1": 3}) == Fraction(80, 9)

    assert unichar.pairing("sp", [2, 1], [2, 1]) == 1
    assert unichar.pairing("o", [2, 1], [1, 1]) == 0
    assert len(unichar.gt_chains([1], 1)) == 3
    assert unichar.newton(1, 1, 4)

    reports = json.loads(unichar.verify("gt", json.dumps({"max_weight": 3})))
    assert all(not r["failures"] for r in reports), reports

    try:
        unichar.compute("sp", 1, 0, [3, 3, 3])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
    print("smoke test ok")


if __name__ == "__main__":
    main()
