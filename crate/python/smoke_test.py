"""Smoke test for the morse_snakes extension module.

Build and install with `maturin develop --release` from crates/python, or
copy target/release/libmorse_snakes.so to morse_snakes.so on PYTHONPATH.
"""

from fractions import Fraction

import morse_snakes as ms


def main():
    paps = ms.enumerate_paps(4)
    assert [p.entries for p in paps] == [[2, 1, 4, 3], [3, 1, 4, 2], [3, 2, 4, 1], [4, 1, 3, 2], [4, 2, 3, 1]]
    assert ms.count_paps(5) == 16 and ms.count_paps(6) == 61
    assert ms.count_paps(40) > 2**64
    assert ms.euler_bernoulli_triangle(6)[5] == [0, 5, 10, 14, 16, 16]
    assert ms.is_pap([3, 1, 4, 2]) and not ms.is_pap([1, 2, 3])

    p = ms.Polynomial.from_critical_points([0, 1, 3, "4.4"])
    out = ms.passport(p)
    assert out["kind"] == "snake" and out["passport"] == ms.Passport([3, 1, 4, 2])
    assert ms.passport([0, 0, 1])["passport"].entries == [1]
    assert ms.passport([0, 0, -2, 0, 1])["kind"] == "degenerate"

    target = ms.Passport.parse("4,1,5,3,6,2")
    points = ms.construct(target)
    assert points[0] == 0 and all(isinstance(x, Fraction) for x in points)
    assert ms.passport(ms.Polynomial.from_critical_points(points))["passport"] == target
    try:
        ms.construct("1,2,3")
    except ValueError as e:
        assert "not alternating" in str(e)
    else:
        raise AssertionError("construct accepted a non-alternating sequence")

    s = ms.classify5(Fraction(12, 5), "11/20")
    assert s["kind"] == "region" and s["name"] == "OAF" and s["passport"].entries == [4, 2, 3, 1]
    assert ms.classify5(3, Fraction(1, 2))["kind"] == "outside"
    assert set(ms.landmarks5()) == {"o", "a", "b", "d", "e", "f"}

    scan = ms.scan_section("9/10", resolution=64)
    assert len(scan["components"]) == 5
    assert all(c["verified"] for c in scan["components"])
    print("smoke test passed")


if __name__ == "__main__":
    main()
