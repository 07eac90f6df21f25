"""Cremona involution on the blown-up P^3 ring and its record forms."""

import random

from cremona import chow, p3

R = p3.RING


def test_involution_on_every_basis_element():
    for e in R.basis():
        assert p3.cremona(p3.cremona(R.cls(e))) == R.cls(e), e


def test_cremona_image_of_H():
    terms = [("H", 3)]
    terms += [(f"E{i}", -2) for i in p3.POINTS]
    terms += [(("E", q), -1) for q in p3.PAIRS]
    assert p3.cremona(R.cls("H")) == R.make_class(1, terms)


def test_cremona_swaps_complementary_lines():
    assert p3.cremona(R.cls("E01")) == R.cls("E23")
    assert p3.cremona(R.cls("E23")) == R.cls("E01")
    assert p3.cremona(R.cls("E02")) == R.cls("E13")


def test_cremona_fixes_point_class():
    assert p3.cremona(R.cls("p")) == R.cls("p")


def test_cremona_is_ring_automorphism():
    # every basis pair with grade sum <= 3, via the stored product table
    elems = list(R.basis())
    for a in elems:
        for b in elems:
            if a.grade + b.grade > 3 or a > b:
                continue
            lhs = p3.cremona(R.mul(R.cls(a), R.cls(b)))
            rhs = R.mul(p3.cremona(R.cls(a)), p3.cremona(R.cls(b)))
            assert lhs == rhs, (a, b)


def test_normalize_section_ruling():
    got = p3.normalize([("g01", 1)])
    want = R.make_class(2, [("f01", 1), ("l", 1), ("l0", -1), ("l1", -1)])
    assert got == want


def test_normalize_basis_passthrough():
    assert p3.normalize([("f01", 1)]) == R.cls("f01")


def test_normalize_cancellation():
    assert p3.normalize([("g01", 1), ("g01", -1)]).is_zero()


def test_divisor_record_roundtrip():
    D = p3.P3Divisor(5, (2, 1, 0, -1), (1, 0, 0, 2, 0, -3))
    assert p3.divisor_from_class(p3.divisor_class(D)) == D


def test_curve_record_roundtrip():
    C = p3.P3Curve(4, (1, 1, 2, 0), (0, 1, 0, 0, -1, 2))
    assert p3.curve_from_class(p3.curve_class(C)) == C


def test_cremona_divisor_quadric_through_four_points_is_stable():
    D = p3.P3Divisor(2, (1, 1, 1, 1), (0,) * 6)
    assert p3.cremona_divisor(D) == D


def test_cremona_divisor_contracted_plane():
    # plane through three of the four points: degree drops to 0 and the
    # class comes back as minus an exceptional divisor plus line corrections
    D = p3.P3Divisor(1, (1, 1, 1, 0), (0,) * 6)
    got = p3.cremona_divisor(D)
    assert got.d == 0
    assert got.m == (0, 0, 0, -1)
    assert got.nl == (0, 0, -1, 0, -1, -1)
    assert p3.cremona_divisor(got) == D


def test_cremona_divisor_zero():
    Z = p3.P3Divisor(0, (0,) * 4, (0,) * 6)
    assert p3.cremona_divisor(Z) == Z


def test_cremona_curve_general_line_to_twisted_cubic():
    C = p3.P3Curve(1, (0, 0, 0, 0), (0,) * 6)
    got = p3.cremona_curve(C)
    assert (got.d, got.m, got.nl) == (3, (1, 1, 1, 1), (0,) * 6)


def test_cremona_curve_line_through_two_points_contracts():
    C = p3.P3Curve(1, (1, 1, 0, 0), (0,) * 6)
    got = p3.cremona_curve(C)
    assert got.d == -1
    assert got.m == (0, 0, -1, -1)
    assert got.nl == (0,) * 6
    assert p3.cremona_curve(got) == C


def test_cremona_records_involutive_random():
    rng = random.Random(3)
    for _ in range(100):
        D = p3.P3Divisor(rng.randint(-3, 3),
                         [rng.randint(-3, 3) for _ in range(4)],
                         [rng.randint(-3, 3) for _ in range(6)])
        C = p3.P3Curve(rng.randint(-3, 3),
                       [rng.randint(-3, 3) for _ in range(4)],
                       [rng.randint(-3, 3) for _ in range(6)])
        assert p3.cremona_divisor(p3.cremona_divisor(D)) == D
        assert p3.cremona_curve(p3.cremona_curve(C)) == C


def test_record_formulas_agree_with_class_map_on_units():
    # both sides are linear in the record, so the 11 unit records settle
    # the whole lattice; the sampled box below is belt and braces
    units = [p3.P3Divisor(1, (0,) * 4, (0,) * 6)]
    units += [p3.P3Divisor(0, tuple(int(t == i) for t in range(4)), (0,) * 6)
              for i in range(4)]
    units += [p3.P3Divisor(0, (0,) * 4, tuple(int(t == a) for t in range(6)))
              for a in range(6)]
    for D in units:
        via_class = p3.divisor_from_class(p3.cremona(p3.divisor_class(D)))
        assert p3.cremona_divisor(D) == via_class
        C = p3.P3Curve(D.d, D.m, D.nl)
        via_class = p3.curve_from_class(p3.cremona(p3.curve_class(C)))
        assert p3.cremona_curve(C) == via_class


def test_record_formulas_agree_with_class_map_sampled_box():
    rng = random.Random(17)
    for _ in range(2000):
        vals = [rng.randint(-3, 3) for _ in range(11)]
        D = p3.P3Divisor(vals[0], vals[1:5], vals[5:])
        via_class = p3.divisor_from_class(p3.cremona(p3.divisor_class(D)))
        assert p3.cremona_divisor(D) == via_class
        C = p3.P3Curve(vals[0], vals[1:5], vals[5:])
        via_class = p3.curve_from_class(p3.cremona(p3.curve_class(C)))
        assert p3.cremona_curve(C) == via_class


def test_degree_pairing_invariant():
    rng = random.Random(23)
    for _ in range(200):
        D = p3.P3Divisor(rng.randint(-3, 3),
                         [rng.randint(-3, 3) for _ in range(4)],
                         [rng.randint(-3, 3) for _ in range(6)])
        C = p3.P3Curve(rng.randint(-3, 3),
                       [rng.randint(-3, 3) for _ in range(4)],
                       [rng.randint(-3, 3) for _ in range(6)])
        before = chow.degree(chow.mul(p3.divisor_class(D), p3.curve_class(C)))
        after = chow.degree(chow.mul(
            p3.divisor_class(p3.cremona_divisor(D)),
            p3.curve_class(p3.cremona_curve(C))))
        assert before == after
