"""Intersection pairing of Weyl planes and the normalizing-word search."""

import random

import pytest

from cremona import weyl

S1 = weyl.s1_plane
S123 = weyl.s1_plane(1, 2, 3)


def test_pinned_values_core():
    assert weyl.weyl_plane_pairing(S123, S1(4, 5, 6)) == 1
    assert weyl.weyl_plane_pairing(S123, S1(1, 4, 5)) == 0
    assert weyl.weyl_plane_pairing(S123, weyl.s6_sextic(1, 2, 3)) == 3
    assert weyl.weyl_plane_pairing(weyl.s3_cubic(1, 8), weyl.s3_cubic(8, 1)) == 3


def test_pinned_values_one():
    assert weyl.weyl_plane_pairing(S123, weyl.s6_sextic(1, 2, 6)) == 1
    assert weyl.weyl_plane_pairing(S123, weyl.s10_surface(4, 5)) == 1
    assert weyl.weyl_plane_pairing(S123, weyl.s15_surface(1)) == 1


def test_pinned_values_zero():
    assert weyl.weyl_plane_pairing(S123, weyl.s3_cubic(1, 2)) == 0
    assert weyl.weyl_plane_pairing(S123, weyl.s3_cubic(1, 4)) == 0
    assert weyl.weyl_plane_pairing(S123, weyl.s3_cubic(4, 5)) == 0
    assert weyl.weyl_plane_pairing(S123, weyl.s6_sextic(1, 4, 5)) == 0
    assert weyl.weyl_plane_pairing(S123, weyl.s6_sextic(4, 5, 6)) == 0
    assert weyl.weyl_plane_pairing(S123, weyl.s10_surface(1, 2)) == 0
    assert weyl.weyl_plane_pairing(S123, weyl.s10_surface(1, 5)) == 0
    assert weyl.weyl_plane_pairing(S123, weyl.s15_surface(4)) == 0


def test_self_pairing_is_one():
    for T in (S123, weyl.s3_cubic(1, 8), weyl.s6_sextic(1, 2, 3),
              weyl.s10_surface(1, 2), weyl.s15_surface(8)):
        assert weyl.weyl_plane_pairing(T, T) == 1


def test_pairing_sampled_symmetric_and_small():
    rng = random.Random(55)
    planes = weyl.weyl_planes(8)
    for _ in range(250):
        R, T = rng.choice(planes), rng.choice(planes)
        a = weyl.weyl_plane_pairing(R, T)
        assert a in (0, 1, 3)
        assert weyl.weyl_plane_pairing(T, R) == a


def test_pairing_seven_and_six_points():
    assert weyl.weyl_plane_pairing(S1(1, 2, 3, s=7), S1(4, 5, 6, s=7)) == 1
    assert weyl.weyl_plane_pairing(S1(1, 2, 3, s=7), S1(1, 4, 5, s=7)) == 0
    c = weyl.s3_cubic(1, 8, s=7)
    assert weyl.weyl_plane_pairing(c, c) == 1
    assert weyl.weyl_plane_pairing(S1(1, 2, 3, s=7), c) == 0
    assert weyl.weyl_plane_pairing(S1(1, 2, 3, s=6), S1(4, 5, 6, s=6)) == 1
    # the seven-point cubic cones carry a quartic multiplicity in slot 8
    assert c.quartic(8) == 1


def test_pairing_input_errors():
    with pytest.raises(ValueError):
        weyl.weyl_plane_pairing(S123, S1(1, 2, 3, s=7))
    junk = weyl.SurfaceRecord(8, 2, (1,) * 8, (0,) * 8, (0,) * 28)
    with pytest.raises(weyl.NotAWeylPlaneError):
        weyl.weyl_plane_pairing(S123, junk)
    with pytest.raises(weyl.NotAWeylPlaneError):
        weyl.weyl_plane_pairing(junk, S123)


def test_plane_normalizing_word():
    for T in (weyl.s15_surface(3), weyl.s10_surface(2, 7),
              weyl.s6_sextic(1, 5, 8), weyl.s3_cubic(4, 2), S1(2, 6, 7)):
        word = weyl.plane_normalizing_word(T)
        assert weyl.apply_word(T, word) == S123


def test_find_word_trivial_case():
    assert weyl.find_normalizing_word(S123, S1(4, 5, 6)) == ()


def test_find_word_same_plane_rejected():
    with pytest.raises(ValueError):
        weyl.find_normalizing_word(S123, S123)


def test_find_word_pairing_three_has_none():
    with pytest.raises(weyl.NoNormalizingWordError):
        weyl.find_normalizing_word(S123, weyl.s6_sextic(1, 2, 3))
    with pytest.raises(weyl.NoNormalizingWordError):
        weyl.find_normalizing_word(weyl.s3_cubic(1, 8), weyl.s3_cubic(8, 1))


def test_find_word_disjoint_destination():
    # pairing 1 sends the partner to the fully disjoint plane
    word = weyl.find_normalizing_word(S123, weyl.s15_surface(1))
    assert weyl.apply_word(S123, word) == S123
    assert weyl.apply_word(weyl.s15_surface(1), word) == S1(4, 5, 6)
    # the degree-15 starting step the search relies on: two centers inside
    # {1,2,3} and a strict degree drop; {2,3,6,7,8} is one such choice
    img = weyl.cremona5_surface(weyl.s15_surface(1), (2, 3, 6, 7, 8))
    assert img.d < 15
    assert weyl.classify_surface(img)[0] == "S10"


def test_find_word_rescues_contracted_line_transport():
    # normalizing S_3(8,1) contracts S_1(4,5,8) to a pure line class on
    # the way; the search must re-expand it and still finish on a plane
    R, T = weyl.s3_cubic(8, 1), S1(4, 5, 8)
    moved = weyl.apply_word(T, weyl.plane_normalizing_word(R),
                            allow_contraction=True)
    assert moved.d <= 0 and any(moved.mline)
    word = weyl.find_normalizing_word(R, T)
    assert weyl.apply_word(R, word) == S123
    img = weyl.apply_word(T, word, allow_contraction=True)
    assert weyl.classify_surface(img)[0] == "S1"
    assert weyl.weyl_plane_pairing(S123, img) == weyl.weyl_plane_pairing(R, T)


def test_find_word_rescues_contracted_quartic_transport():
    R, T = weyl.s10_surface(7, 8), S1(3, 7, 8)
    moved = weyl.apply_word(T, weyl.plane_normalizing_word(R),
                            allow_contraction=True)
    assert moved.d <= 0 and any(moved.n)
    word = weyl.find_normalizing_word(R, T)
    assert weyl.apply_word(R, word) == S123
    img = weyl.apply_word(T, word, allow_contraction=True)
    assert weyl.classify_surface(img)[0] == "S1"
    assert weyl.weyl_plane_pairing(S123, img) == weyl.weyl_plane_pairing(R, T)


def test_find_word_random_pairs():
    rng = random.Random(77)
    planes = weyl.weyl_planes(8)
    done = 0
    while done < 60:
        R, T = rng.choice(planes), rng.choice(planes)
        if R == T:
            continue
        value = weyl.weyl_plane_pairing(R, T)
        if value == 3:
            with pytest.raises(weyl.NoNormalizingWordError):
                weyl.find_normalizing_word(R, T)
            continue
        word = weyl.find_normalizing_word(R, T)
        assert weyl.apply_word(R, word) == S123
        img = weyl.apply_word(T, word, allow_contraction=True)
        tag, idx = weyl.classify_surface(img)
        assert tag == "S1"
        # the word fixes S_1(123), so the normalized pair must intersect
        # with the same number as the original one
        assert weyl.weyl_plane_pairing(S123, img) == value
        if value == 1:
            assert img == S1(4, 5, 6)
        done += 1
