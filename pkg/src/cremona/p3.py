"""Chow ring of P^3 blown up at the four coordinate points and the six
lines joining them, with the lifted Cremona involution.

Basis, 24 cycles in codimensions 0..3:

    1;  H, E_i, E_ij;  l, l_i, f_ij;  p

H is the hyperplane pullback, E_i and E_ij the exceptional divisors over
the points and lines, l a general line, l_i a line inside E_i, f_ij a
fiber of E_ij over its line, p the point class.  The section ruling
g_ij = f_ij + l - l_i - l_j of E_ij is available as a derived symbol
through ``RING.normalize``.

Divisor and curve records follow the sign conventions

    D = d*H - sum_i m_i E_i - sum_ij n_ij E_ij
    C = d*l - sum_i m_i l_i - sum_ij n_ij f_ij

so effective geometry has nonnegative entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chow import ChowClass, ChowRing, WrongGradeError, linear_map

POINTS = tuple(range(4))
PAIRS = tuple(combinations(POINTS, 2))
PAIR_SLOT = {q: a for a, q in enumerate(PAIRS)}


def pair_complement(q):
    return tuple(t for t in POINTS if t not in q)


def _build_ring() -> ChowRing:
    R = ChowRing("X3", 3)
    R.add_basis(0, "one")
    H = R.add_basis(1, "H")
    E1 = {i: R.add_basis(1, "E", (i,)) for i in POINTS}
    E2 = {q: R.add_basis(1, "E", q) for q in PAIRS}
    l0 = R.add_basis(2, "l")
    l1 = {i: R.add_basis(2, "l", (i,)) for i in POINTS}
    f2 = {q: R.add_basis(2, "f", q) for q in PAIRS}
    p = R.add_basis(3, "p")

    deg1 = [H] + list(E1.values()) + list(E2.values())

    R.set_product(H, H, [(l0, 1)])
    for i in POINTS:
        R.set_product(H, E1[i], [])
        for j in POINTS:
            if i <= j:
                R.set_product(E1[i], E1[j], [(l1[i], -1)] if i == j else [])
    for q in PAIRS:
        i, j = q
        R.set_product(H, E2[q], [(f2[q], 1)])
        for t in POINTS:
            R.set_product(E1[t], E2[q], [(f2[q], 1)] if t in q else [])
        for r in PAIRS:
            if r < q:
                continue
            if r == q:
                R.set_product(E2[q], E2[q],
                              [(f2[q], -2), (l0, -1), (l1[i], 1), (l1[j], 1)])
            else:
                R.set_product(E2[q], E2[r], [])

    for a in deg1:
        R.set_product(a, l0, [(p, 1)] if a is H else [])
        for i in POINTS:
            hit = a.kind == "E" and a.idx == (i,)
            R.set_product(a, l1[i], [(p, -1)] if hit else [])
        for q in PAIRS:
            hit = a.kind == "E" and a.idx == q
            R.set_product(a, f2[q], [(p, -1)] if hit else [])

    for q in PAIRS:
        i, j = q
        R.add_derived("g", q, -1, R.make_class(
            2, [(f2[q], 1), (l0, 1), (l1[i], -1), (l1[j], -1)]))

    R.finalize()
    return R


RING = _build_ring()


def _involution_images() -> dict:
    R = RING
    img = {}
    img[R.element("one")] = R.cls("one")
    img[R.element("p")] = R.cls("p")

    terms = [(("H", ()), 3)]
    terms += [(("E", (i,)), -2) for i in POINTS]
    terms += [(("E", q), -1) for q in PAIRS]
    img[R.element("H")] = R.make_class(1, terms)
    for i in POINTS:
        terms = [(("H", ()), 1)]
        terms += [(("E", (t,)), -1) for t in POINTS if t != i]
        terms += [(("E", q), -1) for q in PAIRS if i not in q]
        img[R.element("E", (i,))] = R.make_class(1, terms)
    for q in PAIRS:
        img[R.element("E", q)] = R.cls(("E", pair_complement(q)))

    terms = [(("l", ()), 3)] + [(("l", (i,)), -1) for i in POINTS]
    img[R.element("l")] = R.make_class(2, terms)
    for i in POINTS:
        terms = [(("l", ()), 2)]
        terms += [(("l", (t,)), -1) for t in POINTS if t != i]
        img[R.element("l", (i,))] = R.make_class(2, terms)
    for q in PAIRS:
        k, m = pair_complement(q)
        img[R.element("f", q)] = R.make_class(2, [
            (("f", (k, m)), 1), (("l", ()), 1),
            (("l", (k,)), -1), (("l", (m,)), -1)])
    return img


_INVOLUTION = _involution_images()


def cremona(x: ChowClass) -> ChowClass:
    """Lifted standard Cremona involution of P^3, as a ring automorphism."""
    if x.ring is not RING:
        raise WrongGradeError("class does not belong to the P^3 ring")
    return linear_map(x, _INVOLUTION)


def _tuple4(v):
    v = tuple(int(c) for c in v)
    if len(v) != 4:
        raise ValueError(f"need 4 point multiplicities, got {len(v)}")
    return v


def _tuple6(v):
    v = tuple(int(c) for c in v)
    if len(v) != 6:
        raise ValueError(f"need 6 line multiplicities, got {len(v)}")
    return v


@dataclass(frozen=True)
class P3Divisor:
    """Divisor record (d; m_0..m_3; n over PAIRS order)."""

    d: int
    m: tuple
    nl: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", _tuple4(self.m))
        object.__setattr__(self, "nl", _tuple6(self.nl))


@dataclass(frozen=True)
class P3Curve:
    """Curve record (d; m_0..m_3; n over PAIRS order)."""

    d: int
    m: tuple
    nl: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", _tuple4(self.m))
        object.__setattr__(self, "nl", _tuple6(self.nl))


def divisor_class(D: P3Divisor) -> ChowClass:
    terms = [(("H", ()), D.d)]
    terms += [(("E", (i,)), -D.m[i]) for i in POINTS]
    terms += [(("E", q), -D.nl[a]) for a, q in enumerate(PAIRS)]
    return RING.make_class(1, terms)


def divisor_from_class(x: ChowClass) -> P3Divisor:
    if x.ring is not RING or x.grade != 1:
        raise WrongGradeError("divisor records live in grade 1 of the P^3 ring")
    d = x.coeff(RING.element("H"))
    m = tuple(-x.coeff(RING.element("E", (i,))) for i in POINTS)
    nl = tuple(-x.coeff(RING.element("E", q)) for q in PAIRS)
    return P3Divisor(d, m, nl)


def curve_class(C: P3Curve) -> ChowClass:
    terms = [(("l", ()), C.d)]
    terms += [(("l", (i,)), -C.m[i]) for i in POINTS]
    terms += [(("f", q), -C.nl[a]) for a, q in enumerate(PAIRS)]
    return RING.make_class(2, terms)


def curve_from_class(x: ChowClass) -> P3Curve:
    if x.ring is not RING or x.grade != 2:
        raise WrongGradeError("curve records live in grade 2 of the P^3 ring")
    d = x.coeff(RING.element("l"))
    m = tuple(-x.coeff(RING.element("l", (i,))) for i in POINTS)
    nl = tuple(-x.coeff(RING.element("f", q)) for q in PAIRS)
    return P3Curve(d, m, nl)


def cremona_divisor(D: P3Divisor) -> P3Divisor:
    """Cremona image of a divisor record; involutive."""
    tot = sum(D.m)
    d2 = 3 * D.d - tot
    m2 = tuple(2 * D.d - (tot - mi) for mi in D.m)
    nl2 = []
    for q in PAIRS:
        k, m = pair_complement(q)
        nl2.append(D.d + D.nl[PAIR_SLOT[(k, m)]] - D.m[k] - D.m[m])
    return P3Divisor(d2, m2, tuple(nl2))


def cremona_curve(C: P3Curve) -> P3Curve:
    """Cremona image of a curve record; involutive.

    With all n_ij = 0 this restricts to the multiplicity-only rule
    d' = 3d - 2*sum(m), m_i' = d - sum of the other three.
    """
    tot = sum(C.m)
    d2 = 3 * C.d - 2 * tot - sum(C.nl)
    m2 = []
    for i in POINTS:
        away = sum(C.nl[a] for a, q in enumerate(PAIRS) if i not in q)
        m2.append(C.d - (tot - C.m[i]) - away)
    nl2 = tuple(C.nl[PAIR_SLOT[pair_complement(q)]] for q in PAIRS)
    return P3Curve(d2, tuple(m2), nl2)


def normalize(terms) -> ChowClass:
    """Expand a symbolic combination (g_ij allowed) into basis cycles."""
    return RING.normalize(terms)
