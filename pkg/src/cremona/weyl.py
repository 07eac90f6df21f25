"""Weyl group combinatorics for cycles through 6, 7 or 8 general points of P4.

A cycle is tracked by an integer record: degree plus multiplicities along the
special loci (the points themselves, the lines L_ij spanned by two points, and
the rational normal quartics Q_k through seven of the eight points).  The Weyl
group is generated by permutations of the points together with standard
Cremona transformations centered at any five of them, and both kinds of
generator act on records by explicit integer formulas.

Everything here is 1-based: points are labeled 1..s, matching the classical
notation (L_12, Q_8, and so on).  Surface records are always stored on eight
slots; for s < 8 the unused slots are forced to zero and the generators are
restricted to the first s labels.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

POINT_COUNTS = (6, 7, 8)

# all 28 index pairs in lex order; mline storage follows this layout
PAIRS8 = tuple(combinations(range(1, 9), 2))
PAIR_POS = {q: k for k, q in enumerate(PAIRS8)}

DEFAULT_ORBIT_BUDGET = 10 ** 6


class WeylError(Exception):
    """Base class for record and orbit trouble."""


class BadCentersError(WeylError):
    """Cremona centers are not five distinct point labels in range."""


class ContractedError(WeylError):
    """A word produced an intermediate record of nonpositive degree."""


class OrbitBudgetExceededError(WeylError):
    """Orbit enumeration outgrew its cap; the orbit is probably infinite."""


class NotAWeylPlaneError(WeylError):
    """Surface record does not belong to any of the five plane families."""


class NoNormalizingWordError(WeylError):
    """No word can separate the given planes (they meet with multiplicity 3)."""


# -- records -----------------------------------------------------------

def _ints(seq, n, what):
    t = tuple(int(x) for x in seq)
    if len(t) != n:
        raise ValueError(f"{what} needs {n} entries, got {len(t)}")
    return t


def quartic_slots(s):
    """Labels k for which the quartic through the other seven points exists.

    Q_k needs all seven points other than p_k, so with eight points every
    slot is live, with seven points only Q_8 survives, and with six there
    are no quartics at all.
    """
    if s == 8:
        return tuple(range(1, 9))
    if s == 7:
        return (8,)
    return ()


@dataclass(frozen=True, order=True)
class DivisorRecord:
    """Hyperplane-type record (d; m_1 ... m_s)."""

    s: int
    d: int
    m: tuple

    def __post_init__(self):
        if self.s not in POINT_COUNTS:
            raise ValueError("records live on 6, 7 or 8 points")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "m", _ints(self.m, self.s, "m"))


@dataclass(frozen=True, order=True)
class CurveRecord:
    """Curve record (d; m_1 ... m_s) for degree and point multiplicities."""

    s: int
    d: int
    m: tuple

    def __post_init__(self):
        if self.s not in POINT_COUNTS:
            raise ValueError("records live on 6, 7 or 8 points")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "m", _ints(self.m, self.s, "m"))


@dataclass(frozen=True, order=True)
class SurfaceRecord:
    """Surface record: degree, point multiplicities m_i, quartic
    multiplicities n_k (along Q_k) and line multiplicities m_ij (along L_ij).

    Stored on eight slots regardless of s; slots that do not exist for the
    given s must hold zero.  mline is indexed by PAIRS8 in lex order.
    """

    s: int
    d: int
    m: tuple
    n: tuple
    mline: tuple

    def __post_init__(self):
        if self.s not in POINT_COUNTS:
            raise ValueError("records live on 6, 7 or 8 points")
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "m", _ints(self.m, 8, "m"))
        object.__setattr__(self, "n", _ints(self.n, 8, "n"))
        object.__setattr__(self, "mline", _ints(self.mline, 28, "mline"))
        for i in range(self.s + 1, 9):
            if self.m[i - 1] != 0:
                raise ValueError(f"point {i} does not exist for s={self.s}")
        live = set(quartic_slots(self.s))
        for k in range(1, 9):
            if k not in live and self.n[k - 1] != 0:
                raise ValueError(f"quartic Q_{k} does not exist for s={self.s}")
        for (i, j), v in zip(PAIRS8, self.mline):
            if j > self.s and v != 0:
                raise ValueError(f"line L_{i}{j} does not exist for s={self.s}")

    def line(self, i, j):
        """Multiplicity along the line L_ij."""
        if i == j:
            raise ValueError("a line needs two distinct points")
        a, b = (i, j) if i < j else (j, i)
        return self.mline[PAIR_POS[(a, b)]]

    def quartic(self, k):
        """Multiplicity along the quartic Q_k."""
        return self.n[k - 1]


# -- generators --------------------------------------------------------

@dataclass(frozen=True, order=True)
class Perm:
    """Relabeling of the points; image[i-1] is where point i goes."""

    image: tuple

    def __post_init__(self):
        img = tuple(int(x) for x in self.image)
        object.__setattr__(self, "image", img)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"not a permutation of 1..{len(img)}: {img}")

    @property
    def s(self):
        return len(self.image)

    @property
    def is_identity(self):
        return all(v == i for i, v in enumerate(self.image, start=1))

    def __call__(self, i):
        return self.image[i - 1]

    def inverse(self):
        inv = [0] * self.s
        for i, v in enumerate(self.image, start=1):
            inv[v - 1] = i
        return Perm(tuple(inv))

    @classmethod
    def identity(cls, s):
        return cls(tuple(range(1, s + 1)))


@dataclass(frozen=True, order=True)
class Cremona5:
    """Standard Cremona transformation centered at five of the points."""

    centers: tuple

    def __post_init__(self):
        c = tuple(sorted(int(x) for x in self.centers))
        object.__setattr__(self, "centers", c)
        if len(set(c)) != 5 or c[0] < 1:
            raise BadCentersError(f"need five distinct point labels: {c}")


def _check_centers(s, centers):
    c = tuple(sorted(int(x) for x in centers))
    if len(set(c)) != 5 or c[0] < 1 or c[-1] > s:
        raise BadCentersError(f"need five distinct centers within 1..{s}: {centers}")
    return c


# -- generator actions -------------------------------------------------

def cremona5_divisor(rec, centers):
    """Cremona action on a hyperplane-type record.

    Only the five center entries move: d' = 4d - sum m, and each center
    multiplicity becomes 3d minus the other four.
    """
    c = _check_centers(rec.s, centers)
    tot = sum(rec.m[i - 1] for i in c)
    m = list(rec.m)
    for i in c:
        m[i - 1] = 3 * rec.d - (tot - rec.m[i - 1])
    return DivisorRecord(rec.s, 4 * rec.d - tot, tuple(m))


def cremona5_curve(rec, centers):
    """Cremona action on a curve record: d' = 4d - 3 sum m on the centers."""
    c = _check_centers(rec.s, centers)
    tot = sum(rec.m[i - 1] for i in c)
    m = list(rec.m)
    for i in c:
        m[i - 1] = rec.d - (tot - rec.m[i - 1])
    return CurveRecord(rec.s, 4 * rec.d - 3 * tot, tuple(m))


def cremona5_surface(rec, centers):
    """Cremona action on a surface record.

    The degree, the center multiplicities and the lines between centers
    follow the quadratic transform formulas; lines with exactly one center
    endpoint are fixed; the three lines between non-center labels trade
    places with the three quartic slots of the complement (L_ij maps to
    Q_k and back, for {i,j,k} the complement of the centers in 1..8).
    """
    c = _check_centers(rec.s, centers)
    m, n, ml = rec.m, rec.n, rec.mline
    mtot = sum(m[i - 1] for i in c)
    ltot = sum(ml[PAIR_POS[q]] for q in combinations(c, 2))
    d2 = 6 * rec.d - 3 * mtot + ltot
    m2, n2, ml2 = list(m), list(n), list(ml)
    for i in c:
        rest = [r for r in c if r != i]
        lsum = sum(ml[PAIR_POS[q]] for q in combinations(rest, 2))
        m2[i - 1] = 3 * rec.d - 2 * (mtot - m[i - 1]) + lsum
    for q in combinations(c, 2):
        rest = [r for r in c if r not in q]
        lsum = sum(ml[PAIR_POS[p]] for p in combinations(rest, 2))
        ml2[PAIR_POS[q]] = rec.d - sum(m[r - 1] for r in rest) + lsum
    a, b, k = (x for x in range(1, 9) if x not in c)
    ml2[PAIR_POS[(a, b)]] = n[k - 1]
    ml2[PAIR_POS[(a, k)]] = n[b - 1]
    ml2[PAIR_POS[(b, k)]] = n[a - 1]
    n2[a - 1] = ml[PAIR_POS[(b, k)]]
    n2[b - 1] = ml[PAIR_POS[(a, k)]]
    n2[k - 1] = ml[PAIR_POS[(a, b)]]
    return SurfaceRecord(rec.s, d2, tuple(m2), tuple(n2), tuple(ml2))


def apply_perm(rec, perm):
    """Relabel the points of a record."""
    if perm.s != rec.s:
        raise ValueError(f"permutation of {perm.s} labels on an s={rec.s} record")
    if isinstance(rec, (DivisorRecord, CurveRecord)):
        m = [0] * rec.s
        for i in range(1, rec.s + 1):
            m[perm(i) - 1] = rec.m[i - 1]
        return type(rec)(rec.s, rec.d, tuple(m))
    if isinstance(rec, SurfaceRecord):
        img = list(perm.image) + list(range(rec.s + 1, 9))
        m, n, ml = [0] * 8, [0] * 8, [0] * 28
        for i in range(1, 9):
            m[img[i - 1] - 1] = rec.m[i - 1]
            n[img[i - 1] - 1] = rec.n[i - 1]
        for k, (i, j) in enumerate(PAIRS8):
            a, b = img[i - 1], img[j - 1]
            if a > b:
                a, b = b, a
            ml[PAIR_POS[(a, b)]] = rec.mline[k]
        return SurfaceRecord(rec.s, rec.d, tuple(m), tuple(n), tuple(ml))
    raise TypeError(f"not a record: {rec!r}")


def apply_cremona5(rec, centers):
    if isinstance(rec, DivisorRecord):
        return cremona5_divisor(rec, centers)
    if isinstance(rec, CurveRecord):
        return cremona5_curve(rec, centers)
    if isinstance(rec, SurfaceRecord):
        return cremona5_surface(rec, centers)
    raise TypeError(f"not a record: {rec!r}")


def apply_generator(rec, gen):
    if isinstance(gen, Perm):
        return apply_perm(rec, gen)
    if isinstance(gen, Cremona5):
        return apply_cremona5(rec, gen.centers)
    raise TypeError(f"not a generator: {gen!r}")


def apply_word(rec, word, allow_contraction=False):
    """Apply generators left to right.

    By default a Cremona step that drops the degree to zero or below raises
    ContractedError: the cycle fell into the fundamental locus and the rest
    of the word has no geometric meaning.  Pass allow_contraction=True when
    transporting auxiliary data (divisor records under a plane word, say)
    where negative degrees are just bookkeeping.
    """
    cur = rec
    for step, gen in enumerate(word):
        cur = apply_generator(cur, gen)
        if (not allow_contraction and isinstance(gen, Cremona5)
                and cur.d <= 0):
            raise ContractedError(
                f"step {step} ({gen.centers}) contracted the record to {cur!r}")
    return cur


def invert_word(word):
    """Word undoing the given one (Cremonas are involutions)."""
    out = []
    for gen in reversed(word):
        out.append(gen.inverse() if isinstance(gen, Perm) else gen)
    return tuple(out)


# -- canonical labeling ------------------------------------------------

def _perm_from_order(order, s):
    # order[p-1] = the old label that should land at position p
    image = [0] * s
    for pos, i in enumerate(order, start=1):
        image[i - 1] = pos
    return Perm(tuple(image))


def canonical_form(rec):
    """Lexicographically smallest relabeling, with a permutation achieving it.

    Returns (canon, perm) with apply_perm(rec, perm) == canon.  For divisor
    and curve records this just sorts the multiplicities; surfaces need a
    search over the relabelings of points that share (m_i, n_i), since the
    line entries can break such ties either way.
    """
    if isinstance(rec, (DivisorRecord, CurveRecord)):
        order = sorted(range(1, rec.s + 1), key=lambda i: (rec.m[i - 1], i))
        perm = _perm_from_order(order, rec.s)
        return apply_perm(rec, perm), perm
    if not isinstance(rec, SurfaceRecord):
        raise TypeError(f"not a record: {rec!r}")
    s = rec.s
    order0 = sorted(range(1, s + 1), key=lambda i: (rec.m[i - 1], rec.n[i - 1], i))
    blocks, prev = [], None
    for i in order0:
        key = (rec.m[i - 1], rec.n[i - 1])
        if key != prev:
            blocks.append([i])
            prev = key
        else:
            blocks[-1].append(i)
    best = best_order = None

    def swap_auto(u, v):
        # swapping u and v maps the record to itself, so orders that differ
        # only by which of the two goes first produce identical data
        for w in range(1, s + 1):
            if w == u or w == v:
                continue
            a = rec.mline[PAIR_POS[(u, w) if u < w else (w, u)]]
            b = rec.mline[PAIR_POS[(v, w) if v < w else (w, v)]]
            if a != b:
                return False
        return True

    def walk(bi, rem, chosen):
        nonlocal best, best_order
        if not rem:
            if bi + 1 == len(blocks):
                rank = _permuted_surface_data(rec, _order_image(chosen, s))
                if best is None or rank < best:
                    best, best_order = rank, list(chosen)
            else:
                walk(bi + 1, blocks[bi + 1], chosen)
            return
        covered = set()
        for a, u in enumerate(rem):
            if u in covered:
                continue
            for v in rem[a + 1:]:
                if v not in covered and swap_auto(u, v):
                    covered.add(v)
            walk(bi, [w for w in rem if w != u], chosen + [u])

    walk(0, blocks[0], [])
    perm = _perm_from_order(best_order, s)
    m, n, ml = best
    return SurfaceRecord(s, rec.d, m, n, ml), perm


def _order_image(order, s):
    # image list of the permutation sending order[p-1] to position p
    image = [0] * s
    for pos, i in enumerate(order, start=1):
        image[i - 1] = pos
    return image


def _permuted_surface_data(rec, image):
    # raw (m, n, mline) tuples of the relabeled record, no dataclass cost
    img = image + list(range(rec.s + 1, 9))
    m, n, ml = [0] * 8, [0] * 8, [0] * 28
    for i in range(8):
        m[img[i] - 1] = rec.m[i]
        n[img[i] - 1] = rec.n[i]
    for k, (i, j) in enumerate(PAIRS8):
        a, b = img[i - 1], img[j - 1]
        if a > b:
            a, b = b, a
        ml[PAIR_POS[(a, b)]] = rec.mline[k]
    return tuple(m), tuple(n), tuple(ml)


# -- seed templates ----------------------------------------------------

def _check_labels(labels, s, want):
    pts = tuple(sorted(int(x) for x in labels))
    if len(set(pts)) != want or pts[0] < 1 or pts[-1] > s:
        raise ValueError(f"need {want} distinct point labels in 1..{s}: {labels}")
    return pts


def line_record(i, j, s=8):
    """The line L_ij through two of the points."""
    i, j = _check_labels((i, j), s, 2)
    m = [0] * s
    m[i - 1] = m[j - 1] = 1
    return CurveRecord(s, 1, tuple(m))


def quartic_record(k, s=8):
    """The rational normal quartic through the seven points other than p_k."""
    if k not in quartic_slots(s):
        raise ValueError(f"no quartic Q_{k} on {s} points")
    m = [1] * s
    if k <= s:
        m[k - 1] = 0
    return CurveRecord(s, 4, tuple(m))


def hyperplane_record(points, s=8):
    """The hyperplane through four of the points."""
    pts = _check_labels(points, s, 4)
    m = [0] * s
    for i in pts:
        m[i - 1] = 1
    return DivisorRecord(s, 1, tuple(m))


def s1_plane(i, j, k, s=8):
    """The actual plane through three of the points."""
    tri = _check_labels((i, j, k), s, 3)
    m, n, ml = [0] * 8, [0] * 8, [0] * 28
    for t in tri:
        m[t - 1] = 1
    for q in combinations(tri, 2):
        ml[PAIR_POS[q]] = 1
    return SurfaceRecord(s, 1, tuple(m), tuple(n), tuple(ml))


def s3_cubic(i, j, s=8):
    """The cubic cone S_3(i,j): vertex tripled at p_i over the quartic Q_j.

    It misses p_j, passes simply through the other six points, contains the
    lines from the vertex to each of them, and runs once along Q_j.
    """
    if s not in (7, 8):
        raise ValueError("the cubic cone family needs at least seven points")
    i = int(i)
    j = int(j)
    if not 1 <= i <= s:
        raise ValueError(f"vertex label out of range: {i}")
    if j not in quartic_slots(s) or j == i:
        raise ValueError(f"no quartic Q_{j} away from p_{i} on {s} points")
    m, n, ml = [0] * 8, [0] * 8, [0] * 28
    m[i - 1] = 3
    n[j - 1] = 1
    for t in range(1, s + 1):
        if t in (i, j):
            continue
        m[t - 1] = 1
        a, b = (i, t) if i < t else (t, i)
        ml[PAIR_POS[(a, b)]] = 1
    return SurfaceRecord(s, 3, tuple(m), tuple(n), tuple(ml))


def s6_sextic(i, j, k):
    """The degree six surface S_6(ijk), dual plane partner of S_1(ijk)."""
    tri = _check_labels((i, j, k), 8, 3)
    rest = [t for t in range(1, 9) if t not in tri]
    m, n, ml = [0] * 8, [0] * 8, [0] * 28
    for t in tri:
        m[t - 1] = 1
        n[t - 1] = 1
    for t in rest:
        m[t - 1] = 3
    for q in combinations(rest, 2):
        ml[PAIR_POS[q]] = 1
    return SurfaceRecord(8, 6, tuple(m), tuple(n), tuple(ml))


def s10_surface(i, j):
    """The degree ten Weyl plane S_10(ij)."""
    pair = _check_labels((i, j), 8, 2)
    rest = [t for t in range(1, 9) if t not in pair]
    m, n, ml = [0] * 8, [0] * 8, [0] * 28
    for t in pair:
        m[t - 1] = 6
    for t in rest:
        m[t - 1] = 3
        n[t - 1] = 1
    ml[PAIR_POS[pair]] = 3
    for t in rest:
        for v in pair:
            a, b = (v, t) if v < t else (t, v)
            ml[PAIR_POS[(a, b)]] = 1
    return SurfaceRecord(8, 10, tuple(m), tuple(n), tuple(ml))


def s15_surface(i):
    """The degree fifteen Weyl plane S_15(i)."""
    i = int(i)
    if not 1 <= i <= 8:
        raise ValueError(f"point label out of range: {i}")
    rest = [t for t in range(1, 9) if t != i]
    m, n, ml = [0] * 8, [0] * 8, [0] * 28
    m[i - 1] = 3
    n[i - 1] = 3
    for t in rest:
        m[t - 1] = 6
        n[t - 1] = 1
    for q in combinations(rest, 2):
        ml[PAIR_POS[q]] = 1
    return SurfaceRecord(8, 15, tuple(m), tuple(n), tuple(ml))


# -- classification ----------------------------------------------------

def classify_surface(rec):
    """Match a surface record against the five Weyl plane families.

    Returns (tag, indices): ("S1", (i,j,k)), ("S3", (i,j)), ("S6", (i,j,k)),
    ("S10", (i,j)), ("S15", (i,)) or ("Other", ()).  The match is exact, not
    up to permutation: the defining indices are read off the record.
    """
    s, d = rec.s, rec.d
    live = range(1, s + 1)
    try:
        if d == 1:
            tri = tuple(i for i in live if rec.m[i - 1] == 1)
            if len(tri) == 3 and rec == s1_plane(*tri, s=s):
                return "S1", tri
        elif d == 3 and s >= 7:
            tips = [i for i in live if rec.m[i - 1] == 3]
            if len(tips) == 1:
                i = tips[0]
                if s == 7:
                    j = 8
                else:
                    holes = [x for x in live if rec.m[x - 1] == 0]
                    j = holes[0] if len(holes) == 1 else 0
                if j and rec == s3_cubic(i, j, s=s):
                    return "S3", (i, j)
        elif d == 6 and s == 8:
            tri = tuple(i for i in live if rec.m[i - 1] == 1)
            if len(tri) == 3 and rec == s6_sextic(*tri):
                return "S6", tri
        elif d == 10 and s == 8:
            pair = tuple(i for i in live if rec.m[i - 1] == 6)
            if len(pair) == 2 and rec == s10_surface(*pair):
                return "S10", pair
        elif d == 15 and s == 8:
            tips = [i for i in live if rec.m[i - 1] == 3]
            if len(tips) == 1 and rec == s15_surface(tips[0]):
                return "S15", (tips[0],)
    except ValueError:
        pass
    return "Other", ()


def classify_curve(rec):
    """Tag a curve record as a line L_ij, a quartic Q_k, or Other."""
    s = rec.s
    if rec.d == 1:
        pts = tuple(i for i in range(1, s + 1) if rec.m[i - 1] == 1)
        if len(pts) == 2 and rec == line_record(*pts, s=s):
            return "line", pts
    elif rec.d == 4 and s >= 7:
        if s == 7:
            k = 8
        else:
            holes = [i for i in range(1, 9) if rec.m[i - 1] == 0]
            k = holes[0] if len(holes) == 1 else 0
        if k and rec == quartic_record(k, s=s):
            return "quartic", (k,)
    return "Other", ()


def divisor_type(rec):
    """Permutation-type label like (2;22111110), largest entries first."""
    digits = sorted(rec.m, reverse=True)
    if all(0 <= x <= 9 for x in digits):
        body = "".join(str(x) for x in digits)
    else:
        body = ",".join(str(x) for x in digits)
    return f"({rec.d};{body})"


def record_tag(rec):
    """Census tag for one orbit member."""
    if isinstance(rec, SurfaceRecord):
        return classify_surface(rec)[0]
    if isinstance(rec, CurveRecord):
        return classify_curve(rec)[0]
    if isinstance(rec, DivisorRecord):
        return divisor_type(rec)
    raise TypeError(f"not a record: {rec!r}")


# -- orbits ------------------------------------------------------------

@dataclass(frozen=True)
class OrbitResult:
    """Closure of a seed record under the Weyl generators.

    members: every labeled record in the orbit, sorted.
    witnesses: member -> word w with apply_word(seed, w) == member.
    contracted: canonical forms of generator images that fell to degree <= 0.
    type_census: census of members by record_tag.
    """

    seed: object
    members: tuple
    witnesses: dict
    contracted: tuple
    type_census: dict

    @property
    def canonical_members(self):
        return tuple(sorted({canonical_form(r)[0] for r in self.members}))


def _word_of_perm(perm):
    return () if perm.is_identity else (perm,)


def _orbit_cap(budget):
    if budget is not None:
        return int(budget)
    return int(os.environ.get("CREMONA_ORBIT_BUDGET", DEFAULT_ORBIT_BUDGET))


def orbit(seed, budget=None):
    """Breadth-first closure of a record under Cremonas and relabelings.

    The BFS runs over canonical forms with every choice of five centers;
    the labeled members are then filled in by relabeling each canonical
    class.  Images of nonpositive degree are set aside as contracted and
    not expanded.  Witness words are shortest-found, with deterministic
    ordering, so repeated runs agree.  budget caps the member count
    (default 10**6, or the CREMONA_ORBIT_BUDGET environment variable) and
    a blowout raises OrbitBudgetExceededError.
    """
    cap = _orbit_cap(budget)
    if seed.d <= 0:
        raise ValueError("orbit wants a record of positive degree")
    s = seed.s
    gens = [Cremona5(c) for c in combinations(range(1, s + 1), 5)]
    can0, perm0 = canonical_form(seed)
    words = {can0: _word_of_perm(perm0)}
    frontier = [can0]
    contracted = set()
    while frontier:
        grown = []
        for rec in frontier:
            stem = words[rec]
            for gen in gens:
                img = apply_cremona5(rec, gen.centers)
                if img.d <= 0:
                    contracted.add(canonical_form(img)[0])
                    continue
                can, perm = canonical_form(img)
                if can in words:
                    continue
                words[can] = stem + (gen,) + _word_of_perm(perm)
                if len(words) > cap:
                    raise OrbitBudgetExceededError(
                        f"more than {cap} orbit classes from {seed!r}")
                grown.append(can)
        frontier = sorted(grown)
    swaps = []
    for t in range(1, s):
        image = list(range(1, s + 1))
        image[t - 1], image[t] = image[t], image[t - 1]
        swaps.append(Perm(tuple(image)))
    witnesses = {}
    for can in sorted(words):
        stem = words[can]
        witnesses[can] = stem
        reached = {can: Perm.identity(s)}
        frontier = [can]
        while frontier:
            grown = []
            for member in frontier:
                sig = reached[member]
                for tau in swaps:
                    child = apply_perm(member, tau)
                    if child in reached:
                        continue
                    comp = Perm(tuple(tau.image[v - 1] for v in sig.image))
                    reached[child] = comp
                    witnesses[child] = stem + (comp,)
                    if len(witnesses) > cap:
                        raise OrbitBudgetExceededError(
                            f"more than {cap} labeled members from {seed!r}")
                    grown.append(child)
            frontier = sorted(grown)
    members = tuple(sorted(witnesses))
    census = Counter(record_tag(r) for r in members)
    return OrbitResult(seed=seed, members=members, witnesses=witnesses,
                       contracted=tuple(sorted(contracted)),
                       type_census=dict(census))


@lru_cache(maxsize=None)
def line_orbit(s=8):
    """Orbit of the line L_12: the Weyl lines."""
    return orbit(line_record(1, 2, s=s))


@lru_cache(maxsize=None)
def plane_orbit(s=8):
    """Orbit of the plane S_1(123): the Weyl planes."""
    return orbit(s1_plane(1, 2, 3, s=s))


@lru_cache(maxsize=None)
def divisor_orbit(s=8):
    """Orbit of the hyperplane through the first four points."""
    return orbit(hyperplane_record((1, 2, 3, 4), s=s))


def weyl_lines(s=8):
    return line_orbit(s).members


def weyl_planes(s=8):
    return plane_orbit(s).members


def weyl_divisors(s=8):
    return divisor_orbit(s).members


# -- plane normalization and pairing -----------------------------------

def _plane_reduction_centers(tag, idx, s):
    # five centers whose Cremona strictly drops the degree of the family
    if tag == "S3":
        i, j = idx
        simple = [x for x in range(1, s + 1) if x not in (i, j)]
        return tuple(sorted([i] + simple[:4]))
    if tag == "S6":
        return tuple(x for x in range(1, 9) if x not in idx)
    if tag == "S10":
        i, j = idx
        rest = [x for x in range(1, 9) if x not in (i, j)]
        return tuple(sorted([i, j] + rest[:3]))
    if tag == "S15":
        return tuple(x for x in range(1, 9) if x != idx[0])[:5]
    raise NotAWeylPlaneError(f"no reduction step for tag {tag}")


def _perm_moving(src, dst, s):
    # relabeling sending the tuple src onto dst, rest in increasing order
    image = [0] * s
    for a, b in zip(src, dst):
        image[a - 1] = b
    rest_src = [i for i in range(1, s + 1) if i not in src]
    rest_dst = [i for i in range(1, s + 1) if i not in dst]
    for a, b in zip(rest_src, rest_dst):
        image[a - 1] = b
    return Perm(tuple(image))


@lru_cache(maxsize=None)
def plane_normalizing_word(T):
    """Word sending the Weyl plane T to the actual plane S_1(123).

    Each family admits a center choice that strictly reduces the degree
    (S_15 -> S_10 -> S_6 -> S_1 and S_3 -> S_1), so at most three Cremonas
    plus one relabeling are needed.
    """
    tag, idx = classify_surface(T)
    if tag == "Other":
        raise NotAWeylPlaneError(f"not in the plane orbit: {T!r}")
    word = []
    cur, cur_tag, cur_idx = T, tag, idx
    while cur_tag != "S1":
        centers = _plane_reduction_centers(cur_tag, cur_idx, cur.s)
        word.append(Cremona5(centers))
        cur = cremona5_surface(cur, centers)
        cur_tag, cur_idx = classify_surface(cur)
        if cur_tag == "Other":
            raise NotAWeylPlaneError(
                f"reduction fell out of the plane families at {cur!r}")
    perm = _perm_moving(cur_idx, (1, 2, 3), cur.s)
    if not perm.is_identity:
        word.append(perm)
    return tuple(word)


def weyl_plane_pairing(R, T):
    """Intersection number of two Weyl planes; always 0, 1 or 3.

    Transport both planes by a word sending R to S_1(123); one more Cremona
    at the first five points turns that plane into minus the class of the
    line L_45, so the pairing is read off as the m_45 entry of T's image.
    """
    if R.s != T.s:
        raise ValueError("records live on different point counts")
    if classify_surface(T)[0] == "Other":
        raise NotAWeylPlaneError(f"not in the plane orbit: {T!r}")
    word = plane_normalizing_word(R)
    # transport is plain lattice algebra, so T's image may legitimately pass
    # through degree <= 0 along the way (it contracts to a line or quartic
    # class); the final m_45 readout is still the intersection number
    moved = apply_word(T, word, allow_contraction=True)
    final = cremona5_surface(moved, (1, 2, 3, 4, 5))
    return final.line(4, 5)


def _perm_fixing_123(src, dst, s):
    # relabeling with src -> dst that also keeps {1,2,3} stable as a set
    image = {a: b for a, b in zip(src, dst)}
    low_src = [i for i in (1, 2, 3) if i not in image]
    low_dst = [i for i in (1, 2, 3) if i not in image.values()]
    for a, b in zip(low_src, low_dst):
        image[a] = b
    rest_src = [i for i in range(1, s + 1) if i not in image]
    hit = set(image.values())
    rest_dst = [i for i in range(1, s + 1) if i not in hit]
    for a, b in zip(rest_src, rest_dst):
        image[a] = b
    return Perm(tuple(image[i] for i in range(1, s + 1)))


def find_normalizing_word(R, T):
    """Word w with w(R) = S_1(123) and w(T) another actual plane.

    Exists exactly when the pairing is not 3.  The search first normalizes
    R; if that contracted T to the class of a single line or quartic, a
    Cremona through that class (two of its centers among {1,2,3}) expands
    it back to an actual plane.  Then it repeatedly picks five centers,
    two of them among {1,2,3}, that strictly reduce the degree of T's
    image; every such Cremona fixes the record S_1(123).  When the pairing
    is 1 the final plane is moved onto S_1(456); when it is 0 it still
    shares one or two points with {1,2,3} and is moved onto S_1(145) or
    S_1(124).
    """
    if R == T:
        raise ValueError("the planes must differ (a plane pairs itself to 1)")
    value = weyl_plane_pairing(R, T)
    if value == 3:
        raise NoNormalizingWordError(
            "planes meeting with multiplicity 3 admit no separating word")
    s = R.s
    word = list(plane_normalizing_word(R))
    cur = apply_word(T, tuple(word), allow_contraction=True)
    while cur.d <= 0:
        hit = [PAIRS8[k] for k, v in enumerate(cur.mline) if v]
        if hit:
            # unit line class: Cre at five centers containing the pair sends
            # it to the plane spanned by the other three centers
            (u, v), = hit
            shared = len({u, v} & {1, 2, 3})
            assert shared < 2, "a pairing-0 transport cannot contract onto L_ij with i,j <= 3"
            low = sorted({1, 2, 3} - {u, v})[:2 - shared]
            rest = [i for i in range(4, s + 1) if i not in (u, v)]
            centers = tuple(sorted({u, v}.union(low, rest[:3 - len(low)])))
        else:
            # unit quartic class: swap it into a line class first (the
            # n_k <-> m_ab exchange for {a,b,k} away from the centers)
            k = next(k for k in range(1, 9) if cur.quartic(k))
            low = [i for i in (1, 2, 3) if i != k][:2]
            rest = [i for i in range(4, s + 1) if i != k]
            centers = tuple(sorted(low + rest[:3]))
        word.append(Cremona5(centers))
        cur = cremona5_surface(cur, centers)
    while cur.d > 1:
        for centers in combinations(range(1, s + 1), 5):
            if len({1, 2, 3}.intersection(centers)) != 2:
                continue
            img = cremona5_surface(cur, centers)
            if img.d < cur.d:
                word.append(Cremona5(centers))
                cur = img
                break
        else:
            raise NoNormalizingWordError(
                f"degree reduction stalled at {cur!r}")
    tag, idx = classify_surface(cur)
    if tag != "S1":
        raise NoNormalizingWordError(f"reduction ended off the plane list: {cur!r}")
    shared = sorted(set(idx) & {1, 2, 3})
    free = sorted(set(idx) - {1, 2, 3})
    dst = {0: (4, 5, 6), 1: (1, 4, 5), 2: (1, 2, 4)}[len(shared)]
    perm = _perm_fixing_123(tuple(shared + free), dst, s)
    if not perm.is_identity:
        word.append(perm)
    return tuple(word)
