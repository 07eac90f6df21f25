"""Exact graded intersection rings with named cycle bases.

The two rings this package cares about (``cremona.p3.RING`` and
``cremona.p4.RING``) are finite free Z-modules graded by codimension,
with multiplication stored as a symmetric table over basis cycles.  This
module holds the ring-independent machinery: basis labels, sparse classes
with exact integer coefficients, and table-driven bilinear products.

Coefficients are plain Python ints but every canonicalisation step checks
the 64-bit magnitude bound, so silent wraparound in downstream consumers
(serialisers, foreign-function callers) cannot go unnoticed.  Everything
is immutable after ring construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

INT64_MAX = 2**63 - 1


class ChowError(Exception):
    """Base class for ring arithmetic errors."""


class MixedGradeError(ChowError):
    """Operands or listed terms do not live in a single ring and grade."""


class UnknownBasisError(ChowError):
    """A term refers to a cycle that is not a stored basis element."""


class GradeOverflowError(ChowError):
    """A product would land beyond the ring dimension."""


class WrongGradeError(ChowError):
    """The operation needs a class of a specific grade (e.g. top grade)."""


class UnknownSymbolError(ChowError):
    """A symbolic term is neither a basis element nor a derived symbol."""


class MissingTableEntryError(ChowError):
    """No product entry stored for a required basis pair."""


class CoefficientOverflowError(ChowError):
    """A coefficient left the checked 64-bit range."""


@dataclass(frozen=True, order=True)
class BasisElement:
    """A named basis cycle: ring id, grade, kind tag, sorted index set.

    ``sub`` is -1 except for the vertical surface classes in the P^4 ring,
    where it singles out one member of ``idx``.
    """

    ring: str
    grade: int
    kind: str
    idx: tuple[int, ...] = ()
    sub: int = -1

    def __post_init__(self):
        if list(self.idx) != sorted(set(self.idx)):
            raise ValueError(f"index set must be strictly increasing: {self.idx!r}")
        if self.sub != -1 and self.sub not in self.idx:
            raise ValueError(f"sub-index {self.sub} not in {self.idx!r}")

    @property
    def name(self) -> str:
        if self.kind == "one":
            return "1"
        s = self.kind + "".join(str(i) for i in self.idx)
        if self.sub >= 0:
            s += "," + str(self.sub)
        return s

    def __repr__(self):
        return self.name


def parse_name(name: str) -> tuple[str, tuple[int, ...], int]:
    """Split a display name like ``V012,1`` into (kind, idx, sub).

    Index digits are single characters (all rings here have < 10 points).
    """
    name = name.strip()
    if name == "1":
        return ("one", (), -1)
    sub = -1
    if "," in name:
        name, subtxt = name.split(",", 1)
        sub = int(subtxt)
    kind = name.rstrip("0123456789")
    if not kind:
        raise UnknownSymbolError(f"cannot parse cycle name {name!r}")
    idx = tuple(int(c) for c in name[len(kind):])
    return (kind, idx, sub)


class ChowClass:
    """Sparse integer combination of basis cycles of a single grade."""

    __slots__ = ("ring", "grade", "coeffs")

    def __init__(self, ring: "ChowRing", grade: int, coeffs: dict):
        self.ring = ring
        self.grade = grade
        self.coeffs = coeffs  # canonical: no zero values

    def terms(self) -> tuple[tuple[BasisElement, int], ...]:
        return tuple(sorted(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, elem: BasisElement) -> int:
        return self.coeffs.get(elem, 0)

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return (self.ring is other.ring and self.grade == other.grade
                and self.coeffs == other.coeffs)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1))

    def __neg__(self):
        return scale(self, -1)

    def __rmul__(self, c):
        if isinstance(c, int):
            return scale(self, c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        if isinstance(other, ChowClass):
            return mul(self, other)
        return NotImplemented

    def __repr__(self):
        if not self.coeffs:
            return f"0[{self.grade}]"
        parts = []
        for elem, c in self.terms():
            if c == 1:
                parts.append(f"+{elem.name}")
            elif c == -1:
                parts.append(f"-{elem.name}")
            else:
                parts.append(f"{c:+d}*{elem.name}")
        out = " ".join(parts)
        return out[1:] if out.startswith("+") else out


def _canonical(ring, grade, acc: dict) -> ChowClass:
    clean = {}
    for elem, c in acc.items():
        if c == 0:
            continue
        if abs(c) > INT64_MAX:
            raise CoefficientOverflowError(
                f"coefficient {c} of {elem.name} exceeds 64-bit range")
        clean[elem] = c
    return ChowClass(ring, grade, clean)


class ChowRing:
    """A graded ring with a finite named basis and table multiplication.

    Built in two phases: ``add_basis``/``set_product``/``add_derived`` while
    constructing, then ``finalize()`` which checks the product table covers
    every basis pair with grade sum <= dim and locks the ring.
    """

    def __init__(self, ring_id: str, dim: int):
        self.ring_id = ring_id
        self.dim = dim
        self.basis_by_grade: dict[int, list[BasisElement]] = {
            g: [] for g in range(dim + 1)}
        self._lookup: dict[tuple, BasisElement] = {}
        self._table: dict[tuple, dict] = {}
        self._derived: dict[tuple, "ChowClass"] = {}
        self._final = False

    # -- construction ------------------------------------------------

    def add_basis(self, grade, kind, idx=(), sub=-1) -> BasisElement:
        assert not self._final
        elem = BasisElement(self.ring_id, grade, kind, tuple(idx), sub)
        key = (kind, tuple(idx), sub)
        if key in self._lookup:
            raise ValueError(f"duplicate basis element {elem.name}")
        self._lookup[key] = elem
        self.basis_by_grade[grade].append(elem)
        return elem

    def set_product(self, a: BasisElement, b: BasisElement, terms):
        """Store a*b (and b*a).  ``terms`` is a list of (elem, coeff)."""
        assert not self._final
        key = (a, b) if a <= b else (b, a)
        acc = {}
        for elem, c in terms:
            acc[elem] = acc.get(elem, 0) + c
        self._table[key] = {e: c for e, c in acc.items() if c != 0}

    def add_derived(self, kind, idx, sub, cls: ChowClass):
        assert not self._final
        self._derived[(kind, tuple(idx), sub)] = cls

    def finalize(self):
        for ga in range(1, self.dim + 1):
            for gb in range(ga, self.dim + 1 - ga):
                for a in self.basis_by_grade[ga]:
                    for b in self.basis_by_grade[gb]:
                        key = (a, b) if a <= b else (b, a)
                        if key not in self._table:
                            raise MissingTableEntryError(
                                f"no product stored for {a.name} * {b.name}")
        self._final = True

    # -- basis access ------------------------------------------------

    def element(self, kind, idx=(), sub=-1) -> BasisElement:
        try:
            return self._lookup[(kind, tuple(idx), sub)]
        except KeyError:
            raise UnknownBasisError(
                f"{self.ring_id} has no basis element {kind}{tuple(idx)}"
                + (f",{sub}" if sub != -1 else "")) from None

    def basis(self, grade=None):
        if grade is None:
            for g in range(self.dim + 1):
                yield from self.basis_by_grade[g]
        else:
            yield from self.basis_by_grade[grade]

    @property
    def one(self) -> BasisElement:
        return self.basis_by_grade[0][0]

    @property
    def point(self) -> BasisElement:
        return self.basis_by_grade[self.dim][0]

    # -- class construction and arithmetic ----------------------------

    def zero(self, grade: int) -> ChowClass:
        if not 0 <= grade <= self.dim:
            raise WrongGradeError(f"grade {grade} outside 0..{self.dim}")
        return ChowClass(self, grade, {})

    def make_class(self, grade: int, terms) -> ChowClass:
        """Build a class from (element, coefficient) pairs of one grade.

        Elements may be BasisElement values belonging to this ring or
        (kind, idx) / (kind, idx, sub) tuples / display-name strings.
        """
        if not 0 <= grade <= self.dim:
            raise WrongGradeError(f"grade {grade} outside 0..{self.dim}")
        acc = {}
        for elem, c in terms:
            elem = self._coerce(elem)
            if elem.grade != grade:
                raise MixedGradeError(
                    f"{elem.name} has grade {elem.grade}, expected {grade}")
            acc[elem] = acc.get(elem, 0) + c
        return _canonical(self, grade, acc)

    def cls(self, elem, c=1) -> ChowClass:
        """Single-term convenience constructor."""
        elem = self._coerce(elem)
        return _canonical(self, elem.grade, {elem: c})

    def _coerce(self, elem) -> BasisElement:
        if isinstance(elem, BasisElement):
            if elem.ring != self.ring_id:
                raise MixedGradeError(
                    f"{elem.name} belongs to {elem.ring}, not {self.ring_id}")
            if self._lookup.get((elem.kind, elem.idx, elem.sub)) != elem:
                raise UnknownBasisError(f"{elem.name} not in {self.ring_id} basis")
            return elem
        if isinstance(elem, str):
            kind, idx, sub = parse_name(elem)
            return self.element(kind, idx, sub)
        if isinstance(elem, tuple):
            if len(elem) == 2:
                return self.element(elem[0], elem[1])
            if len(elem) == 3:
                return self.element(elem[0], elem[1], elem[2])
        raise UnknownBasisError(f"cannot interpret {elem!r} as a basis element")

    def mul(self, x: ChowClass, y: ChowClass) -> ChowClass:
        if x.ring is not self or y.ring is not self:
            raise MixedGradeError("operands from different rings")
        g = x.grade + y.grade
        if g > self.dim:
            raise GradeOverflowError(
                f"grades {x.grade}+{y.grade} exceed dim {self.dim}")
        if x.grade == 0:
            return scale(y, x.coeff(self.one))
        if y.grade == 0:
            return scale(x, y.coeff(self.one))
        acc = {}
        for ea, ca in x.coeffs.items():
            for eb, cb in y.coeffs.items():
                key = (ea, eb) if ea <= eb else (eb, ea)
                try:
                    entry = self._table[key]
                except KeyError:
                    raise MissingTableEntryError(
                        f"no product stored for {ea.name} * {eb.name}") from None
                cab = ca * cb
                for e, c in entry.items():
                    acc[e] = acc.get(e, 0) + cab * c
        return _canonical(self, g, acc)

    def degree(self, x: ChowClass) -> int:
        """Coefficient of the point class; defined only in top grade."""
        if x.ring is not self:
            raise MixedGradeError("class from a different ring")
        if x.grade != self.dim:
            raise WrongGradeError(
                f"degree needs grade {self.dim}, got {x.grade}")
        return x.coeff(self.point)

    def normalize(self, terms) -> ChowClass:
        """Expand a symbolic combination into stored basis cycles.

        Terms are (symbol, coeff) pairs where symbol is a basis element,
        a display-name string, or a (kind, idx[, sub]) tuple naming either
        a basis cycle or one of the ring's derived (rewritten) symbols.
        All terms must land in a single grade.
        """
        out = None
        for sym, c in terms:
            cls = self._expand_symbol(sym)
            cls = scale(cls, c)
            out = cls if out is None else add(out, cls)
        if out is None:
            raise UnknownSymbolError("empty symbolic combination has no grade")
        return out

    def _expand_symbol(self, sym) -> ChowClass:
        if isinstance(sym, BasisElement):
            return self.cls(sym)
        if isinstance(sym, str):
            kind, idx, sub = parse_name(sym)
        elif isinstance(sym, tuple) and len(sym) in (2, 3):
            kind, idx = sym[0], tuple(sym[1])
            sub = sym[2] if len(sym) == 3 else -1
        else:
            raise UnknownSymbolError(f"cannot interpret symbol {sym!r}")
        hit = self._lookup.get((kind, idx, sub))
        if hit is not None:
            return self.cls(hit)
        drv = self._derived.get((kind, idx, sub))
        if drv is not None:
            return drv
        raise UnknownSymbolError(
            f"{self.ring_id} knows no symbol {kind}{idx}"
            + (f",{sub}" if sub != -1 else ""))


# -- grade-checked module-level helpers -------------------------------

def add(x: ChowClass, y: ChowClass) -> ChowClass:
    if x.ring is not y.ring or x.grade != y.grade:
        raise MixedGradeError(
            f"cannot add grade {x.grade} and grade {y.grade} classes")
    acc = dict(x.coeffs)
    for e, c in y.coeffs.items():
        acc[e] = acc.get(e, 0) + c
    return _canonical(x.ring, x.grade, acc)


def scale(x: ChowClass, c: int) -> ChowClass:
    if c == 1:
        return x
    return _canonical(x.ring, x.grade, {e: c * v for e, v in x.coeffs.items()})


def mul(x: ChowClass, y: ChowClass) -> ChowClass:
    if x.ring is not y.ring:
        raise MixedGradeError("operands from different rings")
    return x.ring.mul(x, y)


def degree(x: ChowClass) -> int:
    return x.ring.degree(x)


def linear_map(x: ChowClass, images: dict, grade=None) -> ChowClass:
    """Apply a basis-indexed linear map to a class.

    ``images[elem]`` is the image class of each basis cycle; all images of
    the cycles present in ``x`` must share one grade (usually x.grade, but
    graded automorphisms are the intended use so it always is here).
    """
    out = None
    for e, c in x.coeffs.items():
        img = scale(images[e], c)
        out = img if out is None else add(out, img)
    if out is None:
        return x.ring.zero(x.grade if grade is None else grade)
    return out
