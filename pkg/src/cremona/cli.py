"""Command line driver: orbits, Cremona transforms, pairings, Chow
products, linear system reports and record classification.

Records travel as JSON documents with a "kind" field; surfaces are also
accepted and printed as the 45-entry triangular array (degree row, quartic
row, then the line multiplicities row by row).  Point labels are 1-based
everywhere here, including the Chow cycle names (E1 is the first point).

Exit codes: 0 ok, 2 bad input, 3 orbit budget exceeded, 4 the transform
contracted the class (the image is still printed).
"""

import argparse
import json
import sys
from itertools import combinations

from . import chow, linsys, p3, p4, weyl

EX_OK = 0
EX_PARSE = 2
EX_BUDGET = 3
EX_CONTRACTED = 4

CACHE_HEADER = "# cremona orbit cache v1"


class CliError(Exception):
    """Anything wrong with the command line or an input file."""


# -- record serialization ----------------------------------------------

def record_to_json(rec):
    if isinstance(rec, weyl.DivisorRecord):
        return {"kind": "divisor", "s": rec.s, "d": rec.d, "m": list(rec.m)}
    if isinstance(rec, weyl.CurveRecord):
        return {"kind": "curve", "s": rec.s, "d": rec.d, "m": list(rec.m)}
    if isinstance(rec, weyl.SurfaceRecord):
        return {"kind": "surface", "s": rec.s, "d": rec.d, "m": list(rec.m),
                "n": list(rec.n), "mline": list(rec.mline)}
    raise CliError(f"cannot serialize {rec!r}")


def record_from_json(doc):
    try:
        kind = doc["kind"]
        if kind == "divisor":
            return weyl.DivisorRecord(doc["s"], doc["d"], tuple(doc["m"]))
        if kind == "curve":
            return weyl.CurveRecord(doc["s"], doc["d"], tuple(doc["m"]))
        if kind == "surface":
            return weyl.SurfaceRecord(doc["s"], doc["d"], tuple(doc["m"]),
                                      tuple(doc.get("n", (0,) * 8)),
                                      tuple(doc.get("mline", (0,) * 28)))
    except (KeyError, TypeError, ValueError) as e:
        raise CliError(f"bad record document: {e}") from None
    raise CliError(f"unknown record kind {doc.get('kind')!r}")


def surface_to_triangle(rec):
    """The printed triangular array: d with the m row, the n row, then
    the line multiplicities anchored at 1, 2, ..., 7."""
    rows = [[rec.d] + list(rec.m), list(rec.n)]
    at = 0
    for i in range(1, 8):
        rows.append(list(rec.mline[at:at + 8 - i]))
        at += 8 - i
    width = [0] * 9
    for r, row in enumerate(rows):
        for c, v in enumerate(row, start=r):
            width[c] = max(width[c], len(str(v)))
    out = []
    for r, row in enumerate(rows):
        cells = [" " * width[c] for c in range(r)]
        cells += [str(v).rjust(width[c]) for c, v in enumerate(row, start=r)]
        out.append(" ".join(cells).rstrip())
    return "\n".join(out)


def surface_from_triangle(text, s=8):
    toks = text.split()
    if len(toks) != 45:
        raise CliError(f"the triangular array has 45 entries, got {len(toks)}")
    try:
        vals = [int(t) for t in toks]
    except ValueError:
        raise CliError("the triangular array must be whitespace-separated "
                       "integers") from None
    try:
        return weyl.SurfaceRecord(s, vals[0], tuple(vals[1:9]),
                                  tuple(vals[9:17]), tuple(vals[17:]))
    except ValueError as e:
        raise CliError(str(e)) from None


def load_record(path, kind=None, s=8):
    try:
        text = open(path).read()
    except OSError as e:
        raise CliError(str(e)) from None
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise CliError(f"{path}: {e}") from None
        rec = record_from_json(doc)
    else:
        rec = surface_from_triangle(text, s=s)
    if kind is not None and record_kind(rec) != kind:
        raise CliError(f"{path} holds a {record_kind(rec)}, expected {kind}")
    return rec


def record_kind(rec):
    return {weyl.DivisorRecord: "divisor", weyl.CurveRecord: "curve",
            weyl.SurfaceRecord: "surface"}[type(rec)]


def print_record(rec, as_json):
    if as_json:
        print(json.dumps(record_to_json(rec)))
    elif isinstance(rec, weyl.SurfaceRecord):
        print(surface_to_triangle(rec))
    else:
        print(f"({rec.d}; {' '.join(str(x) for x in rec.m)})")


# -- chow class serialization ------------------------------------------

_RINGS = {"x3": p3.RING, "x4": p4.RING}


def _shift_name(name, delta):
    # user-facing cycle names are 1-based, the rings label points from 0
    kind, idx, sub = chow.parse_name(name)
    if kind == "one":
        return "1"
    out = kind + "".join(str(i + delta) for i in idx)
    if sub >= 0:
        out += f",{sub + delta}"
    return out


def chow_from_json(doc, ring_name):
    if doc.get("kind") != "chow":
        raise CliError(f"expected a chow document, got kind {doc.get('kind')!r}")
    if doc.get("ring", ring_name) != ring_name:
        raise CliError(f"ring mismatch: file says {doc['ring']}, "
                       f"command says {ring_name}")
    ring = _RINGS[ring_name]
    terms = doc.get("terms", {})
    try:
        pairs = [(_shift_name(name, -1), int(c)) for name, c in terms.items()]
        if pairs:
            grade = ring._coerce(pairs[0][0]).grade
        else:
            grade = int(doc.get("grade", 0))
        return ring.make_class(grade, pairs)
    except chow.ChowError as e:
        raise CliError(str(e)) from None


def chow_to_json(x, ring_name):
    return {"kind": "chow", "ring": ring_name, "grade": x.grade,
            "terms": {_shift_name(e.name, +1): c for e, c in x.terms()}}


def load_chow(path, ring_name):
    try:
        doc = json.loads(open(path).read())
    except OSError as e:
        raise CliError(str(e)) from None
    except json.JSONDecodeError as e:
        raise CliError(f"{path}: {e}") from None
    return chow_from_json(doc, ring_name)


# -- orbit command ------------------------------------------------------

_TAG_ORDER = {"line": 0, "quartic": 1, "S1": 0, "S3": 1, "S6": 2,
              "S10": 3, "S15": 4}
_TAG_SHOW = {"line": "lines", "quartic": "quartics"}


def census_line(census):
    def key(tag):
        return (0, _TAG_ORDER[tag]) if tag in _TAG_ORDER else (1, tag)
    parts = [f"{_TAG_SHOW.get(tag, tag)}:{census[tag]}"
             for tag in sorted(census, key=key)]
    return " ".join(parts) + f"; total {sum(census.values())}"


def builtin_seed(kind, s):
    if kind == "line":
        return weyl.line_record(1, 2, s=s)
    if kind == "plane":
        return weyl.s1_plane(1, 2, 3, s=s)
    if kind == "divisor":
        return weyl.hyperplane_record((1, 2, 3, 4), s=s)
    raise CliError(f"no builtin seed of kind {kind!r}")


def write_cache(path, result):
    lines = []
    for rec in result.members:
        doc = json.dumps(record_to_json(rec), sort_keys=True,
                         separators=(",", ":"))
        lines.append(f"{weyl.record_tag(rec)}\t{doc}")
    lines.sort()
    with open(path, "w") as fh:
        fh.write(CACHE_HEADER + "\n")
        fh.write("\n".join(lines) + "\n")


def cmd_orbit(args):
    if args.seed:
        seed = load_record(args.seed, s=args.s)
    else:
        try:
            seed = builtin_seed(args.kind, args.s)
        except ValueError as e:
            raise CliError(str(e)) from None
    result = weyl.orbit(seed)
    if args.cache:
        write_cache(args.cache, result)
    if args.json:
        doc = {"members": len(result.members),
               "census": dict(sorted(result.type_census.items()))}
        if args.cache:
            doc["cache"] = args.cache
        print(json.dumps(doc))
    else:
        print(f"members: {len(result.members)}")
        if args.census:
            print(f"census: {census_line(result.type_census)}")
        if args.cache:
            print(f"cache written: {args.cache}")
    return EX_OK


# -- cremona command ----------------------------------------------------

def parse_centers(text):
    try:
        centers = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise CliError(f"bad centers {text!r}") from None
    return centers


def cmd_cremona(args):
    rec = load_record(args.infile, kind=args.kind, s=args.s)
    centers = parse_centers(args.centers)
    try:
        image = weyl.apply_cremona5(rec, centers)
    except weyl.BadCentersError as e:
        raise CliError(str(e)) from None
    print_record(image, args.json)
    return EX_CONTRACTED if image.d <= 0 else EX_OK


# -- pair command -------------------------------------------------------

def cmd_pair(args):
    a = load_record(args.a, kind="surface", s=args.s)
    b = load_record(args.b, kind="surface", s=args.s)
    try:
        value = weyl.weyl_plane_pairing(a, b)
    except (weyl.NotAWeylPlaneError, ValueError) as e:
        raise CliError(str(e)) from None
    if args.json:
        print(json.dumps({"pairing": value}))
    else:
        print(value)
    return EX_OK


# -- mul command --------------------------------------------------------

def cmd_mul(args):
    x = load_chow(args.a, args.ring)
    y = load_chow(args.b, args.ring)
    try:
        prod = x * y
    except chow.ChowError as e:
        raise CliError(str(e)) from None
    if args.degree:
        try:
            print(chow.degree(prod))
        except chow.ChowError as e:
            raise CliError(str(e)) from None
    else:
        print(json.dumps(chow_to_json(prod, args.ring)))
    return EX_OK


# -- report command -----------------------------------------------------

def _line_label(i, j):
    return f"L_{i}{j}" if j <= 9 else f"L_{i},{j}"


def _table(parts):
    return " ".join(parts) if parts else "none"


def cmd_report(args):
    try:
        doc = json.loads(open(args.infile).read())
    except OSError as e:
        raise CliError(str(e)) from None
    except json.JSONDecodeError as e:
        raise CliError(f"{args.infile}: {e}") from None
    if doc.get("kind") != "divisor":
        raise CliError("the report wants a divisor record")
    try:
        D = linsys.FatPointDivisor(doc["s"], doc["d"], tuple(doc["m"]))
    except (KeyError, ValueError) as e:
        raise CliError(f"bad record document: {e}") from None

    full = D.s in weyl.POINT_COUNTS and not args.lines_only
    c = linsys.chi(D)
    h = linsys.h1_correction(D)
    w = linsys.wdim(D, lines_only=not full)

    lines, quartics, planes, conflicts, deep, hint = {}, {}, {}, (), (), False
    if D.s <= 8:
        rep = linsys.base_locus_report(D)
        lines, quartics, planes = rep.lines, rep.quartics, rep.planes
        conflicts, deep, hint = (rep.pairwise_conflicts, rep.deep_curves,
                                 rep.empties_hint)
    else:
        for i, j in combinations(range(1, D.s + 1), 2):
            k = linsys.k_line(D, i, j)
            if k > 0:
                lines[(i, j)] = k
            if k >= 2:
                deep += (("line", (i, j), k),)
        for sub in combinations(range(1, D.s + 1), 7):
            k = linsys.k_quartic_through(D, sub)
            if k > 0:
                quartics[sub] = k

    if args.json:
        print(json.dumps({
            "chi": c, "wdim": w, "h1corr": h, "lines_only": not full,
            "lines": {f"{i},{j}": k for (i, j), k in lines.items()},
            "quartics": {",".join(str(x) for x in (k if isinstance(k, tuple)
                                                   else (k,))): v
                         for k, v in quartics.items()},
            "planes": dict(planes),
            "conflicts": [list(p) for p in conflicts],
            "deep": [[tag, list(idx), k] for tag, idx, k in deep],
            "empties_hint": hint,
        }))
        return EX_OK

    label = "wdim" if full else "wdim(lines-only)"
    print(f"chi={c} {label}={w} h1corr={h}")
    print("lines: " + _table([f"{_line_label(i, j)}:{k}"
                              for (i, j), k in sorted(lines.items())]))
    print("quartics: " + _table(
        [f"Q_{k}:{v}" if not isinstance(k, tuple)
         else "Q(" + ",".join(str(x) for x in k) + f"):{v}"
         for k, v in sorted(quartics.items())]))
    if D.s <= 8:
        print("planes: " + _table([f"{t}:{k}" for t, k in sorted(planes.items())]))
        print("conflicts: " + _table([f"{a}~{b}" for a, b in conflicts]))
    if deep:
        print("deep: " + " ".join(
            f"{tag}({','.join(str(x) for x in idx)}):{k}"
            for tag, idx, k in deep))
    if hint:
        print("note: meeting planes in the base locus; the system is "
              "likely empty")
    return EX_OK


# -- classify command ---------------------------------------------------

def cmd_classify(args):
    rec = load_record(args.infile, kind=args.kind, s=args.s)
    if isinstance(rec, weyl.SurfaceRecord):
        tag, idx = weyl.classify_surface(rec)
    elif isinstance(rec, weyl.CurveRecord):
        tag, idx = weyl.classify_curve(rec)
    else:
        tag, idx = weyl.divisor_type(rec), ()
    if args.json:
        print(json.dumps({"tag": tag, "idx": list(idx)}))
    else:
        print(f"{tag}({','.join(str(i) for i in idx)})" if idx else tag)
    return EX_OK


# -- parser -------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="cremona",
        description="Weyl records, orbits and linear system diagnostics "
                    "for points in P^4")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        p.add_argument("--s", type=int, default=8,
                       help="point count for triangular input and builtin "
                            "seeds (default 8)")

    p = sub.add_parser("orbit", help="enumerate a Weyl orbit")
    p.add_argument("--kind", choices=("line", "plane", "divisor"),
                   default="plane", help="builtin seed to expand")
    p.add_argument("--seed", help="record file overriding the builtin seed")
    p.add_argument("--cache", help="write the sorted member cache here")
    p.add_argument("--census", action="store_true",
                   help="print the type census")
    common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("cremona", help="apply a five-point Cremona")
    p.add_argument("--kind", choices=("divisor", "curve", "surface"),
                   required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--centers", required=True, help="five labels, comma-separated")
    common(p)
    p.set_defaults(func=cmd_cremona)

    p = sub.add_parser("pair", help="Weyl plane intersection pairing")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    common(p)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("mul", help="product of two Chow classes")
    p.add_argument("--ring", choices=("x3", "x4"), required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--degree", action="store_true",
                   help="print the point-class coefficient instead")
    common(p)
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("report", help="linear system diagnostics")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--lines-only", action="store_true",
                   help="restrict the wdim correction to 1-dimensional cycles")
    common(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("classify", help="name a record's orbit type")
    p.add_argument("--kind", choices=("divisor", "curve", "surface"),
                   required=True)
    p.add_argument("--in", dest="infile", required=True)
    common(p)
    p.set_defaults(func=cmd_classify)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except weyl.OrbitBudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EX_BUDGET
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return EX_PARSE
    except (weyl.WeylError, chow.ChowError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EX_PARSE


if __name__ == "__main__":
    sys.exit(main())
