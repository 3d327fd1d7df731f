"""Command-line front end.

Every library operation is reachable as a subcommand, with text output
shaped like the tables the library reproduces and a JSON mode
(``--format json``, schema tag "mvf-rmf/1") for scripting.

Exit status: 0 on success, 1 on usage or input-parse errors, 2 on
domain errors (for example compressing a function that is not constant
on some orbit).  Errors are written to stderr as a single line
``error:<kind>:<message>`` with kind in {usage, parse, domain,
resource}.
"""

import argparse
import json
import sys

from .basis import (
    basis_to_json,
    compact_spectrum,
    default_cache_dir,
    load_or_build_basis,
    sum_and_classify,
)
from .domain import (
    parse_value_vector,
    parse_values,
    serialize_value_vector,
    serialize_values,
    value_vector_to_json,
)
from .errors import DomainError, MatrixSizeError, ParseError
from .orbits import (
    FULL_SYMMETRIC,
    ROTATION,
    CompactVector,
    SymmetryClass,
    build_orbit_table,
    build_symmetric_table,
    classify,
    compress,
    expand,
    kappa,
    orbit_count,
)
from .transform import basic_matrix, rmf_transform, transform_matrix

SCHEMA = "mvf-rmf/1"

_CLASS_WORDS = {
    SymmetryClass.SYMMETRIC: "symmetric",
    SymmetryClass.STRICTLY_ROTATION_SYMMETRIC: "rotation-symmetric",
    SymmetryClass.NONE: "none",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_pn(sub, n_default=None):
    sub.add_argument("--p", type=int, required=True, help="radix (>= 2)")
    if n_default is None:
        sub.add_argument("--n", type=int, required=True, help="argument count")
    else:
        sub.add_argument("--n", type=int, default=n_default, help="argument count")


def _add_values(sub):
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--values", help="values inline (digits for p <= 10)")
    group.add_argument(
        "--input", help="read values from a file, or '-' for stdin"
    )


def _add_format(sub):
    sub.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def _add_cache(sub):
    sub.add_argument(
        "--cache-dir",
        default=None,
        help="directory for the basis cache (default: RMFSYM_CACHE_DIR "
        "or ~/.cache/rmfsym)",
    )
    sub.add_argument(
        "--no-cache", action="store_true", help="do not read or write a disk cache"
    )


def build_parser():
    parser = _Parser(prog="rmfsym", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)

    sub = commands.add_parser("matrix", help="print the transform matrix")
    _add_pn(sub, n_default=1)
    sub.add_argument(
        "--max-size", type=int, default=None, help="override the dense size cap"
    )
    _add_format(sub)
    sub.set_defaults(func=_cmd_matrix)

    sub = commands.add_parser("orbits", help="list cyclic orbits with ranks")
    _add_pn(sub)
    _add_format(sub)
    sub.set_defaults(func=_cmd_orbits)

    sub = commands.add_parser("classify", help="symmetry class of a truth table")
    _add_pn(sub)
    _add_values(sub)
    _add_format(sub)
    sub.set_defaults(func=_cmd_classify)

    sub = commands.add_parser(
        "transform", help="spectrum of a full truth table (self-inverse)"
    )
    _add_pn(sub)
    _add_values(sub)
    sub.add_argument(
        "--map",
        action="store_true",
        help="print as a map: p rows, columns over the trailing arguments",
    )
    _add_format(sub)
    sub.set_defaults(func=_cmd_transform)

    sub = commands.add_parser("compact", help="compress a truth table to rank order")
    _add_pn(sub)
    _add_values(sub)
    sub.add_argument(
        "--kind",
        choices=(ROTATION, FULL_SYMMETRIC),
        default=ROTATION,
        help="orbit partition to compress against",
    )
    _add_format(sub)
    sub.set_defaults(func=_cmd_compact)

    sub = commands.add_parser("expand", help="expand a compact vector to full length")
    _add_pn(sub)
    _add_values(sub)
    sub.add_argument(
        "--kind", choices=(ROTATION, FULL_SYMMETRIC), default=ROTATION
    )
    _add_format(sub)
    sub.set_defaults(func=_cmd_expand)

    sub = commands.add_parser(
        "basis", help="compact spectra of all elementary functions"
    )
    _add_pn(sub)
    _add_cache(sub)
    _add_format(sub)
    sub.set_defaults(func=_cmd_basis)

    sub = commands.add_parser(
        "spectrum",
        help="compact spectrum of a rotation-symmetric function",
        description="With --compact the input is a compact vector and the "
        "spectrum is a weighted sum of basis columns, never touching the "
        "full truth table; otherwise the input is a full truth table and "
        "is transformed, then compressed.  The operation is self-inverse: "
        "feeding a compact spectrum back recovers the compact function "
        "(--inverse names that direction, the computation is identical).",
    )
    _add_pn(sub)
    _add_values(sub)
    sub.add_argument(
        "--compact",
        action="store_true",
        help="input is a compact vector in rank order",
    )
    sub.add_argument(
        "--inverse",
        action="store_true",
        help="spectrum-to-function direction (same weighted sum)",
    )
    sub.add_argument(
        "--plain", action="store_true", help="text output as bare values"
    )
    _add_cache(sub)
    _add_format(sub)
    sub.set_defaults(func=_cmd_spectrum)

    sub = commands.add_parser(
        "sum", help="mod-p sum of two compact vectors, with its symmetry class"
    )
    _add_pn(sub)
    sub.add_argument("--a", required=True, help="first compact vector, rank order")
    sub.add_argument("--b", required=True, help="second compact vector, rank order")
    _add_format(sub)
    sub.set_defaults(func=_cmd_sum)

    sub = commands.add_parser("count", help="orbit and function counts")
    _add_pn(sub)
    _add_format(sub)
    sub.set_defaults(func=_cmd_count)

    return parser


def _read_text(args):
    if args.values is not None:
        return args.values
    if args.input is not None:
        if args.input == "-":
            return sys.stdin.read()
        with open(args.input, encoding="utf-8") as fh:
            return fh.read()
    raise _UsageError("one of --values or --input is required")


def _read_value_vector(args):
    return parse_value_vector(_read_text(args), args.p, args.n)


def _read_compact(args, kind, text=None):
    if text is None:
        text = _read_text(args)
    if kind == ROTATION:
        length = orbit_count(args.p, args.n)
    else:
        length = kappa(args.p, args.n)
    return CompactVector(args.p, args.n, kind, parse_values(text, args.p, length))


def _rep_str(rep, p):
    return serialize_values(rep, p)


def _cycle_str(orbit, p):
    return "-".join(_rep_str(m, p) for m in orbit.members)


def _emit(args, text_lines, payload):
    if args.format == "json":
        payload = dict(payload)
        payload.setdefault("schema", SCHEMA)
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)
    return 0


def _compact_lines(table, values):
    width = max(len(_rep_str(o.representative, table.p)) for o in table.orbits)
    return [
        f"{_rep_str(o.representative, table.p):<{width}} {r:>2} {v}"
        for r, (o, v) in enumerate(zip(table.orbits, values))
    ]


def _cmd_matrix(args):
    if args.n == 1:
        m = basic_matrix(args.p)
    elif args.max_size is not None:
        m = transform_matrix(args.p, args.n, max_size=args.max_size)
    else:
        m = transform_matrix(args.p, args.n)
    rows = m.row_lists()
    lines = [" ".join(str(e) for e in row) for row in rows]
    return _emit(args, lines, {"p": m.p, "n": m.n, "rows": rows})


def _cmd_orbits(args):
    table = build_orbit_table(args.p, args.n)
    lines = []
    width = max(len(_rep_str(o.representative, args.p)) for o in table.orbits)
    for rank, orbit in enumerate(table.orbits):
        rep = _rep_str(orbit.representative, args.p)
        lines.append(f"{rep:<{width}} {rank:>2} {_cycle_str(orbit, args.p)}")
    payload = {
        "p": args.p,
        "n": args.n,
        "orbits": [
            {
                "representative": list(o.representative),
                "rank": rank,
                "members": [list(m) for m in o.members],
            }
            for rank, o in enumerate(table.orbits)
        ],
    }
    return _emit(args, lines, payload)


def _cmd_classify(args):
    f = _read_value_vector(args)
    word = _CLASS_WORDS[classify(f)]
    return _emit(args, [word], {"p": args.p, "n": args.n, "class": word})


def _cmd_transform(args):
    f = _read_value_vector(args)
    s = rmf_transform(f)
    if args.map:
        width = args.p ** (args.n - 1)
        rows = [list(s.values[r * width : (r + 1) * width]) for r in range(args.p)]
        lines = [" ".join(str(v) for v in row) for row in rows]
    else:
        lines = [serialize_value_vector(s)]
    return _emit(args, lines, value_vector_to_json(s))


def _cmd_compact(args):
    f = _read_value_vector(args)
    if args.kind == ROTATION:
        table = build_orbit_table(args.p, args.n)
    else:
        table = build_symmetric_table(args.p, args.n)
    c = compress(f, table)
    payload = {
        "p": args.p,
        "n": args.n,
        "kind": c.kind,
        "values": list(c.values),
        "representatives": [list(o.representative) for o in table.orbits],
    }
    return _emit(args, _compact_lines(table, c.values), payload)


def _cmd_expand(args):
    c = _read_compact(args, args.kind)
    f = expand(c)
    return _emit(args, [serialize_value_vector(f)], value_vector_to_json(f))


def _cmd_basis(args):
    cache_dir = None if args.no_cache else (args.cache_dir or default_cache_dir())
    basis = load_or_build_basis(args.p, args.n, cache_dir=cache_dir)
    table = build_orbit_table(args.p, args.n)
    width = max(len(_rep_str(o.representative, args.p)) for o in table.orbits)
    header = f"{'repr':<{width}} " + " ".join(
        f"k{k}" for k in range(len(basis))
    )
    lines = [header]
    for r, orbit in enumerate(table.orbits):
        rep = _rep_str(orbit.representative, args.p)
        row = " ".join(
            f"{col.values[r]:>{len(f'k{k}')}}" for k, col in enumerate(basis.columns)
        )
        lines.append(f"{rep:<{width}} {row}")
    return _emit(args, lines, basis_to_json(basis))


def _cmd_spectrum(args):
    cache_dir = None if args.no_cache else (args.cache_dir or default_cache_dir())
    if args.compact:
        c = _read_compact(args, ROTATION)
        basis = load_or_build_basis(args.p, args.n, cache_dir=cache_dir)
        s = compact_spectrum(c, basis)
    else:
        f = _read_value_vector(args)
        s = compress(rmf_transform(f), build_orbit_table(args.p, args.n))
    table = build_orbit_table(args.p, args.n)
    if args.plain:
        lines = [serialize_values(s.values, args.p)]
    else:
        lines = _compact_lines(table, s.values)
    payload = {
        "p": args.p,
        "n": args.n,
        "kind": s.kind,
        "values": list(s.values),
    }
    return _emit(args, lines, payload)


def _cmd_sum(args):
    a = _read_compact(args, ROTATION, text=args.a)
    b = _read_compact(args, ROTATION, text=args.b)
    total, cls = sum_and_classify(a, b)
    word = _CLASS_WORDS[cls]
    table = build_orbit_table(args.p, args.n)
    lines = _compact_lines(table, total.values) + [f"class: {word}"]
    payload = {
        "p": args.p,
        "n": args.n,
        "kind": total.kind,
        "values": list(total.values),
        "class": word,
    }
    return _emit(args, lines, payload)


def _cmd_count(args):
    oc = orbit_count(args.p, args.n)
    k = kappa(args.p, args.n)
    symmetric = args.p**k
    rotation = args.p**oc
    lines = [
        f"orbits: {oc}",
        f"kappa: {k}",
        f"symmetric: {symmetric}",
        f"rotation-symmetric-including-symmetric: {rotation}",
        f"strictly-rotation-symmetric: {rotation - symmetric}",
    ]
    payload = {
        "p": args.p,
        "n": args.n,
        "orbits": oc,
        "kappa": k,
        "symmetric": symmetric,
        "rotation_symmetric_including_symmetric": rotation,
        "strictly_rotation_symmetric": rotation - symmetric,
    }
    return _emit(args, lines, payload)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error:usage:{exc}", file=sys.stderr)
        return 1
    if getattr(args, "func", None) is None:
        print("error:usage:a subcommand is required (see --help)", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error:usage:{exc}", file=sys.stderr)
        return 1
    except ParseError as exc:
        print(f"error:parse:{exc}", file=sys.stderr)
        return 1
    except MatrixSizeError as exc:
        print(f"error:resource:{exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error:domain:{exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
