"""Command-line interface.

Exit status: 0 success, 1 undefined result under ``--strict``, 2 invalid
input, 3 unsupported input (ties for a tie-free measure), 4 enumeration cap
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .dataset import load_dataset
from .errors import FuzzyRankError, ResourceLimitError, UnsupportedInputError, ValidationError
from .measures import KINDS, MeasureSpec, compute, matrix, sensitivity
from .rankdata import UNDEFINED, make_ranking
from .relations import make_scaling, relation_tables, top_k_scaling
from .ties import DEFAULT_EXTENSION_CAP, ScoringMatrix, enumerate_extensions, extension_count

EXIT_UNDEFINED = 1
EXIT_VALIDATION = 2
EXIT_UNSUPPORTED = 3
EXIT_RESOURCE = 4


def fmt(value) -> str:
    if value is UNDEFINED:
        return "undef"
    if isinstance(value, int):
        return str(value)
    return f"{float(value):.12g}"


def _jsonable(value):
    if value is UNDEFINED:
        return "undef"
    if isinstance(value, float):
        return float(fmt(value))
    return value


def _floats(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.replace(";", ",").split(",") if t.strip())
    except ValueError:
        raise ValidationError(f"{what}: could not parse {text!r} as comma-separated numbers") from None


def render_table(header: list[str], rows: list[list[str]]) -> str:
    cols = [header] + rows
    widths = [max(len(r[k]) for r in cols) for k in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cols]
    return "\n".join(lines) + "\n"


def render_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------- arguments

def _add_scaling_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("scaling")
    g.add_argument("--scaling", help="comma-separated weights w(1),...,w(n-1)")
    g.add_argument("--scaling-file", help="file holding the weights (commas or whitespace)")
    g.add_argument("--top-k", type=int, help="use the top-k scaling instead of explicit weights")
    g.add_argument("--agg", choices=("sum", "max"), default="sum", help="distance aggregation")


def _add_measure_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--measure", choices=KINDS, default="tau")
    _add_scaling_args(p)
    p.add_argument("--scaling-y", help="separate weights for the second ranking")
    p.add_argument("--tnorm", choices=("min", "prod", "luk"), default="luk")
    p.add_argument("--v", help="Shieh rank weights v_1..v_n")
    p.add_argument("--delta", help="adjacent swap costs delta_1..delta_(n-1)")
    p.add_argument("--matrix", dest="scores", help="9 scores, row-major, for --measure scoring")
    p.add_argument("--base", choices=("tau", "gamma"), default="tau")
    p.add_argument("--attitude", choices=("min", "max", "mean"), default="mean")
    p.add_argument("--cap", type=int, default=DEFAULT_EXTENSION_CAP)


def _add_output_args(p: argparse.ArgumentParser, strict: bool = True, default: str = "table") -> None:
    p.add_argument("--format", choices=("table", "csv", "json"), default=default)
    if strict:
        p.add_argument("--strict", action="store_true", help="exit 1 if any result is undefined")


def _scaling_weights(args) -> tuple[float, ...] | None:
    if args.scaling and args.scaling_file:
        raise ValidationError("use only one of --scaling and --scaling-file")
    if args.scaling_file:
        text = Path(args.scaling_file).read_text()
        return _floats(",".join(text.split()), "--scaling-file")
    if args.scaling:
        return _floats(args.scaling, "--scaling")
    return None


def _spec(args) -> MeasureSpec:
    return MeasureSpec(
        kind=args.measure,
        weights=_scaling_weights(args),
        weights_y=_floats(args.scaling_y, "--scaling-y") if args.scaling_y else None,
        top_k=args.top_k,
        tnorm=args.tnorm,
        aggregator=args.agg,
        v=_floats(args.v, "--v") if args.v else None,
        delta=_floats(args.delta, "--delta") if args.delta else None,
        scoring=ScoringMatrix.from_flat(_floats(args.scores, "--matrix")) if args.scores else ScoringMatrix(),
        base=args.base,
        attitude=args.attitude,
        cap=args.cap,
    )


# ---------------------------------------------------------------- commands

def cmd_compute(args) -> tuple[str, bool]:
    ds = load_dataset(args.data, args.input_format)
    res = compute(ds, args.a, args.b, _spec(args))
    undefined = res.value is UNDEFINED
    breakdown = res.breakdown or {}
    if args.format == "json":
        doc = {"measure": res.measure, "a": res.a, "b": res.b, "value": _jsonable(res.value)}
        doc.update({k: _jsonable(v) for k, v in breakdown.items()})
        return json.dumps(doc, indent=2) + "\n", undefined
    header = ["measure", "a", "b", "value", *breakdown]
    row = [res.measure, res.a, res.b, fmt(res.value), *(fmt(v) for v in breakdown.values())]
    render = render_csv if args.format == "csv" else render_table
    return render(header, [row]), undefined


def cmd_matrix(args) -> tuple[str, bool]:
    ds = load_dataset(args.data, args.input_format)
    res = matrix(ds, _spec(args))
    undefined = any(v is UNDEFINED for row in res.values for v in row)
    if res.warning:
        print(f"warning: {res.warning}", file=sys.stderr)
    if args.format == "json":
        doc = {
            "measure": args.measure,
            "names": list(res.names),
            "symmetric": res.symmetric,
            "values": [[_jsonable(v) for v in row] for row in res.values],
        }
        return json.dumps(doc, indent=2) + "\n", undefined
    header = ["", *res.names]
    rows = [[name, *(fmt(v) for v in row)] for name, row in zip(res.names, res.values)]
    render = render_csv if args.format == "csv" else render_table
    return render(header, rows), undefined


def cmd_sensitivity(args) -> tuple[str, bool]:
    series = sensitivity(args.n, _spec(args))
    undefined = any(v is UNDEFINED for _, v in series)
    if args.format == "json":
        doc = [{"position": p, "value": _jsonable(v)} for p, v in series]
        return json.dumps(doc, indent=2) + "\n", undefined
    rows = [[str(p), fmt(v)] for p, v in series]
    render = render_table if args.format == "table" else render_csv
    return render(["position", "value"], rows), undefined


def cmd_inspect(args) -> tuple[str, bool]:
    weights = _scaling_weights(args)
    if weights is not None and args.top_k is not None:
        raise ValidationError("give either scaling weights or --top-k, not both")
    if weights is not None:
        s = make_scaling(weights)
    elif args.top_k is not None:
        if args.n is None:
            raise ValidationError("--top-k needs --n")
        s = top_k_scaling(args.n, args.top_k)
    else:
        raise ValidationError("inspect needs --scaling, --scaling-file or --top-k")
    tables = relation_tables(s, args.agg)
    if args.format == "json":
        doc = {"n": s.n, "weights": list(s.weights), "aggregator": args.agg}
        doc.update({k: [[_jsonable(float(v)) for v in row] for row in t] for k, t in tables.items()})
        return json.dumps(doc, indent=2) + "\n", False
    if args.format == "csv":
        rows = [
            [name, str(a + 1), str(b + 1), fmt(t[a, b])]
            for name, t in tables.items()
            for a in range(s.n)
            for b in range(s.n)
        ]
        return render_csv(["table", "x", "y", "value"], rows), False
    out = [f"scaling n={s.n} aggregator={args.agg}\n"]
    out.append(render_table(["i", *(str(i) for i in range(1, s.n))], [["w(i)", *(fmt(w) for w in s.weights)]]))
    labels = {"d": "distance d(x,y)", "E": "equivalence E(x,y)", "R": "strict order R(x,y)"}
    for name, t in tables.items():
        out.append(f"\n{labels[name]}\n")
        header = ["x\\y", *(str(b) for b in range(1, s.n + 1))]
        rows = [[str(a + 1), *(fmt(t[a, b]) for b in range(s.n))] for a in range(s.n)]
        out.append(render_table(header, rows))
    return "".join(out), False


def cmd_extensions(args) -> tuple[str, bool]:
    x = make_ranking(_floats(args.ranking, "ranking"))
    items = args.items.split(",") if args.items else None
    if items is not None and len(items) != x.n:
        raise ValidationError(f"--items names {len(items)} items, ranking has {x.n}")
    exts = enumerate_extensions(x, args.cap)
    if args.format == "json":
        doc = {"ranking": list(x.positions), "count": extension_count(x),
               "extensions": [list(e.positions) for e in exts]}
        return json.dumps(doc, indent=2) + "\n", False
    if args.format == "csv":
        return render_csv(["extension", "positions"], [[str(k), " ".join(map(str, e.positions))] for k, e in enumerate(exts, 1)]), False
    lines = [f"{x.bucket_string(items)}: {len(exts)} linear extension(s)"]
    lines += [f"  {e.bucket_string(items)}  ({','.join(map(str, e.positions))})" for e in exts]
    return "\n".join(lines) + "\n", False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzyrank", description="Weighted rank correlation toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one measure between two labelled rankings")
    p.add_argument("data")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--input-format", choices=("csv", "json"))
    _add_measure_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("matrix", help="all-pairs table of one measure")
    p.add_argument("data")
    p.add_argument("--input-format", choices=("csv", "json"))
    _add_measure_args(p)
    _add_output_args(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("sensitivity", help="measure vs. position of a single adjacent swap")
    p.add_argument("--n", type=int, required=True)
    _add_measure_args(p)
    _add_output_args(p, default="csv")
    p.set_defaults(func=cmd_sensitivity)

    p = sub.add_parser("inspect", help="print the d / E / R tables of a scaling function")
    _add_scaling_args(p)
    p.add_argument("--n", type=int, help="item count for --top-k")
    _add_output_args(p, strict=False)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("extensions", help="list the linear extensions of a bucket order")
    p.add_argument("ranking", help="comma-separated positions, e.g. 2,1,3,2,1")
    p.add_argument("--items", help="comma-separated item names")
    p.add_argument("--cap", type=int, default=DEFAULT_EXTENSION_CAP)
    _add_output_args(p, strict=False)
    p.set_defaults(func=cmd_extensions)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, undefined = args.func(args)
    except UnsupportedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValidationError, FuzzyRankError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    sys.stdout.write(text)
    if undefined and getattr(args, "strict", False):
        return EXIT_UNDEFINED
    return 0


if __name__ == "__main__":
    sys.exit(main())
