"""``conicmod`` command line tool.

Every subcommand emits one or more records ``{command, inputs, outputs}``.
Output formats:

* ``json``  newline-delimited objects; complex values as ``{"re": .., "im": ..}``
* ``csv``   header row, comma separated, complex values split into ``_re``/``_im``
* ``table`` aligned columns for reading

Exit status is 0 on success, 2 on a domain error, 1 on anything else.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Iterator

from . import conic, gausssum, group, indexmap, symbols
from .errors import DomainError
from .modarith import is_prime


@dataclass
class OutputRecord:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    outputs: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        def enc(v):
            if isinstance(v, complex):
                return {"re": v.real, "im": v.imag}
            return v

        return json.dumps(
            {
                "command": self.command,
                "inputs": {k: enc(v) for k, v in self.inputs.items()},
                "outputs": {k: enc(v) for k, v in self.outputs.items()},
            }
        )

    def flat(self) -> dict[str, Any]:
        row: dict[str, Any] = {}
        for k, v in {**self.inputs, **self.outputs}.items():
            if isinstance(v, complex):
                row[f"{k}_re"] = v.real
                row[f"{k}_im"] = v.imag
            else:
                row[k] = v
        return row


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_records(records: Iterable[OutputRecord], fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            out.write(rec.to_json() + "\n")
        return
    rows = [rec.flat() for rec in records]
    if not rows:
        return
    header = list(rows[0])
    for row in rows[1:]:
        header += [k for k in row if k not in header]
    if fmt == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_cell(row.get(k)) for k in header) + "\n")
        return
    cells = [[_cell(row.get(k)) for k in header] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(header)]
    out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for r in cells:
        out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


# -- commands ---------------------------------------------------------------


def cmd_symbol(args) -> Iterator[OutputRecord]:
    yield OutputRecord(
        "symbol", {"a": args.a, "n": args.n}, {"value": symbols.kronecker(args.a, args.n)}
    )


def _count(a: int, p: int) -> conic.CountResult:
    if p == 2:
        conic.Curve(a, p)
        return conic.CountResult.from_count(2, conic.P2_SOLUTION_COUNT)
    return conic.count_formula(conic.Curve(a, p))


def cmd_count(args) -> Iterator[OutputRecord]:
    res = _count(args.a, args.p)
    yield OutputRecord("count", {"a": args.a, "p": args.p}, {"N": res.N, "b": res.b})


def _scan_row(a: int, p: int) -> OutputRecord:
    res = conic.count_formula(conic.Curve(a, p))
    return OutputRecord(
        "scan",
        {"a": a, "p": p},
        {"N": res.N, "b": res.b, "symbol": symbols.kronecker(a, p)},
    )


def cmd_scan(args) -> Iterator[OutputRecord]:
    if args.a == 0:
        raise DomainError("a must be nonzero")
    primes = [p for p in range(3, args.p_max + 1, 2) if is_prime(p)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            # map preserves input order, so rows come out by ascending p
            yield from pool.map(_scan_row, [args.a] * len(primes), primes)
    else:
        for p in primes:
            yield _scan_row(args.a, p)


def cmd_solutions(args) -> Iterator[OutputRecord]:
    for x, y in conic.enumerate_solutions(conic.Curve(args.a, args.p)):
        yield OutputRecord("solutions", {"a": args.a, "p": args.p}, {"x": x, "y": y})


def cmd_group(args) -> Iterator[OutputRecord]:
    c = conic.Curve(args.a, args.p)
    cert = group.verify_cyclic(c)
    emb = group.make_embedding(c)
    for k, P in enumerate(cert.chain, start=1):
        z = group.z_embed(P, emb)
        yield OutputRecord(
            "group",
            {"a": args.a, "p": args.p},
            {"N": cert.N, "k": k, "x": P.x, "y": P.y, "z_u": z.u, "z_v": z.v, "z_d": z.d},
        )


def cmd_gauss(args) -> Iterator[OutputRecord]:
    yield OutputRecord(
        "gauss",
        {"p": args.p},
        {
            "character": gausssum.gauss_sum_character(args.p),
            "quadratic": gausssum.gauss_sum_quadratic(args.p),
            "closed_form": gausssum.closed_form_gp(args.p),
        },
    )


def cmd_fbar(args) -> Iterator[OutputRecord]:
    res = gausssum.fbar(args.a)
    outputs: dict[str, Any] = {
        "nome": res.nome,
        "period": res.period,
        "terms": res.render(),
        "value": res.value,
        "closed_form": res.closed_form,
    }
    if args.a % 4 == 3 and abs(args.a) >= 3:
        outputs["reindexed"] = gausssum.fbar_via_index_map(args.a)
    yield OutputRecord("fbar", {"a": args.a}, outputs)


def cmd_quadexp(args) -> Iterator[OutputRecord]:
    yield OutputRecord("quadexp", {"a": args.a}, {"value": gausssum.quad_exp_sum(args.a)})


def cmd_theta(args) -> Iterator[OutputRecord]:
    g = gausssum.theta_partial(args.tau_im, args.tau_re, args.terms)
    th = gausssum.theta_char_partial(args.tau_im, args.tau_re, args.terms)
    yield OutputRecord(
        "theta",
        {"tau_re": args.tau_re, "tau_im": args.tau_im, "terms": args.terms},
        {"G": g, "theta": th},
    )


def cmd_indexmap(args) -> Iterator[OutputRecord]:
    for t in indexmap.index_table(args.a):
        yield OutputRecord("indexmap", {"a": args.a}, {"m": t.m, "ell": t.ell, "n": t.n})


def cmd_conductor(args) -> Iterator[OutputRecord]:
    try:
        lvl = conic.level(args.a)
    except DomainError:
        lvl = None
    yield OutputRecord(
        "conductor",
        {"a": args.a},
        {
            "conductor": conic.conductor(args.a),
            "level": lvl,
            "kronecker_period": symbols.kronecker_period(args.a),
        },
    )


def cmd_partial(args) -> Iterator[OutputRecord]:
    tau = Fraction(1, abs(args.a))
    for k, v in enumerate(gausssum.partial_f(args.a, tau, args.periods)):
        yield OutputRecord("partial", {"a": args.a}, {"block": k, "value": v})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS, help="write here instead of stdout")

    parser = argparse.ArgumentParser(prog="conicmod", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("table", "csv", "json"), default="table")
    parser.add_argument("--output", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("symbol", cmd_symbol, "Kronecker symbol (a/n)")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = add("count", cmd_count, "N(p) and b(p) for y^2 = a x^2 + 1")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = add("scan", cmd_scan, "N(p), b(p), (a/p) for every odd prime p <= p-max")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("solutions", cmd_solutions, "list the points of the curve")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = add("group", cmd_group, "generator chain and Z-embedding table")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = add("gauss", cmd_gauss, "Gaussian sum G_p both ways")
    sp.add_argument("--p", type=int, required=True)

    sp = add("fbar", cmd_fbar, "one period of the generalized Gaussian sum at tau = 1/|a|")
    sp.add_argument("--a", type=int, required=True)

    sp = add("quadexp", cmd_quadexp, "quadratic exponential sum for a = 2 (mod 4)")
    sp.add_argument("--a", type=int, required=True)

    sp = add("theta", cmd_theta, "truncated G(tau) and theta series")
    sp.add_argument("--tau-re", type=float, default=0.0)
    sp.add_argument("--tau-im", type=float, required=True)
    sp.add_argument("--terms", type=int, default=50)

    sp = add("indexmap", cmd_indexmap, "the n <-> m table for odd a")
    sp.add_argument("--a", type=int, required=True)

    sp = add("conductor", cmd_conductor, "conductor, level and symbol period of a")
    sp.add_argument("--a", type=int, required=True)

    sp = add("partial", cmd_partial, "block sums of the truncated series at tau = 1/|a|")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--periods", type=int, default=3)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        records = list(args.func(args))
    except DomainError as exc:
        print(f"conicmod: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"conicmod: internal error: {exc!r}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", newline="") as fh:
            write_records(records, args.format, fh)
    else:
        write_records(records, args.format, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
