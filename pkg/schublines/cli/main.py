"""
Command line of schublines.

    schublines kostka 2 2 1 2 3 [--tableaux]
    schublines verify 1 1 1 1 [--cert out.json]
    schublines sweep --max-n 16 [--jobs 4] [--timeout SECONDS]
    schublines table1 [--max-m 16]
    schublines integral 2 2 1 2 3 [--nodes N] [--rule midpoint]
        [--panel-size P]
    schublines bounds-a2 --m 14
    schublines plotdata --function {F,lambda,product} [--m 8] [--samples S]

Every command takes `--format text|json|csv` (default text) and `-v`/`-vv`.
Exit codes: 0 success, 1 verification or inequality failure, 2 invalid
input. Logs go to stderr. When `SCHUBLINES_CACHE_DIR` is set, exact counts
are memoized in `kostka.jsonl` in that directory across runs.
"""
import argparse
import logging
import sys
from typing import List, Optional

from schublines.cli.output import FORMATS, write_document, write_records
from schublines.cli.serialization import certificate_to_dict, dump_certificate
from schublines.galois import \
    Verifier, a2_table, validate_certificate
from schublines.kostka import as_conditions, enumerate_tableaux, kostka
from schublines.pipelines import sweep
from schublines.spectral import \
    PLOT_FUNCTIONS, QUADRATURE_RULES, a2_bound_integrals, kostka_integral, \
    plot_data
from schublines.utils import \
    CertificateError, KostkaCache, LemmaFailure, ResourceLimit, \
    SchublinesError, configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2

SECONDS_FORMAT = "%.6f"

def cmd_kostka(args, cache: KostkaCache) -> int:
    conditions = as_conditions(args.conditions)
    value = kostka(conditions, cache=cache)
    document = {"problem": list(conditions), "kostka": str(value)}
    text = str(value)
    if args.tableaux:
        tableaux = [str(t) for t in enumerate_tableaux(conditions,
                                                       cap=args.cap)]
        document["tableaux"] = tableaux
        text = "\n".join([text, *tableaux])

    write_document(document, args.format, text)
    return EXIT_OK

def cmd_verify(args, cache: KostkaCache) -> int:
    cert = Verifier(cache=cache).verify(args.conditions)
    try:
        validate_certificate(cert)
    except CertificateError as e:
        print(f"error: certificate rejected: {e}", file=sys.stderr)
        return EXIT_FAILURE

    if args.cert is not None:
        dump_certificate(cert, args.cert)
        logger.info("certificate written to %s", args.cert)

    n_nodes = sum(1 for _ in cert.nodes())
    text = f"certified {cert.problem}: K={cert.kostka_value}, " \
        f"clause {cert.clause.value}, {n_nodes} nodes, depth {cert.depth()}"
    write_document(certificate_to_dict(cert), args.format, text)
    return EXIT_OK

def cmd_sweep(args, cache: KostkaCache) -> int:
    if args.max_n < 2:
        print(f"error: --max-n must be at least 2, got {args.max_n}",
              file=sys.stderr)
        return EXIT_INVALID

    hpc_kwargs = {}
    if args.timeout is not None:
        hpc_kwargs["hpc_timeout"] = args.timeout
    if args.jobs > 1 and cache.path is not None:
        logger.info("--jobs %d: worker processes do not use the count cache "
                    "in %s", args.jobs, cache.path)

    reports = sweep(args.max_n, workers=args.jobs, cache=cache, **hpc_kwargs)
    records = [{
        "n": r.n,
        "problems": r.problems_checked,
        "certified": r.certified,
        "seconds": round(r.elapsed, 6),
    } for r in reports]
    write_records(records, args.format,
                  columns=["n", "problems", "certified", "seconds"],
                  float_format=SECONDS_FORMAT)

    for r in reports:
        for problem in r.failures:
            print(f"error: n={r.n}: {problem} not certified",
                  file=sys.stderr)
    return EXIT_OK if all(r.all_certified for r in reports) else EXIT_FAILURE

def cmd_table1(args, cache: KostkaCache) -> int:
    if args.max_m < 0:
        print(f"error: --max-m must be nonnegative, got {args.max_m}",
              file=sys.stderr)
        return EXIT_INVALID

    columns = ["m", "K(2^m,4)", "K(2^m,1,1)", "difference"]
    records = [dict(zip(columns, row)) for row in a2_table(args.max_m)]
    write_records(records, args.format, columns=columns)
    return EXIT_OK

def cmd_integral(args, cache: KostkaCache) -> int:
    spi_kwargs = {}
    if args.panel_size is not None:
        spi_kwargs["spi_panel_size"] = args.panel_size
    result = kostka_integral(args.conditions, nodes=args.nodes,
                             rule=args.rule, **spi_kwargs)
    document = {
        "problem": list(args.conditions),
        "value": result.value,
        "nodes": result.nodes,
        "exact": str(result.exact),
        "abs_residual": result.abs_residual,
    }
    text = f"value    {result.value:.17g}\n" \
        f"exact    {result.exact}\n" \
        f"residual {result.abs_residual:.3e}\n" \
        f"nodes    {result.nodes}"
    write_document(document, args.format, text)
    return EXIT_OK if result.recovers_exact else EXIT_FAILURE

def cmd_bounds_a2(args, cache: KostkaCache) -> int:
    bounds = a2_bound_integrals(args.m)
    document = {
        "m": args.m,
        "lhs": bounds.lhs,
        "rhs": bounds.rhs,
        "inequality_holds": bounds.inequality_holds,
    }
    text = f"lhs   {bounds.lhs:.17g}\n" \
        f"rhs   {bounds.rhs:.17g}\n" \
        f"holds {bounds.inequality_holds}"
    write_document(document, args.format, text)
    return EXIT_OK if bounds.inequality_holds else EXIT_FAILURE

def cmd_plotdata(args, cache: KostkaCache) -> int:
    frame = plot_data(args.function, m=args.m, samples=args.samples)
    write_records(frame.to_dict(orient="records"), args.format,
                  columns=["theta", "value"])
    return EXIT_OK

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="text",
                        help="Output format (default: text).")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress to stderr; repeat for debug.")

def _add_conditions(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("conditions", type=int, nargs="+",
                        help="Condition codimensions a_1 ... a_m.")

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schublines",
        description="Kostka numbers, Galois group certificates and "
                    "spectral integrals of Schubert problems of lines."
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("kostka", help="Exact Kostka number.")
    _add_conditions(p)
    p.add_argument("--tableaux", action="store_true",
                   help="Also list the tableaux.")
    p.add_argument("--cap", type=int, default=None,
                   help="Largest number of tableaux to enumerate.")
    _add_common(p)
    p.set_defaults(handler=cmd_kostka)

    p = subparsers.add_parser(
        "verify", help="Certify an at least alternating Galois group."
    )
    _add_conditions(p)
    p.add_argument("--cert", default=None,
                   help="Write the certificate JSON to this path.")
    _add_common(p)
    p.set_defaults(handler=cmd_verify)

    p = subparsers.add_parser(
        "sweep", help="Certify every problem in P^n for n <= max-n."
    )
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1,
                   help="Number of worker processes (default: 1). With more "
                        "than one, the count cache is not used.")
    p.add_argument("--timeout", type=float, default=None,
                   help="Seconds to wait for the workers of one dimension "
                        "when --jobs > 1; unanswered problems are reported "
                        "as failures (default: no limit).")
    _add_common(p)
    p.set_defaults(handler=cmd_sweep)

    p = subparsers.add_parser(
        "table1", help="K(2^m,4) against K(2^m,1,1) for m = 0..max-m."
    )
    p.add_argument("--max-m", type=int, default=16)
    _add_common(p)
    p.set_defaults(handler=cmd_table1)

    p = subparsers.add_parser(
        "integral", help="Quadrature of the Kostka integral."
    )
    _add_conditions(p)
    p.add_argument("--nodes", type=int, default=None)
    p.add_argument("--rule", choices=QUADRATURE_RULES, default=None)
    p.add_argument("--panel-size", type=int, default=None,
                   help="Largest number of Gauss-Legendre nodes per panel.")
    _add_common(p)
    p.set_defaults(handler=cmd_integral)

    p = subparsers.add_parser(
        "bounds-a2", help="Integral bounds for the family (2^{m+2})."
    )
    p.add_argument("--m", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=cmd_bounds_a2)

    p = subparsers.add_parser(
        "plotdata", help="Samples of F, lambda_2 or lambda_2^m F."
    )
    p.add_argument("--function", choices=PLOT_FUNCTIONS, required=True)
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--samples", type=int, default=200)
    _add_common(p)
    p.set_defaults(handler=cmd_plotdata)

    return parser

def main(argv: Optional[List[str]]=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    cache = KostkaCache.from_environment()
    try:
        return args.handler(args, cache)
    except (LemmaFailure, CertificateError, ResourceLimit) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except (SchublinesError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        cache.flush()

if __name__ == "__main__":
    sys.exit(main())
