"""salemtrace command line: generate, certify, sieve, bound reports and tables.

Exit codes: 0 success, 1 verification or sieve failure, 2 inconclusive,
3 usage or I/O error.  Diagnostics go to stderr; stdout is deterministic.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from mpmath import libmp

from . import bounds as _bounds
from .certify import certify_pisot, certify_salem
from .construct import family, generate_pisot, generate_salem_candidate
from .cyclo import sieve_gcd_test, strip_cyclotomic
from .errors import Inconclusive, ParseError, SalemTraceError
from .poly import IntPolynomial

OK, FAILED, INCONCLUSIVE, USAGE = 0, 1, 2, 3
KINDS = ("salem-candidate", "salem", "pisot", "raw")
_INT = re.compile(r"[+-]?\d+\Z")


class UsageError(Exception):
    pass


# ------------------------------------------------------------ documents
@dataclass
class PolyDocument:
    kind: str
    trace: int | None
    degree: int
    coeffs: list
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_poly(cls, kind, poly, metadata=None):
        trace = poly.trace() if poly.is_monic() else None
        return cls(kind, trace, poly.degree, [str(c) for c in poly.coeffs], metadata or {})

    @property
    def polynomial(self):
        return IntPolynomial([int(c) for c in self.coeffs])


def encode_poly(doc):
    """Compact JSON bytes, keys in a fixed order, coefficients as strings."""
    obj = {"kind": doc.kind, "trace": doc.trace, "degree": doc.degree, "coeffs": list(doc.coeffs)}
    if doc.metadata:
        obj["metadata"] = doc.metadata
    return (json.dumps(obj, separators=(",", ":")) + "\n").encode()


def _locate(text, needle):
    pos = text.find(needle)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1)


def decode_poly(data):
    """Parse bytes produced by encode_poly; raises ParseError with line and offset."""
    text = data.decode() if isinstance(data, (bytes, bytearray)) else data
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno - 1) from None
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object", 1, 0)
    coeffs = obj.get("coeffs")
    if not isinstance(coeffs, list) or not coeffs:
        raise ParseError("coeffs must be a nonempty list", *_locate(text, '"coeffs"'))
    for c in coeffs:
        if not isinstance(c, str) or not _INT.match(c):
            raise ParseError(f"coefficient {c!r} is not a base-10 integer string", *_locate(text, json.dumps(c)))
    kind = obj.get("kind", "raw")
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", *_locate(text, '"kind"'))
    degree = obj.get("degree", len(coeffs) - 1)
    if degree != len(coeffs) - 1:
        raise ParseError("degree does not match the number of coefficients", *_locate(text, '"degree"'))
    trace = obj.get("trace")
    if trace is not None and not isinstance(trace, int):
        raise ParseError("trace must be an integer", *_locate(text, '"trace"'))
    metadata = obj.get("metadata", {})
    return PolyDocument(kind, trace, degree, list(coeffs), metadata)


def read_polynomials(path):
    """Polynomials from a JSON document or from the line format (blank and # lines skipped)."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if text.lstrip().startswith("{"):
        return [decode_poly(text).polynomial]
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip() and not line.lstrip().startswith("#"):
            out.append(IntPolynomial.from_text(line, lineno))
    if not out:
        raise ParseError("no polynomial found", 1, 0)
    return out


# ------------------------------------------------------------ formatting
def _decimal(x, digits):
    """x truncated toward -oo to ``digits`` decimal places."""
    scaled = (x.numerator * 10**digits) // x.denominator
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def _interval_text(x, dps=20):
    a, b = x._mpi_
    return [libmp.to_str(a, dps), libmp.to_str(b, dps)]


def _value_digits(bits):
    return max(1, int(bits * 0.30103) - 1)


def _salem_summary(cert, bits):
    out = cert.summary()
    if cert.value is not None:
        out["value_decimal"] = _decimal(cert.value[0], _value_digits(bits))
    return out


def _pisot_summary(cert, bits):
    out = cert.summary()
    if cert.dominant is not None:
        out["value_decimal"] = _decimal(cert.dominant[0], _value_digits(bits))
    return out


_VERDICT_CODE = {
    "Salem": OK,
    "Pisot": OK,
    "ReciprocalPisot": OK,
    "NotSalem": FAILED,
    "NotPisot": FAILED,
    "Inconclusive": INCONCLUSIVE,
}


def _worst(codes):
    codes = list(codes)
    if FAILED in codes:
        return FAILED
    if INCONCLUSIVE in codes:
        return INCONCLUSIVE
    return OK


def _certify(poly, kind, bits):
    if kind == "auto":
        kind = "salem" if poly.is_reciprocal() else "pisot"
    if kind == "salem":
        cert = certify_salem(poly, bits)
        if cert.verdict == "ReciprocalPisot":
            print("note: reciprocal Pisot verdict (quadratic case)", file=sys.stderr)
        return _salem_summary(cert, bits), _VERDICT_CODE[cert.verdict]
    cert = certify_pisot(poly, bits)
    return _pisot_summary(cert, bits), _VERDICT_CODE[cert.verdict]


# ------------------------------------------------------------ commands
def _emit_doc(args, doc):
    if args.format == "json":
        return encode_poly(doc).decode()
    return doc.polynomial.to_text() + "\n"


def _cmd_gen(args):
    bits = args.precision
    if args.what == "salem":
        rec = generate_salem_candidate(args.trace, args.policy)
        if args.policy == "killer":
            return _killer_text(args, rec.exponents.report, extra={"trace": rec.trace}), OK
        poly = rec.reduced
        meta = {"exponents": list(rec.exponents), "predicted_degree": rec.predicted_degree}
        kind = "salem-candidate"
    else:
        rec = generate_pisot(args.trace)
        poly = rec.reduced
        meta = {
            "exponents": list(rec.exponents),
            "raw_degree": rec.raw.degree,
            "stripped_factors": [[1, rec.root_one_multiplicity]],
        }
        kind = "pisot"
    code = OK
    if args.what == "salem" and args.sieve:
        res = sieve_gcd_test(poly)
        meta["sieve"] = "pass" if res.passed else "fail"
        if not res.passed:
            meta["stripped_factors"] = strip_cyclotomic(poly).stripped_factors
            print("sieve failed: cyclotomic factor present", file=sys.stderr)
            code = FAILED
    if args.certify:
        summary, c = _certify(poly, "salem" if args.what == "salem" else "pisot", bits)
        meta["certificate"] = summary
        if c == OK and args.what == "salem":
            kind = "salem"
        if c != OK:
            print(f"certification: {summary['verdict']}", file=sys.stderr)
        code = _worst([code, c])
    return _emit_doc(args, PolyDocument.from_poly(kind, poly, meta)), code


def _cmd_family(args):
    poly = family(args.name, args.n)
    meta = {"family": args.name}
    if args.n is not None:
        meta["n"] = args.n
    code = OK
    if args.certify:
        summary, code = _certify(poly, "salem", args.precision)
        meta["certificate"] = summary
    return _emit_doc(args, PolyDocument.from_poly("salem", poly, meta)), code


def _cmd_verify(args):
    results = []
    codes = []
    for poly in read_polynomials(args.file):
        summary, code = _certify(poly, args.kind, args.precision)
        results.append(summary)
        codes.append(code)
    if args.format == "json":
        body = results[0] if len(results) == 1 else results
        text = json.dumps(body, separators=(",", ":")) + "\n"
    else:
        lines = []
        for r in results:
            parts = [r["verdict"], f"degree={r['degree']}", f"trace={r['trace']}"]
            if "value_decimal" in r:
                parts.append(f"value={r['value_decimal']}")
            lines.append(" ".join(parts))
        text = "\n".join(lines) + "\n"
    return text, _worst(codes)


def _cmd_sieve(args):
    results = []
    codes = []
    for poly in read_polynomials(args.file):
        res = sieve_gcd_test(poly)
        entry = {"degree": poly.degree, "passed": res.passed, "gcd": [str(c) for c in res.witness_gcd.coeffs]}
        if not res.passed:
            entry["stripped_factors"] = [list(f) for f in strip_cyclotomic(poly).stripped_factors]
        results.append(entry)
        codes.append(OK if res.passed else FAILED)
    if args.format == "json":
        body = results[0] if len(results) == 1 else results
        text = json.dumps(body, separators=(",", ":")) + "\n"
    else:
        text = "".join(
            "pass\n" if r["passed"] else "fail " + " ".join(f"Phi_{d}^{m}" for d, m in r["stripped_factors"]) + "\n"
            for r in results
        )
    return text, _worst(codes)


def _killer_text(args, report, extra=None):
    obj = dict(extra or {})
    obj.update(
        {
            "policy": "killer",
            "n": report.n,
            "N": report.N,
            "D_squared": report.D_squared,
            "M": _interval_text(report.M),
            "M_floor": report.M_floor,
            "prime_ceiling": _interval_text(report.prime_ceiling),
            "log_K_mode": report.log_K_mode,
            "log_K": _interval_text(report.log_K),
            "log_K_linear_bound": _interval_text(report.log_K_linear_bound),
            "log_K_cap": _interval_text(report.log_K_cap),
            "loglog_K": _interval_text(report.loglog_K),
            "loglog_K_bound": _interval_text(report.loglog_K_bound),
            "checks": report.checks(),
            "exponents": "k1 = K; k2..kn = the smallest n-1 primes not dividing K",
        }
    )
    return _dump(args, obj)


def _dump(args, obj):
    if args.format == "json":
        return json.dumps(obj, separators=(",", ":")) + "\n"
    return "".join(f"{k}: {v}\n" for k, v in obj.items())


def _cmd_bounds(args):
    if args.what == "killer":
        if args.n is None:
            raise UsageError("bounds killer needs --n")
        return _killer_text(args, _bounds.killer_exponent_report(args.n)), OK
    if args.trace is None:
        raise UsageError(f"bounds {args.what} needs --trace")
    T = args.trace
    if args.what == "salem":
        b = _bounds.salem_degree_bounds(T)
        obj = {
            "trace": -T,
            "constructed_degree": b.constructed_degree,
            "construction_loglog": _interval_text(b.construction_loglog),
            "theoretical_loglog": _interval_text(b.theoretical_loglog),
            "chain_holds": b.chain_holds,
        }
        if T >= 2:
            obj["min_degree"] = _bounds.min_salem_degree(T)
            obj["constructed_meets_min_degree"] = b.constructed_degree >= obj["min_degree"]
        code = OK if b.chain_holds else FAILED
    else:
        obj = {"trace": -T, "degree_bound": _bounds.pisot_degree_bound(T)}
        code = OK
    return _dump(args, obj), code


def _table_row(job):
    kind, T, bits = job
    if kind == "salem":
        poly = generate_salem_candidate(T).reduced
        cert = certify_salem(poly, bits)
        passed = cert.sieve.passed
        value = cert.value[0] if cert.value else None
    else:
        poly = generate_pisot(T).reduced
        cert = certify_pisot(poly, bits)
        passed = cert.verdict == "Pisot"
        value = cert.dominant[0] if cert.dominant else None
    return -T, poly.degree, passed, None if value is None else _decimal(value, 12)


def _cmd_table(args):
    jobs = [(args.kind, T, args.precision) for T in range(args.max_trace + 1)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_table_row, jobs))
    else:
        rows = [_table_row(j) for j in jobs]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["trace", "degree", "sieve", "value"])
    for trace, degree, passed, value in rows:
        w.writerow([trace, degree, "pass" if passed else "fail", value or ""])
    return buf.getvalue(), OK if all(r[2] for r in rows) else FAILED


# ------------------------------------------------------------ parser
class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--precision", type=int, default=64, metavar="BITS")
    common.add_argument("--timing", action="store_true", help="print elapsed time to stderr")

    p = _Parser(prog="salemtrace", description="Salem and Pisot numbers of prescribed trace")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    gen = sub.add_parser("gen", parents=[common], help="run a generator")
    gen.add_argument("what", choices=("salem", "pisot"))
    gen.add_argument("--trace", type=_nonneg, required=True, metavar="T", help="target trace is -T")
    gen.add_argument("--policy", choices=("first-primes", "killer"), default="first-primes")
    gen.add_argument("--sieve", action="store_true")
    gen.add_argument("--certify", action="store_true")
    gen.set_defaults(func=_cmd_gen)

    fam = sub.add_parser("family", parents=[common], help="a named Salem polynomial")
    fam.add_argument("name", choices=("quartic", "sextic-zero", "lehmer", "degree8"))
    fam.add_argument("--n", type=int)
    fam.add_argument("--certify", action="store_true")
    fam.set_defaults(func=_cmd_family)

    ver = sub.add_parser("verify", parents=[common], help="certify polynomials from a file")
    ver.add_argument("file")
    ver.add_argument("--kind", choices=("salem", "pisot", "auto"), default="auto")
    ver.set_defaults(func=_cmd_verify)

    sv = sub.add_parser("sieve", parents=[common], help="cyclotomic gcd sieve on a file")
    sv.add_argument("file")
    sv.set_defaults(func=_cmd_sieve)

    bd = sub.add_parser("bounds", parents=[common], help="degree and exponent bounds")
    bd.add_argument("what", choices=("salem", "pisot", "killer"))
    bd.add_argument("--trace", type=_nonneg, metavar="T")
    bd.add_argument("--n", type=int)
    bd.set_defaults(func=_cmd_bounds)

    tb = sub.add_parser("table", parents=[common], help="CSV table over traces 0..-T")
    tb.add_argument("--kind", choices=("salem", "pisot"), default="salem")
    tb.add_argument("--max-trace", type=_nonneg, required=True, metavar="T")
    tb.add_argument("--jobs", type=int, default=1)
    tb.set_defaults(func=_cmd_table)
    return p


def run(argv):
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        if args.precision < 1:
            raise UsageError("--precision must be positive")
        text, code = args.func(args)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
    except UsageError as exc:
        print(f"salemtrace: {exc}", file=sys.stderr)
        return USAGE
    except ParseError as exc:
        print(f"salemtrace: parse error: {exc}", file=sys.stderr)
        return USAGE
    except Inconclusive as exc:
        print(f"salemtrace: inconclusive: {exc}", file=sys.stderr)
        return INCONCLUSIVE
    except OSError as exc:
        print(f"salemtrace: {exc}", file=sys.stderr)
        return USAGE
    except SalemTraceError as exc:
        print(f"salemtrace: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return code


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)
