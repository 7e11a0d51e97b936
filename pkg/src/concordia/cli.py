"""Command-line front end.

Inputs are corpus names (optionally joined with '#' for connected sums),
matrix files in the plain-text or JSON formats, or '-' for stdin.
"""
import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import amphicheiral, concordance, covers, gilmer, seifert, signatures
from .errors import ConcordiaError, OracleMismatch, ParseError, SingularAtRoot

EXIT_OK = 0
EXIT_ORACLE = 5


@dataclass(frozen=True)
class KnotRecord:
    name: str
    seifert: seifert.SeifertMatrix
    tags: tuple = field(default_factory=tuple)


CORPUS = {r.name: r for r in (
    KnotRecord("unknot", seifert.UNKNOT, ("slice",)),
    KnotRecord("trefoil_R", seifert.TREFOIL_R, ("torus", "chiral")),
    KnotRecord("trefoil_L", seifert.TREFOIL_L, ("torus", "chiral")),
    KnotRecord("figure-eight", seifert.FIGURE_EIGHT, ("amphicheiral",)),
    KnotRecord("K_J", seifert.K_J, ("algebraically-slice",)),
)}

# structured samples for the certificate commands
SAMPLES = {
    "crossing-sample": {"base": [], "column": [], "b": -1},
    "genus2-sample": {"A": [[0, 2], [1, 0]], "C": [[-1, 1], [0, -1]], "b": [1, 0]},
    "amphicheiral-sample": {
        "A": [[0, 0, 0, 1], [0, 0, -1, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        "T": [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
        "a": [1, 0, 0, 0], "b": 1},
}


# -- input --------------------------------------------------------------------

def _read(source):
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def _is_json(text):
    return text.lstrip()[:1] in ("{", "[")


def load_knot(source):
    if source in CORPUS:
        return CORPUS[source].seifert
    if source != "-" and not os.path.exists(source) and "#" in source:
        parts = [load_knot(s.strip()) for s in source.split("#")]
        return seifert.connected_sum(*parts)
    if source != "-" and not os.path.exists(source):
        raise ParseError(f"no such file or corpus knot: {source}")
    text = _read(source)
    if _is_json(text):
        return seifert.loads_json(text)
    return seifert.parse_text(text, os.path.basename(source))


def _load_object(source, keys):
    if source in SAMPLES:
        obj = SAMPLES[source]
    else:
        if source != "-" and not os.path.exists(source):
            raise ParseError(f"no such file or sample: {source}")
        text = _read(source)
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or any(k not in obj for k in keys):
        raise ParseError(f"expected a JSON object with fields {', '.join(keys)}")
    return obj


def load_triple(source):
    obj = _load_object(source, ("base", "column", "b"))
    return seifert.crossing_triple(obj["base"], obj["column"], obj["b"])


def load_pair(source):
    obj = _load_object(source, ("A", "C", "b"))
    return seifert.genus2_mutant(obj["A"], obj["C"], obj["b"])


def load_amphicheiral(source):
    obj = _load_object(source, ("A", "T", "a", "b"))
    return seifert.AmphicheiralData.make(obj["A"], obj["T"], obj["a"], obj["b"])


def _parse_fraction(text):
    try:
        a, b = text.split("/")
        return int(a), int(b)
    except ValueError:
        raise ParseError(f"expected a/b, got {text!r}") from None


# -- JSON schemas -------------------------------------------------------------

_STR = {"type": "string"}
_INT = {"type": "integer"}
_STEP = {
    "type": "object",
    "required": ["kind", "data"],
    "properties": {"kind": {"enum": ["pivot", "swap", "norm-rescale", "cancel"]},
                   "data": {"type": "object"}},
}
_CERT = {
    "type": "object",
    "required": ["kind", "verdict", "checks", "samples", "provenance"],
    "properties": {
        "kind": _STR,
        "verdict": {"enum": ["verified", "refuted", "undecided"]},
        "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "samples": {"type": "array", "items": {"type": "array", "items": _INT,
                                               "minItems": 2, "maxItems": 2}},
        "provenance": {"type": "array", "items": _STEP},
    },
}

SCHEMAS = {
    "alexander": {"type": "object", "required": ["input", "alexander"],
                  "properties": {"input": _STR, "alexander": _STR}},
    "conway": {"type": "object", "required": ["input", "conway", "coefficients"],
               "properties": {"input": _STR, "conway": _STR,
                              "coefficients": {"type": "object",
                                               "additionalProperties": _INT}}},
    "signature": {
        "type": "object", "required": ["input", "samples"],
        "properties": {"input": _STR, "samples": {"type": "array", "items": {
            "type": "object", "required": ["a", "b", "value"],
            "properties": {"a": _INT, "b": _INT, "value": _INT}}}}},
    "cover": {
        "type": "object",
        "required": ["q", "p", "snf", "order", "eigenvalues", "metabolizer_count"],
        "properties": {
            "q": _INT, "p": {"type": ["integer", "null"]},
            "snf": {"type": "array", "items": _INT},
            "order": {"oneOf": [_INT, {"const": covers.INFINITE}]},
            "eigenvalues": {"type": ["array", "null"], "items": _INT},
            "metabolizer_count": {"type": ["integer", "null"]},
        }},
    "witt-diff": _CERT,
    "mutate-genus2": _CERT,
    "amphicheiral": _CERT,
    "genus-gap": {
        "type": "object", "required": ["n", "s7", "certificates"],
        "properties": {"n": _INT, "s7": _INT, "certificates": {"type": "array", "items": {
            "type": "object",
            "required": ["n", "m", "s7", "records", "asserted_upper_bound"],
            "properties": {
                "n": _INT, "m": _INT, "s7": _INT,
                "records": {"type": "array", "items": {
                    "type": "object",
                    "required": ["k", "dimD_min", "cg_min", "bound", "contradiction"],
                    "properties": {"k": _INT, "dimD_min": _INT, "cg_min": _INT,
                                   "bound": _INT, "contradiction": {"type": "boolean"}}}},
                "asserted_upper_bound": {"type": "object", "required": ["value", "source"],
                                         "properties": {"value": _INT, "source": _STR}},
            }}}}},
    "selftest": {
        "type": "object", "required": ["seed", "samples", "results"],
        "properties": {"seed": _INT, "samples": _INT, "results": {
            "type": "object", "additionalProperties": {
                "type": "object", "required": ["cases", "failures"],
                "properties": {"cases": _INT, "failures": _INT}}}}},
}


# -- rendering ----------------------------------------------------------------

def _render_certificate(report):
    lines = [f"{report['kind']}: {report['verdict']}"]
    for key in ("delta_plus", "delta_minus", "c_of_t", "alpha", "F", "G"):
        if report.get(key) is not None:
            lines.append(f"  {key} = {report[key]}")
    if "claimed_class" in report:
        lines.append("  claimed class = <" + ", ".join(report["claimed_class"]) + ">")
    for name, ok in report["checks"].items():
        lines.append(f"  [{'ok' if ok else 'FAIL'}] {name}")
    if report["provenance"]:
        lines.append("  reduction:")
        for step in report["provenance"]:
            data = ", ".join(f"{k}={v}" for k, v in step["data"].items())
            lines.append(f"    {step['kind']}: {data}")
    lines.append(f"  signatures compared at {len(report['samples'])} samples")
    return "\n".join(lines)


def _emit(args, report, text):
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print(text)


# -- commands -----------------------------------------------------------------

def cmd_alexander(args):
    V = load_knot(args.input)
    delta = str(seifert.alexander_polynomial(V))
    _emit(args, {"input": args.input, "alexander": delta}, delta)


def cmd_conway(args):
    V = load_knot(args.input)
    c = seifert.conway_polynomial(V)
    coeffs = {str(k): int(v) for k, v in sorted(c.coeffs.items())}
    _emit(args, {"input": args.input, "conway": str(c), "coefficients": coeffs}, str(c))


def cmd_signature(args):
    V = load_knot(args.input)
    if args.at is not None:
        a, b = _parse_fraction(args.at)
        samples = [signatures.tristram_levine(V, a, b, args.precision)]
        text = str(samples[0].value)
    else:
        samples = signatures.signature_function(V, args.profile, args.precision)
        text = signatures.to_csv(samples).rstrip("\n")
    report = {"input": args.input,
              "samples": [{"a": s.a, "b": s.b, "value": s.value} for s in samples]}
    _emit(args, report, text)


def cmd_cover(args):
    V = load_knot(args.input)
    report = covers.cover_report(V, args.q, args.p)
    text = [f"H_1(M_{args.q}) invariant factors: {report['snf']}", f"order: {report['order']}"]
    if args.p is not None:
        text.append(f"deck eigenvalues mod {args.p}: {report['eigenvalues']}")
        if report["metabolizer_count"] is not None:
            text.append(f"linking-form metabolizers: {report['metabolizer_count']}")
    _emit(args, report, "\n".join(text))


def cmd_witt_diff(args):
    cert = concordance.crossing_difference(load_triple(args.input), args.samples, args.precision)
    report = cert.to_json()
    _emit(args, report, _render_certificate(report))
    return 0 if cert.verdict == concordance.VERIFIED else EXIT_ORACLE


def cmd_mutate_genus2(args):
    rep = concordance.mutation_invariance_genus2(load_pair(args.input), args.samples, args.precision)
    report = rep.to_json()
    _emit(args, report, _render_certificate(report))
    return 0 if rep.verified else EXIT_ORACLE


def cmd_amphicheiral(args):
    cert = amphicheiral.long_certificate(load_amphicheiral(args.input), args.samples, args.precision)
    report = cert.to_json()
    _emit(args, report, _render_certificate(report))
    return 0 if cert.verified else EXIT_ORACLE


def cmd_genus_gap(args):
    result = gilmer.genus_gap_certify(args.n, load_knot(args.input))
    report = result.to_json()
    lines = [f"s_7(J) = {result.s7} > 6n = {6 * args.n}"]
    for c in result.certificates:
        for r in c.per_k_records:
            lines.append(f"  m={c.m} k={r.k}: dim D >= {r.dimD_min}, min |CG| = {r.cg_min} "
                         f"> {r.bound}: {'contradiction' if r.contradiction else 'no contradiction'}")
        lines.append(f"  g_4({c.m} L_J) >= {c.lower_bound}; upper bound {c.m} asserted, not computed")
    _emit(args, report, "\n".join(lines))


def selftest(samples=50, seed=0, cap=None):
    """Randomized property checks; returns {name: {cases, failures}}."""
    rng = random.Random(seed)
    results = {}

    def record(name, ok):
        r = results.setdefault(name, {"cases": 0, "failures": 0})
        r["cases"] += 1
        r["failures"] += 0 if ok else 1

    points = [(1, 2), (1, 3), (2, 5), (3, 7)]
    for _ in range(samples):
        t = seifert.random_triple(rng)
        record("skein", concordance.skein_verify(t))
        A = seifert.random_seifert(rng, 2 * rng.randint(0, 2))
        a = [rng.randint(-2, 2) for _ in range(A.rank)]
        record("s-equivalence", concordance.s_equivalence_invariance(A, a, rng.randint(-2, 2)))
        V = seifert.random_seifert(rng, 2 * rng.randint(1, 2))
        W = seifert.random_seifert(rng, 2)
        for q in (2, 3):
            try:
                covers.cover_homology(V, q)
                record("cover-order", True)
            except OracleMismatch:
                record("cover-order", False)
        for a_, b_ in points:
            try:
                s = signatures.sigma(V, a_, b_, cap)
                record("mirror", signatures.sigma(seifert.mirror(V), a_, b_, cap) == -s)
                sw = signatures.sigma(W, a_, b_, cap)
                record("additivity",
                       signatures.sigma(seifert.connected_sum(V, W), a_, b_, cap) == s + sw)
            except SingularAtRoot:
                continue
    return results


def cmd_selftest(args):
    results = selftest(args.samples, args.seed, args.precision)
    report = {"seed": args.seed, "samples": args.samples, "results": results}
    lines = [f"{'PASS' if r['failures'] == 0 else 'FAIL'} {name}: "
             f"{r['cases'] - r['failures']}/{r['cases']}" for name, r in results.items()]
    _emit(args, report, "\n".join(lines))
    return 0 if all(r["failures"] == 0 for r in results.values()) else EXIT_ORACLE


# -- parser -------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--precision", type=int, default=None,
                        help="bit cap for certified signs (default: CONCORDIA_PRECISION_CAP or 4096)")
    common.add_argument("--samples", type=int, default=concordance.DEFAULT_SAMPLES,
                        help="signature samples for certificates and selftest cases")
    common.add_argument("--seed", type=int, default=0, help="random seed for selftest")

    parser = argparse.ArgumentParser(prog="concordia", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, input_help="corpus name, matrix file, or -"):
        p = sub.add_parser(name, parents=[common], help=help_)
        if input_help:
            p.add_argument("input", help=input_help)
        p.set_defaults(func=func)
        return p

    add("alexander", cmd_alexander, "normalized Alexander polynomial")
    add("conway", cmd_conway, "Conway polynomial")
    p = add("signature", cmd_signature, "Tristram-Levine signatures")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--at", help="sample point a/b, omega = exp(2 pi i a/b)")
    g.add_argument("--profile", type=int, metavar="CAP", help="all a/b with b <= CAP, as CSV")
    p = add("cover", cmd_cover, "homology of the q-fold branched cover")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, default=None, help="odd prime for the deck action")
    add("witt-diff", cmd_witt_diff, "crossing-change Witt difference certificate",
        "triple JSON file or crossing-sample")
    add("mutate-genus2", cmd_mutate_genus2, "genus-2 mutation invariance report",
        "pair JSON file or genus2-sample")
    add("amphicheiral", cmd_amphicheiral, "paired crossing change sliceness certificate",
        "data JSON file or amphicheiral-sample")
    p = add("genus-gap", cmd_genus_gap, "4-genus lower bounds for m L_J", "J: corpus name or file")
    p.add_argument("--n", type=int, required=True)
    add("selftest", cmd_selftest, "randomized property checks", None)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except ConcordiaError as exc:
        print(f"concordia {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"concordia {args.command}: {exc}", file=sys.stderr)
        return ParseError.exit_code
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
