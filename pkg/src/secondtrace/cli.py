"""Command line interface.

Output is one ``key=value`` per line (or a JSON object with ``--json``).
Exit codes: 0 ok, 1 a verification failed, 2 malformed input or singular
form, 3 unsupported field, 4 inseparable (or, with ``--require-field``,
reducible) modulus, 5 undecided answer.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import extensions as ext
from .algebraicity import (
    UNKNOWN, enumerate_corpus, is_2algebraic, verify_thm1, verify_thm2,
    witness_hyperbolic_quartic, witness_hyperbolic_radical,
)
from .artinschreier import pmember
from .errors import (
    InseparableError, ParseError, ReducibleError, SingularFormError,
    UncertifiedError, UnsupportedFieldError,
)
from .fields import parse_element, parse_field, parse_poly
from .quadforms import trace_normal_form, witt_decompose
from .quadspace import QuadSpace

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_INSEPARABLE, EXIT_UNKNOWN = 0, 1, 2, 3, 4, 5


class _Exit(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _text(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    return str(v)


def _vec(v):
    return "(" + ",".join(str(x) for x in v) + ")"


class Emitter:
    def __init__(self, out, as_json):
        self.out = out
        self.as_json = as_json
        self.record = {}

    def put(self, key, value):
        self.record[key] = value

    def flush(self):
        if self.as_json:
            data = {k: (v if isinstance(v, (bool, int, list)) or v is None else str(v))
                    for k, v in self.record.items()}
            self.out.write(json.dumps(data, ensure_ascii=False) + "\n")
        else:
            for k, v in self.record.items():
                if isinstance(v, list):
                    v = ";".join(map(str, v))
                self.out.write(f"{k}={_text(v)}\n")
        self.record = {}

    def line(self, record):
        """One record on a single line (streamed tables)."""
        if self.as_json:
            self.out.write(json.dumps({k: (v if isinstance(v, (bool, int)) or v is None else str(v))
                                       for k, v in record.items()}, ensure_ascii=False) + "\n")
        else:
            self.out.write(" ".join(f"{k}={_text(v)}" for k, v in record.items()) + "\n")
        self.out.flush()


def _report_fields(em, report):
    em.put("dim", report.dim)
    em.put("witt_index", report.witt_index)
    em.put("hyperbolic", report.hyperbolic)
    em.put("certified", report.certified)
    em.put("residue", "none" if report.residue is None
           else (str(report.residue) if not isinstance(report.residue, QuadSpace) else report.residue.matrix_text()))
    em.put("arf", report.arf)


def _extension(args):
    F = parse_field(args.field)
    p = parse_poly(F, args.ext, "x")
    E = ext.ExtensionAlgebra(F, p)
    if getattr(args, "require_field", False) and E.irreducible is not True:
        raise ReducibleError(f"{p} is not certified irreducible over {F.describe()}")
    return F, E


def cmd_trace_form(args, em):
    F, E = _extension(args)
    q = ext.bm_form(E) if args.bm else ext.second_trace_form(E)
    em.put("command", "trace-form")
    em.put("field", F.describe())
    em.put("ext", E.modulus)
    em.put("variant", "bm" if args.bm else "revoy")
    em.put("irreducible", E.irreducible)
    em.put("matrix", q.matrix_text())
    em.put("gram", ";".join(",".join(str(x) for x in row) for row in q.gram()))
    report = witt_decompose(q)
    _report_fields(em, report)
    nf = trace_normal_form(E)
    em.put("normal_form", f"{nf.planes - 1}H+[1,{nf.a}]")
    em.put("normal_form_a", nf.a)
    if args.audit:
        for i, (e, f) in enumerate(nf.pairs, 1):
            em.put(f"audit.normal_pair.{i}", f"{e},{f}")
        for i, (u, w) in enumerate(report.hyperbolic_pairs, 1):
            em.put(f"audit.hyperbolic_pair.{i}", f"{_vec(u)},{_vec(w)}")
        for i, v in enumerate(q.basis or [], 1):
            em.put(f"audit.basis.{i}", v if not isinstance(v, tuple) else f"({v[0]},{v[1]})")
    em.flush()
    return EXIT_OK


def cmd_is_2algebraic(args, em):
    F = parse_field(args.field)
    q = QuadSpace.parse(F, args.form)
    ans = is_2algebraic(q)
    em.put("command", "is-2algebraic")
    em.put("field", F.describe())
    em.put("form", q.matrix_text())
    em.put("answer", ans.answer)
    em.put("witness", ans.witness)
    em.put("reason", ans.reason)
    if ans.report is not None:
        _report_fields(em, ans.report)
    em.flush()
    return EXIT_UNKNOWN if ans.answer == UNKNOWN else EXIT_OK


def cmd_pmember(args, em):
    F = parse_field(args.field)
    b = parse_element(F, args.elem)
    r = pmember(b)
    em.put("command", "pmember")
    em.put("field", F.describe())
    em.put("elem", b)
    em.put("member", r.member)
    if r.member:
        em.put("certificate", r.certificate)
    else:
        em.put("reduced_form", r.reduced_form)
        em.put("shift", r.shift)
    em.flush()
    return EXIT_OK


def _verify_instances(args):
    F = parse_field(args.field)
    check = verify_thm1 if args.theorem == 1 else verify_thm2
    if args.ext:
        yield parse_poly(F, args.ext, "x"), ext.ExtensionAlgebra(F, parse_poly(F, args.ext, "x")), check
        return
    if args.max_degree is None:
        raise _Exit(EXIT_INPUT, "--ext or --max-degree is required")
    for entry in enumerate_corpus(F, args.max_degree):
        if args.theorem == 1 and entry.extension.n % 2 == 0:
            continue
        yield entry.modulus, entry.extension, check


def cmd_verify(args, em):
    status = True
    if args.theorem in (1, 2):
        for p, E, check in _verify_instances(args):
            ok = check(E)
            status = status and ok
            em.line({"theorem": args.theorem, "instance": p, "status": "PASS" if ok else "FAIL"})
    else:
        F = parse_field(args.field)
        if args.theorem == 3:
            w = witness_hyperbolic_quartic(F)
        else:
            if args.a is None or args.n is None:
                raise _Exit(EXIT_INPUT, "--a and --n are required for theorem 4")
            w = witness_hyperbolic_radical(F, parse_element(F, args.a), args.n)
        ok = w.report.hyperbolic and w.report.certified
        status = ok
        em.line({"theorem": args.theorem, "instance": w.extension.modulus,
                 "witt_index": w.report.witt_index, "status": "PASS" if ok else "FAIL"})
    em.put("status", "PASS" if status else "FAIL")
    em.flush()
    return EXIT_OK if status else EXIT_FAIL


def cmd_enumerate(args, em):
    F = parse_field(args.field)
    for entry in enumerate_corpus(F, args.max_degree):
        r = entry.report
        em.line({"modulus": entry.modulus, "degree": entry.extension.n, "dim": r.dim,
                 "witt_index": r.witt_index, "hyperbolic": r.hyperbolic,
                 "residue": "none" if r.residue is None else r.residue,
                 "a": entry.normal_form.a})
    return EXIT_OK


def cmd_check_identities(args, em):
    F, E = _extension(args)
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.trials):
        x = E.element([F.random(rng) for _ in range(E.n)])
        y = E.element([F.random(rng) for _ in range(E.n)])
        b = ext.polar(E, x, y)
        if b != ext.second_coefficient(E, x + y) + ext.second_coefficient(E, x) + ext.second_coefficient(E, y):
            failures += 1
        if ext.trace(E, x * x) != ext.trace(E, x) ** 2 or ext.polar(E, x * x, y * y) != b * b:
            failures += 1
        if ext.char_poly(E, x)[2] != ext.second_coefficient(E, x):
            failures += 1
    em.put("command", "check-identities")
    em.put("seed", args.seed)
    em.put("trials", args.trials)
    em.put("failures", failures)
    em.flush()
    return EXIT_OK if failures == 0 else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="secondtrace", description="Second trace forms in characteristic two.")
    p.add_argument("--json", action="store_true", help="emit JSON instead of key=value lines")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")
    # --json is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    s = sub.add_parser("trace-form", parents=[common], help="second trace form of F[x]/(p) and its Witt class")
    s.add_argument("--field", required=True)
    s.add_argument("--ext", required=True, help="monic separable polynomial in x")
    s.add_argument("--bm", action="store_true", help="use the form on E x F for odd degree")
    s.add_argument("--audit", action="store_true", help="print the constructed bases")
    s.add_argument("--require-field", action="store_true", help="reject moduli not proven irreducible")
    s.set_defaults(func=cmd_trace_form)

    s = sub.add_parser("is-2algebraic", parents=[common], help="is a form Witt equivalent to a second trace form")
    s.add_argument("--field", required=True)
    s.add_argument("--form", required=True, help="upper-triangular coefficients, e.g. 1,1;0,1")
    s.set_defaults(func=cmd_is_2algebraic)

    s = sub.add_parser("pmember", parents=[common], help="membership in {x^2 + x}")
    s.add_argument("--field", required=True)
    s.add_argument("--elem", required=True)
    s.set_defaults(func=cmd_pmember)

    s = sub.add_parser("verify", parents=[common], help="check the structure results on instances")
    s.add_argument("--theorem", type=int, choices=(1, 2, 3, 4), required=True)
    s.add_argument("--field", default="GF(2)")
    s.add_argument("--ext")
    s.add_argument("--max-degree", type=int)
    s.add_argument("--a")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", parents=[common], help="normal forms over all irreducible moduli")
    s.add_argument("--field", required=True)
    s.add_argument("--max-degree", type=int, required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("check-identities", parents=[common], help=argparse.SUPPRESS)
    s.add_argument("--field", default="GF(2)")
    s.add_argument("--ext", default="x^4+x^3+1")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--require-field", action="store_true")
    s.set_defaults(func=cmd_check_identities)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    em = Emitter(out, args.json)
    try:
        return args.func(args, em)
    except _Exit as exc:
        code, msg = exc.code, str(exc)
    except (ParseError, SingularFormError) as exc:
        code, msg = EXIT_INPUT, str(exc)
    except UnsupportedFieldError as exc:
        code, msg = EXIT_UNSUPPORTED, str(exc)
    except (InseparableError, ReducibleError) as exc:
        code, msg = EXIT_INSEPARABLE, str(exc)
    except UncertifiedError as exc:
        code, msg = EXIT_UNKNOWN, str(exc)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        code, msg = EXIT_INPUT, str(exc)
    except BrokenPipeError:
        # output consumer went away (e.g. piped into head)
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK
    print(f"error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
