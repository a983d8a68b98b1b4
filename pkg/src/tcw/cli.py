"""Command-line front end.

Every verb reads JSON (a fan from ``--file`` or stdin, Chern numbers from
``--chern`` or stdin) and writes one compact JSON document to stdout.
Exit codes: 0 success, 1 failed selftest, 2 invalid input, 64 usage error.
"""
import argparse
import json
import sys

from . import constructions, ring
from .charnum import ChernVector, chern_numbers, format_y_polynomial, generalized_todd_genus
from .classifier import classify
from .errors import ToricError
from .facevec import fan_h_vector, g_to_h, h_to_g, is_valid_g
from .fan import Fan, face_count_vector, is_complete, is_projective, is_regular
from .golden import run_selftest
from .ktheory import derive_divisibility_lattice, hattori_stong_check
from .obstructions import obstruction_equations, obstruction_system
from .symfun import format_linear, render

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _read_json(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ToricError(f"{what} is not valid JSON: {exc}", "BAD_JSON") from exc


def _stdin(args, what):
    if sys.stdin is None or sys.stdin.isatty():
        raise UsageError(f"no {what} given on stdin")
    return sys.stdin.read()


def _load_fan(args):
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
    else:
        text = _stdin(args, "fan")
    data = _read_json(text, "fan")
    if isinstance(data, dict) and "fan" in data and "rays" not in data:
        data = data["fan"]
    return Fan.from_json(data)


def _load_chern(args):
    text = args.chern if args.chern not in (None, "-") else _stdin(args, "Chern numbers")
    data = _read_json(text, "Chern numbers")
    if isinstance(data, list):
        return ChernVector(args.dim, tuple(data))
    return ChernVector.from_mapping(data, n=args.dim)


def _int_list(text):
    data = _read_json(text, "list")
    if not isinstance(data, list):
        raise ToricError(f"expected a JSON list, got {text!r}", "BAD_JSON")
    return [int(x) for x in data]


# -- verbs -----------------------------------------------------------------------

def cmd_gen(args):
    spec = constructions.FamilySpec(args.family, tuple(args.params), args.blowups)
    return spec.build().to_json()


def cmd_check(args):
    fan = _load_fan(args)
    regular = is_regular(fan)
    complete = is_complete(fan)
    out = {"regular": regular, "complete": complete}
    out["projective"] = is_projective(fan) if regular and complete else None
    return out


def cmd_chern(args):
    fan = _load_fan(args)
    if args.dim is not None and args.dim != fan.dim:
        raise ToricError(f"fan has dimension {fan.dim}, not {args.dim}", "DIM_MISMATCH")
    cv = chern_numbers(fan, method=args.method)
    if not args.genus:
        return cv.to_json()
    genus = generalized_todd_genus(cv)
    return {"chern": cv.to_json(), "chi_y": [int(x) for x in genus],
            "chi_y_text": format_y_polynomial(genus)}


def cmd_gvector(args):
    fan = _load_fan(args)
    h = fan_h_vector(fan)
    return {"f": list(face_count_vector(fan)), "h": h, "g": h_to_g(h)}


def cmd_eval_monomial(args):
    fan = _load_fan(args)
    data = _read_json(args.monomial, "monomial")
    if isinstance(data, dict):
        data = {int(k): v for k, v in data.items()}
    return {"value": ring.evaluate(fan, data)}


def cmd_blowup(args):
    fan = _load_fan(args)
    cone = _int_list(args.cone) if args.cone else None
    return constructions.blowup_fixed_point(fan, cone).to_json()


def cmd_gcheck(args):
    g = _int_list(args.g)
    ok, reason = is_valid_g(g, args.dim)
    out = {"valid": ok, "reason": reason}
    if ok:
        out["h"] = g_to_h(g, args.dim)
    return out


def cmd_obstructions(args):
    if args.g is None:
        return [r.to_json() for r in obstruction_system(args.dim)]
    out = []
    for pivot, terms, const in obstruction_equations(args.dim, _int_list(args.g)):
        rhs = format_linear([(c, render(q)) for q, c in terms] + [(const, "")])
        out.append(f"{render(pivot)} = {rhs}")
    return out


def cmd_hattori_stong(args):
    cv = _load_chern(args)
    ok, failures = hattori_stong_check(cv)
    return {"ok": ok,
            "failures": [{"omega": list(w), "value": str(v)} for w, v in failures],
            "violated": [c.render(cv.n) for c in derive_divisibility_lattice(cv.n)
                         if not c.holds(cv.values)]}


def cmd_divisibility(args):
    return [c.to_json(args.dim) for c in derive_divisibility_lattice(args.dim)]


def cmd_classify(args):
    return classify(_load_chern(args)).to_json(include_fan=not args.no_fan)


def cmd_selftest(args):
    report = run_selftest()
    if not args.verbose:
        report = {k: v for k, v in report.items() if k != "results"} | {
            "failures": [r for r in report["results"] if not r["ok"]]}
    return report


def build_parser():
    p = _Parser(prog="tcw", description="Invariants of smooth projective toric varieties.")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    def fan_input(sp):
        sp.add_argument("--file", help="fan JSON file (default: stdin)")

    sp = sub.add_parser("gen", help="build a named fan")
    sp.add_argument("family", choices=constructions.FAMILIES)
    sp.add_argument("params", nargs="*", type=int)
    sp.add_argument("--blowups", type=int, default=0)
    sp.set_defaults(run=cmd_gen)

    sp = sub.add_parser("check", help="regular / complete / projective")
    fan_input(sp)
    sp.set_defaults(run=cmd_check)

    sp = sub.add_parser("chern", help="Chern numbers of a fan")
    fan_input(sp)
    sp.add_argument("--dim", type=int)
    sp.add_argument("--method", choices=("localization", "monomials"), default="localization")
    sp.add_argument("--genus", action="store_true", help="also print the chi_y genus")
    sp.set_defaults(run=cmd_chern)

    sp = sub.add_parser("gvector", help="f-, h- and g-vector of a fan")
    fan_input(sp)
    sp.set_defaults(run=cmd_gvector)

    sp = sub.add_parser("eval-monomial", help="evaluate a ray monomial")
    fan_input(sp)
    sp.add_argument("--monomial", required=True,
                    help="JSON: ray index list, exponent vector or {index: exponent}")
    sp.set_defaults(run=cmd_eval_monomial)

    sp = sub.add_parser("blowup", help="star-subdivide a maximal cone")
    fan_input(sp)
    sp.add_argument("--cone", help="JSON list of ray indices (default: first maximal cone)")
    sp.set_defaults(run=cmd_blowup)

    sp = sub.add_parser("gcheck", help="check the g-theorem conditions")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--g", required=True)
    sp.set_defaults(run=cmd_gcheck)

    sp = sub.add_parser("obstructions", help="Chern relations forced by the g-vector")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--g")
    sp.set_defaults(run=cmd_obstructions)

    sp = sub.add_parser("hattori-stong", help="integrality of K-theory Chern numbers")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--chern")
    sp.set_defaults(run=cmd_hattori_stong)

    sp = sub.add_parser("divisibility", help="congruences cutting out cobordism classes")
    sp.add_argument("--dim", type=int, required=True)
    sp.set_defaults(run=cmd_divisibility)

    sp = sub.add_parser("classify", help="decide representability by a toric variety")
    sp.add_argument("--dim", type=int, required=True, choices=(1, 2, 3, 4))
    sp.add_argument("--chern")
    sp.add_argument("--no-fan", action="store_true", help="omit the witness fan")
    sp.set_defaults(run=cmd_classify)

    sp = sub.add_parser("selftest", help="reproduce every printed reference value")
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(run=cmd_selftest)
    return p


def main(argv=None, stdout=None):
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.verb:
            raise UsageError("missing verb")
        result = args.run(args)
    except UsageError as exc:
        print(_dump({"error": "USAGE", "message": str(exc)}), file=out)
        return EXIT_USAGE
    except ToricError as exc:
        print(_dump(exc.to_json()), file=out)
        return EXIT_INVALID
    except (ValueError, TypeError, KeyError, OSError) as exc:
        print(_dump({"error": "INVALID_INPUT", "message": str(exc)}), file=out)
        return EXIT_INVALID
    print(_dump(result), file=out)
    if args.verb == "selftest" and result["failed"]:
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
