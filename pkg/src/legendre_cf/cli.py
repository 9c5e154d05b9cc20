"""Command-line interface.

Exit status: 0 on success, 1 when ``verify`` finds a violation, 2 on usage
errors (malformed input), 3 on domain errors (a violated precondition).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .cf_engine import CF, companion_of, convergents_of, cylinder_interval, evaluate_cf, expand_canonical
from .criteria import (
    CriterionWitness,
    consecutive_interval,
    legendre_check,
    legendre_interval,
    lehmer_raw_check,
    lucas_bound,
    lucas_check,
    theorem_a_check,
)
from .exact_arith import Rat, format_rat, interval_contains, parse_rat
from .farey import farey_neighbors, farey_series
from .generalizations import dujella_decompose, fatou_classify
from .harness import CRITERIA, VerifyConfig, run_equivalence_report
from .kernels import BACKEND
from .oracle import consecutive_pair_oracle, is_convergent_oracle

CHECK_CRITERIA = ("theorem-a", "legendre", "legendre-strict", "lucas", "lehmer-raw", "interval", "consecutive")


class DomainError(Exception):
    pass


def _rat_arg(text: str) -> Rat:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _cf_arg(text: str) -> CF:
    try:
        return CF.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _cf_or_rat_arg(text: str) -> CF:
    if text.strip().startswith("["):
        return _cf_arg(text)
    return expand_canonical(_rat_arg(text))


def _quotients_arg(text: str):
    try:
        values = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None
    return values


def _bool(b: bool) -> str:
    return "true" if b else "false"


def format_witness(ok: bool, w: CriterionWitness) -> str:
    return (f"{_bool(ok)}; theta={format_rat(w.theta)} expansion={w.chosen_expansion} "
            f"q'={w.q_prime} bound={format_rat(w.bound)}")


_WITNESS_RE = re.compile(
    r"^(true|false); theta=(\S+) expansion=(\[[^\]]*\]) q'=(\d+) bound=(\S+)$")


def parse_witness_line(line: str) -> CriterionWitness:
    """Inverse of :func:`format_witness`; p' is recovered from the expansion."""
    m = _WITNESS_RE.match(line.strip())
    if m is None:
        raise ValueError(f"not a witness line: {line!r}")
    cf = CF.parse(m.group(3))
    conv = convergents_of(cf)
    p_prime = conv[-2].p if len(conv) > 1 else 1
    return CriterionWitness(
        theta=parse_rat(m.group(2)),
        chosen_expansion=cf,
        p_prime=p_prime,
        q_prime=int(m.group(4)),
        bound=parse_rat(m.group(5)),
        verdict=m.group(1) == "true",
    )


def _witness_dict(w: CriterionWitness) -> dict:
    return {
        "theta": format_rat(w.theta),
        "expansion": str(w.chosen_expansion),
        "p_prime": w.p_prime,
        "q_prime": w.q_prime,
        "bound": format_rat(w.bound),
        "verdict": w.verdict,
    }


def cmd_expand(args):
    canon = expand_canonical(args.x)
    comp = companion_of(canon)
    return f"{canon}  companion: {comp}", {"value": format_rat(args.x), "canonical": str(canon), "companion": str(comp)}


def cmd_eval(args):
    v = evaluate_cf(args.cf)
    return format_rat(v), {"cf": str(args.cf), "value": format_rat(v)}


def cmd_convergents(args):
    conv = convergents_of(args.cf)
    text = " ".join(format_rat(c.value) for c in conv)
    return text, {"cf": str(args.cf), "convergents": [{"n": c.index, "p": c.p, "q": c.q} for c in conv]}


def cmd_farey(args):
    if args.q < 1:
        raise DomainError(f"Farey order must be >= 1, got {args.q}")
    entries = [format_rat(x) for x in farey_series(args.q)]
    return " ".join(entries), {"order": args.q, "entries": entries}


def cmd_neighbors(args):
    try:
        nb = farey_neighbors(args.x)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    lo, hi = format_rat(nb.lower), format_rat(nb.upper)
    return f"{lo} < {format_rat(args.x)} < {hi}", {"value": format_rat(args.x), "lower": lo, "upper": hi}


def cmd_cylinder(args):
    try:
        iv = cylinder_interval(args.quotients)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return str(iv), {"quotients": list(args.quotients), "interval": str(iv)}


def _require_prev(args):
    if args.prev is None:
        raise DomainError(f"--criterion {args.criterion} needs --prev p'/q'")
    return args.prev


def cmd_check(args):
    alpha, pq, crit = args.alpha, args.pq, args.criterion
    base = {"alpha": format_rat(alpha), "pq": format_rat(pq), "criterion": crit}
    try:
        if crit in ("legendre", "legendre-strict"):
            ok, w = legendre_check(alpha, pq, strict=crit == "legendre-strict")
            return format_witness(ok, w), {**base, "result": ok, "witness": _witness_dict(w)}
        if crit == "lucas":
            ok, w = lucas_check(alpha, pq)
            dist = abs(alpha - pq)
            bound = lucas_bound(pq.denominator, w.q_prime)
            text = (f"{_bool(ok)}; distance={format_rat(dist)} bound={format_rat(bound)} "
                    f"expansion={w.chosen_expansion} q'={w.q_prime}")
            return text, {**base, "result": ok, "distance": format_rat(dist), "lucas_bound": format_rat(bound),
                          "witness": _witness_dict(w)}
        if crit == "theorem-a":
            ok = theorem_a_check(alpha, pq)
            dist, bound = abs(alpha - pq), Rat(1, 2 * pq.denominator ** 2)
            return (f"{_bool(ok)}; distance={format_rat(dist)} bound={format_rat(bound)}",
                    {**base, "result": ok, "distance": format_rat(dist), "bound": format_rat(bound)})
        if crit == "lehmer-raw":
            prev = _require_prev(args)
            ok = lehmer_raw_check(alpha, pq, prev)
            dist, bound = abs(alpha - pq), lucas_bound(pq.denominator, prev.denominator)
            return (f"{_bool(ok)}; distance={format_rat(dist)} bound={format_rat(bound)}",
                    {**base, "prev": format_rat(prev), "result": ok, "distance": format_rat(dist),
                     "bound": format_rat(bound)})
        if crit == "consecutive":
            prev = _require_prev(args)
            iv = consecutive_interval(pq, prev)
        else:
            iv = legendre_interval(pq)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    ok = interval_contains(iv, alpha)
    return f"{_bool(ok)}; interval={iv}", {**base, "result": ok, "interval": str(iv)}


def cmd_oracle(args):
    try:
        if args.prev is not None:
            v = consecutive_pair_oracle(args.alpha, args.pq, args.prev)
        else:
            v = is_convergent_oracle(args.alpha, args.pq)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    return str(v), {"alpha": format_rat(args.alpha), "pq": format_rat(args.pq), "verdict": str(v)}


def cmd_classify(args):
    cls = fatou_classify(args.alpha, args.pq)
    if cls is None:
        return "not-classifiable", {"alpha": format_rat(args.alpha), "pq": format_rat(args.pq), "form": None}
    return str(cls), {"alpha": format_rat(args.alpha), "pq": format_rat(args.pq),
                      "form": cls.form.value, "n": cls.n}


def cmd_dujella(args):
    try:
        found = dujella_decompose(args.alpha, args.pq, args.c)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    text = "\n".join(str(d) for d in found) or "none"
    return text, {"alpha": format_rat(args.alpha), "pq": format_rat(args.pq), "c": format_rat(args.c),
                  "decompositions": [{"n": d.n, "r": d.r, "s": d.s, "sign": d.sign} for d in found]}


def cmd_verify(args):
    criteria = tuple(args.criteria) if args.criteria else CRITERIA
    config = VerifyConfig(args.max_alpha_den, args.max_q, criteria=criteria, workers=args.workers)
    report = run_equivalence_report(config)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(report.counterexamples_csv())
    text = "\n".join(report.summary_lines() + [f"result={'ok' if report.ok else 'violations'}"])
    return text, report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", nargs="?", const="-", default=None, metavar="PATH",
                        help="structured output, to PATH or stdout")
    parser = argparse.ArgumentParser(prog="legendre-cf", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 (kernel: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="both expansions of a rational")
    p.add_argument("x", type=_rat_arg)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("eval", parents=[common], help="value of a continued fraction")
    p.add_argument("cf", type=_cf_arg)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("convergents", parents=[common], help="convergents of a CF or rational")
    p.add_argument("cf", type=_cf_or_rat_arg)
    p.set_defaults(func=cmd_convergents)

    p = sub.add_parser("farey", parents=[common], help="Farey series of order q")
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_farey)

    p = sub.add_parser("neighbors", parents=[common], help="Farey neighbours of p/q in its own series")
    p.add_argument("x", type=_rat_arg)
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("cylinder", parents=[common], help="cylinder interval of quotients a1,...,an")
    p.add_argument("quotients", type=_quotients_arg)
    p.set_defaults(func=cmd_cylinder)

    p = sub.add_parser("check", parents=[common], help="evaluate one criterion")
    p.add_argument("alpha", type=_rat_arg)
    p.add_argument("pq", type=_rat_arg)
    p.add_argument("--criterion", choices=CHECK_CRITERIA, default="legendre")
    p.add_argument("--prev", type=_rat_arg, help="p'/q' for lehmer-raw and consecutive")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", parents=[common], help="brute-force convergent membership")
    p.add_argument("alpha", type=_rat_arg)
    p.add_argument("pq", type=_rat_arg)
    p.add_argument("--prev", type=_rat_arg, help="check p'/q', p/q as consecutive convergents")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("classify", parents=[common], help="convergent / intermediate fraction form")
    p.add_argument("alpha", type=_rat_arg)
    p.add_argument("pq", type=_rat_arg)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("dujella", parents=[common], help="(r, s) decompositions for constant c")
    p.add_argument("alpha", type=_rat_arg)
    p.add_argument("pq", type=_rat_arg)
    p.add_argument("--c", type=_rat_arg, required=True)
    p.set_defaults(func=cmd_dujella)

    p = sub.add_parser("verify", parents=[common], help="exhaustive equivalence report")
    p.add_argument("--max-alpha-den", type=int, required=True)
    p.add_argument("--max-q", type=int, required=True)
    p.add_argument("--criteria", nargs="+", choices=CRITERIA)
    p.add_argument("--csv", metavar="PATH", help="write counterexamples as CSV")
    p.add_argument("--workers", type=int, help="worker processes (default: $LEGENDRE_CF_WORKERS or all cores)")
    p.set_defaults(func=cmd_verify)
    return parser


def _emit(payload, dest: str) -> None:
    text = payload.to_json() if hasattr(payload, "to_json") else json.dumps(payload, indent=2) + "\n"
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w") as fh:
            fh.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, payload = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.json is None:
        print(text)
    else:
        _emit(payload, args.json)
        if args.json != "-":
            print(text)
    if args.command == "verify" and not payload.ok:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
