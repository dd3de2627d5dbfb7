"""Command-line front end with JSON payloads and machine-readable exit codes.

Exit codes form a trichotomy so shell pipelines can tell "checked and false"
from "could not check": 0 = success or feasible; 1 = well-formed negative
verdict (infeasible, unsatisfiable, no rational point, or a precondition of
the mathematics not met); 2 = usage or I/O error.

Every payload is one JSON object on standard output; diagnostics go to
standard error.  Numbers inside payloads are "num/den" strings and every
verdict is computed in exact arithmetic; the report's "exact" flag documents
that no floating point was involved.  The environment variable
POLYCERT_PRECISION_CAP (integer bits) overrides the dyadic refinement caps.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from .ratcore import AlgebraicElement, PrecisionCapError, parse_rat
from .polyalg import Polynomial
from .systems import EQ0, PolySystem, point_from_json, point_to_json, verify, verify_alg
from .bounds import bound_report, delta_bound
from .reductions import (
    brute_force_sat,
    build_cubic_system,
    build_np_hard_system,
    build_superopt_problem,
    build_unbounded_instance,
    cubic_algebraic_witness,
    parse_dimacs,
    unbounded_ray_witness,
    witness_always,
    witness_epsilon,
    witness_satisfiable,
)
from .gadgets import GADGET_BUILDERS
from .separable import SeparableCubic, solve_separable
from .rays import classify_ray, rationalize_unbounded_ray
from .certify import check_certificate, grid_certificate


class UsageError(Exception):
    """Bad flags or unreadable input: exit code 2."""


class NegativeVerdict(Exception):
    """Well-formed negative outcome: exit code 1."""


# -- I/O helpers ---------------------------------------------------------


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from e


def _read_json(path: str):
    text = _read_text(path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}") from e


def _write_json(path: str, payload) -> str:
    text = json.dumps(payload, indent=2) + "\n"
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e}") from e
    return hashlib.sha256(text.encode()).hexdigest()


def _digest(path: str) -> dict:
    return {
        "path": path,
        "sha256": hashlib.sha256(_read_text(path).encode()).hexdigest(),
    }


def _point_arg(data) -> list:
    """Accept a bare point object or a landmark object wrapping one."""
    if isinstance(data, dict) and "point" in data and "values" not in data:
        data = data["point"]
    if not isinstance(data, dict) or "values" not in data:
        raise UsageError("point file must contain a point object with 'values'")
    return point_from_json(data)


def _verify_any(sys_: PolySystem, point: list):
    if any(isinstance(v, AlgebraicElement) for v in point):
        return verify_alg(sys_, point)
    return verify(sys_, point)


# -- subcommand handlers --------------------------------------------------


def _cmd_verify(args, inputs: dict) -> tuple[int, dict]:
    inputs["system"] = _digest(args.system)
    inputs["point"] = _digest(args.point)
    sys_ = PolySystem.from_json(_read_json(args.system))
    point = _point_arg(_read_json(args.point))
    v = _verify_any(sys_, point)
    if not v.feasible:
        print(f"point violates rows {list(v.violated)}", file=sys.stderr)
    return (0 if v.feasible else 1), {"verdict": v.to_json()}


def _split_for_certify(sys_: PolySystem) -> tuple[PolySystem, list[Polynomial]]:
    lin_rows = []
    g_list = []
    for c in sys_.constraints:
        if c.tag == "linear":
            lin_rows.append((c.poly, c.rel, c.tag))
        elif c.rel == EQ0:
            raise ValueError("cannot certify a system with nonlinear equality rows")
        else:
            g_list.append(c.poly)
    P = PolySystem(sys_.num_vars, lin_rows, sys_.var_names)
    return P, g_list


def _cmd_certify(args, inputs: dict) -> tuple[int, dict]:
    inputs["system"] = _digest(args.system)
    inputs["point"] = _digest(args.point)
    inputs["delta"] = args.delta
    sys_ = PolySystem.from_json(_read_json(args.system))
    x_tilde = _point_arg(_read_json(args.point))
    P, g_list = _split_for_certify(sys_)
    if args.delta == "paper":
        meta = sys_.metadata()
        delta = delta_bound(
            sys_.num_vars, len(sys_.constraints), max(meta["d"], 1), max(meta["H"], 1)
        )
    else:
        try:
            delta = int(args.delta)
        except ValueError as e:
            raise UsageError("--delta takes an integer or 'paper'") from e
    big_m = parse_rat(args.big_m) if args.big_m else None
    lip = parse_rat(args.lipschitz) if args.lipschitz else None
    cert = grid_certificate(P, g_list, delta, x_tilde, M=big_m, L=lip)
    check = check_certificate(sys_, delta, list(cert.point))
    return 0, {"certificate": cert.to_json(), "check": check.to_json()}


def _cmd_check(args, inputs: dict) -> tuple[int, dict]:
    inputs["system"] = _digest(args.system)
    inputs["point"] = _digest(args.point)
    inputs["delta"] = args.delta
    sys_ = PolySystem.from_json(_read_json(args.system))
    x_bar = _point_arg(_read_json(args.point))
    v = check_certificate(sys_, args.delta, x_bar)
    if not v.feasible:
        print(f"relaxed system violated at rows {list(v.violated)}", file=sys.stderr)
    return (0 if v.feasible else 1), {"verdict": v.to_json()}


_GADGET_PARAM_TYPES = {
    "h": {"gamma": parse_rat},
    "tiny": {"n": int},
    "khachiyan": {"n": int},
    "badboy": {"N": int},
    "socp": {"a": int, "b": int, "c": int, "d": int},
    "unlucky": {"sigma": parse_rat},
}

_GADGET_DEFAULTS = {
    "h": {"gamma": Fraction(0)},
    "tiny": {"n": 3},
    "khachiyan": {"n": 3},
    "badboy": {"N": 2},
    "socp": {"a": 2, "b": 2, "c": 1, "d": 3},
    "unlucky": {"sigma": Fraction(0)},
}


def _cmd_gadget(args, inputs: dict) -> tuple[int, dict]:
    types = _GADGET_PARAM_TYPES[args.name]
    params = dict(_GADGET_DEFAULTS[args.name])
    for raw in args.param or []:
        key, sep, val = raw.partition("=")
        if not sep or key not in types:
            allowed = ", ".join(sorted(types)) or "none"
            raise UsageError(
                f"bad --param {raw!r}; gadget {args.name} takes: {allowed}"
            )
        try:
            params[key] = types[key](val)
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"bad value for --param {key}: {e}") from e
    inputs["name"] = args.name
    inputs["params"] = {k: str(v) for k, v in sorted(params.items())}
    bundle = GADGET_BUILDERS[args.name](**params)
    outputs: dict = {"notes": list(bundle.notes)}
    sys_json = bundle.system.to_json()
    lm_json = [lm.to_json() for lm in bundle.landmarks]
    if args.out:
        outputs["system_path"] = args.out
        outputs["system_sha256"] = _write_json(args.out, sys_json)
    else:
        outputs["system"] = sys_json
    if args.landmarks:
        outputs["landmarks_path"] = args.landmarks
        outputs["landmarks_sha256"] = _write_json(args.landmarks, lm_json)
    else:
        outputs["landmarks"] = lm_json
    return 0, outputs


def _quad_extension(point: list[Fraction], n: int) -> list[Fraction]:
    y1, y2 = point[2 * n + 2], point[2 * n + 3]
    return list(point) + [y1 * y1, y2 * y2]


def _cmd_reduce(args, inputs: dict) -> tuple[int, dict]:
    inputs["cnf"] = _digest(args.cnf)
    inputs["variant"] = args.variant
    if args.witness:
        inputs["witness"] = args.witness
    try:
        cnf = parse_dimacs(_read_text(args.cnf))
    except ValueError as e:
        raise UsageError(f"{args.cnf}: {e}") from e
    n = cnf.num_vars
    objective = None
    if args.variant == "quad":
        sys_ = build_np_hard_system(cnf, quadratize=True)
    elif args.variant == "cubic":
        sys_ = build_cubic_system(cnf)
    elif args.variant == "superopt":
        sys_, objective = build_superopt_problem(cnf)
    else:
        sys_, objective = build_unbounded_instance(cnf)

    witness = None
    assignment = None
    if args.witness == "always":
        if args.variant == "quad":
            witness = _quad_extension(witness_always(cnf), n)
        elif args.variant == "cubic":
            witness = cubic_algebraic_witness(cnf)
        else:
            raise UsageError("--witness always applies to variants quad and cubic")
    elif args.witness == "sat":
        assignment = brute_force_sat(cnf)
        if assignment is None:
            raise NegativeVerdict(
                "formula is unsatisfiable: witness requires a satisfying assignment"
            )
        if args.variant == "unbounded":
            witness = unbounded_ray_witness(cnf, assignment)
        else:
            base = witness_satisfiable(cnf, assignment)
            if args.variant == "quad":
                witness = _quad_extension(base, n)
            elif args.variant == "cubic":
                witness = base[: 2 * n + 4]
            else:
                witness = base + [Fraction(0), Fraction(2)]
    elif args.witness and args.witness.startswith("eps:"):
        if args.variant != "superopt":
            raise UsageError("--witness eps:<rat> applies to variant superopt")
        try:
            eps = parse_rat(args.witness[4:])
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"bad epsilon: {e}") from e
        witness = witness_epsilon(cnf, eps)
    elif args.witness:
        raise UsageError("--witness takes one of: sat, always, eps:<rat>")

    outputs: dict = {"num_vars": sys_.num_vars, "num_rows": len(sys_.constraints)}
    sys_json = sys_.to_json()
    if args.out:
        outputs["system_path"] = args.out
        outputs["system_sha256"] = _write_json(args.out, sys_json)
    else:
        outputs["system"] = sys_json
    if objective is not None:
        outputs["objective"] = objective.to_json()
    if witness is not None:
        outputs["witness"] = point_to_json(witness)
        outputs["witness_verdict"] = _verify_any(sys_, witness).to_json()
    if assignment is not None:
        outputs["assignment"] = "".join("1" if b else "0" for b in assignment)
    return 0, outputs


def _cmd_separable(args, inputs: dict) -> tuple[int, dict]:
    inputs["system"] = _digest(args.system)
    inputs["cubic"] = _digest(args.cubic)
    sys_ = PolySystem.from_json(_read_json(args.system))
    try:
        sc = SeparableCubic.from_json(_read_json(args.cubic))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise UsageError(f"{args.cubic}: bad separable cubic: {e}") from e
    res = solve_separable(sc, sys_)
    out = res.to_json()
    out["status"] = out["status"].replace("_", "-")
    if not res.feasible:
        print(f"verdict: {out['status']}", file=sys.stderr)
    return (0 if res.feasible else 1), out


def _cmd_ray(args, inputs: dict) -> tuple[int, dict]:
    inputs["poly"] = _digest(args.poly)
    inputs["from"] = _digest(args.from_)
    inputs["dir"] = _digest(args.dir)
    f = Polynomial.from_json(_read_json(args.poly))
    x0 = _point_arg(_read_json(args.from_))
    v = _point_arg(_read_json(args.dir))
    polytope = None
    if args.polytope:
        inputs["polytope"] = _digest(args.polytope)
        polytope = PolySystem.from_json(_read_json(args.polytope))
    if args.rationalize is not None:
        try:
            eps = parse_rat(args.rationalize)
        except (ValueError, ZeroDivisionError) as e:
            raise UsageError(f"bad --rationalize value: {e}") from e
        inputs["rationalize"] = args.rationalize
        x, v2 = rationalize_unbounded_ray(f, x0, v, polytope, eps)
        return 0, {
            "point": point_to_json(x),
            "direction": point_to_json(v2),
            "classification": classify_ray(f, x, v2).to_json(),
        }
    rc = classify_ray(f, x0, v)
    return 0, {"classification": rc.to_json()}


def _cmd_bounds(args, inputs: dict) -> tuple[int, dict]:
    inputs.update(
        {"n": args.n, "m": args.m, "ell": args.ell, "d": args.d, "H": args.H, "loose": args.loose}
    )
    report = bound_report(args.n, args.m, args.ell, args.d, args.H, loose=args.loose)
    return 0, {"bounds": report.to_json()}


# -- parser and entry point ------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycert",
        description="Exact instance generators, feasibility certificates, "
        "separable cubic solutions, and ray classification.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("reduce", help="generate a hardness instance from a 3-CNF formula")
    p.add_argument("--cnf", required=True, help="DIMACS CNF file (3 literals per clause)")
    p.add_argument(
        "--variant", required=True, choices=["quad", "cubic", "superopt", "unbounded"]
    )
    p.add_argument("--out", help="write the system JSON here instead of inlining it")
    p.add_argument(
        "--witness",
        help="attach a witness: 'sat' (finds a satisfying assignment), "
        "'always', or 'eps:<rat>' for the superopt variant",
    )
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("verify", help="exact feasibility check of a point")
    p.add_argument("--system", required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("certify", help="build a vertex certificate for the relaxed system")
    p.add_argument("--system", required=True, help="linear rows plus nonlinear <= 0 rows")
    p.add_argument("--point", required=True, help="exactly feasible point x~")
    p.add_argument("--delta", required=True, help="positive integer, or 'paper' for the derived bound")
    p.add_argument("--big-m", dest="big_m", help="override the box bound M (rational)")
    p.add_argument("--lipschitz", help="override the Lipschitz constant L (rational)")
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("check", help="verify a point against the delta-relaxed system")
    p.add_argument("--system", required=True)
    p.add_argument("--delta", required=True, type=int)
    p.add_argument("--point", required=True)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("gadget", help="emit a named example system with landmark points")
    p.add_argument("--name", required=True, choices=sorted(GADGET_BUILDERS))
    p.add_argument(
        "--param",
        action="append",
        help="key=value, repeatable (h: gamma; tiny/khachiyan: n; badboy: N; "
        "socp: a,b,c,d; unlucky: sigma)",
    )
    p.add_argument("--out", help="write the system JSON here")
    p.add_argument("--landmarks", help="write the landmark list here")
    p.set_defaults(handler=_cmd_gadget)

    p = sub.add_parser("separable", help="rational solution of a separable cubic over a polytope")
    p.add_argument("--system", required=True, help="linear constraint system JSON")
    p.add_argument("--cubic", required=True, help="separable cubic JSON")
    p.set_defaults(handler=_cmd_separable)

    p = sub.add_parser("ray", help="classify polynomial growth along a ray")
    p.add_argument("--poly", required=True)
    p.add_argument("--from", dest="from_", required=True, help="base point JSON")
    p.add_argument("--dir", required=True, help="direction JSON")
    p.add_argument("--polytope", help="constrain rationalization to this polyhedron")
    p.add_argument("--rationalize", metavar="EPS", help="round an algebraic ray to rationals")
    p.set_defaults(handler=_cmd_ray)

    p = sub.add_parser("bounds", help="numeric bound report for an instance shape")
    p.add_argument("--n", required=True, type=int, help="variables")
    p.add_argument("--m", required=True, type=int, help="constraints")
    p.add_argument("--ell", required=True, type=int, help="nonlinear rows")
    p.add_argument("--d", required=True, type=int, help="max degree")
    p.add_argument("--H", required=True, type=int, help="max height")
    p.add_argument("--loose", action="store_true", help="use the simplified power-of-two bound")
    p.set_defaults(handler=_cmd_bounds)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if not e.code else 2
    t0 = time.perf_counter()
    inputs: dict = {}
    try:
        code, outputs = args.handler(args, inputs)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NegativeVerdict as e:
        print(str(e), file=sys.stderr)
        code, outputs = 1, {"error": str(e)}
    except (PrecisionCapError, ValueError) as e:
        print(str(e), file=sys.stderr)
        code, outputs = 1, {"error": str(e)}
    report = {
        "subcommand": args.cmd,
        "inputs": inputs,
        "outputs": outputs,
        "timing_ms": int((time.perf_counter() - t0) * 1000),
        "exact": True,
    }
    json.dump(report, sys.stdout, indent=2)
    print()
    return code


if __name__ == "__main__":
    sys.exit(main())
