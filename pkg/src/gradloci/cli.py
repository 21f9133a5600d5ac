"""Command-line driver.

    gradloci bbs <file> [--z c11,c12,...]
    gradloci analyze <file> --mode=<mode> [--verbose] [--budget=<n>]
    gradloci fixtures <name|all> [--json]

Reports are JSON with sorted keys.  Everything except the ``timings`` field
is a deterministic function of the input.  Exit codes: 0 success, 1 a
fixture check failed, 2 bad input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Mapping, Sequence

from .bbscheme import OrderIdealError, build_scheme, linear_span_dimension, load_order_ideal, validate_order_ideal
from .fixtures import FIXTURES, reembedded_algebra, run_fixture
from .ideals import Budget, BudgetExceeded, Ideal, groebner, set_default_budget
from .matrices import generic_rank
from .polyring import QQ, ParseError, RingSpec
from .posalg import (
    InvalidAlgebra,
    PositiveAlgebra,
    coefficient_rank_at,
    connect_points,
    fiber_dimension,
    generic_fiber_dimension,
    lin_coeff_matrix,
    local_invariants,
    validate,
)
from .singloci import (
    ComponentData,
    NotEquidimensional,
    comprehensive_gs,
    fiber_point_singular_test,
    sing0_equidimensional,
    sing0_general,
    sing0_point_test,
    sings_set,
    singv_point_test,
    singv_set,
    strata,
)

MODES = ("lin-matrix", "sing0", "singv", "sings", "point", "curve", "invariants")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# descriptors


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def algebra_from_descriptor(desc: Mapping) -> PositiveAlgebra:
    """Either explicit ``params/vars/weights/generators`` or an ``order_ideal``
    with a ``z`` tuple for the reembedded border basis scheme."""
    if "order_ideal" in desc:
        O = validate_order_ideal(desc["order_ideal"], desc.get("n"))
        data = build_scheme(O)
        if "z" not in desc:
            return validate(data.positive_ring(), [g.to_ring(data.positive_ring()) for g in data.ideal.generators])
        return reembedded_algebra(data, desc["z"])
    if "vars" not in desc or "generators" not in desc:
        raise InputError("descriptor needs 'vars' and 'generators' (or 'order_ideal')")
    ring = RingSpec(tuple(desc.get("params", ())), tuple(desc["vars"]), tuple(desc.get("weights") or ()))
    return validate(ring, list(desc["generators"]))


def _components(PA: PositiveAlgebra, desc: Mapping) -> ComponentData | None:
    comps = desc.get("components")
    if comps is None:
        return None
    primes = [(Ideal(PA.ring, c["generators"]), int(c["dim"])) for c in comps]
    radical = Ideal(PA.ring, desc["radical"]) if "radical" in desc else None
    return ComponentData(primes, radical)


def _points(desc: Mapping) -> list:
    out = []
    for p in desc.get("points", ()):
        out.append(p if isinstance(p, dict) else {"gamma": p})
    return out


def _ideal_json(I: Ideal) -> list:
    """Reduced Gröbner basis, a canonical form for the ideal."""
    return [str(g) for g in groebner(I).elements]


def _vals(xs: Sequence) -> list:
    return [QQ.convert(x) for x in xs]


def _d_zero(PA, desc, point, comp):
    if "d_zero_point" in point:
        return int(point["d_zero_point"])
    if desc.get("equidimensional") and "dimension" in desc:
        return int(desc["dimension"])
    if comp is not None:
        return comp.zero_point_dimension(PA, point["gamma"])
    return None


# ---------------------------------------------------------------------------
# commands


def cmd_bbs(path: str, z: Sequence[str] | None = None) -> dict:
    try:
        O = load_order_ideal(path)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"bad order ideal description: {exc}") from None
    data = build_scheme(O)
    results = data.summary()
    results["weights"] = dict(data.weights)
    results["lin_dimension"] = linear_span_dimension(data.ideal.generators)
    if z:
        PA = reembedded_algebra(data, z)
        results["reembedding"] = {
            "z": list(z),
            "params": list(PA.ring.params),
            "vars": list(PA.ring.vars),
            "weights": list(PA.ring.weights),
            "generators": [str(g) for g in PA.generators],
        }
    return {"command": "bbs", "inputs_digest": _digest({"order_ideal": [list(t) for t in O.terms], "z": list(z or ())}), "results": results}


def cmd_analyze(desc: Mapping, mode: str, verbose: bool = False) -> dict:
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    PA = algebra_from_descriptor(desc)
    comp = _components(PA, desc)
    res: dict = {"n": PA.n, "m": PA.m, "k": PA.k}
    if mode == "lin-matrix":
        M = lin_coeff_matrix(PA)
        res["matrix"] = [[str(x) for x in r] for r in M.rows]
        res["rank"] = generic_rank(M)
        res["generic_fiber_dimension"] = generic_fiber_dimension(PA)
    elif mode == "sing0":
        if comp is not None:
            J = sing0_general(PA, comp, reduced=bool(desc.get("reduced")))
            res["method"] = "components"
        elif "dimension" in desc:
            try:
                J = sing0_equidimensional(PA, int(desc["dimension"]))
            except NotEquidimensional as exc:
                res["equidimensional"] = False
                res["error"] = str(exc)
                J = None
            res["method"] = "minors"
        else:
            raise InputError("sing0 needs 'dimension' (equidimensional case) or 'components'")
        if J is not None:
            res["ideal"] = _ideal_json(J)
            res["whole_base"] = J.is_zero()
            res["empty"] = J.is_unit()
            if verbose:
                res["minor_generators"] = [str(g) for g in J.generators]
    elif mode in ("singv", "sings"):
        gs = comprehensive_gs(PA)
        S = singv_set(PA, gs) if mode == "singv" else sings_set(PA, gs)
        res["set"] = S.to_json()
        res["text"] = str(S)
        if verbose:
            res["groebner_system"] = [
                {"cell": b.cell.to_json(), "fiber_dim": b.fiber_dim, "basis": [str(g) for g in b.basis]} for b in gs.branches
            ]
            res["strata"] = {str(d): U.to_json() for d, U in sorted(strata(PA, gs).items())}
    elif mode in ("point", "invariants"):
        out = []
        for p in _points(desc):
            gamma = _vals(p["gamma"])
            d0 = _d_zero(PA, desc, p, comp)
            fdim = p.get("fiber_dim")
            if mode == "invariants":
                inv = local_invariants(PA, gamma, d0)
                out.append(inv.as_dict())
                continue
            fdim = fiber_dimension(PA, gamma) if fdim is None else int(fdim)
            entry = {
                "gamma": [str(g) for g in gamma],
                "rank": coefficient_rank_at(PA, gamma),
                "fiber_dim": fdim,
                "d_zero_point": d0,
                "sing0": sing0_point_test(PA, gamma, d0) if d0 is not None else None,
                "singv": singv_point_test(PA, gamma, fdim),
            }
            if "fiber_point" in p:
                entry["fiber_point_singular"] = fiber_point_singular_test(PA, gamma, _vals(p["fiber_point"]), fdim)
            out.append(entry)
        res["points"] = out
    elif mode == "curve":
        pts = desc.get("points") or []
        if len(pts) != 2:
            raise InputError("curve mode needs exactly two points of Spec(R)")
        path = connect_points(PA, _vals(pts[0]), _vals(pts[1]))
        res["segments"] = [
            {
                "kind": s.kind,
                "start": [str(x) for x in s.start],
                "end": [str(x) for x in s.end],
                "images": {k: str(v) for k, v in s.images.items()},
            }
            for s in path.segments
        ]
    return {"command": "analyze", "mode": mode, "inputs_digest": _digest(desc), "results": res}


def cmd_fixtures(name: str) -> tuple[dict, bool]:
    names = list(FIXTURES) if name == "all" else [name]
    unknown = [n for n in names if n not in FIXTURES]
    if unknown:
        raise InputError(f"unknown fixture {unknown[0]!r}; known: {', '.join(FIXTURES)}, all")
    reports = [run_fixture(n) for n in names]
    ok = all(r.passed for r in reports)
    body = {
        "command": "fixtures",
        "inputs_digest": _digest(names),
        "results": [r.as_dict(timings=False) for r in reports],
        "timings": {r.name: round(r.seconds, 3) for r in reports},
        "passed": ok,
    }
    return body, ok


# ---------------------------------------------------------------------------
# entry point


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gradloci", description="Singular loci of positive graded algebras.")
    ap.add_argument("--budget", type=int, default=None, help="max S-pairs per Gröbner basis (overrides GRADLOCI_BUDGET)")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bbs", help="border basis scheme of an order ideal")
    b.add_argument("file", help="order-ideal JSON file (or inline JSON)")
    b.add_argument("--z", default=None, help="comma-separated Z tuple for a Z-separating reembedding")

    a = sub.add_parser("analyze", help="analyse a positive algebra descriptor")
    a.add_argument("file")
    a.add_argument("--mode", required=True, choices=MODES)
    a.add_argument("--verbose", action="store_true")
    a.add_argument("--budget", type=int, default=None, dest="sub_budget")

    f = sub.add_parser("fixtures", help="run built-in worked examples")
    f.add_argument("name", help="fixture name or 'all'")
    f.add_argument("--json", action="store_true")
    return ap


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False))


def _print_fixtures(body: dict) -> None:
    for rep in body["results"]:
        status = "PASS" if rep["passed"] else "FAIL"
        print(f"{status} {rep['fixture']} ({body['timings'][rep['fixture']]:.2f}s)")
        for c in rep["checks"]:
            mark = "ok " if c["passed"] else "NO "
            line = f"    {mark} {c['label']}"
            if not c["passed"] and c["detail"]:
                line += f"  [{c['detail']}]"
            print(line)


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    budget = Budget.from_env()
    n = getattr(args, "sub_budget", None) or args.budget
    if n is not None:
        budget = Budget(max_pairs=n)
    set_default_budget(budget)
    t0 = time.perf_counter()
    try:
        if args.command == "bbs":
            z = [s.strip() for s in args.z.split(",")] if args.z else None
            body = cmd_bbs(args.file, z)
            body["timings"] = {"total": round(time.perf_counter() - t0, 3)}
            _emit(body)
            return EXIT_OK
        if args.command == "analyze":
            body = cmd_analyze(_read_json(args.file), args.mode, args.verbose)
            body["timings"] = {"total": round(time.perf_counter() - t0, 3)}
            body["budget"] = {"max_pairs": budget.max_pairs}
            _emit(body)
            return EXIT_OK
        body, ok = cmd_fixtures(args.name)
        if args.json:
            _emit(body)
        else:
            _print_fixtures(body)
        return EXIT_OK if ok else EXIT_FAIL
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, ParseError, InvalidAlgebra, OrderIdealError, KeyError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
