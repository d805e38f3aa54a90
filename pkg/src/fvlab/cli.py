"""Command-line interface: JSON in, one JSON document out.

Counts cross the boundary as decimal strings so that values beyond float
precision survive a round trip.  Exit codes: 0 success or positive
verdict, 1 negative verdict, 2 malformed input, 3 cap exceeded.  Identical
requests produce byte-identical output; timings go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import cdalgebra, decider, experiments, gorenstein, macaulay, rank5
from .config import load_caps
from .errors import CapExceeded, CdInexpressibleError, PosetError
from .posets import (FlagVector, GradedPoset, boolean_lattice, dihedral_sphere,
                     flag_vector, is_eulerian, polygon)
from .vectors import FVector, GVector, HVector, f_to_h, fatness, g_to_h, h_to_f, h_to_g

OK, NEGATIVE, MALFORMED, CAPPED = 0, 1, 2, 3


def _parse_int(value) -> int:
    if isinstance(value, bool):
        raise ValueError(f"expected an integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value.strip())
    raise ValueError(f"expected an integer or decimal string, got {value!r}")


def _parse_int_array(raw: str, what: str) -> list[int]:
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{what} is not valid JSON: {exc}")
    if not isinstance(data, list):
        raise ValueError(f"{what} must be a JSON array")
    return [_parse_int(e) for e in data]


def _strs(values) -> list[str]:
    return [str(int(v)) for v in values]


def _poly_json(p) -> dict:
    return {w: str(c) for w, c in p.items()}


def _parse_cd(raw: str) -> cdalgebra.CdPolynomial:
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"cd polynomial is not valid JSON: {exc}")
    if not isinstance(data, dict) or not data:
        raise ValueError("cd polynomial must be a nonempty JSON object")
    degrees = {cdalgebra.word_degree(w) for w in data}
    if len(degrees) != 1:
        raise ValueError("cd polynomial must be homogeneous")
    return cdalgebra.CdPolynomial(degrees.pop(),
                                  {w: _parse_int(c) for w, c in data.items()})


def _load_poset(args) -> GradedPoset:
    kind = getattr(args, "kind", None)
    if kind:
        if kind == "boolean":
            return boolean_lattice(_require(args, "n"))
        if kind == "polygon":
            return polygon(_require(args, "m"))
        if kind == "dihedral":
            return dihedral_sphere(_require(args, "d"))
        raise ValueError(f"unknown poset kind {kind!r}")
    raw = sys.stdin.read() if args.infile == "-" else _read_file(args.infile)
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"poset document is not valid JSON: {exc}")
    return GradedPoset.from_json(doc)


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}")


def _require(args, name: str):
    value = getattr(args, name, None)
    if value is None:
        raise ValueError(f"--{name} is required for this request")
    return value


# handlers: each returns (payload, exit_code)

def _cmd_transform(args):
    if args.op == "f2h":
        h = f_to_h(FVector(args.d, tuple(_parse_int_array(args.f, "--f"))))
        return {"d": args.d, "h": _strs(h.entries)}, OK
    if args.op == "h2f":
        f = h_to_f(HVector(args.d, tuple(_parse_int_array(args.h, "--h"))))
        return {"d": args.d, "f": _strs(f.entries)}, OK
    if args.op == "h2g":
        g = h_to_g(HVector(args.d, tuple(_parse_int_array(args.h, "--h"))))
        return {"d": args.d, "g": _strs(g.entries)}, OK
    h = g_to_h(GVector(args.d // 2, tuple(_parse_int_array(args.g, "--g"))), args.d)
    return {"d": args.d, "h": _strs(h.entries)}, OK


def _cmd_stats_fatness(args):
    value = fatness(FVector(4, tuple(_parse_int_array(args.f, "--f"))))
    return {"fatness": str(value)}, OK


def _cmd_decide_simplicial(args):
    try:
        entries = json.loads(args.f)
    except json.JSONDecodeError as exc:
        raise ValueError(f"--f is not valid JSON: {exc}")
    if not isinstance(entries, list):
        raise ValueError("--f must be a JSON array")
    decision = decider.decide_simplicial_entries(args.d, entries)
    if decision.accepted:
        return {"verdict": "accepted",
                "g": _strs(decision.certificate.entries)}, OK
    payload = {"verdict": "rejected", "reason": decision.reason}
    if decision.index is not None:
        payload["index"] = decision.index
    return payload, NEGATIVE


def _cmd_msequence(args):
    if args.op == "check":
        g = GVector(len(_parse_int_array(args.g, "--g")),
                    tuple(_parse_int_array(args.g, "--g")))
        check = macaulay.is_m_sequence(g)
        if check.ok:
            return {"ok": True}, OK
        return {"ok": False, "kind": check.kind, "index": check.index}, NEGATIVE
    if args.op == "rep":
        rep = macaulay.macaulay_rep(_parse_int(args.a), args.i)
        return {"a": str(_parse_int(args.a)), "i": args.i,
                "terms": [[str(t), b] for t, b in rep.terms]}, OK
    coords = _parse_int_array(args.x, "--x")
    x = macaulay.OrthantPoint(len(coords), tuple(coords))
    m = macaulay.approximate_point(x)
    return {"x": _strs(coords), "m": _strs(m.entries),
            "distance": str(macaulay.l1_distance(x, m))}, OK


def _cmd_poset(args):
    p = _load_poset(args)
    if args.op == "build":
        return p.to_json(), OK
    if args.op == "flag":
        return {"d": p.d, "flag": flag_vector(p).to_json()}, OK
    if args.op == "eulerian":
        ok = is_eulerian(p)
        return {"eulerian": ok}, OK if ok else NEGATIVE
    if args.op == "gorenstein":
        check = gorenstein.is_gorenstein_star(p)
        if check.ok:
            return {"gorenstein": True}, OK
        ids = p.element_ids()
        witness = sorted(ids[x] for x in check.witness)
        return {"gorenstein": False, "witness-face": witness}, NEGATIVE
    raise ValueError(f"unknown poset op {args.op!r}")


def _cmd_decide_flag(args):
    try:
        doc = json.loads(args.flag)
    except json.JSONDecodeError as exc:
        raise ValueError(f"--flag is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise ValueError("--flag must be a JSON object")
    v = FlagVector.from_json(args.d, doc)
    result = gorenstein.decide_flag_gorenstein(v)
    if result.status == gorenstein.REALIZABLE:
        return {"status": result.status,
                "witness": result.witness.to_json()}, OK
    if result.status == gorenstein.CAP_EXCEEDED:
        return {"status": result.status}, CAPPED
    return {"status": result.status}, NEGATIVE


def _cmd_cd(args):
    if args.op == "words":
        return {"degree": args.degree,
                "words": list(cdalgebra.cd_words(args.degree))}, OK
    if args.op == "from-flag":
        try:
            doc = json.loads(args.flag)
        except json.JSONDecodeError as exc:
            raise ValueError(f"--flag is not valid JSON: {exc}")
        v = FlagVector.from_json(args.d, doc)
        phi = cdalgebra.ab_to_cd(cdalgebra.ab_index(cdalgebra.flag_to_ab(v)))
        return {"cd": _poly_json(phi)}, OK
    if args.op == "expand":
        q = _parse_cd(args.cd)
        return {"ab": _poly_json(cdalgebra.cd_expand(q))}, OK
    if args.op == "stanley":
        sphere = cdalgebra.stanley_sphere(args.word, args.m)
        payload = {"cd": _poly_json(sphere.cd)}
        if args.with_poset:
            payload["poset"] = sphere.poset.to_json()
        return payload, OK
    q = _parse_cd(args.cd)
    point = cdalgebra.cone_coordinates(q)
    return {"words": list(cdalgebra.cd_words(q.degree)[1:]),
            "coords": _strs(point.coords)}, OK


def _cmd_rank5(args):
    inst = rank5.Rank5Instance(_parse_int(args.c2d), _parse_int(args.dc2),
                               _parse_int(args.d2))
    start = time.perf_counter()
    result = rank5.decide_rank5(inst)
    elapsed = time.perf_counter() - start
    print(f"rank5 decide: {elapsed * 1000:.3f} ms", file=sys.stderr)
    if result.feasible:
        return {"verdict": "feasible",
                "x": _strs(result.witness.x),
                "y": _strs(result.witness.y),
                "nodes": result.nodes}, OK
    return {"verdict": "infeasible", "nodes": result.nodes}, NEGATIVE


def _cmd_experiment(args):
    if args.op == "density":
        grid = (_parse_int_array(args.grid, "--grid") if args.grid
                else [10 ** e for e in range(3, 10)])
        exp = experiments.density_experiment(args.k, grid)
        if args.format == "csv":
            lines = ["a,distance"]
            lines += [f"{a},{dist}" for a, dist in exp.rows]
            return "\n".join(lines) + "\n", OK
        payload = {"k": exp.k,
                   "rows": [[str(a), str(dist)] for a, dist in exp.rows],
                   "slope": exp.slope}
        if exp.note:
            payload["note"] = exp.note
        return payload, OK
    ms = (_parse_int_array(args.ms, "--ms") if args.ms else [8, 16, 32, 64])
    data = experiments.ray_convergence(args.degree, ms)
    payload = {"degree": args.degree,
               "distances": {w: [[m, str(dist)] for m, dist in rows]
                             for w, rows in data.items()}}
    return payload, OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fvlab",
        description="Exact face-count invariants: transforms, deciders, "
                    "flag vectors and cd-indices")
    top = parser.add_subparsers(dest="command", required=True)

    transform = top.add_parser("transform", help="f/h/g vector transforms")
    sub = transform.add_subparsers(dest="op", required=True)
    for op, vec in (("f2h", "f"), ("h2f", "h"), ("h2g", "h"), ("g2h", "g")):
        sp = sub.add_parser(op)
        sp.add_argument("--d", type=int, required=True)
        sp.add_argument(f"--{vec}", required=True)
        sp.set_defaults(handler=_cmd_transform)

    stats = top.add_parser("stats", help="scalar statistics")
    sub = stats.add_subparsers(dest="op", required=True)
    sp = sub.add_parser("fatness")
    sp.add_argument("--f", required=True)
    sp.set_defaults(handler=_cmd_stats_fatness)

    decide = top.add_parser("decide", help="membership decisions")
    sub = decide.add_subparsers(dest="op", required=True)
    sp = sub.add_parser("simplicial")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--f", required=True)
    sp.set_defaults(handler=_cmd_decide_simplicial)

    mseq = top.add_parser("msequence", help="M-sequence operations")
    sub = mseq.add_subparsers(dest="op", required=True)
    sp = sub.add_parser("check")
    sp.add_argument("--g", required=True)
    sp.set_defaults(handler=_cmd_msequence)
    sp = sub.add_parser("rep")
    sp.add_argument("--a", required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.set_defaults(handler=_cmd_msequence)
    sp = sub.add_parser("approx")
    sp.add_argument("--x", required=True)
    sp.set_defaults(handler=_cmd_msequence)

    poset = top.add_parser("poset", help="graded poset operations")
    sub = poset.add_subparsers(dest="op", required=True)
    for op in ("build", "flag", "eulerian", "gorenstein"):
        sp = sub.add_parser(op)
        sp.add_argument("--kind", choices=["boolean", "polygon", "dihedral"])
        sp.add_argument("--n", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--d", type=int)
        sp.add_argument("--in", dest="infile", default="-",
                        help="poset JSON file, or - for stdin")
        sp.set_defaults(handler=_cmd_poset)
    sp = sub.add_parser("decide-flag")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--flag", required=True)
    sp.set_defaults(handler=_cmd_decide_flag)

    cd = top.add_parser("cd", help="ab/cd polynomial operations")
    sub = cd.add_subparsers(dest="op", required=True)
    sp = sub.add_parser("from-flag")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--flag", required=True)
    sp.set_defaults(handler=_cmd_cd)
    sp = sub.add_parser("expand")
    sp.add_argument("--cd", required=True)
    sp.set_defaults(handler=_cmd_cd)
    sp = sub.add_parser("stanley")
    sp.add_argument("--word", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--with-poset", action="store_true")
    sp.set_defaults(handler=_cmd_cd)
    sp = sub.add_parser("words")
    sp.add_argument("--degree", type=int, required=True)
    sp.set_defaults(handler=_cmd_cd)
    sp = sub.add_parser("coords")
    sp.add_argument("--cd", required=True)
    sp.set_defaults(handler=_cmd_cd)

    r5 = top.add_parser("rank5", help="rank-5 diophantine decision")
    sub = r5.add_subparsers(dest="op", required=True)
    sp = sub.add_parser("decide")
    sp.add_argument("--c2d", required=True)
    sp.add_argument("--dc2", required=True)
    sp.add_argument("--d2", required=True)
    sp.set_defaults(handler=_cmd_rank5)

    exp = top.add_parser("experiment", help="deterministic experiments")
    sub = exp.add_subparsers(dest="op", required=True)
    sp = sub.add_parser("density")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--grid")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(handler=_cmd_experiment)
    sp = sub.add_parser("convergence")
    sp.add_argument("--degree", type=int, default=4)
    sp.add_argument("--ms")
    sp.set_defaults(handler=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return MALFORMED if exc.code not in (0, None) else 0
    try:
        load_caps()  # fail fast on a malformed FVLAB_CAPS
        payload, code = args.handler(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return CAPPED
    except CdInexpressibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE
    except (ValueError, PosetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
