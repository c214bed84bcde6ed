"""``corank``: batch front end over JSON problem documents.

Exit codes: 0 ok, 1 verification found a failure, 2 invalid input,
3 inconclusive (a capped search ran out of room).
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .documents import (
    DocumentError,
    dumps,
    extension_inputs,
    load_problem,
    parse_json,
    polys,
    presentation_from_document,
    presentation_to_document,
    rep_from_document,
    rep_to_document,
    result_document,
)
from .extension import compose_extension, present_quotient_subalgebra, restrict_ideal_generators
from .generation import GenerationSpec, finite_generating_set, render, rewrite_member
from .membership import SearchTooLarge
from .presentation import present_right_ideal, verify_presentation
from .quotient_rep import IdealClass, InvalidRepresentation, co_rank_invariants, ideal_in_subalgebra, is_member, validate_rep

COMMANDS = ("present", "generate", "reduce", "restrict", "compose", "verify", "check-input")
EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_INCONCLUSIVE = 0, 1, 2, 3

# per-command defaults; the document's "parameters" block overrides these, flags override both
DEFAULTS = {
    "present": {"deg_cap": 4, "simplify": False},
    "generate": {},
    "reduce": {},
    "restrict": {"deg_cap": 4},
    "compose": {"deg_cap": 3},
    "verify": {"deg_cap": 5, "samples": 20, "seed": 0},
    "check-input": {},
}


class _Inconclusive(Exception):
    pass


def _need(doc, kind, command):
    if doc["kind"] != kind:
        raise DocumentError([f"{command} expects a {kind} document, got {doc['kind']}"])


def _rep(doc, kind, command):
    _need(doc, kind, command)
    rep = rep_from_document(doc)
    validate_rep(rep)
    return rep


def co_rank_text(rep) -> str:
    inv = co_rank_invariants(rep)
    text = f"co-rank {len(inv)}"
    torsion = [d for d in inv if d != 0]
    if torsion:
        text += ", torsion invariants " + " ".join(str(d) for d in torsion)
    return text


def _present(doc, params, extra):
    rep = _rep(doc, "cyclic_module", "present")
    ring, X = rep.ring, rep.alphabet
    gens = polys(doc.get("ideal_generators", []), X, ring, "ideal_generators")
    if gens:
        pres = present_quotient_subalgebra(rep, gens, params["deg_cap"], params["simplify"])
        if pres is None:
            raise _Inconclusive("restriction search exhausted its cap")
    else:
        pres = present_right_ideal(rep, doc.get("u_vectors"), simplify=params["simplify"])
    summary = f"{len(pres.witnesses)} generators, {len(pres.relations)} relations"
    return summary, {"classification": validate_rep(rep).label, "presentation": presentation_to_document(pres)}


def _generate(doc, params, extra):
    rep = _rep(doc, "algebra", "generate")
    if "y_subset" not in doc:
        raise DocumentError(["generate needs y_subset"])
    spec = GenerationSpec(rep, doc["y_subset"])
    gs = finite_generating_set(spec)
    rewrites = []
    for i, p in enumerate(polys(doc.get("rewrite_targets", []), rep.alphabet, rep.ring, "rewrite_targets")):
        if not is_member(rep, p):
            raise DocumentError([f"rewrite_targets/{i}: {p} is not a member"])
        rewrites.append({"target": str(p), "combination": render(rewrite_member(spec, gs, p), rep.ring)})
    outputs = {
        "generators": [str(g) for g in gs.generators],
        "provenance": gs.provenance(rep.alphabet),
        "dropped": gs.dropped,
        "rewrites": rewrites,
    }
    return f"{len(gs.generators)} generators ({len(gs.u_part)} U, {len(gs.z_part)} Z)", outputs


def _reduce(doc, params, extra):
    rep = _rep(doc, "algebra", "reduce")
    red = ideal_in_subalgebra(rep)
    ring = rep.ring
    outputs = {
        "ideal": [[ring.to_json(a) for a in v] for v in red.ideal.basis],
        "representation": rep_to_document(red.rep),
        "classification": validate_rep(red.rep).label,
    }
    return f"quotient rank {red.rep.rank}, ideal basis size {len(red.ideal.basis)}", outputs


def _restrict(doc, params, extra):
    rep = _rep(doc, "cyclic_module", "restrict")
    gens = polys(doc.get("ideal_generators", []), rep.alphabet, rep.ring, "ideal_generators")
    pres = present_right_ideal(rep, doc.get("u_vectors"))
    res = restrict_ideal_generators(rep, pres, gens, params["deg_cap"], doc.get("u_vectors"))
    if res is None:
        raise _Inconclusive("restriction search exhausted its cap")
    certs = []
    for c in res.certificates:
        certs.append(" + ".join(f"({s.left})*g{s.gen_index + 1}*({s.right})" for s in c.summands))
    outputs = {
        "generators": [str(g) for g in res.generators],
        "witnesses": [str(w) for w in res.witnesses],
        "certificates": certs,
        "pruned": [{"candidate": c, "left": u, "generator": gi + 1, "right": v} for c, u, gi, v in res.pruned],
    }
    return f"{len(res.generators)} generators over R", outputs


def _compose(doc, params, extra):
    _need(doc, "extension", "compose")
    X, r_gens, rels, known, ring = extension_inputs(doc)
    ext = compose_extension(X, r_gens, rels, params["deg_cap"], known, ring)
    if ext is None:
        raise _Inconclusive(f"no witness found with cap {params['deg_cap']}")
    outputs = {
        "i_generators": [str(g) for g in ext.i_generators],
        "presentation": presentation_to_document(ext.presentation),
        "witnesses": [{"x": x, "y": y, "side": side, "p": str(p)} for (x, y, side), p in ext.witnesses.items()],
    }
    return f"{len(ext.i_generators)} ideal generators", outputs


def _verify(doc, params, extra):
    rep = _rep(doc, "cyclic_module", "verify")
    if extra.get("presentation") is not None:
        pres = presentation_from_document(extra["presentation"], rep.ring, rep.alphabet)
    else:
        pres = present_right_ideal(rep, doc.get("u_vectors"))
    report = verify_presentation(rep, pres, params["deg_cap"], params["samples"], params["seed"], doc.get("u_vectors"))
    summary = (
        f"sound={str(report.sound).lower()}, identity {report.identity_passed}/{report.samples}, "
        f"complete={str(report.complete).lower()}"
    )
    return summary, report.as_dict(), report.ok


def _check_input(doc, params, extra):
    if doc["kind"] == "extension":
        X, r_gens, rels, known, ring = extension_inputs(doc)
        return f"extension data, {len(r_gens)} generators, {len(rels)} relations", {"valid": True}
    rep = rep_from_document(doc)
    cls = validate_rep(rep)
    summary = f"{cls.label}, {co_rank_text(rep)}"
    inv = [rep.ring.to_json(d) for d in co_rank_invariants(rep)]
    outputs = {"valid": True, "classification": cls.label, "co_rank_invariants": inv}
    return summary, outputs


HANDLERS = {
    "present": _present,
    "generate": _generate,
    "reduce": _reduce,
    "restrict": _restrict,
    "compose": _compose,
    "verify": _verify,
    "check-input": _check_input,
}


def dispatch(command: str, text: str, *, input_name: str | None = None, overrides: dict | None = None,
             extra: dict | None = None) -> tuple[dict, int]:
    """Run ``command`` on the problem document ``text``; returns ``(result, exit_code)``."""
    if command not in HANDLERS:
        raise ValueError(f"unknown command {command!r}")
    params = dict(DEFAULTS[command])
    try:
        doc = load_problem(text)
        for k, v in doc.get("parameters", {}).items():
            if k in params:
                params[k] = v
        for k, v in (overrides or {}).items():
            if v is not None and k in params:
                params[k] = v
        out = HANDLERS[command](doc, params, extra or {})
    except (DocumentError, InvalidRepresentation) as e:
        diag = e.messages if isinstance(e, DocumentError) else e.violations
        return result_document(command, "invalid_input", input_name=input_name, parameters=params,
                               summary="invalid input", diagnostics=diag), EXIT_INVALID
    except (_Inconclusive, SearchTooLarge) as e:
        return result_document(command, "inconclusive", input_name=input_name, parameters=params,
                               summary="inconclusive", diagnostics=[str(e) or "search too large"]), EXIT_INCONCLUSIVE
    except (ValueError, TypeError) as e:
        return result_document(command, "invalid_input", input_name=input_name, parameters=params,
                               summary="invalid input", diagnostics=[str(e)]), EXIT_INVALID
    summary, outputs, *passed = out
    code = EXIT_OK if not passed or passed[0] else EXIT_FAILED
    return result_document(command, "ok", input_name=input_name, parameters=params, summary=summary,
                           outputs=outputs), code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="corank", description="Presentations and generating sets for finite co-rank ideals and subalgebras.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="problem document (JSON), or - for stdin")
        p.add_argument("--out", help="write the result document here instead of stdout")
        p.add_argument("--timings", action="store_true", help="add wall-clock timings (breaks byte-determinism)")
        if "deg_cap" in DEFAULTS[name]:
            p.add_argument("--deg-cap", type=int, dest="deg_cap")
        if name == "present":
            p.add_argument("--simplify", action="store_true", default=None)
        if name == "verify":
            p.add_argument("--samples", type=int)
            p.add_argument("--seed", type=int)
            p.add_argument("--presentation", help="presentation or present-result document to check")
    return ap


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    name = "-" if args.input == "-" else os.path.basename(args.input)
    overrides = {k: getattr(args, k, None) for k in ("deg_cap", "samples", "seed", "simplify")}
    extra = {}
    try:
        text = _read(args.input)
        if getattr(args, "presentation", None):
            extra["presentation"] = parse_json(_read(args.presentation))
    except (OSError, DocumentError) as e:
        doc = result_document(args.command, "invalid_input", input_name=name, summary="invalid input",
                              diagnostics=[str(e)])
        sys.stdout.write(dumps(doc))
        print(f"corank {args.command}: {e}", file=sys.stderr)
        return EXIT_INVALID
    start = time.perf_counter()
    result, code = dispatch(args.command, text, input_name=name, overrides=overrides, extra=extra)
    if args.timings:
        result["timings"] = {"total_s": round(time.perf_counter() - start, 6)}
    summary = result.get("summary", "")
    for d in result.get("diagnostics", []):
        summary += f"\n  {d}"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(result))
        print(summary)
    else:
        sys.stdout.write(dumps(result))
        print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
