"""Command-line pipeline: parse a problem spec (JSON), run one command from
the library, emit a deterministic JSON report.

Exit codes: 0 = success / yes-verdict, 1 = clean no-verdict, 2 = input error,
3 = internal theorem violation.

Problem spec format (strict; unknown fields rejected):

    {
      "algebra": {"kind": "su", "n": 3}
                 | {"kind": "sum", "parts": [...]}
                 | {"table": [[[rat, ...], ...], ...],
                    "inner_product": [[rat, ...], ...]?},   # explicit
      "subalgebra": {"name": "maximal_torus" | "zero" | "center"}
                    | {"name": "block_u", "k": 2}
                    | {"name": "span", "vectors": [[rat, ...], ...]},
      "j": [[rat, ...], ...]?,          # on quotient coordinates
      "parabolic_index": 0?,
      "j1": "default" | [[rat, ...], ...]?
    }

Rationals are strings "p/q" or "p"; complex entries in reports are objects
{"re": "p/q", "im": "p/q"}.  All matrices row-major.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exact import (
    GQ, Matrix, Subspace, ExactError, parse_rational, format_rational, vec,
)
from .liealg import LieAlgebra, Subalgebra, quotient as make_quotient
from .catalog import (
    AlgebraSpec, build, build_subalgebra, InvalidSpec,
)
from . import cx
from .cx import (
    ComplexStructure, TorusComplexStructure, TheoremViolation, NotInvariant,
)


class ParseError(Exception):
    pass


class ValidationError(Exception):
    pass


EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_VIOLATION = 3


# ---------------------------------------------------------------------------
# parsing

def _require_keys(obj, allowed, required, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    for k in obj:
        if k not in allowed:
            raise ParseError(f"{where}: unknown field {k!r}")
    for k in required:
        if k not in obj:
            raise ParseError(f"{where}: missing field {k!r}")


def _parse_rat(s, where):
    try:
        return parse_rational(s)
    except ExactError as e:
        raise ParseError(f"{where}: {e}") from None


def _parse_matrix(rows, where):
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError(f"{where}: expected a list of rows")
    out = []
    for i, r in enumerate(rows):
        out.append([GQ(_parse_rat(x, f"{where}[{i}]")) for x in r])
        if len(r) != len(rows[0]):
            raise ParseError(f"{where}: ragged rows")
    return Matrix(out)


def _parse_algebra_spec(obj, where="algebra"):
    if "table" in obj:
        _require_keys(obj, {"table", "inner_product"}, {"table"}, where)
        table = obj["table"]
        n = len(table)
        parsed = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise ParseError(f"{where}.table: expected {n}x{n} of vectors")
            parsed.append([vec(_parse_rat(x, f"{where}.table[{i}][{j}]")
                               for x in v)
                           for j, v in enumerate(row)])
        ip = None
        if "inner_product" in obj:
            ip = _parse_matrix(obj["inner_product"], f"{where}.inner_product")
        return ("table", parsed, ip)
    _require_keys(obj, {"kind", "n", "parts"}, {"kind"}, where)
    kind = obj["kind"]
    if kind == "sum":
        parts = obj.get("parts")
        if not isinstance(parts, list) or not parts:
            raise ParseError(f"{where}: sum needs a nonempty parts list")
        return ("spec", AlgebraSpec("sum", parts=tuple(
            _resolve_spec(_parse_algebra_spec(p, f"{where}.parts"))
            for p in parts)), None)
    if "n" not in obj:
        raise ParseError(f"{where}: {kind} needs n")
    if not isinstance(obj["n"], int):
        raise ParseError(f"{where}: n must be an integer")
    return ("spec", AlgebraSpec(kind, obj["n"]), None)


def _resolve_spec(parsed):
    mode, payload, _ = parsed
    if mode != "spec":
        raise ParseError("explicit tables cannot nest inside a sum")
    return payload


class ProblemSpec:
    def __init__(self, algebra_mode, algebra_payload, inner, sub, j,
                 parabolic_index, j1):
        self.algebra_mode = algebra_mode
        self.algebra_payload = algebra_payload
        self.inner = inner
        self.sub = sub
        self.j = j
        self.parabolic_index = parabolic_index
        self.j1 = j1


def parse(path) -> ProblemSpec:
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read spec file: {e}") from None
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}: {e.msg}") from None
    return parse_obj(raw)


def parse_obj(raw) -> ProblemSpec:
    _require_keys(raw, {"algebra", "subalgebra", "j", "parabolic_index", "j1"},
                  {"algebra"}, "spec")
    mode, payload, inner = _parse_algebra_spec(raw["algebra"])
    sub = raw.get("subalgebra", {"name": "zero"})
    _require_keys(sub, {"name", "k", "vectors"}, {"name"}, "subalgebra")
    if sub["name"] == "span":
        if "vectors" not in sub:
            raise ParseError("subalgebra: span needs vectors")
        sub = dict(sub, vectors=[
            [_parse_rat(x, "subalgebra.vectors") for x in v]
            for v in sub["vectors"]])
    j = None
    if raw.get("j") is not None:
        j = _parse_matrix(raw["j"], "j")
    j1 = raw.get("j1")
    if j1 is not None and j1 != "default":
        j1 = _parse_matrix(j1, "j1")
    pk = raw.get("parabolic_index")
    if pk is not None and not isinstance(pk, int):
        raise ParseError("parabolic_index must be an integer")
    return ProblemSpec(mode, payload, inner, sub, j, pk, j1)


def _build_algebra(ps: ProblemSpec, validate=True):
    if ps.algebra_mode == "spec":
        try:
            return build(ps.algebra_payload), ps.algebra_payload
        except InvalidSpec as e:
            raise ValidationError(str(e)) from None
    g = LieAlgebra(ps.algebra_payload, inner_product=ps.inner, name="explicit")
    if validate:
        res = g.validate()
        if not res.ok:
            raise ValidationError(
                f"explicit table invalid: {res.first_failure()}")
    return g, None


def _build_subalgebra(g, aspec, sub):
    name = sub["name"]
    try:
        if name == "block_u":
            if "k" not in sub:
                raise ValidationError("block_u needs k")
            if aspec is None:
                raise ValidationError("block_u needs a catalog algebra")
            return build_subalgebra(g, aspec, "block_u", k=sub["k"])
        if name == "maximal_torus" and aspec is None:
            raise ValidationError("maximal_torus needs a catalog algebra")
        if name == "span":
            return build_subalgebra(g, aspec, "span", span=sub["vectors"])
        return build_subalgebra(g, aspec, name)
    except ExactError as e:
        raise ValidationError(str(e)) from None


def _resolve_problem(ps: ProblemSpec):
    g, aspec = _build_algebra(ps)
    h = _build_subalgebra(g, aspec, ps.sub)
    quot = make_quotient(g, h)
    return g, h, quot


def _structure(ps, quot) -> ComplexStructure:
    if ps.j is None:
        raise ValidationError("this command needs a j matrix in the spec")
    q = quot.dim
    if ps.j.nrows != q or ps.j.ncols != q:
        raise ValidationError(
            f"j has shape {ps.j.nrows}x{ps.j.ncols}, expected {q}x{q}")
    try:
        return ComplexStructure(quot, ps.j)
    except ExactError as e:
        raise ValidationError(str(e)) from None


# ---------------------------------------------------------------------------
# serialization

def _rat(x):
    return format_rational(x)


def _gq(x: GQ):
    return {"re": _rat(x.re), "im": _rat(x.im)}


def _ser_vec(v):
    if all(x.im == 0 for x in v):
        return [_rat(x.re) for x in v]
    return [_gq(x) for x in v]


def _ser_matrix(m: Matrix):
    return [_ser_vec(r) for r in m.rows]


def _ser_space(s: Subspace):
    return [_ser_vec(b) for b in s.basis_vectors()]


def _ser_ledger(entries):
    return [{"name": e.name, "ok": e.ok, "detail": e.detail} for e in entries]


def _ser_parabolic(i, p):
    return {
        "index": i,
        "positive_set": list(p.positive_set),
        "dim_p": p.space.dim,
        "dim_levi": p.levi_real.dim,
        "dim_nilradical": p.nilradical.dim,
        "levi_basis": _ser_space(p.levi_real.space),
        "nilradical_basis": _ser_space(p.nilradical.space),
    }


_CONVENTIONS = ("canonical bases as documented in the catalog module; "
                "subspaces reported as RREF basis rows; quotient coordinates "
                "are the pivot complement of h in the catalog basis")


def _base_report(command, g, h=None):
    rep = {
        "command": command,
        "algebra": g.name,
        "dim_g": g.dim,
        "conventions": _CONVENTIONS,
    }
    if h is not None:
        rep["dim_h"] = h.dim
        rep["h_basis"] = _ser_space(h.space)
    return rep


# ---------------------------------------------------------------------------
# commands

def cmd_catalog(ps, args):
    g, h, quot = _resolve_problem(ps)
    rep = _base_report("catalog", g, h)
    rep["dim_quotient"] = quot.dim
    rep["validation_ok"] = g.validate().ok
    rep["inner_product"] = _ser_matrix(g.inner_product)
    return rep, EXIT_YES


def cmd_validate(ps, args):
    g, aspec = _build_algebra(ps, validate=False)
    res = g.validate()
    rep = _base_report("validate", g)
    rep["ok"] = res.ok
    rep["failures"] = [str(f) for f in res.failures]
    return rep, EXIT_YES if res.ok else EXIT_NO


def cmd_check(ps, args):
    g, h, quot = _resolve_problem(ps)
    J = _structure(ps, quot)
    rep = _base_report("check", g, h)
    inv = cx.is_invariant(J)
    rep["invariant"] = inv
    if not inv:
        for i, a in enumerate(cx.induced_actions(J)):
            res = a * J.j - J.j * a
            if not res.is_zero():
                rep["invariance_witness"] = {
                    "h_basis_index": i, "commutator": _ser_matrix(res)}
                break
        return rep, EXIT_NO
    integ = cx.is_integrable(J)
    rep["integrable"] = integ
    if not integ:
        a, b, n = cx.nijenhuis_vanishes(J)
        rep["nijenhuis_witness"] = {
            "basis_pair": [a, b], "value": _ser_vec(n)}
        return rep, EXIT_NO
    return rep, EXIT_YES


def cmd_m(ps, args):
    g, h, quot = _resolve_problem(ps)
    J = _structure(ps, quot)
    if not cx.is_invariant(J):
        raise ValidationError("j is not invariant under the isotropy action")
    if not cx.is_integrable(J):
        raise ValidationError("j is not integrable; m is canonical only then")
    md = cx.compute_m(J)
    rep = _base_report("m", g, h)
    rep["dim_m"] = md.m.dim
    rep["m_basis"] = _ser_space(md.m.space)
    rep["fiber_dim"] = md.u.dim
    rep["fiber_basis"] = _ser_space(md.u)
    rep["center_m_basis"] = _ser_space(md.center_m.space)
    return rep, EXIT_YES


def cmd_classify(ps, args):
    g, h, quot = _resolve_problem(ps)
    report = cx.classify(g, h)
    rep = _base_report("classify", g, h)
    rep["exists"] = report.exists
    rep["reason"] = report.reason
    rep["ledger"] = _ser_ledger(report.ledger)
    if report.exists:
        rep["dim_m"] = report.m.m.dim
        rep["m_basis"] = _ser_space(report.m.m.space)
        rep["fiber_dim"] = report.fiber_dim
        rep["parabolics"] = [_ser_parabolic(i, p)
                             for i, p in enumerate(report.parabolics)]
        rep["structure_count_note"] = report.structure_count_note
    return rep, EXIT_YES if report.exists else EXIT_NO


def _select_parabolic(ps, g, h):
    report = cx.classify(g, h)
    if not report.exists:
        raise ValidationError(f"no structures exist: {report.reason}")
    k = ps.parabolic_index
    if k is None:
        raise ValidationError("construct needs parabolic_index")
    if not 0 <= k < len(report.parabolics):
        raise ValidationError(
            f"parabolic_index {k} out of range 0..{len(report.parabolics) - 1}")
    return report, report.parabolics[k]


def _torus_structure(ps, p, quot):
    from .exact import relative_complement
    u = relative_complement(p.levi_real.space, quot.h.space)
    if ps.j1 is None or ps.j1 == "default":
        return None
    if ps.j1.nrows != u.dim or ps.j1.ncols != u.dim:
        raise ValidationError(
            f"j1 has shape {ps.j1.nrows}x{ps.j1.ncols}, expected "
            f"{u.dim}x{u.dim}")
    try:
        return TorusComplexStructure(u, ps.j1)
    except ExactError as e:
        raise ValidationError(str(e)) from None


def cmd_construct(ps, args):
    g, h, quot = _resolve_problem(ps)
    report, p = _select_parabolic(ps, g, h)
    j1 = _torus_structure(ps, p, quot)
    J = cx.construct_J(quot, p, j1)
    _, j1_out = cx.decompose_J(J)
    rep = _base_report("construct", g, h)
    rep["parabolic_index"] = ps.parabolic_index
    rep["parabolic"] = _ser_parabolic(ps.parabolic_index, p)
    rep["j"] = _ser_matrix(J.j)
    rep["j1"] = _ser_matrix(j1_out.j1)
    rep["fiber_basis"] = _ser_space(j1_out.u)
    return rep, EXIT_YES


def cmd_decompose(ps, args):
    g, h, quot = _resolve_problem(ps)
    J = _structure(ps, quot)
    if not cx.is_invariant(J):
        raise ValidationError("j is not invariant under the isotropy action")
    if not cx.is_integrable(J):
        raise ValidationError("j is not integrable; nothing to decompose")
    p, j1 = cx.decompose_J(J)
    report = cx.classify(g, h)
    index = next((i for i, q in enumerate(report.parabolics) if q == p), None)
    rep = _base_report("decompose", g, h)
    rep["parabolic_index"] = index
    rep["parabolic"] = _ser_parabolic(index, p)
    rep["j1"] = _ser_matrix(j1.j1)
    rep["fiber_basis"] = _ser_space(j1.u)
    return rep, EXIT_YES


def cmd_verify(ps, args):
    g, h, quot = _resolve_problem(ps)
    J = _structure(ps, quot)
    if not cx.is_invariant(J):
        raise ValidationError("j is not invariant under the isotropy action")
    if not cx.is_integrable(J):
        raise ValidationError("j is not integrable; ledger undefined")
    ledger = cx.verify_structure(J)
    trials, evaluations = cx.nijenhuis_perturbation_trials(J, seed=args.seed)
    ledger.append(trials)
    rep = _base_report("verify", g, h)
    rep["seed"] = args.seed
    rep["nijenhuis_evaluations"] = evaluations
    rep["ledger"] = _ser_ledger(ledger)
    ok = all(e.ok for e in ledger)
    rep["all_ok"] = ok
    return rep, EXIT_YES if ok else EXIT_VIOLATION


def cmd_symmetric(ps, args):
    g, h, quot = _resolve_problem(ps)
    if ps.j is not None:
        J = _structure(ps, quot)
    else:
        report, p = _select_parabolic(ps, g, h)
        J = cx.construct_J(quot, p, _torus_structure(ps, p, quot))
    if not cx.is_invariant(J):
        raise ValidationError("j is not invariant under the isotropy action")
    verdict = cx.is_symmetric_pair(g, h, J)
    rep = _base_report("symmetric", g, h)
    rep["status"] = verdict.status
    rep["reason"] = verdict.reason
    rep["checks"] = _ser_ledger(verdict.checks)
    return rep, EXIT_YES if verdict.status == "symmetric" else EXIT_NO


COMMANDS = {
    "catalog": cmd_catalog,
    "validate": cmd_validate,
    "check": cmd_check,
    "m": cmd_m,
    "classify": cmd_classify,
    "construct": cmd_construct,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "symmetric": cmd_symmetric,
}


def run(command, ps: ProblemSpec, args):
    return COMMANDS[command](ps, args)


# ---------------------------------------------------------------------------
# entry point

def _argparser():
    ap = argparse.ArgumentParser(
        prog="liecx",
        description="Invariant integrable complex structures on quotients "
                    "of compact Lie algebras: classification, construction, "
                    "verification.")
    ap.add_argument("--spec", required=True, help="problem spec JSON file")
    ap.add_argument("--command", required=True, choices=sorted(COMMANDS))
    ap.add_argument("--parabolic-index", type=int, default=None)
    ap.add_argument("--j1", default=None,
                    help="'default' or a JSON file with a rational matrix")
    ap.add_argument("--seed", type=int, default=0,
                    help="seed for randomized trials in verify")
    ap.add_argument("--out", default=None, help="report path (default stdout)")
    return ap


def _emit(report, out_path):
    text = json.dumps(report, indent=2, sort_keys=False)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None):
    args = _argparser().parse_args(argv)
    try:
        ps = parse(args.spec)
        if args.parabolic_index is not None:
            ps.parabolic_index = args.parabolic_index
        if args.j1 is not None:
            if args.j1 == "default":
                ps.j1 = "default"
            else:
                try:
                    with open(args.j1) as fh:
                        ps.j1 = _parse_matrix(json.load(fh), "j1")
                except (OSError, json.JSONDecodeError) as e:
                    raise ParseError(f"cannot read j1 file: {e}") from None
        report, code = run(args.command, ps, args)
    except (ParseError, ValidationError) as e:
        _emit({"command": args.command, "error": type(e).__name__,
               "message": str(e)}, args.out)
        return EXIT_INPUT
    except TheoremViolation as e:
        _emit({"command": args.command, "error": "TheoremViolation",
               "message": str(e)}, args.out)
        return EXIT_VIOLATION
    except (NotInvariant, ExactError) as e:
        _emit({"command": args.command, "error": type(e).__name__,
               "message": str(e)}, args.out)
        return EXIT_INPUT
    _emit(report, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
