"""Batch command-line front end.

Loads a quiver document, runs one analysis, and prints a text or JSON
report.  Exit codes: 0 success, 1 input error, 2 precondition violation,
3 theorem-violation alarm (never expected on valid inputs).
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import corpus as corpus_mod
from . import derivations as dv
from . import structure as st
from .algebra import build_algebra
from .errors import (
    CharTwoFieldError,
    DisconnectedQuiverError,
    HasRelationsError,
    NotASourceError,
    NotIdempotentError,
    NotLieDerivationError,
    PathAlgError,
    TheoremViolationError,
)
from .fields import FieldError, field_from_name
from .linalg import subspace_eq
from .parser import parse_quiver

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_ALARM = 3

THEOREM_IDS = ("3.4", "4.4", "3.5", "4.3", "4.7")

_PRECONDITION_ERRORS = (
    CharTwoFieldError,
    NotLieDerivationError,
    HasRelationsError,
    DisconnectedQuiverError,
    NotIdempotentError,
    NotASourceError,
)


@dataclass
class RunConfig:
    command: str
    input_path: str = None
    field_name: str = "rat"
    output_format: str = "text"
    map_path: str = None
    kind: str = None
    idempotent: str = None
    theorems: tuple = THEOREM_IDS
    corpus: int = 50
    seed: int = 1
    max_vertices: int = 8
    max_arrows: int = 12
    max_relations: int = 3
    fields: tuple = ("rat", "fp:5")

    def __post_init__(self):
        if self.corpus <= 0 or self.max_vertices <= 0:
            raise ValueError("corpus parameters must be positive")


def _load(config):
    field = field_from_name(config.field_name)
    with open(config.input_path, encoding="utf-8") as fh:
        doc = parse_quiver(fh.read())
    return build_algebra(doc.quiver, doc.relations, field)


def _load_map(config, algebra):
    with open(config.map_path, encoding="utf-8") as fh:
        return dv.LinMap.from_json(algebra, json.load(fh))


def _emit(config, payload, text_lines, out):
    if config.output_format == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=False))
        out.write("\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _element_terms(A, vec):
    f = A.field
    return [[str(A.basis[i]), f.format(c)] for i, c in enumerate(vec) if c]


def _parse_element(A, text):
    """Sum expression over basis path strings: e_1 + 2*alpha - beta.gamma."""
    f = A.field
    vec = A.zero_vector()
    chunks = text.replace("-", "+-").split("+")
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = f.one
        if chunk.startswith("-"):
            sign = f.neg(f.one)
            chunk = chunk[1:].strip()
        coeff = sign
        if "*" in chunk:
            ctext, _, chunk = chunk.partition("*")
            coeff = f.mul(sign, f.parse(ctext))
        try:
            term = A.element_from_path_coeffs({chunk.strip(): coeff})
        except KeyError:
            raise PathAlgError(f"unknown path {chunk.strip()!r} in element expression")
        vec = [f.add(a, b) for a, b in zip(vec, term)]
    return vec


# -- commands -----------------------------------------------------------------


def cmd_info(config, out):
    A = _load(config)
    f = A.field
    triples = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in sorted(A.table[i][j].items()):
                triples.append([i, j, k, f.format(c)])
    payload = {
        "field": f.name,
        "dimension": A.dim,
        "basis": [str(p) for p in A.basis],
        "structure_constants": triples,
    }
    text = [
        f"field: {f.name}",
        f"dimension: {A.dim}",
        "basis: " + " ".join(str(p) for p in A.basis),
        f"nonzero structure constants: {len(triples)}",
    ]
    _emit(config, payload, text, out)
    return EXIT_OK


def _space_command(config, out, name, build):
    A = _load(config)
    space = build(A)
    if isinstance(space, dv.MapSpace):
        basis = [m.to_json()["images"] for m in space.basis_maps()]
        dim = space.dim
    else:
        basis = [_element_terms(A, v) for v in space.rows]
        dim = space.dim
    payload = {"space": name, "dimension": dim, "basis": basis}
    text = [f"{name} dimension: {dim}"]
    for i, b in enumerate(basis):
        text.append(f"  [{i}] {json.dumps(b)}")
    _emit(config, payload, text, out)
    return EXIT_OK


def cmd_center(config, out):
    return _space_command(config, out, "center", dv.center)


def cmd_commutators(config, out):
    return _space_command(config, out, "commutators", dv.commutator_subspace)


def cmd_der(config, out):
    return _space_command(config, out, "derivations", dv.derivation_space)


def cmd_jordan(config, out):
    return _space_command(config, out, "jordan_derivations", dv.jordan_derivation_space)


def cmd_lie(config, out):
    return _space_command(config, out, "lie_derivations", dv.lie_derivation_space)


def cmd_decompose(config, out):
    A = _load(config)
    theta = _load_map(config, A)
    report = dv.standard_decompose(A, theta)
    payload = report.to_json()
    text = [
        "standard decomposition: theta = d + phi",
        "flags: " + json.dumps(payload["flags"]),
        "k: " + json.dumps(payload["k"]),
    ]
    for v in A.quiver.vertices:
        text.append(f"  d(e_{v}) = {A.format_element(report.d.apply(A.idempotent(v)))}")
    _emit(config, payload, text, out)
    return EXIT_OK


def cmd_check(config, out):
    A = _load(config)
    theta = _load_map(config, A)
    checks = {
        "der": dv.is_derivation,
        "jordan": dv.is_jordan_derivation,
        "lie": dv.is_lie_derivation,
    }
    result = checks[config.kind](A, theta)
    _emit(config, {"kind": config.kind, "result": result}, [str(result).lower()], out)
    return EXIT_OK


def cmd_peel(config, out):
    A = _load(config)
    report = st.source_peel_verify(A)
    payload = report.to_json()
    text = [f"levels: {len(report.levels)}", f"ok: {report.ok}"]
    for lv in report.levels:
        text.append(
            f"  source {lv.source}: dims {lv.dims}, faithful_left={lv.m_faithful_left}, "
            f"jordan_checked={lv.jordan_basis_checked}"
        )
    _emit(config, payload, text, out)
    return EXIT_OK if report.ok else EXIT_ALARM


def cmd_wsub(config, out):
    A = _load(config)
    sat = st.saturated_subalgebra(A)
    full = sat.dim == A.dim
    payload = {
        "dimension": sat.dim,
        "algebra_dimension": A.dim,
        "full": full,
        "note": "lower bound; equality certified iff full",
    }
    text = [
        f"saturated subalgebra dimension: {sat.dim} of {A.dim}",
        f"full: {full} (lower bound; equality certified iff full)",
    ]
    _emit(config, payload, text, out)
    return EXIT_OK


def cmd_faithful(config, out):
    A = _load(config)
    e = _parse_element(A, config.idempotent)
    blocks = st.pierce_decompose(A, e)
    results = {}
    for side in ("left", "right"):
        ok, witness = st.bimodule_faithful(blocks, side)
        results[side] = {
            "faithful": ok,
            "witness": _element_terms(A, witness) if witness else None,
        }
    payload = {"blocks": list(blocks.dims), "faithful": results}
    text = [f"block dims (eAe, eA(1-e), (1-e)Ae, (1-e)A(1-e)): {blocks.dims}"]
    for side in ("left", "right"):
        r = results[side]
        w = "" if r["witness"] is None else f", witness {json.dumps(r['witness'])}"
        text.append(f"{side}: faithful={r['faithful']}{w}")
    _emit(config, payload, text, out)
    return EXIT_OK


# -- randomized theorem verification ------------------------------------------


def _verify_34(A):
    return subspace_eq(dv.jordan_derivation_space(A).space, dv.derivation_space(A).space)


def _verify_44(A):
    der = dv.derivation_space(A)
    lie = dv.lie_derivation_space(A)
    phi = dv.central_map_space(A)
    if not subspace_eq(lie.space, der.space.sum(phi.space)):
        return False
    for theta in lie.basis_maps():
        report = dv.standard_decompose(A, theta)
        if not all(report.flags.values()):
            return False
    return True


def _verify_35(A):
    return dv.center_valued_derivations_trivial(A)


def _verify_43(A):
    return st.saturated_subalgebra(A).dim == A.dim


def _verify_47(A):
    for theta in dv.lie_derivation_space(A).basis_maps():
        if not dv.lie_characterization_check(A, theta):
            return False
    for theta in dv.derivation_space(A).basis_maps():
        if not dv.derivation_support_check(A, theta):
            return False
    return True


def _applicable_47(instance):
    from .quiver import is_connected

    return not instance.has_relations and is_connected(instance.quiver)


def cmd_verify(config, out):
    for t in config.theorems:
        if t not in THEOREM_IDS:
            raise FieldError(f"unknown check id {t!r} (known: {', '.join(THEOREM_IDS)})")
    fields = [field_from_name(name) for name in config.fields]
    instances = corpus_mod.generate(
        config.corpus,
        config.seed,
        config.max_vertices,
        config.max_arrows,
        config.max_relations,
    )
    checks = {
        "3.4": _verify_34,
        "4.4": _verify_44,
        "3.5": _verify_35,
        "4.3": _verify_43,
        "4.7": _verify_47,
    }
    results = {t: {"checked": 0, "passed": 0, "skipped": 0} for t in config.theorems}
    failures = []
    for idx, inst in enumerate(instances):
        for field in fields:
            A = inst.build(field)
            for t in config.theorems:
                if t == "4.7" and not _applicable_47(inst):
                    results[t]["skipped"] += 1
                    continue
                results[t]["checked"] += 1
                try:
                    ok = checks[t](A)
                except TheoremViolationError:
                    ok = False
                if ok:
                    results[t]["passed"] += 1
                else:
                    failures.append({"instance": idx, "field": field.name, "check": t})
    all_ok = not failures
    payload = {
        "corpus": config.corpus,
        "seed": config.seed,
        "fields": [f.name for f in fields],
        "results": results,
        "failures": failures,
        "ok": all_ok,
    }
    text = [f"corpus: {config.corpus} instances, seed {config.seed}, fields {', '.join(config.fields)}"]
    for t in config.theorems:
        r = results[t]
        text.append(f"check {t}: {r['passed']}/{r['checked']} passed, {r['skipped']} skipped")
    text.append("ok" if all_ok else f"FAILED: {len(failures)} violations")
    _emit(config, payload, text, out)
    return EXIT_OK if all_ok else EXIT_ALARM


COMMANDS = {
    "info": cmd_info,
    "center": cmd_center,
    "commutators": cmd_commutators,
    "der": cmd_der,
    "jordan": cmd_jordan,
    "lie": cmd_lie,
    "decompose": cmd_decompose,
    "check": cmd_check,
    "peel": cmd_peel,
    "wsub": cmd_wsub,
    "faithful": cmd_faithful,
    "verify": cmd_verify,
}


def run(config, out=None):
    """Execute one command; returns the process exit status."""
    out = out or sys.stdout
    try:
        return COMMANDS[config.command](config, out)
    except _PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except TheoremViolationError as exc:
        print(f"ALARM: {exc}", file=sys.stderr)
        return EXIT_ALARM
    except (PathAlgError, FieldError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pathalg",
        description="Exact derivation structure of bound quiver algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="quiver document path")
        p.add_argument("--field", default="rat", help="rat or fp:<p> (default rat)")
        p.add_argument("--format", default="text", choices=("text", "json"))

    for name in ("info", "center", "commutators", "der", "jordan", "lie", "peel", "wsub"):
        common(sub.add_parser(name))
    p = sub.add_parser("decompose")
    common(p)
    p.add_argument("--map", required=True, dest="map_path", help="map file (JSON)")
    p = sub.add_parser("check")
    common(p)
    p.add_argument("--map", required=True, dest="map_path")
    p.add_argument("--kind", required=True, choices=("der", "jordan", "lie"))
    p = sub.add_parser("faithful")
    common(p)
    p.add_argument("--idempotent", required=True, help="element expression, e.g. e_1+e_2")
    p = sub.add_parser("verify")
    common(p, needs_input=False)
    p.add_argument("--theorems", default=",".join(THEOREM_IDS))
    p.add_argument("--corpus", type=int, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--max-arrows", type=int, default=12)
    p.add_argument("--max-relations", type=int, default=3)
    p.add_argument("--fields", default="rat,fp:5")
    return parser


def config_from_args(args):
    kwargs = {
        "command": args.command,
        "field_name": args.field,
        "output_format": args.format,
        "input_path": getattr(args, "input", None),
        "map_path": getattr(args, "map_path", None),
        "kind": getattr(args, "kind", None),
        "idempotent": getattr(args, "idempotent", None),
    }
    if args.command == "verify":
        kwargs.update(
            theorems=tuple(t.strip() for t in args.theorems.split(",") if t.strip()),
            corpus=args.corpus,
            seed=args.seed,
            max_vertices=args.max_vertices,
            max_arrows=args.max_arrows,
            max_relations=args.max_relations,
            fields=tuple(f.strip() for f in args.fields.split(",") if f.strip()),
        )
    return RunConfig(**kwargs)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
