"""Command-line front end.

Two subcommands: `verify` runs a named suite and emits line-delimited
report records; `construct` runs a single constructive operation on file
inputs and emits its serialized output followed by a self-verification
report.  Exit codes: 0 all checks pass, 1 any check failed or errored,
2 inputs failed to parse or certify.  Reports are byte-deterministic for
fixed inputs and seed; ORTHOSET_LAB_THREADS caps worker parallelism
without affecting output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .correspondence import (
    coordinatize,
    decompose_partial_orthometry,
    induce,
    piziak_lambda,
    scalar_ratio,
    transport_linear,
    transport_unitary,
)
from .errors import CertificateError, OrthosetLabError, ParseError
from .hermspace import (
    Subspace,
    adjoint_linear,
    gram_schmidt,
    herm_form,
    is_quasiunitary,
)
from .orthoset import ProbeSet
from .reports import ReportRecord, passed, render
from .suites import SUITE_NAMES, SuiteConfig, run_suite

CONSTRUCT_KINDS = ("gram-schmidt", "project", "adjoint", "induce", "piziak",
                   "coordinatize", "transport", "transport-unitary",
                   "partial-decompose")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="orthoset-lab",
        description="Exact Hermitian spaces over involutive skew fields and "
                    "their ray-level orthogonality structure.")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", help="space file (JSON)")
    common.add_argument("--map", dest="map_path", help="map file (JSON)")
    common.add_argument("--subspace", help="subspace file (JSON)")
    common.add_argument("--probes", type=int, default=256,
                        help="probe count (default 256)")
    common.add_argument("--seed", type=int, default=0,
                        help="probe/sampling seed (default 0)")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--timings", action="store_true",
                        help="include elapsed milliseconds in records "
                             "(breaks byte determinism)")

    v = sub.add_parser("verify", parents=[common],
                       help="run a named verification suite")
    v.add_argument("--suite", required=True, choices=SUITE_NAMES)

    c = sub.add_parser("construct", parents=[common],
                       help="run one constructive operation")
    c.add_argument("kind", choices=CONSTRUCT_KINDS)
    c.add_argument("--vector", help="vector literal (JSON list of scalars)")
    return p


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_inputs(args):
    space = serialize.space_from_json(serialize.load_file(args.space)) \
        if args.space else None
    phi = claimed = None
    if args.map_path:
        phi, claimed = serialize.map_from_json(serialize.load_file(args.map_path))
    subspace = serialize.subspace_from_json(serialize.load_file(args.subspace)) \
        if args.subspace else None
    return space, phi, claimed, subspace


def cmd_verify(args) -> int:
    try:
        space, phi, claimed, subspace = _load_inputs(args)
    except (ParseError, CertificateError, OrthosetLabError) as exc:
        rec = ReportRecord(check="load", status="error",
                           witness={"error": type(exc).__name__,
                                    "message": str(exc)})
        _emit(render([rec], args.timings), args.out)
        return 2
    cfg = SuiteConfig(suite=args.suite, seed=args.seed, count=args.probes,
                      space=space, map=phi, claimed_adjoint=claimed,
                      subspace=subspace)
    records = run_suite(cfg)
    _emit(render(records, args.timings), args.out)
    return 0 if passed(records) else 1


def cmd_construct(args) -> int:
    try:
        space, phi, claimed, subspace = _load_inputs(args)
        raw_subspace = None
        if args.subspace:
            raw_subspace = serialize.basis_vectors_from_json(
                serialize.load_file(args.subspace))
    except (ParseError, CertificateError, OrthosetLabError) as exc:
        rec = ReportRecord(check="load", status="error",
                           witness={"error": type(exc).__name__,
                                    "message": str(exc)})
        _emit(render([rec], args.timings), args.out)
        return 2

    try:
        output, records = _run_construct(args, phi, claimed, subspace,
                                          raw_subspace)
    except OrthosetLabError as exc:
        rec = ReportRecord(
            check=f"construct/{args.kind}", status="error",
            witness={"error": type(exc).__name__, "message": str(exc),
                     **({"data": exc.witness} if exc.witness is not None else {})})
        _emit(render([rec], args.timings), args.out)
        return 2 if isinstance(exc, (ParseError, CertificateError)) else 1

    lines = json.dumps({"output": output}, sort_keys=True,
                       separators=(",", ":"), default=str) + "\n"
    lines += render(records, args.timings)
    _emit(lines, args.out)
    return 0 if passed(records) else 1


def _require(value, what):
    if value is None:
        raise ParseError(f"this construction needs {what}")
    return value


def _run_construct(args, phi, claimed, subspace, raw_subspace):
    kind = args.kind
    seed, count = args.seed, args.probes
    if kind == "gram-schmidt":
        space, vectors = _require(raw_subspace, "--subspace")
        out = gram_schmidt(vectors)
        records = [ReportRecord(
            check="construct/gram-schmidt/orthogonal",
            status="pass" if all(
                not herm_form(a, b)
                for i, a in enumerate(out) for j, b in enumerate(out) if i != j)
            else "fail"),
            ReportRecord(
                check="construct/gram-schmidt/span",
                status="pass" if Subspace.from_vectors(space, out) ==
                Subspace.from_vectors(space, vectors) else "fail")]
        return {"space": serialize.space_to_json(space),
                "vectors": serialize._vector_rows_to_json(out)}, records
    if kind == "project":
        s = _require(subspace, "--subspace")
        if args.vector is None:
            raise ParseError("this construction needs --vector")
        u = serialize.vector_from_json(json.loads(args.vector), s.space)
        u_s, u_p = s.project(u)
        ok = u_s + u_p == u and s.contains(u_s) and \
            not any(herm_form(u_p, b) for b in s.basis) and \
            s.project(u_s) == (u_s, s.space.zero_vector())
        records = [ReportRecord(check="construct/project/decomposition",
                                status="pass" if ok else "fail")]
        return {"onto": serialize._vector_rows_to_json([u_s])[0],
                "perp": serialize._vector_rows_to_json([u_p])[0]}, records
    if kind == "adjoint":
        phi = _require(phi, "--map")
        adj = adjoint_linear(phi)
        ok = all(
            herm_form(phi.apply(phi.domain.basis_vector(i)),
                      phi.codomain.basis_vector(j)) ==
            herm_form(phi.domain.basis_vector(i),
                      adj.apply(phi.codomain.basis_vector(j)))
            for i in range(phi.domain.dim) for j in range(phi.codomain.dim))
        records = [ReportRecord(check="construct/adjoint/defining-identity",
                                status="pass" if ok else "fail")]
        return serialize.map_to_json(adj), records
    if kind == "induce":
        phi = _require(phi, "--map")
        f = induce(phi)
        probes = ProbeSet.generate(phi.domain, seed, min(count, 16))
        samples = [{"x": serialize.ray_to_json(x),
                    "fx": serialize.ray_to_json(f(x))} for x in probes]
        records = [ReportRecord(
            check="construct/induce/zero-to-zero",
            status="pass" if f(probes.rays[0]).is_zero else "fail")]
        return {"samples": samples}, records
    if kind == "piziak":
        phi = _require(phi, "--map")
        probes = ProbeSet.generate(phi.domain, seed, count)
        lam = piziak_lambda(phi, probes)
        return {"lam": serialize.scalar_to_json(lam)}, [
            ReportRecord(check="construct/piziak/scale", status="pass",
                         detail={"lam": serialize.scalar_to_json(lam)})]
    if kind == "coordinatize":
        phi = _require(phi, "--map")
        f = induce(phi)
        probes = ProbeSet.generate(phi.domain, seed, count)
        if phi.is_linear:
            adj = induce(adjoint_linear(phi))
            result = coordinatize(f, phi.domain, phi.codomain, probes,
                                  adjoint=adj)
        else:
            result = coordinatize(f, phi.domain, phi.codomain, probes,
                                  injective=True)
        kappa = scalar_ratio(result.map, phi)
        records = list(result.verified)
        records.append(ReportRecord(
            check="construct/coordinatize/ratio",
            status="pass" if kappa is not None else "fail",
            detail={"kappa": serialize.scalar_to_json(kappa)}
            if kappa is not None else None))
        return serialize.map_to_json(result.map), records
    if kind == "transport":
        phi = _require(phi, "--map")
        tr = transport_linear(phi)
        records = [ReportRecord(check="construct/transport/composed-linear",
                                status="pass" if tr.composed.is_linear
                                else "fail")]
        return {"space": serialize.space_to_json(tr.new_space),
                "tau": serialize.map_to_json(tr.tau),
                "composed": serialize.map_to_json(tr.composed)}, records
    if kind == "transport-unitary":
        phi = _require(phi, "--map")
        cert = is_quasiunitary(phi)
        if cert is None:
            raise OrthosetLabError("map is not quasiunitary")
        tr = transport_unitary(phi, *cert)
        cert2 = is_quasiunitary(tr.composed)
        ok = cert2 is not None and cert2[0].is_identity and \
            cert2[1] == tr.new_space.sfield.one()
        records = [ReportRecord(check="construct/transport-unitary/unitary",
                                status="pass" if ok else "fail")]
        return {"space": serialize.space_to_json(tr.new_space),
                "tau": serialize.map_to_json(tr.tau),
                "composed": serialize.map_to_json(tr.composed)}, records
    if kind == "partial-decompose":
        phi = _require(phi, "--map")
        f = induce(phi)
        if claimed is not None:
            f_adj = induce(claimed)
        elif phi.is_linear:
            f_adj = induce(adjoint_linear(phi))
        else:
            raise ParseError("non-linear maps need adjoint_images in the file")
        p1 = ProbeSet.generate(phi.domain, seed, count)
        p2 = ProbeSet.generate(phi.codomain, seed, count)
        dec = decompose_partial_orthometry(f, f_adj, p1, p2)
        return {"a": serialize.subspace_to_json(dec.a),
                "b": serialize.subspace_to_json(dec.b)}, list(dec.report)
    raise ParseError(f"unknown construction {kind!r}")


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_construct(args)


if __name__ == "__main__":
    sys.exit(main())
