"""Named verification suites.

Each suite turns one family of structural statements into report records:
randomized where the statement quantifies over an infinite domain, exact
basis computations where it reduces to finitely many scalar identities.
Every random draw is derived from the configured seed plus the task name,
so reports are byte-stable under reruns and under any thread budget.

The CLI exposes these by name; the acceptance tests call the same
functions with their pinned sample counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import sampling
from .correspondence import (
    induce,
    partial_wigner,
    piziak_lambda,
    scalar_ratio,
    transport_linear,
    transport_partial,
    transport_unitary,
    wigner_reconstruct,
)
from .errors import (
    NotOrthoisoError,
    OrthosetLabError,
    PreconditionError,
)
from .hermspace import (
    HermitianSpace,
    SemilinearMap,
    Subspace,
    adjoint_linear,
    compose_maps,
    generalized_inverse,
    gram_schmidt,
    herm_form,
    invert_semilinear,
    is_quasiunitary,
    quasi_generalized_inverse,
    random_nonzero_vector,
    random_subspace,
    random_vector,
    standard_space,
)
from .orthoset import (
    ProbeSet,
    adjoint_pair_holds,
    check_axioms,
    dacey_witness,
    linearity_witness,
    perp_closure,
    ray_grid,
    ray_map_rank,
    ray_of,
    ray_payload,
    ray_perp,
    separating_ray,
    verify_adjoint_pair,
)
from .reports import ReportRecord, run_tasks
from .scalars import GaussianRational, RationalQuaternion, star_scalar
from .starfields import SfieldMorphism, StarSfield

SUITE_NAMES = ("axioms", "linearity", "dacey", "frechet", "adjoint",
               "piziak", "wigner", "transport", "partial", "all")


@dataclass
class SuiteConfig:
    suite: str
    seed: int = 0
    count: int = 256
    space: HermitianSpace | None = None
    map: SemilinearMap | None = None
    claimed_adjoint: SemilinearMap | None = None
    subspace: Subspace | None = None
    # sample budgets; the acceptance criteria pin the defaults
    form_samples: int = 1000
    bases: int = 100
    splits: int = 100
    linear_maps: int = 50
    quasiunitary_maps: int = 50
    wigner_maps: int = 30
    transport_maps: int = 20
    partial_maps: int = 10
    ray_pairs: int = 500


def default_spaces(sfield: StarSfield) -> list[HermitianSpace]:
    """A standard space plus one with a nontrivial certified Gram matrix."""
    if sfield is StarSfield.Q:
        return [standard_space(sfield, 4),
                HermitianSpace.create(sfield, 2, [[2, 1], [1, 1]])]
    if sfield is StarSfield.QI:
        i = GaussianRational(0, 1)
        return [standard_space(sfield, 4),
                HermitianSpace.create(sfield, 2, [[2, i], [-i, 1]])]
    return [standard_space(sfield, 4),
            HermitianSpace.create(sfield, 3,
                                  [[1, 0, 0], [0, 2, 0], [0, 0, 3]])]


def _rng(cfg: SuiteConfig, *parts) -> random.Random:
    return random.Random(":".join([str(cfg.seed)] + [str(p) for p in parts]))


def _ok(check, detail=None) -> ReportRecord:
    return ReportRecord(check=check, status="pass", detail=detail)


def _fail(check, witness) -> ReportRecord:
    return ReportRecord(check=check, status="fail", witness=witness)


def _law(check, witness, detail=None) -> ReportRecord:
    if witness is None:
        return _ok(check, detail)
    return _fail(check, witness)


# ---------------------------------------------------------------- axioms

def form_axiom_records(space: HermitianSpace, rng, samples: int,
                       prefix: str) -> list[ReportRecord]:
    """Sesquilinearity, symmetry and anisotropy on random data, exactly."""
    sf = space.sfield
    w_first = w_second = w_sym = w_sides = w_aniso = None
    for t in range(samples):
        u = random_vector(space, rng)
        v = random_vector(space, rng)
        w = random_vector(space, rng)
        alpha = sf.random_scalar(rng)
        beta = sf.random_scalar(rng)
        if w_first is None and \
                herm_form(alpha * u + beta * v, w) != \
                alpha * herm_form(u, w) + beta * herm_form(v, w):
            w_first = {"trial": t}
        if w_second is None and \
                herm_form(w, alpha * u + beta * v) != \
                herm_form(w, u) * star_scalar(alpha) + \
                herm_form(w, v) * star_scalar(beta):
            w_second = {"trial": t}
        if w_sym is None and herm_form(u, v) != star_scalar(herm_form(v, u)):
            w_sym = {"trial": t}
        if w_sides is None and \
                herm_form(alpha * u, beta * v) != \
                alpha * herm_form(u, v) * star_scalar(beta):
            w_sides = {"trial": t}
        if w_aniso is None and space.dim > 0:
            x = random_nonzero_vector(space, rng)
            if not herm_form(x, x):
                w_aniso = {"trial": t, "vector": [str(c) for c in x.coords]}
    detail = {"samples": samples}
    return [
        _law(f"{prefix}/sesquilinear-first", w_first, detail),
        _law(f"{prefix}/sesquilinear-second", w_second, detail),
        _law(f"{prefix}/symmetry", w_sym, detail),
        _law(f"{prefix}/two-sided", w_sides, detail),
        _law(f"{prefix}/anisotropy", w_aniso, detail),
    ]


def suite_axioms(cfg: SuiteConfig) -> list:
    tasks = []
    spaces = [cfg.space] if cfg.space is not None else None
    for sf in StarSfield:
        use = spaces if spaces else default_spaces(sf)
        if cfg.space is not None and cfg.space.sfield is not sf:
            continue
        # the sample budget is per sfield, split across its spaces
        per_space = max(1, cfg.form_samples // len(use))
        for si, space in enumerate(use):
            name = f"axioms/{sf.value}/{si}"
            tasks.append((name, _axioms_task(cfg, space, name, per_space)))
    return tasks


def _axioms_task(cfg, space, name, samples):
    def run():
        rng = _rng(cfg, name)
        records = form_axiom_records(space, rng, samples, name)
        probes = ProbeSet.generate(space, cfg.seed, cfg.count)
        for rec in check_axioms(space, probes):
            rec.check = f"{name}/{rec.check}"
            records.append(rec)
        return records
    return run


# ---------------------------------------------------------- gram-schmidt

def gram_schmidt_records(sfield: StarSfield, rng, bases: int,
                         prefix: str) -> list[ReportRecord]:
    w_orth = w_span = w_first = None
    for t in range(bases):
        n = rng.randint(2, 6)
        space = standard_space(sfield, n)
        vecs = []
        while True:
            vecs = [random_vector(space, rng) for _ in range(n)]
            if Subspace.from_vectors(space, vecs).dim == n:
                break
        out = gram_schmidt(vecs)
        if w_first is None and out[0] != vecs[0]:
            w_first = {"trial": t}
        for a in range(n):
            for b in range(n):
                if a != b and herm_form(out[a], out[b]):
                    w_orth = w_orth or {"trial": t, "pair": [a, b]}
        if w_span is None and Subspace.from_vectors(space, out) != \
                Subspace.from_vectors(space, vecs):
            w_span = {"trial": t}
    detail = {"bases": bases}
    return [
        _law(f"{prefix}/pairwise-orthogonal", w_orth, detail),
        _law(f"{prefix}/span-preserved", w_span, detail),
        _law(f"{prefix}/first-vector-kept", w_first, detail),
    ]


# ------------------------------------------------------- dacey/splitting

def splitting_records(sfield: StarSfield, rng, trials: int,
                      prefix: str) -> list[ReportRecord]:
    w_split = w_ortho = w_idem = w_dims = w_closed = w_dacey = None
    for t in range(trials):
        n = rng.randint(2, 6)
        space = standard_space(sfield, n)
        s = random_subspace(space, rng.randint(0, n), rng)
        u = random_vector(space, rng)
        u_s, u_p = s.project(u)
        if w_split is None and (u_s + u_p != u or not s.contains(u_s)):
            w_split = {"trial": t}
        if w_ortho is None and any(herm_form(u_p, b) for b in s.basis):
            w_ortho = {"trial": t}
        if w_idem is None and s.project(u_s) != (u_s, space.zero_vector()):
            w_idem = {"trial": t}
        perp = s.orthocomplement()
        if w_dims is None and s.dim + perp.dim != n:
            w_dims = {"trial": t}
        if w_closed is None and perp.orthocomplement() != s:
            w_closed = {"trial": t}
        if w_dacey is None and n > 0:
            x = ray_of(random_nonzero_vector(space, rng))
            y, z = dacey_witness(s, x)
            ok = (y.is_zero or s.contains(y.rep)) and \
                 (z.is_zero or perp.contains(z.rep)) and \
                 perp_closure([y, z]).contains(x.rep)
            if not ok:
                w_dacey = {"trial": t, "x": ray_payload(x)}
    detail = {"trials": trials}
    return [
        _law(f"{prefix}/decomposition", w_split, detail),
        _law(f"{prefix}/perp-part-orthogonal", w_ortho, detail),
        _law(f"{prefix}/idempotent", w_idem, detail),
        _law(f"{prefix}/dim-additivity", w_dims, detail),
        _law(f"{prefix}/double-complement", w_closed, detail),
        _law(f"{prefix}/dacey-witness", w_dacey, detail),
    ]


# --------------------------------------------------------------- adjoint

def adjoint_map_records(phi: SemilinearMap, seed: int, count: int,
                        prefix: str,
                        claimed: SemilinearMap | None = None) -> list[ReportRecord]:
    records = []
    h1, h2 = phi.domain, phi.codomain
    adj = adjoint_linear(phi)
    w = None
    for i in range(h1.dim):
        for j in range(h2.dim):
            lhs = herm_form(phi.apply(h1.basis_vector(i)), h2.basis_vector(j))
            rhs = herm_form(h1.basis_vector(i), adj.apply(h2.basis_vector(j)))
            if lhs != rhs:
                w = {"i": i, "j": j}
    records.append(_law(f"{prefix}/defining-identity", w))
    records.append(_law(f"{prefix}/involution",
                        None if adjoint_linear(adj) == phi else {}))
    partner = adj if claimed is None else claimed
    probes1 = ProbeSet.generate(h1, seed, count)
    probes2 = ProbeSet.generate(h2, seed, count)
    for rec in verify_adjoint_pair(induce(phi), induce(partner),
                                   probes1, probes2):
        rec.check = f"{prefix}/{rec.check}"
        records.append(rec)
    records.append(_law(
        f"{prefix}/rank-equal",
        None if ray_map_rank(induce(phi)) == ray_map_rank(induce(adj))
        else {"rank_f": ray_map_rank(induce(phi)),
              "rank_adj": ray_map_rank(induce(adj))}))
    return records


def adjoint_random_records(sfield: StarSfield, cfg: SuiteConfig, rng,
                           prefix: str) -> list[ReportRecord]:
    records = []
    w_contra = w_unitary = None
    for t in range(cfg.linear_maps):
        d0, d1, d2 = (rng.randint(2, 5) for _ in range(3))
        h0, h1, h2 = (standard_space(sfield, d) for d in (d0, d1, d2))
        phi = sampling.random_linear_map(h1, h2, rng)
        if t < 3:  # full per-map reports for a few; the rest aggregate
            records.extend(adjoint_map_records(phi, cfg.seed, cfg.count,
                                               f"{prefix}/map{t:03d}"))
        else:
            adj = adjoint_linear(phi)
            defining = all(
                herm_form(phi.apply(h1.basis_vector(i)), h2.basis_vector(j)) ==
                herm_form(h1.basis_vector(i), adj.apply(h2.basis_vector(j)))
                for i in range(h1.dim) for j in range(h2.dim))
            ok = defining and adjoint_linear(adj) == phi and \
                adjoint_pair_holds(induce(phi), induce(adj),
                                   ProbeSet.generate(h1, cfg.seed, cfg.count),
                                   ProbeSet.generate(h2, cfg.seed, cfg.count)) \
                and ray_map_rank(induce(phi)) == ray_map_rank(induce(adj))
            if not ok:
                records.append(_fail(f"{prefix}/map{t:03d}", {"trial": t}))
        psi = sampling.random_linear_map(h0, h1, rng)
        if w_contra is None and \
                adjoint_linear(compose_maps(phi, psi)) != \
                compose_maps(adjoint_linear(psi), adjoint_linear(phi)):
            w_contra = {"trial": t}
        # unitary <-> the inverse is the adjoint, on bijective maps
        space = standard_space(sfield, rng.randint(2, 5))
        if t % 2 == 0:
            bij = sampling.random_unitary(space, rng)
        else:
            bij = sampling.random_invertible_map(space, rng)
        cert = is_quasiunitary(bij)
        unit = cert is not None and cert[0].is_identity and \
            cert[1] == sfield.one()
        pair = adjoint_linear(bij) == invert_semilinear(bij)
        if w_unitary is None and unit != pair:
            w_unitary = {"trial": t, "certified": unit, "adjoint-inverse": pair}
    records.append(_law(f"{prefix}/contravariance", w_contra,
                        {"maps": cfg.linear_maps}))
    records.append(_law(f"{prefix}/unitary-iff-adjoint-pair", w_unitary,
                        {"maps": cfg.linear_maps}))
    return records


# ---------------------------------------------------------------- piziak

def piziak_records(sfield: StarSfield, cfg: SuiteConfig, rng,
                   prefix: str) -> list[ReportRecord]:
    records = []
    w_lam = w_match = w_left = None
    for t in range(cfg.quasiunitary_maps):
        n = rng.randint(2, 5)
        space = standard_space(sfield, n)
        phi = sampling.random_quasiunitary(space, rng)
        try:
            lam = piziak_lambda(phi)
        except OrthosetLabError as exc:
            w_lam = w_lam or {"trial": t, "error": str(exc)}
            continue
        cert = is_quasiunitary(phi)
        if w_match is None and (cert is None or cert[1] != lam):
            w_match = {"trial": t}
        if sfield is StarSfield.HQ and w_left is None:
            q = RationalQuaternion(rng.randint(-3, 3), rng.randint(-3, 3),
                                   rng.randint(-3, 3), rng.randint(-3, 3))
            if q:
                lmul = sampling.left_scalar_map(space, q)
                if piziak_lambda(lmul) != space.sfield.coerce(q.norm()):
                    w_left = {"trial": t, "q": str(q)}
    records.append(_law(f"{prefix}/scale-extraction", w_lam,
                        {"maps": cfg.quasiunitary_maps}))
    records.append(_law(f"{prefix}/matches-certificate", w_match))
    if sfield is StarSfield.HQ:
        records.append(_law(f"{prefix}/left-multiplication-norm", w_left))
    return records


# ---------------------------------------------------------------- wigner

def wigner_records(sfield: StarSfield, cfg: SuiteConfig, rng,
                   prefix: str) -> list[ReportRecord]:
    records = []
    w_round = None
    for t in range(cfg.wigner_maps):
        n = rng.randint(3, 5)
        space = standard_space(sfield, n)
        phi0 = sampling.random_quasiunitary(space, rng)
        probes = ProbeSet.generate(space, cfg.seed, cfg.count)
        try:
            wig = wigner_reconstruct(induce(phi0),
                                     induce(invert_semilinear(phi0)),
                                     space, space, probes)
        except OrthosetLabError as exc:
            w_round = w_round or {"trial": t, "error": str(exc)}
            continue
        kappa = scalar_ratio(wig.coordinatization.map, phi0)
        cert = is_quasiunitary(wig.coordinatization.map)
        if w_round is None and (kappa is None or cert is None):
            w_round = {"trial": t}
    records.append(_law(f"{prefix}/round-trip", w_round,
                        {"maps": cfg.wigner_maps}))
    records.append(_negative_control(sfield, cfg, prefix))
    return records


def _negative_control(sfield: StarSfield, cfg: SuiteConfig,
                      prefix: str) -> ReportRecord:
    """A non-unitary invertible shear must fail the orthoiso pre-check
    with an explicit witness."""
    space = standard_space(sfield, 3)
    shear = SemilinearMap(
        space, space, SfieldMorphism.identity(sfield),
        (space.basis_vector(0),
         space.basis_vector(0) + space.basis_vector(1),
         space.basis_vector(2)))
    probes = ProbeSet.generate(space, cfg.seed, cfg.count)
    pair = verify_adjoint_pair(induce(shear),
                               induce(invert_semilinear(shear)),
                               probes, probes)
    failed_with_witness = any(r.status == "fail" and r.witness for r in pair)
    raised = False
    try:
        wigner_reconstruct(induce(shear), induce(invert_semilinear(shear)),
                           space, space, probes)
    except NotOrthoisoError as exc:
        raised = exc.witness is not None
    if failed_with_witness and raised:
        return _ok(f"{prefix}/negative-control",
                   {"witness-shown": pair[0].witness["first"]["x"]})
    return _fail(f"{prefix}/negative-control",
                 {"pair-failed": failed_with_witness, "raised": raised})


# ------------------------------------------------------------- transport

def transport_records(sfield: StarSfield, cfg: SuiteConfig, rng,
                      prefix: str) -> list[ReportRecord]:
    records = []
    w_lin = w_tau = w_unit = None
    for t in range(cfg.transport_maps):
        n = rng.randint(2, 5)
        space = standard_space(sfield, n)
        # a quasilinear map whose twist is as wild as the sfield allows
        plain = sampling.random_invertible_map(space, rng)
        if sfield is StarSfield.QI:
            quasi = compose_maps(sampling.conjugation_map(space), plain)
        elif sfield is StarSfield.HQ:
            q = RationalQuaternion(1, rng.randint(-2, 2), rng.randint(-2, 2),
                                   rng.randint(-2, 2))
            quasi = compose_maps(sampling.left_scalar_map(space, q), plain)
        else:
            quasi = plain
        tr = transport_linear(quasi)
        if w_lin is None and not tr.composed.is_linear:
            w_lin = {"trial": t}
        probes = ProbeSet.generate(space, cfg.seed, cfg.count)
        tau_map = induce(tr.tau)
        images = [tau_map(x) for x in probes]
        before = ray_grid(space, list(probes), list(probes))
        after = ray_grid(tr.new_space, images, images)
        if w_tau is None and (before != after).any():
            w_tau = {"trial": t}
        qu = sampling.random_quasiunitary(space, rng)
        sigma, lam = is_quasiunitary(qu)
        tru = transport_unitary(qu, sigma, lam)
        cert = is_quasiunitary(tru.composed)
        if w_unit is None and (cert is None or not cert[0].is_identity
                               or cert[1] != sfield.one()):
            w_unit = {"trial": t}
    detail = {"maps": cfg.transport_maps}
    records.append(_law(f"{prefix}/composed-linear", w_lin, detail))
    records.append(_law(f"{prefix}/tau-orthoiso", w_tau, detail))
    records.append(_law(f"{prefix}/unitary-after-transport", w_unit, detail))
    return records


# ---------------------------------------------------------------- partial

def partial_records(sfield: StarSfield, cfg: SuiteConfig, rng,
                    prefix: str) -> list[ReportRecord]:
    records = []
    w_dec = w_inv = w_round = None
    for t in range(cfg.partial_maps):
        n = rng.randint(4, 6)
        core_dim = rng.randint(3, n - 1)
        quasi = rng.random() < 0.5
        h1 = standard_space(sfield, n)
        h2 = standard_space(sfield, n)
        d, core0 = sampling.random_partial_isometry(h1, h2, core_dim, rng,
                                                    quasi=quasi)
        f = induce(d.map)
        f_adj = induce(quasi_generalized_inverse(d))
        probes1 = ProbeSet.generate(h1, cfg.seed, cfg.count)
        probes2 = ProbeSet.generate(h2, cfg.seed, cfg.count)
        try:
            result = partial_wigner(f, f_adj, probes1, probes2)
        except OrthosetLabError as exc:
            w_round = w_round or {"trial": t, "error": str(exc)}
            continue
        if w_dec is None and (result.s1 != d.s1 or result.s2 != d.s2):
            w_dec = {"trial": t}
        if w_round is None and scalar_ratio(result.core, core0) is None:
            w_round = {"trial": t}
        if w_inv is None:
            if quasi:
                _, linear_d = transport_partial(result)
            else:
                linear_d = d
            if generalized_inverse(linear_d) != adjoint_linear(linear_d.map):
                w_inv = {"trial": t}
    detail = {"maps": cfg.partial_maps}
    records.append(_law(f"{prefix}/kernel-image-recovery", w_dec, detail))
    records.append(_law(f"{prefix}/round-trip-on-core", w_round, detail))
    records.append(_law(f"{prefix}/generalized-inverse-is-adjoint", w_inv,
                        detail))
    records.append(_small_core_control(sfield, cfg, prefix))
    return records


def _small_core_control(sfield: StarSfield, cfg: SuiteConfig,
                        prefix: str) -> ReportRecord:
    rng = _rng(cfg, prefix, "small-core")
    h = standard_space(sfield, 4)
    d, _ = sampling.random_partial_isometry(h, h, 2, rng)
    try:
        partial_wigner(induce(d.map), induce(quasi_generalized_inverse(d)),
                       ProbeSet.generate(h, cfg.seed, max(32, h.dim + 1)),
                       ProbeSet.generate(h, cfg.seed, max(32, h.dim + 1)))
    except PreconditionError:
        return _ok(f"{prefix}/small-core-rejected")
    return _fail(f"{prefix}/small-core-rejected", {"expected": "precondition error"})


# ---------------------------------------------------- linearity/frechet

def linearity_records(sfield: StarSfield, cfg: SuiteConfig, rng,
                      prefix: str) -> list[ReportRecord]:
    space = standard_space(sfield, 4)
    w_wit = None
    for t in range(cfg.ray_pairs):
        x = ray_of(random_nonzero_vector(space, rng))
        y = ray_of(random_nonzero_vector(space, rng))
        if x == y:
            continue
        z = linearity_witness(x, y)
        ok = (not z.is_zero
              and perp_closure([x, y]) == perp_closure([x, z])
              and ray_perp(x, y) != ray_perp(x, z))
        if not ok and w_wit is None:
            w_wit = {"trial": t, "x": ray_payload(x), "y": ray_payload(y)}
    return [_law(f"{prefix}/witness", w_wit, {"pairs": cfg.ray_pairs})]


def frechet_records(sfield: StarSfield, cfg: SuiteConfig, rng,
                    prefix: str) -> list[ReportRecord]:
    space = standard_space(sfield, 4)
    w_sep = None
    for t in range(cfg.ray_pairs):
        x = ray_of(random_nonzero_vector(space, rng))
        y = ray_of(random_nonzero_vector(space, rng))
        if x == y:
            continue
        w = separating_ray(x, y)
        if ray_perp(w, x) == ray_perp(w, y) and w_sep is None:
            w_sep = {"trial": t, "x": ray_payload(x), "y": ray_payload(y)}
    return [_law(f"{prefix}/separation", w_sep, {"pairs": cfg.ray_pairs})]


# ----------------------------------------------------------- dispatching

def _per_sfield_tasks(cfg, name, fn):
    tasks = []
    for sf in StarSfield:
        task_name = f"{name}/{sf.value}"

        def run(sf=sf, task_name=task_name):
            return fn(sf, cfg, _rng(cfg, task_name), task_name)
        tasks.append((task_name, run))
    return tasks


def suite_tasks(cfg: SuiteConfig) -> list:
    """(name, thunk) pairs for the requested suite."""
    s = cfg.suite
    tasks = []
    if s in ("axioms", "all"):
        tasks.extend(suite_axioms(cfg))
    if s in ("linearity", "all"):
        tasks.extend(_per_sfield_tasks(cfg, "linearity", linearity_records))
    if s in ("dacey", "all"):
        tasks.extend(_per_sfield_tasks(
            cfg, "dacey",
            lambda sf, c, rng, nm: gram_schmidt_records(sf, rng, c.bases,
                                                        nm + "/gram-schmidt")
            + splitting_records(sf, rng, c.splits, nm + "/splitting")))
    if s in ("frechet", "all"):
        tasks.extend(_per_sfield_tasks(cfg, "frechet", frechet_records))
    if s in ("adjoint", "all"):
        if cfg.map is not None:
            tasks.append(("adjoint/file", lambda: adjoint_map_records(
                cfg.map, cfg.seed, cfg.count, "adjoint/file",
                claimed=cfg.claimed_adjoint)))
        else:
            tasks.extend(_per_sfield_tasks(cfg, "adjoint",
                                           adjoint_random_records))
    if s in ("piziak", "all"):
        if cfg.map is not None:
            tasks.append(("piziak/file", lambda: [_law(
                "piziak/file/scale-extraction",
                None, {"lam": str(piziak_lambda(cfg.map))})]))
        else:
            tasks.extend(_per_sfield_tasks(cfg, "piziak", piziak_records))
    if s in ("wigner", "all"):
        if cfg.map is not None:
            tasks.append(("wigner/file", lambda: _wigner_file_records(cfg)))
        else:
            tasks.extend(_per_sfield_tasks(cfg, "wigner", wigner_records))
    if s in ("transport", "all"):
        tasks.extend(_per_sfield_tasks(cfg, "transport", transport_records))
    if s in ("partial", "all"):
        tasks.extend(_per_sfield_tasks(cfg, "partial", partial_records))
    if not tasks:
        raise PreconditionError(f"unknown suite {s!r}")
    return tasks


def _wigner_file_records(cfg: SuiteConfig) -> list[ReportRecord]:
    phi0 = cfg.map
    space = phi0.domain
    probes = ProbeSet.generate(space, cfg.seed, cfg.count)
    wig = wigner_reconstruct(induce(phi0), induce(invert_semilinear(phi0)),
                             space, phi0.codomain, probes)
    kappa = scalar_ratio(wig.coordinatization.map, phi0)
    return [_law("wigner/file/round-trip",
                 None if kappa is not None else {"ratio": "none"},
                 {"lam": str(wig.lam)})]


def run_suite(cfg: SuiteConfig) -> list[ReportRecord]:
    return run_tasks(suite_tasks(cfg))
