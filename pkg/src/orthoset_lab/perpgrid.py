"""Batched exact orthogonality tests.

The property suites decide `<u, v> = 0` for hundreds of thousands of vector
pairs.  Doing that with exact scalar arithmetic pair by pair is the hot loop
of the whole package, so grids are computed in two exact stages:

1. a residue screen: all pairwise forms are evaluated mod a fixed prime
   with numpy int64 matrix products.  A form that is nonzero mod p is
   nonzero, full stop; no pair can be wrongly declared orthogonal here.
2. exact confirmation: the few pairs whose residue vanishes are recomputed
   with arbitrary-precision integer arithmetic, so no pair can be wrongly
   declared orthogonal either.

Inputs are integerised first (rows and Gram matrices are scaled by positive
rationals, which never changes whether a form vanishes).  Setting
ORTHOSET_LAB_EXACT_GRID=1 skips the screen and runs stage 2 on every pair;
`benchmarks/grid_bench.py` compares the two paths.

The prime sits below 2**28 so that a row of dimension <= 6 accumulates
inside int64; dimensions above that bound fall back to the exact path.
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

import numpy as np

from .starfields import StarSfield

PRIME = 268435399  # largest prime below 2**28
_MAX_SCREEN_DIM = 6


def _use_exact_path() -> bool:
    return os.environ.get("ORTHOSET_LAB_EXACT_GRID", "") not in ("", "0")


def _int_planes_q(coords) -> tuple[int, ...]:
    dens = [c.denominator for c in coords]
    lcm = math.lcm(*dens) if dens else 1
    return (tuple(c.numerator * (lcm // c.denominator) for c in coords),)


def _int_planes_qi(coords) -> tuple[tuple[int, ...], tuple[int, ...]]:
    dens = [c.denominator_int() for c in coords]
    lcm = math.lcm(*dens) if dens else 1
    re, im = [], []
    for c in coords:
        s = lcm // c.denominator_int()
        cr, ci = c.component_ints()
        re.append(cr * s)
        im.append(ci * s)
    return tuple(re), tuple(im)


def _int_planes_hq(coords):
    dens = [c.denominator_int() for c in coords]
    lcm = math.lcm(*dens) if dens else 1
    planes = ([], [], [], [])
    for c in coords:
        s = lcm // c.denominator_int()
        for plane, comp in zip(planes, c.component_ints()):
            plane.append(comp * s)
    return tuple(tuple(p) for p in planes)


_PLANES = {
    StarSfield.Q: _int_planes_q,
    StarSfield.QI: _int_planes_qi,
    StarSfield.HQ: _int_planes_hq,
}


def _integerize_rows(sfield: StarSfield, rows):
    """Per-row integer component planes plus a zero-row flag list."""
    fn = _PLANES[sfield]
    planes = []
    zero = []
    for coords in rows:
        p = fn(coords)
        planes.append(p)
        zero.append(not any(any(comp) for comp in p))
    return planes, zero


@lru_cache(maxsize=None)
def _int_gram(space):
    """Integerised Gram data for a space, shaped per sfield."""
    sf = space.sfield
    g = space.gram
    n = space.dim
    if sf is StarSfield.Q:
        dens = [x.denominator for row in g for x in row] or [1]
        lcm = math.lcm(*dens)
        return tuple(tuple(x.numerator * (lcm // x.denominator) for x in row)
                     for row in g)
    if sf is StarSfield.QI:
        dens = [x.denominator_int() for row in g for x in row] or [1]
        lcm = math.lcm(*dens)
        re = tuple(tuple(x.component_ints()[0] * (lcm // x.denominator_int())
                         for x in row) for row in g)
        im = tuple(tuple(x.component_ints()[1] * (lcm // x.denominator_int())
                         for x in row) for row in g)
        return re, im
    # HQ Gram matrices are diagonal with central entries by certificate
    dens = [g[i][i].denominator_int() for i in range(n)] or [1]
    lcm = math.lcm(*dens)
    return tuple(g[i][i].component_ints()[0] * (lcm // g[i][i].denominator_int())
                 for i in range(n))


def _exact_zero_q(gram, a, b) -> bool:
    (arow,) = a
    (brow,) = b
    acc = 0
    for i, ai in enumerate(arow):
        if ai:
            grow = gram[i]
            acc += ai * sum(gij * bj for gij, bj in zip(grow, brow)
                            if gij and bj)
    return acc == 0


def _exact_zero_qi(gram, a, b) -> bool:
    gr, gi = gram
    ar, ai_ = a
    br, bi = b
    n = len(ar)
    fr = fi = 0
    for i in range(n):
        ur, ui = ar[i], ai_[i]
        if not (ur or ui):
            continue
        for j in range(n):
            vr, vi = br[j], bi[j]
            if not (vr or vi):
                continue
            grr, gii = gr[i][j], gi[i][j]
            if not (grr or gii):
                continue
            # (ur + i ui)(grr + i gii)(vr - i vi)
            wr = ur * grr - ui * gii
            wi = ur * gii + ui * grr
            fr += wr * vr + wi * vi
            fi += wi * vr - wr * vi
    return fr == 0 and fi == 0


def _exact_zero_hq(gram, u, v) -> bool:
    ua, ub, uc, ud = u
    va, vb, vc, vd = v
    fa = fb = fc = fd = 0
    for i, g in enumerate(gram):
        if not g:
            continue
        pa, pb, pc, pd = g * ua[i], g * ub[i], g * uc[i], g * ud[i]
        if not (pa or pb or pc or pd):
            continue
        qa, qb, qc, qd = va[i], vb[i], vc[i], vd[i]
        fa += pa * qa + pb * qb + pc * qc + pd * qd
        fb += -pa * qb + pb * qa - pc * qd + pd * qc
        fc += -pa * qc + pb * qd + pc * qa - pd * qb
        fd += -pa * qd - pb * qc + pc * qb + pd * qa
    return fa == 0 and fb == 0 and fc == 0 and fd == 0


_EXACT = {
    StarSfield.Q: _exact_zero_q,
    StarSfield.QI: _exact_zero_qi,
    StarSfield.HQ: _exact_zero_hq,
}


def _modmat(planes, idx, p=PRIME):
    return np.array([[x % p for x in row[idx]] for row in planes],
                    dtype=np.int64)


def _screen(space, planes_a, planes_b):
    """Residue matrix masks: True where the form is 0 mod PRIME."""
    sf = space.sfield
    p = PRIME
    gram = _int_gram(space)
    if sf is StarSfield.Q:
        a = _modmat(planes_a, 0)
        b = _modmat(planes_b, 0)
        gm = np.array([[x % p for x in row] for row in gram], dtype=np.int64)
        f = (a @ gm % p) @ b.T % p
        return f == 0
    if sf is StarSfield.QI:
        ar, ai = _modmat(planes_a, 0), _modmat(planes_a, 1)
        br, bi = _modmat(planes_b, 0), _modmat(planes_b, 1)
        gr = np.array([[x % p for x in row] for row in gram[0]], dtype=np.int64)
        gi = np.array([[x % p for x in row] for row in gram[1]], dtype=np.int64)
        wr = (ar @ gr - ai @ gi) % p
        wi = (ar @ gi + ai @ gr) % p
        fr = (wr @ br.T + wi @ bi.T) % p
        fi = (wi @ br.T - wr @ bi.T) % p
        return (fr == 0) & (fi == 0)
    g = np.array([x % p for x in gram], dtype=np.int64)
    pa, pb, pc, pd = (_modmat(planes_a, k) * g % p for k in range(4))
    qa, qb, qc, qd = (_modmat(planes_b, k).T for k in range(4))
    fa = (pa @ qa + pb @ qb + pc @ qc + pd @ qd) % p
    fb = (-pa @ qb + pb @ qa - pc @ qd + pd @ qc) % p
    fc = (-pa @ qc + pb @ qd + pc @ qa - pd @ qb) % p
    fd = (-pa @ qd - pb @ qc + pc @ qb + pd @ qa) % p
    return (fa == 0) & (fb == 0) & (fc == 0) & (fd == 0)


def perp_grid(space, rows_a, rows_b):
    """Boolean matrix of exact orthogonality for all pairs of coordinate
    rows; entry [i][j] is True iff <rows_a[i], rows_b[j]> = 0."""
    na, nb = len(rows_a), len(rows_b)
    if space.dim == 0:
        return np.ones((na, nb), dtype=bool)
    planes_a, zero_a = _integerize_rows(space.sfield, rows_a)
    planes_b, zero_b = _integerize_rows(space.sfield, rows_b)
    exact = _EXACT[space.sfield]
    gram = _int_gram(space)
    if na == 0 or nb == 0:
        return np.zeros((na, nb), dtype=bool)
    if _use_exact_path() or space.dim > _MAX_SCREEN_DIM:
        grid = np.zeros((na, nb), dtype=bool)
        for i in range(na):
            if zero_a[i]:
                grid[i, :] = True
                continue
            for j in range(nb):
                grid[i, j] = zero_b[j] or exact(gram, planes_a[i], planes_b[j])
        return grid
    grid = _screen(space, planes_a, planes_b)
    # a zero residue is only a candidate; confirm with exact integers
    za = np.array(zero_a, dtype=bool)
    zb = np.array(zero_b, dtype=bool)
    candidates = grid & ~za[:, None] & ~zb[None, :]
    for i, j in np.argwhere(candidates):
        if not exact(gram, planes_a[i], planes_b[j]):
            grid[i, j] = False
    grid[za, :] = True
    grid[:, zb] = True
    return grid
