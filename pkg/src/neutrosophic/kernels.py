"""Hot numeric kernels, each in two flavours.

``*_loops`` functions are explicit loops compiled with numba; ``*_np``
functions are vectorised numpy.  The public names at the bottom dispatch
on :data:`neutrosophic._jit.USE_NUMBA`.  Both flavours are kept callable
so tests can cross-check them.

Array layout for interval-valued triples: last axis of length 6 holding
``(t_inf, t_sup, i_inf, i_sup, f_inf, f_sup)``.
"""
import numpy as np

from ._jit import USE_NUMBA, njit

# +1 for truth columns (sup-min / quasi-concave), -1 for I and F columns
_ORIENT = np.array([1.0, 1.0, -1.0, -1.0, -1.0, -1.0])

OP_MIN = 0
OP_MAX = 1
OP_MIN_NEG = 2  # min(a, k - b): fuzzy difference on grid indices


# --------------------------------------------------------------------------
# grid convexity
# --------------------------------------------------------------------------

@njit
def grid_convex_loops(g, strict):
    """Check every (i < k < j) triple on every column of ``g`` (m x 6).

    Truth columns must satisfy g[k] >= min(g[i], g[j]); indeterminacy and
    falsity columns g[k] <= max(g[i], g[j]).  ``strict`` turns both into
    strict inequalities.
    """
    m = g.shape[0]
    for c in range(6):
        s = 1.0 if c < 2 else -1.0
        for i in range(m):
            for j in range(i + 2, m):
                lo = min(s * g[i, c], s * g[j, c])
                for k in range(i + 1, j):
                    v = s * g[k, c]
                    if strict:
                        if not v > lo:
                            return False
                    elif v < lo:
                        return False
    return True


def grid_convex_np(g, strict):
    """Same predicate as :func:`grid_convex_loops` via prefix/suffix maxima.

    For interior k the binding pair is (argmax left of k, argmax right of k),
    so the triple condition collapses to one comparison per point.
    """
    g = np.asarray(g, dtype=np.float64) * _ORIENT
    if g.shape[0] < 3:
        return True
    pre = np.maximum.accumulate(g, axis=0)
    suf = np.maximum.accumulate(g[::-1], axis=0)[::-1]
    bound = np.minimum(pre[:-2], suf[2:])
    mid = g[1:-1]
    return bool(np.all(mid > bound) if strict else np.all(mid >= bound))


# --------------------------------------------------------------------------
# composition of interval-valued relations
# --------------------------------------------------------------------------

@njit
def compose_loops(r, s):
    """(X,Y,6) o (Y,Z,6) -> (X,Z,6): sup-min on T and I, inf-max on F."""
    nx, ny = r.shape[0], r.shape[1]
    nz = s.shape[1]
    out = np.empty((nx, nz, 6))
    for x in range(nx):
        for z in range(nz):
            for c in range(6):
                if c < 4:
                    acc = 0.0
                    for y in range(ny):
                        v = min(r[x, y, c], s[y, z, c])
                        if v > acc:
                            acc = v
                else:
                    acc = 1.0
                    for y in range(ny):
                        v = max(r[x, y, c], s[y, z, c])
                        if v < acc:
                            acc = v
                out[x, z, c] = acc
    return out


def compose_np(r, s):
    r = np.asarray(r, dtype=np.float64)
    s = np.asarray(s, dtype=np.float64)
    pairs_lo = np.minimum(r[:, :, None, :4], s[None, :, :, :4])
    pairs_hi = np.maximum(r[:, :, None, 4:], s[None, :, :, 4:])
    if r.shape[1] == 0:
        out = np.zeros((r.shape[0], s.shape[1], 6))
        out[..., 4:] = 1.0
        return out
    return np.concatenate([pairs_lo.max(axis=1), pairs_hi.min(axis=1)], axis=-1)


# --------------------------------------------------------------------------
# rule firing and aggregation on a sampled output grid
# --------------------------------------------------------------------------

@njit
def fire_aggregate_loops(strength, cons):
    """Clip each consequent curve by its rule strength, then aggregate.

    strength: (R, 6) firing triples; cons: (R, m, 6) consequent curves.
    Returns (fired (R, m, 6), aggregate (m, 6)).  Firing takes min on T and
    max on I, F; aggregation takes max on T and min on I, F.
    """
    nr, m = cons.shape[0], cons.shape[1]
    fired = np.empty((nr, m, 6))
    agg = np.empty((m, 6))
    for p in range(m):
        for c in range(6):
            agg[p, c] = 0.0 if c < 2 else 1.0
    for r in range(nr):
        for p in range(m):
            for c in range(6):
                if c < 2:
                    v = min(strength[r, c], cons[r, p, c])
                    if v > agg[p, c]:
                        agg[p, c] = v
                else:
                    v = max(strength[r, c], cons[r, p, c])
                    if v < agg[p, c]:
                        agg[p, c] = v
                fired[r, p, c] = v
    return fired, agg


def fire_aggregate_np(strength, cons):
    strength = np.asarray(strength, dtype=np.float64)
    cons = np.asarray(cons, dtype=np.float64)
    fired = np.empty_like(cons)
    fired[..., :2] = np.minimum(strength[:, None, :2], cons[..., :2])
    fired[..., 2:] = np.maximum(strength[:, None, 2:], cons[..., 2:])
    if cons.shape[0] == 0:
        agg = np.zeros(cons.shape[1:])
        agg[:, 2:] = 1.0
        return fired, agg
    agg = np.concatenate([fired[..., :2].max(axis=0), fired[..., 2:].min(axis=0)], axis=-1)
    return fired, agg


@njit
def trapezoid_loops(y, x):
    acc = 0.0
    for i in range(1, y.shape[0]):
        acc += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1])
    return acc


def trapezoid_np(y, x):
    y = np.asarray(y, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    return float(np.sum(0.5 * (y[1:] + y[:-1]) * np.diff(x)))


# --------------------------------------------------------------------------
# images of completion sets (grid-index matrices, one row per completion)
# --------------------------------------------------------------------------

@njit
def image_binary_loops(a, b, ia, ib, op, k):
    """out[p*nb + q, t] = op(a[p, ia[t]], b[q, ib[t]]) over all row pairs."""
    na, nb, nt = a.shape[0], b.shape[0], ia.shape[0]
    out = np.empty((na * nb, nt), dtype=np.int64)
    for p in range(na):
        for q in range(nb):
            row = p * nb + q
            for t in range(nt):
                u = a[p, ia[t]]
                v = b[q, ib[t]]
                if op == 0:
                    out[row, t] = min(u, v)
                elif op == 1:
                    out[row, t] = max(u, v)
                else:
                    out[row, t] = min(u, k - v)
    return out


def image_binary_np(a, b, ia, ib, op, k):
    a = np.asarray(a, dtype=np.int64)[:, None, ia]
    b = np.asarray(b, dtype=np.int64)[None, :, ib]
    if op == OP_MIN:
        out = np.minimum(a, b)
    elif op == OP_MAX:
        out = np.maximum(a, b)
    else:
        out = np.minimum(a, k - b)
    return out.reshape(-1, len(ia))


@njit
def image_project_loops(a, group, n_out):
    """out[r, g] = max over columns c with group[c] == g of a[r, c]."""
    n, nc = a.shape
    out = np.zeros((n, n_out), dtype=np.int64)
    for r in range(n):
        for c in range(nc):
            g = group[c]
            if a[r, c] > out[r, g]:
                out[r, g] = a[r, c]
    return out


def image_project_np(a, group, n_out):
    a = np.asarray(a, dtype=np.int64)
    group = np.asarray(group, dtype=np.int64)
    out = np.zeros((a.shape[0], n_out), dtype=np.int64)
    for g in range(n_out):
        cols = np.flatnonzero(group == g)
        if cols.size:
            out[:, g] = a[:, cols].max(axis=1)
    return out


@njit
def encode_rows_loops(a, base):
    n, nc = a.shape
    out = np.empty(n, dtype=np.int64)
    for r in range(n):
        acc = 0
        for c in range(nc):
            acc = acc * base + a[r, c]
        out[r] = acc
    return out


def encode_rows_np(a, base):
    a = np.asarray(a, dtype=np.int64)
    weights = base ** np.arange(a.shape[1] - 1, -1, -1, dtype=np.int64)
    return a @ weights


# --------------------------------------------------------------------------
# dispatch
# --------------------------------------------------------------------------

_IMPL = {
    name: (globals()[name + "_loops"] if USE_NUMBA else globals()[name + "_np"])
    for name in ("grid_convex", "compose", "fire_aggregate", "trapezoid",
                 "image_binary", "image_project", "encode_rows")
}
BACKEND = "numba" if USE_NUMBA else "numpy"


def _f64(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def grid_convex(g, strict=False) -> bool:
    return bool(_IMPL["grid_convex"](_f64(g), bool(strict)))


def compose(r, s):
    return _IMPL["compose"](_f64(r), _f64(s))


def fire_aggregate(strength, cons):
    return _IMPL["fire_aggregate"](_f64(strength), _f64(cons))


def trapezoid(y, x) -> float:
    return float(_IMPL["trapezoid"](_f64(y), _f64(x)))


def image_binary(a, b, ia, ib, op, k):
    return _IMPL["image_binary"](_i64(a), _i64(b), _i64(ia), _i64(ib), int(op), int(k))


def image_project(a, group, n_out):
    return _IMPL["image_project"](_i64(a), _i64(group), int(n_out))


def encode_rows(a, base):
    return _IMPL["encode_rows"](_i64(a), int(base))


def unique_rows(a, base):
    """Distinct rows of an int matrix, as sorted int64 codes when they fit."""
    a = np.asarray(a, dtype=np.int64)
    if a.shape[1] * np.log2(base) < 62:
        return np.unique(encode_rows(a, base))
    return np.unique(a, axis=0)


