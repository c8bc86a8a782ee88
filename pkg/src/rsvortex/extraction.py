"""Zero-curve extraction from complex scalars sampled on uniform 3D grids.

The kernel is marching tetrahedra: each grid cell is split into the six
Kuhn tetrahedra sharing the cell diagonal from the min corner to the max
corner (a splitting that is conforming across neighbouring cells).  The
real and imaginary parts are interpolated linearly inside each
tetrahedron, so their joint zero set is the intersection of two planes:
at most one unambiguous segment per tetrahedron.  Segments are then
linked into polylines by endpoint identification.

Fields whose diagnostic (nearly) vanishes on half the grid or more do not
have a generic zero *curve*; they are reported via DegenerateFieldError
instead of being traced.
"""

import numpy as np
from dataclasses import dataclass, field as dc_field
from itertools import permutations

from scipy.spatial import cKDTree

from .scalars import electric_phasor

__all__ = [
    "GridSpec",
    "ScalarGrid",
    "Curve",
    "CurveSet",
    "DegenerateFieldError",
    "sample_grid",
    "extract_zero_curves",
    "extract_l_lines",
    "curve_set_distance",
    "DEGENERACY_VALUE_REL",
    "DEGENERACY_FRACTION",
    "LINK_TOL_REL",
    "L_VALIDATION_REL",
]

# Samples with |value| below DEGENERACY_VALUE_REL * scale count as zero;
# if more than DEGENERACY_FRACTION of the grid is zero the zero set is
# not a generic curve.
DEGENERACY_VALUE_REL = 1e-10
DEGENERACY_FRACTION = 0.5
# Segment endpoints within LINK_TOL_REL * min spacing are identified.
LINK_TOL_REL = 1e-9
# L-line points must have |residual component| <= L_VALIDATION_REL * max|PxQ|.
L_VALIDATION_REL = 1e-6


class DegenerateFieldError(Exception):
    """The diagnostic vanishes on a region, not a curve; nothing to trace."""

    def __init__(self, message, fraction, threshold, scale):
        super().__init__(message)
        self.fraction = fraction
        self.threshold = threshold
        self.scale = scale


@dataclass(frozen=True, eq=False)
class GridSpec:
    """Uniform box grid: corners lo < hi, n samples per axis (each >= 2)."""

    lo: np.ndarray
    hi: np.ndarray
    n: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lo, float)
        hi = np.asarray(self.hi, float)
        n = np.asarray(self.n, int)
        if lo.shape != (3,) or hi.shape != (3,) or n.shape != (3,):
            raise ValueError("lo, hi, n must be 3-vectors")
        if np.any(n < 2):
            raise ValueError("need at least 2 samples per axis")
        if np.any(hi <= lo):
            raise ValueError("hi must exceed lo componentwise")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "n", n)

    @property
    def shape(self):
        return tuple(int(v) for v in self.n)

    @property
    def spacing(self):
        return (self.hi - self.lo) / (self.n - 1)

    @property
    def min_spacing(self):
        return float(np.min(self.spacing))

    @property
    def max_spacing(self):
        return float(np.max(self.spacing))

    def axes(self):
        return [np.linspace(self.lo[i], self.hi[i], self.n[i]) for i in range(3)]

    def points(self):
        """All grid points as an (nx*ny*nz, 3) array, z-fastest."""
        ax, ay, az = self.axes()
        X, Y, Z = np.meshgrid(ax, ay, az, indexing="ij")
        return np.stack([X, Y, Z], axis=-1).reshape(-1, 3)


@dataclass(frozen=True, eq=False)
class ScalarGrid:
    """Complex samples on a GridSpec, indexed [i, j, k] with z fastest."""

    spec: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, complex)
        if v.shape != self.spec.shape:
            raise ValueError(f"values shape {v.shape} != grid shape {self.spec.shape}")
        object.__setattr__(self, "values", v)


@dataclass(eq=False)
class Curve:
    """One polyline.  Closed curves are flagged; the first point is not repeated."""

    id: int
    points: np.ndarray  # (N, 3)
    closed: bool


@dataclass(eq=False)
class CurveSet:
    """Extracted polylines plus free-form notes from the extraction pass."""

    curves: list
    notes: dict = dc_field(default_factory=dict)

    def __len__(self):
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    def all_points(self):
        if not self.curves:
            return np.zeros((0, 3))
        return np.concatenate([c.points for c in self.curves])


def sample_grid(fn, spec, t, chunk=1 << 18):
    """Evaluate fn(points, t) on the grid; fn must accept (N, 3) point arrays.

    Evaluation order is unspecified (chunks of the flat z-fastest index);
    the result is deterministic for pure fn.
    """
    pts = spec.points()
    out = np.empty(pts.shape[0], complex)
    for start in range(0, pts.shape[0], chunk):
        stop = min(start + chunk, pts.shape[0])
        out[start:stop] = fn(pts[start:stop], t)
    return ScalarGrid(spec=spec, values=out.reshape(spec.shape))


# Cell corners indexed dx + 2 dy + 4 dz.
_CORNERS = np.array(
    [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0],
     [0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
)
# Kuhn split: one tetrahedron per axis ordering, all sharing corners 0 and 7.
_TETS = np.array(
    [[0, p1, p1 + p2, 7] for (p1, p2, _) in permutations((1, 2, 4))]
)
_FACE_IDX = np.array([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
_TET_FACES = _TETS[:, _FACE_IDX]  # (6, 4, 3) corner ids


def _degeneracy_check(mag, scale, value_rel, fraction, what):
    scale = float(scale)
    threshold = value_rel * scale
    frac = float(np.mean(mag <= threshold)) if scale > 0 else 1.0
    if frac > fraction:
        raise DegenerateFieldError(
            f"{what} is zero on {100.0 * frac:.1f}% of samples "
            f"(threshold {threshold:.3e}); the zero set is not a generic curve",
            fraction=frac,
            threshold=threshold,
            scale=scale,
        )
    return frac


def _zero_segments(u, v, spec):
    """Segments of {u = 0} ∩ {v = 0} from the marching-tetrahedra pass.

    Returns an (S, 2, 3) array of segment endpoints in physical
    coordinates.
    """
    # Candidate cells: both u and v must change sign (or touch 0) among
    # the 8 corners.
    def corner_view(a, c):
        dx, dy, dz = _CORNERS[c]
        return a[dx:a.shape[0] - 1 + dx, dy:a.shape[1] - 1 + dy, dz:a.shape[2] - 1 + dz]

    views_u = [corner_view(u, c) for c in range(8)]
    views_v = [corner_view(v, c) for c in range(8)]
    mask = (
        (np.minimum.reduce(views_u) <= 0.0) & (np.maximum.reduce(views_u) >= 0.0)
        & (np.minimum.reduce(views_v) <= 0.0) & (np.maximum.reduce(views_v) >= 0.0)
    )
    cells = np.argwhere(mask)
    if cells.shape[0] == 0:
        return np.zeros((0, 2, 3))

    ucell = np.empty((cells.shape[0], 8))
    vcell = np.empty((cells.shape[0], 8))
    for c in range(8):
        dx, dy, dz = _CORNERS[c]
        ucell[:, c] = u[cells[:, 0] + dx, cells[:, 1] + dy, cells[:, 2] + dz]
        vcell[:, c] = v[cells[:, 0] + dx, cells[:, 1] + dy, cells[:, 2] + dz]

    # Zero of both linear interpolants on each tetrahedron face, in
    # barycentric coordinates (lam_a, lam_b, 1 - lam_a - lam_b).
    uf = ucell[:, _TET_FACES]  # (Nc, 6, 4, 3)
    vf = vcell[:, _TET_FACES]
    ua, ub, uc = uf[..., 0], uf[..., 1], uf[..., 2]
    va, vb, vc = vf[..., 0], vf[..., 1], vf[..., 2]
    du1, du2 = ua - uc, ub - uc
    dv1, dv2 = va - vc, vb - vc
    det = du1 * dv2 - du2 * dv1

    value_scale = max(np.max(np.abs(ucell)), np.max(np.abs(vcell)), 1e-300)
    ok = np.abs(det) > 1e-28 * value_scale * value_scale
    det_safe = np.where(ok, det, 1.0)
    lam_a = (-uc * dv2 + vc * du2) / det_safe
    lam_b = (uc * dv1 - vc * du1) / det_safe
    lam_c = 1.0 - lam_a - lam_b

    eps = 1e-12
    inside = ok & (lam_a >= -eps) & (lam_b >= -eps) & (lam_c >= -eps)

    # Physical coordinates of face zero points.
    h = spec.spacing
    origin = spec.lo + cells * h  # (Nc, 3)
    corner_off = _CORNERS * h  # (8, 3)
    face_off = corner_off[_TET_FACES]  # (6, 4, 3, 3)
    pts = (
        lam_a[..., None] * face_off[None, :, :, 0, :]
        + lam_b[..., None] * face_off[None, :, :, 1, :]
        + lam_c[..., None] * face_off[None, :, :, 2, :]
    ) + origin[:, None, None, :]  # (Nc, 6, 4, 3)

    # One segment per tetrahedron when exactly two faces carry a zero point.
    n_tets = cells.shape[0] * 6
    inside_flat = inside.reshape(n_tets, 4)
    pts_flat = pts.reshape(n_tets, 4, 3)
    counts = inside_flat.sum(axis=1)
    min_sep = 1e-12 * spec.min_spacing

    segs = []
    two = np.nonzero(counts == 2)[0]
    if two.size:
        order = np.argsort(~inside_flat[two], axis=1, kind="stable")[:, :2]
        pair = np.take_along_axis(pts_flat[two], order[:, :, None], axis=1)  # (n, 2, 3)
        good = np.linalg.norm(pair[:, 0] - pair[:, 1], axis=1) > min_sep
        segs.append(pair[good])

    # A zero point exactly on a tet edge is claimed by two faces; dedupe
    # and keep the extreme pair.  Rare (non-generic alignments only).
    for idx in np.nonzero(counts > 2)[0]:
        cand = pts_flat[idx][inside_flat[idx]]
        uniq = [cand[0]]
        for p in cand[1:]:
            if all(np.linalg.norm(p - q) > min_sep for q in uniq):
                uniq.append(p)
        if len(uniq) < 2:
            continue
        uniq = np.asarray(uniq)
        d2 = np.sum((uniq[:, None, :] - uniq[None, :, :]) ** 2, axis=-1)
        i, j = np.unravel_index(np.argmax(d2), d2.shape)
        segs.append(np.stack([uniq[i], uniq[j]])[None])

    if not segs:
        return np.zeros((0, 2, 3))
    return np.concatenate(segs, axis=0)


class _UnionFind:
    def __init__(self, n):
        self.parent = np.arange(n)

    def find(self, i):
        p = self.parent
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[rj] = ri


def _link_segments(segs, tol):
    """Chain segments sharing endpoints (within tol) into polylines.

    Returns a list of (points (N,3), closed) tuples.
    """
    if segs.shape[0] == 0:
        return []

    ends = segs.reshape(-1, 3)
    uf = _UnionFind(ends.shape[0])
    tree = cKDTree(ends)
    for i, j in tree.query_pairs(tol, output_type="ndarray"):
        uf.union(i, j)

    roots = np.array([uf.find(i) for i in range(ends.shape[0])])
    _, node_of_end = np.unique(roots, return_inverse=True)
    n_nodes = node_of_end.max() + 1
    node_pos = np.zeros((n_nodes, 3))
    node_count = np.zeros(n_nodes)
    np.add.at(node_pos, node_of_end, ends)
    np.add.at(node_count, node_of_end, 1.0)
    node_pos /= node_count[:, None]

    # Edges between nodes; drop collapsed segments and duplicates.
    a = node_of_end[0::2]
    b = node_of_end[1::2]
    keep = a != b
    edges = np.stack([np.minimum(a[keep], b[keep]), np.maximum(a[keep], b[keep])], axis=1)
    edges = np.unique(edges, axis=0)

    adjacency = {}
    for eid, (i, j) in enumerate(edges):
        adjacency.setdefault(int(i), []).append((int(j), eid))
        adjacency.setdefault(int(j), []).append((int(i), eid))
    degree = {n: len(v) for n, v in adjacency.items()}
    used = np.zeros(edges.shape[0], bool)

    def walk(start, eid, nxt):
        path = [start, nxt]
        used[eid] = True
        node = nxt
        while degree.get(node, 0) == 2 and node != start:
            nbr_edge = [(n, e) for (n, e) in adjacency[node] if not used[e]]
            if not nbr_edge:
                break
            node, e = nbr_edge[0]
            used[e] = True
            path.append(node)
        return path

    chains = []
    # Open chains first, anchored at nodes of degree != 2.
    for node in sorted(adjacency):
        if degree[node] == 2:
            continue
        for nbr, eid in adjacency[node]:
            if used[eid]:
                continue
            path = walk(node, eid, nbr)
            chains.append((path, False))
    # What remains are cycles.
    for eid in range(edges.shape[0]):
        if used[eid]:
            continue
        i, j = int(edges[eid, 0]), int(edges[eid, 1])
        path = walk(i, eid, j)
        closed = path[0] == path[-1]
        if closed:
            path = path[:-1]
        chains.append((path, closed))

    return [(node_pos[np.array(path)], closed) for path, closed in chains if len(path) >= 2]


def extract_zero_curves(grid, scale=None, value_rel=DEGENERACY_VALUE_REL,
                        fraction=DEGENERACY_FRACTION, link_rel=LINK_TOL_REL):
    """Polyline approximation of {Re = 0} ∩ {Im = 0} of a complex grid.

    Every returned point is an exact zero of the per-tetrahedron linear
    model, hence within O(h^2) of the true zero curve for smooth fields.

    `scale` sets the reference for the degeneracy test (default: the max
    sample magnitude).  Pass the field's natural scale, e.g. max |F|^2
    for a vortex diagnostic: a scalar that is uniformly at rounding level
    relative to the field (a single plane wave) is then reported as
    DEGENERATE rather than traced as noise.
    """
    mag = np.abs(grid.values)
    ref = float(np.max(mag)) if scale is None else float(scale)
    _degeneracy_check(mag, ref, value_rel, fraction, "diagnostic")

    segs = _zero_segments(grid.values.real.astype(float), grid.values.imag.astype(float), grid.spec)
    tol = link_rel * grid.spec.min_spacing
    chains = _link_segments(segs, tol)
    curves = [Curve(id=i, points=pts, closed=closed) for i, (pts, closed) in enumerate(chains)]
    return CurveSet(curves=curves, notes={"segments": int(segs.shape[0]), "link_tol": tol})


def _phasor_gradient(mono, pts):
    """E_w(r) and its spatial Jacobian dE_w/dr_l, vectorized over points."""
    pos = mono._positive_field
    neg = mono._negative_field
    e = electric_phasor(mono, pts)
    grad = np.zeros(pts.shape[:-1] + (3, 3), complex)  # (..., component, d/dr_l)
    for part, conjugate in ((pos, False), (neg, True)):
        K, _, F = part._arrays
        if K.shape[0] == 0:
            continue
        phase = np.exp(1j * (pts @ K.T))  # (..., M)
        # d/dr_l sum f_c exp(ik.r) = sum i k_l f_c exp(ik.r)
        contrib = np.einsum("...m,mc,ml->...cl", phase, F, 1j * K)
        grad = grad + (np.conj(contrib) if conjugate else contrib)
    return e, grad


def _newton_polish_l_points(mono, pts, comp_pair, tol_value, max_step, iters=12):
    """Newton-refine points onto {V_i = 0, V_j = 0} with V = P x Q.

    Minimum-norm updates for the underdetermined 2x3 system.  Returns the
    refined points and a per-point success mask.
    """
    i, j = comp_pair
    x = pts.copy()
    active = np.ones(x.shape[0], bool)
    start = pts
    for _ in range(iters):
        if not np.any(active):
            break
        e, grad = _phasor_gradient(mono, x[active])
        P, Q = e.real, e.imag
        gP, gQ = grad.real, grad.imag  # (n, comp, l)
        V = np.cross(P, Q)
        # dV/dr_l = dP/dr_l x Q + P x dQ/dr_l
        dV = np.cross(gP.transpose(0, 2, 1), Q[:, None, :]) + np.cross(
            P[:, None, :], gQ.transpose(0, 2, 1)
        )  # (n, l, comp)
        vals = np.stack([V[:, i], V[:, j]], axis=1)  # (n, 2)
        Jac = np.stack([dV[:, :, i], dV[:, :, j]], axis=1)  # (n, 2, 3)
        done = np.linalg.norm(vals, axis=1) <= tol_value
        JJt = Jac @ Jac.transpose(0, 2, 1)  # (n, 2, 2)
        dets = JJt[:, 0, 0] * JJt[:, 1, 1] - JJt[:, 0, 1] * JJt[:, 1, 0]
        solvable = np.abs(dets) > 1e-300
        lam = np.zeros_like(vals)
        d = np.where(solvable, dets, 1.0)
        lam[:, 0] = (vals[:, 0] * JJt[:, 1, 1] - vals[:, 1] * JJt[:, 0, 1]) / d
        lam[:, 1] = (vals[:, 1] * JJt[:, 0, 0] - vals[:, 0] * JJt[:, 1, 0]) / d
        delta = np.einsum("nkl,nk->nl", Jac, lam)
        move = ~done & solvable
        idx = np.nonzero(active)[0]
        x[idx[move]] -= delta[move]
        still = active.copy()
        still[idx[done | ~solvable]] = False
        active = still

    e, _ = _phasor_gradient(mono, x)
    V = np.cross(e.real, e.imag)
    resid = np.hypot(V[:, comp_pair[0]], V[:, comp_pair[1]])
    ok = (resid <= tol_value) & (np.linalg.norm(x - start, axis=1) <= max_step)
    return x, ok


def _filter_curve_points(curve, keep):
    """Split a curve into runs of kept points; closure survives only intact curves."""
    if np.all(keep):
        return [(curve.points, curve.closed)]
    pieces = []
    run = []
    order = list(range(len(keep)))
    if curve.closed:
        # Roll so a dropped point sits at the boundary and the rest chains linearly.
        first_bad = int(np.argmin(keep))
        order = order[first_bad:] + order[:first_bad]
    for idx in order:
        if keep[idx]:
            run.append(idx)
        else:
            if len(run) >= 2:
                pieces.append((curve.points[run], False))
            run = []
    if len(run) >= 2:
        pieces.append((curve.points[run], False))
    return pieces


def extract_l_lines(mono, spec, validation_rel=L_VALIDATION_REL,
                    value_rel=DEGENERACY_VALUE_REL, fraction=DEGENERACY_FRACTION,
                    link_rel=LINK_TOL_REL):
    """Curves of linear polarization: the zero set of V = P x Q.

    V = 0 is a rank-2 condition, so the two components of V with the
    largest sample range feed the two-scalar kernel; the points are then
    Newton-refined onto the exact zero set of that component pair, and
    any point whose remaining component exceeds validation_rel * max|V|
    is discarded (those belong to spurious branches where only two
    components vanish) and counted in the notes.
    """
    pts = spec.points()
    e = electric_phasor(mono, pts)
    P, Q = e.real, e.imag
    V = np.cross(P, Q)  # (N, 3)
    vmag = np.linalg.norm(V, axis=1)
    # |P x Q| <= (|P|^2 + |Q|^2)/2, a sharp scale for the degeneracy test.
    scale = float(np.max(np.sum(P * P + Q * Q, axis=1)) / 2.0)
    _degeneracy_check(vmag, scale, value_rel, fraction, "L-line field P x Q")

    ranges = V.max(axis=0) - V.min(axis=0)
    comp_pair = tuple(int(c) for c in np.argsort(ranges)[::-1][:2])
    third = ({0, 1, 2} - set(comp_pair)).pop()

    shape = spec.shape
    u = V[:, comp_pair[0]].reshape(shape)
    v = V[:, comp_pair[1]].reshape(shape)
    segs = _zero_segments(u, v, spec)
    tol = link_rel * spec.min_spacing
    chains = _link_segments(segs, tol)

    vmax = float(np.max(vmag))
    eps_val = validation_rel * vmax
    # Refine well below the validation threshold so the test discriminates
    # true curves (residual ~ 0) from spurious two-component branches.
    tol_newton = min(eps_val, 1e-9 * vmax)
    max_step = 2.0 * spec.max_spacing

    curves = []
    dropped = 0
    next_id = 0
    for points, closed in chains:
        refined, converged = _newton_polish_l_points(mono, points, comp_pair, tol_newton, max_step)
        e_ref = electric_phasor(mono, refined)
        v_ref = np.cross(e_ref.real, e_ref.imag)
        keep = converged & (np.abs(v_ref[:, third]) <= eps_val)
        dropped += int(np.sum(~keep))
        for piece_pts, piece_closed in _filter_curve_points(
            Curve(id=-1, points=refined, closed=closed), keep
        ):
            # Refinement can merge neighbouring points; keep strictly distinct ones.
            dist = np.linalg.norm(np.diff(piece_pts, axis=0), axis=1)
            sel = np.concatenate([[True], dist > 1e-12 * spec.min_spacing])
            piece_pts = piece_pts[sel]
            if piece_pts.shape[0] < 2:
                continue
            curves.append(Curve(id=next_id, points=piece_pts, closed=piece_closed))
            next_id += 1

    return CurveSet(
        curves=curves,
        notes={
            "component_pair": comp_pair,
            "validation_threshold": eps_val,
            "dropped_points": dropped,
            "segments": int(segs.shape[0]),
        },
    )


def _segments_of(curveset):
    starts, stops = [], []
    for c in curveset.curves:
        p = c.points
        starts.append(p[:-1])
        stops.append(p[1:])
        if c.closed:
            starts.append(p[-1:])
            stops.append(p[:1])
    if not starts:
        return np.zeros((0, 3)), np.zeros((0, 3))
    return np.concatenate(starts), np.concatenate(stops)


def _densify(curveset, step):
    out = []
    a, b = _segments_of(curveset)
    for p, q in zip(a, b):
        length = np.linalg.norm(q - p)
        n = max(1, int(np.ceil(length / step)))
        frac = np.arange(n) / n
        out.append(p + frac[:, None] * (q - p))
    out.append(curveset.all_points())
    return np.concatenate(out)


def _point_to_segment_distances(queries, seg_a, seg_b):
    """Exact min distance from each query point to a set of segments.

    A KD-tree on segment endpoints prunes candidates: the nearest
    endpoint distance d0 bounds the true distance within [d0 - len_max,
    d0], so only segments with an endpoint inside d0 + len_max matter.
    """
    ends = np.concatenate([seg_a, seg_b])
    seg_of_end = np.concatenate([np.arange(len(seg_a)), np.arange(len(seg_a))])
    tree = cKDTree(ends)
    d0, _ = tree.query(queries)
    lengths = np.linalg.norm(seg_b - seg_a, axis=1)
    len_max = float(lengths.max()) if lengths.size else 0.0

    ab = seg_b - seg_a
    denom = np.maximum(np.sum(ab * ab, axis=1), 1e-300)
    result = np.empty(len(queries))
    groups = tree.query_ball_point(queries, d0 + len_max + 1e-30)
    for qi, ends_near in enumerate(groups):
        cand = np.unique(seg_of_end[ends_near])
        p = queries[qi]
        ap = p - seg_a[cand]
        tpar = np.clip(np.sum(ap * ab[cand], axis=1) / denom[cand], 0.0, 1.0)
        proj = seg_a[cand] + tpar[:, None] * ab[cand]
        result[qi] = np.min(np.linalg.norm(proj - p, axis=1))
    return result


def curve_set_distance(a, b, step=None):
    """Symmetric Hausdorff and mean distance between two curve sets.

    Distances run from densified sample points of one set to the exact
    polyline segments of the other, so the metric resolves O(h^2)
    differences.  The densification step defaults to half the median
    segment length over both sets.
    """
    if len(a) == 0 or len(b) == 0:
        raise ValueError("curve_set_distance requires two nonempty curve sets")
    if step is None:
        la = np.linalg.norm(np.subtract(*_segments_of(a)), axis=1)
        lb = np.linalg.norm(np.subtract(*_segments_of(b)), axis=1)
        step = float(np.median(np.concatenate([la, lb]))) / 2.0
        if step <= 0:
            step = 1e-9

    qa = _densify(a, step)
    qb = _densify(b, step)
    a1, a2 = _segments_of(a)
    b1, b2 = _segments_of(b)
    d_ab = _point_to_segment_distances(qa, b1, b2)
    d_ba = _point_to_segment_distances(qb, a1, a2)

    hausdorff = float(max(d_ab.max(), d_ba.max()))
    mean = float((d_ab.sum() + d_ba.sum()) / (len(d_ab) + len(d_ba)))
    return hausdorff, mean
