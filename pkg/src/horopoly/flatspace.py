"""Unit-determinant positive matrices with a polyhedral spectral metric.

Points are symmetric positive definite n x n matrices of determinant one,
n <= 4.  The relative position of two points is the descending-sorted
logarithmic spectrum of one against the other, a trace-zero vector; any
permutation-invariant polyhedral gauge on that spectrum induces a distance
invariant under congruence by special orthogonal matrices.

The diagonal points form a flat on which the distance restricts to the
exact vector-space gauge, so normalized distance functions along diagonal
rays converge to the boundary functions the horoboundary module computes
exactly.  This module is the floating-point end of the package; the flat
keeps a parallel exact code path used to follow rays far beyond where
matrix exponentials stay well conditioned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

import numpy as np
from scipy.linalg import eigh

from ._linalg import frac, solve_square, vadd, vdot, vec, vscale, vzero
from .errors import DimensionMismatch, InputError, PreconditionError
from .horoboundary import Horofunction, evaluate, limit_of_ray
from .horoboundary import psi as chart_psi
from .norm import PolyhedralNorm, gauge, polyhedral_norm
from .rootsys import RootSystem, build, subset_data, weyl_point_matrices
from .satake import invariant_under

_COND_LIMIT = 1e12
_SYMMETRY_TOL = 1e-12
_DET_TOL = 1e-9
_SAMPLE_COND = 1e4


def validate_spd(matrix) -> np.ndarray:
    """Check a point of the space and return it as a float array.

    Accepts anything numpy can coerce to a square matrix; enforces size
    2..4, symmetry to 1e-12, a positive spectrum, and determinant within
    1e-9 of one.
    """
    M = np.asarray(matrix, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InputError("expected a square matrix")
    n = M.shape[0]
    if not 2 <= n <= 4:
        raise InputError("matrix size must be 2, 3, or 4")
    if not np.all(np.isfinite(M)):
        raise InputError("matrix entries must be finite")
    if float(np.max(np.abs(M - M.T))) > _SYMMETRY_TOL:
        raise InputError("matrix is not symmetric")
    if float(np.linalg.eigvalsh(M)[0]) <= 0.0:
        raise InputError("matrix is not positive definite")
    if abs(float(np.linalg.det(M)) - 1.0) > _DET_TOL:
        raise InputError("matrix determinant must equal 1")
    return M


@dataclass(frozen=True)
class FlatSpace:
    """Matrix size n, the rank n-1 chart root data, and the gauge norm."""

    n: int
    root_system: RootSystem
    norm: PolyhedralNorm


def flat_space(n, ball) -> FlatSpace:
    """Bundle a matrix size with a permutation-invariant unit ball.

    The ball (a Polytope or a PolyhedralNorm) lives in the n-1 dimensional
    chart of the trace-zero diagonal subspace; invariance under the full
    coordinate-permutation action is checked here, once.
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 2 <= n <= 4:
        raise InputError("matrix size must be 2, 3, or 4")
    norm = ball if isinstance(ball, PolyhedralNorm) else polyhedral_norm(ball)
    if norm.dim != n - 1:
        raise DimensionMismatch("the ball must have dimension n - 1")
    rs = build("A", n - 1)
    if not invariant_under(norm.ball, weyl_point_matrices(rs)):
        raise PreconditionError(
            "the unit ball must be invariant under the coordinate permutations")
    return FlatSpace(n, rs, norm)


def basepoint(fs: FlatSpace) -> np.ndarray:
    return np.eye(fs.n)


def flat_chart(fs: FlatSpace, H) -> tuple:
    """Exact chart coordinates of a diagonal-subspace vector.

    The input is centered to trace zero first (exact rational arithmetic),
    which makes the chart insensitive to the roundoff-sized trace that
    floating inputs carry.
    """
    vals = vec(H)
    if len(vals) != fs.n:
        raise DimensionMismatch("expected one entry per diagonal slot")
    mean = sum(vals, start=Fraction(0)) / fs.n
    centered = tuple(x - mean for x in vals)
    return tuple(accumulate(centered))[: fs.n - 1]


def flat_gauge(fs: FlatSpace, H) -> Fraction:
    """Exact gauge of a flat vector, read through the chart."""
    return gauge(fs.norm, flat_chart(fs, H))


def exp_flat(H) -> np.ndarray:
    """Diagonal point of the flat with the given logarithmic spectrum."""
    vals = np.asarray([float(x) for x in H], dtype=float)
    vals = vals - vals.mean()
    return np.diag(np.exp(vals))


def cartan_projection(P, Q) -> tuple:
    """Descending-sorted logs of the spectrum of Q relative to P.

    Solves the symmetric-definite pencil Q v = t P v, so the result is the
    sorted logarithmic generalized spectrum, re-centered to trace zero.
    Both points must have condition number at most 1e12.
    """
    P = validate_spd(P)
    Q = validate_spd(Q)
    if P.shape != Q.shape:
        raise DimensionMismatch("points have different matrix sizes")
    for M in (P, Q):
        if float(np.linalg.cond(M)) > _COND_LIMIT:
            raise PreconditionError("point condition number exceeds 1e12")
    vals = eigh(Q, P, eigvals_only=True)
    logs = np.log(vals)[::-1]
    logs = logs - logs.mean()
    return tuple(float(x) for x in logs)


def finsler_distance(fs: FlatSpace, P, Q) -> float:
    """Gauge length of the relative position of Q seen from P.

    The projection is rationalized exactly before the gauge is applied, so
    the only floating error is the one already in the spectrum.
    """
    H = cartan_projection(P, Q)
    if len(H) != fs.n:
        raise DimensionMismatch("points do not match the space's matrix size")
    return float(flat_gauge(fs, H))


def psi(fs: FlatSpace, z, x) -> float:
    """Distance to z, normalized to vanish at the identity basepoint."""
    return finsler_distance(fs, x, z) - finsler_distance(fs, basepoint(fs), z)


def psi_flat(fs: FlatSpace, Hz, Hx) -> Fraction:
    """Exact normalized distance between the flat points at Hz and Hx.

    On diagonal points the matrix metric reduces to the chart gauge, which
    lets rays run to parameter values far beyond the conditioning guard.
    """
    return chart_psi(fs.norm, flat_chart(fs, Hz), flat_chart(fs, Hx))


def flat_limit(fs: FlatSpace, start, direction) -> Horofunction:
    """Exact boundary function of the diagonal ray start + t*direction."""
    return limit_of_ray(fs.norm, flat_chart(fs, start), flat_chart(fs, direction))


@dataclass(frozen=True)
class SequenceType:
    """Divergence type of a chamber ray or sample sequence.

    indices: positions of the simple roots whose pairing stays bounded.
    limit: the vector in the span of those roots realizing the limiting
    pairings (exact rationals for symbolic rays, floats for samples).
    """

    indices: tuple
    limit: tuple


def _wall_component(rs: RootSystem, indices, values) -> tuple:
    """Vector in the span of the chosen simple roots with given pairings."""
    if not indices:
        return vzero(rs.ambient_dim)
    basis = subset_data(rs, indices).root_span_basis
    rows = [[vdot(rs.simple_roots[i], b) for b in basis] for i in indices]
    coeffs = solve_square(rows, [frac(v) for v in values])
    assert coeffs is not None  # Gram-type matrix of independent roots
    out = vzero(rs.ambient_dim)
    for c, b in zip(coeffs, basis):
        out = vadd(out, vscale(b, c))
    return out


def sequence_type_of_ray(rs: RootSystem, start, direction) -> SequenceType:
    """Exact type of the affine ray start + t*direction, t -> infinity.

    The ray must eventually enter the closed dominant chamber and must be
    unbounded there; the bounded simple-root pairings are read off the
    direction's zero pairings, and the limit vector solves their limiting
    values inside the span of the corresponding roots.
    """
    start = vec(start)
    direction = vec(direction)
    if len(start) != rs.ambient_dim or len(direction) != rs.ambient_dim:
        raise DimensionMismatch("ray data does not live in the ambient space")
    pair_u = [vdot(a, direction) for a in rs.simple_roots]
    pair_h = [vdot(a, start) for a in rs.simple_roots]
    for u, h in zip(pair_u, pair_h):
        if u < 0 or (u == 0 and h < 0):
            raise PreconditionError(
                "the ray must eventually enter the closed dominant chamber")
    if all(u == 0 for u in pair_u):
        raise PreconditionError("bounded ray, no divergence type")
    indices = tuple(i for i, u in enumerate(pair_u) if u == 0)
    limit = _wall_component(rs, indices, [pair_h[i] for i in indices])
    return SequenceType(indices=indices, limit=limit)


def sequence_type_of_samples(rs: RootSystem, samples,
                             convergence_tol: float = 1e-6,
                             growth_min: float = 1.0) -> SequenceType:
    """Classify a sampled divergent sequence in the closed chamber.

    A simple-root pairing counts as settled when its last three samples
    agree to convergence_tol, and as growing when it gained at least
    growth_min overall without receding at the end.  Anything ambiguous,
    and sequences with every pairing settled, are rejected.
    """
    pts = [tuple(float(x) for x in s) for s in samples]
    if len(pts) < 3:
        raise InputError("need at least three samples to classify a sequence")
    if any(len(p) != rs.ambient_dim for p in pts):
        raise DimensionMismatch("samples do not live in the ambient space")
    roots = [tuple(float(c) for c in a) for a in rs.simple_roots]
    series = [[sum(c * x for c, x in zip(a, p)) for p in pts] for a in roots]
    for v in series:
        if min(v) < -1e-9:
            raise PreconditionError(
                "samples must lie in the closed dominant chamber")
    settled_idx = []
    for i, v in enumerate(series):
        settled = (abs(v[-1] - v[-2]) <= convergence_tol
                   and abs(v[-1] - v[-3]) <= convergence_tol)
        growing = (v[-1] - v[0] >= growth_min
                   and v[-1] >= v[-2] - convergence_tol)
        if settled and not growing:
            settled_idx.append(i)
        elif not (growing and not settled):
            raise PreconditionError(
                "sample horizon too short to classify the sequence")
    if len(settled_idx) == rs.rank:
        raise PreconditionError("bounded sequence, no divergence type")
    indices = tuple(settled_idx)
    limit = _wall_component(rs, indices, [series[i][-1] for i in indices])
    return SequenceType(indices=indices, limit=tuple(float(x) for x in limit))


@dataclass(frozen=True)
class FlatLimitReport:
    """Agreement of far-ray normalized distances with the exact limit.

    defects holds (t, max defect over the test points) rows in ascending t;
    matrix_route_max_t is the largest scheduled t at which the floating
    matrix metric was also evaluated and folded into the defect (0.0 when
    the exponentials left the conditioning guard immediately).
    """

    status: str
    defects: tuple
    tolerance: float
    t_max: float
    ray_type: SequenceType
    matrix_route_max_t: float


def _spread(fs: FlatSpace, H) -> float:
    vals = [float(x) for x in H]
    mean = sum(vals) / len(vals)
    return max(v - mean for v in vals) - min(v - mean for v in vals)


def flat_limit_consistency(fs: FlatSpace, start, direction, test_points,
                           t_max: float = 1e4, tol: float = 1e-5) -> FlatLimitReport:
    """Track normalized distances along a diagonal chamber ray.

    At a ladder of times up to t_max the normalized distance based at the
    ray point is compared, on the given flat test points, with the exact
    limit boundary function of the ray.  The exact chart route runs at
    every time; the floating matrix route is folded in as long as the
    diagonal exponentials stay inside the conditioning guard.  The verdict
    is converged when the final defect is within tol, inconclusive when it
    is still shrinking at t_max, and failed otherwise.
    """
    t_max = float(t_max)
    tol = float(tol)
    if not (t_max > 0 and math.isfinite(t_max)):
        raise InputError("t_max must be positive and finite")
    if not (tol > 0 and math.isfinite(tol)):
        raise InputError("tol must be positive and finite")
    start = vec(start)
    direction = vec(direction)
    ray_type = sequence_type_of_ray(fs.root_system, start, direction)
    pts = [vec(p) for p in test_points]
    if not pts:
        raise InputError("need at least one flat test point")
    if any(len(p) != fs.n for p in pts):
        raise DimensionMismatch("test points must have one entry per slot")

    h = flat_limit(fs, start, direction)
    targets = [evaluate(h, flat_chart(fs, p)) for p in pts]
    guard = math.log(_COND_LIMIT / 10.0)
    points_conditioned = all(_spread(fs, p) < guard for p in pts)
    point_mats = [exp_flat(p) for p in pts] if points_conditioned else None

    rows = []
    matrix_reach = 0.0
    for k in range(4, -1, -1):
        t = t_max * 10.0 ** (-k)
        Hz = vadd(start, vscale(direction, frac(t)))
        defect = max(abs(float(psi_flat(fs, Hz, p) - targets[j]))
                     for j, p in enumerate(pts))
        if points_conditioned and _spread(fs, Hz) < guard:
            z = exp_flat(Hz)
            for j, x in enumerate(point_mats):
                defect = max(defect, abs(psi(fs, z, x) - float(targets[j])))
            matrix_reach = t
        rows.append((t, defect))

    last = rows[-1][1]
    if last <= tol:
        status = "converged"
    elif last < max(d for _, d in rows[:-1]):
        # above tolerance but still shrinking: the horizon, not the limit
        status = "inconclusive"
    else:
        status = "failed"
    return FlatLimitReport(status=status, defects=tuple(rows), tolerance=tol,
                           t_max=t_max, ray_type=ray_type,
                           matrix_route_max_t=matrix_reach)


def act(g, x) -> np.ndarray:
    """Congruence action g.x = g x g^T, symmetrized against roundoff."""
    g = np.asarray(g, dtype=float)
    x = np.asarray(x, dtype=float)
    y = g @ x @ g.T
    return (y + y.T) / 2.0


def sample_spd(rng, n: int) -> np.ndarray:
    """Random unit-determinant positive matrix with moderate conditioning."""
    while True:
        A = rng.normal(size=(n, n))
        X = A @ A.T
        if float(np.linalg.cond(X)) > _SAMPLE_COND:
            continue
        X = X / float(np.linalg.det(X)) ** (1.0 / n)
        return (X + X.T) / 2.0


def sample_rotation(rng, n: int) -> np.ndarray:
    """Haar-ish random special orthogonal matrix via QR with sign fixing."""
    A = rng.normal(size=(n, n))
    q, r = np.linalg.qr(A)
    signs = np.sign(np.diagonal(r))
    signs[signs == 0] = 1.0
    q = q * signs
    if float(np.linalg.det(q)) < 0:
        q[:, 0] = -q[:, 0]
    return q


def _index_blocks(n: int, indices) -> list:
    """Consecutive slot blocks glued by the chosen simple-root positions."""
    chosen = set(indices)
    blocks, current = [], [0]
    for pos in range(1, n):
        if pos - 1 in chosen:
            current.append(pos)
        else:
            blocks.append(current)
            current = [pos]
    blocks.append(current)
    return blocks


def sample_block_rotation(rng, n: int, indices) -> np.ndarray:
    """Random rotation acting inside each glued slot block."""
    g = np.eye(n)
    for block in _index_blocks(n, indices):
        if len(block) == 1:
            continue
        R = sample_rotation(rng, len(block))
        for a, i in enumerate(block):
            for b, j in enumerate(block):
                g[i, j] = R[a, b]
    return g


def sample_block_unipotent(rng, n: int, indices, scale: float = 0.5) -> np.ndarray:
    """Random upper unipotent matrix vanishing inside the glued blocks."""
    blocks = _index_blocks(n, indices)
    owner = {i: k for k, block in enumerate(blocks) for i in block}
    g = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            if owner[i] != owner[j]:
                g[i, j] = rng.uniform(-scale, scale)
    return g


@dataclass(frozen=True)
class InvarianceConfig:
    """Sampling plan for the invariance report.

    ray_start and ray_direction are ambient flat vectors; both default to
    the origin and a gentle regular ramp whose exponentials stay inside
    the conditioning guard across the whole t_schedule.
    """

    samples: int = 100
    seed: int = 7
    invariance_tol: float = 1e-9
    ray_start: tuple | None = None
    ray_direction: tuple | None = None
    t_schedule: tuple = (10.0, 31.6, 100.0, 316.0, 1000.0)
    limit_tol: float = 1e-3
    noise_band: float = 1e-6
    point_samples: int = 20
    group_samples: int = 6
    unipotent_scale: float = 0.5


@dataclass(frozen=True)
class InvarianceReport:
    """Measured defects for the three isometry-invariance statements.

    basepoint_defect: rotating a point must not change its normalized
    distance seen from the identity.  equivariance_defect: rotating the
    base of the normalized distance matches un-rotating its argument.
    limit_defects: (t, defect) rows for the block groups attached to the
    ray's divergence type; their defect must shrink along the schedule.
    """

    basepoint_defect: float
    equivariance_defect: float
    limit_defects: tuple
    basepoint_ok: bool
    equivariance_ok: bool
    limit_ok: bool
    limit_monotone: bool
    ray_type: SequenceType
    invariance_tol: float
    limit_tol: float
    noise_band: float


def _default_ray_direction(n: int) -> tuple:
    # evenly spaced ramp with spread 1/50: exp stays conditioned to t = 1000
    return tuple(Fraction(n - 1 - 2 * i, 100 * (n - 1)) for i in range(n))


def invariance_suite(fs: FlatSpace, config: InvarianceConfig | None = None) -> InvarianceReport:
    """Measure the rotation-invariance and limit-invariance defects.

    Three experiments with a shared deterministic sample pool: (a) the
    normalized distance from the identity is rotation invariant, (b)
    rotating the base point matches un-rotating the argument, (c) for the
    configured chamber ray the block rotations and cross-block unipotents
    attached to its divergence type move points by less and less, as seen
    from far ray points.  Group and point samples are drawn once and
    reused across the schedule, so the decay rows track fixed elements.
    """
    cfg = config or InvarianceConfig()
    if cfg.samples < 1 or cfg.point_samples < 1 or cfg.group_samples < 1:
        raise InputError("sample counts must be positive")
    if not (cfg.invariance_tol > 0 and cfg.limit_tol > 0 and cfg.noise_band >= 0):
        raise InputError("tolerances must be positive")
    schedule = tuple(float(t) for t in cfg.t_schedule)
    if not schedule or any(t <= 0 for t in schedule) or list(schedule) != sorted(schedule):
        raise InputError("t_schedule must be ascending and positive")
    n = fs.n
    start = vec(cfg.ray_start) if cfg.ray_start is not None else vzero(n)
    direction = (vec(cfg.ray_direction) if cfg.ray_direction is not None
                 else _default_ray_direction(n))
    ray_type = sequence_type_of_ray(fs.root_system, start, direction)
    guard = math.log(_COND_LIMIT / 10.0)
    for t in schedule:
        if _spread(fs, vadd(start, vscale(direction, frac(t)))) >= guard:
            raise InputError(
                "t_schedule drives the ray outside the conditioning guard")

    rng = np.random.default_rng(cfg.seed)
    eye = np.eye(n)

    base_defect = 0.0
    for _ in range(cfg.samples):
        x = sample_spd(rng, n)
        k = sample_rotation(rng, n)
        base_defect = max(base_defect,
                          abs(finsler_distance(fs, act(k, x), eye)
                              - finsler_distance(fs, x, eye)))

    equi_defect = 0.0
    for _ in range(cfg.samples):
        z = sample_spd(rng, n)
        x = sample_spd(rng, n)
        k = sample_rotation(rng, n)
        lhs = psi(fs, act(k, z), x)
        rhs = psi(fs, z, act(k.T, x))
        equi_defect = max(equi_defect, abs(lhs - rhs))

    points = [sample_spd(rng, n) for _ in range(cfg.point_samples)]
    movers = ([sample_block_rotation(rng, n, ray_type.indices)
               for _ in range(cfg.group_samples)]
              + [sample_block_unipotent(rng, n, ray_type.indices, cfg.unipotent_scale)
                 for _ in range(cfg.group_samples)])
    rows = []
    for t in schedule:
        z = exp_flat(vadd(start, vscale(direction, frac(t))))
        defect = 0.0
        for x in points:
            here = finsler_distance(fs, x, z)
            for g in movers:
                defect = max(defect, abs(finsler_distance(fs, act(g, x), z) - here))
        rows.append((t, defect))

    monotone = all(rows[k + 1][1] <= rows[k][1] + cfg.noise_band
                   for k in range(len(rows) - 1))
    return InvarianceReport(
        basepoint_defect=base_defect,
        equivariance_defect=equi_defect,
        limit_defects=tuple(rows),
        basepoint_ok=base_defect <= cfg.invariance_tol,
        equivariance_ok=equi_defect <= cfg.invariance_tol,
        limit_ok=rows[-1][1] <= cfg.limit_tol,
        limit_monotone=monotone,
        ray_type=ray_type,
        invariance_tol=cfg.invariance_tol,
        limit_tol=cfg.limit_tol,
        noise_band=cfg.noise_band,
    )


def sequence_type_to_json(st: SequenceType) -> dict:
    limit = [str(x) if isinstance(x, Fraction) else float(x) for x in st.limit]
    return {"indices": list(st.indices), "limit": limit}


def consistency_report_to_json(report: FlatLimitReport) -> dict:
    return {
        "status": report.status,
        "tolerance": report.tolerance,
        "t_max": report.t_max,
        "matrix_route_max_t": report.matrix_route_max_t,
        "defects": [[t, d] for t, d in report.defects],
        "ray_type": sequence_type_to_json(report.ray_type),
    }


def invariance_report_to_json(report: InvarianceReport) -> dict:
    return {
        "basepoint_defect": report.basepoint_defect,
        "equivariance_defect": report.equivariance_defect,
        "limit_defects": [[t, d] for t, d in report.limit_defects],
        "basepoint_ok": report.basepoint_ok,
        "equivariance_ok": report.equivariance_ok,
        "limit_ok": report.limit_ok,
        "limit_monotone": report.limit_monotone,
        "ray_type": sequence_type_to_json(report.ray_type),
        "invariance_tol": report.invariance_tol,
        "limit_tol": report.limit_tol,
        "noise_band": report.noise_band,
    }
