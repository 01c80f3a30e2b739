"""Plot-ready point sets: the concurrence ball, S^3 fibre renderings, foliation sweeps.

No rendering happens here; everything produces PointCloud values that the
CLI writes as CSV or JSON.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import hopf_s7, single_qubit
from .errors import AtPole, NotNormalized
from .hopf_s7 import S4Point
from .sampling import random_unit_quaternion, unit_vector
from .states import ComplexOrInfinity, QubitState, TwoQubitState
from .two_qubit import concurrence

POLE_EPS = 1e-9


class BallPoint(NamedTuple):
    x0: float
    x1: float
    x2: float
    concurrence: float

    @property
    def radius(self) -> float:
        return math.sqrt(self.x0 ** 2 + self.x1 ** 2 + self.x2 ** 2)


@dataclass
class PointCloud:
    """R^3 points with uniform per-point metadata columns (slice, fiber_id, param)."""

    xyz: np.ndarray
    slice: np.ndarray
    fiber_id: np.ndarray
    param: np.ndarray
    label: str = ""
    line_fibers: tuple[int, ...] = ()
    stats: list[dict] = field(default_factory=list)

    def __post_init__(self):
        self.xyz = np.asarray(self.xyz, dtype=float).reshape(-1, 3)
        n = len(self.xyz)
        self.slice = np.asarray(self.slice, dtype=int).reshape(n)
        self.fiber_id = np.asarray(self.fiber_id, dtype=int).reshape(n)
        self.param = np.asarray(self.param, dtype=float).reshape(n)
        if not np.all(np.isfinite(self.xyz)):
            raise ValueError("point cloud contains non-finite coordinates")

    def __len__(self):
        return len(self.xyz)

    def fiber(self, fiber_id: int) -> np.ndarray:
        return self.xyz[self.fiber_id == fiber_id]


def concat_clouds(clouds: Sequence[PointCloud], label: str = "") -> PointCloud:
    return PointCloud(
        np.concatenate([c.xyz for c in clouds]),
        np.concatenate([c.slice for c in clouds]),
        np.concatenate([c.fiber_id for c in clouds]),
        np.concatenate([c.param for c in clouds]),
        label=label or (clouds[0].label if clouds else ""),
        line_fibers=tuple(f for c in clouds for f in c.line_fibers),
        stats=[s for c in clouds for s in c.stats],
    )


# --- unit ball ---------------------------------------------------------------

def ball_projection(s: TwoQubitState) -> BallPoint:
    """First three base coordinates (<sz (x) Id>, <sx (x) Id>, <sy (x) Id>) and the concurrence."""
    x = hopf_s7.base_coordinates(s)
    return BallPoint(x.x0, x.x1, x.x2, concurrence(s))


def ball_cloud(states: Sequence[TwoQubitState], label: str = "ball") -> PointCloud:
    pts = [ball_projection(s) for s in states]
    n = len(pts)
    return PointCloud(
        np.array([p[:3] for p in pts], dtype=float).reshape(n, 3),
        np.zeros(n), np.arange(n), np.array([p.concurrence for p in pts]),
        label=label,
    )


# --- S^3 stereographic renderings --------------------------------------------

def stereo_s3_to_r3(p: Sequence[float], pole: int = 0, eps: float = POLE_EPS) -> np.ndarray:
    """Stereographic projection of a unit 4-vector from the pole e_pole.

    The remaining three coordinates, in increasing index order, are divided
    by 1 - p[pole].
    """
    p = np.asarray(p, dtype=float)
    if abs(float(p @ p) - 1.0) > 1e-9:
        raise NotNormalized(f"point is not on the unit S^3 (|p|^2 = {float(p @ p)!r})")
    e = np.zeros(4)
    e[pole] = 1.0
    if np.linalg.norm(p - e) <= eps:
        raise AtPole("point coincides with the projection pole")
    rest = np.delete(p, pole)
    return rest / (1.0 - p[pole])


def _as_real4(s: QubitState) -> np.ndarray:
    return np.array([s.alpha.real, s.alpha.imag, s.beta.real, s.beta.imag])


def fiber_through_pole(base: ComplexOrInfinity, pole: int = 0, eps: float = POLE_EPS) -> bool:
    rep = single_qubit.lift(base)
    amp = rep.alpha if pole in (0, 1) else rep.beta
    return abs(abs(amp) - 1.0) <= eps


def fiber_cloud(base: ComplexOrInfinity, samples: int, pole: int = 0, fiber_id: int = 0) -> PointCloud:
    """Stereographic image of the S^3 fibre over one Bloch point.

    Samples are spaced uniformly in the global phase. The fibre through the
    projection pole is an infinite straight line; it is sampled at half-step
    offsets so no sample hits the pole, and its id is recorded in line_fibers.
    """
    if samples < 3:
        raise ValueError("a fibre needs at least 3 samples")
    rep = single_qubit.lift(base)
    target = single_qubit.hopf_map(rep)
    line = fiber_through_pole(base, pole)
    offset = 0.5 if line else 0.0
    phis = 2.0 * math.pi * (np.arange(samples) + offset) / samples
    pts = np.empty((samples, 3))
    for k, phi in enumerate(phis):
        s = single_qubit.fiber_sample(rep, float(phi))
        img = single_qubit.hopf_map(s)
        if max(abs(a - b) for a, b in zip(img, target)) > 1e-9:
            raise AssertionError("fibre sample left its Bloch point")
        pts[k] = stereo_s3_to_r3(_as_real4(s), pole)
    return PointCloud(pts, np.zeros(samples), np.full(samples, fiber_id), phis,
                      label="fiber", line_fibers=(fiber_id,) if line else ())


def fiber_clouds(bases: Sequence[ComplexOrInfinity], samples: int, pole: int = 0) -> PointCloud:
    return concat_clouds([fiber_cloud(b, samples, pole, i) for i, b in enumerate(bases)], "fiber")


def fit_circle(points: np.ndarray) -> tuple[np.ndarray, float, np.ndarray, float]:
    """Least-squares circle in 3-D: plane by SVD, then an algebraic fit in that plane.

    Returns (center, radius, unit normal, max deviation), the deviation being
    the largest distance from a point to the fitted circle.
    """
    pts = np.asarray(points, dtype=float)
    c0 = pts.mean(axis=0)
    _, _, vt = np.linalg.svd(pts - c0)
    u, v, normal = vt[0], vt[1], vt[2]
    xy = np.column_stack(((pts - c0) @ u, (pts - c0) @ v))
    a = np.column_stack((2 * xy, np.ones(len(xy))))
    rhs = (xy ** 2).sum(axis=1)
    (cx, cy, k), *_ = np.linalg.lstsq(a, rhs, rcond=None)
    radius = math.sqrt(k + cx * cx + cy * cy)
    center = c0 + cx * u + cy * v
    d = pts - center
    h = d @ normal
    in_plane = np.linalg.norm(d - np.outer(h, normal), axis=1)
    dev = np.sqrt(h ** 2 + (in_plane - radius) ** 2)
    return center, radius, normal, float(dev.max())


def gauss_linking_number(a: np.ndarray, b: np.ndarray) -> float:
    """Linking number of two closed polygons (last vertex joins the first).

    Sums the exact signed solid angle of every segment pair, so the result is
    an integer up to rounding for any non-intersecting polygons.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    p0, p1 = a, np.roll(a, -1, axis=0)
    r0, r1 = b, np.roll(b, -1, axis=0)
    P0, P1 = p0[:, None, :], p1[:, None, :]
    R0, R1 = r0[None, :, :], r1[None, :, :]
    r13, r14 = R0 - P0, R1 - P0
    r23, r24 = R0 - P1, R1 - P1

    def unit_cross(x, y):
        c = np.cross(x, y)
        n = np.linalg.norm(c, axis=-1, keepdims=True)
        return np.divide(c, n, out=np.zeros_like(c), where=n > 0)

    n1 = unit_cross(r13, r14)
    n2 = unit_cross(r14, r24)
    n3 = unit_cross(r24, r23)
    n4 = unit_cross(r23, r13)

    def asin_dot(x, y):
        return np.arcsin(np.clip((x * y).sum(axis=-1), -1.0, 1.0))

    omega = asin_dot(n1, n2) + asin_dot(n2, n3) + asin_dot(n3, n4) + asin_dot(n4, n1)
    sign = np.sign((np.cross(R1 - R0, P1 - P0) * r13).sum(axis=-1))
    return float((omega * sign).sum() / (4.0 * math.pi))


# --- foliation sweeps --------------------------------------------------------

@dataclass(frozen=True)
class SweepSpec:
    """Slices at fixed Omega ("omega") or at fixed concurrence ("concurrence")."""

    kind: str
    values: tuple[float, ...]

    def __post_init__(self):
        if self.kind not in ("omega", "concurrence"):
            raise ValueError(f"unknown sweep kind {self.kind!r}")
        if not self.values:
            raise ValueError("sweep grid is empty")
        for v in self.values:
            if self.kind == "omega" and not 0.0 <= v <= math.pi / 2:
                raise ValueError(f"Omega={v} outside [0, pi/2]")
            if self.kind == "concurrence" and not 0.0 <= v <= 1.0:
                raise ValueError(f"concurrence={v} outside [0, 1]")


def _slice_base_point(kind: str, value: float, rng: np.random.Generator) -> S4Point:
    if kind == "concurrence":
        r = math.sqrt(max(1.0 - value * value, 0.0))
        u = unit_vector(rng, 3)
        chi = rng.uniform(0.0, 2.0 * math.pi)
        return S4Point(r * u[0], r * u[1], r * u[2], value * math.cos(chi), value * math.sin(chi))
    w = unit_vector(rng, 4)
    s2 = math.sin(2.0 * value)
    return S4Point(math.cos(2.0 * value), *(s2 * w))


def sample_slice(kind: str, value: float, samples: int, rng: np.random.Generator) -> list[TwoQubitState]:
    """Random states constrained to one slice, built through the inverse Hopf map."""
    return [hopf_s7.lift_base_point(_slice_base_point(kind, value, rng), random_unit_quaternion(rng))
            for _ in range(samples)]


def _run_slice(spec: SweepSpec, index: int, samples: int, seed: int) -> PointCloud:
    rng = np.random.default_rng([seed, index])
    value = spec.values[index]
    balls = [ball_projection(s) for s in sample_slice(spec.kind, value, samples, rng)]
    radii = np.array([b.radius for b in balls])
    conc = np.array([b.concurrence for b in balls])
    stats = {
        "slice": index,
        "kind": spec.kind,
        "param": value,
        "count": samples,
        "radius_mean": float(radii.mean()),
        "radius_min": float(radii.min()),
        "radius_max": float(radii.max()),
        # r^2 + c^2 = 1; squared form because sqrt(1 - c^2) is ill-conditioned near c = 1
        "shell_sq_max_dev": float(np.max(np.abs(radii ** 2 + conc ** 2 - 1.0))),
    }
    if spec.kind == "omega":
        stats["x0_max_dev"] = float(max(abs(b.x0 - math.cos(2 * value)) for b in balls))
    else:
        stats["shell_max_dev"] = float(np.max(np.abs(radii - math.sqrt(1.0 - value * value))))
        stats["concurrence_max_dev"] = float(np.max(np.abs(conc - value)))
    return PointCloud(
        np.array([b[:3] for b in balls], dtype=float),
        np.full(samples, index), np.arange(samples), np.full(samples, value),
        label=f"foliation-{spec.kind}", stats=[stats],
    )


def foliation_sweep(spec: SweepSpec, samples: int, seed: int = 0, workers: int = 1) -> PointCloud:
    """Ball points of random states on each slice of the grid.

    Slice i draws from its own generator seeded by (seed, i), so results do
    not depend on workers or on completion order.
    """
    if samples < 1:
        raise ValueError("samples per slice must be >= 1")
    idx = range(len(spec.values))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            slices = list(ex.map(lambda i: _run_slice(spec, i, samples, seed), idx))
    else:
        slices = [_run_slice(spec, i, samples, seed) for i in idx]
    return concat_clouds(slices, f"foliation-{spec.kind}")
