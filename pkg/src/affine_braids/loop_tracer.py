"""Turn sampled closed motions of labeled planar points into pure braid words.

A loop is a ``(T, k, 2)`` array of frames joined by straight segments.
Crossings are read from the order of the points projected onto a direction
vector ``u``: when two neighbours in that order swap, we emit sigma_j for
their position j (1-based, smallest projection first). The crossing is
positive when the pair turns counterclockwise about its midpoint, which
makes a counterclockwise rotation of the whole plane trace to the full
twist.

Strand positions are always those of the base frame sorted along a fixed
reference direction. Tracing along any other direction is conjugated back
by the braid of rotating the base frame between the two directions, so the
result names the same element of P_k whichever direction was used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .braid_core import BraidWord, compose, inverse, is_pure
from .center_quotient import cosets_equal, make_class
from .errors import TraceError

# irrational multiple of pi, so retries never cycle back to a bad direction
PERTURBATION = math.pi * (math.sqrt(2.0) - 1.0) * 1e-3


@dataclass(frozen=True)
class Tolerances:
    eps_sep: float = 1e-9
    eps_rank: float = 1e-9
    eps_close: float = 1e-9

    def __post_init__(self):
        for name in ("eps_sep", "eps_rank", "eps_close"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class TraceOptions:
    tolerances: Tolerances = field(default_factory=Tolerances)
    reference: float = 0.0
    max_depth: int = 32
    retries: int = 16

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")
        if self.retries < 0:
            raise ValueError("retries must be non-negative")


@dataclass(frozen=True)
class Configuration:
    """k labeled points in the plane."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
            raise TraceError(f"configuration must have shape (k, 2) with k >= 2, got {pts.shape}")
        object.__setattr__(self, "points", pts)

    @property
    def k(self) -> int:
        return self.points.shape[0]

    def separation(self) -> float:
        return float(_separations(self.points[None])[0])

    def collinearity(self) -> float:
        """Smallest singular value of the centered coordinates; zero iff collinear."""
        return float(_collinearities(self.points[None])[0])


class LoopTrajectory:
    """A time-ordered sequence of configurations of the same k points."""

    def __init__(self, frames, times=None):
        frames = np.array(frames, dtype=float)
        if frames.ndim != 3 or frames.shape[2] != 2:
            raise TraceError(f"frames must have shape (T, k, 2), got {frames.shape}")
        if frames.shape[0] < 2:
            raise TraceError("a loop needs at least 2 frames")
        if frames.shape[1] < 2:
            raise TraceError("a loop needs at least 2 points")
        if times is not None:
            times = np.asarray(times, dtype=float)
            if times.shape != (frames.shape[0],):
                raise TraceError("times must have one entry per frame")
            bad = np.nonzero(np.diff(times) <= 0)[0]
            if bad.size:
                raise TraceError("times must be strictly increasing", int(bad[0]) + 1)
        frames.setflags(write=False)
        self.frames = frames
        self.times = times

    @property
    def k(self) -> int:
        return self.frames.shape[1]

    def __len__(self) -> int:
        return self.frames.shape[0]

    def frame(self, t: int) -> Configuration:
        return Configuration(self.frames[t])

    def closure_residual(self) -> float:
        return float(np.max(np.linalg.norm(self.frames[-1] - self.frames[0], axis=1)))

    def __repr__(self) -> str:
        return f"LoopTrajectory(T={len(self)}, k={self.k})"


# -- validation ----------------------------------------------------------------

def _separations(frames: np.ndarray) -> np.ndarray:
    k = frames.shape[1]
    i, j = np.triu_indices(k, 1)
    return np.linalg.norm(frames[:, i] - frames[:, j], axis=2).min(axis=1)


def _collinearities(frames: np.ndarray) -> np.ndarray:
    centered = frames - frames.mean(axis=1, keepdims=True)
    return np.linalg.svd(centered, compute_uv=False)[:, -1]


@dataclass
class ValidationReport:
    separation: np.ndarray
    collinearity: np.ndarray
    closure_residual: float
    tolerances: Tolerances
    verdict: str
    messages: list[str]

    @property
    def in_E_k(self) -> bool:
        return self.verdict == "E_k"

    @property
    def in_F_k(self) -> bool:
        return self.verdict in ("E_k", "F_k")

    def summary(self) -> str:
        lines = [
            f"verdict: {self.verdict}",
            f"frames: {len(self.separation)}",
            f"min separation: {self.separation.min():.6g}",
            f"min collinearity margin: {self.collinearity.min():.6g}",
            f"closure residual: {self.closure_residual:.6g}",
        ]
        lines += [f"warning: {m}" for m in self.messages]
        return "\n".join(lines)


def validate(loop: LoopTrajectory, tolerances: Tolerances | None = None) -> ValidationReport:
    """Report per-frame margins and whether the loop lies in E_k, only F_k, or neither.

    E_k: closed, pairwise distinct, never all collinear in any frame.
    F_k: closed and pairwise distinct.
    """
    tol = tolerances or Tolerances()
    sep = _separations(loop.frames)
    col = _collinearities(loop.frames)
    residual = loop.closure_residual()
    messages = []
    verdict = "E_k"
    if residual > tol.eps_close:
        messages.append(f"loop is not closed: last frame differs from first by {residual:.3g}")
        verdict = "invalid"
    close = np.nonzero(sep <= tol.eps_sep)[0]
    if close.size:
        messages.append(f"points coincide in {close.size} frame(s), first at frame {close[0]}")
        verdict = "invalid"
    flat = np.nonzero(col <= tol.eps_rank)[0]
    if flat.size:
        messages.append(
            f"points are collinear in {flat.size} frame(s), first at frame {flat[0]}; "
            "the loop lies in F_k but not in E_k"
        )
        if verdict == "E_k":
            verdict = "F_k"
    return ValidationReport(sep, col, residual, tol, verdict, messages)


# -- tracing -------------------------------------------------------------------

class _Degenerate(Exception):
    """The current projection direction is not generic for this loop."""


def _unit(theta: float) -> np.ndarray:
    return np.array([math.cos(theta), math.sin(theta)])


def _order(proj: np.ndarray, tie: float) -> np.ndarray:
    order = np.argsort(proj, kind="stable")
    if np.any(np.diff(proj[order]) <= tie):
        raise _Degenerate
    return order


def _check_segment(a: np.ndarray, b: np.ndarray, eps: float, t: int) -> None:
    """Points moving linearly from a to b must stay at least eps apart."""
    i, j = np.triu_indices(a.shape[0], 1)
    d0 = a[i] - a[j]
    dd = (b[i] - b[j]) - d0
    denom = np.einsum("ij,ij->i", dd, dd)
    s = np.where(denom > 0, -np.einsum("ij,ij->i", d0, dd) / np.where(denom > 0, denom, 1.0), 0.0)
    s = np.clip(s, 0.0, 1.0)
    gap = np.linalg.norm(d0 + s[:, None] * dd, axis=1)
    hit = np.argmin(gap)
    if gap[hit] <= eps:
        raise TraceError(
            f"sampling too coarse: points {i[hit] + 1} and {j[hit] + 1} collide "
            f"between frames {t} and {t + 1}",
            t,
        )


def _segment_letters(a, b, u, tie, depth, max_depth, out):
    """Append the crossings of the straight motion a -> b projected on u."""
    pa, pb = a @ u, b @ u
    oa, ob = _order(pa, tie), _order(pb, tie)
    if np.array_equal(oa, ob):
        return
    rank_b = np.empty_like(ob)
    rank_b[ob] = np.arange(len(ob))
    ranks = rank_b[oa]
    swaps = np.nonzero(np.diff(ranks) < 0)[0]
    n_inversions = sum(int(np.sum(ranks[m + 1:] < ranks[m])) for m in range(len(ranks)))
    if n_inversions == 1:
        pos = int(swaps[0])
        p, q = oa[pos], oa[pos + 1]
        # crossing instant of the two projections, then the rotation sense there
        gap_a, gap_b = pa[q] - pa[p], pb[q] - pb[p]
        s = gap_a / (gap_a - gap_b)
        rel = (a[q] - a[p]) + s * ((b[q] - b[p]) - (a[q] - a[p]))
        vel = (b[q] - b[p]) - (a[q] - a[p])
        turn = rel[0] * vel[1] - rel[1] * vel[0]
        if turn == 0.0:
            raise _Degenerate
        out.append(pos + 1 if turn > 0 else -(pos + 1))
        return
    if depth >= max_depth:
        raise _Degenerate
    mid = 0.5 * (a + b)
    _segment_letters(a, mid, u, tie, depth + 1, max_depth, out)
    _segment_letters(mid, b, u, tie, depth + 1, max_depth, out)


def _trace_path(frames: np.ndarray, theta: float, opts: TraceOptions) -> list[int]:
    u = _unit(theta)
    tie = opts.tolerances.eps_sep
    letters: list[int] = []
    for t in range(len(frames) - 1):
        _segment_letters(frames[t], frames[t + 1], u, tie, 0, opts.max_depth, letters)
    return letters


def _rotation_frames(base: np.ndarray, angle: float) -> np.ndarray:
    steps = max(2, math.ceil(abs(angle) / (math.pi / 16)))
    return np.stack([base @ _row_rotation(s) for s in np.linspace(0.0, angle, steps + 1)])


def _row_rotation(theta: float) -> np.ndarray:
    """Rotation matrix acting on row vectors: p @ R turns p counterclockwise by theta."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [-s, c]])


def _generic_reference(base: np.ndarray, opts: TraceOptions) -> float:
    theta = opts.reference
    for _ in range(opts.retries + 1):
        try:
            _order(base @ _unit(theta), opts.tolerances.eps_sep)
            return theta
        except _Degenerate:
            theta += PERTURBATION
    raise TraceError("base frame has coincident projections along every tried reference direction", 0)


def base_order(loop: LoopTrajectory, options: TraceOptions | None = None) -> list[int]:
    """Point labels (1-based) in strand-position order at the base frame."""
    opts = options or TraceOptions()
    base = loop.frames[0]
    ref = _generic_reference(base, opts)
    return [int(i) + 1 for i in np.argsort(base @ _unit(ref))]


def _check_loop(loop: LoopTrajectory, tol: Tolerances) -> None:
    residual = loop.closure_residual()
    if residual > tol.eps_close:
        raise TraceError(f"loop is not closed (residual {residual:.3g} > {tol.eps_close:g})", len(loop) - 1)
    sep = _separations(loop.frames)
    bad = np.nonzero(sep <= tol.eps_sep)[0]
    if bad.size:
        raise TraceError(f"points coincide (separation {sep[bad[0]]:.3g})", int(bad[0]))


def trace(
    loop: LoopTrajectory,
    direction: float | None = None,
    options: TraceOptions | None = None,
) -> BraidWord:
    """The pure braid traced by a closed loop of k labeled points.

    ``direction`` (radians) is the projection used to detect crossings; it
    defaults to the reference direction in ``options``. Degenerate
    directions are nudged and retried. Collinear frames are allowed here,
    since tracing only needs distinct points; see :func:`validate`.
    """
    opts = options or TraceOptions()
    _check_loop(loop, opts.tolerances)
    frames = loop.frames
    for t in range(len(frames) - 1):
        _check_segment(frames[t], frames[t + 1], opts.tolerances.eps_sep, t)
    k = loop.k
    ref = _generic_reference(frames[0], opts)
    theta = ref if direction is None else float(direction)
    for _ in range(opts.retries + 1):
        try:
            word = BraidWord(k, _trace_path(frames, theta, opts))
            if not is_pure(word):
                raise _Degenerate
            if theta != ref:
                # rotating the base frame by (ref - theta) carries theta-positions to ref-positions
                delta = math.remainder(ref - theta, 2 * math.pi)
                transit = BraidWord(k, _trace_path(_rotation_frames(frames[0], delta), ref, opts))
                word = compose(compose(transit, word), inverse(transit))
            return word
        except _Degenerate:
            theta += PERTURBATION
    raise TraceError(
        f"no generic projection direction found after {opts.retries} retries "
        "(simultaneous crossings or sampling too coarse)"
    )


def loops_homotopic(
    a: LoopTrajectory,
    b: LoopTrajectory,
    direction: float | None = None,
    options: TraceOptions | None = None,
) -> bool:
    """Whether two based loops give the same element of P_k modulo the full twist."""
    wa = trace(a, direction, options)
    wb = trace(b, direction, options)
    return cosets_equal(make_class(wa), make_class(wb, warn=False))


# -- loop builders ------------------------------------------------------------

def generic_configuration(k: int) -> np.ndarray:
    """k points with distinct radii and angles, never collinear."""
    idx = np.arange(k)
    radius = 1.0 + 0.37 * idx
    angle = 2.0 * np.pi * idx / k + 0.23 * idx**2 + 0.11
    return np.stack([radius * np.cos(angle), radius * np.sin(angle)], axis=1)


def rotation_loop(k: int, samples: int, base: np.ndarray | None = None) -> LoopTrajectory:
    """One full counterclockwise turn of the plane applied to a base configuration.

    Frame t is ``base @ gamma(theta_t)`` with gamma the rotation matrix
    [[cos, sin], [-sin, cos]] acting on row vectors and theta_t uniform on
    [0, 2 pi].
    """
    if k < 3:
        raise ValueError(f"rotation loop needs k >= 3, got {k}")
    if samples < 8 * k:
        raise ValueError(f"rotation loop needs at least 8k = {8 * k} samples, got {samples}")
    base = generic_configuration(k) if base is None else np.asarray(base, dtype=float)
    if base.shape != (k, 2):
        raise ValueError(f"base configuration must have shape ({k}, 2)")
    thetas = np.linspace(0.0, 2.0 * np.pi, samples)
    frames = np.stack([base @ _row_rotation(th) for th in thetas])
    frames[-1] = frames[0]
    return LoopTrajectory(frames, thetas)


def stationary_loop(base: np.ndarray, samples: int = 2) -> LoopTrajectory:
    base = np.asarray(base, dtype=float)
    return LoopTrajectory(np.repeat(base[None], samples, axis=0))


def pair_twist_loop(
    base: np.ndarray, i: int, j: int, turns: float = 1.0, samples: int = 200
) -> LoopTrajectory:
    """Points i and j (1-based) revolve counterclockwise about their midpoint.

    ``turns=1`` is two swaps, i.e. a closed loop; other points stay fixed.
    """
    base = np.asarray(base, dtype=float)
    mid = 0.5 * (base[i - 1] + base[j - 1])
    frames = []
    for th in np.linspace(0.0, 2.0 * np.pi * turns, samples):
        f = base.copy()
        f[i - 1] = mid + (base[i - 1] - mid) @ _row_rotation(th)
        f[j - 1] = mid + (base[j - 1] - mid) @ _row_rotation(th)
        frames.append(f)
    if float(turns).is_integer():
        frames[-1] = frames[0]
    return LoopTrajectory(frames)


def concatenate(a: LoopTrajectory, b: LoopTrajectory) -> LoopTrajectory:
    """a followed by b; b must start where a ends."""
    if a.k != b.k:
        raise TraceError(f"loops have different point counts: {a.k} != {b.k}")
    return LoopTrajectory(np.concatenate([a.frames, b.frames[1:]]))


def reverse(loop: LoopTrajectory) -> LoopTrajectory:
    return LoopTrajectory(loop.frames[::-1])


def refine(loop: LoopTrajectory) -> LoopTrajectory:
    """Insert the midpoint of every segment (same piecewise-linear path, 2T-1 frames)."""
    f = loop.frames
    out = np.empty((2 * len(f) - 1,) + f.shape[1:])
    out[0::2] = f
    out[1::2] = 0.5 * (f[:-1] + f[1:])
    return LoopTrajectory(out)


def trig_loop(centers: np.ndarray, coeffs: np.ndarray, samples: int) -> LoopTrajectory:
    """Closed smooth paths ``c_i + sum_m a_im cos(m t) + b_im sin(m t)``.

    ``coeffs`` has shape (k, M, 2, 2): for point i and harmonic m+1, the
    cosine and sine coefficient vectors. Frames sample t uniformly on [0, 2 pi].
    """
    centers = np.asarray(centers, dtype=float)
    coeffs = np.asarray(coeffs, dtype=float)
    t = np.linspace(0.0, 2.0 * np.pi, samples)
    m = np.arange(1, coeffs.shape[1] + 1)
    cos, sin = np.cos(np.outer(t, m)), np.sin(np.outer(t, m))
    frames = (
        centers[None]
        + np.einsum("tm,imd->tid", cos, coeffs[:, :, 0, :])
        + np.einsum("tm,imd->tid", sin, coeffs[:, :, 1, :])
    )
    frames[-1] = frames[0]
    return LoopTrajectory(frames, t)


def random_trig_loop(
    k: int,
    samples: int,
    rng: np.random.Generator,
    harmonics: int = 2,
    amplitude: float = 1.0,
    min_sep: float = 0.05,
    max_tries: int = 1000,
) -> tuple[LoopTrajectory, np.ndarray, np.ndarray]:
    """Rejection-sample a smooth loop whose points stay ``min_sep`` apart.

    Returns the loop together with its centers and coefficients so the
    same motion can be resampled at other resolutions.
    """
    for _ in range(max_tries):
        centers = rng.uniform(-1.5, 1.5, size=(k, 2))
        scale = amplitude / np.arange(1, harmonics + 1)[None, :, None, None]
        coeffs = rng.normal(size=(k, harmonics, 2, 2)) * scale
        dense = trig_loop(centers, coeffs, 8 * samples)
        if _separations(dense.frames).min() > min_sep:
            return trig_loop(centers, coeffs, samples), centers, coeffs
    raise RuntimeError(f"no {min_sep}-separated loop found in {max_tries} tries")
