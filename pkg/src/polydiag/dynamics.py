"""Coupled cell ODE integration and numeric invariance checks.

Systems have the form xdot_i = f(x_i) + H sum_j M[i,j] x_j with identical
internal dynamics f on R^k, a k x k coupling matrix H, and an n x n network
matrix M.  Everything here is floating point; the exact machinery hands over
tagged partitions and matrices once, at the boundary.

Integration is classical fixed-step RK4.  When the vector field maps an
invariant linear subspace into itself, RK4 stays on the subspace up to
round-off, so tight invariance tolerances are meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .partitions import TaggedPartition

BLOWUP_NORM = 1e9


class BlowupError(RuntimeError):
    def __init__(self, time, norm):
        super().__init__("state norm %.3g exceeds %.1g at t=%.6g" % (norm, BLOWUP_NORM, time))
        self.time = time
        self.norm = norm


# ---------------------------------------------------------------------------
# internal dynamics presets


@dataclass(frozen=True)
class Preset:
    name: str
    k: int
    func: callable  # vectorized: (n, k) array -> (n, k) array
    odd: bool
    fixes_origin: bool
    domain_excludes_zero: bool = False
    equivariances: tuple = ()  # known k x k matrices N with f(Nx) = Nf(x)

    def __call__(self, x):
        return self.func(x)


def preset_f(name: str, **params) -> Preset:
    """Named internal dynamics.

    vanderpol(eps=2): k=2, f(u,v) = (v, -eps (1-u^2) v - u), odd.
    lorenz(sigma=10, rho=28, beta=8/3): k=3, standard chaotic parameters.
    singular_osc: k=2, f(u,v) = (v, -v - u + 1/u), odd with 0 outside dom f.
    zero(k=1): f = 0.  cubic_odd(k=1): componentwise x - x^3.
    """
    if name == "vanderpol":
        eps = float(params.pop("eps", 2.0))
        _reject_extra(params)

        def f(x):
            u, v = x[..., 0], x[..., 1]
            return np.stack([v, -eps * (1.0 - u * u) * v - u], axis=-1)

        return Preset("vanderpol", 2, f, odd=True, fixes_origin=True)
    if name == "lorenz":
        sigma = float(params.pop("sigma", 10.0))
        rho = float(params.pop("rho", 28.0))
        beta = float(params.pop("beta", 8.0 / 3.0))
        _reject_extra(params)

        def f(x):
            u, v, w = x[..., 0], x[..., 1], x[..., 2]
            return np.stack([sigma * (v - u), u * (rho - w) - v, u * v - beta * w], axis=-1)

        n_sym = np.diag([-1.0, -1.0, 1.0])
        return Preset("lorenz", 3, f, odd=False, fixes_origin=True, equivariances=(n_sym,))
    if name == "singular_osc":
        _reject_extra(params)

        def f(x):
            u, v = x[..., 0], x[..., 1]
            return np.stack([v, -v - u + 1.0 / u], axis=-1)

        return Preset("singular_osc", 2, f, odd=True, fixes_origin=False, domain_excludes_zero=True)
    if name == "zero":
        k = int(params.pop("k", 1))
        _reject_extra(params)
        return Preset("zero", k, lambda x: np.zeros_like(x), odd=True, fixes_origin=True)
    if name == "cubic_odd":
        k = int(params.pop("k", 1))
        _reject_extra(params)
        return Preset("cubic_odd", k, lambda x: x - x**3, odd=True, fixes_origin=True)
    raise KeyError("unknown preset %r" % name)


def _reject_extra(params):
    if params:
        raise TypeError("unknown preset parameters: %s" % sorted(params))


VDP_H = np.array([[0.0, 0.0], [1.0, 0.0]])
LORENZ_H_PLUS = np.diag([0.0, 0.0, 1.0])  # couples the w equation
LORENZ_H_MINUS = np.diag([0.0, 1.0, 0.0])  # couples the v equation


# ---------------------------------------------------------------------------
# systems and trajectories


@dataclass
class CoupledSystem:
    n: int
    k: int
    f: Preset
    H: np.ndarray
    M: np.ndarray

    def __post_init__(self):
        self.H = np.asarray(self.H, dtype=float)
        self.M = np.asarray(self.M, dtype=float)
        if self.f.k != self.k or self.H.shape != (self.k, self.k):
            raise ValueError("coupling dimensions inconsistent with k=%d" % self.k)
        if self.M.shape != (self.n, self.n):
            raise ValueError("network matrix must be %dx%d" % (self.n, self.n))

    def rhs(self, x):
        return self.f(x) + (self.M @ x) @ self.H.T


@dataclass
class Trajectory:
    times: np.ndarray
    states: np.ndarray  # (len(times), n, k)

    def cell_coordinate(self, i, coord=0):
        return self.states[:, i - 1, coord]

    def to_csv(self) -> str:
        n, k = self.states.shape[1], self.states.shape[2]
        head = "t," + ",".join("x%d" % (j + 1) for j in range(n * k))
        flat = self.states.reshape(len(self.times), n * k)
        rows = [
            "%.10g,%s" % (t, ",".join("%.16g" % v for v in row))
            for t, row in zip(self.times, flat)
        ]
        return head + "\n" + "\n".join(rows) + "\n"


def integrate(sys: CoupledSystem, x0, dt: float, T: float) -> Trajectory:
    """Fixed-step RK4 from x0 over [0, T].  Raises BlowupError when the
    state norm passes 1e9 or turns into NaN."""
    if dt <= 0 or T <= 0:
        raise ValueError("dt and T must be positive")
    steps = int(round(T / dt))
    x = np.array(x0, dtype=float).reshape(sys.n, sys.k)
    out = np.empty((steps + 1, sys.n, sys.k))
    out[0] = x
    rhs = sys.rhs
    h = dt
    for s in range(1, steps + 1):
        k1 = rhs(x)
        k2 = rhs(x + 0.5 * h * k1)
        k3 = rhs(x + 0.5 * h * k2)
        k4 = rhs(x + h * k3)
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        norm = float(np.linalg.norm(x))
        if not np.isfinite(norm) or norm > BLOWUP_NORM:
            raise BlowupError(s * h, norm)
        out[s] = x
    return Trajectory(np.arange(steps + 1) * dt, out)


# ---------------------------------------------------------------------------
# twisted polydiagonal subspaces of (R^k)^n


@dataclass
class TwistedSubspace:
    """Delta_P^N: x_i = x_j on shared classes, x_i = N x_j across starred
    pairs, x_i = N x_i on the fixed class.  N defaults to -I, which gives
    the plain tensor product R^k (x) Delta_P."""

    partition: TaggedPartition
    k: int
    N: np.ndarray | None = None

    def __post_init__(self):
        if self.N is None:
            self.N = -np.eye(self.k)
        self.N = np.asarray(self.N, dtype=float)
        if self.N.shape != (self.k, self.k):
            raise ValueError("N must be %dx%d" % (self.k, self.k))
        if np.max(np.abs(self.N @ self.N - np.eye(self.k))) > 1e-12:
            raise ValueError("N^2 must equal the identity")


def _residuals(states, s: TwistedSubspace):
    """Stacked constraint residuals for a batch of states (m, n, k)."""
    p = s.partition
    res = []
    rep = {ci: states[:, cls[0] - 1, :] for ci, cls in enumerate(p.classes)}
    for ci, cls in enumerate(p.classes):
        for cell in cls[1:]:
            res.append(states[:, cell - 1, :] - rep[ci])
    for i, j in p.pairs:
        res.append(rep[i] - rep[j] @ s.N.T)
    if p.fixed is not None:
        res.append(0.5 * (rep[p.fixed] - rep[p.fixed] @ s.N.T))
    if not res:
        return np.zeros((states.shape[0], 0))
    return np.concatenate(res, axis=1)


def subspace_distances(states, s: TwistedSubspace):
    """Normalized constraint residual per state of a batch (m, n, k)."""
    states = np.asarray(states, dtype=float)
    res = _residuals(states, s)
    norms = np.linalg.norm(states.reshape(states.shape[0], -1), axis=1)
    return np.linalg.norm(res, axis=1) / (norms + 1.0)


def subspace_distance(x, s: TwistedSubspace) -> float:
    """Normalized residual of the defining constraints at a state x.

    Same-class residuals x_i - x_rep, pair residuals x_i - N x_j, and fixed
    class residuals (x_i - N x_i)/2 (which is just x_i when N = -I), all
    stacked, measured in the Euclidean norm and divided by ||x|| + 1.
    """
    p = s.partition
    x = np.asarray(x, dtype=float).reshape(1, p.n, s.k)
    return float(subspace_distances(x, s)[0])


def sample_in_subspace(s: TwistedSubspace, rng, scale=1.0):
    """Random state inside the subspace: one coefficient block per class,
    uniform in [-scale, scale]^k, propagated through the constraints."""
    p = s.partition
    x = np.zeros((p.n, s.k))
    values = {}
    for ci in range(len(p.classes)):
        values[ci] = rng.uniform(-scale, scale, size=s.k)
    for i, j in p.pairs:
        values[i] = s.N @ values[j]
    if p.fixed is not None:
        v = values[p.fixed]
        values[p.fixed] = 0.5 * (v + s.N @ v)  # project onto the N-fixed space
    for ci, cls in enumerate(p.classes):
        for cell in cls:
            x[cell - 1] = values[ci]
    return x


@dataclass
class InvarianceReport:
    subspace: TwistedSubspace
    trials: int
    tol: float
    max_distance: float
    blowups: int = 0
    distances: list = field(default_factory=list)

    @property
    def passed(self):
        return self.blowups == 0 and self.max_distance <= self.tol

    @property
    def inconclusive(self):
        return self.blowups > 0


def invariance_test(sys, s: TwistedSubspace, trials=3, dt=1e-3, T=50.0, tol=1e-6, seed=0):
    """Integrate from random starts inside s and track the worst subspace
    distance along the way.  Blow-ups are counted as inconclusive rather
    than failures."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    blowups = 0
    dists = []
    for _ in range(trials):
        x0 = sample_in_subspace(s, rng)
        try:
            traj = integrate(sys, x0, dt, T)
        except BlowupError:
            blowups += 1
            continue
        d = float(np.max(subspace_distances(traj.states, s)))
        dists.append(d)
        worst = max(worst, d)
    return InvarianceReport(s, trials, tol, worst, blowups, dists)


# ---------------------------------------------------------------------------
# cell-symmetry equivariance


@dataclass
class EquivarianceReport:
    hypotheses_met: bool
    reason: str | None
    max_residual: float
    tol: float

    @property
    def passed(self):
        return self.hypotheses_met and self.max_residual <= self.tol


def equivariance_check(sys, N, ell, samples=50, seed=0):
    """Check F(gamma_ell(x)) = gamma_ell(F(x)) for the single-cell map
    gamma_ell applying N in slot ell, assuming f(Nx) = Nf(x) and HN = NH = H.
    Hypothesis failures are reported and the residual check is skipped."""
    N = np.asarray(N, dtype=float)
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-2, 2, size=(samples, sys.k))
    f_res = float(np.max(np.abs(sys.f(pts @ N.T) - sys.f(pts) @ N.T)))
    if f_res > 1e-10:
        return EquivarianceReport(False, "f is not N-equivariant (residual %.3g)" % f_res, np.inf, 0.0)
    hn, nh = sys.H @ N, N @ sys.H
    if np.max(np.abs(hn - sys.H)) > 1e-12 or np.max(np.abs(nh - sys.H)) > 1e-12:
        reason = "HN = NH = H fails"
        if np.max(np.abs(hn + sys.H)) <= 1e-12 and np.max(np.abs(nh + sys.H)) <= 1e-12:
            reason += " (found HN = NH = -H instead)"
        return EquivarianceReport(False, reason, np.inf, 0.0)
    worst = 0.0
    tol = 0.0
    for _ in range(samples):
        x = rng.uniform(-2, 2, size=(sys.n, sys.k))
        gx = x.copy()
        gx[ell - 1] = N @ gx[ell - 1]
        fx = sys.rhs(x)
        gfx = fx.copy()
        gfx[ell - 1] = N @ gfx[ell - 1]
        worst = max(worst, float(np.max(np.abs(sys.rhs(gx) - gfx))))
        tol = max(tol, 1e-10 * (1.0 + float(np.linalg.norm(fx))))
    return EquivarianceReport(True, None, worst, tol)


def antisynchrony_convergence(sys, pair, sign, dt=1e-3, T=400.0, seed=0, tail=0.1, x0=None):
    """Max of |u_i + sign * u_j| over the trailing fraction of a trajectory,
    where u is the first coordinate of each cell.  Measures which of the
    synchrony (sign=-1) / anti-synchrony (sign=+1) subspaces attracts."""
    i, j = pair
    if x0 is None:
        rng = np.random.default_rng(seed)
        x0 = rng.uniform(-1, 1, size=(sys.n, sys.k))
    traj = integrate(sys, x0, dt, T)
    start = int(len(traj.times) * (1.0 - tail))
    u_i = traj.states[start:, i - 1, 0]
    u_j = traj.states[start:, j - 1, 0]
    return float(np.max(np.abs(u_i + sign * u_j)))
