"""Named check suites: executable versions of the structural theorems.

Each suite runs a batch of randomized (seeded) or fixed instances and
returns a SuiteReport with falsifying witnesses instead of raising, so a
failure is actionable.  The CLI ``check`` command and the test suite both
run these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import dynamics, graph, invariance, linalg
from .graph import (
    adjacency_matrix,
    laplacian_matrix,
    random_connected_graph,
    random_in_regular_digraph,
    random_weight_balanced_digraph,
)
from .invariance import (
    check_constant_column_sums_theorem,
    eigendata,
    invariant_polydiagonals,
)
from .partitions import basis, contains, typical_element


@dataclass
class SuiteReport:
    name: str
    trials: int
    passed: bool
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = ["%s: %s (%d trials)" % (self.name, status, self.trials)]
        lines += ["  witness: %s" % w for w in self.failures]
        lines += ["  note: %s" % n for n in self.notes]
        return "\n".join(lines)


def suite_conjecture53(trials=200, n_max=7, seed=7) -> SuiteReport:
    """Laplacians of random connected graphs: every L-invariant
    anti-synchrony subspace must be evenly tagged."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        n = rng.randint(2, n_max)
        g = random_connected_graph(n, rng)
        lap = laplacian_matrix(g)
        for p, cls in invariant_polydiagonals(lap).subspaces:
            if cls.anti_synchrony and not cls.evenly_tagged:
                failures.append(
                    "trial %d: graph %s has invariant %s not evenly tagged"
                    % (t, graph.to_json(g), typical_element(p))
                )
    return SuiteReport("conjecture53", trials, not failures, failures)


def _random_constant_column_sum_matrix(rng, n):
    """Integer matrix with constant column sums; the last row absorbs the
    difference.  Returns (matrix, target column sum)."""
    lam = rng.randint(-2, 2)
    rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n - 1)]
    last = [lam - sum(r[j] for r in rows) for j in range(n)]
    rows.append(last)
    return tuple(tuple(Fraction(x) for x in row) for row in rows), Fraction(lam)


def suite_column_sums(trials=200, n_max=5, seed=11, max_attempts_factor=60) -> SuiteReport:
    """Constant-column-sums dichotomy on random integer matrices whose
    eigenvalue lam is simple and whose eigenvector v has v_i + v_j != 0."""
    rng = random.Random(seed)
    failures, notes = [], []
    done = 0
    attempts = 0
    while done < trials and attempts < trials * max_attempts_factor:
        attempts += 1
        n = rng.randint(2, n_max)
        m, lam = _random_constant_column_sum_matrix(rng, n)
        eig = eigendata(m, lam)
        if len(eig.right_basis) != 1:
            continue
        v = eig.right_basis[0]
        if any(v[i] + v[j] == 0 for i in range(n) for j in range(i, n)):
            continue
        done += 1
        report = check_constant_column_sums_theorem(m)
        if not report.passed:
            for row in report.violations():
                failures.append(
                    "matrix %s: %s (%s) violates the dichotomy"
                    % (m, typical_element(row.partition), row.label)
                )
    if done < trials:
        notes.append("only %d of %d instances found" % (done, trials))
    return SuiteReport("column-sums", done, not failures and done == trials, failures, notes)


def _random_unimodular(rng, n, ops=12):
    """Product of integer elementary row operations; determinant +-1."""
    m = [[Fraction(i == j) for j in range(n)] for i in range(n)]
    for _ in range(ops):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for k in range(n):
            m[i][k] += c * m[j][k]
    return tuple(tuple(row) for row in m)


def _inverse(m):
    n = len(m)
    aug = tuple(tuple(m[i]) + tuple(Fraction(i == j) for j in range(n)) for i in range(n))
    red, r = linalg.rref(aug)
    if r != n:
        raise ValueError("matrix not invertible")
    return tuple(row[n:] for row in red)


def suite_main_lemma(trials=100, n_max=5, seed=3) -> SuiteReport:
    """Random integer matrices with a known simple rational eigenvalue,
    built by conjugating block companion forms: every invariant
    polydiagonal W of M must satisfy v_R in W or v_L perp W."""
    rng = random.Random(seed)
    failures = []
    done = 0
    attempts = 0
    while done < trials and attempts < trials * 40:
        attempts += 1
        n = rng.randint(2, n_max)
        lam = rng.randint(-2, 2)
        block = [[Fraction(0)] * n for _ in range(n)]
        block[0][0] = Fraction(lam)
        # companion block of x^(n-1) - c on the remaining coordinates
        c = rng.choice([3, 5, 7])
        for i in range(1, n - 1):
            block[i + 1][i] = Fraction(1)
        if n > 1:
            block[1][n - 1] = Fraction(c)
        s = _random_unimodular(rng, n)
        m = linalg.mat_mul(linalg.mat_mul(s, tuple(tuple(r) for r in block)), _inverse(s))
        eig = eigendata(m, lam)
        if len(eig.right_basis) != 1:
            continue
        done += 1
        report = invariance.check_main_lemma(m, lam)
        if not report.passed:
            for row in report.violations():
                failures.append(
                    "matrix %s lam=%s: %s fails the dichotomy"
                    % (m, lam, typical_element(row.partition))
                )
    return SuiteReport("main-lemma", done, not failures and done == trials, failures)


def suite_input_output(trials=100, n_max=6, seed=5) -> SuiteReport:
    """Laplacians of random weight-balanced digraphs with simple eigenvalue
    0: every L-invariant anti-synchrony subspace must be evenly tagged."""
    rng = random.Random(seed)
    failures = []
    done = 0
    attempts = 0
    while done < trials and attempts < trials * 40:
        attempts += 1
        n = rng.randint(2, n_max)
        g = random_weight_balanced_digraph(n, rng)
        lap = laplacian_matrix(g)
        if len(linalg.nullspace(lap)) != 1:
            continue
        done += 1
        for p, cls in invariant_polydiagonals(lap).subspaces:
            if cls.anti_synchrony and not cls.evenly_tagged:
                failures.append(
                    "digraph %s: invariant %s not evenly tagged"
                    % (graph.to_json(g), typical_element(p))
                )
    return SuiteReport("input-output", done, not failures and done == trials, failures)


def suite_frobenius_perron(trials=60, n_max=6, seed=13) -> SuiteReport:
    """Strongly connected unweighted digraphs with constant in-degree, so
    the Perron eigenvalue is the (rational) degree: invariant synchrony
    subspaces contain the right Perron vector, invariant anti-synchrony
    subspaces are orthogonal to the left one."""
    rng = random.Random(seed)
    failures = []
    done = 0
    attempts = 0
    while done < trials and attempts < trials * 40:
        attempts += 1
        n = rng.randint(2, n_max)
        d = rng.randint(1, max(1, n - 1))
        g = random_in_regular_digraph(n, d, rng)
        if not graph.is_strongly_connected(g):
            continue
        a = adjacency_matrix(g)
        eig = eigendata(a, d)
        if len(eig.right_basis) != 1:
            continue
        done += 1
        v_r, v_l = eig.right_basis[0], eig.left_basis[0]
        for p, cls in invariant_polydiagonals(a).subspaces:
            if cls.synchrony and not contains(p, v_r):
                failures.append("digraph %s: synchrony %s misses v_R" % (graph.to_json(g), typical_element(p)))
            if cls.anti_synchrony and any(linalg.dot(v_l, b) != 0 for b in basis(p)):
                failures.append("digraph %s: anti-synchrony %s not perp v_L" % (graph.to_json(g), typical_element(p)))
    return SuiteReport("frobenius-perron", done, not failures and done == trials, failures)


def suite_strong_connectivity(trials=200, n_max=7, seed=17) -> SuiteReport:
    """Weight-balanced, weakly connected digraphs with positive weights and
    no loops must be strongly connected."""
    rng = random.Random(seed)
    failures = []
    done = 0
    attempts = 0
    while done < trials and attempts < trials * 40:
        attempts += 1
        n = rng.randint(2, n_max)
        g = random_weight_balanced_digraph(n, rng)
        if not graph.is_weakly_connected(g):
            continue
        done += 1
        if not graph.is_strongly_connected(g):
            failures.append("digraph %s weakly but not strongly connected" % graph.to_json(g))
    return SuiteReport("strong-connectivity", done, not failures and done == trials, failures)


# ---------------------------------------------------------------------------
# dynamics suites (the worked two-cell examples)


def vdp_example_system(scale=0.5, use_laplacian=False, eps=2.0):
    """Two coupled van der Pol cells: cell 1 autonomous, cell 2 driven by
    cell 1 and itself (A = [[0,0],[1,1]], L = [[0,0],[-1,1]])."""
    a = np.array([[0.0, 0.0], [1.0, 1.0]])
    lap = np.array([[0.0, 0.0], [-1.0, 1.0]])
    m = scale * (lap if use_laplacian else a)
    return dynamics.CoupledSystem(2, 2, dynamics.preset_f("vanderpol", eps=eps), dynamics.VDP_H, m)


def lorenz_pair_system(h, kappa):
    """Two Lorenz cells with symmetric Laplacian coupling M = kappa*L."""
    lap = np.array([[1.0, -1.0], [-1.0, 1.0]])
    return dynamics.CoupledSystem(2, 3, dynamics.preset_f("lorenz"), h, kappa * lap)


def suite_dynamics_vdp(dt=1e-3, T=50.0, tol=1e-6, seed=0) -> SuiteReport:
    """Anti-phase subspace of the van der Pol pair stays invariant; the
    (not M-invariant) in-phase subspace serves as the negative control."""
    from .partitions import parse_typical_element

    sys = vdp_example_system()
    anti = dynamics.TwistedSubspace(parse_typical_element("(a,-a)"), 2)
    sync = dynamics.TwistedSubspace(parse_typical_element("(a,a)"), 2)
    failures = []
    rep = dynamics.invariance_test(sys, anti, trials=3, dt=dt, T=T, tol=tol, seed=seed)
    if not rep.passed:
        failures.append("(a,-a) drift %.3g exceeds %.1g (blowups %d)" % (rep.max_distance, tol, rep.blowups))
    neg = dynamics.invariance_test(sys, sync, trials=3, dt=dt, T=min(T, 20.0), tol=tol, seed=seed)
    if neg.max_distance <= 1e-2:
        failures.append("negative control (a,a) stayed within 1e-2 (%.3g)" % neg.max_distance)
    return SuiteReport("dynamics-vdp", 2, not failures, failures)


def suite_dynamics_lorenz(dt=1e-3, T=50.0, tol=1e-6, seed=0) -> SuiteReport:
    """Twisted subspace ((u,v,w),(-u,-v,w)) of the Lorenz pair: invariant
    for the v-coupled system with M = 2L, and for the w-coupled system via
    the cell symmetry; the w-coupling satisfies HN = NH = H."""
    from .partitions import parse_typical_element

    n_sym = np.diag([-1.0, -1.0, 1.0])
    twisted = dynamics.TwistedSubspace(parse_typical_element("(a,-a)"), 3, n_sym)
    failures = []
    sys_v = lorenz_pair_system(dynamics.LORENZ_H_MINUS, 2.0)
    rep = dynamics.invariance_test(sys_v, twisted, trials=3, dt=dt, T=T, tol=tol, seed=seed)
    if not rep.passed:
        failures.append("H- system drift %.3g exceeds %.1g (blowups %d)" % (rep.max_distance, tol, rep.blowups))
    sys_w = lorenz_pair_system(dynamics.LORENZ_H_PLUS, -2.0)
    rep2 = dynamics.invariance_test(sys_w, twisted, trials=3, dt=dt, T=T, tol=tol, seed=seed)
    if not rep2.passed:
        failures.append("H+ system drift %.3g exceeds %.1g (blowups %d)" % (rep2.max_distance, tol, rep2.blowups))
    eq = dynamics.equivariance_check(sys_w, n_sym, ell=1, seed=seed)
    if not eq.passed:
        failures.append("H+ equivariance: %s" % (eq.reason or "residual %.3g" % eq.max_residual))
    eq_minus = dynamics.equivariance_check(sys_v, n_sym, ell=1, seed=seed)
    if eq_minus.hypotheses_met:
        failures.append("H- unexpectedly satisfied HN = NH = H")
    return SuiteReport("dynamics-lorenz", 5, not failures, failures)


def suite_dynamics_attractors(seed=2, dt=1e-3) -> SuiteReport:
    """Qualitative attractor checks from the worked examples: which of the
    synchrony / anti-synchrony subspaces wins at long times."""
    failures = []
    sys_a = vdp_example_system(scale=0.5, use_laplacian=False)
    tail = dynamics.antisynchrony_convergence(sys_a, (1, 2), +1, dt=dt, T=400.0, seed=seed, tail=0.2)
    if tail > 1e-2:
        failures.append("vdp M=0.5A tail |u1+u2| = %.3g > 1e-2" % tail)
    sys_l = vdp_example_system(scale=0.5, use_laplacian=True)
    tail = dynamics.antisynchrony_convergence(sys_l, (1, 2), -1, dt=dt, T=400.0, seed=seed, tail=0.2)
    if tail > 1e-2:
        failures.append("vdp M=0.5L tail |u1-u2| = %.3g > 1e-2" % tail)
    sys_w = lorenz_pair_system(dynamics.LORENZ_H_PLUS, -2.0)
    rng = np.random.default_rng(seed)
    base = rng.uniform(-1, 1, size=3) + np.array([1.0, 1.0, 25.0])
    x0 = np.stack([base, np.diag([-1.0, -1.0, 1.0]) @ base + rng.uniform(-0.05, 0.05, size=3)])
    tail = dynamics.antisynchrony_convergence(sys_w, (1, 2), +1, dt=dt, T=100.0, x0=x0, tail=0.1)
    if tail > 1e-1:
        failures.append("lorenz H+ M=-2L tail |u1+u2| = %.3g > 1e-1" % tail)
    return SuiteReport("dynamics-attractors", 3, not failures, failures)


SUITES = {
    "conjecture53": suite_conjecture53,
    "column-sums": suite_column_sums,
    "main-lemma": suite_main_lemma,
    "input-output": suite_input_output,
    "frobenius-perron": suite_frobenius_perron,
    "strong-connectivity": suite_strong_connectivity,
    "dynamics-vdp": suite_dynamics_vdp,
    "dynamics-lorenz": suite_dynamics_lorenz,
    "dynamics-attractors": suite_dynamics_attractors,
}
