"""Exact M-invariance of polydiagonal subspaces, lattices, and orbit tools.

A subspace W is M-invariant when M W is contained in W.  For a polydiagonal
subspace this is decided exactly by applying M to the canonical basis of the
subspace and testing membership of the images.  The exhaustive scan over all
tagged partitions is feasible through n = 8.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .linalg import frac, nullspace, shifted, transpose
from .partitions import (
    SubspaceClass,
    TaggedPartition,
    basis,
    classify,
    contains,
    enumerate_tagged_partitions,
    relabel,
    type_label,
    typical_element,
)

DEFAULT_SCAN_LIMIT = 8


def _int_matrix(m):
    """Clear denominators: invariance is unchanged by scaling M, and plain
    int arithmetic is much faster than Fraction in the inner loop."""
    den = 1
    for row in m:
        for x in row:
            den = den * frac(x).denominator // math.gcd(den, frac(x).denominator)
    return [[int(x * den) for x in row] for row in m]


def _supports(p: TaggedPartition):
    """(plus, minus) 0-based column supports of each canonical basis vector."""
    partner = dict(p.pairs)
    skip = {j for _, j in p.pairs}
    if p.fixed is not None:
        skip.add(p.fixed)
    out = []
    for ci, cls in enumerate(p.classes):
        if ci in skip:
            continue
        plus = [c - 1 for c in cls]
        minus = [c - 1 for c in p.classes[partner[ci]]] if ci in partner else []
        out.append((plus, minus))
    return out


def _is_invariant_int(mi, p: TaggedPartition) -> bool:
    for plus, minus in _supports(p):
        y = []
        for row in mi:
            s = 0
            for j in plus:
                s += row[j]
            for j in minus:
                s -= row[j]
            y.append(s)
        if not contains(p, y):
            return False
    return True


def is_invariant(m, p: TaggedPartition) -> bool:
    """Exact decision of M Delta_P <= Delta_P."""
    if len(m) != p.n or (m and len(m[0]) != p.n):
        raise ValueError("matrix must be %dx%d" % (p.n, p.n))
    return _is_invariant_int(_int_matrix(m), p)


@dataclass(frozen=True)
class InvariantSet:
    matrix: tuple
    subspaces: tuple  # of (TaggedPartition, SubspaceClass), canonical order

    def partitions(self):
        return [p for p, _ in self.subspaces]

    def typicals(self):
        return [typical_element(p) for p, _ in self.subspaces]


def _scan_chunk(args):
    mi, chunk = args
    return [p for p in chunk if _is_invariant_int(mi, p)]


def invariant_polydiagonals(m, n_cap=DEFAULT_SCAN_LIMIT, workers=None) -> InvariantSet:
    """All tagged partitions whose subspace is m-invariant, by exhaustive scan.

    ``workers`` (default: the POLYDIAG_THREADS environment variable, else 1)
    splits the enumeration stream over a process pool; results are merged
    back in canonical order.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    if n > n_cap:
        raise ValueError("n=%d exceeds cap %d; pass n_cap to override" % (n, n_cap))
    mi = _int_matrix(m)
    if workers is None:
        workers = int(os.environ.get("POLYDIAG_THREADS", "1"))
    if workers > 1 and n >= 6:
        hits = _scan_parallel(mi, n, workers)
    else:
        hits = [p for p in enumerate_tagged_partitions(n) if _is_invariant_int(mi, p)]
    mat = tuple(tuple(frac(x) for x in row) for row in m)
    return InvariantSet(mat, tuple((p, classify(p)) for p in hits))


def _scan_parallel(mi, n, workers, chunk_size=4096):
    chunks = []
    buf = []
    for p in enumerate_tagged_partitions(n):
        buf.append(p)
        if len(buf) == chunk_size:
            chunks.append(buf)
            buf = []
    if buf:
        chunks.append(buf)
    hits = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_scan_chunk, [(mi, c) for c in chunks]):
            hits.extend(part)
    return hits


# ---------------------------------------------------------------------------
# lattice of invariant subspaces


@dataclass(frozen=True)
class SubspaceLattice:
    nodes: tuple  # of (TaggedPartition, SubspaceClass)
    covers: tuple  # (upper, lower) index pairs: Delta_upper strictly inside Delta_lower

    def leq(self, i, j) -> bool:
        """Reverse-inclusion order: i <= j iff Delta_i contains Delta_j."""
        pi, pj = self.nodes[i][0], self.nodes[j][0]
        return all(contains(pi, b) for b in basis(pj))


def build_lattice(inv: InvariantSet) -> SubspaceLattice:
    """Cover relations (transitive reduction) of the invariant subspaces
    ordered by reverse inclusion: bottom R^n, top the smallest subspace."""
    nodes = inv.subspaces
    k = len(nodes)
    bases = [basis(p) for p, _ in nodes]
    below = [[False] * k for _ in range(k)]  # below[i][j]: Delta_i > Delta_j strictly
    for i in range(k):
        for j in range(k):
            if i != j and all(contains(nodes[i][0], b) for b in bases[j]):
                if len(bases[i]) != len(bases[j]):
                    below[i][j] = True
    covers = []
    for i in range(k):
        for j in range(k):
            if below[i][j] and not any(below[i][z] and below[z][j] for z in range(k)):
                covers.append((j, i))  # j is directly above i
    return SubspaceLattice(nodes, tuple(sorted(covers)))


def lattice_to_json_dict(lat: SubspaceLattice) -> dict:
    return {
        "nodes": [
            {
                "typical": typical_element(p),
                "class": type_label(p, cls).replace(" ", "_").replace("-", "_"),
            }
            for p, cls in lat.nodes
        ],
        "covers": [list(c) for c in lat.covers],
    }


_DOT_COLORS = {
    "synchrony": "black",
    "trivial": "gray40",
    "evenly tagged": "blue",
    "fully tagged": "red",
    "minimally tagged": "darkgreen",
    "anti-synchrony": "orange",
}


def lattice_to_dot(lat: SubspaceLattice) -> str:
    lines = ["digraph lattice {", "  rankdir=BT;", '  node [shape=box, fontname="monospace"];']
    for idx, (p, cls) in enumerate(lat.nodes):
        label = type_label(p, cls)
        lines.append(
            '  n%d [label="%s", color=%s];'
            % (idx, typical_element(p), _DOT_COLORS.get(label, "black"))
        )
    for upper, lower in lat.covers:
        lines.append("  n%d -> n%d;" % (lower, upper))
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# automorphism orbits


def orbits(inv: InvariantSet, autos):
    """Group orbits of the invariant subspaces under vertex relabeling.

    ``autos`` must be a permutation group (checked for closure).  Returns a
    list of orbits, each a tuple of node indices into inv.subspaces.
    """
    from .graph import perm_compose

    perm_set = set(autos)
    for a in autos:
        for b in autos:
            if perm_compose(a, b) not in perm_set:
                raise ValueError("automorphism list is not closed under composition")
    index = {p: i for i, (p, _) in enumerate(inv.subspaces)}
    seen = [False] * len(index)
    out = []
    for i, (p, _) in enumerate(inv.subspaces):
        if seen[i]:
            continue
        orbit = set()
        for phi in autos:
            q = relabel(p, phi)
            j = index.get(q)
            if j is None:
                raise ValueError(
                    "image %s of %s is not in the invariant set; "
                    "are these automorphisms of the right digraph?"
                    % (typical_element(q), typical_element(p))
                )
            orbit.add(j)
        for j in orbit:
            seen[j] = True
        out.append(tuple(sorted(orbit)))
    return out


# ---------------------------------------------------------------------------
# eigen data and the eigenvector dichotomy


@dataclass(frozen=True)
class EigenData:
    lam: Fraction
    right_basis: tuple  # nullspace of M - lam I
    left_basis: tuple  # nullspace of M^T - lam I


def eigendata(m, lam) -> EigenData:
    lam = frac(lam)
    right = nullspace(shifted(m, lam))
    left = nullspace(shifted(transpose(m), lam))
    return EigenData(lam, tuple(right), tuple(left))


@dataclass(frozen=True)
class DichotomyRow:
    partition: TaggedPartition
    label: str
    right_in_subspace: bool
    left_in_perp: bool

    @property
    def ok(self):
        return self.right_in_subspace or self.left_in_perp


@dataclass(frozen=True)
class MainLemmaReport:
    lam: Fraction
    v_right: tuple
    v_left: tuple
    rows: tuple  # of DichotomyRow

    @property
    def passed(self):
        return all(r.ok for r in self.rows)

    def violations(self):
        return [r for r in self.rows if not r.ok]


def check_main_lemma(m, lam, inv: InvariantSet | None = None) -> MainLemmaReport:
    """For a simple eigenvalue lam, test every invariant polydiagonal W for
    v_R in W or v_L perpendicular to W, recording which disjunct holds."""
    eig = eigendata(m, lam)
    if len(eig.right_basis) != 1:
        raise ValueError(
            "eigenvalue %s has geometric multiplicity %d, need 1"
            % (lam, len(eig.right_basis))
        )
    v_r, v_l = eig.right_basis[0], eig.left_basis[0]
    inv = inv if inv is not None else invariant_polydiagonals(m)
    rows = []
    for p, cls in inv.subspaces:
        in_w = contains(p, v_r)
        in_perp = all(linalg.dot(v_l, b) == 0 for b in basis(p))
        rows.append(DichotomyRow(p, type_label(p, cls), in_w, in_perp))
    return MainLemmaReport(eig.lam, v_r, v_l, tuple(rows))


@dataclass(frozen=True)
class ColumnSumsRow:
    partition: TaggedPartition
    label: str
    contains_v: bool
    conclusion_holds: bool


@dataclass(frozen=True)
class ColumnSumsReport:
    hypotheses_met: bool
    reason: str | None
    lam: Fraction | None
    v: tuple | None
    rows: tuple

    @property
    def passed(self):
        return self.hypotheses_met and all(r.conclusion_holds for r in self.rows)

    def violations(self):
        return [r for r in self.rows if not r.conclusion_holds]


def check_constant_column_sums_theorem(m, inv: InvariantSet | None = None) -> ColumnSumsReport:
    """Constant-column-sums dichotomy: every invariant polydiagonal must be a
    synchrony subspace containing v or an evenly tagged anti-synchrony
    subspace not containing v.  Hypothesis violations are reported, not
    raised."""
    n = len(m)
    sums = [sum(row[j] for row in m) for j in range(n)]
    if len(set(sums)) > 1:
        return ColumnSumsReport(False, "column sums are not constant", None, None, ())
    lam = sums[0] if sums else Fraction(0)
    eig = eigendata(m, lam)
    if len(eig.right_basis) != 1:
        return ColumnSumsReport(
            False,
            "eigenvalue %s has geometric multiplicity %d" % (lam, len(eig.right_basis)),
            frac(lam),
            None,
            (),
        )
    v = eig.right_basis[0]
    if any(v[i] + v[j] == 0 for i in range(n) for j in range(i, n)):
        return ColumnSumsReport(
            False, "eigenvector has v_i + v_j = 0 for some i, j", frac(lam), v, ()
        )
    inv = inv if inv is not None else invariant_polydiagonals(m)
    rows = []
    for p, cls in inv.subspaces:
        has_v = contains(p, v)
        holds = (cls.synchrony and has_v) or (cls.evenly_tagged and not has_v)
        rows.append(ColumnSumsRow(p, type_label(p, cls), has_v, holds))
    return ColumnSumsReport(True, None, frac(lam), v, tuple(rows))


# ---------------------------------------------------------------------------
# floating-point Perron diagnostic (never feeds exact decisions)


def perron_diagnostic(m, tol=1e-9, max_iter=100_000):
    """Power-iteration estimate (lam, v) for a nonnegative matrix.

    Diagnostic only: results are floats and are never used by the exact
    invariance machinery.
    """
    import numpy as np

    a = np.array([[float(x) for x in row] for row in m], dtype=float)
    n = a.shape[0]
    v = np.ones(n) / math.sqrt(n)
    lam = 0.0
    for _ in range(int(max_iter)):
        w = a @ v
        norm = np.linalg.norm(w)
        if norm == 0:
            return 0.0, tuple(v)
        w /= norm
        new_lam = float(w @ a @ w)
        if abs(new_lam - lam) <= tol * (1 + abs(new_lam)):
            return new_lam, tuple(float(x) for x in w)
        lam, v = new_lam, w
    return lam, tuple(float(x) for x in v)


def report_to_json(report) -> str:
    """Serialize a lemma/theorem report for the CLI."""
    if isinstance(report, MainLemmaReport):
        d = {
            "lambda": str(report.lam),
            "v_right": [str(x) for x in report.v_right],
            "v_left": [str(x) for x in report.v_left],
            "passed": report.passed,
            "rows": [
                {
                    "typical": typical_element(r.partition),
                    "label": r.label,
                    "v_right_in_subspace": r.right_in_subspace,
                    "v_left_in_perp": r.left_in_perp,
                }
                for r in report.rows
            ],
        }
    else:
        d = {
            "hypotheses_met": report.hypotheses_met,
            "reason": report.reason,
            "lambda": None if report.lam is None else str(report.lam),
            "v": None if report.v is None else [str(x) for x in report.v],
            "passed": report.passed,
            "rows": [
                {
                    "typical": typical_element(r.partition),
                    "label": r.label,
                    "contains_v": r.contains_v,
                    "conclusion_holds": r.conclusion_holds,
                }
                for r in report.rows
            ],
        }
    return json.dumps(d, indent=2)
