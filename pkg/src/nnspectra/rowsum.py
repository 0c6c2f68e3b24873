"""Similarity transform of a nonnegative matrix into constant-row-sum form.

For a nonnegative matrix with a *simple* Perron root lambda1 this produces a
nonnegative B with every row summing to lambda1 and an explicit similarity
S with S^-1 A S = B (exact over the rationals whenever the Perron data is
rational).  The reduction walks the block structure:

  * an irreducible matrix is diagonally scaled by its positive eigenvector;
  * a block that couples into the already-normalized part is absorbed by a
    lift through the inverse of (lambda1 I - A2) (an M-matrix inverse);
  * a fully decoupled block is first coupled by an explicit shear built
    from a left eigenvector, then absorbed by the same lift.

Two documented extensions widen the reducible layouts accepted beyond the
plain chain-plus-isolated picture: mutually decoupled *clusters* of blocks
are absorbed whole (after a scaling that pushes all their row sums strictly
below lambda1), and layouts whose Perron block feeds earlier blocks are
handled through an exact similarity with the transpose.  The simple-root
hypothesis cannot be dropped: [[1,0],[1,1]] has no such B.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import (
    FloatMatrix,
    RationalMatrix,
    char_poly,
    format_rational,
    inverse,
    kernel,
    permutation_matrix,
    poly_eval,
    rat,
    solve,
    synthetic_div,
    to_float,
)
from .errors import (
    CertificationError,
    CouplingError,
    DimensionError,
    DomainError,
    ModeError,
    PerronNotSimple,
    SingularMatrixError,
    SpectraError,
    SpectralDominanceError,
    UnsupportedLayoutError,
)
from .structure import (
    adjacency,
    condensation_edges,
    is_irreducible,
    perron_data,
    strongly_connected_components,
)

def ONES(n):
    return tuple(Fraction(1) for _ in range(n))


@dataclass(frozen=True)
class RowSumStep:
    kind: str
    detail: dict

    def to_json(self):
        return {"kind": self.kind, "detail": self.detail}


@dataclass
class RowSumResult:
    B: object
    S: object
    transcript: list
    mode: str
    lam: object
    factors: list = None  # similarity factors, in order; their product is S

    def to_json(self):
        from .core import matrix_to_json

        if self.mode == "exact":
            return {
                "schema": 1,
                "mode": self.mode,
                "lambda": format_rational(self.lam),
                "B": matrix_to_json(self.B),
                "S": matrix_to_json(self.S),
                "transcript": [s.to_json() for s in self.transcript],
            }
        return {
            "schema": 1,
            "mode": self.mode,
            "lambda": repr(float(self.lam)),
            "B": [[repr(float(v)) for v in row] for row in self.B.array.tolist()],
            "S": [[repr(float(v)) for v in row] for row in self.S.array.tolist()],
            "transcript": [s.to_json() for s in self.transcript],
        }


def constant_row_sum_value(A: RationalMatrix):
    """The common row sum when A is in CS form, else None."""
    sums = A.row_sums()
    return sums[0] if all(s == sums[0] for s in sums) else None


# ---------------------------------------------------------------------------
# the two published building blocks
# ---------------------------------------------------------------------------


def lemma1_lift(A1: RationalMatrix, A2: RationalMatrix, A3: RationalMatrix):
    """Absorb a coupled block: [[A1,0],[A3,A2]] -> positive eigenvector and CS form.

    A1 must be in CS form (row sum lambda1), A2 irreducible nonnegative with
    spectral radius strictly below lambda1, A3 nonzero nonnegative.  Returns
    (x, B) where x = [e; y] is a positive eigenvector of the block matrix at
    lambda1 and B = [[A1, 0], [Y^-1 A3, Y^-1 A2 Y]] is nonnegative in CS form.
    """
    lam = constant_row_sum_value(A1)
    if lam is None:
        raise DomainError("A1 is not in constant-row-sum form")
    if not (A1.is_nonnegative and A2.is_nonnegative and A3.is_nonnegative):
        raise DomainError("blocks must be nonnegative")
    if not is_irreducible(A2):
        raise DomainError("A2 must be irreducible")
    if A3.rows != A2.rows or A3.cols != A1.cols:
        raise DimensionError("A3 must be (order A2) x (order A1)")
    if all(v == 0 for row in A3.entries() for v in row):
        raise DomainError("coupling block A3 is zero; use the lemma2 coupling path")
    return _lift(A1, A2, A3, lam)


def _lift(A1, A2, A3, lam):
    n2 = A2.rows
    M = RationalMatrix.identity(n2).scale(lam) - A2
    try:
        Minv = inverse(M)
    except SingularMatrixError:
        raise SpectralDominanceError(
            "rho(A2) >= %s; (lambda I - A2) is singular" % format_rational(lam)
        )
    # exact dominance certificate: for irreducible A2 >= 0 the inverse of
    # (lambda I - A2) is positive iff rho(A2) < lambda
    if not Minv.is_positive:
        raise SpectralDominanceError(
            "(lambda I - A2)^-1 is not positive, so rho(A2) >= %s"
            % format_rational(lam)
        )
    a3e = A3.mat_vec(ONES(A3.cols))
    y = Minv.mat_vec(a3e)
    if any(v <= 0 for v in y):
        raise SpectraError(
            "internal invariant violation: lifted eigenvector tail is not positive"
        )
    Yinv_A3 = RationalMatrix(
        [[v / y[i] for v in A3.row(i)] for i in range(n2)]
    )
    Yinv_A2_Y = A2.diag_conjugate(y)
    zeros = RationalMatrix.zeros(A1.rows, n2)
    B = RationalMatrix.from_blocks([[A1, zeros], [Yinv_A3, Yinv_A2_Y]])
    if not B.is_nonnegative or any(s != lam for s in B.row_sums()):
        raise CertificationError("lift produced a matrix outside CS form")
    x = ONES(A1.rows) + tuple(y)
    return x, B


def lemma2_coupling(A1: RationalMatrix, A2: RationalMatrix, z=None):
    """Manufacture a nonzero coupling for diag(A1, A2) by an explicit shear.

    A1 in CS_lambda1 and A2 irreducible in CS_rho(A2) with rho(A2) strictly
    below lambda1.  z is a nonnegative left eigenvector of A1 at lambda1
    (computed when omitted, normalized to max entry 1).  Returns (S, A3)
    where S = [[I,0],[-e z^T, I]] satisfies
    S^-1 diag(A1,A2) S = [[A1,0],[A3,A2]] and every row of A3 equals
    (lambda1 - rho(A2)) z^T.
    """
    lam = constant_row_sum_value(A1)
    if lam is None:
        raise DomainError("A1 is not in constant-row-sum form")
    rho2 = constant_row_sum_value(A2)
    if rho2 is None:
        raise DomainError("A2 is not in constant-row-sum form")
    if not is_irreducible(A2):
        raise DomainError("A2 must be irreducible")
    if lam == rho2:
        raise CouplingError("lambda1 equals rho(A2): the coupling A3 would vanish")
    if lam < rho2:
        raise SpectralDominanceError("rho(A2) exceeds lambda1")
    if z is None:
        z = _left_eigenvector_exact(A1, lam)
    z = tuple(rat(v) for v in z)
    if len(z) != A1.rows:
        raise DimensionError("z has wrong length")
    if any(v < 0 for v in z):
        raise DomainError("z has a negative entry")
    if all(v == 0 for v in z):
        raise DomainError("z is zero")
    resid = tuple(a - lam * b for a, b in zip(A1.transpose().mat_vec(z), z))
    if any(v != 0 for v in resid):
        raise DomainError("z is not a left eigenvector of A1 at lambda1")
    zmax = max(z)
    z = tuple(v / zmax for v in z)
    n1, n2 = A1.rows, A2.rows
    shear = [[Fraction(1) if i == j else Fraction(0) for j in range(n1 + n2)] for i in range(n1 + n2)]
    for i in range(n2):
        for j in range(n1):
            shear[n1 + i][j] = -z[j]
    S = RationalMatrix(shear)
    coeff = lam - rho2
    A3 = RationalMatrix([[coeff * zj for zj in z] for _ in range(n2)])
    return S, A3


def _left_eigenvector_exact(B, lam):
    basis = kernel(B.transpose() - RationalMatrix.identity(B.rows).scale(lam))
    if len(basis) != 1:
        raise DomainError(
            "left eigenspace at %s is %d-dimensional; supply z explicitly"
            % (format_rational(lam), len(basis))
        )
    z = basis[0]
    if any(v > 0 for v in z) and any(v < 0 for v in z):
        raise SpectraError("internal invariant violation: mixed-sign left eigenvector")
    if all(v <= 0 for v in z):
        z = tuple(-v for v in z)
    return z


def _right_eigenvector_exact(B, lam, require_positive=True):
    basis = kernel(B - RationalMatrix.identity(B.rows).scale(lam))
    if len(basis) != 1:
        raise SpectraError(
            "eigenspace at %s is %d-dimensional" % (format_rational(lam), len(basis))
        )
    x = basis[0]
    if all(v <= 0 for v in x):
        x = tuple(-v for v in x)
    if require_positive and any(v <= 0 for v in x):
        raise SpectraError("internal invariant violation: eigenvector not positive")
    # clear denominators for readable transcripts; scaling cancels in D^-1 A D
    den = 1
    for v in x:
        den = den * v.denominator // math.gcd(den, v.denominator)
    return tuple(v * den for v in x)


# ---------------------------------------------------------------------------
# Perron root identification
# ---------------------------------------------------------------------------

_DENOMINATOR_LADDER = (1, 10, 100, 10**4, 10**6, 10**9, 10**12)


def _rationalize_root(coeffs, estimate: float):
    for bound in _DENOMINATOR_LADDER:
        cand = Fraction(estimate).limit_denominator(bound)
        if poly_eval(coeffs, cand) == 0:
            return cand
    return None


def perron_root_exact(A: RationalMatrix):
    """(lambda1, remaining char poly) with lambda1 certified a simple root.

    Returns (None, None) when the Perron root resists rational
    reconstruction (float mode territory).  Raises PerronNotSimple when the
    reconstructed root has multiplicity greater than one.
    """
    coeffs = char_poly(A)
    ev = np.linalg.eigvals(to_float(A).array)
    rho = float(np.max(np.abs(ev))) if ev.size else 0.0
    lam = _rationalize_root(coeffs, rho)
    if lam is None:
        return None, None
    quotient, rem = synthetic_div(coeffs, lam)
    if rem != 0:
        raise SpectraError("internal error: reconstructed root fails to divide")
    if poly_eval(quotient, lam) == 0:
        raise PerronNotSimple(
            "Perron root %s has algebraic multiplicity >= 2; the reduction to "
            "constant row sums requires a simple Perron root (witness class: "
            "[[1,0],[1,1]])" % format_rational(lam)
        )
    return lam, quotient


# ---------------------------------------------------------------------------
# reducible layout planning
# ---------------------------------------------------------------------------


@dataclass
class _Plan:
    components: list  # vertex lists
    edges: set  # (u, w): block u couples into block w
    perron: int
    order: list  # absorb order: list of ("block", ci) / ("cluster", [ci...])
    permutation: list


def _plan_layout(A: RationalMatrix, lam):
    """Absorb plan for exact mode; None when the Perron chain leaks outward."""
    adj = adjacency(A)
    comps = strongly_connected_components(adj)
    edges = condensation_edges(adj, comps)
    perron = None
    for ci, comp in enumerate(comps):
        block = A.submatrix(comp, comp)
        if poly_eval(char_poly(block), lam) == 0:
            perron = ci
            break
    if perron is None:
        raise SpectraError("internal error: no block carries the Perron root")
    return _plan_from_graph(comps, edges, perron)


def _plan_layout_float(arr):
    adj = [[bool(x > 0) for x in row] for row in arr.tolist()]
    comps = strongly_connected_components(adj)
    edges = condensation_edges(adj, comps)
    radii = []
    for comp in comps:
        sub = arr[np.ix_(comp, comp)]
        radii.append(float(np.max(np.abs(np.linalg.eigvals(sub)))))
    rho = max(radii)
    perron = min(
        ci for ci in range(len(comps)) if radii[ci] >= rho - 1e-9 * max(1.0, rho)
    )
    return _plan_from_graph(comps, edges, perron)


def _plan_from_graph(comps, edges, perron):
    in_neighbors = {ci: set() for ci in range(len(comps))}
    out_targets = {ci: set() for ci in range(len(comps))}
    for u, w in edges:
        out_targets[u].add(w)
        in_neighbors[w].add(u)

    reach = {perron}
    frontier = [perron]
    while frontier:
        w = frontier.pop()
        for u in in_neighbors[w]:
            if u not in reach:
                reach.add(u)
                frontier.append(u)

    if any(u in reach and w not in reach for u, w in edges):
        return None  # the Perron chain feeds an unreachable block

    order = [("block", perron)]
    placed = {perron}
    pending = [ci for ci in sorted(reach - {perron}, key=lambda c: comps[c][0])]
    while pending:
        ready = [u for u in pending if out_targets[u] <= placed]
        nxt = min(ready, key=lambda c: comps[c][0])
        order.append(("block", nxt))
        placed.add(nxt)
        pending.remove(nxt)

    outside = [ci for ci in range(len(comps)) if ci not in reach]
    seen = set()
    clusters = []
    for start in sorted(outside, key=lambda c: comps[c][0]):
        if start in seen:
            continue
        group = {start}
        frontier = [start]
        while frontier:
            u = frontier.pop()
            for v in outside:
                if v not in group and ((u, v) in edges or (v, u) in edges):
                    group.add(v)
                    frontier.append(v)
        seen |= group
        sub_placed = set()
        ordered = []
        members = sorted(group, key=lambda c: comps[c][0])
        while members:
            ready = [u for u in members if (out_targets[u] & group) <= sub_placed]
            nxt = min(ready, key=lambda c: comps[c][0])
            ordered.append(nxt)
            sub_placed.add(nxt)
            members.remove(nxt)
        if len(ordered) == 1:
            clusters.append(("block-isolated", ordered[0]))
        else:
            clusters.append(("cluster", ordered))
    order.extend(clusters)

    perm = []
    for kind, payload in order:
        if kind == "cluster":
            for ci in payload:
                perm.extend(comps[ci])
        else:
            perm.extend(comps[payload])
    return _Plan(comps, edges, perron, order, perm)


# ---------------------------------------------------------------------------
# exact pipeline
# ---------------------------------------------------------------------------


def _resolve_mode(mode):
    if mode is None:
        mode = os.environ.get("SPECTRA_MODE", "auto")
    if mode not in ("exact", "float", "auto"):
        raise DomainError("mode must be 'exact' or 'float'")
    return mode


def to_constant_row_sums(A: RationalMatrix, mode=None) -> RowSumResult:
    """Similarity-transform A into nonnegative constant-row-sum form.

    Exact mode needs the Perron root (and the spectral radius of every
    irreducible diagonal block it scales) to be rational; float mode mirrors
    the construction in doubles with verification tolerance 1e-9.
    """
    mode = _resolve_mode(mode)
    if not isinstance(A, RationalMatrix):
        if mode == "exact":
            raise ModeError("exact mode needs a RationalMatrix input")
        return _to_cs_float(A, np.asarray(A.array, dtype=float))
    if not A.is_square:
        raise DimensionError("input must be square")
    if not A.is_nonnegative:
        raise DomainError("input has a negative entry")

    if mode == "float":
        return _to_cs_float(A, to_float(A).array)

    lam, _quot = perron_root_exact(A)
    if lam is None:
        if mode == "exact":
            raise ModeError(
                "the Perron root appears irrational; rerun in float mode"
            )
        return _to_cs_float(A, to_float(A).array)
    try:
        return _to_cs_exact(A, lam)
    except ModeError:
        if mode == "exact":
            raise
        return _to_cs_float(A, to_float(A).array)


def _check_simple_float(arr, tol=1e-9):
    ev = np.linalg.eigvals(arr)
    rho = float(np.max(np.abs(ev))) if ev.size else 0.0
    close = np.sum(np.abs(ev - rho) <= tol * max(1.0, rho))
    if close != 1:
        raise PerronNotSimple(
            "Perron root %.12g is not numerically simple (%d eigenvalues within "
            "1e-9)" % (rho, int(close))
        )


def _to_cs_exact(A: RationalMatrix, lam) -> RowSumResult:
    n = A.rows
    transcript = []
    if n == 1:
        return RowSumResult(
            A,
            RationalMatrix.identity(1),
            transcript,
            "exact",
            A[0, 0],
            factors=[RationalMatrix.identity(1)],
        )

    if is_irreducible(A):
        x = _right_eigenvector_exact(A, lam)
        B = A.diag_conjugate(x)
        S = RationalMatrix.diagonal(x)
        transcript.append(
            RowSumStep(
                "diagonal-scaling",
                {"scope": "global", "vector": [format_rational(v) for v in x]},
            )
        )
        _verify_exact(A, B, S, lam)
        return RowSumResult(B, S, transcript, "exact", lam, factors=[S])

    plan = _plan_layout(A, lam)
    if plan is None:
        return _via_transpose(A, lam)

    P = permutation_matrix(plan.permutation)
    M = P @ A @ P.transpose()
    S = P.transpose()
    factors = [P.transpose()]
    transcript.append(
        RowSumStep("permutation", {"order": list(plan.permutation)})
    )

    # per-block ranges in the permuted coordinates, following plan.order
    ranges = []
    pos = 0
    for kind, payload in plan.order:
        if kind == "cluster":
            size = sum(len(plan.components[ci]) for ci in payload)
        else:
            size = len(plan.components[payload])
        ranges.append((kind, payload, pos, pos + size))
        pos += size

    def conjugate(T):
        nonlocal M, S
        M = solve(T, M @ T)
        S = S @ T
        factors.append(T)

    def scale_block(a, b, vec, kind, label):
        d = [Fraction(1)] * n
        for i, v in enumerate(vec):
            d[a + i] = v
        conjugate(RationalMatrix.diagonal(d))
        transcript.append(
            RowSumStep(kind, {"block": label, "range": [a, b]})
        )

    # 1. scale the Perron block into CS_lambda, other blocks into CS_rho form
    for kind, payload, a, b in ranges:
        if kind == "cluster":
            continue
        block = M.submatrix(range(a, b), range(a, b))
        if b - a == 1:
            continue
        if payload == plan.perron:
            x = _right_eigenvector_exact(block, lam)
            scale_block(a, b, x, "block-scaling", "perron")
        else:
            rho_b = _block_rho_exact(block)
            if rho_b is None:
                raise ModeError(
                    "a diagonal block has an irrational spectral radius; "
                    "rerun in float mode"
                )
            x = _right_eigenvector_exact(block, rho_b)
            scale_block(a, b, x, "block-scaling", "component-%d" % payload)

    # 2. absorb blocks in plan order
    bound = ranges[0][3]
    for kind, payload, a, b in ranges[1:]:
        if kind == "cluster":
            _cluster_scale(M, a, b, lam, conjugate, transcript, payload)
            _shear_couple(M, a, b, bound, lam, conjugate, transcript, True)
            _absorb_lift(
                M, a, b, bound, lam, conjugate, transcript, "lemma1-lift-general"
            )
        else:
            coupling = M.submatrix(range(a, b), range(0, bound))
            coupled = any(v != 0 for row in coupling.entries() for v in row)
            if not coupled:
                _shear_couple(M, a, b, bound, lam, conjugate, transcript, False)
            _absorb_lift(M, a, b, bound, lam, conjugate, transcript, "lemma1-lift")
        bound = b

    B = M
    _verify_exact(A, B, S, lam)
    return RowSumResult(B, S, transcript, "exact", lam, factors=factors)


def _block_rho_exact(block: RationalMatrix):
    coeffs = char_poly(block)
    arr = to_float(block).array
    ev = np.linalg.eigvals(arr)
    rho = float(np.max(np.abs(ev))) if ev.size else 0.0
    return _rationalize_root(coeffs, rho)


def _absorb_lift(M, a, b, bound, lam, conjugate, transcript, label):
    A2 = M.submatrix(range(a, b), range(a, b))
    A3 = M.submatrix(range(a, b), range(0, bound))
    n = M.rows
    Mat = RationalMatrix.identity(b - a).scale(lam) - A2
    try:
        y = solve(Mat, RationalMatrix.column(A3.mat_vec(ONES(bound))))
    except SingularMatrixError:
        raise SpectralDominanceError("a diagonal block has spectral radius >= lambda1")
    yv = [y[i, 0] for i in range(b - a)]
    if any(v <= 0 for v in yv):
        raise SpectraError("internal invariant violation: lift vector not positive")
    d = [Fraction(1)] * n
    for i, v in enumerate(yv):
        d[a + i] = v
    conjugate(RationalMatrix.diagonal(d))
    transcript.append(
        RowSumStep(label, {"range": [a, b], "absorbed-into": [0, bound]})
    )


def _shear_couple(M, a, b, bound, lam, conjugate, transcript, general):
    B_cur = M.submatrix(range(0, bound), range(0, bound))
    z = _left_eigenvector_exact(B_cur, lam)
    zmax = max(z)
    z = tuple(v / zmax for v in z)
    n = M.rows
    shear = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for i in range(a, b):
        for j in range(bound):
            shear[i][j] = -z[j]
    conjugate(RationalMatrix(shear))
    transcript.append(
        RowSumStep(
            "lemma2-coupling" + ("-general" if general else ""),
            {"range": [a, b], "coupled-into": [0, bound]},
        )
    )


def _cluster_scale(M, a, b, lam, conjugate, transcript, members):
    K = M.submatrix(range(a, b), range(a, b))
    Mat = RationalMatrix.identity(b - a).scale(lam) - K
    try:
        d = solve(Mat, RationalMatrix.column(ONES(b - a)))
    except SingularMatrixError:
        raise SpectralDominanceError("cluster spectral radius >= lambda1")
    dv = [d[i, 0] for i in range(b - a)]
    if any(v <= 0 for v in dv):
        raise SpectralDominanceError("cluster scaling vector not positive")
    n = M.rows
    full = [Fraction(1)] * n
    for i, v in enumerate(dv):
        full[a + i] = v
    conjugate(RationalMatrix.diagonal(full))
    transcript.append(
        RowSumStep(
            "cluster-scaling", {"range": [a, b], "components": list(members)}
        )
    )


def _verify_exact(A, B, S, lam):
    if not B.is_nonnegative:
        raise CertificationError("result has a negative entry")
    if any(s != lam for s in B.row_sums()):
        raise CertificationError("result is not in CS form")
    if solve(S, A @ S) != B:
        raise CertificationError("similarity verification failed")


# ---------------------------------------------------------------------------
# transpose fallback
# ---------------------------------------------------------------------------


def similarity_to_transpose(A: RationalMatrix) -> RationalMatrix:
    """Exact invertible X with A X = X A^T (always exists; found generically)."""
    n = A.rows
    rows = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[k * n + j] += A[i, k]
                row[i * n + k] -= A[j, k]
            rows.append(row)
    basis = kernel(RationalMatrix(rows))
    if not basis:
        raise SpectraError("internal error: empty Sylvester kernel")

    def as_matrix(vec):
        return RationalMatrix([[vec[i * n + j] for j in range(n)] for i in range(n)])

    from .core import determinant

    for v in basis:
        X = as_matrix(v)
        if determinant(X) != 0:
            return X
    rng = random.Random(0)
    for _ in range(200):
        coeffs = [rng.randint(-3, 3) for _ in basis]
        vec = [
            sum(c * bv[k] for c, bv in zip(coeffs, basis))
            for k in range(n * n)
        ]
        X = as_matrix(vec)
        if determinant(X) != 0:
            return X
    raise SpectraError("internal error: no invertible transpose similarity found")


def _via_transpose(A: RationalMatrix, lam) -> RowSumResult:
    At = A.transpose()
    if _plan_layout(At, lam) is None:
        raise UnsupportedLayoutError(
            "the reducible layout entangles the Perron block in both "
            "directions; this reduction is not implemented"
        )
    inner = _to_cs_exact(At, lam)
    X = similarity_to_transpose(A)
    S = X @ inner.S
    transcript = [
        RowSumStep("transpose-similarity", {"note": "reduction ran on the transpose"})
    ] + list(inner.transcript)
    _verify_exact(A, inner.B, S, lam)
    return RowSumResult(
        inner.B, S, transcript, "exact", lam, factors=[X] + list(inner.factors)
    )


# ---------------------------------------------------------------------------
# float pipeline
# ---------------------------------------------------------------------------

_FLOAT_TOL = 1e-9


def _to_cs_float(A, arr) -> RowSumResult:
    n = arr.shape[0]
    if n > 1:
        _check_simple_float(arr)
    transcript = [
        RowSumStep("float-mode", {"note": "floating arithmetic; tolerance 1e-9"})
    ]
    if n == 1:
        F = FloatMatrix(arr)
        return RowSumResult(
            F,
            FloatMatrix(np.eye(1)),
            transcript,
            "float",
            float(arr[0, 0]),
            factors=[np.eye(1)],
        )

    ev = np.linalg.eigvals(arr)
    lam = float(np.max(np.abs(ev)))

    if is_irreducible(FloatMatrix(arr)):
        _rho, x = perron_data(FloatMatrix(arr))
        B = arr / x[:, None] * x[None, :]
        S = np.diag(x)
        transcript.append(RowSumStep("diagonal-scaling", {"scope": "global"}))
        _verify_float(arr, B, S, _rho)
        return RowSumResult(
            FloatMatrix(B), FloatMatrix(S), transcript, "float", _rho, factors=[S]
        )

    plan = _plan_layout_float(arr)
    if plan is None:
        raise UnsupportedLayoutError(
            "float mode handles irreducible matrices and the chain/cluster "
            "layouts of the exact mode; this input is outside both"
        )

    perm = plan.permutation
    P = np.eye(n)[perm, :]
    M = P @ arr @ P.T
    S = P.T.copy()
    factors = [P.T.copy()]
    transcript.append(RowSumStep("permutation", {"order": list(perm)}))

    ranges = []
    pos = 0
    for kind, payload in plan.order:
        size = (
            sum(len(plan.components[ci]) for ci in payload)
            if kind == "cluster"
            else len(plan.components[payload])
        )
        ranges.append((kind, payload, pos, pos + size))
        pos += size

    def conj(T):
        nonlocal M, S
        M = np.linalg.solve(T, M @ T)
        S = S @ T
        factors.append(T)

    for kind, payload, a, b in ranges:
        if kind == "cluster" or b - a == 1:
            continue
        block = M[a:b, a:b]
        _rho_b, x = perron_data(FloatMatrix(block))
        d = np.ones(n)
        d[a:b] = x
        conj(np.diag(d))
        transcript.append(RowSumStep("block-scaling", {"range": [a, b]}))

    bound = ranges[0][3]
    for kind, payload, a, b in ranges[1:]:
        coupled = bool(np.any(M[a:b, :bound] > 1e-13))
        if kind == "cluster":
            d = np.linalg.solve(lam * np.eye(b - a) - M[a:b, a:b], np.ones(b - a))
            full = np.ones(n)
            full[a:b] = d
            conj(np.diag(full))
            transcript.append(RowSumStep("cluster-scaling", {"range": [a, b]}))
            coupled = False
        if not coupled:
            z = _left_vec_float(M[:bound, :bound], lam)
            T = np.eye(n)
            T[a:b, :bound] = -z[None, :]
            conj(T)
            transcript.append(
                RowSumStep("lemma2-coupling", {"range": [a, b]})
            )
        y = np.linalg.solve(
            lam * np.eye(b - a) - M[a:b, a:b], M[a:b, :bound] @ np.ones(bound)
        )
        if np.min(y) <= 0:
            raise SpectraError("float lift vector not positive")
        full = np.ones(n)
        full[a:b] = y
        conj(np.diag(full))
        transcript.append(RowSumStep("lemma1-lift", {"range": [a, b]}))
        bound = b

    _verify_float(arr, M, S, lam)
    return RowSumResult(
        FloatMatrix(M), FloatMatrix(S), transcript, "float", lam, factors=factors
    )


def _left_vec_float(B, lam, iters=200000, tol=1e-13):
    n = B.shape[0]
    shifted = B.T + np.eye(n)
    z = np.ones(n)
    for _ in range(iters):
        y = shifted @ z
        y = y / np.max(y)
        if np.max(np.abs(y - z)) <= tol:
            z = y
            break
        z = y
    z = np.clip(z, 0.0, None)
    z = z / np.max(z)
    resid = float(np.max(np.abs(B.T @ z - lam * z)))
    if resid > 1e-8 * max(1.0, abs(lam)):
        raise SpectraError("left eigenvector iteration residual %.3e" % resid)
    return z


def _verify_float(arr, B, S, lam):
    scale = max(1.0, float(np.max(np.abs(arr))), abs(lam))
    if np.min(B) < -_FLOAT_TOL * scale:
        raise CertificationError("float result has a significantly negative entry")
    if np.max(np.abs(B @ np.ones(B.shape[0]) - lam)) > _FLOAT_TOL * scale:
        raise CertificationError("float row sums deviate beyond 1e-9")
    resid = np.max(np.abs(np.linalg.solve(S, arr @ S) - B))
    if resid > _FLOAT_TOL * scale * 10:
        raise CertificationError("float similarity residual %.3e" % resid)
