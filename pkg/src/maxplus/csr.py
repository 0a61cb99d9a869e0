"""CSR terms, the Nachtigall matrix, weak expansion thresholds, transients.

For a matrix with finite maximum cycle mean lambda and critical graph of
cyclicity gamma, the CSR triple is carved out of
M = ((lambda^-1 * A)^gamma)^*: C keeps the columns of M at critical
nodes, R the rows of M at critical nodes, and S the entries of A on the
critical arcs.  C S^t R is then purely pseudoperiodic in t with period
gamma (up to a lambda^gamma shift), and the weak expansion

    A^t = C S^t R  (+)  B^t

holds for all t past a threshold T1, where B is the Nachtigall matrix
(A with every row and column of a critical node pushed to -inf).  T1 is
found by scanning t up to the ceiling min(Wi(n), DM(g, n)), which is a
proven upper bound for T1, and taking one past the last failing t.

The triple may also be built with respect to a completely reducible
subgraph of the critical graph (then gamma is the subgraph's cyclicity
and C, S, R are carved at the subgraph's nodes and arcs).

When lambda = -inf (acyclic digraph) the CSR terms are all -inf by
convention and B = A, so the expansion holds trivially from t = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import dm_bound, wielandt_bound
from .digraph import associated_digraph, scc_decompose
from .matrix import (
    MaxPlusMatrix,
    identity,
    kleene_star,
    mat_mul,
    mat_oplus,
    mat_power,
    scalar_times,
    zeros,
)
from .semiring import BOTTOM, MaxPlusScalar, negate, scalar_power
from .spectral import CritGraph, critical_graph, max_cycle_mean, spectrum


@dataclass(eq=False)
class CsrTriple:
    """The matrices C, S, R with the cycle mean and defining cyclicity.

    csr_at evaluates C S^t R for any t >= 1; internally only the gamma
    distinct normalized values are computed, then shifted by t*lambda.
    """

    c: MaxPlusMatrix
    s: MaxPlusMatrix
    r: MaxPlusMatrix
    lam: MaxPlusScalar
    gamma: int
    _residues: dict[int, MaxPlusMatrix] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.c.n


def build_csr(a: MaxPlusMatrix, subgraph: CritGraph | None = None) -> CsrTriple:
    """CSR terms of a, w.r.t. the full critical graph or a given subgraph.

    The subgraph must be a completely reducible subgraph of the critical
    graph (e.g. one of its strongly connected components); its own
    cyclicity becomes gamma.
    """
    lam = max_cycle_mean(a)
    if lam.is_bottom:
        if subgraph is not None:
            raise ValueError("no critical subgraph exists for an acyclic digraph")
        z = zeros(a.n)
        return CsrTriple(c=z, s=z, r=z, lam=BOTTOM, gamma=1)
    crit = critical_graph(a)
    k = crit if subgraph is None else subgraph
    if not k.arcs <= crit.arcs:
        raise ValueError("subgraph is not contained in the critical graph")
    gamma = k.cyclicity
    normalized = scalar_times(negate(lam), a)
    m = kleene_star(mat_power(normalized, gamma))
    mraw = m.raw()
    araw = a.raw()
    n = a.n
    c_raw = [[mraw[i][j] if j in k.nodes else None for j in range(n)] for i in range(n)]
    r_raw = [[mraw[i][j] if i in k.nodes else None for j in range(n)] for i in range(n)]
    s_raw = [
        [araw[i][j] if (i, j) in k.arcs else None for j in range(n)] for i in range(n)
    ]
    return CsrTriple(
        c=MaxPlusMatrix._from_raw(c_raw),
        s=MaxPlusMatrix._from_raw(s_raw),
        r=MaxPlusMatrix._from_raw(r_raw),
        lam=lam,
        gamma=gamma,
    )


def csr_at(triple: CsrTriple, t: int) -> MaxPlusMatrix:
    """Evaluate C S^t R exactly, t >= 1, using the gamma-periodic cache."""
    if t < 1:
        raise ValueError(f"csr_at needs t >= 1, got {t}")
    if triple.lam.is_bottom:
        return zeros(triple.n)
    gamma = triple.gamma
    residue = ((t - 1) % gamma) + 1
    cached = triple._residues.get(residue)
    if cached is None:
        s_norm = scalar_times(negate(triple.lam), triple.s)
        cached = mat_mul(mat_mul(triple.c, mat_power(s_norm, residue)), triple.r)
        triple._residues[residue] = cached
    return scalar_times(scalar_power(triple.lam, t), cached)


def nachtigall_matrix(a: MaxPlusMatrix, crit: CritGraph | None) -> MaxPlusMatrix:
    """a with every entry in a critical row or column replaced by -inf."""
    if crit is None:
        return a
    raw = a.raw()
    out = [
        [
            None if (i in crit.nodes or j in crit.nodes) else raw[i][j]
            for j in range(a.n)
        ]
        for i in range(a.n)
    ]
    return MaxPlusMatrix._from_raw(out)


@dataclass(eq=False)
class WeakExpansion:
    """The weak expansion data: CSR triple, Nachtigall matrix, threshold T1.

    A^t equals csr_at(t) (+) B^t exactly for every t >= t1, and differs
    at t1 - 1 whenever t1 > 1.
    """

    csr: CsrTriple
    b: MaxPlusMatrix
    t1: int


def weak_threshold_T1(a: MaxPlusMatrix) -> WeakExpansion:
    """Least t1 >= 1 with A^t = C S^t R (+) B^t for all t >= t1.

    Scans every t from 1 up to the proven ceiling min(Wi(n), DM(g, n));
    equality at one t does not imply it at the next, so the scan keeps
    the last failure rather than stopping early.
    """
    sp = spectrum(a)
    if sp.crit is None:
        return WeakExpansion(csr=build_csr(a), b=a, t1=1)
    triple = build_csr(a)
    b = nachtigall_matrix(a, sp.crit)
    ceiling = min(wielandt_bound(a.n), dm_bound(sp.crit.girth, a.n))
    last_fail = 0
    at = bt = None
    for t in range(1, ceiling + 1):
        at = a if at is None else mat_mul(at, a)
        bt = b if bt is None else mat_mul(bt, b)
        if at != mat_oplus(csr_at(triple, t), bt):
            last_fail = t
    return WeakExpansion(csr=triple, b=b, t1=last_fail + 1)


def transient_T(a: MaxPlusMatrix, max_t: int = 10_000) -> int:
    """Least T >= 0 with A^(t+gamma) = lambda^gamma * A^t for all t >= T.

    Defined for strongly connected digraphs; gamma is the cyclicity of
    the critical graph.  The scan walks t upward and stops once gamma
    consecutive checks succeed, which propagates to all larger t because
    equality at t forces equality at t + gamma.
    """
    g = associated_digraph(a)
    if len(scc_decompose(g).components) != 1:
        raise ValueError("transient is defined for strongly connected digraphs only")
    lam = max_cycle_mean(a)
    if lam.is_bottom:
        raise ValueError("transient undefined: single node without a loop")
    gamma = critical_graph(a).cyclicity
    shift = scalar_power(lam, gamma)
    powers = [identity(a.n)]
    last_fail = -1
    t = 0
    while t <= last_fail + gamma:
        while len(powers) <= t + gamma:
            powers.append(mat_mul(powers[-1], a))
        if powers[t + gamma] != scalar_times(shift, powers[t]):
            last_fail = t
        t += 1
        if t > max_t:
            raise RuntimeError(f"transient exceeds the scan cap {max_t}")
    return last_fail + 1


def crit_row_col_transient(a: MaxPlusMatrix) -> int:
    """Least T past which critical rows and columns of A^t agree with C S^t R."""
    overall, _, _ = crit_row_col_profile(a)
    return overall


def crit_row_col_profile(a: MaxPlusMatrix) -> tuple[int, dict[int, int], dict[int, int]]:
    """Overall and per-index transients of the critical rows and columns.

    Returns (overall, row_transients, col_transients) where the dicts map
    each critical index to the least T from which its row (resp. column)
    of A^t equals the same row of C S^t R for all t >= T.  The overall
    value is the max and never exceeds the weak expansion threshold.
    """
    sp = spectrum(a)
    if sp.crit is None:
        raise ValueError("no critical rows or columns: the digraph is acyclic")
    crit_nodes = sorted(sp.crit.nodes)
    triple = build_csr(a)
    ceiling = min(wielandt_bound(a.n), dm_bound(sp.crit.girth, a.n))
    row_fail = {i: 0 for i in crit_nodes}
    col_fail = {j: 0 for j in crit_nodes}
    at = None
    for t in range(1, ceiling + 1):
        at = a if at is None else mat_mul(at, a)
        cs = csr_at(triple, t)
        araw, craw = at.raw(), cs.raw()
        for i in crit_nodes:
            if araw[i] != craw[i]:
                row_fail[i] = t
        for j in crit_nodes:
            for i in range(a.n):
                if araw[i][j] != craw[i][j]:
                    col_fail[j] = t
                    break
    rows = {i: f + 1 for i, f in row_fail.items()}
    cols = {j: f + 1 for j, f in col_fail.items()}
    overall = max(max(rows.values()), max(cols.values()))
    return overall, rows, cols


@dataclass(eq=False)
class TransientReport:
    """Summary of the periodicity analysis of one matrix.

    T is None when the digraph is not strongly connected (the transient
    itself is only defined in the irreducible case); the critical-graph
    fields are None when the digraph is acyclic.
    """

    n: int
    lam: MaxPlusScalar
    g: int | None
    gamma: int | None
    t: int | None
    t1: int
    wi: int
    dm: int | None
    attains_dm: bool
    attains_wiel: bool
    crit_rc_transient: int | None

    def as_dict(self) -> dict:
        return {
            "lambda": str(self.lam),
            "g": self.g,
            "gamma": self.gamma,
            "T": self.t,
            "T1": self.t1,
            "wi": self.wi,
            "dm": self.dm,
            "attains_dm": self.attains_dm,
            "attains_wiel": self.attains_wiel,
            "crit_rc_transient": self.crit_rc_transient,
        }

    def render(self) -> str:
        lines = []
        for key, value in self.as_dict().items():
            shown = "none" if value is None else value
            lines.append(f"{key:>18}: {shown}")
        return "\n".join(lines) + "\n"


def analyze(a: MaxPlusMatrix) -> TransientReport:
    """Full transient report: lambda, crit summary, T, T1, bounds, flags."""
    sp = spectrum(a)
    wi = wielandt_bound(a.n)
    if sp.crit is None:
        return TransientReport(
            n=a.n,
            lam=sp.lam,
            g=None,
            gamma=None,
            t=None,
            t1=1,
            wi=wi,
            dm=None,
            attains_dm=False,
            attains_wiel=1 == wi,
            crit_rc_transient=None,
        )
    expansion = weak_threshold_T1(a)
    dm = dm_bound(sp.crit.girth, a.n)
    try:
        t = transient_T(a)
    except ValueError:
        t = None
    return TransientReport(
        n=a.n,
        lam=sp.lam,
        g=sp.crit.girth,
        gamma=sp.crit.cyclicity,
        t=t,
        t1=expansion.t1,
        wi=wi,
        dm=dm,
        attains_dm=expansion.t1 == dm,
        attains_wiel=expansion.t1 == wi,
        crit_rc_transient=crit_row_col_transient(a),
    )
