"""Independent brute-force oracles the library is checked against.

Everything here is deliberately naive: dynamic programs over explicit
walk lengths and exhaustive enumeration over node permutations.  None of
it shares code with the library paths under test.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations


def raw_of(matrix):
    """Fraction-or-None rows of a MaxPlusMatrix."""
    return matrix.raw()


def walk_power(a, t):
    """Best weight of walks of length exactly t, per entry, by direct DP."""
    raw = a.raw()
    n = a.n
    cur = [[raw[i][j] for j in range(n)] for i in range(n)]
    for _ in range(t - 1):
        nxt = [[None] * n for _ in range(n)]
        for i in range(n):
            for k in range(n):
                x = cur[i][k]
                if x is None:
                    continue
                for j in range(n):
                    y = raw[k][j]
                    if y is None:
                        continue
                    s = x + y
                    if nxt[i][j] is None or s > nxt[i][j]:
                        nxt[i][j] = s
        cur = nxt
    return cur


def cycles_by_permutations(a):
    """All elementary cycles as (canonical node tuple, weight) via brute force."""
    raw = a.raw()
    n = a.n
    found = {}
    for k in range(1, n + 1):
        for nodes in permutations(range(n), k):
            if nodes[0] != min(nodes):
                continue  # canonical rotation: least node first
            ok = True
            total = Fraction(0)
            for s in range(k):
                w = raw[nodes[s]][nodes[(s + 1) % k]]
                if w is None:
                    ok = False
                    break
                total += w
            if ok:
                found[nodes] = total
    return found


def max_cycle_mean_brute(a):
    """Maximum weight/length over all elementary cycles; None if acyclic."""
    best = None
    for nodes, weight in cycles_by_permutations(a).items():
        mean = weight / len(nodes)
        if best is None or mean > best:
            best = mean
    return best


def critical_arcs_brute(a):
    """Arcs lying on some elementary cycle of maximal mean."""
    lam = max_cycle_mean_brute(a)
    arcs = set()
    for nodes, weight in cycles_by_permutations(a).items():
        if weight / len(nodes) == lam:
            k = len(nodes)
            for s in range(k):
                arcs.add((nodes[s], nodes[(s + 1) % k]))
    return arcs


def best_walks_through(a, through, max_len):
    """DP table best[l][i][j]: top weight of length-l walks i->j hitting `through`.

    Walks count the set `through` as hit if any visited node (endpoints
    included) belongs to it.  Table rows are None when no such walk exists.
    """
    raw = a.raw()
    n = a.n
    hit = [v in through for v in range(n)]
    # state: (start i fixed per run) -> dp[l][v][flag]
    tables = []
    for i in range(n):
        dp = [[[None, None] for _ in range(n)]]
        start = [[None, None] for _ in range(n)]
        start[i][1 if hit[i] else 0] = Fraction(0)
        dp[0] = start
        for l in range(max_len):
            cur = dp[l]
            nxt = [[None, None] for _ in range(n)]
            for u in range(n):
                for f in (0, 1):
                    x = cur[u][f]
                    if x is None:
                        continue
                    row = raw[u]
                    for v in range(n):
                        w = row[v]
                        if w is None:
                            continue
                        nf = f | (1 if hit[v] else 0)
                        s = x + w
                        if nxt[v][nf] is None or s > nxt[v][nf]:
                            nxt[v][nf] = s
            dp.append(nxt)
        tables.append(dp)
    best = [[[None] * n for _ in range(n)] for _ in range(max_len + 1)]
    for i in range(n):
        for l in range(max_len + 1):
            for j in range(n):
                best[l][i][j] = tables[i][l][j][1]
    return best


def csr_walk_oracle(a_normalized, crit_nodes, gamma, t, max_len):
    """Entrywise best weight over walks through a critical node with
    length = t (mod gamma), lengths 1..max_len, on a mean-normalized matrix."""
    table = best_walks_through(a_normalized, crit_nodes, max_len)
    n = a_normalized.n
    out = [[None] * n for _ in range(n)]
    for l in range(1, max_len + 1):
        if (l - t) % gamma != 0:
            continue
        for i in range(n):
            for j in range(n):
                x = table[l][i][j]
                if x is not None and (out[i][j] is None or x > out[i][j]):
                    out[i][j] = x
    return out
