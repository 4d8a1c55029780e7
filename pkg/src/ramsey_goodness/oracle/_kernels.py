"""Compiled kernels for graphs on at most 11 vertices.

Graphs are int64 codes (edge ``ij``, ``i < j``, at bit ``j*(j-1)/2 + i``) and
adjacency is one int64 mask per vertex. Every kernel releases the GIL so the
drivers can fan shards out over threads.
"""

import numpy as np
from numba import njit

MAX_KERNEL_N = 11

NONE, PATH, CYCLE, CLIQUE, SUBGRAPH = 0, 1, 2, 3, 4

_jit = njit(cache=True, nogil=True)


@_jit
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@_jit
def lowbit_index(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@_jit
def decode(code, n, adj):
    for v in range(n):
        adj[v] = 0
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (code >> idx) & 1:
                adj[i] |= np.int64(1) << j
                adj[j] |= np.int64(1) << i
            idx += 1


@_jit
def encode(adj, n):
    code = np.int64(0)
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (adj[j] >> i) & 1:
                code |= np.int64(1) << idx
            idx += 1
    return code


@_jit
def complement_adj(adj, n, out):
    full = (np.int64(1) << n) - 1
    for v in range(n):
        out[v] = full & ~adj[v] & ~(np.int64(1) << v)


# ---------------------------------------------------------------------------
# containment by dynamic programming over vertex subsets
# ---------------------------------------------------------------------------


@_jit
def has_path(adj, n, k, ends):
    """Simple path on k vertices; ``ends[mask]`` holds end vertices of paths covering mask."""
    if k <= 1:
        return n >= k
    if k > n:
        return False
    if k == 2:
        for v in range(n):
            if adj[v]:
                return True
        return False
    size = np.int64(1) << n
    for mask in range(size):
        ends[mask] = 0
    for v in range(n):
        ends[np.int64(1) << v] = np.int64(1) << v
    for mask in range(1, size):
        e = ends[mask]
        if e == 0:
            continue
        pc = popcount(mask)
        while e:
            vb = e & -e
            e ^= vb
            nb = adj[lowbit_index(vb)] & ~mask
            if nb:
                if pc + 1 == k:
                    return True
                while nb:
                    ub = nb & -nb
                    nb ^= ub
                    ends[mask | ub] |= ub
    return False


@_jit
def has_cycle(adj, n, k, ends):
    """Cycle on exactly k >= 3 vertices; each cycle rooted at its smallest vertex."""
    if k > n:
        return False
    for s in range(n - k + 1):
        sb = np.int64(1) << s
        above = ((np.int64(1) << n) - 1) & ~((sb << 1) - 1)
        width = n - s - 1
        for t in range(np.int64(1) << width):
            ends[sb | (t << (s + 1))] = 0
        ends[sb] = sb
        for t in range(np.int64(1) << width):
            mask = sb | (t << (s + 1))
            e = ends[mask]
            if e == 0:
                continue
            pc = popcount(mask)
            while e:
                vb = e & -e
                e ^= vb
                nb = adj[lowbit_index(vb)] & above & ~mask
                while nb:
                    ub = nb & -nb
                    nb ^= ub
                    if pc + 1 == k:
                        if adj[lowbit_index(ub)] & sb:
                            return True
                    else:
                        ends[mask | ub] |= ub
    return False


@_jit
def has_clique(adj, n, k, work):
    if k <= 1:
        return n >= k
    size = np.int64(1) << n
    work[0] = 1
    for mask in range(1, size):
        lb = mask & -mask
        rest = mask ^ lb
        ok = work[rest] == 1 and (adj[lowbit_index(lb)] & rest) == rest
        work[mask] = 1 if ok else 0
        if ok and popcount(mask) == k:
            return True
    return False


@_jit
def has_subgraph(hadj, hn, pn, pnbr, pdeg, img, cand, degok):
    """Backtracking embedding of a pattern given in search order.

    ``pnbr[i]`` is the mask of earlier positions adjacent to position ``i``.
    """
    if pn > hn:
        return False
    if pn == 0:
        return True
    full = (np.int64(1) << hn) - 1
    for i in range(pn):
        m = np.int64(0)
        for h in range(hn):
            if popcount(hadj[h]) >= pdeg[i]:
                m |= np.int64(1) << h
        degok[i] = m
    cand[0] = degok[0]
    d = 0
    used = np.int64(0)
    while d >= 0:
        if cand[d] == 0:
            d -= 1
            if d >= 0:
                used &= ~(np.int64(1) << img[d])
            continue
        hb = cand[d] & -cand[d]
        cand[d] ^= hb
        h = lowbit_index(hb)
        img[d] = h
        if d + 1 == pn:
            return True
        nu = used | hb
        c = full & ~nu & degok[d + 1]
        pm = pnbr[d + 1]
        while pm:
            jb = pm & -pm
            pm ^= jb
            c &= hadj[img[lowbit_index(jb)]]
        used = nu
        d += 1
        cand[d] = c
    return False


@_jit
def contains_kind(adj, n, kind, k, ends, pnbr, pdeg, img, cand, degok):
    if kind == PATH:
        return has_path(adj, n, k, ends)
    if kind == CYCLE:
        return has_cycle(adj, n, k, ends)
    if kind == CLIQUE:
        return has_clique(adj, n, k, ends)
    if kind == SUBGRAPH:
        return has_subgraph(adj, n, k, pnbr, pdeg, img, cand, degok)
    return False


# ---------------------------------------------------------------------------
# canonical labelling
# ---------------------------------------------------------------------------


@_jit
def _refine(adj, n, col, sig, order, tmp):
    """Refine a dense colouring to the coarsest equitable one; returns colour count."""
    ncol = 0
    for v in range(n):
        if col[v] + 1 > ncol:
            ncol = col[v] + 1
    while True:
        width = ncol + 1
        for v in range(n):
            sig[v, 0] = col[v]
            for c in range(1, width):
                sig[v, c] = 0
            a = adj[v]
            while a:
                ub = a & -a
                a ^= ub
                sig[v, 1 + col[lowbit_index(ub)]] += 1
        for i in range(n):
            order[i] = i
        for i in range(1, n):
            x = order[i]
            j = i - 1
            while j >= 0:
                y = order[j]
                cmp = 0
                for c in range(width):
                    if sig[y, c] != sig[x, c]:
                        cmp = 1 if sig[y, c] > sig[x, c] else -1
                        break
                if cmp <= 0:
                    break
                order[j + 1] = y
                j -= 1
            order[j + 1] = x
        c = 0
        tmp[order[0]] = 0
        for i in range(1, n):
            a, b = order[i - 1], order[i]
            same = True
            for w in range(width):
                if sig[a, w] != sig[b, w]:
                    same = False
                    break
            if not same:
                c += 1
            tmp[b] = c
        for v in range(n):
            col[v] = tmp[v]
        if c + 1 == ncol:
            return ncol
        ncol = c + 1


@_jit
def canonical(adj, n, lab):
    """Canonical code (maximum over the pruned search tree) and labelling ``lab``.

    Individualisation-refinement: the first non-singleton cell is split on
    each member, skipping members that are twins of one already tried
    (swapping twins is an automorphism preserving the current colouring).
    """
    if n <= 1:
        for v in range(n):
            lab[v] = v
        return np.int64(0)
    cols = np.zeros((n + 1, n), np.int64)
    cand = np.empty((n + 1, n), np.int64)
    ncand = np.zeros(n + 1, np.int64)
    ptr = np.zeros(n + 1, np.int64)
    ncols = np.zeros(n + 1, np.int64)
    sig = np.empty((n, n + 1), np.int64)
    order = np.empty(n, np.int64)
    tmp = np.empty(n, np.int64)
    ncols[0] = _refine(adj, n, cols[0], sig, order, tmp)
    best = np.int64(-1)
    d = 0
    fresh = True
    while d >= 0:
        if fresh:
            fresh = False
            if ncols[d] == n:
                code = np.int64(0)
                for v in range(n):
                    a = adj[v] >> (v + 1)
                    u = v + 1
                    while a:
                        if a & 1:
                            x = cols[d, v]
                            y = cols[d, u]
                            if x > y:
                                x, y = y, x
                            code |= np.int64(1) << (y * (y - 1) // 2 + x)
                        a >>= 1
                        u += 1
                if code > best:
                    best = code
                    for v in range(n):
                        lab[v] = cols[d, v]
                d -= 1
                continue
            # target cell: lowest colour with two or more members
            target = -1
            for c in range(ncols[d]):
                cnt = 0
                for v in range(n):
                    if cols[d, v] == c:
                        cnt += 1
                if cnt > 1:
                    target = c
                    break
            m = 0
            for v in range(n):
                if cols[d, v] == target:
                    cand[d, m] = v
                    m += 1
            ncand[d] = m
            ptr[d] = 0
        advanced = False
        while ptr[d] < ncand[d]:
            v = cand[d, ptr[d]]
            ptr[d] += 1
            twin = False
            for i in range(ptr[d] - 1):
                u = cand[d, i]
                if (adj[u] & ~(np.int64(1) << v)) == (adj[v] & ~(np.int64(1) << u)):
                    twin = True
                    break
            if twin:
                continue
            c = cols[d, v]
            for w in range(n):
                x = cols[d, w]
                if x > c or (x == c and w != v):
                    cols[d + 1, w] = x + 1
                else:
                    cols[d + 1, w] = x
            ncols[d + 1] = _refine(adj, n, cols[d + 1], sig, order, tmp)
            d += 1
            fresh = True
            advanced = True
            break
        if not advanced:
            d -= 1
    return best


@_jit
def canonical_code(code, n):
    adj = np.empty(n, np.int64)
    lab = np.empty(n, np.int64)
    decode(code, n, adj)
    return canonical(adj, n, lab)


@_jit
def _delete_vertex(adj, n, m, out):
    """Adjacency of the graph minus vertex m, relabelled order-preservingly."""
    low = (np.int64(1) << m) - 1
    k = 0
    for v in range(n):
        if v == m:
            continue
        a = adj[v]
        out[k] = (a & low) | ((a >> (m + 1)) << m)
        k += 1


@_jit
def _passes(adj, n, kind, k, on_complement, cadj, work):
    if kind == NONE:
        return True
    if on_complement:
        complement_adj(adj, n, cadj)
        return not contains_kind(cadj, n, kind, k, work, work, work, work, work, work)
    return not contains_kind(adj, n, kind, k, work, work, work, work, work, work)


@_jit
def extend_level(parents, m, kind, k, on_complement, out, counts):
    """Children on m+1 vertices of canonical parents on m vertices.

    A child is kept iff deleting its canonical last vertex leaves a graph
    isomorphic to the parent it was built from; survivors from one parent are
    deduplicated by canonical code. With ``kind != NONE`` only children whose
    graph (or complement) avoids the given path/cycle/clique are generated;
    those properties are hereditary, so the pruned tree is still complete.
    Writes children consecutively into ``out`` and per-parent counts into
    ``counts``; returns the total.
    """
    n = m + 1
    shift = m * (m - 1) // 2
    nsub = np.int64(1) << m
    adj = np.empty(n, np.int64)
    cadj = np.empty(n, np.int64)
    sub = np.empty(n, np.int64)
    lab = np.empty(n, np.int64)
    lab2 = np.empty(n, np.int64)
    work = np.empty(np.int64(1) << n, np.int64)
    local = np.empty(nsub, np.int64)
    total = 0
    for p in range(parents.shape[0]):
        pc = parents[p]
        kept = 0
        for s in range(nsub):
            child = pc | (np.int64(s) << shift)
            decode(child, n, adj)
            if not _passes(adj, n, kind, k, on_complement, cadj, work):
                continue
            cc = canonical(adj, n, lab)
            last = -1
            for v in range(n):
                if lab[v] == m:
                    last = v
                    break
            ok = last == m
            if not ok:
                _delete_vertex(adj, n, last, sub)
                # parents are stored canonically, so their code is their canonical code
                ok = canonical(sub, m, lab2) == pc
            if ok:
                local[kept] = cc
                kept += 1
        local[:kept].sort()
        w = 0
        for i in range(kept):
            if i == 0 or local[i] != local[i - 1]:
                out[total + w] = local[i]
                w += 1
        counts[p] = w
        total += w
    return total


# ---------------------------------------------------------------------------
# bulk scans
# ---------------------------------------------------------------------------


@_jit
def scan_arrows(codes, n, red_kind, red_k, pnbr, pdeg, blue_kind, blue_k, start, stop):
    """Index of the first graph in ``codes[start:stop]`` that does not arrow, or -1."""
    adj = np.empty(n, np.int64)
    cadj = np.empty(n, np.int64)
    work = np.empty(np.int64(1) << n, np.int64)
    img = np.empty(max(n, 1), np.int64)
    cand = np.empty(max(n, 1) + 1, np.int64)
    degok = np.empty(max(n, 1) + 1, np.int64)
    for idx in range(start, stop):
        decode(codes[idx], n, adj)
        complement_adj(adj, n, cadj)
        if contains_kind(cadj, n, blue_kind, blue_k, work, pnbr, pdeg, img, cand, degok):
            continue
        if contains_kind(adj, n, red_kind, red_k, work, pnbr, pdeg, img, cand, degok):
            continue
        return idx
    return -1


@_jit
def scan_path_free(codes, n, k, start, stop):
    """Over P_k-free graphs: (count, max edges, index of a maximiser)."""
    adj = np.empty(n, np.int64)
    work = np.empty(np.int64(1) << n, np.int64)
    count = 0
    best = -1
    where = -1
    for idx in range(start, stop):
        decode(codes[idx], n, adj)
        if has_path(adj, n, k, work):
            continue
        count += 1
        e = 0
        for v in range(n):
            e += popcount(adj[v])
        e //= 2
        if e > best:
            best = e
            where = idx
    return count, best, where


@_jit
def scan_strucf(codes, n, k, start, stop):
    """Over P_k-free graphs check: all components have <= k-1 vertices, or
    some vertex has degree <= k/2 - 1. Returns (checked, first violation or -1).
    """
    adj = np.empty(n, np.int64)
    work = np.empty(np.int64(1) << n, np.int64)
    checked = 0
    for idx in range(start, stop):
        decode(codes[idx], n, adj)
        if has_path(adj, n, k, work):
            continue
        checked += 1
        low_degree = False
        for v in range(n):
            if 2 * popcount(adj[v]) <= k - 2:
                low_degree = True
                break
        if low_degree:
            continue
        small = True
        seen = np.int64(0)
        for s in range(n):
            if (seen >> s) & 1:
                continue
            comp = np.int64(1) << s
            frontier = comp
            while frontier:
                nxt = np.int64(0)
                f = frontier
                while f:
                    ub = f & -f
                    f ^= ub
                    nxt |= adj[lowbit_index(ub)]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            if popcount(comp) > k - 1:
                small = False
                break
        if not small:
            return checked, idx
    return checked, -1


@_jit
def _uv_path_orders(adj, n, u, ends, out):
    """out[v] = bitmask of vertex counts of simple u-v paths."""
    size = np.int64(1) << n
    for mask in range(size):
        ends[mask] = 0
    for v in range(n):
        out[v] = 0
    ub = np.int64(1) << u
    ends[ub] = ub
    for mask in range(1, size):
        e = ends[mask]
        if e == 0 or not (mask & ub):
            continue
        pc = popcount(mask)
        while e:
            vb = e & -e
            e ^= vb
            v = lowbit_index(vb)
            out[v] |= np.int64(1) << pc
            nb = adj[v] & ~mask
            while nb:
                wb = nb & -nb
                nb ^= wb
                ends[mask | wb] |= wb


@_jit
def scan_findpath(codes, n, t, conclusion_k, start, stop):
    """Pairs u, v with a t-vertex u-v path but no (t+1)-vertex one; the
    complement must then contain P_{conclusion_k}. Returns
    (premise pairs, violations, first violating index or -1).
    """
    adj = np.empty(n, np.int64)
    cadj = np.empty(n, np.int64)
    ends = np.empty(np.int64(1) << n, np.int64)
    orders = np.empty(n, np.int64)
    pairs = 0
    bad = 0
    first = -1
    for idx in range(start, stop):
        decode(codes[idx], n, adj)
        complement_adj(adj, n, cadj)
        conclusion = has_path(cadj, n, conclusion_k, ends)
        for u in range(n):
            _uv_path_orders(adj, n, u, ends, orders)
            for v in range(u + 1, n):
                o = orders[v]
                if (o >> t) & 1 and not (o >> (t + 1)) & 1:
                    pairs += 1
                    if not conclusion:
                        bad += 1
                        if first < 0:
                            first = idx
    return pairs, bad, first
