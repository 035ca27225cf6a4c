"""Exact maximization of half-dependent set cardinality.

Two engines back ``solve_exact``:

* ``brute`` -- depth-first enumeration of all subsets with feasibility
  pruning, capped at 30 vertices.  Include-first order with strict
  improvement makes the returned witness the lexicographically smallest
  maximum selection; this is the oracle the branch-and-bound is tested
  against.

* ``bnb`` -- branch-and-bound over x_v in {0, 1} with constraint
  propagation (saturated selected vertices exclude their undecided
  neighbours, unaddable vertices are excluded eagerly), a surrogate
  row-sum bound, and an LP-based bound.  The LP relaxation is solved in
  floating point only to propose dual multipliers; the pruning bound is
  then evaluated from those multipliers in exact dyadic arithmetic
  (``dual_bound`` logic inlined over integers), so every pruning decision
  is certified no matter what the float solver returned.  The same exact
  data drives reduced-cost fixing.

For torus graphs with nothing pre-pinned, the search is split once at the
root by tile class: the subproblem for class k selects the representative
tile (0, 0, k) and discards classes below k entirely.  Every nonempty
selection can be translated so that its smallest occupied class covers the
representative, so the subproblem maxima cover the global maximum.

Incumbents are seeded by randomized greedy passes with a
remove-and-refill local search, by periodically tiling good selections of
divisor-size tori, and, for triangular-tessellation tori, by solving the
half-size Klein quotient and lifting the selection back (the torus
constraints are exactly the folded Klein ones, so the lift preserves
feasibility and density).  Seeds are re-validated before use.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from .classbounds import BoundReport
from .halfdom import (Selection, constraint_system, density, half_cap,
                      is_half_dependent)
from .quotient import (QuotientGraph, build_graph, build_klein_3_6,
                       build_torus, lift_klein_selection)
from .simplex import lp_solve

BRUTE_CAP = 30
_LP_SCALE = 1 << 20  # denominator of the dyadic dual multipliers


@dataclass
class OptResult:
    best_cardinality: int
    witness: Selection
    status: str  # "optimal" | "lower_bound_only"
    density: Fraction
    elapsed: float
    nodes: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _Timeout(Exception):
    pass


class _TargetReached(Exception):
    pass


def _neighbor_tables(graph: QuotientGraph):
    adj = [list(nbrs) for nbrs in graph.adjacency]
    caps = [half_cap(len(nbrs)) for nbrs in graph.adjacency]
    selfm = [sum(1 for w in nbrs if w == v) for v, nbrs in enumerate(graph.adjacency)]
    uniq = []
    for v, nbrs in enumerate(graph.adjacency):
        counts: dict[int, int] = {}
        for w in nbrs:
            counts[w] = counts.get(w, 0) + 1
        uniq.append(tuple(sorted(counts.items())))
    return adj, caps, selfm, uniq


def _can_add(v, cnt, selected, caps, selfm, uniq) -> bool:
    if cnt[v] + selfm[v] > caps[v]:
        return False
    for w, mult in uniq[v]:
        if w != v and selected[w] and cnt[w] + mult > caps[w]:
            return False
    return True


def _add(v, cnt, selected, adj) -> None:
    selected[v] = True
    for w in adj[v]:
        cnt[w] += 1


def _remove(v, cnt, selected, adj) -> None:
    selected[v] = False
    for w in adj[v]:
        cnt[w] -= 1


# ----------------------------------------------------------------------
# Greedy / local-search incumbents
# ----------------------------------------------------------------------

def _greedy(order, cnt, selected, adj, caps, selfm, uniq, blocked) -> None:
    for v in order:
        if not selected[v] and not blocked[v] and \
                _can_add(v, cnt, selected, caps, selfm, uniq):
            _add(v, cnt, selected, adj)


def _heuristic_ids(graph, blocked, rng, deadline, iters=3000) -> list[int]:
    """Best selection found by multi-start greedy plus remove-and-refill."""
    adj, caps, selfm, uniq = _neighbor_tables(graph)
    n = graph.num_vertices
    free = [v for v in range(n) if not blocked[v]]

    best: list[int] = []
    base_orders = [list(free), sorted(free, key=lambda v: (len(adj[v]), v))]
    for _ in range(6):
        order = list(free)
        rng.shuffle(order)
        base_orders.append(order)

    for order in base_orders:
        cnt = [0] * n
        selected = [False] * n
        _greedy(order, cnt, selected, adj, caps, selfm, uniq, blocked)
        ids = [v for v in free if selected[v]]
        if len(ids) > len(best):
            best = ids

    cnt = [0] * n
    selected = [False] * n
    for v in best:
        _add(v, cnt, selected, adj)
    current = list(best)
    for it in range(iters):
        if it % 128 == 0 and deadline is not None and time.monotonic() > deadline:
            break
        if not current:
            break
        k = 1 + rng.randrange(3)
        removed = rng.sample(current, min(k, len(current)))
        for v in removed:
            _remove(v, cnt, selected, adj)
        order = list(free)
        rng.shuffle(order)
        _greedy(order, cnt, selected, adj, caps, selfm, uniq, blocked)
        candidate = [v for v in free if selected[v]]
        if len(candidate) >= len(current):  # plateau moves accepted
            current = candidate
            if len(current) > len(best):
                best = list(current)
        else:
            for v in candidate:
                _remove(v, cnt, selected, adj)
            for v in current:
                _add(v, cnt, selected, adj)
    return sorted(best)


def _tile_torus_selection(small_ids, kind, sm, sn, m, n) -> list[int]:
    """Extend a T(kind, sm, sn) selection periodically to T(kind, m, n)."""
    small = build_torus(kind, sm, sn)
    size = small.cluster().cluster_size
    chosen = {(r.i, r.j, r.k) for r in (small.vertices[v] for v in small_ids)}
    out = []
    for i in range(m):
        for j in range(n):
            for k in range(1, size + 1):
                if (i % sm, j % sn, k) in chosen:
                    out.append((i * n + j) * size + (k - 1))
    return out


# ----------------------------------------------------------------------
# Brute-force oracle
# ----------------------------------------------------------------------

def _brute(graph, blocked, deadline, target_card=None):
    adj, caps, selfm, uniq = _neighbor_tables(graph)
    n = graph.num_vertices
    cnt = [0] * n
    selected = [False] * n
    best_ids: list[int] = []
    nodes = 0
    closed = True

    def dfs(v: int, chosen: int) -> None:
        nonlocal best_ids, nodes, closed
        nodes += 1
        if nodes % 4096 == 0 and deadline is not None and \
                time.monotonic() > deadline:
            raise _Timeout
        if chosen + (n - v) <= len(best_ids):
            return
        if v == n:
            best_ids = [u for u in range(n) if selected[u]]
            if target_card is not None and len(best_ids) >= target_card:
                raise _TargetReached
            return
        if not blocked[v] and _can_add(v, cnt, selected, caps, selfm, uniq):
            _add(v, cnt, selected, adj)
            dfs(v + 1, chosen + 1)
            _remove(v, cnt, selected, adj)
        dfs(v + 1, chosen)

    try:
        dfs(0, 0)
    except (_Timeout, _TargetReached):
        closed = False
    return len(best_ids), best_ids, nodes, closed


# ----------------------------------------------------------------------
# Branch and bound
# ----------------------------------------------------------------------

_UNDEC, _SEL, _EXC = 0, 1, 2


class _BnB:
    def __init__(self, graph: QuotientGraph, deadline, target_card, use_lp, rng):
        self.adj, self.caps, self.selfm, self.uniq = _neighbor_tables(graph)
        self.n = graph.num_vertices
        self.deg = [len(a) for a in self.adj]
        self.deadline = deadline
        self.target = target_card
        self.use_lp = use_lp
        self.rng = rng
        self.status = [_UNDEC] * self.n
        self.cnt = [0] * self.n
        self.degU = [len(a) for a in self.adj]
        self.n_sel = 0
        self.trail: list[tuple[int, int]] = []
        self.best = 0
        self.best_ids: list[int] = []
        self.nodes = 0
        self.ticker = 0

    # -- state changes ---------------------------------------------------
    def _exclude(self, v: int) -> None:
        self.status[v] = _EXC
        self.trail.append((v, _EXC))
        for w in self.adj[v]:
            self.degU[w] -= 1

    def _select(self, v: int) -> bool:
        """Select v, propagate forced exclusions; False on conflict."""
        status, cnt, caps = self.status, self.cnt, self.caps
        status[v] = _SEL
        self.n_sel += 1
        self.trail.append((v, _SEL))
        for w in self.adj[v]:
            cnt[w] += 1
            self.degU[w] -= 1
        if cnt[v] > caps[v]:
            return False
        forced: list[int] = []
        touched = [v] + [w for w, _ in self.uniq[v] if w != v]
        for w in touched:
            if status[w] == _SEL:
                slack = caps[w] - cnt[w]
                if slack < 0:
                    return False
                for u, mult in self.uniq[w]:
                    if u != w and status[u] == _UNDEC and mult > slack:
                        forced.append(u)
            elif status[w] == _UNDEC and cnt[w] + self.selfm[w] > caps[w]:
                forced.append(w)
        for u in forced:
            if self.status[u] == _UNDEC:
                self._exclude(u)
        return True

    def _rewind(self, mark: int) -> None:
        while len(self.trail) > mark:
            v, what = self.trail.pop()
            self.status[v] = _UNDEC
            if what == _SEL:
                self.n_sel -= 1
                for w in self.adj[v]:
                    self.cnt[w] -= 1
                    self.degU[w] += 1
            else:
                for w in self.adj[v]:
                    self.degU[w] += 1

    # -- bounds ------------------------------------------------------------
    def _surrogate(self, undecided) -> int:
        """Greedy fill of the summed residual rows; valid upper bound."""
        budget = 0
        avals = []
        for v in undecided:
            budget += self.deg[v] - self.cnt[v]
            avals.append(self.deg[v] - self.caps[v] + self.degU[v])
        avals.sort()
        take = 0
        for a in avals:
            if a <= 0:
                take += 1
                continue
            if budget < a:
                break
            budget -= a
            take += 1
        return take

    def _lp_bound(self, undecided):
        """Exactly certified LP bound plus float primal for branching.

        Returns (bound_over_undecided, xfrac, fix0, fix1); the bound and the
        fixing lists come from integer arithmetic on dyadic duals, so they
        stay valid even if the float LP is inaccurate.
        """
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _Timeout
        col = {v: idx for idx, v in enumerate(undecided)}
        ncols = len(undecided)
        rows = []
        rhs = []
        for v in undecided:
            coeffs = [0] * ncols
            coeffs[col[v]] = self.deg[v] - self.caps[v]
            for w, mult in self.uniq[v]:
                if self.status[w] == _UNDEC:
                    coeffs[col[w]] += mult
            rows.append(coeffs)
            rhs.append(self.deg[v] - self.cnt[v])
        for s in range(self.n):
            if self.status[s] == _SEL and self.degU[s] > 0:
                coeffs = [0] * ncols
                for w, mult in self.uniq[s]:
                    if w != s and self.status[w] == _UNDEC:
                        coeffs[col[w]] = mult
                rows.append(coeffs)
                rhs.append(self.caps[s] - self.cnt[s])
        amat = np.array(rows, dtype=np.int64)
        bvec = np.array(rhs, dtype=np.float64)
        res = linprog(c=-np.ones(ncols), A_ub=amat.astype(np.float64),
                      b_ub=bvec, bounds=(0.0, 1.0), method="highs")
        if res.status != 0 or res.ineqlin is None:
            return None, None, (), ()
        dscale = _LP_SCALE
        raw = np.nan_to_num(-res.ineqlin.marginals, nan=0.0,
                            posinf=0.0, neginf=0.0)
        # any nonnegative multipliers give a valid bound; clip to keep the
        # integer arithmetic comfortably inside int64
        pvec = np.clip(np.rint(raw * dscale), 0, 1 << 34).astype(np.int64)
        qvec = pvec @ amat
        rint = np.array(rhs, dtype=np.int64)
        terms = np.maximum(0, dscale - qvec)
        num = int(pvec @ rint) + int(terms.sum())
        bound = num // dscale
        gap_card = self.best - self.n_sel  # improving solutions need > gap_card
        fix0 = []
        fix1 = []
        for idx, v in enumerate(undecided):
            force1 = num + min(0, dscale - int(qvec[idx]))
            if force1 // dscale <= gap_card:
                fix0.append(v)
                continue
            force0 = num - int(terms[idx])
            if force0 // dscale <= gap_card:
                fix1.append(v)
        return bound, res.x, fix0, fix1

    # -- search ------------------------------------------------------------
    def _record_incumbent(self) -> None:
        if self.n_sel > self.best:
            self.best = self.n_sel
            self.best_ids = [v for v in range(self.n) if self.status[v] == _SEL]
            if self.target is not None and self.best >= self.target:
                raise _TargetReached
        elif self.n_sel == self.best and self.best:
            ids = [v for v in range(self.n) if self.status[v] == _SEL]
            if ids < self.best_ids:
                self.best_ids = ids

    def _tick(self) -> None:
        self.ticker += 1
        if self.ticker % 16 == 0 and self.deadline is not None and \
                time.monotonic() > self.deadline:
            raise _Timeout

    def search(self, inherited: int | None = None, depth: int = 0) -> None:
        """DFS node; `inherited` is a still-valid total-cardinality bound
        from an ancestor LP (fixing variables only shrinks the feasible
        set, so ancestor bounds remain valid below)."""
        self.nodes += 1
        self._tick()
        self._record_incumbent()
        if inherited is not None and inherited <= self.best:
            return
        undecided = [v for v in range(self.n) if self.status[v] == _UNDEC]
        if not undecided:
            return
        gap = self.best - self.n_sel
        if len(undecided) <= gap:
            return
        if self._surrogate(undecided) <= gap:
            return
        xfrac = None
        if self.use_lp and len(undecided) >= 14:
            bound, xfrac, fix0, fix1 = self._lp_bound(undecided)
            if bound is not None:
                total = self.n_sel + bound
                if bound <= gap:
                    return
                inherited = total if inherited is None else min(inherited, total)
            if fix0 or fix1:
                mark = len(self.trail)
                ok = True
                for v in fix0:
                    if self.status[v] == _UNDEC:
                        self._exclude(v)
                for v in fix1:
                    if self.status[v] == _UNDEC and not self._select(v):
                        ok = False
                        break
                if ok:
                    self.search(inherited, depth + 1)
                self._rewind(mark)
                return

        v = self._branch_vertex(undecided, xfrac)
        mark = len(self.trail)
        if self._select(v):
            self.search(inherited, depth + 1)
        self._rewind(mark)
        mark = len(self.trail)
        self._exclude(v)
        self.search(inherited, depth + 1)
        self._rewind(mark)

    def _branch_vertex(self, undecided, xfrac) -> int:
        """Prefer fractional LP vertices, scored by value times degree."""
        if xfrac is not None:
            best_v, best_key = undecided[0], None
            for idx, v in enumerate(undecided):
                x = float(xfrac[idx])
                key = (min(x, 1.0 - x) > 1e-6, x * self.deg[v], -v)
                if best_key is None or key > best_key:
                    best_key, best_v = key, v
            return best_v
        return max(undecided, key=lambda v: (self.degU[v], self.deg[v], -v))


def _run_bnb(graph, blocked, initial_ids, deadline, target_card,
             use_lp, rng, class_split):
    """Shared-incumbent branch and bound, optionally split by tile class."""
    engine = _BnB(graph, deadline, target_card, use_lp, rng)
    for v in range(engine.n):
        if blocked[v]:
            engine._exclude(v)  # permanent: never rewound past here
    adjtables = engine.adj, engine.caps, engine.selfm, engine.uniq
    # validate the seed rather than trust it
    if initial_ids:
        adj, caps, selfm, uniq = adjtables
        cnt = [0] * engine.n
        selected = [False] * engine.n
        ok = True
        for v in sorted(initial_ids):
            if blocked[v] or not _can_add(v, cnt, selected, caps, selfm, uniq):
                ok = False
                break
            _add(v, cnt, selected, adj)
        if ok:
            engine.best = len(initial_ids)
            engine.best_ids = sorted(initial_ids)

    closed = True
    try:
        if engine.target is not None and engine.best >= engine.target:
            raise _TargetReached
        for pre_exclude, pre_select in class_split:
            mark = len(engine.trail)
            feasible = True
            for v in pre_exclude:
                if engine.status[v] == _UNDEC:
                    engine._exclude(v)
            for v in pre_select:
                if engine.status[v] != _UNDEC or not engine._select(v):
                    feasible = False
                    break
            if feasible:
                engine.search()
            engine._rewind(mark)
    except _Timeout:
        closed = False
    except _TargetReached:
        closed = False
    return engine.best, engine.best_ids, engine.nodes, closed


def _class_split_plan(graph: QuotientGraph, blocked) -> list[tuple[list[int], list[int]]]:
    """Root split by tile class for torus graphs; [([], [])] = no split.

    Subproblem k selects representative (0, 0, k) and empties classes < k;
    translations of the torus map each class onto itself, so any nonempty
    optimum translates into one of the subproblems.
    """
    if graph.quotient != "torus" or any(blocked):
        return [([], [])]
    size = graph.cluster().cluster_size
    ids_of_class = [[] for _ in range(size)]
    for rec in graph.vertices:
        ids_of_class[rec.k - 1].append(rec.id)
    plans = []
    for k in range(size):
        pre_exclude = [v for c in range(k) for v in ids_of_class[c]]
        rep = (0 * graph.n + 0) * size + k
        plans.append((pre_exclude, [rep]))
    return plans


# ----------------------------------------------------------------------
# Public entry points
# ----------------------------------------------------------------------

def _seed_candidates(graph, blocked, rng, deadline, target_card, use_lp):
    """Heuristic incumbents: greedy/local search, divisor tilings, Klein lift.

    Stops early once a candidate reaches the target cardinality.
    """
    cands = [_heuristic_ids(graph, blocked, rng, deadline)]

    def satisfied() -> bool:
        return target_card is not None and \
            max(len(c) for c in cands) >= target_card

    if graph.quotient == "torus" and not any(blocked) and not satisfied():
        m, n = graph.m, graph.n
        divs_m = [d for d in range(1, m + 1) if m % d == 0]
        divs_n = [d for d in range(1, n + 1) if n % d == 0]
        for sm in divs_m:
            for sn in divs_n:
                if (sm, sn) == (m, n) or satisfied():
                    continue
                small = build_torus(graph.kind, sm, sn)
                ids = _heuristic_ids(small, [False] * small.num_vertices,
                                     rng, deadline, iters=800)
                cands.append(_tile_torus_selection(ids, graph.kind, sm, sn, m, n))
        if graph.kind == "3.3.3.3.3.3" and m == n and n >= 3 and not satisfied():
            klein = build_klein_3_6(n)
            sub_target = None
            if target_card is not None:
                sub_target = Fraction(-(-target_card // 2), klein.num_vertices)
            sub = solve_exact(klein, method="bnb", target=sub_target,
                              deterministic=True, use_lp=use_lp,
                              _seeding=False,
                              time_budget_override=_slice(deadline, 0.6))
            cands.append(lift_klein_selection(klein, list(sub.witness.ids()), graph))
    return max(cands, key=len)


def _slice(deadline, frac):
    if deadline is None:
        return 60.0  # keep untimed seeding sub-solves bounded
    return max(0.5, (deadline - time.monotonic()) * frac)


def solve_exact(graph: QuotientGraph, method: str = "auto",
                time_limit: float | None = None, deterministic: bool = True,
                target: Fraction | None = None, forced_zero=(),
                use_lp: bool = True, _seeding: bool = True,
                time_budget_override: float | None = None) -> OptResult:
    """Maximum half-dependent set of a quotient graph, exactly.

    method        -- "auto" (brute for small graphs), "brute" (<= 30
                     vertices) or "bnb".
    time_limit    -- wall-clock seconds; on expiry the incumbent is
                     returned with status "lower_bound_only".
    deterministic -- seed all randomized heuristics; repeated runs return
                     identical witnesses, and cardinality ties break toward
                     the lexicographically smallest witness seen.
    target        -- density; stop as soon as a feasible selection of at
                     least this density is known (status lower_bound_only).
    forced_zero   -- vertex ids pinned out of the selection.
    """
    t0 = time.monotonic()
    n = graph.num_vertices
    blocked = [False] * n
    for v in forced_zero:
        if not 0 <= v < n:
            raise ValueError(f"forced-zero id {v} out of range")
        blocked[v] = True

    if method not in ("auto", "brute", "bnb"):
        raise ValueError(f"unknown method {method!r}")
    if method == "brute" and n > BRUTE_CAP:
        raise ValueError(f"brute method capped at {BRUTE_CAP} vertices, got {n}")
    if method == "auto":
        method = "brute" if n <= 22 else "bnb"

    limit = time_budget_override if time_budget_override is not None else time_limit
    deadline = None if limit is None else t0 + limit
    target_card = None
    if target is not None:
        target_card = math.ceil(Fraction(target) * n)

    if method == "brute":
        best, ids, nodes, closed = _brute(graph, blocked, deadline, target_card)
        status = "optimal" if closed else "lower_bound_only"
    else:
        rng = random.Random(12345 if deterministic else time.time_ns())
        seed_ids: list[int] = []
        if _seeding:
            seed_ids = _seed_candidates(graph, blocked, rng,
                                        _deadline_fraction(t0, limit, 0.25),
                                        target_card, use_lp)
        plans = _class_split_plan(graph, blocked)
        best, ids, nodes, closed = _run_bnb(
            graph, blocked, seed_ids, deadline, target_card, use_lp, rng, plans)
        status = "optimal" if closed else "lower_bound_only"

    witness = Selection.from_ids(graph, ids)
    if not is_half_dependent(graph, witness):
        raise AssertionError("internal error: infeasible witness")
    if len(ids) != best:
        raise AssertionError("internal error: cardinality/witness mismatch")
    return OptResult(best_cardinality=best, witness=witness, status=status,
                     density=density(graph, witness),
                     elapsed=time.monotonic() - t0, nodes=nodes)


def _deadline_fraction(t0, limit, frac):
    if limit is None:
        return None
    return t0 + limit * frac


def pinned_density_bound(graph: QuotientGraph, zero_set,
                         method: str = "auto",
                         time_limit: float | None = None) -> BoundReport:
    """Bound from maximizing with zero_set forced off: best / (|V| - pins)."""
    pins = sorted(set(zero_set))
    for v in pins:
        if not 0 <= v < graph.num_vertices:
            raise ValueError(f"pinned id {v} out of range")
    free = graph.num_vertices - len(pins)
    if free == 0:
        raise ValueError("every vertex is pinned; the bound is undefined")
    res = solve_exact(graph, method=method, time_limit=time_limit,
                      forced_zero=pins)
    notes = ()
    if res.status != "optimal":
        notes = ("inner solve hit its budget; value is a lower bound "
                 "and the quotient is not a certified upper bound",)
    return BoundReport(kind=graph.kind,
                       value=Fraction(res.best_cardinality, free),
                       provenance="pinned",
                       certificate={
                           "cardinality": res.best_cardinality,
                           "free_vertices": free,
                           "pinned": len(pins),
                           "status": res.status,
                           "witness_ids": res.witness.ids(),
                       },
                       notes=notes)


def weighted_density_bound(graph: QuotientGraph, weights) -> BoundReport:
    """LP bound max w.x / sum(w) over the relaxed constraint system."""
    w = [Fraction(x) for x in weights]
    if len(w) != graph.num_vertices:
        raise ValueError("weight vector length does not match vertex count")
    if any(x < 0 for x in w):
        raise ValueError("weights must be nonnegative")
    total = sum(w)
    if total == 0:
        raise ValueError("weights must not be all zero")
    sol = lp_solve(constraint_system(graph), w)
    return BoundReport(kind=graph.kind, value=sol.value / total,
                       provenance="weighted-lp",
                       certificate={"lp_value": sol.value,
                                    "weight_total": total},
                       notes=())


@dataclass(frozen=True)
class TableCell:
    size: tuple[int, int]
    cardinality: int
    vertices: int
    density: Fraction
    status: str
    elapsed: float


def density_table(kind: str, quotient: str, sizes, time_limit=None,
                  method: str = "auto", target=None) -> list[TableCell]:
    """Run solve_exact per cell; never reports a lower bound as optimal.

    sizes is an iterable of n (square grids) or (m, n) pairs; target, when
    given, maps (m, n) -> density goal for early stopping on that cell.
    """
    cells = []
    for size in sizes:
        m, n = (size, size) if isinstance(size, int) else size
        graph = build_graph(kind, m, n, quotient)
        goal = None
        if target is not None:
            goal = target.get((m, n)) if hasattr(target, "get") else target
        res = solve_exact(graph, method=method, time_limit=time_limit,
                          target=goal)
        cells.append(TableCell((m, n), res.best_cardinality,
                               graph.num_vertices, res.density, res.status,
                               res.elapsed))
    return cells
