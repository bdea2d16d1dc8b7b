"""Ordinary and elementary flat search.

Contains the two-point-line witness finder, the ordinary/elementary
predicates, brute-force oracles over flat slices, the constructive
recursion that finds an ordinary rank-k flat whenever the rank is at
least 4(k-1), the elementary-flat induction on top of it, and the
randomized conjecture-counterexample driver.

Every step of the constructive recursion that the underlying argument
takes for granted is re-checked at runtime; a failed check raises
InternalInconsistencyError with the construction trace attached, since
for representable input it can only mean a toolkit bug.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .catalog import random_instance
from .errors import (
    BudgetExceededError,
    InternalInconsistencyError,
    UsageError,
)
from .matroid import DEFAULT_CLOSURE_BUDGET, Flat, Matroid, Representation


@dataclass(frozen=True)
class OrdinaryWitness:
    """Decomposition of a rank-k flat as point + rank-(k-1) flat."""

    flat: Flat
    point: Flat
    complement: Flat


@dataclass
class TraceLevel:
    """State of one recursion level of the constructive search."""

    k: int
    contracted_flat: Flat = None
    f1: Flat = None
    f2: Flat = None
    x: str = None
    y: str = None
    z: str = None
    w: str = None
    f_prime: Flat = None
    output: Flat = None


@dataclass
class ConstructionTrace:
    levels: list = field(default_factory=list)

    def to_json_dict(self):
        out = []
        for lv in self.levels:
            out.append({
                "k": lv.k,
                "contracted_flat": _flat_elems(lv.contracted_flat),
                "f1": _flat_elems(lv.f1),
                "f2": _flat_elems(lv.f2),
                "x": lv.x, "y": lv.y, "z": lv.z, "w": lv.w,
                "f_prime": _flat_elems(lv.f_prime),
                "output": _flat_elems(lv.output),
            })
        return {"levels": out}


def _flat_elems(fl):
    return list(fl.elements) if fl is not None else None


@dataclass
class SearchStats:
    rank_calls: int = 0
    flats_enumerated: int = 0
    ms: float = 0.0


@dataclass
class SearchReport:
    mode: str        # "verify" | "counterexample"
    seed: int
    conductor: int
    rank: int
    k: int
    outcome: str     # "witness found" | "exhausted" | "budget exceeded"
    witness: object = None   # OrdinaryWitness | Flat | None
    stats: SearchStats = field(default_factory=SearchStats)
    instance: Representation = None  # set for counterexample reports

    def to_json_dict(self, deterministic: bool = False) -> dict:
        w = self.witness
        if w is None:
            wd = None
        elif isinstance(w, OrdinaryWitness):
            wd = {"flat": list(w.flat.elements),
                  "point": list(w.point.elements),
                  "complement": list(w.complement.elements)}
        else:
            wd = {"flat": list(w.elements), "point": None, "complement": None}
        return {
            "mode": self.mode,
            "seed": self.seed,
            "conductor": self.conductor,
            "rank": self.rank,
            "k": self.k,
            "outcome": self.outcome,
            "witness": wd,
            "stats": {
                "rank_calls": self.stats.rank_calls,
                "flats_enumerated": self.stats.flats_enumerated,
                "ms": 0.0 if deterministic else round(self.stats.ms, 3),
            },
        }


def _require(cond, message, trace=None):
    if not cond:
        raise InternalInconsistencyError(message, trace=trace)


# ---------------------------------------------------------------------------
# predicates and witnesses

def find_two_point_line(M: Matroid):
    """Lexicographically least rank-2 flat with exactly two elements, or
    None.  Rank >= 4 without one contradicts the complex-representable
    guarantee and raises."""
    if not M.is_simple():
        raise UsageError("find_two_point_line requires a simple matroid")
    g = M.ground
    for i in range(len(g)):
        for j in range(i + 1, len(g)):
            cl = M.closure([g[i], g[j]])
            if len(cl.elements) == 2:
                return cl
    if M.rank() >= 4:
        raise InternalInconsistencyError(
            "rank >= 4 with no two-point line: impossible for matrix-defined "
            "input, so some rank computation is wrong")
    return None


def is_ordinary(M: Matroid, F: Flat):
    """Witness that F is a point plus a rank-(k-1) flat, or None.

    Tries each parallel class P inside F in canonical order; F minus P
    must be a flat of rank k-1.
    """
    if not M.is_loopless():
        raise UsageError("is_ordinary requires a loopless matroid")
    if not M.is_flat(F.elements):
        raise UsageError("is_ordinary expects a flat")
    k = F.rank
    if k < 1:
        raise UsageError("ordinary flats have rank >= 1")
    for P in M.parallel_classes(within=F.elements):
        rest = [e for e in F.elements if e not in set(P)]
        if M.rank(rest) != k - 1:
            continue
        if M.is_flat(rest):
            return OrdinaryWitness(flat=F, point=Flat(tuple(P), 1),
                                   complement=Flat(tuple(rest), k - 1))
    return None


def is_elementary(M: Matroid, F: Flat) -> bool:
    """True iff the rank-k flat F contains exactly k points."""
    return len(M.parallel_classes(within=F.elements)) == F.rank


# ---------------------------------------------------------------------------
# brute-force oracles

def find_ordinary_flat_brute(M: Matroid, k: int,
                             budget: int = DEFAULT_CLOSURE_BUDGET,
                             counter=None):
    """First ordinary flat in the canonical rank-k slice, with witness."""
    if not M.is_simple():
        raise UsageError("brute search requires a simple matroid")
    if not (1 <= k <= M.rank()):
        raise UsageError(f"k={k} out of range 1..{M.rank()}")
    for fl in M.flats_of_rank(k, budget=budget, counter=counter):
        w = is_ordinary(M, fl)
        if w is not None:
            return fl, w
    return None


def find_elementary_flat_brute(M: Matroid, k: int,
                               budget: int = DEFAULT_CLOSURE_BUDGET,
                               counter=None):
    """First elementary flat in the canonical rank-k slice, or None."""
    if not M.is_simple():
        raise UsageError("brute search requires a simple matroid")
    if not (1 <= k <= M.rank()):
        raise UsageError(f"k={k} out of range 1..{M.rank()}")
    for fl in M.flats_of_rank(k, budget=budget, counter=counter):
        if is_elementary(M, fl):
            return fl
    return None


# ---------------------------------------------------------------------------
# the constructive search

def find_ordinary_flat_constructive(M: Matroid, k: int,
                                    strategy: str = "enumerate"):
    """Find an ordinary rank-k flat of a simple matroid with rank at
    least 4(k-1), returning (flat, witness, trace).

    Base case k=2 is the two-point-line guarantee at rank >= 4; the
    recursive step restricts to the union of two flats over a common
    rank-4(k-2) flat, contracts a two-point line, recurses at k-1, and
    reassembles an ordinary flat from the lifted witness.
    """
    if not M.is_simple():
        raise UsageError("constructive search requires a simple matroid")
    if k < 2:
        raise UsageError("constructive search requires k >= 2")
    if M.rank() < 4 * (k - 1):
        raise UsageError(
            f"rank {M.rank()} below 4(k-1) = {4 * (k - 1)}; "
            "only the brute oracle handles that range")
    if strategy not in ("enumerate", "greedy"):
        raise UsageError(f"unknown strategy {strategy!r}")
    trace = ConstructionTrace()
    flat, witness = _constructive(M, k, strategy, trace)
    return flat, witness, trace


def _constructive(M, k, strategy, trace):
    if k == 2:
        line = find_two_point_line(M)
        _require(line is not None,
                 "two-point line missing at rank >= 4", trace)
        e1, e2 = line.elements
        witness = OrdinaryWitness(flat=line, point=Flat((e1,), 1),
                                  complement=Flat((e2,), 1))
        trace.levels.append(TraceLevel(k=2, output=line))
        return line, witness

    t = 4 * (k - 2)
    # greedy basis prefix in ground order spans the contraction flat
    basis = []
    for e in M.ground:
        if M.rank(basis + [e]) == len(basis) + 1:
            basis.append(e)
            if len(basis) == t:
                break
    _require(len(basis) == t, "could not grow a basis prefix", trace)
    F = M.closure(basis)
    MF, cls_map_f = M.contract(F).simplify()
    line = find_two_point_line(MF)  # rank >= 4 there, so guaranteed
    _require(line is not None, "no two-point line after contraction", trace)
    a, b = line.elements

    F1 = M.closure(set(F.elements) | {a})
    F2 = M.closure(set(F.elements) | {b})
    _require(F1.rank == t + 1 and F2.rank == t + 1,
             "flats over the contraction line have wrong rank", trace)
    _require(set(F1.elements) & set(F2.elements) == set(F.elements),
             "the two flats must intersect exactly in the base flat", trace)
    union = set(F1.elements) | set(F2.elements)
    fu = M.closure(union)
    _require(set(fu.elements) == union and fu.rank == t + 2,
             "union of the two flats must be a flat of rank t+2", trace)

    N = M.restrict(union)
    x, y = a, b
    L = N.closure([x, y])
    _require(set(L.elements) == {x, y} and L.rank == 2,
             "{x,y} must be a two-point line in the restriction", trace)

    N2 = N.contract(L)
    N2s, cls_map = N2.simplify()
    _require(N2s.rank() == t, "contracted restriction has wrong rank", trace)
    sub_flat, sub_witness = _constructive(N2s, k - 1, strategy, trace)

    # lift through the parallel-class quotient back to the contraction
    p_reps = set(sub_witness.point.elements)
    h_reps = set(sub_witness.complement.elements)
    P = {e for e in N2.ground if cls_map[e] in p_reps}
    H = {e for e in N2.ground if cls_map[e] in h_reps}

    K = N.closure(H | {x, y})
    _require(set(K.elements) == H | {x, y} and K.rank == k,
             "H with the line must be a rank-k flat", trace)
    pxy = N.closure(P | {x, y})
    _require(set(pxy.elements) == P | {x, y} and pxy.rank == 3,
             "P with the line must be a plane", trace)
    hpxy = N.closure(H | P | {x, y})
    _require(set(hpxy.elements) == H | P | {x, y} and hpxy.rank == k + 1,
             "H, P and the line must span a rank-(k+1) flat", trace)

    # claim-1 case split: prefer z outside the base flat
    f_set = set(F.elements)
    ordered_p = N._order(P)
    zw = None
    outside = [e for e in ordered_p if e not in f_set]
    if outside:
        for z in outside:
            for w in (y, x):
                if len(N.closure([z, w]).elements) == 2:
                    zw = (z, w)
                    break
            if zw:
                break
    else:
        z = ordered_p[0]
        if len(N.closure([z, x]).elements) == 2:
            zw = (z, x)
    _require(zw is not None, "claim-1 two-point line not found", trace)
    z, w = zw
    if w == y:
        x, y = y, x  # so that {x,z} is the two-point line

    f_prime = _choose_f_prime(N, K, x, y, k, strategy)
    _require(f_prime is not None,
             "no rank-(k-1) flat in K containing x but not y", trace)

    out_set = set(f_prime.elements) | {z}
    out = N.closure(out_set)
    _require(set(out.elements) == out_set and out.rank == k,
             "the assembled set must already be a rank-k flat", trace)
    witness = OrdinaryWitness(flat=out, point=Flat((z,), 1),
                              complement=f_prime)
    _require(is_ordinary(N, out) is not None,
             "assembled flat fails the ordinary recheck", trace)
    trace.levels.append(TraceLevel(
        k=k, contracted_flat=F, f1=F1, f2=F2, x=x, y=y, z=z, w=w,
        f_prime=f_prime, output=out))
    return out, witness


def _choose_f_prime(N, K, x, y, k, strategy):
    """A rank-(k-1) flat inside the rank-k flat K containing x but not y.

    "enumerate" scans the full (small) slice and takes the canonically
    least hit; "greedy" grows an independent set from x through K and is
    kept as a cross-check."""
    NK = N.restrict(K.elements)
    if strategy == "enumerate":
        for fl in NK.flats_of_rank(k - 1):
            if x in fl.elements and y not in fl.elements:
                return fl
        return None
    pool = [e for e in NK.ground if e not in (x, y)]

    def grow(start, chosen):
        if len(chosen) == k - 1:
            fl = NK.closure(chosen)
            return fl if y not in fl.elements else None
        for i in range(start, len(pool)):
            e = pool[i]
            if NK.rank(chosen + [e]) == len(chosen) + 1:
                got = grow(i + 1, chosen + [e])
                if got is not None:
                    return got
        return None

    return grow(0, [x])


# ---------------------------------------------------------------------------
# elementary flats

def find_elementary_flat(M: Matroid, k: int,
                         budget: int = DEFAULT_CLOSURE_BUDGET):
    """An elementary rank-k flat, or None.

    With rank at least 4^(k-1) the constructive route always succeeds:
    find an ordinary rank-(4^(k-2)+1) flat, recurse into its rank-4^(k-2)
    complement, and extend the elementary flat found there by the point.
    Below that rank, fall back to brute enumeration of the slice.
    """
    if not M.is_simple():
        raise UsageError("find_elementary_flat requires a simple matroid")
    if k < 1:
        raise UsageError("k must be at least 1")
    if k == 1:
        if not M.ground:
            return None
        return M.closure([M.ground[0]])
    if M.rank() >= 4 ** (k - 1):
        _, witness, _ = find_ordinary_flat_constructive(M, 4 ** (k - 2) + 1)
        sub = find_elementary_flat(M.restrict(witness.complement.elements),
                                   k - 1, budget=budget)
        _require(sub is not None, "elementary recursion came back empty")
        union = set(sub.elements) | set(witness.point.elements)
        out = M.closure(union)
        _require(set(out.elements) == union and out.rank == k,
                 "extended elementary candidate is not a flat of rank k")
        _require(is_elementary(M, out),
                 "extended candidate is not elementary")
        return out
    if k > M.rank():
        return None
    return find_elementary_flat_brute(M, k, budget=budget)


# ---------------------------------------------------------------------------
# conjecture search

CONJECTURE_RANK = {1: lambda k: k + 2, 2: lambda k: 3 * (k - 1) + 1}


def conjecture_instances(conjecture: int, k: int, trials: int, seed: int,
                         conductor: int = 1, cols=None, bound: int = 10):
    """Seeded stream of (trial seed, Representation) at exactly the rank
    the conjecture demands."""
    rank = CONJECTURE_RANK[conjecture](k)
    lo, hi = cols if cols else (rank + 2, rank + 4)
    for i in range(trials):
        s = seed * 1000003 + i
        m = lo + random.Random(s).randint(0, hi - lo)
        yield s, random_instance(rank, m, conductor, seed=s, bound=bound)


def search_conjecture_counterexample(instances, conjecture: int, k: int,
                                     budget: int = DEFAULT_CLOSURE_BUDGET):
    """Run the matching brute oracle over a stream of (seed, rep) pairs.

    Returns the report of the first counterexample (an instance whose
    flat slice is exhausted without a witness), a budget-exceeded report,
    or an aggregate verify-pass report.
    """
    if conjecture not in (1, 2):
        raise UsageError("conjecture must be 1 or 2")
    if k < 2:
        raise UsageError("conjectures are stated for k >= 2")
    need = CONJECTURE_RANK[conjecture](k)
    total = SearchStats()
    t0 = time.perf_counter()
    base_seed = None
    conductor = None
    for seed, rep in instances:
        if base_seed is None:
            base_seed = seed
            conductor = rep.conductor
        M = Matroid(rep)
        if M.rank() != need or not M.is_simple():
            raise UsageError(
                f"generator produced rank-{M.rank()} instance; conjecture "
                f"{conjecture} at k={k} needs simple rank {need}")
        counter = [0]
        before = M.rank_calls
        try:
            if conjecture == 1:
                got = find_ordinary_flat_brute(M, k, budget=budget,
                                               counter=counter)
                witness = got[1] if got else None
            else:
                witness = find_elementary_flat_brute(M, k, budget=budget,
                                                     counter=counter)
        except BudgetExceededError:
            total.rank_calls += M.rank_calls - before
            total.flats_enumerated += counter[0]
            total.ms = (time.perf_counter() - t0) * 1000
            return SearchReport(
                mode="verify", seed=seed, conductor=rep.conductor,
                rank=need, k=k, outcome="budget exceeded", stats=total,
                instance=rep)
        total.rank_calls += M.rank_calls - before
        total.flats_enumerated += counter[0]
        if witness is None:
            total.ms = (time.perf_counter() - t0) * 1000
            return SearchReport(
                mode="counterexample", seed=seed, conductor=rep.conductor,
                rank=need, k=k, outcome="exhausted", stats=total,
                instance=rep)
    total.ms = (time.perf_counter() - t0) * 1000
    return SearchReport(
        mode="verify", seed=base_seed if base_seed is not None else 0,
        conductor=conductor if conductor is not None else 1,
        rank=need, k=k, outcome="witness found", stats=total)
