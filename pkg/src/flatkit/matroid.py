"""Matroids from exact representation matrices.

A matroid is defined by a labeled matrix over Q(zeta_n); rank is exact
column rank computed by pivoting Gaussian elimination over the field.
Minors (restriction, contraction of flats) share the base matroid's rank
cache through the contraction rank formula instead of materializing
projected matrices.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, format_scalar, parse_scalar, zero
from .errors import (
    BudgetExceededError,
    ConductorMismatchError,
    ContractNonFlatError,
    MatrixParseError,
    UsageError,
)

DEFAULT_CLOSURE_BUDGET = 10**7


@dataclass(frozen=True)
class Representation:
    """A d x m matrix over Q(zeta_n) with distinct column labels."""

    conductor: int
    entries: tuple[tuple[CyclotomicNumber, ...], ...]  # row-major, d rows
    labels: tuple[str, ...]

    def __post_init__(self):
        for row in self.entries:
            if len(row) != len(self.labels):
                raise UsageError("row length does not match label count")
            for x in row:
                if x.conductor != self.conductor:
                    raise ConductorMismatchError(
                        "entry conductor differs from declared conductor")
        if len(set(self.labels)) != len(self.labels):
            raise UsageError("labels must be unique")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def columns(self) -> int:
        return len(self.labels)

    def column(self, j: int) -> tuple[CyclotomicNumber, ...]:
        return tuple(row[j] for row in self.entries)


def representation_from_rows(rows, conductor: int, labels=None) -> Representation:
    """Build a Representation from rows of ints/Fractions/CyclotomicNumbers."""
    ent = []
    for row in rows:
        out = []
        for x in row:
            if not isinstance(x, CyclotomicNumber):
                x = CyclotomicNumber.from_rational(Fraction(x), conductor)
            out.append(x)
        ent.append(tuple(out))
    m = len(ent[0]) if ent else 0
    if labels is None:
        labels = tuple(f"e{i + 1}" for i in range(m))
    return Representation(conductor, tuple(ent), tuple(labels))


def relabel(rep: Representation, labels) -> Representation:
    labels = tuple(labels)
    if len(labels) != rep.columns:
        raise UsageError("wrong number of labels")
    return Representation(rep.conductor, rep.entries, labels)


def prefix_labels(rep: Representation, prefix: str) -> Representation:
    return relabel(rep, tuple(prefix + lbl for lbl in rep.labels))


def direct_sum(a: Representation, b: Representation) -> Representation:
    """Block-diagonal sum; conductors must already agree (lift with
    cyclo embedding first if needed) and labels must be disjoint."""
    if a.conductor != b.conductor:
        raise ConductorMismatchError(
            f"direct sum of conductors {a.conductor} and {b.conductor}")
    if set(a.labels) & set(b.labels):
        raise UsageError("direct summands share labels; relabel first")
    z = zero(a.conductor)
    rows = []
    for row in a.entries:
        rows.append(row + (z,) * b.columns)
    for row in b.entries:
        rows.append((z,) * a.columns + row)
    return Representation(a.conductor, tuple(rows), a.labels + b.labels)


def lift_conductor(rep: Representation, conductor: int) -> Representation:
    """Re-embed a rational (conductor-1) representation into Q(zeta_n)."""
    if rep.conductor == conductor:
        return rep
    if rep.conductor != 1:
        raise UsageError("can only lift from the rationals")
    rows = tuple(
        tuple(CyclotomicNumber(conductor, x.coeffs) for x in row)
        for row in rep.entries)
    return Representation(conductor, rows, rep.labels)


@dataclass(frozen=True)
class Flat:
    """A closure-closed element set together with its rank."""

    elements: tuple[str, ...]
    rank: int

    def __contains__(self, label):
        return label in self.elements

    def __len__(self):
        return len(self.elements)


def _column_rank(columns) -> int:
    """Exact rank by Gaussian elimination, first-nonzero pivoting."""
    if not columns:
        return 0
    mat = [list(col) for col in columns]  # one list per column
    d = len(mat[0])
    rank = 0
    pivot_row = 0
    for j in range(len(mat)):
        col = mat[j]
        piv = None
        for i in range(pivot_row, d):
            if col[i]:
                piv = i
                break
        if piv is None:
            continue
        if piv != pivot_row:
            for c in mat[j:]:
                c[piv], c[pivot_row] = c[pivot_row], c[piv]
        inv = col[pivot_row].inv()
        for c in mat[j + 1:]:
            factor = c[pivot_row] * inv
            if factor:
                for i in range(pivot_row, d):
                    c[i] = c[i] - factor * col[i]
        rank += 1
        pivot_row += 1
        if pivot_row == d:
            break
    return rank


class _Root:
    """Shared state for a representation matroid: the matrix, its columns,
    and a thread-safe rank memo keyed by frozen column-index sets."""

    def __init__(self, rep: Representation):
        self.rep = rep
        self.columns = [rep.column(j) for j in range(rep.columns)]
        self.index = {lbl: j for j, lbl in enumerate(rep.labels)}
        self._cache: dict[frozenset, int] = {frozenset(): 0}
        self._lock = threading.Lock()
        self.rank_calls = 0  # cache misses, i.e. actual eliminations

    def rank(self, idx: frozenset) -> int:
        hit = self._cache.get(idx)
        if hit is not None:
            return hit
        r = _column_rank([self.columns[j] for j in sorted(idx)])
        with self._lock:
            self._cache[idx] = r
            self.rank_calls += 1
        return r


class Matroid:
    """A matroid on labeled elements, given by a representation or as a
    minor (restriction / contraction-of-flat) of one."""

    def __init__(self, rep: Representation = None, *, _root=None,
                 _ground=None, _contracted=frozenset()):
        if rep is not None:
            _root = _Root(rep)
            _ground = rep.labels
        self._root = _root
        self.ground: tuple[str, ...] = tuple(_ground)
        self._contracted: frozenset = _contracted
        self._ground_set = set(self.ground)
        self._base_rank = self._root.rank(self._contracted)

    # -- basics ------------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._root.rep.conductor

    @property
    def rank_calls(self) -> int:
        return self._root.rank_calls

    def _indices(self, labels) -> frozenset:
        idx = set()
        for lbl in labels:
            if lbl not in self._ground_set:
                raise UsageError(f"unknown element label {lbl!r}")
            idx.add(self._root.index[lbl])
        return frozenset(idx)

    def _order(self, labels):
        index = self._root.index
        return tuple(sorted(labels, key=index.__getitem__))

    def rank(self, labels=None) -> int:
        if labels is None:
            labels = self.ground
        idx = self._indices(labels)
        return self._root.rank(idx | self._contracted) - self._base_rank

    def closure(self, labels) -> Flat:
        labels = set(labels)
        r = self.rank(labels)
        idx = self._indices(labels) | self._contracted
        closed = []
        for lbl in self.ground:
            if lbl in labels:
                closed.append(lbl)
            elif self._root.rank(idx | {self._root.index[lbl]}) - self._base_rank == r:
                closed.append(lbl)
        return Flat(tuple(closed), r)

    def is_flat(self, labels) -> bool:
        cl = self.closure(labels)
        return set(cl.elements) == set(labels)

    def as_flat(self, labels) -> Flat:
        """Validate that `labels` is closed and wrap it as a Flat."""
        cl = self.closure(labels)
        if set(cl.elements) != set(labels):
            raise UsageError("element set is not a flat")
        return cl

    # -- simplicity --------------------------------------------------------

    def loops(self) -> tuple[str, ...]:
        return tuple(e for e in self.ground if self.rank([e]) == 0)

    def is_loopless(self) -> bool:
        return not self.loops()

    def parallel_classes(self, within=None):
        """Partition of the non-loop elements into rank-1 closures (the
        points), each sorted in ground order; classes in order of first
        element.  `within` limits the partition to a subset."""
        pool = self.ground if within is None else self._order(set(within))
        pool_set = set(pool)
        seen = set()
        classes = []
        for e in pool:
            if e in seen or self.rank([e]) == 0:
                continue
            cls = tuple(f for f in self.closure([e]).elements
                        if f in pool_set and self.rank([f]) == 1)
            classes.append(cls)
            seen.update(cls)
        return classes

    def is_simple(self) -> bool:
        return self.is_loopless() and all(
            len(c) == 1 for c in self.parallel_classes())

    def simplify(self):
        """Drop loops, keep the first element of each parallel class.

        Returns (simple matroid, mapping element -> representative); loops
        are absent from the mapping.
        """
        mapping = {}
        reps = []
        for cls in self.parallel_classes():
            rep = cls[0]
            reps.append(rep)
            for e in cls:
                mapping[e] = rep
        return self.restrict(reps), mapping

    # -- minors ------------------------------------------------------------

    def restrict(self, labels) -> "Matroid":
        keep = self._indices(labels)  # validates
        ground = tuple(e for e in self.ground if self._root.index[e] in keep)
        return Matroid(_root=self._root, _ground=ground,
                       _contracted=self._contracted)

    def contract(self, flat: Flat) -> "Matroid":
        """Contract a flat; the result is loopless when self is.

        Only flats may be contracted; anything else raises.
        """
        if not self.is_loopless():
            raise UsageError("contraction requires a loopless matroid")
        if not self.is_flat(flat.elements):
            raise ContractNonFlatError(
                f"cannot contract non-flat {flat.elements}")
        idx = self._indices(flat.elements)
        ground = tuple(e for e in self.ground if e not in set(flat.elements))
        return Matroid(_root=self._root, _ground=ground,
                       _contracted=self._contracted | idx)

    # -- flats -------------------------------------------------------------

    def flats_of_rank(self, k: int, budget: int = DEFAULT_CLOSURE_BUDGET,
                      counter=None):
        """All rank-k flats, canonically sorted, by closing independent
        k-subsets (grown with rank pruning) and deduplicating.

        `budget` bounds the number of closure computations; `counter` is an
        optional mutable [n] accumulating closures across calls.
        """
        if not self.is_loopless():
            raise UsageError("flats_of_rank requires a loopless matroid")
        if k < 0 or k > self.rank():
            raise UsageError(f"flat rank {k} out of range 0..{self.rank()}")
        if counter is None:
            counter = [0]
        if k == 0:
            return [self.closure([])]
        found = {}
        ground = self.ground
        index = self._root.index

        def grow(start, chosen):
            for i in range(start, len(ground)):
                e = ground[i]
                if self.rank(chosen + [e]) != len(chosen) + 1:
                    continue
                if len(chosen) + 1 == k:
                    counter[0] += 1
                    if counter[0] > budget:
                        raise BudgetExceededError(
                            f"closure budget {budget} exceeded",
                            stats={"closures": counter[0],
                                   "flats_found": len(found)})
                    fl = self.closure(chosen + [e])
                    found.setdefault(fl.elements, fl)
                else:
                    grow(i + 1, chosen + [e])

        grow(0, [])
        key = lambda fl: tuple(index[e] for e in fl.elements)
        return sorted(found.values(), key=key)

    def is_direct_sum(self, f: Flat, f1: Flat, f2: Flat) -> bool:
        """Is the flat f the direct sum of flats f1 and f2, i.e. their
        union with rank(f) = rank(f1) + rank(f2)?"""
        for x in (f, f1, f2):
            if not self.is_flat(x.elements):
                raise UsageError("is_direct_sum expects flats")
        return (set(f.elements) == set(f1.elements) | set(f2.elements)
                and f.rank == f1.rank + f2.rank)

    # -- materialization ---------------------------------------------------

    def to_representation(self) -> Representation:
        """Project out the contracted flat and keep the ground columns,
        yielding a standalone representation of this minor.

        Row-reduces with pivots restricted to the contracted columns, so
        that their span becomes the first rank(C) coordinates, then drops
        those coordinates from the ground columns.
        """
        root = self._root
        cidx = sorted(self._contracted)
        gidx = [root.index[e] for e in self.ground]
        d = root.rep.rows
        rows = [[root.columns[j][i] for j in cidx + gidx] for i in range(d)]
        cur = 0
        for j in range(len(cidx)):
            piv = next((i for i in range(cur, d) if rows[i][j]), None)
            if piv is None:
                continue
            rows[cur], rows[piv] = rows[piv], rows[cur]
            inv = rows[cur][j].inv()
            for i in range(cur + 1, d):
                factor = rows[i][j] * inv
                if factor:
                    rows[i] = [a - factor * b
                               for a, b in zip(rows[i], rows[cur])]
            cur += 1
        out = tuple(tuple(row[len(cidx):]) for row in rows[cur:])
        return Representation(self.conductor, out, self.ground)


# ---------------------------------------------------------------------------
# matrix file format

def write_matrix(rep: Representation) -> str:
    lines = [f"conductor {rep.conductor}",
             f"size {rep.rows} {rep.columns}",
             "labels " + " ".join(rep.labels)]
    for row in rep.entries:
        lines.append(" ".join(format_scalar(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Representation:
    raw = [ln.strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(raw) if ln]
    if len(lines) < 2:
        raise MatrixParseError("file too short: need conductor and size lines")
    lineno, first = lines[0]
    parts = first.split()
    if len(parts) != 2 or parts[0] != "conductor" or not parts[1].isdigit():
        raise MatrixParseError("expected 'conductor <n>'", line=lineno)
    conductor = int(parts[1])
    if conductor < 1:
        raise MatrixParseError("conductor must be positive", line=lineno)
    lineno, second = lines[1]
    parts = second.split()
    if len(parts) != 3 or parts[0] != "size":
        raise MatrixParseError("expected 'size <d> <m>'", line=lineno)
    try:
        d, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise MatrixParseError("size fields must be integers", line=lineno)
    rest = lines[2:]
    labels = None
    if rest and rest[0][1].split()[0] == "labels":
        lineno, lab = rest[0]
        labels = tuple(lab.split()[1:])
        if len(labels) != m:
            raise MatrixParseError(
                f"expected {m} labels, got {len(labels)}", line=lineno)
        rest = rest[1:]
    if labels is None:
        labels = tuple(f"e{i + 1}" for i in range(m))
    if len(rest) != d:
        raise MatrixParseError(
            f"expected {d} matrix rows, got {len(rest)}")
    entries = []
    for lineno, ln in rest:
        toks = ln.split()
        if len(toks) != m:
            raise MatrixParseError(
                f"expected {m} entries, got {len(toks)}", line=lineno)
        row = []
        for col, tok in enumerate(toks):
            try:
                row.append(parse_scalar(tok, conductor))
            except Exception as exc:
                raise MatrixParseError(
                    f"bad scalar {tok!r}: {exc}", line=lineno, column=col + 1)
        entries.append(tuple(row))
    return Representation(conductor, tuple(entries), labels)


def load_matrix(path) -> Representation:
    with open(path) as fh:
        return parse_matrix(fh.read())


def save_matrix(rep: Representation, path) -> None:
    with open(path, "w") as fh:
        fh.write(write_matrix(rep))
