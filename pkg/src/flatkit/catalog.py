"""Named constructions and the seeded random instance generator.

Each catalog entry carries certified facts that the test suite re-derives
with the brute-force oracles.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CyclotomicNumber
from .errors import GenerationError, UsageError
from .matroid import (
    Matroid,
    Representation,
    direct_sum,
    lift_conductor,
    prefix_labels,
    representation_from_rows,
)


def ag23() -> Representation:
    """AG(2,3) as the Hesse configuration over Q(zeta_3): the nine
    inflection points (0,1,-w^j), (1,0,-w^j), (1,-w^j,0), j in {0,1,2}."""
    n = 3
    w = CyclotomicNumber.zeta(n)
    zero = CyclotomicNumber.from_rational(0, n)
    one = CyclotomicNumber.from_rational(1, n)
    powers = [one, w, w * w]
    cols = []
    for j in range(3):
        cols.append((zero, one, -powers[j]))
    for j in range(3):
        cols.append((one, zero, -powers[j]))
    for j in range(3):
        cols.append((one, -powers[j], zero))
    rows = tuple(tuple(col[i] for col in cols) for i in range(3))
    labels = tuple(f"h{j + 1}" for j in range(9))
    return Representation(n, rows, labels)


def uniform(r: int, n: int) -> Representation:
    """U_{r,n} as an r x n Vandermonde matrix over Q with nodes 1..n."""
    if not (0 <= r <= n):
        raise UsageError(f"uniform requires 0 <= r <= n, got r={r}, n={n}")
    rows = [[Fraction(node) ** p for node in range(1, n + 1)] for p in range(r)]
    return representation_from_rows(rows, 1)


def motzkin() -> Representation:
    """Direct sum of two three-point lines: rank 4, six elements, every
    plane has at least four elements but one is a point plus a line."""
    a = prefix_labels(uniform(2, 3), "a.")
    b = prefix_labels(uniform(2, 3), "b.")
    return direct_sum(a, b)


def ag23_power(t: int) -> Representation:
    """t-fold direct sum of AG(2,3): rank 3t, no elementary rank-(t+1) flat."""
    if t < 1:
        raise UsageError("ag23_power requires t >= 1")
    base = ag23()
    if t == 1:
        return base
    out = prefix_labels(base, "c1.")
    for i in range(2, t + 1):
        out = direct_sum(out, prefix_labels(base, f"c{i}."))
    return out


def uniform_power(r: int, n: int, t: int) -> Representation:
    """t-fold direct sum of U_{r,n} (the Bonnice-Edelstein line sums)."""
    if t < 1:
        raise UsageError("uniform_power requires t >= 1")
    base = uniform(r, n)
    if t == 1:
        return base
    out = prefix_labels(base, "c1.")
    for i in range(2, t + 1):
        out = direct_sum(out, prefix_labels(base, f"c{i}."))
    return out


SUPPORTED_CONDUCTORS = (1, 3, 4)


def random_instance(d: int, m: int, conductor: int = 1, seed: int = 0,
                    bound: int = 10, max_tries: int = 1000) -> Representation:
    """Seeded d x m representation, rejection-sampled until simple and of
    full rank d; basis coordinates are rationals with |num| <= bound and
    1 <= den <= bound."""
    if d > m:
        raise UsageError("need at least as many columns as rows")
    if conductor not in SUPPORTED_CONDUCTORS:
        raise UsageError(f"conductor must be one of {SUPPORTED_CONDUCTORS}")
    from .cyclotomic import euler_phi
    phi = euler_phi(conductor)
    rng = random.Random(seed)

    def draw():
        coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
                  for _ in range(phi)]
        return CyclotomicNumber(conductor, coeffs)

    for _ in range(max_tries):
        rows = tuple(tuple(draw() for _ in range(m)) for _ in range(d))
        labels = tuple(f"e{i + 1}" for i in range(m))
        rep = Representation(conductor, rows, labels)
        mat = Matroid(rep)
        if mat.rank() == d and mat.is_simple():
            return rep
    raise GenerationError(
        f"no simple rank-{d} instance after {max_tries} tries")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: str  # human-readable parameter signature, "" if none
    build: object  # callable(*int params) -> Representation
    certified_facts: tuple[str, ...] = ()


ENTRIES = {
    "ag23": CatalogEntry(
        "ag23", "", ag23,
        ("rank 3", "simple", "9 points", "12 lines, each of 3 points",
         "no two-point line")),
    "uniform": CatalogEntry(
        "uniform", "r,n", uniform,
        ("rank r on n elements", "every r columns independent")),
    "motzkin": CatalogEntry(
        "motzkin", "", motzkin,
        ("rank 4", "6 elements", "every plane has >= 4 elements",
         "some plane is a point plus a line")),
    "ag23_power": CatalogEntry(
        "ag23_power", "t", ag23_power,
        ("rank 3t", "no elementary rank-(t+1) flat at t in {1,2}")),
    "uniform_power": CatalogEntry(
        "uniform_power", "r,n,t", uniform_power,
        ("rank r*t", "block sum of uniform matroids")),
    "random": CatalogEntry(
        "random", "d,m,conductor,seed[,bound]", random_instance,
        ("simple", "rank d", "deterministic per seed")),
}


def build_ref(ref: str) -> Representation:
    """Resolve a `name` or `name:p1,p2,...` catalog reference."""
    name, _, argstr = ref.partition(":")
    entry = ENTRIES.get(name)
    if entry is None:
        raise UsageError(f"unknown catalog entry {name!r}")
    args = []
    if argstr:
        for tok in argstr.split(","):
            try:
                args.append(int(tok))
            except ValueError:
                raise UsageError(f"catalog parameter {tok!r} is not an integer")
    try:
        return entry.build(*args)
    except TypeError as exc:
        raise UsageError(f"bad parameters for {name!r}: {exc}")
