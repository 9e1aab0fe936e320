"""Classical single Hurwitz numbers of the sphere and the cut-and-join flow.

<a>^m counts (possibly disconnected) degree-d coverings of the sphere with
m simple critical values and one special value of cycle type a:

    <a>^m = (1/d!) #{(sigma, t_1..t_m): type(sigma) = a, t_m...t_1 sigma = id}

with each t_i a transposition.  The cut-and-join operator inserts one
simple value into the generating function sum_a <a>^m p_a.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .operators import PolyOperator, Term

MAX_BRUTE_DEGREE = 5
MAX_BRUTE_STEPS = 6

Partition = tuple[int, ...]


def partition(parts) -> Partition:
    """Canonical weakly decreasing partition."""
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if not p or p[-1] < 1:
        raise ValueError(f"not a partition: {parts!r}")
    return p


def partitions(d: int) -> list[Partition]:
    """Partitions of d, largest part first, in reverse lexicographic order."""
    def rec(n: int, cap: int):
        if n == 0:
            yield ()
            return
        for k in range(min(n, cap), 0, -1):
            for rest in rec(n - k, k):
                yield (k,) + rest
    return list(rec(d, d))


def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    parts = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            n += 1
        parts.append(n)
    return partition(parts)


def _transpositions(d: int) -> list[tuple[int, ...]]:
    out = []
    for i, j in itertools.combinations(range(d), 2):
        t = list(range(d))
        t[i], t[j] = j, i
        out.append(tuple(t))
    return out


def _compose(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    """s after t."""
    return tuple(s[x] for x in t)


@lru_cache(maxsize=None)
def _product_counts(d: int, m: int) -> dict[tuple[int, ...], int]:
    """Number of ways to write each permutation as t_m...t_1."""
    if m == 0:
        return {tuple(range(d)): 1}
    prev = _product_counts(d, m - 1)
    out: Counter = Counter()
    for t in _transpositions(d):
        for perm, n in prev.items():
            out[_compose(t, perm)] += n
    return dict(out)


def classical_bruteforce(a, m: int) -> Fraction:
    """<a>^m by enumerating products of m transpositions in S_d."""
    a = partition(a)
    d = sum(a)
    if d > MAX_BRUTE_DEGREE or not 0 <= m <= MAX_BRUTE_STEPS:
        raise ValueError(f"brute force limited to d <= {MAX_BRUTE_DEGREE}, 0 <= m <= {MAX_BRUTE_STEPS}")
    # sigma is the inverse of the product, and inversion keeps the cycle type
    count = sum(n for perm, n in _product_counts(d, m).items() if cycle_type(perm) == a)
    return Fraction(count, math.factorial(d))


def cut_and_join_operator(d_max: int, join_factor: Fraction = Fraction(1, 2)) -> PolyOperator:
    """1/2 sum (i+j) p_i p_j d/dp_(i+j) + join_factor * sum ij p_(i+j) d2/dp_i dp_j.

    Sums run over ordered pairs.  ``join_factor = 1`` gives the operator with
    the join term exactly as printed.
    """
    terms = []
    for i in range(1, d_max + 1):
        for j in range(1, d_max + 1 - i):
            terms.append(Term((i, j), (i + j,), Fraction(i + j, 2)))
            terms.append(Term((i + j,), (i, j), join_factor * i * j))
    return PolyOperator(terms)


def evolve_classical(d_max: int, m_max: int, op: PolyOperator | None = None) -> dict[tuple[Partition, int], Fraction]:
    """<a>^m for |a| <= d_max by applying the cut-and-join operator m times."""
    op = op or cut_and_join_operator(d_max)
    current = {}
    for d in range(1, d_max + 1):
        for a in partitions(d):
            v = classical_bruteforce(a, 0)
            if v:
                current[tuple(sorted(a))] = v
    table: dict[tuple[Partition, int], Fraction] = {}
    for m in range(m_max + 1):
        for mono, v in current.items():
            table[(partition(mono), m)] = v
        current = op.act(current)
    return table


def cut_and_join_table(d_max: int, m_max: int, op: PolyOperator | None = None) -> list[dict]:
    if d_max < 1 or m_max < 0:
        return []
    evolved = evolve_classical(d_max, m_max, op)
    rows = []
    for d in range(1, d_max + 1):
        for a in partitions(d):
            for m in range(m_max + 1):
                rows.append({"partition": list(a), "m": m,
                             "evolved": evolved.get((a, m), Fraction(0)),
                             "bruteforce": classical_bruteforce(a, m)})
    return rows


def cut_and_join_check(d_max: int, m_max: int, op: PolyOperator | None = None) -> list[dict]:
    """Rows where the evolved value and the brute-force count differ."""
    return [row for row in cut_and_join_table(d_max, m_max, op)
            if row["evolved"] != row["bruteforce"]]
