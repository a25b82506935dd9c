"""Exact root-system combinatorics behind the stability constants.

For the symplectic family C_g the positive roots are a_i + a_j, a_i - a_j
(i < j) and 2a_i, with half-sum rho = sum (g-i+1) a_i; for the split
orthogonal family D_g they are a_i +- a_j (i < j) with rho = sum (g-i) a_i.
The constant attached to a weight mu is the largest q <= qmax such that
rho - mu - eta is a nonzero nonnegative combination of simple roots for every
sum eta of q distinct positive roots; the constant of the k-th tensor power
of the defining representation is the minimum over its weights.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .linalg import invert_fraction_matrix

Vector = tuple[Fraction, ...]


def _vec(entries: Iterable[int | Fraction]) -> Vector:
    return tuple(Fraction(x) for x in entries)


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


@dataclass(frozen=True)
class RootSystem:
    family: str  # "C" | "D"
    g: int
    positive_roots: tuple[Vector, ...]
    simple_roots: tuple[Vector, ...]
    rho: Vector


@lru_cache(maxsize=None)
def root_system(family: str, g: int) -> RootSystem:
    if g < 2:
        raise ValueError("rank must be at least 2")
    zero = [Fraction(0)] * g

    def unit(i: int, scale: int = 1) -> Vector:
        v = zero[:]
        v[i] = Fraction(scale)
        return tuple(v)

    positive: list[Vector] = []
    if family == "C":
        for i in range(g):
            for j in range(i + 1, g):
                positive.append(_add(unit(i), unit(j)))
                positive.append(_sub(unit(i), unit(j)))
        for i in range(g):
            positive.append(unit(i, 2))
        simple = [_sub(unit(i), unit(i + 1)) for i in range(g - 1)] + [unit(g - 1, 2)]
        rho = _vec(g - i for i in range(g))
        expected = g * g
    elif family == "D":
        for i in range(g):
            for j in range(i + 1, g):
                positive.append(_add(unit(i), unit(j)))
                positive.append(_sub(unit(i), unit(j)))
        simple = [_sub(unit(i), unit(i + 1)) for i in range(g - 1)] + [
            _add(unit(g - 2), unit(g - 1))
        ]
        rho = _vec(g - i - 1 for i in range(g))
        expected = g * (g - 1)
    else:
        raise ValueError("family must be 'C' or 'D'")
    if len(positive) != expected:
        raise AssertionError("positive root count mismatch")
    double_rho = tuple(2 * x for x in rho)
    total = _vec([0] * g)
    for root in positive:
        total = _add(total, root)
    if total != double_rho:
        raise AssertionError("2*rho must equal the sum of the positive roots")
    rs = RootSystem(family, g, tuple(positive), tuple(simple), rho)
    for root in positive:
        if not is_positive_combination(root, rs):
            raise AssertionError("positive root outside the simple cone")
    return rs


@lru_cache(maxsize=None)
def _simple_inverse(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    columns = [[root[i] for root in rs.simple_roots] for i in range(rs.g)]
    return tuple(tuple(row) for row in invert_fraction_matrix(columns))


def is_positive_combination(v: Sequence[int | Fraction], rs: RootSystem) -> bool:
    """True when v is nonzero and a nonnegative rational combination of the
    simple roots."""
    vec = _vec(v)
    if all(x == 0 for x in vec):
        return False
    inv = _simple_inverse(rs)
    for row in inv:
        t = sum(a * b for a, b in zip(row, vec))
        if t < 0:
            return False
    return True


def weights_of_exterior_power(rs: RootSystem, q: int) -> Iterator[Vector]:
    """Sums of q distinct positive roots (with repetition of values allowed)."""
    if q < 0:
        raise ValueError("exterior power degree must be nonnegative")
    if q > len(rs.positive_roots):
        return
    for subset in itertools.combinations(rs.positive_roots, q):
        total = _vec([0] * rs.g)
        for root in subset:
            total = _add(total, root)
        yield total


def weights_of_tensor_power(rs: RootSystem, k: int) -> list[Vector]:
    """Deduplicated sums of k elements of {+-a_1, ..., +-a_g}."""
    if k < 0:
        raise ValueError("tensor power degree must be nonnegative")
    step: list[Vector] = []
    for i in range(rs.g):
        v = [Fraction(0)] * rs.g
        v[i] = Fraction(1)
        step.append(tuple(v))
        v2 = v[:]
        v2[i] = Fraction(-1)
        step.append(tuple(v2))
    frontier = {tuple([Fraction(0)] * rs.g)}
    for _ in range(k):
        frontier = {_add(w, s) for w in frontier for s in step}
    return sorted(frontier)


@dataclass(frozen=True)
class BorelConstant:
    """value=None: the cone test fails even with no roots subtracted.
    capped=True: the test still passed at the search cap, so the true
    constant is at least value."""

    value: int | None
    capped: bool = False

    def meets(self, bound: int) -> bool:
        return self.value is not None and self.value >= bound


def borel_constant_mu(rs: RootSystem, mu: Sequence[int | Fraction], qmax: int) -> BorelConstant:
    """Largest q <= qmax such that every q' <= q passes the cone test for all
    eta summing q' distinct positive roots.

    The scan ascends and stops at the first failing q': above the positive
    root count the per-degree test is vacuously true, so a descending scan
    would skip over genuine failures.
    """
    if qmax < 0:
        raise ValueError("qmax must be nonnegative")
    base = _sub(rs.rho, _vec(mu))
    best: int | None = None
    for q in range(qmax + 1):
        if not all(
            is_positive_combination(_sub(base, eta), rs)
            for eta in weights_of_exterior_power(rs, q)
        ):
            break
        best = q
    if best is None:
        return BorelConstant(None)
    return BorelConstant(best, capped=(best == qmax))


def borel_constant_rep(rs: RootSystem, k: int, qmax: int) -> BorelConstant:
    """Minimum of borel_constant_mu over the weights of the k-th tensor power
    of the defining representation."""
    best: int | None = None
    all_capped = True
    for mu in weights_of_tensor_power(rs, k):
        c = borel_constant_mu(rs, mu, qmax)
        if c.value is None:
            return BorelConstant(None)
        if best is None or c.value < best:
            best = c.value
        all_capped = all_capped and c.capped
    if best is None:
        raise AssertionError("a tensor power always has at least one weight")
    return BorelConstant(best, capped=all_capped and best == qmax)


def representation_bound(family: str, g: int, k: int) -> int:
    """The proved lower bound for the constant of the k-th tensor power."""
    if family == "C":
        return g - 1 - k
    if family == "D":
        return g - 2 - k
    raise ValueError("family must be 'C' or 'D'")


def lform_inequality_check(g: int, k: int, q: int) -> bool:
    """Exact evaluation of the dominance certificate
    (g-k-q-1) a_1 + sum_{i=2}^{g} (g-i+1) a_i - sum_{i=2}^{q} a_i > 0
    at a_1 = R, a_j = R^{-j} with R = 2^{10g}."""
    if g < 2 or k < 0 or not (0 <= q < g):
        raise ValueError("need g >= 2, k >= 0 and 0 <= q < g")
    r = Fraction(2) ** (10 * g)
    expr = (g - k - q - 1) * r
    for i in range(2, g + 1):
        expr += (g - i + 1) * r ** (-i)
    for i in range(2, q + 1):
        expr -= r ** (-i)
    return expr > 0
