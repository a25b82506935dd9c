"""Hirzebruch multiplicative sequences and the L-class generator algebra.

The multiplicative sequence attached to an even power series f(x) is computed
by the Chern-root construction: expand prod_k f(x_k) over formal roots,
rewrite the weight-4i symmetric part in the elementary symmetric functions of
the x_k^2 by leading-monomial elimination, and identify those with the
Pontryagin variables p_j (weight 4j).  Everything is exact.

Two independent routes to the coefficients of x/tanh(x) are kept: the
Bernoulli-number recurrence (used by the construction) and direct power
series division (an oracle the test suite compares against).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .graded import HilbertSeries, WeightedPolynomial


# ---------------------------------------------------------------------------
# coefficient routes for x/tanh(x)


@lru_cache(maxsize=None)
def bernoulli_numbers(count: int) -> tuple[Fraction, ...]:
    """B_0 .. B_count with B_1 = -1/2."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    b: list[Fraction] = []
    for m in range(count + 1):
        if m == 0:
            b.append(Fraction(1))
            continue
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * b[j]
        b.append(-acc / (m + 1))
    return tuple(b)


def x_over_tanh_coefficients(order: int) -> tuple[Fraction, ...]:
    """Coefficients of u^j in x/tanh(x) with u = x^2, via Bernoulli numbers."""
    bern = bernoulli_numbers(2 * order)
    return tuple(
        bern[2 * j] * Fraction(4) ** j / math.factorial(2 * j)
        for j in range(order + 1)
    )


def _series_divide(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    if den[0] == 0:
        raise ValueError("division by a series with zero constant term")
    out: list[Fraction] = []
    for n in range(len(num)):
        acc = num[n]
        for k in range(n):
            acc -= out[k] * den[n - k]
        out.append(acc / den[0])
    return out


def x_over_tanh_by_division(order: int) -> tuple[Fraction, ...]:
    """Same coefficients via sinh/cosh power series division only."""
    sinh_over_x = [Fraction(1, math.factorial(2 * j + 1)) for j in range(order + 1)]
    cosh = [Fraction(1, math.factorial(2 * j)) for j in range(order + 1)]
    tanh_over_x = _series_divide(sinh_over_x, cosh)
    one = [Fraction(int(j == 0)) for j in range(order + 1)]
    return tuple(_series_divide(one, tanh_over_x))


# ---------------------------------------------------------------------------
# multiplicative sequences


def _conjugate_partition(parts: tuple[int, ...]) -> tuple[int, ...]:
    nonzero = [p for p in parts if p]
    if not nonzero:
        return ()
    return tuple(
        sum(1 for p in nonzero if p >= j) for j in range(1, nonzero[0] + 1)
    )


@lru_cache(maxsize=None)
def _elementary_expansion(nvars: int, level: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Monomial expansion of e_level in nvars variables (0/1 exponent vectors)."""
    rows = []
    for subset in itertools.combinations(range(nvars), level):
        exps = [0] * nvars
        for k in subset:
            exps[k] = 1
        rows.append((tuple(exps), 1))
    return tuple(rows)


def _expand_elementary_product(parts: tuple[int, ...], nvars: int) -> dict[tuple[int, ...], int]:
    prod: dict[tuple[int, ...], int] = {(0,) * nvars: 1}
    for level in parts:
        nxt: dict[tuple[int, ...], int] = {}
        for exps, c in prod.items():
            for inc, _ in _elementary_expansion(nvars, level):
                key = tuple(a + b for a, b in zip(exps, inc))
                nxt[key] = nxt.get(key, 0) + c
        prod = nxt
    return prod


def _to_elementary(part: dict[tuple[int, ...], Fraction], nvars: int) -> dict[tuple[int, ...], Fraction]:
    """Rewrite a symmetric polynomial as a polynomial in e_1..e_nvars.

    Keys of the result are exponent vectors over (e_1, ..., e_nvars).
    Leading-monomial elimination: the lex-largest exponent vector of a
    symmetric polynomial is a partition, and it is the leading term of the
    elementary product indexed by its conjugate.
    """
    work = {k: v for k, v in part.items() if v}
    out: dict[tuple[int, ...], Fraction] = {}
    while work:
        lead = max(work)
        coeff = work[lead]
        if any(lead[i] < lead[i + 1] for i in range(len(lead) - 1)):
            raise AssertionError("leading monomial of a symmetric polynomial must be a partition")
        conj = _conjugate_partition(lead)
        key = [0] * nvars
        for p in conj:
            key[p - 1] += 1
        out[tuple(key)] = out.get(tuple(key), Fraction(0)) + coeff
        for exps, c in _expand_elementary_product(conj, nvars).items():
            got = work.get(exps, Fraction(0)) - coeff * c
            if got:
                work[exps] = got
            else:
                work.pop(exps, None)
    return {k: v for k, v in out.items() if v}


def multiplicative_sequence(
    coefficients: tuple[Fraction, ...], count: int
) -> list[WeightedPolynomial]:
    """K_0 .. K_count of the even series with the given u-coefficients.

    ``coefficients[j]`` is the u^j coefficient (u = x^2) and must start with 1.
    K_i is returned in Pontryagin variables p_1..p_i, with p_j of weight 4j.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if not coefficients or coefficients[0] != 1:
        raise ValueError("the series must have constant term 1")
    n = count
    if n == 0:
        return [WeightedPolynomial.constant(1)]
    # product over n formal roots, truncated to total degree n in the u_k
    prod: dict[tuple[int, ...], Fraction] = {(0,) * n: Fraction(1)}
    for k in range(n):
        nxt: dict[tuple[int, ...], Fraction] = {}
        for exps, c in prod.items():
            total = sum(exps)
            for j, aj in enumerate(coefficients[: n + 1]):
                if total + j > n:
                    break
                if aj == 0:
                    continue
                key = exps[:k] + (j,) + exps[k + 1 :]
                got = nxt.get(key, Fraction(0)) + c * aj
                if got:
                    nxt[key] = got
                else:
                    nxt.pop(key, None)
        prod = nxt
    variables = tuple((f"p_{j}", 4 * j) for j in range(1, n + 1))
    sequence = [WeightedPolynomial.constant(1)]
    for i in range(1, n + 1):
        layer = {
            exps: c for exps, c in prod.items() if sum(exps) == i
        }
        in_e = _to_elementary(layer, n)
        terms = {}
        for key, c in in_e.items():
            if any(key[j] for j in range(i, n)):
                raise AssertionError("weight-i part uses only e_1..e_i")
            terms[key] = c
        sequence.append(WeightedPolynomial(variables, terms))
    return sequence


@lru_cache(maxsize=None)
def l_polynomial(i: int) -> WeightedPolynomial:
    """Hirzebruch L_i, the weight-4i class of x/tanh(x), in p_1..p_i."""
    return multiplicative_sequence(x_over_tanh_coefficients(i), i)[i]


@lru_cache(maxsize=None)
def l_hat_polynomial(i: int) -> WeightedPolynomial:
    """The weight-4i class of (x/2)/tanh(x/2); equals 2^{-2i} L_i."""
    scaled = tuple(
        a / Fraction(4) ** j for j, a in enumerate(x_over_tanh_coefficients(i))
    )
    return multiplicative_sequence(scaled, i)[i]


@lru_cache(maxsize=None)
def p_in_terms_of_l(i: int) -> WeightedPolynomial:
    """p_i as a polynomial in L_1..L_i, by triangular inversion."""
    if i < 1:
        raise ValueError("index must be positive")
    lp = l_polynomial(i)
    lead = lp.coefficient({f"p_{i}": 1})
    if lead == 0:
        raise AssertionError("L_i must contain p_i with nonzero coefficient")
    p_i_var = WeightedPolynomial.variable(f"p_{i}", 4 * i)
    rest = lp - lead * p_i_var  # polynomial in p_1..p_{i-1}
    images = {f"p_{j}": p_in_terms_of_l(j) for j in range(1, i)}
    images[f"p_{i}"] = WeightedPolynomial.zero()  # rest has no p_i, image unused
    substituted = rest.substitute(images)
    l_i_var = WeightedPolynomial.variable(f"L_{i}", 4 * i)
    return (l_i_var - substituted) * (Fraction(1) / lead)


# ---------------------------------------------------------------------------
# generator bookkeeping for the n-connected cover of BSO(2n)


def cover_generator_index_set(n: int) -> range:
    """Indices i with ceil((n+1)/4) <= i <= n."""
    if n < 1:
        raise ValueError("half-dimension n must be positive")
    return range(-((n + 1) // -4), n + 1)


def bso_cover_series(n: int, max_degree: int) -> HilbertSeries:
    """Series of the free module on L_i (i in the cover index set) and one
    Euler-type generator of degree 2n whose square is decomposable."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    c = [0] * (max_degree + 1)
    c[0] = 1
    for j in cover_generator_index_set(n):
        d = 4 * j
        for t in range(d, max_degree + 1):
            c[t] += c[t - d]
    # rank-two module over the polynomial part: 1 and the Euler-type class
    d = 2 * n
    for t in range(max_degree, d - 1, -1):
        c[t] += c[t - d]
    return HilbertSeries(tuple(c))


def ko_target_series(n: int, max_degree: int) -> HilbertSeries:
    """Series of the rational KO-theoretic target ring.

    Polynomial generators sit in degrees 4i for n even, and in one degree per
    residue 2 mod 4 for n odd.
    """
    if n < 1 or max_degree < 0:
        raise ValueError("need n >= 1 and max_degree >= 0")
    c = [0] * (max_degree + 1)
    c[0] = 1
    degree = 4 if n % 2 == 0 else 2
    step = 4
    d = degree
    while d <= max_degree:
        for t in range(d, max_degree + 1):
            c[t] += c[t - d]
        d += step
    return HilbertSeries(tuple(c))


@dataclass(frozen=True)
class IndexMapEntry:
    source_label: str
    source_degree: int
    scalar: Fraction
    target_label: str
    target_degree: int

    def __post_init__(self) -> None:
        if self.source_degree != self.target_degree:
            raise ValueError("index map entries must preserve degree")


@dataclass(frozen=True)
class IndexGeneratorMap:
    n: int
    parity: str  # "even" | "odd"
    entries: tuple[IndexMapEntry, ...]


def index_generator_map(n: int) -> IndexGeneratorMap:
    """Action of the family index map on ring generators.

    For n = 2m the degree-4i generator goes to (-1/4)^i kappa_{L_{i+m}}; for
    n = 2m+1 the degree-(4i-2) generator goes to (1/2)^{2i-1} kappa_{L_{i+m}}.
    Entries stop once the L-index leaves the cover index set.
    """
    if n < 1:
        raise ValueError("half-dimension n must be positive")
    m = n // 2
    entries = []
    if n % 2 == 0:
        for i in range(1, n - m + 1):
            entries.append(
                IndexMapEntry(
                    source_label=f"ph_{i}",
                    source_degree=4 * i,
                    scalar=Fraction(-1, 4) ** i,
                    target_label=f"kappa_L{i + m}",
                    target_degree=4 * (i + m) - 2 * n,
                )
            )
        return IndexGeneratorMap(n, "even", tuple(entries))
    for i in range(1, n - m + 1):
        entries.append(
            IndexMapEntry(
                source_label=f"qh_{i}",
                source_degree=4 * i - 2,
                scalar=Fraction(1, 2) ** (2 * i - 1),
                target_label=f"kappa_L{i + m}",
                target_degree=4 * (i + m) - 2 * n,
            )
        )
    return IndexGeneratorMap(n, "odd", tuple(entries))
