"""Truncated Hilbert series and exact weighted polynomial arithmetic.

Everything here is exact: series coefficients are Python integers and
polynomial coefficients are ``fractions.Fraction``.  A free graded-commutative
algebra on a generator set contributes a factor 1/(1 - q^d) per even
generator of degree d and (1 + q^d) per odd generator; series are always
truncated at an explicit maximal degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Generator:
    """A graded generator.  Parity must match the degree (even iff degree even)."""

    label: str
    degree: int
    parity: str  # "even" | "odd"

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"generator {self.label!r} must have degree >= 1")
        expected = "even" if self.degree % 2 == 0 else "odd"
        if self.parity != expected:
            raise ValueError(
                f"generator {self.label!r}: parity {self.parity!r} does not match degree {self.degree}"
            )

    @classmethod
    def of(cls, label: str, degree: int) -> "Generator":
        return cls(label, degree, "even" if degree % 2 == 0 else "odd")


@dataclass(frozen=True)
class HilbertSeries:
    """Coefficients of a truncated Hilbert series, indices 0..max_degree."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("series needs at least the degree-0 coefficient")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("series coefficients must be nonnegative")
        if self.coefficients[0] != 1:
            raise ValueError("an algebra series starts with coefficient 1")

    @property
    def max_degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, degree: int) -> int:
        return self.coefficients[degree]

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        n = min(self.max_degree, other.max_degree)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coefficients[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coefficients[j]
        return HilbertSeries(tuple(out))

    def times_one_minus(self, degree: int) -> "HilbertSeries":
        """Multiply by the polynomial (1 - q^degree), truncated."""
        c = list(self.coefficients)
        for i in range(len(c) - 1, degree - 1, -1):
            c[i] -= c[i - degree]
        if any(x < 0 for x in c):
            raise ValueError("series is not divisible by the requested factor")
        return HilbertSeries(tuple(c))


def free_graded_commutative_series(
    generators: Iterable[Generator], max_degree: int
) -> HilbertSeries:
    """Hilbert series of the free graded-commutative algebra on ``generators``."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    c = [0] * (max_degree + 1)
    c[0] = 1
    for gen in generators:
        d = gen.degree
        if d < 1:
            raise ValueError(f"generator {gen.label!r} has degree < 1")
        if gen.parity == "even":
            # geometric factor: in-place prefix convolution
            for i in range(d, max_degree + 1):
                c[i] += c[i - d]
        else:
            # square-zero factor: one-shot, descending to avoid reuse
            for i in range(max_degree, d - 1, -1):
                c[i] += c[i - d]
    return HilbertSeries(tuple(c))


def series_pointwise_equal(a: HilbertSeries, b: HilbertSeries, up_to: int) -> bool:
    if up_to < 0:
        raise ValueError("comparison range must be nonnegative")
    if up_to > a.max_degree or up_to > b.max_degree:
        raise ValueError("comparison range exceeds a series truncation")
    return a.coefficients[: up_to + 1] == b.coefficients[: up_to + 1]


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact scalar, got {type(x).__name__}")


class WeightedPolynomial:
    """Sparse polynomial over Q in named variables carrying positive weights.

    Terms map exponent vectors (aligned with the sorted variable tuple) to
    nonzero Fractions.  Variable order is lexicographic on the symbol; that
    ordering is canonicalization only and carries no semantic weight.
    """

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Sequence[tuple[str, int]],
        terms: Mapping[tuple[int, ...], Scalar],
    ) -> None:
        vs = tuple(sorted(variables))
        names = [v[0] for v in vs]
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable symbol")
        if any(w < 1 for _, w in vs):
            raise ValueError("variable weights must be positive")
        order = {name: i for i, (name, _) in enumerate(vs)}
        src_order = [order[name] for name, _ in variables]
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms.items():
            if len(exps) != len(vs):
                raise ValueError("exponent vector length mismatch")
            c = _as_fraction(coeff)
            if c == 0:
                continue
            aligned = [0] * len(vs)
            for pos, e in enumerate(exps):
                if e < 0:
                    raise ValueError("negative exponent")
                aligned[src_order[pos]] = e
            key = tuple(aligned)
            got = clean.get(key, Fraction(0)) + c
            if got:
                clean[key] = got
            else:
                clean.pop(key, None)
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "terms", clean)

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar) -> "WeightedPolynomial":
        v = _as_fraction(value)
        return cls((), {(): v} if v else {})

    @classmethod
    def zero(cls) -> "WeightedPolynomial":
        return cls((), {})

    @classmethod
    def variable(cls, name: str, weight: int) -> "WeightedPolynomial":
        return cls(((name, weight),), {(1,): Fraction(1)})

    # -- structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def weighted_degrees(self) -> set[int]:
        weights = [w for _, w in self.variables]
        return {
            sum(e * w for e, w in zip(exps, weights)) for exps in self.terms
        }

    def is_homogeneous(self) -> bool:
        return len(self.weighted_degrees()) <= 1

    def weighted_degree(self) -> int:
        degs = self.weighted_degrees()
        if len(degs) != 1:
            raise ValueError("polynomial is zero or not homogeneous")
        return degs.pop()

    def homogeneous_part(self, weight: int) -> "WeightedPolynomial":
        weights = [w for _, w in self.variables]
        kept = {
            exps: c
            for exps, c in self.terms.items()
            if sum(e * w for e, w in zip(exps, weights)) == weight
        }
        return WeightedPolynomial(self.variables, kept)

    def coefficient(self, monomial: Mapping[str, int]) -> Fraction:
        exps = [0] * len(self.variables)
        names = {name: i for i, (name, _) in enumerate(self.variables)}
        for name, e in monomial.items():
            if name not in names:
                return Fraction(0)
            exps[names[name]] = e
        return self.terms.get(tuple(exps), Fraction(0))

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _merge_variables(
        a: "WeightedPolynomial", b: "WeightedPolynomial"
    ) -> tuple[tuple[tuple[str, int], ...], list[int], list[int]]:
        table: dict[str, int] = {}
        for name, w in a.variables:
            table[name] = w
        for name, w in b.variables:
            if table.get(name, w) != w:
                raise ValueError(f"variable {name!r} carries conflicting weights")
            table[name] = w
        merged = tuple(sorted(table.items()))
        pos = {name: i for i, (name, _) in enumerate(merged)}
        amap = [pos[name] for name, _ in a.variables]
        bmap = [pos[name] for name, _ in b.variables]
        return merged, amap, bmap

    def _lift(self, merged, mapping) -> dict[tuple[int, ...], Fraction]:
        width = len(merged)
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            key = [0] * width
            for pos, e in enumerate(exps):
                key[mapping[pos]] = e
            out[tuple(key)] = c
        return out

    def __add__(self, other) -> "WeightedPolynomial":
        if isinstance(other, (int, Fraction)):
            other = WeightedPolynomial.constant(other)
        merged, amap, bmap = self._merge_variables(self, other)
        terms = self._lift(merged, amap)
        for key, c in other._lift(merged, bmap).items():
            got = terms.get(key, Fraction(0)) + c
            if got:
                terms[key] = got
            else:
                terms.pop(key, None)
        return WeightedPolynomial(merged, terms)

    __radd__ = __add__

    def __neg__(self) -> "WeightedPolynomial":
        return WeightedPolynomial(
            self.variables, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other) -> "WeightedPolynomial":
        if isinstance(other, (int, Fraction)):
            other = WeightedPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "WeightedPolynomial":
        return (-self) + other

    def mul(self, other, max_weight: int | None = None) -> "WeightedPolynomial":
        """Product, optionally discarding terms above ``max_weight``."""
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return WeightedPolynomial(
                self.variables, {e: c * v for e, v in self.terms.items()}
            )
        merged, amap, bmap = self._merge_variables(self, other)
        aterms = self._lift(merged, amap)
        bterms = other._lift(merged, bmap)
        weights = [w for _, w in merged]
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in aterms.items():
            for eb, cb in bterms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                if max_weight is not None:
                    if sum(e * w for e, w in zip(key, weights)) > max_weight:
                        continue
                got = out.get(key, Fraction(0)) + ca * cb
                if got:
                    out[key] = got
                else:
                    out.pop(key, None)
        return WeightedPolynomial(merged, out)

    def __mul__(self, other) -> "WeightedPolynomial":
        return self.mul(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "WeightedPolynomial":
        if n < 0:
            raise ValueError("negative power")
        out = WeightedPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeightedPolynomial.constant(other)
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        merged, amap, bmap = self._merge_variables(self, other)
        return self._lift(merged, amap) == other._lift(merged, bmap)

    def __hash__(self):
        raise TypeError("WeightedPolynomial is not hashable")

    # -- substitution ---------------------------------------------------

    def substitute(
        self, images: Mapping[str, Union["WeightedPolynomial", Scalar]]
    ) -> "WeightedPolynomial":
        """Replace every variable by its image.

        Each variable must be mapped, and each nonzero image must be
        homogeneous of exactly the variable's weight.
        """
        prepared: dict[str, WeightedPolynomial] = {}
        for name, weight in self.variables:
            if name not in images:
                raise ValueError(f"no image given for variable {name!r}")
            img = images[name]
            if isinstance(img, (int, Fraction)):
                img = WeightedPolynomial.constant(img)
            if not img.is_zero() and img.weighted_degrees() != {weight}:
                raise ValueError(
                    f"image of {name!r} is not homogeneous of weight {weight}"
                )
            prepared[name] = img
        out = WeightedPolynomial.zero()
        for exps, c in self.terms.items():
            term = WeightedPolynomial.constant(c)
            for (name, _), e in zip(self.variables, exps):
                if e:
                    term = term * (prepared[name] ** e)
            out = out + term
        return out

    # -- rendering ------------------------------------------------------

    def __repr__(self) -> str:
        return f"WeightedPolynomial({format_polynomial(self)!r})"


def format_rational(x: Scalar) -> str:
    """Canonical num/den rendering, e.g. 3 -> "3/1"."""
    f = _as_fraction(x)
    return f"{f.numerator}/{f.denominator}"


def format_polynomial(poly: WeightedPolynomial) -> str:
    """Deterministic rendering; monomials sorted lexicographically."""
    if poly.is_zero():
        return "0/1"
    pieces = []
    for exps in sorted(poly.terms):
        c = poly.terms[exps]
        factors = [format_rational(c)]
        for (name, _), e in zip(poly.variables, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        pieces.append("*".join(factors))
    return " + ".join(pieces)
