from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torelli.graded import (
    Generator,
    HilbertSeries,
    WeightedPolynomial,
    format_polynomial,
    format_rational,
    free_graded_commutative_series,
    series_pointwise_equal,
)


def test_generator_parity_checked():
    Generator("a", 3, "odd")
    with pytest.raises(ValueError):
        Generator("a", 3, "even")
    with pytest.raises(ValueError):
        Generator("a", 0, "even")
    assert Generator.of("b", 6).parity == "even"


def test_series_validation():
    with pytest.raises(ValueError):
        HilbertSeries(())
    with pytest.raises(ValueError):
        HilbertSeries((2, 1))
    with pytest.raises(ValueError):
        HilbertSeries((1, -1))


def test_series_multiplication_truncates():
    a = HilbertSeries((1, 1, 1))
    b = HilbertSeries((1, 0, 2, 5))
    assert (a * b).coefficients == (1, 1, 3)


def test_free_series_small_frozen():
    # one even generator of degree 2: 1/(1-q^2)
    even = free_graded_commutative_series([Generator.of("x", 2)], 7)
    assert even.coefficients == (1, 0, 1, 0, 1, 0, 1, 0)
    # one odd generator of degree 3: 1 + q^3
    odd = free_graded_commutative_series([Generator.of("y", 3)], 7)
    assert odd.coefficients == (1, 0, 0, 1, 0, 0, 0, 0)
    both = free_graded_commutative_series(
        [Generator.of("x", 2), Generator.of("y", 3)], 7
    )
    assert both.coefficients == (1, 0, 1, 1, 1, 1, 1, 1)


def _brute_force_series(degrees_parities, max_degree):
    # direct monomial enumeration; odd generators are square-zero
    counts = [0] * (max_degree + 1)

    def rec(pos, total):
        if total > max_degree:
            return
        if pos == len(degrees_parities):
            counts[total] += 1
            return
        d, parity = degrees_parities[pos]
        top = 1 if parity == "odd" else max_degree
        e = 0
        while total + e * d <= max_degree and e <= top:
            rec(pos + 1, total + e * d)
            e += 1

    rec(0, 0)
    return tuple(counts)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=6), min_size=0, max_size=5),
    st.integers(min_value=0, max_value=12),
)
def test_free_series_matches_enumeration(degrees, max_degree):
    gens = [Generator.of(f"g{i}", d) for i, d in enumerate(degrees)]
    series = free_graded_commutative_series(gens, max_degree)
    spec = [(g.degree, g.parity) for g in gens]
    assert series.coefficients == _brute_force_series(spec, max_degree)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=4),
    st.integers(min_value=2, max_value=6),
)
def test_even_factor_cancels(degrees, extra):
    # adding an even generator of degree d then multiplying by (1 - q^d)
    # recovers the original series
    gens = [Generator.of(f"g{i}", d) for i, d in enumerate(degrees)]
    base = free_graded_commutative_series(gens, 12)
    bigger = free_graded_commutative_series(
        gens + [Generator.of("extra", 2 * extra)], 12
    )
    assert bigger.times_one_minus(2 * extra) == base


def test_times_one_minus_rejects_non_divisible():
    s = free_graded_commutative_series([Generator.of("y", 3)], 6)
    with pytest.raises(ValueError):
        s.times_one_minus(3)  # (1+q^3)(1-q^3) has a negative coefficient at 6


def test_pointwise_equal_range_checked():
    a = HilbertSeries((1, 2))
    b = HilbertSeries((1, 2, 3))
    assert series_pointwise_equal(a, b, 1)
    with pytest.raises(ValueError):
        series_pointwise_equal(a, b, 2)


# ---------------------------------------------------------------------------
# weighted polynomials


def _xy():
    return (
        WeightedPolynomial.variable("x", 2),
        WeightedPolynomial.variable("y", 4),
    )


def test_polynomial_arithmetic():
    x, y = _xy()
    p = (x + 1) * (x - 1)
    assert p == x * x - 1
    q = x * x + y
    assert q.is_homogeneous()
    assert q.weighted_degree() == 4
    assert (q - q).is_zero()
    assert q.coefficient({"x": 2}) == 1
    assert q.coefficient({"y": 1}) == 1
    assert q.coefficient({"x": 1}) == 0


def test_homogeneous_part_and_degrees():
    x, y = _xy()
    p = x ** 3 + y + x
    assert p.weighted_degrees() == {2, 6, 4}
    assert p.homogeneous_part(6) == x ** 3
    assert p.homogeneous_part(4) == y
    assert p.homogeneous_part(8).is_zero()
    with pytest.raises(ValueError):
        p.weighted_degree()


def test_truncating_mul_discards_heavy_terms():
    x, y = _xy()
    p = (x + y).mul(x + y, max_weight=6)
    assert p == x * x + 2 * x.mul(y)


def test_weight_conflict_rejected():
    x = WeightedPolynomial.variable("x", 2)
    also_x = WeightedPolynomial.variable("x", 4)
    with pytest.raises(ValueError):
        x + also_x


def test_substitute_checks_weights():
    x, y = _xy()
    p = y + x * x
    image = WeightedPolynomial.variable("z", 2)
    assert p.substitute({"x": image, "y": image * image}) == 2 * image ** 2
    with pytest.raises(ValueError):
        p.substitute({"x": image, "y": image})  # wrong weight for y
    with pytest.raises(ValueError):
        p.substitute({"x": image})  # y has no image
    assert p.substitute({"x": 0, "y": image * image}) == image ** 2


def test_polynomial_not_hashable():
    x, _ = _xy()
    with pytest.raises(TypeError):
        hash(x)


def test_format_rational():
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(-7, 2)) == "-7/2"
    assert format_rational(Fraction(0)) == "0/1"


def test_format_polynomial_deterministic():
    x, y = _xy()
    p = y * Fraction(-1, 3) + x * x * 2
    assert format_polynomial(p) == "-1/3*y + 2/1*x^2"
    assert format_polynomial(WeightedPolynomial.zero()) == "0/1"
