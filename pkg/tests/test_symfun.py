from fractions import Fraction
from math import prod

from hypothesis import given, settings, strategies as st

from tcw.symfun import (SymmetricSeries, canonical, conjugate, elementary_in_monomials,
                        format_linear, monomial_to_elementary, parse, partitions, render,
                        todd_coefficients)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15]


def test_partition_counts_and_order():
    assert [len(partitions(n)) for n in range(8)] == PARTITION_COUNTS
    assert partitions(4) == ((1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,))
    assert [render(p) for p in partitions(3)] == ["c1^3", "c1*c2", "c3"]


def test_render_parse():
    assert render((2, 1, 1)) == "c1^2*c2"
    assert render(()) == "1"
    assert parse("c2*c1^2") == (2, 1, 1)
    assert parse("c1*c1*c2") == (2, 1, 1)
    for bad in ("x1", "c0", "c1^0", "c"):
        try:
            parse(bad)
        except ValueError:
            continue
        raise AssertionError(bad)


def test_format_linear():
    assert format_linear([(3, "c1^2"), (-1, "c2"), (5, "")]) == "3*c1^2 - c2 + 5"
    assert format_linear([(0, "c1")]) == "0"
    assert format_linear([(-1, "g1"), (Fraction(1, 2), "")]) == "-g1 + 1/2"


def test_todd_coefficients():
    assert todd_coefficients(4) == (1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720))


partition_st = st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions(n)))


@given(partition_st)
def test_render_round_trip(p):
    assert parse(render(p)) == p
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


def _monomial_value(lam, xs):
    # m_lam(xs) summed over distinct rearrangements of the exponent vector
    from itertools import permutations
    exps = set(permutations(lam + (0,) * (len(xs) - len(lam))))
    return sum(prod(x ** e for x, e in zip(xs, ex)) for ex in exps)


def _elementary_value(k, xs):
    from itertools import combinations
    return sum(prod(c) for c in combinations(xs, k))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.sampled_from(partitions(n)),
    st.lists(st.integers(-4, 4), min_size=n, max_size=n))))
def test_monomial_to_elementary_numerically(case):
    n, lam, xs = case
    expansion = monomial_to_elementary({lam: 1}, n)
    got = sum(c * prod(_elementary_value(k, xs) for k in mu) for mu, c in expansion.items())
    assert got == _monomial_value(lam, xs)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.just(n), st.sampled_from(partitions(n)),
    st.lists(st.integers(-3, 3), min_size=n, max_size=n))))
def test_elementary_in_monomials_numerically(case):
    n, mu, xs = case
    got = sum(c * _monomial_value(lam, xs) for lam, c in elementary_in_monomials(mu, n))
    assert got == prod(_elementary_value(k, xs) for k in mu)


def test_series_product():
    # prod (1 + x_i) truncated is the sum of the elementary functions
    s = SymmetricSeries.product_of([1, 1], 3)
    assert s.coeffs == {(): 1, (1,): 1, (1, 1): 1, (1, 1, 1): 1}
    assert canonical((0, 2, 1, 0)) == (2, 1)
