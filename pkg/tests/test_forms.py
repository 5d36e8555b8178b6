"""Order relation: spec examples, order axioms, oracle cross-checks."""

import itertools

import pytest
from hypothesis import given, strategies as st

from surreal import Form, Genealogy, Ordering
from surreal.engine import Stats
from surreal.errors import DepthLimitError
from surreal.forms import (
    _ge_spine, _ge_spine_simulated, cmp, eq, ge, gt, is_number, le, lt, ne,
    render_form,
)

from _reference import ge_ref, node_frac
from conftest import nodes_to_generation


@pytest.fixture(scope="module")
def basics(tree):
    zero = tree.root()
    one = zero.right_child()
    return zero, one


def test_ge_zero_zero(basics):
    zero, _ = basics
    assert ge(zero, zero) is True


def test_ge_one_zero_and_converse(basics):
    zero, one = basics
    assert ge(one, zero) is True
    assert ge(zero, one) is False


def test_eq_doubled_option_form_equals_two(tree, basics):
    _, one = basics
    two = one.right_child()
    assert eq(Form((one, one), ()), two)


def test_cmp_half_less_than_one(tree, basics):
    zero, one = basics
    half = Form((zero,), (one,))
    assert cmp(half, one) is Ordering.LESS


def test_derived_comparisons(basics):
    zero, one = basics
    assert le(zero, one) and lt(zero, one)
    assert gt(one, zero) and not gt(zero, zero)
    assert ne(zero, one) and not ne(one, one)


def test_is_number_examples(tree, basics):
    zero, one = basics
    assert is_number(Form())
    assert not is_number(Form((zero,), (zero,)))
    assert is_number(Form((zero,), (one,)))


def test_depth_guard_catches_cyclic_form():
    f = Form()
    f.left = (f,)
    with pytest.raises(DepthLimitError):
        ge(f, f)


def test_stats_counting_matches_reference(tree):
    nodes = nodes_to_generation(tree, 3)
    for x, y in itertools.product(nodes, repeat=2):
        counter = [0]
        expected = ge_ref(x, y, counter)
        stats = Stats()
        assert ge(x, y, stats) is expected
        assert stats.ge_calls == counter[0], (x, y)


@given(st.integers(-60, 60), st.integers(-60, 60))
def test_spine_closed_form_matches_simulation(a, b):
    assert _ge_spine(a, b) == _ge_spine_simulated(a, b)


_spine_tree = Genealogy()


@given(st.integers(-25, 25), st.integers(-25, 25))
def test_spine_fast_path_matches_plain_recursion(a, b):
    x, y = _spine_tree.integer(a), _spine_tree.integer(b)
    counter = [0]
    expected = ge_ref(x, y, counter)
    stats = Stats()
    assert ge(x, y, stats) is expected
    assert stats.ge_calls == counter[0]


# -- order axioms over the corpus the engine actually produces -------------


@pytest.fixture(scope="module")
def derived_corpus(engine, tree):
    """All canonicals of generation <= 3 plus the forms from their
    pairwise sums and products (structure-rich, duplicate options etc.)."""
    nodes = nodes_to_generation(tree, 3)
    forms = list(nodes)
    for x, y in itertools.product(nodes, repeat=2):
        forms.append(engine.plus_form(x, y))
        forms.append(engine.times_form(x, y))
    return nodes, forms


def test_reflexivity(derived_corpus):
    _, forms = derived_corpus
    for f in forms:
        assert ge(f, f), render_form(f)


def test_antisymmetry_up_to_equivalence(tree):
    nodes = nodes_to_generation(tree, 4)
    for x, y in itertools.product(nodes, repeat=2):
        both = ge(x, y) and ge(y, x)
        assert both == eq(x, y)
        if both:
            assert x is y  # canonicals are unique representatives


def test_totality(derived_corpus):
    nodes, _ = derived_corpus
    for x, y in itertools.product(nodes, repeat=2):
        results = [lt(x, y), eq(x, y), gt(x, y)]
        assert results.count(True) == 1


def test_transitivity_generation_4(tree):
    nodes = nodes_to_generation(tree, 4)
    le_matrix = {}
    for x, y in itertools.product(nodes, repeat=2):
        le_matrix[x, y] = le(x, y)
    for x, y, z in itertools.product(nodes, repeat=3):
        if le_matrix[x, y] and le_matrix[y, z]:
            assert le_matrix[x, z]


def test_cmp_agrees_with_dyadic_values_generation_6(tree):
    nodes = nodes_to_generation(tree, 6)
    for x, y in itertools.product(nodes, repeat=2):
        order = cmp(x, y)
        vx, vy = node_frac(x), node_frac(y)
        if vx < vy:
            assert order is Ordering.LESS
        elif vx == vy:
            assert order is Ordering.EQUAL
        else:
            assert order is Ordering.GREATER


def test_render_form_ascii():
    assert render_form(Form(), ascii_brackets=True) == "<|>"
