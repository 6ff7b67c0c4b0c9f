"""
有限阿贝尔群测试：运算、阶、生成子群、连接集校验与字面量解析
"""

import pytest

from groups.abelian import (
    GroupSpec,
    add,
    elements,
    format_element,
    group,
    index_of,
    involutions,
    linear,
    neg,
    order_of,
    parse_element,
    parse_element_list,
    parse_group,
    reduce,
    scale,
    span,
    validate_connection_set,
)
from utils.errors import DimensionMismatch, ParseError


def test_group_spec():
    G = group(6, 2)
    assert G.order == 12
    assert G.rank == 2
    assert G.identity == (0, 0)
    assert str(G) == "Z6xZ2"


def test_group_spec_rejects_trivial_factor():
    with pytest.raises(ValueError):
        GroupSpec(factors=(6, 1))
    with pytest.raises(ValueError):
        GroupSpec(factors=())


def test_arithmetic():
    G = group(6, 2)
    assert add(G, (5, 1), (2, 1)) == (1, 0)
    assert add(group(4), (3,), (3,)) == (2,)
    assert scale(G, 3, (1, 1)) == (3, 1)
    assert scale(G, 0, (4, 1)) == (0, 0)
    assert scale(group(6), -1, (2,)) == (4,)
    assert neg(G, (1, 1)) == (5, 1)
    assert linear(G, [(-1, (1, 0)), (1, (4, 1))]) == (3, 1)
    assert reduce(G, (-1, 3)) == (5, 1)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        add(group(6, 2), (1,), (1, 0))
    with pytest.raises(DimensionMismatch):
        reduce(group(6), (1, 0))


def test_order_of():
    G = group(6, 2)
    assert order_of(group(6), (2,)) == 3
    assert order_of(G, (3, 1)) == 2
    assert order_of(G, (1, 1)) == 6
    assert order_of(G, (0, 0)) == 1


def test_lagrange():
    for G in (group(12), group(6, 2), group(2, 2, 3), group(4, 4)):
        for e in elements(G):
            assert G.order % order_of(G, e) == 0


def test_span():
    assert span(group(6), [(2,)]) == frozenset({(0,), (2,), (4,)})
    assert len(span(group(6, 2), [(1, 0), (0, 1)])) == 12
    assert span(group(6, 2), []) == frozenset({(0, 0)})


def test_elements_and_index():
    G = group(2, 3)
    assert elements(G) == ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2))
    for i, e in enumerate(elements(G)):
        assert index_of(G, e) == i


def test_involutions():
    assert involutions(group(6)) == [(3,)]
    assert involutions(group(6, 2)) == [(0, 1), (3, 0), (3, 1)]
    assert involutions(group(5)) == []


def test_validate_connection_set():
    report = validate_connection_set(group(6), [(1,), (5,), (2,), (4,), (3,)])
    assert report.inverse_closed and report.excludes_identity and report.generates
    assert report.involution_count == 1
    assert report.is_cayley_valid

    report = validate_connection_set(group(8), [(1,), (7,), (3,)])
    assert not report.inverse_closed

    report = validate_connection_set(group(12), [(2,), (10,), (4,), (8,), (6,)])
    assert report.inverse_closed and not report.generates

    report = validate_connection_set(group(6), [(0,), (3,)])
    assert not report.excludes_identity


def test_parse_group():
    assert parse_group("Z6xZ2").factors == (6, 2)
    assert parse_group("z6XZ2").factors == (6, 2)
    assert parse_group(" Z12 ").factors == (12,)


def test_parse_group_errors():
    with pytest.raises(ParseError) as exc:
        parse_group("Z6yZ2")
    assert exc.value.position == 2
    with pytest.raises(ParseError) as exc:
        parse_group("Z1")
    assert exc.value.position == 1
    with pytest.raises(ParseError):
        parse_group("")


def test_parse_element():
    assert parse_element("(1,0)") == (1, 0)
    assert parse_element("(7,3)", group(6, 2)) == (1, 1)
    assert parse_element("3") == (3,)
    assert parse_element("( 1 , -1 )", group(6, 2)) == (1, 1)


def test_parse_element_errors():
    with pytest.raises(ParseError) as exc:
        parse_element("(1,a)")
    assert exc.value.position == 3
    with pytest.raises(ParseError):
        parse_element("(1,0", group(6, 2))
    with pytest.raises(ParseError):
        parse_element("(1)", group(6, 2))


def test_parse_element_list():
    assert parse_element_list("(1);(5);(2)", group(6)) == [(1,), (5,), (2,)]
    with pytest.raises(ParseError) as exc:
        parse_element_list("(1);(x)")
    assert exc.value.position == 5


def test_format_element():
    assert format_element((1, 0)) == "(1,0)"
    assert format_element((3,)) == "(3)"
