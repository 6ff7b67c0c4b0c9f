"""
群模块
有限阿贝尔群（循环群直积）的规格、元素运算与字面量解析
"""

from .abelian import (
    ConnectionSetReport,
    Element,
    GroupSpec,
    add,
    elements,
    format_element,
    index_of,
    involutions,
    neg,
    order_of,
    parse_element,
    parse_element_list,
    parse_group,
    scale,
    span,
    validate_connection_set,
)

__all__ = [
    'GroupSpec',
    'Element',
    'ConnectionSetReport',
    'add',
    'scale',
    'neg',
    'order_of',
    'span',
    'elements',
    'index_of',
    'involutions',
    'validate_connection_set',
    'parse_group',
    'parse_element',
    'parse_element_list',
    'format_element',
]
