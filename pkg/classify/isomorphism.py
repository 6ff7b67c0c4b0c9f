#!/usr/bin/env python3
"""
s0 落在 ⟨s, s′⟩ 内部、却不是 (m/2)s、(o(s′)/2)s′ 或二者之和时的判定

这类表示读不出三类情形之一，改为与同阶的网格构造 Γ × K2、Γ′、Γ″ 做图同构匹配。
只尝试至少有一个 a 满足条件的参数，先比较邻接谱，谱相同再用 VF2++ 求映射。
含单位元的完美码：网格上的码族平移到锚点，再经同构映射搬到 Cayley 图上。
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Set, Tuple

import networkx as nx
import numpy as np
from loguru import logger

from codes.base import CodeFamilyParams
from codes.factory import CodeFamilyFactory
from config.settings import settings
from graphs.constructions import GridVertex, build_family, grid_translate
from graphs.graph import Graph, adjacency_spectrum, cayley, to_networkx
from groups.abelian import Element, GroupSpec, elements, format_element, index_of
from utils.conditions import CASES, case_holds
from utils.errors import DegenerateParameters, EnumerationTooLarge

CASE_FAMILY = {"I": "gamma-k2", "II": "gamma-prime", "III": "gamma-dprime"}
CASE_CODE_FAMILY = {"I": "2.3", "II": "2.7", "III": "2.10"}
CASE_LABEL = {"I": "Γ×K2", "II": "Γ′", "III": "Γ″"}

SPECTRUM_TOLERANCE = 1e-6


@dataclass(frozen=True)
class CanonicalForm:
    """一个满足条件的网格构造"""
    case: str
    m: int
    l: int
    h: int
    signs: Tuple[int, ...]
    grid: Graph
    nx_grid: nx.Graph
    spectrum: np.ndarray

    def describe(self) -> str:
        return f"{CASE_LABEL[self.case]}({self.m},{self.l},{self.h})"


@dataclass(frozen=True)
class CanonicalMatch:
    """
    Cay(G, S) 与网格构造之间的同构

    Attributes:
        form: 网格构造
        mapping: 网格顶点下标 -> Cayley 图顶点下标
    """
    form: CanonicalForm
    mapping: Dict[int, int]


def admissible_parameters(order: int) -> List[Tuple[str, int, int, int, Tuple[int, ...]]]:
    """
    顶点数为 order、且至少一个 a 满足该情形全部条件的 (case, m, l, h, signs)

    顺序：情形 I、II、III，m 升序，h 升序。
    """
    result = []
    for case in CASES:
        if case == "I" and order % 2:
            continue
        cells = order // 2 if case == "I" else order
        for m in range(6, cells + 1, 6):
            if cells % m:
                continue
            l = cells // m
            for h in range(m):
                signs = tuple(a for a in (-1, 1) if case_holds(case, m, l, h, a))
                if signs:
                    result.append((case, m, l, h, signs))
    return result


@lru_cache(maxsize=None)
def canonical_forms(order: int) -> Tuple[CanonicalForm, ...]:
    """构造 admissible_parameters(order) 中的全部网格图（退化参数跳过）"""
    forms = []
    for case, m, l, h, signs in admissible_parameters(order):
        try:
            grid = build_family(CASE_FAMILY[case], m, l, h)
        except DegenerateParameters as e:
            logger.debug(f"跳过退化的标准形式 {CASE_LABEL[case]}({m},{l},{h}): {e}")
            continue
        forms.append(CanonicalForm(case=case, m=m, l=l, h=h, signs=signs, grid=grid,
                                   nx_grid=to_networkx(grid), spectrum=adjacency_spectrum(grid)))
    return tuple(forms)


def match_canonical_forms(G: GroupSpec, S: List[Element], first_only: bool = False) -> List[CanonicalMatch]:
    """
    找出与 Cay(G, S) 同构的满足条件的网格构造

    Args:
        first_only: 找到第一个就返回

    Returns:
        按 canonical_forms 顺序排列的匹配
    """
    target = cayley(G, S)
    spectrum = adjacency_spectrum(target)
    nx_target = None
    matches = []
    for form in canonical_forms(G.order):
        if not np.allclose(spectrum, form.spectrum, atol=SPECTRUM_TOLERANCE):
            continue
        if nx_target is None:
            nx_target = to_networkx(target)
        mapping = nx.vf2pp_isomorphism(form.nx_grid, nx_target)
        if mapping is None:
            continue
        logger.debug(f"{G} {[format_element(x) for x in S]} 同构于 {form.describe()}")
        matches.append(CanonicalMatch(form=form, mapping=mapping))
        if first_only:
            break
    return matches


def _family_codes(form: CanonicalForm) -> Set[FrozenSet[GridVertex]]:
    """网格构造上全部符号、全部 t 向量给出的码（网格坐标）"""
    prop = CASE_CODE_FAMILY[form.case]
    codes = set()
    for a in form.signs:
        base = CodeFamilyFactory.create_family(prop, CodeFamilyParams(m=form.m, l=form.l, h=form.h, a=a))
        count = base.r_count()
        if count > settings.ENUMERATION_MAX_COSETS:
            raise EnumerationTooLarge(
                f"{form.describe()} 的 t 向量长度 {count} 超过上限 {settings.ENUMERATION_MAX_COSETS}（ENUMERATION_MAX_COSETS）"
            )
        for t in itertools.product((0, 1), repeat=count):
            member = CodeFamilyFactory.create_family(prop, base.params.with_t(t))
            codes.add(frozenset(member.coordinates()))
    return codes


def _translate(form: CanonicalForm, vertex: GridVertex, source: GridVertex, anchor: GridVertex) -> GridVertex:
    """把 source 移到 anchor 的群平移作用在 vertex 上；带层号时同时翻转层"""
    moved = grid_translate(form.m, form.l, form.h, vertex, anchor[0] - source[0], anchor[1] - source[1])
    if len(vertex) == 3:
        return moved[:2] + ((moved[2] + anchor[2] - source[2]) % 2,)
    return moved


def codes_through(match: CanonicalMatch, G: GroupSpec) -> Set[FrozenSet[Element]]:
    """经同构映射得到的 Cay(G, S) 上全部含单位元的完美码"""
    form = match.form
    inverse = {target: grid_v for grid_v, target in match.mapping.items()}
    anchor = form.grid.keys[inverse[index_of(G, G.identity)]]
    verts = elements(G)

    result = set()
    for code in _family_codes(form):
        for source in code:
            aligned = (_translate(form, v, source, anchor) for v in code)
            result.add(frozenset(
                verts[match.mapping[form.grid.index_of_key(v)]]
                for v in aligned
            ))
    return result
