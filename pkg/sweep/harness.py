#!/usr/bin/env python3
"""
验收扫描

实例普查：每个连接集上比较判定结果、枚举结果与预言机；
码族扫描：三个码族在 PROP_SWEEP_M_VALUES × [1, PROP_SWEEP_MAX_L] 上逐个 t 向量验证；
φ 扫描：τ(h,l) | h 时 φ 是网格构造到标准形式的同构。
"""

import itertools
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel

from classify.classifier import admits_perfect_code, enumerate_identity_codes
from codes.base import CodeFamilyParams
from codes.factory import CodeFamilyFactory
from config.settings import settings
from graphs.constructions import VARIANT_CASE, verify_phi
from graphs.graph import cayley, is_perfect_code
from groups.abelian import GroupSpec, format_element, order_of
from oracle.exact_cover import enumerate_perfect_codes
from oracle.naive import naive_enumerate
from sweep.census import count_involutions, iter_connection_sets, iter_group_specs
from utils.errors import DegenerateParameters, NotIntegral, PerfectCodeError
from utils.logger import LogMessages, setup_logging

PASS = "PASS"
FAIL = "FAIL"
MULTI_INVOLUTION_ORACLE_BOUND = 36


class SweepSummary(BaseModel):
    """扫描汇总（不含耗时，保证相同参数输出一致）"""

    max_order: int
    involutions: str
    group_count: int = 0
    instance_count: int = 0
    admitting_count: int = 0
    case_counts: Dict[str, int] = {}
    enumeration_checked: int = 0
    naive_checked: int = 0
    both_signs_instances: List[str] = []
    prop_checks: int = 0
    prop_skipped: int = 0
    phi_skipped: int = 0
    parametric_disagreements: int = 0
    phi_checks: int = 0
    phi_not_integral: List[str] = []
    counterexamples: List[Dict] = []
    passed: bool = True

    def verdict(self) -> str:
        return PASS if self.passed else FAIL


def check_instance(factors: Tuple[int, ...], S: List[Tuple[int, ...]]) -> Dict:
    """
    单个实例的全部交叉检查

    Returns:
        一行报告；status 为 PASS 或 FAIL，detail 给出第一个不一致
    """
    G = GroupSpec(factors=factors)
    row = {
        "group": str(G),
        "set": ";".join(format_element(x) for x in S),
        "involutions": count_involutions(G, S),
        "admits": None,
        "oracle_admits": None,
        "case": None,
        "m": None,
        "l": None,
        "h": None,
        "a_set": "",
        "identity_codes": 0,
        "both_signs": False,
        "naive_checked": False,
        "enumeration_checked": False,
        "status": PASS,
        "detail": "",
    }
    try:
        verdict = admits_perfect_code(G, S)
        g = cayley(G, S)
        oracle_codes = enumerate_perfect_codes(g, containing=0)
        oracle_sets = {tuple(sorted(g.keys[v] for v in code)) for code in oracle_codes}
        row.update(admits=verdict.admits, oracle_admits=bool(oracle_sets), case=verdict.case_tag,
                   m=verdict.m, l=verdict.l, h=verdict.h,
                   a_set=",".join(str(a) for a in verdict.sign_set),
                   identity_codes=len(oracle_sets),
                   both_signs=len(verdict.sign_set) == 2)

        if verdict.admits != bool(oracle_sets):
            row.update(status=FAIL, detail=f"判定 {verdict.admits}，预言机 {bool(oracle_sets)}")
            return row

        if row["involutions"] == 1 and verdict.admits:
            generated = set(enumerate_identity_codes(G, S, verdict))
            row["enumeration_checked"] = True
            if generated != oracle_sets:
                row.update(status=FAIL,
                           detail=f"枚举得到 {len(generated)} 个含单位元的完美码，预言机 {len(oracle_sets)} 个")
                return row
            for w in verdict.witnesses:
                if (order_of(G, w.s) * order_of(G, w.sp)) % 2:
                    row.update(status=FAIL, detail="存在完美码但 o(s)·o(s′) 为奇数")
                    return row

        if row["involutions"] != 1 and G.order <= MULTI_INVOLUTION_ORACLE_BOUND and oracle_sets:
            row.update(status=FAIL, detail="多对合连接集上预言机找到了完美码")
            return row

        if g.n <= settings.NAIVE_ORACLE_MAX_VERTICES:
            row["naive_checked"] = True
            if enumerate_perfect_codes(g) != naive_enumerate(g):
                row.update(status=FAIL, detail="回溯枚举与朴素子集枚举不一致")
                return row
    except Exception as e:
        row.update(status=FAIL, detail=f"{type(e).__name__}: {e}")
    return row


def check_chunk(chunk: List[Tuple[int, Tuple[int, ...], List]]) -> List[Tuple[int, Dict]]:
    return [(index, check_instance(factors, S)) for index, factors, S in chunk]


def _init_worker(level: str) -> None:
    setup_logging(level, None)


def build_tasks(max_order: int, involution_choice: str) -> Tuple[int, List[Tuple[int, Tuple[int, ...], List]]]:
    """按规范顺序编号的实例列表"""
    tasks = []
    group_count = 0
    for G in iter_group_specs(max_order):
        group_count += 1
        for S in iter_connection_sets(G, involution_choice):
            tasks.append((len(tasks), G.factors, S))
    return group_count, tasks


def run_instances(tasks: List, workers: int) -> List[Dict]:
    """把实例分块分发给进程池/线程池，结果按实例编号重排"""
    chunk_size = max(1, settings.SWEEP_CHUNK_SIZE)
    chunks = [tasks[i:i + chunk_size] for i in range(0, len(tasks), chunk_size)]
    results: List[Tuple[int, Dict]] = []
    if workers <= 1 or not chunks:
        for chunk in chunks:
            results.extend(check_chunk(chunk))
    else:
        if settings.SWEEP_EXECUTOR == "thread":
            executor = ThreadPoolExecutor(max_workers=workers)
        else:
            executor = ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                           initargs=(settings.LOG_LEVEL,))
        with executor:
            futures = [executor.submit(check_chunk, chunk) for chunk in chunks]
            done = 0
            for future in as_completed(futures):
                results.extend(future.result())
                done += 1
                if done % 50 == 0 or done == len(futures):
                    logger.info(LogMessages.sweep_progress(done, len(futures)))
    results.sort(key=lambda item: item[0])
    return [row for _, row in results]


def _t_vectors(count: int):
    return itertools.product((0, 1), repeat=count)


def run_prop_sweep(summary: SweepSummary, m_values: Sequence[int], max_l: int) -> None:
    """三个码族的逐 t 向量验证与 φ 检查"""
    graphs = {}
    for m in m_values:
        for l in range(1, max_l + 1):
            for h in range(m):
                for prop in CodeFamilyFactory.available():
                    for a in (1, -1):
                        family = CodeFamilyFactory.create_family(prop, CodeFamilyParams(m=m, l=l, h=h, a=a))
                        _, errors = family.check_hypotheses()
                        if not _only_t_missing(errors):
                            continue
                        key = (family.graph_family, m, l, h)
                        try:
                            if key not in graphs:
                                graphs[key] = family.build_graph()
                        except DegenerateParameters as e:
                            summary.prop_skipped += 1
                            logger.warning(f"⚠️ 码族 {prop} 参数 ({m},{l},{h}) 构造退化，跳过: {e}")
                            continue
                        graph = graphs[key]
                        for t in _t_vectors(family.r_count()):
                            member = CodeFamilyFactory.create_family(prop, family.params.with_t(t))
                            code = member.vertex_set()
                            summary.prop_checks += 1
                            if len(code) != member.expected_size() or not is_perfect_code(graph, code):
                                summary.passed = False
                                summary.counterexamples.append({
                                    "kind": f"prop {prop}", "m": m, "l": l, "h": h, "a": a, "t": list(t),
                                    "size": len(code), "expected_size": member.expected_size(),
                                })
                                logger.error(LogMessages.mismatch(f"码族 {prop} ({m},{l},{h},a={a},t={list(t)})",
                                                                  "生成的集合不是完美码"))
                            elif not member.parametric_agreement():
                                summary.parametric_disagreements += 1
                                logger.debug(LogMessages.parametric_disagreement(prop, f"({m},{l},{h},a={a},t={list(t)})"))
                for variant in VARIANT_CASE:
                    try:
                        ok = verify_phi(variant, m, l, h)
                    except NotIntegral:
                        label = f"({m},{l},{h})"
                        if label not in summary.phi_not_integral:
                            summary.phi_not_integral.append(label)
                        continue
                    except PerfectCodeError as e:
                        summary.phi_skipped += 1
                        logger.debug(f"φ 检查跳过 {variant} ({m},{l},{h}): {e}")
                        continue
                    summary.phi_checks += 1
                    if not ok:
                        summary.passed = False
                        summary.counterexamples.append({"kind": f"phi {variant}", "m": m, "l": l, "h": h})


def _only_t_missing(errors: List[str]) -> bool:
    """前提只差 t 向量长度（参数扫描时 t 为空）"""
    return len(errors) == 1 and errors[0].startswith("t 向量长度")


def run_sweep(max_order: int, involution_choice: str = "all", workers: Optional[int] = None,
              m_values: Optional[Sequence[int]] = None, max_l: Optional[int] = None) -> Tuple[SweepSummary, List[Dict]]:
    """
    运行完整验收扫描

    Args:
        max_order: 普查的最大群阶
        involution_choice: 连接集对合个数 1/3/5/all
        workers: 并行数，默认 SWEEP_WORKERS
        m_values, max_l: 码族扫描范围，默认取配置

    Returns:
        (汇总, 每个实例一行的明细)
    """
    workers = settings.SWEEP_WORKERS if workers is None else workers
    m_values = settings.PROP_SWEEP_M_VALUES if m_values is None else m_values
    max_l = settings.PROP_SWEEP_MAX_L if max_l is None else max_l
    started = time.time()

    group_count, tasks = build_tasks(max_order, involution_choice)
    logger.info(LogMessages.sweep_start(max_order, len(tasks), workers))
    rows = run_instances(tasks, workers)

    summary = SweepSummary(max_order=max_order, involutions=involution_choice,
                           group_count=group_count, instance_count=len(rows))
    for row in rows:
        if row["admits"]:
            summary.admitting_count += 1
            summary.case_counts[row["case"]] = summary.case_counts.get(row["case"], 0) + 1
        summary.enumeration_checked += int(row["enumeration_checked"])
        summary.naive_checked += int(row["naive_checked"])
        label = f"{row['group']} {{{row['set']}}}"
        if row["both_signs"]:
            summary.both_signs_instances.append(label)
            logger.warning(LogMessages.both_signs_valid(label))
        if row["status"] != PASS:
            summary.passed = False
            summary.counterexamples.append({"kind": "instance", "instance": label, "detail": row["detail"]})
            logger.error(LogMessages.mismatch(label, row["detail"]))

    run_prop_sweep(summary, m_values, max_l)
    if summary.parametric_disagreements:
        logger.warning(f"⚠️ 参数化集合与同余刻画不一致的码共 {summary.parametric_disagreements} 个（明细见 DEBUG 日志）")
    for label in summary.phi_not_integral:
        logger.warning(f"⚠️ 参数 {label}: τ(h,l) 不整除 h，φ 不可用")

    logger.info(LogMessages.sweep_complete(summary.passed, time.time() - started))
    return summary, rows


def format_summary(summary: SweepSummary) -> str:
    """标准输出上的汇总文本"""
    lines = [
        f"{summary.verdict()}",
        f"groups: {summary.group_count}",
        f"instances: {summary.instance_count}",
        f"admitting: {summary.admitting_count}",
        "cases: " + ", ".join(f"{k}={v}" for k, v in sorted(summary.case_counts.items())),
        f"enumeration checked: {summary.enumeration_checked}",
        f"naive oracle checked: {summary.naive_checked}",
        f"sign set of size 2: {len(summary.both_signs_instances)}",
        f"family codes checked: {summary.prop_checks}",
        f"family codes skipped: {summary.prop_skipped}",
        f"parametric disagreements: {summary.parametric_disagreements}",
        f"phi isomorphisms checked: {summary.phi_checks}",
        f"phi not integral: {len(summary.phi_not_integral)}",
        f"phi skipped: {summary.phi_skipped}",
    ]
    for item in summary.counterexamples:
        lines.append("counterexample: " + ", ".join(f"{k}={v}" for k, v in item.items()))
    return "\n".join(lines) + "\n"
