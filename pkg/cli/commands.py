#!/usr/bin/env python3
"""
命令行子命令：classify / oracle / construct / codes / sweep

标准输出只写命令结果（相同参数输出逐字节一致），日志写标准错误。
退出码：0 成功，1 输入错误，2 内部自检失败或扫描未通过。
"""

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

from loguru import logger
from pydantic import BaseModel, ValidationError, model_validator

from classify.classifier import admits_perfect_code, enumerate_all_codes, enumerate_identity_codes
from classify.diagnostics import necessary_conditions
from codes.base import CodeFamilyParams
from codes.factory import CodeFamilyFactory
from config.settings import settings
from graphs.constructions import build_family
from graphs.graph import Graph, cayley, export, is_perfect_code
from groups.abelian import format_element, parse_element, parse_element_list, parse_group
from oracle.exact_cover import enumerate_perfect_codes, find_perfect_code
from sweep.census import INVOLUTION_CHOICES
from sweep.harness import format_summary, run_sweep
from utils.config_validator import ConfigValidator
from utils.errors import InternalAssertionError, PerfectCodeError, UsageError
from utils.logger import LogMessages
from utils.report_utils import ReportUtils

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2

CLI_FAMILIES = ("gamma", "gamma-prime", "gamma-dprime", "gamma-k2")
CLI_NAME = {"plain": "gamma", "prime": "gamma-prime", "dprime": "gamma-dprime", "times-k2": "gamma-k2"}


class InstanceDescriptor(BaseModel):
    """命令行实例：群 + 连接集，或构造族 + (m, l, h)，二者恰取其一"""

    group: Optional[str] = None
    set: Optional[str] = None
    construction: Optional[str] = None
    m: Optional[int] = None
    l: Optional[int] = None
    h: Optional[int] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "InstanceDescriptor":
        has_group = self.group is not None or self.set is not None
        has_construction = self.construction is not None
        if has_group == has_construction:
            raise ValueError("必须且只能给出 --group/--set 或 --family/--m/--l/--h 其中一组")
        if has_group and (self.group is None or self.set is None):
            raise ValueError("--group 与 --set 必须同时给出")
        if has_construction and None in (self.m, self.l, self.h):
            raise ValueError("--family 需要同时给出 --m/--l/--h")
        return self

    def build_graph(self) -> Graph:
        if self.construction is not None:
            return build_family(self.construction, self.m, self.l, self.h)
        G = parse_group(self.group)
        return cayley(G, parse_element_list(self.set, G))


class _Parser(argparse.ArgumentParser):
    """用法错误统一转成退出码 1"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(data: Dict) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"


def _codes_as_literals(codes) -> List[List[str]]:
    return [[format_element(x) for x in code] for code in codes]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="perfect-codes", description="五度阿贝尔 Cayley 图的完美码工具")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("classify", help="判定是否存在完美码并列出含单位元的完美码")
    p.add_argument("--group", required=True, help='群规格，如 "Z6xZ2"')
    p.add_argument("--set", required=True, help='连接集，元素以 ";" 分隔，如 "(1);(5);(2);(4);(3)"')
    p.add_argument("--json", action="store_true", help="输出 JSON 判定")
    p.add_argument("--all-codes", action="store_true", help="同时列出全部完美码")

    p = sub.add_parser("oracle", help="用精确覆盖搜索完美码")
    p.add_argument("--group")
    p.add_argument("--set")
    p.add_argument("--family", choices=CLI_FAMILIES)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--enumerate", action="store_true", help="列出全部完美码")
    p.add_argument("--containing", help='只保留包含该顶点的完美码，如 "(0,0)"')

    p = sub.add_parser("construct", help="输出网格构造族")
    p.add_argument("--family", required=True, choices=CLI_FAMILIES)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--format", choices=("dot", "edgelist"), default="edgelist")

    p = sub.add_parser("codes", help="生成显式完美码族")
    p.add_argument("--prop", required=True, choices=CodeFamilyFactory.available())
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--a", type=int, required=True, choices=(-1, 1))
    p.add_argument("--t", required=True, help='t 向量，如 "01" 或 "0,1"')
    p.add_argument("--parametric", action="store_true", help="报告参数化集合与同余刻画是否一致")

    p = sub.add_parser("sweep", help="运行完整验收扫描")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--involutions", choices=INVOLUTION_CHOICES, default="all")
    p.add_argument("--report", help="JSON 报告路径，只给文件名时写到 REPORT_DIR（同名 .csv 写实例明细）")
    p.add_argument("--workers", type=int, default=None)
    return parser


def parse_bits(text: str) -> List[int]:
    cleaned = text.replace(",", "").replace(" ", "")
    if not cleaned or any(ch not in "01" for ch in cleaned):
        raise UsageError(f"t 向量只能由 0/1 组成: {text!r}")
    return [int(ch) for ch in cleaned]


def cmd_classify(args) -> int:
    G = parse_group(args.group)
    S = parse_element_list(args.set, G)
    verdict = admits_perfect_code(G, S)
    codes = enumerate_identity_codes(G, S, verdict)
    data = {
        "admits": verdict.admits,
        "case": verdict.case_tag,
        "m": verdict.m,
        "l": verdict.l,
        "h": verdict.h,
        "a_set": verdict.sign_set,
        "orientation": verdict.orientation,
        "codes_containing_identity": _codes_as_literals(codes),
    }
    if args.all_codes:
        data["all_codes"] = _codes_as_literals(enumerate_all_codes(G, S, codes))

    if args.json:
        sys.stdout.write(_dump(data))
        return EXIT_OK

    lines = [
        f"group: {G}",
        f"set: {';'.join(format_element(x) for x in S)}",
        f"admits: {'yes' if verdict.admits else 'no'}",
    ]
    if verdict.terminal_verdict:
        lines.append("reason: connection set has more than one involution")
    necessary_ok, necessary_errors = necessary_conditions(G, S)
    lines.append("necessary conditions: " + ("satisfied" if necessary_ok else "; ".join(necessary_errors)))
    if verdict.admits:
        lines.append(f"case: {verdict.case_tag}")
        lines.append(f"(m, l, h): ({verdict.m}, {verdict.l}, {verdict.h})")
        lines.append(f"sign set: {verdict.sign_set}")
        lines.append(f"orientation: {verdict.orientation}")
        if verdict.isomorphic_form:
            lines.append(f"isomorphic to: {verdict.isomorphic_form}")
        lines.append(f"cosets: {verdict.theorem2_case}")
        lines.append(f"codes containing identity: {len(codes)}")
        lines.extend("  {" + ", ".join(code) + "}" for code in data["codes_containing_identity"])
    if args.all_codes:
        lines.append(f"all codes: {len(data['all_codes'])}")
        lines.extend("  {" + ", ".join(code) + "}" for code in data["all_codes"])
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    try:
        descriptor = InstanceDescriptor(group=args.group, set=args.set, construction=args.family,
                                        m=args.m, l=args.l, h=args.h)
    except ValidationError as e:
        raise UsageError(e.errors()[0]["msg"]) from None
    graph = descriptor.build_graph()
    containing = None
    if args.containing is not None:
        G = parse_group(args.group) if args.group is not None else None
        key = parse_element(args.containing, G)
        try:
            containing = graph.index_of_key(key)
        except KeyError as e:
            raise UsageError(str(e)) from None

    data = {"vertices": graph.n, "degree": graph.regular_degree()}
    if args.enumerate:
        codes = enumerate_perfect_codes(graph, containing=containing)
        data["count"] = len(codes)
        data["codes"] = [graph.labels_of(code) for code in codes]
    else:
        if containing is None:
            code = find_perfect_code(graph)
        else:
            found = enumerate_perfect_codes(graph, containing=containing)
            code = found[0] if found else None
        data["found"] = code is not None
        data["code"] = graph.labels_of(code) if code is not None else None
    sys.stdout.write(_dump(data))
    return EXIT_OK


def cmd_construct(args) -> int:
    graph = build_family(args.family, args.m, args.l, args.h)
    sys.stdout.write(export(graph, args.format))
    return EXIT_OK


def cmd_codes(args) -> int:
    try:
        params = CodeFamilyParams(m=args.m, l=args.l, h=args.h, a=args.a, t=tuple(parse_bits(args.t)))
    except ValidationError as e:
        raise UsageError(e.errors()[0]["msg"]) from None
    family = CodeFamilyFactory.create_family(args.prop, params)
    coordinates = family.coordinates()
    graph = family.build_graph()
    data = {
        "prop": family.name,
        "family": CLI_NAME[family.graph_family],
        "params": params.model_dump(),
        "size": len(coordinates),
        "expected_size": family.expected_size(),
        "perfect": is_perfect_code(graph, family.vertex_set()),
        "code": [format_element(v) for v in coordinates],
    }
    if args.parametric:
        agree = family.parametric_agreement()
        data["parametric_agreement"] = agree
        data["parametric_size"] = len(family.parametric_set())
        if not agree:
            logger.warning(LogMessages.parametric_disagreement(family.name, str(params.model_dump())))
    sys.stdout.write(_dump(data))
    return EXIT_OK


def cmd_sweep(args) -> int:
    is_valid, errors_by_category = ConfigValidator.validate_all_configs()
    if not is_valid:
        ConfigValidator.print_config_summary()
        raise UsageError("配置无效，拒绝启动扫描")
    max_order = args.max_order if args.max_order is not None else settings.SWEEP_MAX_ORDER
    if max_order < 2:
        raise UsageError(f"--max-order 必须至少为 2，收到 {max_order}")
    if args.workers is not None and args.workers < 1:
        raise UsageError(f"--workers 必须至少为 1，收到 {args.workers}")

    summary, rows = run_sweep(max_order, args.involutions, args.workers)
    if args.report:
        report_file = ReportUtils.resolve_report_path(args.report, settings.REPORT_DIR)
        ReportUtils.save_json_report(summary.model_dump(), report_file, "扫描汇总")
        ReportUtils.save_csv_table(rows, ReportUtils.csv_path_for(report_file))
    sys.stdout.write(format_summary(summary))
    return EXIT_OK if summary.passed else EXIT_INTERNAL


COMMANDS = {
    "classify": cmd_classify,
    "oracle": cmd_oracle,
    "construct": cmd_construct,
    "codes": cmd_codes,
    "sweep": cmd_sweep,
}


def run(argv: Sequence[str]) -> int:
    """
    执行一条命令

    Args:
        argv: 不含程序名的参数列表

    Returns:
        退出码
    """
    try:
        args = build_parser().parse_args(list(argv))
        logger.debug(LogMessages.command_start(" ".join(argv)))
        return COMMANDS[args.command](args)
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except PerfectCodeError as e:
        logger.error(LogMessages.command_failed(" ".join(argv), str(e)))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InternalAssertionError as e:
        logger.error(LogMessages.command_failed(" ".join(argv), str(e)))
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
