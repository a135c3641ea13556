"""
程序入口 - 命令行工具

退出码：0 = 性质成立 / 找到结果；1 = 性质不成立 / 未找到；2 = 用法或定义域错误
"""

import sys
import json
import argparse
from typing import List, Optional

from . import __version__
from .config import activate, get_config_summary, load_config
from .errors import NormTupleError, TheoremViolation
from .field import field_new, parse_element, split_type
from .ideal import (
    find_generator_bounded, ideal_from_generators, ideal_of_norm, prime_above,
)
from .logger import get_logger
from .report import ReportFormatter
from .tuples import (
    construct_pair_ideals, divisibility_check, extend_tuple, find_principal_generators,
    norm_decompose, search_tuples, verify_tuple,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def parse_csv(text: str) -> List[int]:
    """逗号分隔的整数列表"""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _emit(args, data, text: str):
    if args.json:
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    """构建参数解析器"""
    parser = argparse.ArgumentParser(
        prog='normtuple',
        description='Diophantine 元组与二次域整理想',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
命令说明:
  verify          校验 D(n) / D_k(n) 性质
  decompose       κ 分解：元组 = κ × 范数元组
  construct-pair  互素数对的显式理想 <a, x+sqrt(n)>
  check-pair      素数幂整除性与分裂性校验
  split           素数在 Q(sqrt(n)) 中的分解
  ideal           给定范数 / 素数之上 / 生成元的理想
  search          有界搜索 D_k(n) m 元组
  extend          把元组扩展一个元素

示例:
  normtuple verify --n 13 --tuple 2,6,18
  normtuple verify --n 1 --k 3 --tuple 2,171,25326
  normtuple construct-pair --n 5 --a 4 --b 11 --json
  normtuple ideal --n -3 --of-norm 2
  normtuple ideal --n -5 --gens "2;1+sqrt(-5)" --principal
  normtuple search --n 1 --k 2 --m 4 --bound 200

环境变量:
  NORMTUPLE_FACTOR_BOUND  试除上界（默认 1000000）
  NORMTUPLE_WORKERS       search 的并行进程数
  NORMTUPLE_HOME          配置与日志目录（默认 ~/.normtuple）
        """
    )
    parser.add_argument('-v', '--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--show-config', action='store_true', help='显示当前配置信息')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='输出 JSON')
    common.add_argument('--verbose', action='store_true', help='日志同时输出到 stderr')
    common.add_argument('--factor-bound', type=int, help='试除上界（覆盖环境变量和配置文件）')

    sub = parser.add_subparsers(dest='verb', metavar='VERB')

    p = sub.add_parser('verify', parents=[common], help='校验 D_k(n) 性质')
    p.add_argument('--n', type=int, required=True, help='模数')
    p.add_argument('--k', type=int, default=2, help='幂次（默认 2）')
    p.add_argument('--tuple', type=parse_csv, required=True, help='逗号分隔的元素')

    p = sub.add_parser('decompose', parents=[common], help='κ 分解')
    p.add_argument('--n', type=int, required=True, help='模数（须为基本判别式）')
    p.add_argument('--tuple', type=parse_csv, required=True, help='逗号分隔的元素')
    p.add_argument('--principal', action='store_true', help='同时搜索见证理想的生成元')
    p.add_argument('--generator-bound', type=int, help='生成元搜索盒半径')

    p = sub.add_parser('construct-pair', parents=[common], help='互素数对的理想构造')
    p.add_argument('--n', type=int, required=True, help='模数（无平方因子）')
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--b', type=int, required=True)

    p = sub.add_parser('check-pair', parents=[common], help='整除性与分裂性校验')
    p.add_argument('--n', type=int, required=True, help='模数')
    p.add_argument('--a', type=int, required=True)
    p.add_argument('--b', type=int, required=True)

    p = sub.add_parser('split', parents=[common], help='素数的分解类型')
    p.add_argument('--n', type=int, required=True, help='模数')
    p.add_argument('--prime', type=int, required=True)

    p = sub.add_parser('ideal', parents=[common], help='构造理想')
    p.add_argument('--n', type=int, required=True, help='模数')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--of-norm', type=int, help='范数为该值的理想')
    group.add_argument('--prime', type=int, help='该素数之上的素理想')
    group.add_argument('--gens', help='以分号分隔的生成元，如 "4;7+sqrt(5)"')
    p.add_argument('--principal', action='store_true', help='搜索生成元')
    p.add_argument('--generator-bound', type=int, help='生成元搜索盒半径')

    p = sub.add_parser('search', parents=[common], help='搜索 D_k(n) m 元组')
    p.add_argument('--n', type=int, required=True, help='模数')
    p.add_argument('--k', type=int, default=2, help='幂次（默认 2）')
    p.add_argument('--m', type=int, required=True, help='元组大小')
    p.add_argument('--bound', type=int, required=True, help='元素上界')
    p.add_argument('--workers', type=int, help='并行进程数')

    p = sub.add_parser('extend', parents=[common], help='扩展元组')
    p.add_argument('--n', type=int, required=True, help='模数')
    p.add_argument('--k', type=int, default=2, help='幂次（默认 2）')
    p.add_argument('--tuple', type=parse_csv, required=True, help='逗号分隔的元素')
    p.add_argument('--bound', type=int, required=True, help='新元素上界')

    return parser


def _cmd_verify(args, config) -> int:
    report = verify_tuple(args.tuple, args.n, args.k)
    _emit(args, ReportFormatter.verify_to_dict(report), ReportFormatter.verify_to_text(report))
    return EXIT_OK if report.valid else EXIT_FAIL


def _cmd_decompose(args, config) -> int:
    dec = norm_decompose(args.tuple, args.n)
    generators = None
    if args.principal:
        generators = find_principal_generators(dec, config.generator_bound)
    _emit(args, ReportFormatter.decompose_to_dict(dec, generators),
          ReportFormatter.decompose_to_text(dec, generators))
    return EXIT_OK


def _cmd_construct(args, config) -> int:
    pc = construct_pair_ideals(args.a, args.b, args.n)
    _emit(args, ReportFormatter.construct_to_dict(pc), ReportFormatter.construct_to_text(pc))
    return EXIT_OK


def _cmd_check_pair(args, config) -> int:
    rep = divisibility_check(args.a, args.b, args.n)
    _emit(args, ReportFormatter.divisibility_to_dict(rep), ReportFormatter.divisibility_to_text(rep))
    return EXIT_OK if rep.ok else EXIT_FAIL


def _cmd_split(args, config) -> int:
    F = field_new(args.n)
    st = split_type(args.prime, F)
    primes = prime_above(F, args.prime)
    _emit(args, ReportFormatter.split_to_dict(args.prime, F, st, primes),
          ReportFormatter.split_to_text(args.prime, F, st, primes))
    return EXIT_OK


def _cmd_ideal(args, config) -> int:
    F = field_new(args.n)
    if args.prime is not None:
        primes = prime_above(F, args.prime)
        st = split_type(args.prime, F)
        _emit(args, ReportFormatter.split_to_dict(args.prime, F, st, primes),
              ReportFormatter.split_to_text(args.prime, F, st, primes))
        return EXIT_OK

    if args.of_norm is not None:
        I = ideal_of_norm(F, args.of_norm)
        if I is None:
            _emit(args, {"norm": args.of_norm, "d": F.d, "ideal": None},
                  f"no integral ideal of norm {args.of_norm} in Q(sqrt({F.d}))")
            return EXIT_FAIL
    else:
        gens = [parse_element(F, part) for part in args.gens.split(";") if part.strip()]
        I = ideal_from_generators(F, gens)

    data = {"d": F.d, "ideal": ReportFormatter.ideal_to_dict(I)}
    text = f"{ReportFormatter.ideal_to_text(I)} in {ReportFormatter.field_to_text(F)}, norm {I.norm}"
    if not args.principal:
        _emit(args, data, text)
        return EXIT_OK

    g = find_generator_bounded(I, config.generator_bound)
    data["generator"] = ReportFormatter.element_to_text(g) if g is not None else None
    if g is None:
        text += f"\n  no generator with |u|, |v| <= {config.generator_bound}"
    else:
        text += f"\n  generated by {g}"
    _emit(args, data, text)
    return EXIT_OK if g is not None else EXIT_FAIL


def _cmd_search(args, config) -> int:
    found = search_tuples(args.n, args.k, args.m, args.bound, config.workers)
    _emit(args, ReportFormatter.search_to_dict(found),
          ReportFormatter.search_to_text(args.n, args.k, args.m, args.bound, found))
    return EXIT_OK if found else EXIT_FAIL


def _cmd_extend(args, config) -> int:
    extensions = extend_tuple(args.tuple, args.n, args.k, args.bound)
    elements = sorted(args.tuple)
    _emit(args, ReportFormatter.extend_to_dict(elements, extensions),
          ReportFormatter.extend_to_text(elements, args.n, args.k, args.bound, extensions))
    return EXIT_OK if extensions else EXIT_FAIL


COMMANDS = {
    'verify': _cmd_verify,
    'decompose': _cmd_decompose,
    'construct-pair': _cmd_construct,
    'check-pair': _cmd_check_pair,
    'split': _cmd_split,
    'ideal': _cmd_ideal,
    'search': _cmd_search,
    'extend': _cmd_extend,
}


def main(argv: Optional[List[str]] = None) -> int:
    """主函数"""
    parser = build_parser()
    args = parser.parse_args(argv)
    logger = get_logger()

    try:
        config = load_config(
            cli_factor_bound=getattr(args, 'factor_bound', None),
            cli_workers=getattr(args, 'workers', None),
            cli_generator_bound=getattr(args, 'generator_bound', None),
        )
    except NormTupleError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.show_config:
        print(get_config_summary(config))
        return EXIT_OK

    if args.verb is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    if args.verbose:
        logger.enable_console()
    activate(config)
    logger.info(f"执行命令 {args.verb}")

    try:
        return COMMANDS[args.verb](args, config)
    except TheoremViolation as e:
        logger.exception(f"命令 {args.verb} 定理校验失败: {e}")
        print(f"theorem violation: {e}", file=sys.stderr)
        return EXIT_FAIL
    except NormTupleError as e:
        logger.info(f"命令 {args.verb} 失败: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        activate(None)


if __name__ == '__main__':
    sys.exit(main())
