"""
Diophantine 元组搜索

先建数对图（边 = 满足 a·b + n = x^k 的数对），再从每个顶点出发按升序扩展团。
建图可以按 a mod workers 分给多个进程，合并后排序，结果与串行完全一致。
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Set, Tuple

from .arith import exact_power_root
from .logger import get_logger


def _edges_for_residue(args: Tuple[int, int, int, int, int]) -> List[Tuple[int, int]]:
    """处理 a ≡ residue (mod step) 的所有 a，返回 (a, b) 边，a < b ≤ bound"""
    n, k, bound, residue, step = args
    edges = []
    for a in range(1 + residue, bound + 1, step):
        for b in range(a + 1, bound + 1):
            if exact_power_root(a * b + n, k) is not None:
                edges.append((a, b))
    return edges


def pair_graph(n: int, k: int, bound: int, workers: int = 1) -> Dict[int, Set[int]]:
    """
    构建数对图

    Args:
        n: 模数
        k: 幂次
        bound: 元素上界
        workers: 进程数，1 表示串行

    Returns:
        {a: {b > a 且 {a, b} 满足 D_k(n)}}
    """
    tasks = [(n, k, bound, r, workers) for r in range(workers)]
    if workers == 1:
        chunks = [_edges_for_residue(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_edges_for_residue, tasks))

    adjacency: Dict[int, Set[int]] = {}
    for chunk in chunks:
        for a, b in chunk:
            adjacency.setdefault(a, set()).add(b)
    get_logger().debug(
        f"数对图 n={n} k={k} bound={bound}: {sum(len(s) for s in adjacency.values())} 条边"
    )
    return adjacency


def _grow(clique: List[int], candidates: List[int], m: int,
          adjacency: Dict[int, Set[int]], out: List[Tuple[int, ...]]):
    if len(clique) == m:
        out.append(tuple(clique))
        return
    for idx, c in enumerate(candidates):
        neighbours = adjacency.get(c, set())
        _grow(clique + [c], [x for x in candidates[idx + 1:] if x in neighbours],
              m, adjacency, out)


def cliques(adjacency: Dict[int, Set[int]], m: int) -> List[Tuple[int, ...]]:
    """所有 m 元团，按字典序排列"""
    out: List[Tuple[int, ...]] = []
    for a in sorted(adjacency):
        _grow([a], sorted(adjacency[a]), m, adjacency, out)
    return out
