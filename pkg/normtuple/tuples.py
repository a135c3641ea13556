"""
Diophantine 元组层

D(n) / D_k(n) 性质的校验、κ 分解（每个元组要么是范数元组，要么是 2 倍的范数元组）、
互素数对的显式理想构造，以及有界搜索与扩展。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, prod
from typing import Dict, Iterable, List, Optional, Tuple, Union

from sympy import isprime

from .arith import exact_power_root, factorize, fundamental_discriminant, isqrt, is_squarefree
from .errors import DomainError, NotAPairError, PreconditionError, TheoremViolation
from .field import AlgInt, QuadField, SplitKind, alpha_from_pair, field_new, split_type
from .ideal import (
    IdealHNF, find_generator_bounded, ideal_from_generators, ideal_mul,
    ideal_of_norm, principal_ideal,
)
from .logger import get_logger
from .search import cliques, pair_graph


@dataclass(frozen=True)
class DiophTuple:
    """
    已校验的 D_k(n) 元组

    witnesses 按 1 起始的下标记录 (i, j, x)，满足 a_i·a_j + n = x^k
    """
    n: int
    k: int
    elements: Tuple[int, ...]
    witnesses: Tuple[Tuple[int, int, int], ...]

    @property
    def m(self) -> int:
        return len(self.elements)

    def witness(self, i: int, j: int) -> int:
        for wi, wj, x in self.witnesses:
            if (wi, wj) == (i, j):
                return x
        raise KeyError((i, j))

    def witness_values(self) -> List[int]:
        return [x for _, _, x in self.witnesses]


@dataclass(frozen=True)
class VerifyReport:
    """verify_tuple 的结果：成功时带 dioph_tuple，失败时带第一个不满足的数对"""
    valid: bool
    n: int
    k: int
    elements: Tuple[int, ...]
    dioph_tuple: Optional[DiophTuple] = None
    failing_pair: Optional[Tuple[int, int]] = None
    failing_value: Optional[int] = None


@dataclass(frozen=True)
class NormDecomposition:
    """
    κ 分解：elements[i] = κ · N(witness_ideals[i])
    """
    n: int
    kappa: int
    elements: Tuple[int, ...]
    base_tuple: Tuple[int, ...]
    witness_ideals: Tuple[IdealHNF, ...]

    @property
    def halved(self) -> bool:
        return self.kappa == 2

    @property
    def effective_modulus(self) -> Fraction:
        """基元组满足的（有理）模数 n/κ²"""
        return Fraction(self.n, self.kappa * self.kappa)

    @property
    def modulus_note(self) -> str:
        return str(self.effective_modulus)


@dataclass(frozen=True)
class GeneralKappa:
    """任意非退化模数下数对的 κ：(t1/κ, t2/κ) 是 D(n/κ²) 数对且都是理想范数"""
    n: int
    kappa: int
    pair: Tuple[int, int]
    reduced_pair: Tuple[int, int]
    witness_ideals: Tuple[IdealHNF, IdealHNF]

    @property
    def effective_modulus(self) -> Fraction:
        return Fraction(self.n, self.kappa * self.kappa)


@dataclass(frozen=True)
class PairConstruction:
    """互素数对的理想构造 a_i = ⟨a_i, x + √n⟩，a_1·a_2 = ⟨x + √n⟩"""
    a1: int
    a2: int
    n: int
    x: int
    ideal1: IdealHNF
    ideal2: IdealHNF
    product_generator: AlgInt


@dataclass(frozen=True)
class DivisibilityEntry:
    """t1·t2 的一个素因子的检查结果"""
    prime: int
    exponent: int
    kind: SplitKind
    residue_degree: int
    divides: bool        # q^{f_q} | t1·t2
    must_split: bool     # 奇素数且与 n 互素
    ok: bool


@dataclass(frozen=True)
class DivisibilityReport:
    t1: int
    t2: int
    n: int
    r: int
    alpha: AlgInt
    entries: Tuple[DivisibilityEntry, ...] = field(default_factory=tuple)

    @property
    def counterexamples(self) -> List[DivisibilityEntry]:
        return [e for e in self.entries if not e.ok]

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def _normalize_elements(elements: Iterable[int]) -> Tuple[int, ...]:
    """排序并检查元素为互异正整数"""
    elems = list(elements)
    if not elems:
        raise DomainError("a tuple needs at least one element")
    for a in elems:
        if isinstance(a, bool) or not isinstance(a, int) or a < 1:
            raise DomainError(f"tuple elements must be positive integers, got {a!r}")
    if len(set(elems)) != len(elems):
        dupes = sorted({a for a in elems if elems.count(a) > 1})
        raise DomainError(f"tuple elements must be distinct, duplicated: {dupes}")
    return tuple(sorted(elems))


def verify_tuple(elements: Iterable[int], n: int, k: int = 2) -> VerifyReport:
    """
    校验 D_k(n) 性质

    Args:
        elements: 元素（任意顺序，内部排序）
        n: 模数
        k: 幂次，默认 2

    Returns:
        VerifyReport；失败时 failing_pair 为第一个不满足的 (i, j)（1 起始）

    Raises:
        DomainError: k < 2，或元素重复/非正
    """
    if k < 2:
        raise DomainError(f"power k must be >= 2, got {k}")
    elems = _normalize_elements(elements)

    witnesses = []
    for i, j in combinations(range(len(elems)), 2):
        value = elems[i] * elems[j] + n
        x = exact_power_root(value, k)
        if x is None:
            return VerifyReport(
                valid=False, n=n, k=k, elements=elems,
                failing_pair=(i + 1, j + 1), failing_value=value,
            )
        witnesses.append((i + 1, j + 1, x))

    tup = DiophTuple(n=n, k=k, elements=elems, witnesses=tuple(witnesses))
    return VerifyReport(valid=True, n=n, k=k, elements=elems, dioph_tuple=tup)


def _require_tuple(elements: Iterable[int], n: int, k: int = 2) -> DiophTuple:
    report = verify_tuple(elements, n, k)
    if not report.valid:
        i, j = report.failing_pair
        raise NotAPairError(
            f"{report.elements} is not a D({n})-tuple: pair ({i},{j}) gives {report.failing_value}"
        )
    return report.dioph_tuple


def _violation(message: str) -> TheoremViolation:
    get_logger().error(f"定理校验失败: {message}")
    return TheoremViolation(message)


def divisibility_check(t1: int, t2: int, n: int) -> DivisibilityReport:
    """
    素数幂整除性校验

    对 t1·t2 的每个素因子 q：检查 q^{f_q} | t1·t2；若 q 为奇数且与 n 互素，
    还要求 q 分裂。违例作为反例记录在报告中（理论上不会出现）。

    Raises:
        NotAPairError: (t1, t2) 不是 D(n) 数对
        DegenerateFieldError: n 为完全平方
    """
    _require_tuple([t1, t2], n)
    alpha, r = alpha_from_pair(t1, t2, n)
    F = alpha.field
    product = t1 * t2

    entries = []
    for q, e in factorize(product):
        st = split_type(q, F)
        divides = product % q ** st.residue_degree == 0
        must_split = q != 2 and n % q != 0
        ok = divides and (not must_split or st.kind is SplitKind.SPLIT)
        entries.append(DivisibilityEntry(
            prime=q, exponent=e, kind=st.kind, residue_degree=st.residue_degree,
            divides=divides, must_split=must_split, ok=ok,
        ))

    report = DivisibilityReport(t1=t1, t2=t2, n=n, r=r, alpha=alpha, entries=tuple(entries))
    for bad in report.counterexamples:
        get_logger().warning(f"数对 ({t1}, {t2}) 模数 {n}: 素数 {bad.prime} 违反整除性质")
    return report


def _inert_odd_part(t: int, F: QuadField) -> int:
    """以奇数次幂整除 t 的惰性素数之积"""
    return prod(
        p for p, e in factorize(t)
        if e % 2 == 1 and split_type(p, F).kind is SplitKind.INERT
    )


def _fundamental_setup(elements: Iterable[int], n: int) -> Tuple[DiophTuple, QuadField]:
    tup = _require_tuple(elements, n)
    if tup.m < 2:
        raise PreconditionError("kappa needs a tuple with at least two elements")
    if not fundamental_discriminant(n).is_fundamental:
        raise PreconditionError(f"{n} is not a fundamental discriminant")
    return tup, field_new(n)


def _kappa_of(tup: DiophTuple, F: QuadField) -> int:
    kappa_value = _inert_odd_part(tup.elements[0], F)
    for t in tup.elements:
        if t % kappa_value:
            raise _violation(f"kappa {kappa_value} does not divide {t} in {tup.elements}")
    if kappa_value not in (1, 2):
        raise _violation(f"kappa {kappa_value} of {tup.elements} is not 1 or 2")
    if kappa_value == 2 and (F.n % 2 == 0 or split_type(2, F).kind is not SplitKind.INERT):
        raise _violation(f"kappa 2 for n = {F.n} where 2 is not inert or n is even")
    return kappa_value


def kappa(elements: Iterable[int], n: int) -> int:
    """
    基本判别式 n 下元组的常数 κ ∈ {1, 2}

    取最小元素中以奇数次幂出现的惰性素数之积，并断言它整除所有元素。

    Raises:
        NotAPairError: 不是 D(n) 元组
        PreconditionError: 少于两个元素，或 n 不是基本判别式
        TheoremViolation: κ 不整除某个元素或 κ ∉ {1, 2}
    """
    tup, F = _fundamental_setup(elements, n)
    return _kappa_of(tup, F)


def norm_decompose(elements: Iterable[int], n: int) -> NormDecomposition:
    """
    把 D(n) 元组写成 κ 倍的范数元组

    κ = 2 时额外检查 4·(t_i/2)(t_j/2) + n 为完全平方，即基元组满足有理的 D(n/4)。

    Raises:
        NotAPairError / PreconditionError: 同 kappa
        TheoremViolation: 某个 t_i/κ 不是理想范数
    """
    tup, F = _fundamental_setup(elements, n)
    kappa_value = _kappa_of(tup, F)
    base = tuple(t // kappa_value for t in tup.elements)

    ideals = []
    for t in base:
        I = ideal_of_norm(F, t)
        if I is None:
            raise _violation(f"no ideal of norm {t} in Q(sqrt({F.d})) for tuple {tup.elements}")
        ideals.append(I)

    if kappa_value == 2:
        for x, y in combinations(base, 2):
            value = 4 * x * y + n
            if value < 0 or not isqrt(value)[1]:
                raise _violation(f"halved pair ({x}, {y}) fails D({n}/4): 4*{x}*{y}+{n} = {value}")

    get_logger().debug(f"元组 {tup.elements} 模数 {n}: kappa = {kappa_value}, 基元组 {base}")
    return NormDecomposition(
        n=n, kappa=kappa_value, elements=tup.elements,
        base_tuple=base, witness_ideals=tuple(ideals),
    )


def kappa_pair(t1: int, t2: int, n: int) -> GeneralKappa:
    """
    任意非退化模数下数对的一般 κ

    κ 为以奇数次幂整除较小元素的惰性素数之积；(t1/κ, t2/κ) 是 D(n/κ²) 数对，
    且两者都是整理想的范数。

    Raises:
        NotAPairError: 不是 D(n) 数对
        DegenerateFieldError: n 为完全平方
        TheoremViolation: κ 不整除另一个元素或约化后不是范数
    """
    tup = _require_tuple([t1, t2], n)
    F = field_new(n)
    small, large = tup.elements
    kappa_value = _inert_odd_part(small, F)
    if large % kappa_value:
        raise _violation(f"general kappa {kappa_value} does not divide {large}")

    reduced = (small // kappa_value, large // kappa_value)
    ideals = tuple(ideal_of_norm(F, t) for t in reduced)
    if any(I is None for I in ideals):
        raise _violation(f"reduced pair {reduced} of ({small}, {large}) is not a norm pair")
    return GeneralKappa(n=n, kappa=kappa_value, pair=(small, large),
                        reduced_pair=reduced, witness_ideals=ideals)


def find_principal_generators(decomposition: NormDecomposition, bound: int) -> List[Optional[AlgInt]]:
    """
    为每个见证理想在盒子 |u|, |v| ≤ bound 内搜索生成元

    全部找到说明基元组是主范数元组；出现 None 不能证明非主。
    """
    return [find_generator_bounded(I, bound) for I in decomposition.witness_ideals]


def construct_pair_ideals(a1: int, a2: int, n: int) -> PairConstruction:
    """
    互素数对的显式理想

    a_i = ⟨a_i, x + √n⟩，校验 N(a_i) = a_i 且 a_1·a_2 = ⟨x + √n⟩。

    Raises:
        DomainError: a1 或 a2 不是正整数
        PreconditionError: gcd(a1, a2) ≠ 1 或 n 不是无平方因子数
        NotAPairError: a1·a2 + n 不是完全平方
        DegenerateFieldError: n = 1
    """
    if a1 < 1 or a2 < 1:
        raise DomainError(f"pair elements must be positive, got ({a1}, {a2})")
    if gcd(a1, a2) != 1:
        raise PreconditionError(f"gcd({a1}, {a2}) = {gcd(a1, a2)}, the pair must be coprime")
    if not is_squarefree(n):
        raise PreconditionError(f"n = {n} is not square-free")
    x = exact_power_root(a1 * a2 + n, 2)
    if x is None:
        raise NotAPairError(f"{a1}*{a2} + {n} = {a1 * a2 + n} is not a perfect square")

    F = field_new(n)
    gen = F.element(x) + F.sqrt_n()
    ideal1 = ideal_from_generators(F, [F.element(a1), gen])
    ideal2 = ideal_from_generators(F, [F.element(a2), gen])

    if ideal1.norm != a1 or ideal2.norm != a2:
        raise _violation(
            f"pair ({a1}, {a2}) n={n}: ideal norms {ideal1.norm}, {ideal2.norm}"
        )
    if ideal_mul(ideal1, ideal2) != principal_ideal(F, gen):
        raise _violation(f"pair ({a1}, {a2}) n={n}: product is not <{gen}>")

    return PairConstruction(a1=a1, a2=a2, n=n, x=x, ideal1=ideal1, ideal2=ideal2,
                            product_generator=gen)


def construct_tuple_ideals(elements: Iterable[int], n: int) -> Dict[Tuple[int, int], PairConstruction]:
    """
    对元组中每个互素数对做理想构造

    构造依赖于数对：同一个元素与不同伙伴配对时，得到的理想可能不同。
    键为 1 起始的下标 (i, j)。
    """
    tup = _require_tuple(elements, n)
    out = {}
    for (i, a), (j, b) in combinations(enumerate(tup.elements, start=1), 2):
        if gcd(a, b) == 1:
            out[(i, j)] = construct_pair_ideals(a, b, n)
    return out


def scale_pair(t1: int, t2: int, n: int, p: int) -> Tuple[int, int, int]:
    """
    (p·t1, p·t2) 是 D(n·p²) 数对，域不变

    这类数对说明为什么分裂性需要 gcd(p, n) = 1。
    """
    _require_tuple([t1, t2], n)
    if not isprime(p):
        raise DomainError(f"{p} is not a prime")
    return p * t1, p * t2, n * p * p


def search_tuples(n: int, k: int, m: int, bound: int, workers: int = 1) -> List[DiophTuple]:
    """
    搜索所有元素 ≤ bound 的 D_k(n) m 元组（字典序）

    Raises:
        DomainError: bound < 1、m < 2、k < 2 或 workers < 1
    """
    if bound < 1 or m < 2 or k < 2 or workers < 1:
        raise DomainError(
            f"search needs bound >= 1, m >= 2, k >= 2, workers >= 1 (got {bound}, {m}, {k}, {workers})"
        )
    adjacency = pair_graph(n, k, bound, workers)
    found = [_require_tuple(c, n, k) for c in cliques(adjacency, m)]
    get_logger().info(f"搜索 D_{k}({n}) {m} 元组 (bound={bound}): 找到 {len(found)} 个")
    return found


def extend_tuple(tup: Union[DiophTuple, Iterable[int]], n: int, k: int, bound: int) -> List[int]:
    """
    所有 t ≤ bound（t 不在元组中）使得每个 a_i·t + n 都是 k 次幂

    Raises:
        DomainError: 输入不是 D_k(n) 元组，或 bound < 1
    """
    if bound < 1:
        raise DomainError(f"bound must be >= 1, got {bound}")
    if isinstance(tup, DiophTuple):
        if (tup.n, tup.k) != (n, k):
            raise DomainError(f"tuple was verified for D_{tup.k}({tup.n}), not D_{k}({n})")
        elems = tup.elements
    else:
        report = verify_tuple(tup, n, k)
        if not report.valid:
            raise DomainError(f"{report.elements} is not a D_{k}({n})-tuple")
        elems = report.elements

    members = set(elems)
    return [
        t for t in range(1, bound + 1)
        if t not in members and all(exact_power_root(a * t + n, k) is not None for a in elems)
    ]
