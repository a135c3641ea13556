"""
整数环的整理想

理想以 Hermite 标准形 Z·a + Z·(b + c·ω) 存储，满足 c | a、c | b、0 ≤ b < a，
范数为 a·c。标准形唯一，因此相等比较就是比较 (a, b, c)。
"""

from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Optional, Tuple

from sympy.core.intfunc import igcdex
from sympy.ntheory import sqrt_mod

from .arith import factorize
from .errors import DomainError, TheoremViolation
from .field import AlgInt, QuadField, SplitKind, split_type, trace_norm
from .logger import get_logger


@dataclass(frozen=True, eq=False)
class IdealHNF:
    """整理想的 HNF 表示"""
    field: QuadField
    a: int
    b: int
    c: int

    @property
    def norm(self) -> int:
        return self.a * self.c

    def generators(self) -> Tuple[AlgInt, AlgInt]:
        """Z-基 (a, b + c·ω)，同时也生成整个 O_K-模"""
        return self.field.element(self.a), self.field.element(self.b, self.c)

    def is_unit(self) -> bool:
        return self.a == 1 and self.c == 1

    def __eq__(self, other):
        if not isinstance(other, IdealHNF):
            return NotImplemented
        return ideal_eq(self, other)

    def __hash__(self):
        return hash((self.field.d, self.a, self.b, self.c))

    def __str__(self):
        return f"[{self.a}, {self.b}+{self.c}*w]"

    def __repr__(self):
        return f"IdealHNF({self}, d={self.field.d})"


def _check_same_field(F: QuadField, G: QuadField):
    if not F.same_field(G):
        raise DomainError(
            f"ideals live in different fields: Q(sqrt({F.d})) and Q(sqrt({G.d}))"
        )


def _hnf(vectors: Iterable[Tuple[int, int]]) -> Optional[Tuple[int, int, int]]:
    """
    二维整数格的 HNF

    逐行做幺模消元：ω 坐标用扩展欧几里得合并成主元 (b, c)，
    被消成 0 的行把第一坐标并入 a。

    Returns:
        (a, b, c)；格不满秩时返回 None
    """
    a = 0
    pivot = None
    for u, v in vectors:
        if v == 0:
            a = gcd(a, u)
            continue
        if pivot is None:
            pivot = (u, v) if v > 0 else (-u, -v)
            continue
        b, c = pivot
        x, y, g = (int(z) for z in igcdex(c, v))
        a = gcd(a, (v // g) * b - (c // g) * u)
        pivot = (x * b + y * u, g)

    if pivot is None or a == 0:
        return None
    b, c = pivot
    return a, b % a, c


def ideal_from_generators(F: QuadField, gens: List[AlgInt]) -> IdealHNF:
    """
    由生成元构造理想 ⟨g1, g2, ...⟩

    Z-格由 {g_i, g_i·ω} 张成，约化为 HNF。

    Raises:
        DomainError: 生成元全为 0、列表为空或来自其他域
    """
    vectors = []
    omega = F.omega()
    for g in gens:
        _check_same_field(F, g.field)
        g_omega = g * omega
        vectors.append((g.u, g.v))
        vectors.append((g_omega.u, g_omega.v))

    triple = _hnf(vectors)
    if triple is None:
        raise DomainError("an ideal needs at least one nonzero generator")
    a, b, c = triple
    return IdealHNF(field=F, a=a, b=b, c=c)


def principal_ideal(F: QuadField, g: AlgInt) -> IdealHNF:
    return ideal_from_generators(F, [g])


def unit_ideal(F: QuadField) -> IdealHNF:
    """O_K 本身"""
    return IdealHNF(field=F, a=1, b=0, c=1)


def ideal_mul(I: IdealHNF, J: IdealHNF) -> IdealHNF:
    """
    理想乘法：所有生成元两两相乘后再取 HNF

    Raises:
        DomainError: 两个理想不在同一个域
    """
    _check_same_field(I.field, J.field)
    products = [x * y for x in I.generators() for y in J.generators()]
    return ideal_from_generators(I.field, products)


def ideal_norm(I: IdealHNF) -> int:
    """N(I) = a·c = [O_K : I]"""
    return I.norm


def ideal_eq(I: IdealHNF, J: IdealHNF) -> bool:
    _check_same_field(I.field, J.field)
    return (I.a, I.b, I.c) == (J.a, J.b, J.c)


def ideal_contains(I: IdealHNF, x: AlgInt) -> bool:
    """x ∈ I"""
    _check_same_field(I.field, x.field)
    if x.v % I.c:
        return False
    return (x.u - (x.v // I.c) * I.b) % I.a == 0


def ideal_conjugate(I: IdealHNF) -> IdealHNF:
    return ideal_from_generators(I.field, [g.conj() for g in I.generators()])


def ideal_pow(I: IdealHNF, e: int) -> IdealHNF:
    """I^e（e ≥ 0，I^0 = O_K）"""
    if e < 0:
        raise DomainError(f"ideal exponent must be nonnegative, got {e}")
    result = unit_ideal(I.field)
    base = I
    while e:
        if e & 1:
            result = ideal_mul(result, base)
        e >>= 1
        if e:
            base = ideal_mul(base, base)
    return result


def _omega_roots_mod(F: QuadField, p: int) -> List[int]:
    """ω 的极小多项式 x² − T(ω)x + N(ω) 在 Z/p 中的根"""
    t, nrm = F.omega_trace, F.omega_norm
    if p == 2:
        return [r for r in (0, 1) if (r * r - t * r + nrm) % 2 == 0]
    delta = (t * t - 4 * nrm) % p
    inv2 = pow(2, -1, p)
    roots = {((t + s) * inv2) % p for s in sqrt_mod(delta, p, all_roots=True)}
    return sorted(roots)


def prime_above(F: QuadField, p: int) -> List[Tuple[IdealHNF, int]]:
    """
    p 之上的素理想

    Returns:
        [(素理想, 剩余次数)]：分裂时两个共轭理想（按 b 升序），惰性时 ⟨p⟩，
        分歧时唯一的素理想

    Raises:
        DomainError: p 不是素数
    """
    st = split_type(p, F)
    if st.kind is SplitKind.INERT:
        return [(IdealHNF(field=F, a=p, b=0, c=p), 2)]

    ideals = sorted(
        {ideal_from_generators(F, [F.element(p), F.element(-r, 1)])
         for r in _omega_roots_mod(F, p)},
        key=lambda P: P.b,
    )
    expected = 2 if st.kind is SplitKind.SPLIT else 1
    if len(ideals) != expected or any(P.norm != p for P in ideals):
        raise TheoremViolation(
            f"found {len(ideals)} primes above {p} in Q(sqrt({F.d})), expected {expected}"
        )
    return [(P, 1) for P in ideals]


def ideal_of_norm(F: QuadField, t: int) -> Optional[IdealHNF]:
    """
    构造范数恰为 t 的整理想

    分裂素数取 prime_above 中 b 较小的那个，分歧素数取唯一素理想，
    惰性素数必须以偶数次幂整除 t，否则不存在。

    Raises:
        DomainError: t < 1
        FactorizationError: t 超出分解能力
    """
    if t < 1:
        raise DomainError(f"ideal norm must be positive, got {t}")
    result = unit_ideal(F)
    for p, e in factorize(t):
        st = split_type(p, F)
        if st.kind is SplitKind.INERT:
            if e % 2:
                get_logger().debug(f"Q(√{F.d}) 中不存在范数为 {t} 的理想：惰性素数 {p} 的指数为奇数")
                return None
            q = p ** (e // 2)
            result = ideal_mul(result, IdealHNF(field=F, a=q, b=0, c=q))
        else:
            P = prime_above(F, p)[0][0]
            result = ideal_mul(result, ideal_pow(P, e))
    return result


def _shell(r: int) -> List[Tuple[int, int]]:
    """max(|u|, |v|) = r 的坐标，优先 v = 0、正数在前"""
    if r == 0:
        return [(0, 0)]
    points = [(u, v) for u in range(-r, r + 1) for v in range(-r, r + 1)
              if max(abs(u), abs(v)) == r]
    points.sort(key=lambda uv: (abs(uv[1]), abs(uv[0]), uv[0] < 0, uv[1] < 0))
    return points


def find_generator_bounded(I: IdealHNF, B: int) -> Optional[AlgInt]:
    """
    在 |u|, |v| ≤ B 的盒子里搜索主理想生成元

    这是半判定：返回 None 只说明盒子里没有生成元，不证明 I 非主。

    Raises:
        DomainError: B < 1
    """
    if B < 1:
        raise DomainError(f"search bound must be >= 1, got {B}")
    F = I.field
    target = I.norm
    for r in range(B + 1):
        for u, v in _shell(r):
            g = F.element(u, v)
            if abs(trace_norm(g)[1]) != target or not ideal_contains(I, g):
                continue
            if ideal_eq(principal_ideal(F, g), I):
                return g
    get_logger().debug(f"盒子 B={B} 内没有找到 {I} 的生成元")
    return None
