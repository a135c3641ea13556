"""
整数算术工具

精确开方、分解、Kronecker 符号与基本判别式。其余模块都建立在这里之上，
所有整数均为 Python 任意精度 int。
"""

from dataclasses import dataclass
from math import prod
from typing import Iterator, List, Optional, Tuple

from sympy import factorint, integer_nthroot, isprime
from sympy.external.gmpy import jacobi

from .config import get_config
from .errors import DomainError, FactorizationError
from .logger import get_logger


@dataclass(frozen=True)
class Factorization:
    """
    素因子分解结果

    factors 按素数严格递增排列，每项为 (prime, exponent)
    """
    value: int
    factors: Tuple[Tuple[int, int], ...]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)

    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def exponent_of(self, p: int) -> int:
        """素数 p 的指数（不整除时为 0）"""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def divisors(self) -> List[int]:
        """全部正因子（升序）"""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p ** i for d in divs for i in range(e + 1)]
        return sorted(divs)


@dataclass(frozen=True)
class Discriminant:
    """
    模数 n 对应的判别式数据

    Attributes:
        n: 原始模数
        d: n 的无平方因子部分（带符号）
        D: Q(√d) 的基本判别式
    """
    n: int
    d: int
    D: int

    @property
    def degenerate(self) -> bool:
        """d = 1 时 Q(√n) = Q"""
        return self.d == 1

    @property
    def sqrt_cofactor(self) -> int:
        """满足 n = s² d 的 s ≥ 1"""
        return isqrt(self.n // self.d)[0]

    @property
    def is_fundamental(self) -> bool:
        return not self.degenerate and self.D == self.n


def isqrt(m: int) -> Tuple[int, bool]:
    """
    整数平方根

    Returns:
        (floor(√m), 是否为完全平方)

    Raises:
        DomainError: m < 0
    """
    if m < 0:
        raise DomainError(f"isqrt of negative integer {m}")
    root, exact = integer_nthroot(m, 2)
    return int(root), bool(exact)


def nth_root_exact(m: int, k: int) -> Optional[int]:
    """
    精确 k 次方根

    Returns:
        x^k = m 时返回 x，否则返回 None
    """
    if k < 2:
        raise DomainError(f"root degree must be >= 2, got {k}")
    if m < 1:
        raise DomainError(f"nth_root_exact expects a positive integer, got {m}")
    root, exact = integer_nthroot(m, k)
    return int(root) if exact else None


def exact_power_root(value: int, k: int) -> Optional[int]:
    """value = x^k（x ≥ 0）时返回 x；负数永远不是 k 次幂"""
    if value < 0:
        return None
    if value == 0:
        return 0
    if k == 2:
        root, exact = isqrt(value)
        return root if exact else None
    return nth_root_exact(value, k)


def factorize(m: int, bound: Optional[int] = None) -> Factorization:
    """
    试除到 bound，余因子用确定性素性检验确认

    Args:
        m: 正整数
        bound: 试除上界，None 时使用当前配置的 factor_bound

    Raises:
        DomainError: m < 1
        FactorizationError: 剩下无法分解的合数余因子
    """
    if m < 1:
        raise DomainError(f"factorize expects a positive integer, got {m}")
    if bound is None:
        bound = get_config().factor_bound

    raw = factorint(m, limit=bound)
    for p in raw:
        if not isprime(p):
            get_logger().warning(f"分解 {m} 失败：余因子 {p} 超出试除上界 {bound}")
            raise FactorizationError(
                f"composite cofactor {p} of {m} is beyond the trial-division bound {bound}",
                cofactor=int(p),
            )
    factors = tuple(sorted((int(p), int(e)) for p, e in raw.items()))
    return Factorization(value=m, factors=factors)


def kronecker(D: int, m: int) -> int:
    """
    Kronecker 符号 (D/m)，m 可为偶数、负数或 0

    奇数部分交给 sympy 的 Jacobi 符号，2 与符号位单独处理。
    """
    if m == 0:
        return 1 if D in (1, -1) else 0

    result = 1
    if m < 0:
        m = -m
        if D < 0:
            result = -result

    twos = (m & -m).bit_length() - 1
    m >>= twos
    if twos:
        if D % 2 == 0:
            return 0
        # (D/2) = -1 当 D ≡ ±3 (mod 8)
        if D % 8 in (3, 5) and twos % 2 == 1:
            result = -result

    if m == 1:
        return result
    return result * int(jacobi(D % m, m))


def squarefree_core(n: int) -> int:
    """满足 n = s² d 的带符号无平方因子 d"""
    if n == 0:
        raise DomainError("the modulus must be nonzero")
    sign = -1 if n < 0 else 1
    fact = factorize(abs(n))
    return sign * prod(p for p, e in fact if e % 2 == 1)


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(abs(n)))


def fundamental_discriminant(n: int) -> Discriminant:
    """
    计算 Q(√n) 的基本判别式

    D = d（d ≡ 1 mod 4），否则 D = 4d。d = 1 时记录为退化情形而不报错，
    由构造域的调用方决定是否拒绝。

    Raises:
        DomainError: n = 0
    """
    d = squarefree_core(n)
    D = d if d % 4 == 1 else 4 * d
    disc = Discriminant(n=n, d=d, D=D)
    if disc.degenerate:
        get_logger().debug(f"模数 {n} 为完全平方，Q(√n) 退化")
    return disc
