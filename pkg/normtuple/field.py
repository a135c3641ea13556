"""
二次域 Q(√n) 的整数环运算

元素统一存放在整基 (1, ω) 上的坐标 (u, v)，代表 u + v·ω：
  - SQRT 模式：ω = √d，极小多项式 x² − d（d ≡ 2, 3 mod 4）
  - HALF 模式：ω = (1+√d)/2，极小多项式 x² − x − (d−1)/4（d ≡ 1 mod 4）

两种模式都写成 ω² = t·ω − N(ω)，乘法、迹和范数只依赖 (t, N(ω))。
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple, Union

from sympy import isprime

from .arith import Discriminant, fundamental_discriminant, isqrt, kronecker, squarefree_core
from .errors import DegenerateFieldError, DomainError, NotAPairError, TheoremViolation


class OmegaMode(Enum):
    """整基生成元 ω 的取法"""
    SQRT = "sqrt"   # ω = √d
    HALF = "half"   # ω = (1+√d)/2


class SplitKind(Enum):
    """有理素数在二次域中的分解类型"""
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


class ElemOp(Enum):
    """elem_arith 支持的运算"""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    CONJ = "conj"


@dataclass(frozen=True)
class SplitType:
    """素数分解类型及剩余次数 f（仅惰性时 f = 2）"""
    kind: SplitKind
    residue_degree: int


@dataclass(frozen=True)
class QuadField:
    """二次域 Q(√d)，记录原始模数 n 以便表示 √n = s·√d"""
    disc: Discriminant
    omega_mode: OmegaMode

    @property
    def n(self) -> int:
        return self.disc.n

    @property
    def d(self) -> int:
        return self.disc.d

    @property
    def D(self) -> int:
        return self.disc.D

    @property
    def omega_trace(self) -> int:
        """T(ω)：SQRT 为 0，HALF 为 1"""
        return 1 if self.omega_mode is OmegaMode.HALF else 0

    @property
    def omega_norm(self) -> int:
        """N(ω)：SQRT 为 −d，HALF 为 −(d−1)/4"""
        if self.omega_mode is OmegaMode.HALF:
            return -((self.d - 1) // 4)
        return -self.d

    def same_field(self, other: "QuadField") -> bool:
        """同一个域（模数 12 与 3 给出同一个 Q(√3)）"""
        return self.d == other.d

    def element(self, u: int, v: int = 0) -> "AlgInt":
        return AlgInt(self, u, v)

    def zero(self) -> "AlgInt":
        return AlgInt(self, 0, 0)

    def one(self) -> "AlgInt":
        return AlgInt(self, 1, 0)

    def omega(self) -> "AlgInt":
        return AlgInt(self, 0, 1)

    def from_sqrt_form(self, a: int, b: int, denom: int = 1) -> "AlgInt":
        """
        由 (a + b√d)/denom 构造整数环元素

        Raises:
            DomainError: denom ≤ 0 或结果不是代数整数
        """
        if denom < 1:
            raise DomainError(f"denominator must be positive, got {denom}")
        if self.omega_mode is OmegaMode.HALF:
            # √d = 2ω − 1
            u_num, v_num = a - b, 2 * b
        else:
            u_num, v_num = a, b
        if u_num % denom or v_num % denom:
            raise DomainError(
                f"({a}+{b}*sqrt({self.d}))/{denom} is not an algebraic integer"
            )
        return AlgInt(self, u_num // denom, v_num // denom)

    def sqrt_n(self) -> "AlgInt":
        """√n = s·√d"""
        return self.from_sqrt_form(0, self.disc.sqrt_cofactor)

    def describe(self) -> str:
        if self.omega_mode is OmegaMode.HALF:
            return f"Q(sqrt({self.d})), w = (1+sqrt({self.d}))/2, D = {self.D}"
        return f"Q(sqrt({self.d})), w = sqrt({self.d}), D = {self.D}"


class AlgInt:
    """整数环中的元素 u + v·ω"""

    __slots__ = ("field", "u", "v")

    def __init__(self, field: QuadField, u: int, v: int = 0):
        self.field = field
        self.u = int(u)
        self.v = int(v)

    def _coerce(self, other: Union["AlgInt", int]) -> "AlgInt":
        if isinstance(other, int):
            return AlgInt(self.field, other, 0)
        return other

    def __add__(self, other):
        return elem_arith(ElemOp.ADD, self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return elem_arith(ElemOp.SUB, self, self._coerce(other))

    def __rsub__(self, other):
        return elem_arith(ElemOp.SUB, self._coerce(other), self)

    def __mul__(self, other):
        return elem_arith(ElemOp.MUL, self, self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return AlgInt(self.field, -self.u, -self.v)

    def conj(self) -> "AlgInt":
        return elem_arith(ElemOp.CONJ, self)

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.v == 0 and self.u == other
        if not isinstance(other, AlgInt):
            return NotImplemented
        return self.field.same_field(other.field) and (self.u, self.v) == (other.u, other.v)

    def __hash__(self):
        return hash((self.field.d, self.u, self.v))

    def __str__(self):
        if self.v == 0:
            return str(self.u)
        if self.v == 1:
            w_part = "w"
        elif self.v == -1:
            w_part = "-w"
        else:
            w_part = f"{self.v}*w"
        if self.u == 0:
            return w_part
        sign = "" if w_part.startswith("-") else "+"
        return f"{self.u}{sign}{w_part}"

    def __repr__(self):
        return f"AlgInt({self}, d={self.field.d})"


def field_new(n: int) -> QuadField:
    """
    构造 Q(√n)

    Raises:
        DomainError: n = 0
        DegenerateFieldError: n 为完全平方
    """
    disc = fundamental_discriminant(n)
    if disc.degenerate:
        raise DegenerateFieldError(f"n = {n} is a perfect square; Q(sqrt({n})) = Q")
    mode = OmegaMode.HALF if disc.d % 4 == 1 else OmegaMode.SQRT
    return QuadField(disc=disc, omega_mode=mode)


def elem_arith(op: Union[ElemOp, str], x: AlgInt, y: Optional[AlgInt] = None) -> AlgInt:
    """
    整数环中的精确运算

    Args:
        op: add / sub / mul / conj
        x: 左操作数
        y: 右操作数（conj 不需要）

    Raises:
        DomainError: 未知运算、两个操作数不在同一个域，或缺少右操作数
    """
    try:
        op = ElemOp(op)
    except ValueError:
        raise DomainError(f"unknown element operation: {op!r}") from None
    F = x.field
    if op is ElemOp.CONJ:
        # conj(ω) = T(ω) − ω
        return AlgInt(F, x.u + F.omega_trace * x.v, -x.v)

    if y is None:
        raise DomainError(f"operation {op.value} needs two operands")
    if not F.same_field(y.field):
        raise DomainError(
            f"operands live in different fields: Q(sqrt({F.d})) and Q(sqrt({y.field.d}))"
        )

    if op is ElemOp.ADD:
        return AlgInt(F, x.u + y.u, x.v + y.v)
    if op is ElemOp.SUB:
        return AlgInt(F, x.u - y.u, x.v - y.v)

    # ω² = t·ω − N(ω)
    vv = x.v * y.v
    return AlgInt(
        F,
        x.u * y.u - F.omega_norm * vv,
        x.u * y.v + x.v * y.u + F.omega_trace * vv,
    )


def trace_norm(x: AlgInt) -> Tuple[int, int]:
    """
    迹与范数

    Returns:
        (T(x), N(x))，均为有理整数
    """
    F = x.field
    trace = 2 * x.u + F.omega_trace * x.v
    norm = x.u * x.u + F.omega_trace * x.u * x.v + F.omega_norm * x.v * x.v
    return trace, norm


def alpha_from_pair(t1: int, t2: int, n: int) -> Tuple[AlgInt, int]:
    """
    D(n)-数对对应的代数整数 α = −r + √n

    满足 T(α) = −2r、N(α) = t1·t2，其中 r ≥ 0 且 t1·t2 + n = r²。

    Raises:
        DomainError: t1 或 t2 不是正整数
        NotAPairError: t1·t2 + n 不是完全平方
        DegenerateFieldError: n 为完全平方
    """
    if t1 < 1 or t2 < 1:
        raise DomainError(f"pair elements must be positive, got ({t1}, {t2})")
    value = t1 * t2 + n
    if value < 0 or not isqrt(value)[1]:
        raise NotAPairError(f"{t1}*{t2} + {n} = {value} is not a perfect square")
    r = isqrt(value)[0]

    F = field_new(n)
    alpha = F.from_sqrt_form(-r, F.disc.sqrt_cofactor)
    if trace_norm(alpha) != (-2 * r, t1 * t2):
        raise TheoremViolation(
            f"alpha = {alpha} for pair ({t1}, {t2}) has trace/norm {trace_norm(alpha)}"
        )
    return alpha, r


def split_type(p: int, F: QuadField) -> SplitType:
    """
    素数 p 在 F 中的分解类型

    奇素数看 Kronecker 符号 (D/p)；p = 2 看 D mod 8。

    Raises:
        DomainError: p 不是素数
    """
    if not isprime(p):
        raise DomainError(f"{p} is not a prime")
    D = F.D
    if p == 2:
        if D % 2 == 0:
            kind = SplitKind.RAMIFIED
        elif D % 8 == 1:
            kind = SplitKind.SPLIT
        else:
            kind = SplitKind.INERT
    elif D % p == 0:
        kind = SplitKind.RAMIFIED
    else:
        kind = SplitKind.SPLIT if kronecker(D, p) == 1 else SplitKind.INERT
    return SplitType(kind=kind, residue_degree=2 if kind is SplitKind.INERT else 1)


# 元素文本格式：u+v*w、a+b*sqrt(k)、(a+b*sqrt(k))/2
_TERM = re.compile(
    r'\s*(?P<sign>[+-])?\s*(?P<coef>\d+)?\s*(?P<star>\*)?\s*'
    r'(?P<sym>w|sqrt\(\s*(?P<rad>-?\d+)\s*\))?\s*'
)
_HALVED = re.compile(r'^\s*\((?P<body>.*)\)\s*/\s*(?P<den>\d+)\s*$')


def parse_element(F: QuadField, text: str) -> AlgInt:
    """
    解析元素文本

    支持 "u+v*w"、"a+b*sqrt(d)"、"(a+b*sqrt(d))/2" 以及纯整数；sqrt(k) 中的 k
    必须与域的 d 只差一个平方因子。

    Raises:
        DomainError: 无法解析或结果不是代数整数
    """
    body, denom = text, 1
    halved = _HALVED.match(text)
    if halved:
        body, denom = halved.group("body"), int(halved.group("den"))

    # 先把整个式子写成 (A + B√d)/2 的形式
    A = B = 0
    pos = 0
    seen = False
    while pos < len(body):
        m = _TERM.match(body, pos)
        if m is None or m.end() == pos:
            raise DomainError(f"cannot parse element {text!r}")
        pos = m.end()
        coef, sym = m.group("coef"), m.group("sym")
        if coef is None and sym is None:
            if m.group("sign") or m.group("star"):
                raise DomainError(f"cannot parse element {text!r}")
            continue
        if m.group("star") and (coef is None or sym is None):
            raise DomainError(f"cannot parse element {text!r}")
        if m.start() > 0 and m.group("sign") is None and body[:m.start()].strip():
            raise DomainError(f"missing operator in element {text!r}")
        seen = True
        value = int(coef) if coef is not None else 1
        if m.group("sign") == "-":
            value = -value

        if sym is None:
            A += 2 * value
        elif sym == "w":
            if F.omega_mode is OmegaMode.HALF:
                A += value
                B += value
            else:
                B += 2 * value
        else:
            rad = int(m.group("rad"))
            if rad == 0 or squarefree_core(rad) != F.d:
                raise DomainError(f"sqrt({rad}) does not lie in Q(sqrt({F.d}))")
            B += 2 * value * isqrt(rad // F.d)[0]

    if not seen:
        raise DomainError(f"cannot parse element {text!r}")
    return F.from_sqrt_form(A, B, 2 * denom)
