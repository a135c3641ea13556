"""
异常定义

整个包共用的异常层次。输入错误统一继承 DomainError（同时也是 ValueError），
定理校验失败单独归为 TheoremViolation。
"""


class NormTupleError(Exception):
    """所有 normtuple 异常的基类"""
    pass


class DomainError(NormTupleError, ValueError):
    """输入不在运算定义域内"""
    pass


class DegenerateFieldError(DomainError):
    """模数的无平方因子部分为 1，Q(√n) 退化为 Q"""
    pass


class NotAPairError(DomainError):
    """t1*t2 + n 不是完全平方（或 k 次幂）"""
    pass


class PreconditionError(DomainError):
    """构造或分解的前提条件不满足"""
    pass


class FactorizationError(NormTupleError):
    """试除上界内无法完成分解"""

    def __init__(self, message: str, cofactor: int):
        super().__init__(message)
        self.cofactor = cofactor


class TheoremViolation(NormTupleError):
    """校验器发现了已证明命题的反例（不应发生）"""
    pass


class ConfigError(NormTupleError):
    """配置错误异常"""
    pass
