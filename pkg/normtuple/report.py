"""
结果格式化

负责把运算结果转换成 JSON 字典和人类可读文本，供 CLI 输出
"""

from typing import Any, Dict, List, Optional

from .field import AlgInt, QuadField, SplitType
from .ideal import IdealHNF
from .tuples import (
    DiophTuple, DivisibilityReport, NormDecomposition, PairConstruction, VerifyReport,
)


class ReportFormatter:
    """
    报告构建器

    每种结果都有 *_to_dict（JSON 结构）和 *_to_text（终端摘要）两种形式
    """

    TUPLE_NAMES = {1: "singleton", 2: "pair", 3: "triple", 4: "quadruple", 5: "quintuple"}

    @classmethod
    def element_to_text(cls, x: AlgInt) -> str:
        return str(x)

    @classmethod
    def ideal_to_text(cls, I: IdealHNF) -> str:
        return str(I)

    @classmethod
    def ideal_to_dict(cls, I: IdealHNF) -> Dict[str, int]:
        return {"a": I.a, "b": I.b, "c": I.c, "norm": I.norm}

    @classmethod
    def field_to_text(cls, F: QuadField) -> str:
        return F.describe()

    @classmethod
    def property_name(cls, n: int, k: int, m: int) -> str:
        """如 "D(13)-triple"、"D_3(1)-triple" """
        prop = f"D({n})" if k == 2 else f"D_{k}({n})"
        return f"{prop}-{cls.TUPLE_NAMES.get(m, f'{m}-tuple')}"

    @classmethod
    def _set_text(cls, elements) -> str:
        return "{" + ", ".join(str(a) for a in elements) + "}"

    @classmethod
    def _power_text(cls, x: int, k: int) -> str:
        return f"{x}^{k}"

    # ---- verify ----

    @classmethod
    def verify_to_dict(cls, report: VerifyReport) -> Dict[str, Any]:
        witnesses = []
        if report.dioph_tuple is not None:
            witnesses = [list(w) for w in report.dioph_tuple.witnesses]
        return {
            "valid": report.valid,
            "n": report.n,
            "k": report.k,
            "elements": list(report.elements),
            "witnesses": witnesses,
            "failing_pair": list(report.failing_pair) if report.failing_pair else None,
            "failing_value": report.failing_value,
        }

    @classmethod
    def verify_to_text(cls, report: VerifyReport) -> str:
        name = cls.property_name(report.n, report.k, len(report.elements))
        elems = report.elements
        if not report.valid:
            i, j = report.failing_pair
            kind = "square" if report.k == 2 else f"{report.k}-th power"
            return (
                f"{cls._set_text(elems)} is not a {name}: pair ({i},{j}): "
                f"{elems[i - 1]}*{elems[j - 1]} + {report.n} = {report.failing_value} "
                f"is not a {kind}"
            )
        lines = [f"{cls._set_text(elems)} is a {name}"]
        lines.extend(cls.tuple_witness_lines(report.dioph_tuple))
        return "\n".join(lines)

    @classmethod
    def tuple_witness_lines(cls, tup: DiophTuple) -> List[str]:
        lines = []
        for i, j, x in tup.witnesses:
            a, b = tup.elements[i - 1], tup.elements[j - 1]
            lines.append(f"  {a}*{b} + {tup.n} = {cls._power_text(x, tup.k)}")
        return lines

    # ---- decompose ----

    @classmethod
    def decompose_to_dict(
        cls,
        dec: NormDecomposition,
        generators: Optional[List[Optional[AlgInt]]] = None
    ) -> Dict[str, Any]:
        data = {
            "n": dec.n,
            "elements": list(dec.elements),
            "kappa": dec.kappa,
            "base": list(dec.base_tuple),
            "ideals": [cls.ideal_to_dict(I) for I in dec.witness_ideals],
            "modulus_note": dec.modulus_note,
        }
        if generators is not None:
            data["generators"] = [cls.element_to_text(g) if g is not None else None for g in generators]
            data["principal"] = all(g is not None for g in generators)
        return data

    @classmethod
    def decompose_to_text(
        cls,
        dec: NormDecomposition,
        generators: Optional[List[Optional[AlgInt]]] = None
    ) -> str:
        if dec.kappa == 1:
            head = f"{cls._set_text(dec.elements)} is a norm tuple in Q(sqrt({dec.n}))"
        else:
            head = (
                f"{cls._set_text(dec.elements)} = 2*{cls._set_text(dec.base_tuple)}, "
                f"base tuple is a norm tuple with property D({dec.modulus_note})"
            )
        lines = [head, f"  kappa = {dec.kappa}"]
        for idx, (t, I) in enumerate(zip(dec.base_tuple, dec.witness_ideals)):
            line = f"  N({cls.ideal_to_text(I)}) = {t}"
            if generators is not None:
                g = generators[idx]
                line += f", generator {g}" if g is not None else ", no generator found in box"
            lines.append(line)
        return "\n".join(lines)

    # ---- construct-pair ----

    @classmethod
    def construct_to_dict(cls, pc: PairConstruction) -> Dict[str, Any]:
        return {
            "a1": pc.a1,
            "a2": pc.a2,
            "n": pc.n,
            "x": pc.x,
            "ideal1": cls.ideal_to_dict(pc.ideal1),
            "ideal2": cls.ideal_to_dict(pc.ideal2),
            "product_generator": cls.element_to_text(pc.product_generator),
        }

    @classmethod
    def construct_to_text(cls, pc: PairConstruction) -> str:
        return "\n".join([
            f"{pc.a1}*{pc.a2} + {pc.n} = {pc.x}^2 in {cls.field_to_text(pc.product_generator.field)}",
            f"  ideal1 = <{pc.a1}, {pc.x}+sqrt({pc.n})> = {pc.ideal1}, norm {pc.ideal1.norm}",
            f"  ideal2 = <{pc.a2}, {pc.x}+sqrt({pc.n})> = {pc.ideal2}, norm {pc.ideal2.norm}",
            f"  ideal1*ideal2 = <{pc.product_generator}>",
        ])

    # ---- check-pair ----

    @classmethod
    def divisibility_to_dict(cls, rep: DivisibilityReport) -> Dict[str, Any]:
        return {
            "t1": rep.t1,
            "t2": rep.t2,
            "n": rep.n,
            "r": rep.r,
            "alpha": cls.element_to_text(rep.alpha),
            "ok": rep.ok,
            "primes": [
                {
                    "prime": e.prime,
                    "exponent": e.exponent,
                    "kind": e.kind.value,
                    "residue_degree": e.residue_degree,
                    "divides": e.divides,
                    "must_split": e.must_split,
                    "ok": e.ok,
                }
                for e in rep.entries
            ],
        }

    @classmethod
    def divisibility_to_text(cls, rep: DivisibilityReport) -> str:
        lines = [f"pair ({rep.t1}, {rep.t2}), n = {rep.n}: alpha = {rep.alpha}, r = {rep.r}"]
        for e in rep.entries:
            mark = "ok" if e.ok else "COUNTEREXAMPLE"
            lines.append(
                f"  {e.prime}: {e.kind.value}, f = {e.residue_degree}, "
                f"{e.prime}^{e.residue_degree} | {rep.t1 * rep.t2}: {e.divides} [{mark}]"
            )
        return "\n".join(lines)

    # ---- split / ideals ----

    @classmethod
    def split_to_dict(cls, p: int, F: QuadField, st: SplitType, primes) -> Dict[str, Any]:
        return {
            "prime": p,
            "d": F.d,
            "D": F.D,
            "kind": st.kind.value,
            "residue_degree": st.residue_degree,
            "ideals": [dict(cls.ideal_to_dict(P), residue_degree=f) for P, f in primes],
        }

    @classmethod
    def split_to_text(cls, p: int, F: QuadField, st: SplitType, primes) -> str:
        lines = [f"{p} is {st.kind.value} in {cls.field_to_text(F)} (f = {st.residue_degree})"]
        lines.extend(f"  {P}, norm {P.norm}" for P, _ in primes)
        return "\n".join(lines)

    # ---- search / extend ----

    @classmethod
    def search_to_dict(cls, found: List[DiophTuple]) -> Dict[str, Any]:
        return {
            "count": len(found),
            "tuples": [
                {"elements": list(t.elements), "witnesses": [list(w) for w in t.witnesses]}
                for t in found
            ],
        }

    @classmethod
    def search_to_text(cls, n: int, k: int, m: int, bound: int, found: List[DiophTuple]) -> str:
        name = cls.property_name(n, k, m)
        lines = [f"{len(found)} {name}s with elements <= {bound}"]
        lines.extend(f"  {cls._set_text(t.elements)}" for t in found)
        return "\n".join(lines)

    @classmethod
    def extend_to_dict(cls, elements, extensions: List[int]) -> Dict[str, Any]:
        return {"elements": list(elements), "extensions": extensions}

    @classmethod
    def extend_to_text(cls, elements, n: int, k: int, bound: int, extensions: List[int]) -> str:
        if not extensions:
            return f"{cls._set_text(elements)} has no extension t <= {bound}"
        prop = f"D({n})" if k == 2 else f"D_{k}({n})"
        return (
            f"{cls._set_text(elements)} extends to a {prop}-tuple by any of: "
            + ", ".join(str(t) for t in extensions)
        )
