"""Bigraded mod-2 coefficient rings of base fields, and 2-adic valuations.

Over a finite field F_q (q odd) the mod-2 motivic homology of a point is
``F2[u, tau]/(u^2)`` when q = 1 mod 4 and ``F2[rho, tau]/(rho^2)`` when
q = 3 mod 4, with ``|tau| = (0,-1)`` and ``|u| = |rho| = (-1,-1)``.  Over an
algebraically closed ("complex-like") base it is ``F2[tau]``.  The square-zero
generator u resp. rho is stored in one slot; the base-field class decides its
name and its interaction with the Steenrod fragments.
"""

from __future__ import annotations

from typing import NamedTuple, Optional


class BaseFieldClass(NamedTuple):
    """One of the three coefficient situations: q=1 (4), q=3 (4), complex-like."""

    kind: str               # "q1" | "q3" | "c"
    q: Optional[int] = None

    @staticmethod
    def q1(q: int) -> "BaseFieldClass":
        if q % 4 != 1:
            raise ValueError(f"q={q} is not 1 mod 4")
        return BaseFieldClass("q1", q)

    @staticmethod
    def q3(q: int) -> "BaseFieldClass":
        if q % 4 != 3:
            raise ValueError(f"q={q} is not 3 mod 4")
        return BaseFieldClass("q3", q)

    @staticmethod
    def complex_like() -> "BaseFieldClass":
        return BaseFieldClass("c", None)

    @staticmethod
    def parse(kind: str, q: Optional[int] = None) -> "BaseFieldClass":
        if kind == "q1":
            return BaseFieldClass.q1(q if q is not None else 5)
        if kind == "q3":
            return BaseFieldClass.q3(q if q is not None else 3)
        if kind == "c":
            return BaseFieldClass.complex_like()
        raise ValueError(f"unknown base field class {kind!r}")

    @property
    def gen_symbol(self) -> Optional[str]:
        """Name of the square-zero degree (-1,-1) generator, if any."""
        return {"q1": "u", "q3": "rho", "c": None}[self.kind]

    @property
    def has_twist(self) -> bool:
        """True when the right unit differs from the left one (q = 3 mod 4)."""
        return self.kind == "q3"


def nu2(n: int) -> int:
    """2-adic valuation of a positive integer."""
    if n <= 0:
        raise ValueError(f"nu2 requires n >= 1, got {n}")
    return (n & -n).bit_length() - 1


class CoeffMonomial(NamedTuple):
    """Monomial tau^a * g^e in the coefficient ring, g the square-zero generator."""

    tau_exp: int
    gen_exp: int           # 0 or 1

    @property
    def bidegree(self):
        return (-self.gen_exp, -self.tau_exp - self.gen_exp)

    def is_one(self) -> bool:
        return self.tau_exp == 0 and self.gen_exp == 0


ONE = CoeffMonomial(0, 0)


def multiply_coeff(a: CoeffMonomial, b: CoeffMonomial) -> Optional[CoeffMonomial]:
    """Product in the coefficient ring; None when it vanishes (square-zero)."""
    e = a.gen_exp + b.gen_exp
    if e >= 2:
        return None
    return CoeffMonomial(a.tau_exp + b.tau_exp, e)


def coeff_of_bidegree(s: int, w: int, field: BaseFieldClass) -> Optional[CoeffMonomial]:
    """The unique coefficient monomial in bidegree (s, w), if one exists."""
    if s == 0:
        if w > 0:
            return None
        return CoeffMonomial(-w, 0)
    if s == -1 and field.gen_symbol is not None:
        if w > -1:
            return None
        return CoeffMonomial(-w - 1, 1)
    return None


def m2_basis(d, field: BaseFieldClass):
    """F2-basis of the coefficient ring in bidegree d = (s, w): zero or one monomial."""
    s, w = d
    c = coeff_of_bidegree(s, w, field)
    return [] if c is None else [c]


def coeff_str(c: CoeffMonomial, field: BaseFieldClass) -> str:
    if c.is_one():
        return "1"
    parts = []
    if c.gen_exp:
        parts.append(field.gen_symbol or "?")
    if c.tau_exp == 1:
        parts.append("tau")
    elif c.tau_exp > 1:
        parts.append(f"tau^{c.tau_exp}")
    return "*".join(parts)
