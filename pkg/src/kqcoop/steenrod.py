"""Fragments of the dual motivic Steenrod algebra over finite-field coefficients.

Monomials are written in the conjugate generators: ``x{i}`` is the conjugate
of the i-th Milnor generator with bidegree ``(2^{i+1}-2, 2^i-1)`` and ``q{i}``
the conjugate exterior-type generator with bidegree ``(2^{i+1}-1, 2^i-1)``.
The structure constants used throughout:

* coproduct:  psi(x_n) = sum_i x_i (x) x_{n-i}^{2^i},
              psi(q_n) = 1 (x) q_n + sum_i q_i (x) x_{n-i}^{2^i}
* relations:  q_i^2 = tau * x_{i+1}            (q = 1 mod 4, complex-like)
              q_i^2 = tau * x_{i+1} + rho * q_{i+1}   (q = 3 mod 4)
* right unit: eta_R(tau) = tau + rho * q_0 when q = 3 mod 4, identity otherwise.

These are the conjugate-sided mates of the usual presentation; coassociativity,
multiplicativity of the coproduct, and d^2 = 0 in the cobar complex are all
enforced by tests, and they make the weight-filtered subalgebras genuine left
comodules with coefficient-free coaction leading terms.

A bare monomial is ``(xi, taus)`` with ``xi`` a tuple of exponents (index 1
first, trailing zeros trimmed) and ``taus`` a bitmask of occupied q-indices.
Elements are mod-2 sets of ``(bare, CoeffMonomial)`` pairs; tensor squares are
sets of ``(left_bare, right_bare, CoeffMonomial)`` with the coefficient held in
the right-hand slot.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Optional

from .coefficients import (
    ONE,
    BaseFieldClass,
    CoeffMonomial,
    multiply_coeff,
)

Bare = tuple  # (xi: tuple[int, ...], taus: int)

UNIT: Bare = ((), 0)


class FragmentSpec(NamedTuple):
    kind: str                 # "A0" | "A1" | "AmodA0" | "AmodA1" | "A"
    field: BaseFieldClass


# ---------------------------------------------------------------------------
# bare monomials

def xi_bare(i: int, exp: int = 1) -> Bare:
    if i < 1 or exp < 0:
        raise ValueError("xi index must be >= 1")
    if exp == 0:
        return UNIT
    xi = [0] * i
    xi[i - 1] = exp
    return (tuple(xi), 0)


def tau_bare(i: int) -> Bare:
    return ((), 1 << i)


def _trim(xi) -> tuple:
    xi = list(xi)
    while xi and xi[-1] == 0:
        xi.pop()
    return tuple(xi)


def bare_bidegree(m: Bare):
    xi, taus = m
    t = w = 0
    for k, e in enumerate(xi):
        i = k + 1
        t += e * (2 ** (i + 1) - 2)
        w += e * (2 ** i - 1)
    i = 0
    mask = taus
    while mask:
        if mask & 1:
            t += 2 ** (i + 1) - 1
            w += 2 ** i - 1
        mask >>= 1
        i += 1
    return (t, w)


def bare_weight(m: Bare) -> int:
    xi, taus = m
    wt = sum(e * (2 ** (k + 1)) for k, e in enumerate(xi))
    i = 0
    while taus:
        if taus & 1:
            wt += 2 ** i
        taus >>= 1
        i += 1
    return wt


def bare_str(m: Bare) -> str:
    xi, taus = m
    parts = []
    i = 0
    mask = taus
    while mask:
        if mask & 1:
            parts.append(f"q{i}")
        mask >>= 1
        i += 1
    for k, e in enumerate(xi):
        if e == 1:
            parts.append(f"x{k + 1}")
        elif e > 1:
            parts.append(f"x{k + 1}^{e}")
    return " ".join(parts) if parts else "1"


def in_fragment(m: Bare, kind: str) -> bool:
    xi, taus = m
    if kind == "A":
        return True
    if kind == "A0":
        return xi == () and taus | 1 == 1
    if kind == "A1":
        return xi in ((), (1,)) and taus | 3 == 3
    if kind == "AmodA0":
        return taus & 1 == 0
    if kind == "AmodA1":
        return taus & 3 == 0 and (len(xi) == 0 or xi[0] % 2 == 0)
    raise ValueError(f"unknown fragment kind {kind!r}")


def project(m: Bare, kind: str) -> Optional[Bare]:
    """Image of a reduced monomial under the quotient onto a finite fragment."""
    if kind in ("A0", "A1", "A"):
        return m if in_fragment(m, kind) else None
    # subalgebras are not quotients; membership is structural
    if not in_fragment(m, kind):
        raise ValueError(f"monomial {bare_str(m)} escapes subalgebra {kind}")
    return m


# ---------------------------------------------------------------------------
# multiplication with relation reduction (inside the full dual algebra)

def _tau_square_terms(i: int, field: BaseFieldClass):
    """Expansion of q_i^2 as [(bare, coeff)] in the full dual algebra."""
    terms = [(xi_bare(i + 1), CoeffMonomial(1, 0))]
    if field.has_twist:
        terms.append((tau_bare(i + 1), CoeffMonomial(0, 1)))
    return terms


def mul_bare(m1: Bare, m2: Bare, field: BaseFieldClass):
    """Product of two bare monomials in the full dual algebra.

    Returns a mod-2 set of (bare, coeff); q-squares are eliminated through the
    relation ideal, which can spawn coefficients.
    """
    out = set()
    stack = [(m1, m2, ONE)]
    while stack:
        a, b, c = stack.pop()
        (xa, ta), (xb, tb) = a, b
        n = max(len(xa), len(xb))
        xi = _trim(tuple((xa[k] if k < len(xa) else 0) + (xb[k] if k < len(xb) else 0)
                         for k in range(n)))
        common = ta & tb
        merged = (xi, ta ^ tb)
        if common == 0:
            key = (merged, c)
            out ^= {key}
            continue
        i = (common & -common).bit_length() - 1
        rest_a = (xa, ta & ~(1 << i))
        rest_b = (xb, tb & ~(1 << i))
        for rb, rc in _tau_square_terms(i, field):
            cc = multiply_coeff(c, rc)
            if cc is None:
                continue
            # multiply rest_a * rest_b * rb ; fold rb into rest_b first
            for mb, c2 in mul_bare(rest_b, rb, field):
                c3 = multiply_coeff(cc, c2)
                if c3 is not None:
                    stack.append((rest_a, mb, c3))
    return out


def mul_elements(e1, e2, field: BaseFieldClass):
    """Product of two mod-2 sets of (bare, coeff)."""
    out = set()
    for (a, ca) in e1:
        for (b, cb) in e2:
            c = multiply_coeff(ca, cb)
            if c is None:
                continue
            for (m, cm) in mul_bare(a, b, field):
                cc = multiply_coeff(c, cm)
                if cc is not None:
                    out ^= {(m, cc)}
    return out


def reduce_element(e, spec: FragmentSpec):
    """Project an element of the full dual algebra into a fragment."""
    out = set()
    for (m, c) in e:
        pm = project(m, spec.kind)
        if pm is not None:
            out ^= {(pm, c)}
    return out


def reduce(factors, spec: FragmentSpec):
    """Canonical form of a formal product of monomials inside a fragment.

    ``factors`` is an iterable of (bare, coeff) treated as a product.
    """
    acc = {(UNIT, ONE)}
    for f in factors:
        acc = mul_elements(acc, {f}, spec.field)
    return reduce_element(acc, spec)


# ---------------------------------------------------------------------------
# coefficient slides across tensor signs

def push_coeff(c: CoeffMonomial, m: Bare, field: BaseFieldClass):
    """Rewrite (c . m) (x) y as sum m' (x) (c' . y).

    Returns a mod-2 set of (bare m', coeff c') using
    (c.x)(x)y = x(x)(c.y) + (delta(c).x)(x)y with delta(tau) = rho q0.
    """
    out = {(m, c)}
    if field.has_twist and c.gen_exp == 0 and c.tau_exp % 2 == 1:
        delta_c = CoeffMonomial(c.tau_exp - 1, 1)
        for (m2, c2) in mul_bare(tau_bare(0), m, field):
            c3 = multiply_coeff(delta_c, c2)
            if c3 is not None:
                out ^= {(m2, c3)}
    return out


# ---------------------------------------------------------------------------
# coproduct (values in the full dual algebra tensor square)

@lru_cache(maxsize=None)
def _psi_gen(kind: str, n: int, field: BaseFieldClass):
    """Coproduct of a single generator as frozenset of (left, right, coeff)."""
    terms = set()
    if kind == "xi":
        for i in range(0, n + 1):
            terms ^= {(xi_bare(i) if i else UNIT,
                       xi_bare(n - i, 2 ** i) if n - i else UNIT, ONE)}
    elif kind == "tau":
        terms ^= {(UNIT, tau_bare(n), ONE)}
        for i in range(0, n + 1):
            terms ^= {(tau_bare(i), xi_bare(n - i, 2 ** i) if n - i else UNIT, ONE)}
    else:
        raise ValueError(kind)
    return frozenset(terms)


def _tens2_mul(e1, e2, field: BaseFieldClass):
    """Product in the tensor square; coefficients are pushed into the right slot.

    Relation reduction in the left slot can spawn coefficients there; those are
    slid across the tensor sign, which costs a twist term when eta_R is
    nontrivial.
    """
    out = set()
    for (a1, b1, c1) in e1:
        for (a2, b2, c2) in e2:
            c = multiply_coeff(c1, c2)
            if c is None:
                continue
            for (A, cA) in mul_bare(a1, a2, field):
                for (A2, cA2) in push_coeff(cA, A, field):
                    cL = multiply_coeff(c, cA2)
                    if cL is None:
                        continue
                    for (B, cB) in mul_bare(b1, b2, field):
                        cc = multiply_coeff(cL, cB)
                        if cc is None:
                            continue
                        out ^= {(A2, B, cc)}
    return out


@lru_cache(maxsize=None)
def psi_bare(m: Bare, field: BaseFieldClass):
    """Coproduct of a bare monomial, valued in the full tensor square.

    Coefficients produced along the way are carried in the right-hand slot;
    left-slot coefficients from relation reduction are slid right first.
    """
    xi, taus = m
    acc = {(UNIT, UNIT, ONE)}
    i = 0
    mask = taus
    while mask:
        if mask & 1:
            acc = _tens2_mul(acc, _psi_gen("tau", i, field), field)
        mask >>= 1
        i += 1
    for k, e in enumerate(xi):
        for _ in range(e):
            acc = _tens2_mul(acc, _psi_gen("xi", k + 1, field), field)
    return frozenset(acc)


def coproduct(m: Bare, coeff: CoeffMonomial, spec: FragmentSpec):
    """Coproduct inside a quotient fragment: both tensor factors reduced there.

    The input coefficient is a left scalar; it is slid into the right slot,
    spawning twist terms when the right unit is nontrivial.
    """
    if spec.kind not in ("A0", "A1", "A"):
        raise ValueError("coproduct lives on the quotient fragments")
    out = set()
    for (a, b, c) in psi_bare(m, spec.field):
        if not (in_fragment(a, spec.kind) and in_fragment(b, spec.kind)):
            continue
        for (a2, c2) in push_coeff(coeff, a, spec.field):
            if not in_fragment(a2, spec.kind):
                continue
            cc = multiply_coeff(c2, c)
            if cc is not None:
                out ^= {(a2, b, cc)}
    return out


def coaction(m: Bare, coeff: CoeffMonomial, sub_kind: str, frag: FragmentSpec):
    """Left coaction of a quotient fragment on a subalgebra monomial.

    Expands the full coproduct, projects the left factor onto the quotient
    fragment ``frag`` and keeps the right factor, which stays inside the
    subalgebra ``sub_kind``.  The left scalar is slid into the right slot.
    """
    out = set()
    for (a, b, c) in psi_bare(m, frag.field):
        if not in_fragment(a, frag.kind):
            continue
        if not in_fragment(b, sub_kind):
            raise ValueError(
                f"coaction of {bare_str(m)} leaves {sub_kind}: term {bare_str(b)}")
        for (a2, c2) in push_coeff(coeff, a, frag.field):
            if not in_fragment(a2, frag.kind):
                continue
            cc = multiply_coeff(c2, c)
            if cc is not None:
                out ^= {(a2, b, cc)}
    return out


def right_unit(c: CoeffMonomial, field: BaseFieldClass):
    """eta_R of a coefficient monomial, as element set of (bare, coeff)."""
    out = {(UNIT, c)}
    if field.has_twist and c.gen_exp == 0 and c.tau_exp % 2 == 1:
        out ^= {(tau_bare(0), CoeffMonomial(c.tau_exp - 1, 1))}
    return out


def counit(e):
    """Counit of an element set; returns set of coefficients (mod 2)."""
    out = set()
    for (m, c) in e:
        if m == UNIT:
            out ^= {c}
    return out


# ---------------------------------------------------------------------------
# basis enumeration

_A1_BARES = [
    ((), 1), ((), 2), ((), 3),
    ((1,), 0), ((1,), 1), ((1,), 2), ((1,), 3),
]


def nonunit_bares(kind: str, t_max: int):
    """All coefficient-free non-unit monomials of a fragment with degree <= t_max."""
    if kind == "A0":
        return [((), 1)] if t_max >= 1 else []
    if kind == "A1":
        return sorted((m for m in _A1_BARES if bare_bidegree(m)[0] <= t_max),
                      key=lambda m: (bare_bidegree(m), m))
    if kind in ("AmodA0", "AmodA1", "A"):
        return _brute_bares(kind, t_max)
    raise ValueError(kind)


def _brute_bares(kind: str, t_max: int):
    """Enumerate fragment monomials of degree <= t_max by bounded search."""
    tau_lo = {"A": 0, "AmodA0": 1, "AmodA1": 2}[kind]
    tau_idx = [i for i in range(0, 12) if 2 ** (i + 1) - 1 <= t_max and i >= tau_lo]
    xi_idx = [i for i in range(1, 12) if 2 ** (i + 1) - 2 <= t_max]
    results = []

    def rec_tau(pos, mask, t, xi_acc):
        if pos == len(tau_idx):
            m = (_trim(tuple(xi_acc)), mask)
            if m != UNIT:
                results.append(m)
            return
        rec_tau(pos + 1, mask, t, xi_acc)
        i = tau_idx[pos]
        deg = 2 ** (i + 1) - 1
        if t + deg <= t_max:
            rec_tau(pos + 1, mask | (1 << i), t + deg, xi_acc)

    def rec_xi(pos, xi_acc, t):
        if pos == len(xi_idx):
            rec_tau(0, 0, t, xi_acc)
            return
        i = xi_idx[pos]
        deg = 2 ** (i + 1) - 2
        step = 2 if (kind == "AmodA1" and i == 1) else 1
        e = 0
        while t + e * deg <= t_max:
            rec_xi(pos + 1, xi_acc + [0] * (i - 1 - len(xi_acc)) + [e], t + e * deg)
            e += step

    rec_xi(0, [], 0)
    uniq = sorted(set(results), key=lambda m: (bare_bidegree(m), m))
    return [m for m in uniq if in_fragment(m, kind)]


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def weight_bounded_bares(kind: str, wt_max: int):
    """Fragment monomials with Mahowald weight <= wt_max (subalgebra kinds)."""
    # weight of x_i / q_i is 2^i, so degree is bounded in terms of weight
    t_cap = 2 * wt_max + 1
    return [m for m in ([UNIT] + _brute_bares(kind, t_cap)) if bare_weight(m) <= wt_max]


def fragment_basis(spec: FragmentSpec, d):
    """Complete F2-basis of a fragment in bidegree d, coefficient multiples included."""
    from .coefficients import coeff_of_bidegree
    t, w = d
    out = []
    kind = spec.kind
    cands = [UNIT] + (nonunit_bares(kind, t + 1) if kind in ("A0", "A1")
                      else _brute_bares(kind, t + 1))
    for m in cands:
        mt, mw = bare_bidegree(m)
        c = coeff_of_bidegree(t - mt, w - mw, spec.field)
        if c is not None:
            out.append((m, c))
    return sorted(set(out), key=lambda p: (p[0], p[1]))
