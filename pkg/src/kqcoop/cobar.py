"""Reduced cobar complex over the finite fragments, sliced by tridegree.

A cochain term is ``(factors, coeff, gen)`` encoding
``gamma_1 (x) ... (x) gamma_f (x) (c . g)`` with each ``gamma_i`` a
coefficient-free non-unit fragment monomial; all scalars live in the comodule
slot.  The differential inserts reduced coproducts and the comodule coaction;
it preserves the internal bidegree (t, w), so every computation is local to a
slice (f, t, w).
"""

from __future__ import annotations

from typing import Dict, NamedTuple, Tuple

from . import gf2
from .coefficients import ONE, CoeffMonomial, coeff_of_bidegree, multiply_coeff
from .comodule import ComodulePresentation, element_coaction
from .steenrod import (
    UNIT,
    bare_bidegree,
    coproduct,
    in_fragment,
    nonunit_bares,
    push_coeff,
)

SLICE_LIMIT = 200_000


class CobarSliceError(RuntimeError):
    """Raised when a slice exceeds the resource limit."""


Term = Tuple[Tuple, CoeffMonomial, str]   # (factors, coeff, gen)


def push_through(c: CoeffMonomial, factors, coeff, gen, kind, field):
    """Move scalar c rightward across ``factors`` into the comodule slot."""
    out = set()
    stack = [(c, 0, factors, coeff)]
    while stack:
        c0, i, fs, cf = stack.pop()
        if c0.is_one() or i == len(fs):
            cc = multiply_coeff(c0, cf)
            if cc is not None:
                out ^= {(tuple(fs), cc, gen)}
            continue
        for (m2, c2) in push_coeff(c0, fs[i], field):
            if not in_fragment(m2, kind):
                continue
            stack.append((c2, i + 1, fs[:i] + (m2,) + fs[i + 1:], cf))
    return out


def differential(term: Term, M: ComodulePresentation):
    """Cobar differential of a single term, as a mod-2 set of terms."""
    spec = M.spec
    factors, coeff, gen = term
    out = set()
    for i, gam in enumerate(factors):
        red = set(coproduct(gam, ONE, spec))
        red ^= {(gam, UNIT, ONE), (UNIT, gam, ONE)}
        for (a, b, cb) in red:
            if a == UNIT or b == UNIT:
                raise AssertionError("unit factor in reduced coproduct")
            head = factors[:i] + (a, b)
            for t2 in push_through(cb, factors[i + 1:], coeff, gen,
                                   spec.kind, spec.field):
                fs, cf, g = t2
                out ^= {(head + fs, cf, g)}
    for (gam, c2, g2) in element_coaction(M, coeff, gen):
        if in_fragment(gam, spec.kind):
            out ^= {(factors + (gam,), c2, g2)}
    return out


def d_element(el, M: ComodulePresentation):
    out = set()
    for term in el:
        out ^= differential(term, M)
    return out


class Slice(NamedTuple):
    basis: Tuple[Term, ...]
    index: Dict[Term, int]


class CobarComplex:
    """Slice-cached reduced cobar complex of a presented comodule."""

    def __init__(self, M: ComodulePresentation):
        self.M = M
        self.spec = M.spec
        self._bares = None
        self._slices: Dict[Tuple[int, int, int], Slice] = {}
        self._dmat: Dict[Tuple[int, int, int], list] = {}
        self._ext: Dict[Tuple[int, int, int], tuple] = {}

    # -- basis -------------------------------------------------------------
    def bares(self, t_cap: int):
        if self._bares is None or self._bares[0] < t_cap:
            bs = nonunit_bares(self.spec.kind, t_cap)
            bs.sort(key=lambda m: (bare_bidegree(m), m))
            self._bares = (t_cap, bs)
        return self._bares[1]

    def slice(self, f: int, t: int, w: int) -> Slice:
        key = (f, t, w)
        if key in self._slices:
            return self._slices[key]
        field = self.spec.field
        terms = []
        bares = [(m, bare_bidegree(m)) for m in self.bares(t + 1)]
        gens = [(g, g.t, g.w) for g in self.M.gens]
        min_gen_t = min((g.t for g in self.M.gens), default=0)

        def rec(i, rem_t, rem_w, acc):
            if len(terms) > SLICE_LIMIT:
                raise CobarSliceError(f"slice {key} exceeds {SLICE_LIMIT} terms")
            if i == f:
                for (g, gt, gw) in gens:
                    c = coeff_of_bidegree(rem_t - gt, rem_w - gw, field)
                    if c is not None:
                        terms.append((tuple(acc), c, g.name))
                return
            # later factors have t >= 1 each; the gen slot can sit 1 below its
            # generator degree through a u/rho coefficient
            lim_t = rem_t - (f - i - 1) - min_gen_t + 1
            for (m, (mt, mw)) in bares:
                if mt > lim_t:
                    break
                rec(i + 1, rem_t - mt, rem_w - mw, acc + [m])

        rec(0, t, w, [])
        terms.sort()
        sl = Slice(tuple(terms), {tm: i for i, tm in enumerate(terms)})
        self._slices[key] = sl
        return sl

    # -- differential ------------------------------------------------------
    def d_matrix(self, f: int, t: int, w: int):
        """Rows (ints over target slice) of d on slice (f, t, w)."""
        key = (f, t, w)
        if key in self._dmat:
            return self._dmat[key]
        src = self.slice(f, t, w)
        tgt = self.slice(f + 1, t, w)
        rows = []
        for term in src.basis:
            v = 0
            for t2 in differential(term, self.M):
                v ^= 1 << tgt.index[t2]
            rows.append(v)
        self._dmat[key] = rows
        return rows

    def d_squared_zero(self, f: int, t: int, w: int) -> bool:
        src = self.slice(f, t, w)
        for term in src.basis:
            dd = set()
            for t2 in differential(term, self.M):
                dd ^= differential(t2, self.M)
            if dd:
                return False
        return True

    # -- cohomology ----------------------------------------------------------
    def ext_slice(self, f: int, t: int, w: int):
        """(dimension, representative cocycles, reduction data) at (f, t, w).

        Returns (dim, reps, (pivots, ech, rep_vectors)) where reps are echelon
        representatives of cocycles modulo coboundaries, as int masks over the
        slice basis.
        """
        key = (f, t, w)
        if key in self._ext:
            return self._ext[key]
        n = len(self.slice(f, t, w).basis)
        if n == 0:
            self._ext[key] = (0, [], ([], []))
            return self._ext[key]
        rows = self.d_matrix(f, t, w)
        cocycles = gf2.left_nullspace(rows)
        if f == 0:
            brows = []
        else:
            brows = [r for r in self.d_matrix(f - 1, t, w) if r]
        piv_b, ech_b = gf2.rref(brows, n)
        reps = []
        piv_all, ech_all = list(piv_b), list(ech_b)
        for z in sorted(cocycles):
            r = gf2.reduce_vector(z, piv_all, ech_all)
            if r:
                reps.append(r)
                lead = (r & -r).bit_length() - 1
                # keep echelon shape
                ins = 0
                while ins < len(piv_all) and piv_all[ins] < lead:
                    ins += 1
                piv_all.insert(ins, lead)
                ech_all.insert(ins, r)
        reps.sort()
        self._ext[key] = (len(reps), reps, (piv_b, ech_b))
        return self._ext[key]

    def ext_dim(self, s: int, f: int, w: int) -> int:
        return self.ext_slice(f, s + f, w)[0]

    def class_vector(self, f: int, t: int, w: int, el) -> int:
        """Coordinates of a cochain element in the slice basis."""
        sl = self.slice(f, t, w)
        v = 0
        for term in el:
            v ^= 1 << sl.index[term]
        return v

    def element_of(self, f: int, t: int, w: int, vec: int):
        sl = self.slice(f, t, w)
        out = set()
        i = 0
        while vec:
            if vec & 1:
                out ^= {sl.basis[i]}
            vec >>= 1
            i += 1
        return out

    def reduce_to_class(self, f: int, t: int, w: int, el):
        """Class coordinates of a cocycle in the chosen representative basis.

        Returns a set of representative indices (mod-2 combination).
        """
        dim, reps, (piv_b, ech_b) = self.ext_slice(f, t, w)
        v = self.class_vector(f, t, w, el)
        v = gf2.reduce_vector(v, piv_b, ech_b)
        out = set()
        for i, r in enumerate(reps):
            lead = (r & -r).bit_length() - 1
            if (v >> lead) & 1:
                v ^= r
                out ^= {i}
        if v:
            raise AssertionError("element is not a cocycle modulo coboundaries")
        return out


def concat(x_el, y_el, kind, field):
    """Cobar cup product: concatenation with scalar pushes.

    ``x_el`` must live over the trivial comodule (its gen slot is the unit).
    """
    out = set()
    for (fx, cx, gx) in x_el:
        if gx != "1":
            raise ValueError("left product factor must live over the unit")
        for (fy, cy, gy) in y_el:
            for tm in push_through(cx, fy, cy, gy, kind, field):
                fs, cf, g = tm
                out ^= {(fx + fs, cf, g)}
    return out


def solve_bounding(C: CobarComplex, f: int, t: int, w: int, el):
    """A cochain n in slice (f-1) with d(n) = el, or None."""
    rows = C.d_matrix(f - 1, t, w)
    n = len(C.slice(f, t, w).basis)
    target = C.class_vector(f, t, w, el)
    sol = gf2.solve(rows, n, target)
    if sol is None:
        return None
    return C.element_of(f - 1, t, w, sol)
