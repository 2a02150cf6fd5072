"""The (h,t) family of rank-2 Frobenius algebras on basis {1, x}.

Multiplication:    1*1 = 1,  1*x = x*1 = x,  x*x = h*x + t*1
Comultiplication:  D(1) = 1(x)x + x(x)1 - h*1(x)1,  D(x) = x(x)x + t*1(x)1
Unit i(1) = 1; counit e(1) = 0, e(x) = 1.

(h,t) = (0,0) is the Khovanov algebra V, (0,1) is Lee's algebra.  The
basis is graded by deg(1) = +1, deg(x) = -1; multiplication and
comultiplication are degree-homogeneous only when h = t = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import qdim_pow
from .rings import QQ, CoefficientRing

ONE = 0
X = 1
BASIS_NAMES = ("1", "x")
BASIS_DEGREE = (1, -1)


@dataclass(frozen=True)
class FrobeniusAlgebraSpec:
    """Structure tables of A_{h,t} over a coefficient ring.

    ``mul[a][b]`` and ``comul[a]`` map basis labels to sparse results:
    a tuple of (coefficient, label) resp. (coefficient, (label, label)).
    """

    ring: CoefficientRing
    h: object
    t: object
    mul: tuple = field(repr=False)
    comul: tuple = field(repr=False)
    counit: tuple = field(repr=False)

    @property
    def is_graded(self) -> bool:
        return self.ring.is_zero(self.h) and self.ring.is_zero(self.t)

    def multiply(self, a: int, b: int):
        return self.mul[a][b]

    def comultiply(self, a: int):
        return self.comul[a]

    def multiply_element(self, u: dict, v: dict) -> dict:
        """Product of two elements given as {basis label: coefficient}."""
        ring = self.ring
        out: dict[int, object] = {}
        for a, ca in u.items():
            for b, cb in v.items():
                for coeff, lab in self.mul[a][b]:
                    val = ring.add(out.get(lab, ring.zero), ring.mul(ring.mul(ca, cb), coeff))
                    out[lab] = val
        return {k: v for k, v in out.items() if not ring.is_zero(v)}

    def comultiply_element(self, u: dict) -> dict:
        ring = self.ring
        out: dict[tuple[int, int], object] = {}
        for a, ca in u.items():
            for coeff, (l1, l2) in self.comul[a]:
                key = (l1, l2)
                out[key] = ring.add(out.get(key, ring.zero), ring.mul(ca, coeff))
        return {k: v for k, v in out.items() if not ring.is_zero(v)}

    def counit_element(self, u: dict):
        ring = self.ring
        total = ring.zero
        for a, ca in u.items():
            total = ring.add(total, ring.mul(ca, self.counit[a]))
        return total


def frobenius_from_ht(h, t, ring: CoefficientRing = QQ) -> FrobeniusAlgebraSpec:
    """Build A_{h,t} over ``ring`` (h, t are coerced into the ring)."""
    h = ring.coerce(h)
    t = ring.coerce(t)
    one, zero = ring.one, ring.zero
    xx = tuple(
        (c, lab)
        for c, lab in ((h, X), (t, ONE))
        if not ring.is_zero(c)
    )
    mul = (
        (((one, ONE),), ((one, X),)),   # 1*1, 1*x
        (((one, X),), xx),              # x*1, x*x
    )
    comul_one = [(one, (ONE, X)), (one, (X, ONE))]
    if not ring.is_zero(h):
        comul_one.append((ring.neg(h), (ONE, ONE)))
    comul_x = [(one, (X, X))]
    if not ring.is_zero(t):
        comul_x.append((t, (ONE, ONE)))
    comul = (tuple(comul_one), tuple(comul_x))
    counit = (zero, one)
    return FrobeniusAlgebraSpec(ring=ring, h=h, t=t, mul=mul, comul=comul, counit=counit)


KHOVANOV = frobenius_from_ht(0, 0, QQ)
LEE = frobenius_from_ht(0, 1, QQ)


def _tensor_elements(parts: list[dict], ring: CoefficientRing) -> dict:
    """Tensor of single-factor elements into {tuple of labels: coeff}."""
    out = {(): ring.one}
    for part in parts:
        nxt: dict[tuple, object] = {}
        for labs, c in out.items():
            for lab, cl in part.items():
                key = labs + (lab,)
                nxt[key] = ring.add(nxt.get(key, ring.zero), ring.mul(c, cl))
        out = {k: v for k, v in nxt.items() if not ring.is_zero(v)}
    return out


def verify_frobenius(algebra: FrobeniusAlgebraSpec) -> list[str]:
    """Check the Frobenius axioms on the structure tables.

    Returns the list of failed axiom names (empty when all hold);
    never raises.  Includes the closed-surface identity
    m(D(v)) = m(m(D(1)), v), the algebraic shadow of the fact that the
    two genus-one surfaces with one input and one output boundary are
    homeomorphic.
    """
    ring = algebra.ring
    failures: list[str] = []
    basis = (ONE, X)

    def elem(lab: int) -> dict:
        return {lab: ring.one}

    def eq(u: dict, v: dict) -> bool:
        keys = set(u) | set(v)
        return all(ring.is_zero(ring.sub(u.get(k, ring.zero), v.get(k, ring.zero))) for k in keys)

    def pair_mul(pairs: dict, side: int, apply) -> dict:
        """Apply a 1->? map to one slot of sums of pure tensors."""
        out: dict = {}
        for (a, b), c in pairs.items():
            target = apply(elem(a if side == 0 else b))
            for lab, cl in target.items():
                if isinstance(lab, tuple):
                    key = lab + (b,) if side == 0 else (a,) + lab
                else:
                    key = (lab, b) if side == 0 else (a, lab)
                out[key] = ring.add(out.get(key, ring.zero), ring.mul(c, cl))
        return {k: v for k, v in out.items() if not ring.is_zero(v)}

    # associativity: (ab)c = a(bc)
    ok = True
    for a in basis:
        for b in basis:
            for c in basis:
                left = algebra.multiply_element(algebra.multiply_element(elem(a), elem(b)), elem(c))
                right = algebra.multiply_element(elem(a), algebra.multiply_element(elem(b), elem(c)))
                ok = ok and eq(left, right)
    if not ok:
        failures.append("associativity")

    # unit law: 1*a = a*1 = a
    ok = all(
        eq(algebra.multiply_element(elem(ONE), elem(a)), elem(a))
        and eq(algebra.multiply_element(elem(a), elem(ONE)), elem(a))
        for a in basis
    )
    if not ok:
        failures.append("unit")

    # coassociativity: (D ox id)D = (id ox D)D
    ok = True
    for a in basis:
        d = algebra.comultiply_element(elem(a))
        left: dict = {}
        right: dict = {}
        for (u, v), c in d.items():
            for cl, (p, q) in algebra.comul[u]:
                key = (p, q, v)
                left[key] = ring.add(left.get(key, ring.zero), ring.mul(c, cl))
            for cl, (p, q) in algebra.comul[v]:
                key = (u, p, q)
                right[key] = ring.add(right.get(key, ring.zero), ring.mul(c, cl))
        left = {k: v for k, v in left.items() if not ring.is_zero(v)}
        right = {k: v for k, v in right.items() if not ring.is_zero(v)}
        ok = ok and eq(left, right)
    if not ok:
        failures.append("coassociativity")

    # counit law: (e ox id)D = id = (id ox e)D
    ok = True
    for a in basis:
        d = algebra.comultiply_element(elem(a))
        left: dict = {}
        right: dict = {}
        for (u, v), c in d.items():
            left[v] = ring.add(left.get(v, ring.zero), ring.mul(c, algebra.counit[u]))
            right[u] = ring.add(right.get(u, ring.zero), ring.mul(c, algebra.counit[v]))
        left = {k: v for k, v in left.items() if not ring.is_zero(v)}
        right = {k: v for k, v in right.items() if not ring.is_zero(v)}
        ok = ok and eq(left, elem(a)) and eq(right, elem(a))
    if not ok:
        failures.append("counit")

    # Frobenius compatibility: D(ab) = (m ox id)(a ox D(b))
    ok = True
    for a in basis:
        for b in basis:
            left = algebra.comultiply_element(algebra.multiply_element(elem(a), elem(b)))
            right: dict = {}
            for (u, v), c in algebra.comultiply_element(elem(b)).items():
                for cl, lab in algebra.mul[a][u]:
                    key = (lab, v)
                    right[key] = ring.add(right.get(key, ring.zero), ring.mul(c, cl))
            right = {k: v for k, v in right.items() if not ring.is_zero(v)}
            ok = ok and eq(left, right)
    if not ok:
        failures.append("frobenius_compatibility")

    # non-degeneracy of <v, w> = e(vw): the Gram matrix must be invertible
    gram = [
        [algebra.counit_element(algebra.multiply_element(elem(a), elem(b))) for b in basis]
        for a in basis
    ]
    det = ring.sub(ring.mul(gram[0][0], gram[1][1]), ring.mul(gram[0][1], gram[1][0]))
    if ring.is_field:
        degenerate = ring.is_zero(det)
    else:
        # over Z the pairing is perfect only for unit determinant
        degenerate = det not in (ring.one, ring.neg(ring.one))
    if degenerate:
        failures.append("nondegeneracy")

    # genus juggling: m(D(v)) = m(m(D(1)), v) for all v
    handle = {lab: c for (u, v), c0 in algebra.comultiply_element(elem(ONE)).items()
              for c1, lab in algebra.mul[u][v]
              for c in [ring.mul(c0, c1)]}
    handle = {k: v for k, v in handle.items() if not ring.is_zero(v)}
    ok = True
    for a in basis:
        left: dict = {}
        for (u, v), c in algebra.comultiply_element(elem(a)).items():
            for cl, lab in algebra.mul[u][v]:
                left[lab] = ring.add(left.get(lab, ring.zero), ring.mul(c, cl))
        left = {k: v for k, v in left.items() if not ring.is_zero(v)}
        right = algebra.multiply_element(handle, elem(a))
        ok = ok and eq(left, right)
    if not ok:
        failures.append("genus_identity")

    return failures


def closed_surface_value(algebra: FrobeniusAlgebraSpec, genus: int):
    """TQFT value of the closed surface of the given genus.

    Composes unit, genus many handle operators m o D, then the counit.
    """
    if genus < 0:
        raise ValueError("genus must be non-negative")
    ring = algebra.ring
    state = {ONE: ring.one}
    for _ in range(genus):
        nxt: dict[int, object] = {}
        for a, c in state.items():
            for c0, (u, v) in algebra.comul[a]:
                for c1, lab in algebra.mul[u][v]:
                    nxt[lab] = ring.add(
                        nxt.get(lab, ring.zero), ring.mul(c, ring.mul(c0, c1))
                    )
        state = {k: v for k, v in nxt.items() if not ring.is_zero(v)}
    return algebra.counit_element(state)


__all__ = [
    "FrobeniusAlgebraSpec",
    "frobenius_from_ht",
    "verify_frobenius",
    "closed_surface_value",
    "qdim_pow",
    "KHOVANOV",
    "LEE",
    "ONE",
    "X",
    "BASIS_DEGREE",
    "BASIS_NAMES",
]
