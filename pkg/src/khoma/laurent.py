"""Integer Laurent polynomials in one variable.

The value type of Kauffman brackets, Jones polynomials, graded Euler
characteristics and graded dimensions.  Coefficients are exact Python
integers; there is no floating point anywhere.
"""

from __future__ import annotations

import re

from .errors import MalformedToken, NotDivisible


class LaurentPolynomial:
    """Immutable ``sum of c * q^e`` with integer ``c`` and integer ``e``.

    Zero coefficients are never stored.  Arithmetic is exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        clean = {e: c for e, c in (coeffs or {}).items() if c != 0}
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    @classmethod
    def q(cls, exponent: int = 1, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def from_string(cls, text: str, var: str = "q") -> "LaurentPolynomial":
        """Parse the serialization produced by :meth:`to_string`."""
        text = text.strip()
        if not text or text == "0":
            return cls.zero()
        # normalize leading sign, then split on +/- separators
        tokens = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
        coeffs: dict[int, int] = {}
        for tok in tokens:
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            if not tok:
                raise MalformedToken(f"empty term in polynomial {text!r}")
            m = re.fullmatch(rf"(?:(\d+)\*?)?(?:{var}(?:\^(-?\d+))?)?", tok)
            if not m or (m.group(1) is None and var not in tok):
                m2 = re.fullmatch(r"(\d+)", tok)
                if not m2:
                    raise MalformedToken(f"bad polynomial term {tok!r}")
                coeffs[0] = coeffs.get(0, 0) + sign * int(m2.group(1))
                continue
            coeff = int(m.group(1)) if m.group(1) else 1
            if var in tok:
                exp = int(m.group(2)) if m.group(2) else 1
            else:
                exp = 0
            coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
        return cls(coeffs)

    # -- ring operations ---------------------------------------------

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, l: int) -> "LaurentPolynomial":
        """Multiply by q^l (grading shift W{l})."""
        return LaurentPolynomial({e + l: c for e, c in self.coeffs.items()})

    def reciprocal(self) -> "LaurentPolynomial":
        """Substitute q -> q^-1 (mirror image on Jones polynomials)."""
        return LaurentPolynomial({-e: c for e, c in self.coeffs.items()})

    def divide_exact(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Exact quotient; raises NotDivisible when a remainder survives."""
        if not other.coeffs:
            raise NotDivisible("division by zero polynomial")
        rem = dict(self.coeffs)
        out: dict[int, int] = {}
        lead = max(other.coeffs)
        lead_c = other.coeffs[lead]
        while rem:
            e = max(rem)
            c = rem[e]
            if c % lead_c != 0:
                raise NotDivisible(f"{self} not divisible by {other}")
            factor_e, factor_c = e - lead, c // lead_c
            out[factor_e] = factor_c
            for oe, oc in other.coeffs.items():
                ne = oe + factor_e
                nv = rem.get(ne, 0) - oc * factor_c
                if nv:
                    rem[ne] = nv
                else:
                    rem.pop(ne, None)
        return LaurentPolynomial(out)

    # -- queries -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def evaluate_int(self, value: int) -> int:
        """Evaluate at a nonzero integer (negative exponents must clear)."""
        total = 0
        for e, c in self.coeffs.items():
            if e >= 0:
                total += c * value**e
            else:
                if value**(-e) == 0 or c % (value**(-e)):
                    raise ValueError("non-integral evaluation")
                total += c // (value**(-e))
        return total

    def substitute(self, poly: "LaurentPolynomial") -> "LaurentPolynomial":
        """Substitute the variable by another Laurent polynomial.

        Only valid for ordinary polynomials (no negative exponents).
        """
        if any(e < 0 for e in self.coeffs):
            raise ValueError("substitution requires non-negative exponents")
        total = LaurentPolynomial.zero()
        for e, c in self.coeffs.items():
            total = total + (poly**e) * c
        return total

    # -- rendering ---------------------------------------------------

    def to_string(self, var: str = "q") -> str:
        """Render as sorted `coef*var^exp` terms joined by +/-.

        Exponents ascend, matching table output like `q^-6 + q^-4 + 1`.
        """
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                term = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.coeffs!r})"


Q_PLUS_QINV = LaurentPolynomial({1: 1, -1: 1})


def qdim_pow(k: int) -> LaurentPolynomial:
    """(q + q^-1)^k, the graded dimension of a k-fold tensor power of V."""
    if k < 0:
        raise ValueError("tensor power must be non-negative")
    return Q_PLUS_QINV**k
