"""
Exact Laurent polynomials in the variable v, with q = v**2.

Coefficients are arbitrary-precision Python integers; the zero polynomial
is the empty coefficient map, and no zero coefficient is ever stored.

>>> str(Q + ONE)
'v^2 + 1'
>>> V * V == Q
True
>>> lp_mul(lp_add(Q, lp_monomial(-1, 0)), lp_add(Q, ONE)) == lp_add(Q * Q, lp_monomial(-1, 0))
True
"""

from __future__ import annotations

__all__ = [
    "LaurentPoly", "lp_monomial", "lp_add", "lp_mul",
    "ZERO", "ONE", "V", "Q",
]


class LaurentPoly:
    """Sparse map from exponent of v to nonzero integer coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        # callers hand over ownership of `coeffs`; zeros are stripped here
        if coeffs:
            self.coeffs = {e: c for e, c in coeffs.items() if c != 0}
        else:
            self.coeffs = {}

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly(out)

    def scale(self, k: int) -> "LaurentPoly":
        """Multiply by the integer k."""
        if k == 0:
            return ZERO
        return LaurentPoly({e: k * c for e, c in self.coeffs.items()})

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by v**d."""
        return LaurentPoly({e + d: c for e, c in self.coeffs.items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                power = "v" if e == 1 else f"v^{e}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            terms.append((c < 0, body))
        first_neg, first_body = terms[0]
        text = ("-" if first_neg else "") + first_body
        for neg, body in terms[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"

    def to_dict(self) -> dict[str, int]:
        """JSON-friendly form: exponent (as string) -> coefficient."""
        return {str(e): c for e, c in sorted(self.coeffs.items())}


def lp_monomial(coeff: int, exp: int) -> LaurentPoly:
    """The monomial coeff * v**exp (zero coeff gives the zero polynomial)."""
    return LaurentPoly({exp: coeff})


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


ZERO = LaurentPoly()
ONE = lp_monomial(1, 0)
V = lp_monomial(1, 1)
Q = lp_monomial(1, 2)
