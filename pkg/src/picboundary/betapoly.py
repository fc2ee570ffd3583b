"""Exact arithmetic in the rational function field Q(b).

Polynomials are dense tuples of Fractions, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple). BetaScalar is a
reduced fraction of two such polynomials with monic denominator; it is the
coefficient field for one-parameter deformation families, where b is the
deformation parameter.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PicBoundaryError

# -- dense polynomial helpers -------------------------------------------------


def poly(coeffs) -> tuple:
    """Normalize an iterable of numbers into a trimmed Fraction tuple."""
    t = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
    while t and t[-1] == 0:
        t.pop()
    return tuple(t)


def pconst(c) -> tuple:
    return poly([c])


def padd(a, b) -> tuple:
    n = max(len(a), len(b))
    return poly(
        [
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)
        ]
    )


def pneg(a) -> tuple:
    return tuple(-c for c in a)


def psub(a, b) -> tuple:
    return padd(a, pneg(b))


def pmul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return poly(out)


def pdivmod(a, b) -> tuple:
    """Quotient and remainder of a by b (b nonzero)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        if c:
            q[k] = c
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    return poly(q), poly(rem)


def pgcd(a, b) -> tuple:
    """Monic greatest common divisor."""
    while b:
        a, b = b, pdivmod(a, b)[1]
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


def porder(a) -> int:
    """Degree of the lowest nonzero term; -1 for the zero polynomial."""
    for i, c in enumerate(a):
        if c:
            return i
    return -1


def pshift_down(a, k: int) -> tuple:
    """Divide by b^k (requires order >= k)."""
    if k == 0:
        return a
    if porder(a) < k:
        raise PicBoundaryError(f"polynomial has order below {k}")
    return a[k:]


def peval(a, x) -> Fraction:
    v = Fraction(0)
    for c in reversed(a):
        v = v * Fraction(x) + c
    return v


def pdeg(a) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(a) - 1


def ptext(a, var: str = "b") -> str:
    """Human-readable form, ascending powers: '1 + 2*b + b^2'."""
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            power = var if i == 1 else f"{var}^{i}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


# -- the coefficient field ----------------------------------------------------


class BetaScalar:
    """A reduced rational function num/den in the parameter b.

    Canonical form: gcd(num, den) = 1 and den monic, so equality is
    componentwise. Supports field arithmetic, order at b = 0, and
    evaluation at b = 0 when defined.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num = poly(num)
        den = poly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), pconst(1)
            return
        if len(den) == 1:
            # gcd with a constant is 1, so only the monic rescale applies
            lead = den[0]
            if lead != 1:
                num = tuple(c / lead for c in num)
            self.num, self.den = num, (Fraction(1),)
            return
        g = pgcd(num, den)
        if pdeg(g) > 0:
            num = pdivmod(num, g)[0]
            den = pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        self.num, self.den = num, den

    @classmethod
    def constant(cls, c) -> "BetaScalar":
        return cls(poly([c]))

    @classmethod
    def beta_power(cls, k: int) -> "BetaScalar":
        return cls(poly([0] * k + [1]))

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = _coerce(other)
        if len(self.den) == 1 and len(other.den) == 1:
            # canonical constant denominators are 1, so no cross terms
            return BetaScalar(padd(self.num, other.num))
        return BetaScalar(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return BetaScalar(pneg(self.num), self.den)

    def __sub__(self, other):
        return self.__add__(-_coerce(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = _coerce(other)
        if len(self.den) == 1 and len(other.den) == 1:
            return BetaScalar(pmul(self.num, other.num))
        return BetaScalar(
            pmul(self.num, other.num), pmul(self.den, other.den)
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return BetaScalar(
            pmul(self.num, other.den), pmul(self.den, other.num)
        )

    def __rtruediv__(self, other):
        return _coerce(other).__truediv__(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BetaScalar.constant(other)
        if not isinstance(other, BetaScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def order(self) -> int:
        """Order of vanishing at b = 0 (negative for poles); 0 order for 0."""
        if not self.num:
            raise PicBoundaryError("the zero scalar has no order")
        return porder(self.num) - porder(self.den)

    def at_zero(self) -> Fraction:
        d = peval(self.den, 0)
        if d == 0:
            raise PicBoundaryError("pole at b = 0")
        return peval(self.num, 0) / d

    def is_polynomial(self) -> bool:
        return self.den == pconst(1)

    def __str__(self):
        if self.is_polynomial():
            return ptext(self.num)
        return f"({ptext(self.num)})/({ptext(self.den)})"

    def __repr__(self):
        return f"BetaScalar({self})"


def _coerce(x) -> BetaScalar:
    if isinstance(x, BetaScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return BetaScalar.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to BetaScalar")
