"""Exact coefficient fields: the rationals and prime fields GF(p).

Scalars are plain values (``fractions.Fraction`` over Q, ints in ``[0, p)``
over GF(p)); a ``Field`` instance supplies the arithmetic.  Both
representations are canonical, so scalar equality is plain ``==``.
"""

from __future__ import annotations

from fractions import Fraction


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Q (char 0) or GF(p) (char p prime)."""

    def __init__(self, char=0):
        char = int(char)
        if char != 0 and not _is_prime(char):
            raise ValueError(f"characteristic must be 0 or a prime, got {char}")
        self.char = char

    @property
    def is_finite(self):
        return self.char != 0

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "Q" if self.char == 0 else f"GF({self.char})"

    # -- element construction ------------------------------------------

    def of(self, a, b=1):
        if self.char == 0:
            return Fraction(a, b)
        if b % self.char == 0:
            raise ZeroDivisionError("denominator not invertible in GF(p)")
        return a * pow(b, -1, self.char) % self.char

    @property
    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.of(int(num), int(den))
        return self.of(int(text))

    def elements(self):
        """All field elements; finite fields only."""
        if not self.is_finite:
            raise ValueError("Q is infinite")
        return list(range(self.char))

    # -- arithmetic -----------------------------------------------------

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if self.char == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        return pow(a, -1, self.char)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def to_str(self, a):
        return str(a)


QQ = Field(0)


def GF(p):
    return Field(p)
