"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Scalars are plain Python values (``fractions.Fraction`` for the rationals,
``int`` reduced to ``[0, p)`` for a prime field), so equality and hashing
come for free and arithmetic never rounds.
"""

from fractions import Fraction

from .errors import PathAlgError


class FieldError(PathAlgError):
    pass


class Rationals:
    """The field of arbitrary-precision rationals."""

    char = 0
    name = "rat"

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def from_fraction(q):
        return Fraction(q)

    @staticmethod
    def parse(text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational literal {text!r}") from exc

    @staticmethod
    def format(a):
        return str(a)

    def __repr__(self):
        return "Rationals()"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rat")


class PrimeField:
    """The prime field of integers modulo p, p prime."""

    def __init__(self, p):
        if p < 2 or not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"fp:{p}"
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise FieldError(f"denominator of {q} vanishes mod {self.p}")
        return (q.numerator * pow(q.denominator, -1, self.p)) % self.p

    def parse(self, text):
        text = text.strip()
        try:
            if "/" in text:
                return self.from_fraction(Fraction(text))
            return int(text) % self.p
        except ValueError as exc:
            raise FieldError(f"bad prime-field literal {text!r}") from exc

    def format(self, a):
        return str(a % self.p)

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = Rationals()


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def field_from_name(name):
    """Resolve a CLI-style field selector: ``rat`` or ``fp:<p>``."""
    name = name.strip()
    if name == "rat":
        return QQ
    if name.startswith("fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise FieldError(f"bad field selector {name!r}") from None
        return PrimeField(p)
    raise FieldError(f"bad field selector {name!r}")
