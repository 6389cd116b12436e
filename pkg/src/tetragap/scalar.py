"""
Exact scalars - rationals and the quadratic field Q(sqrt k).

Rationals are plain `fractions.Fraction` values (canonical by construction).
`QuadExt` represents a + b*sqrt(k) with rational a, b and a square-free k > 1,
so equality is componentwise. A computation never mixes radicands; a Fraction
meeting a QuadExt is promoted with b = 0.
"""
import re
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterable, Optional, Tuple, Union

from sympy import factorint

from .config import LITERAL_PATTERN, APPROX_DIGITS, APPROX_PRECISION, APPROX_PREFIX
from .errors import FieldError, LiteralError

_LITERAL_RE = re.compile(LITERAL_PATTERN)


@lru_cache(maxsize=None)
def is_squarefree(k: int) -> bool:
    """True if no square of a prime divides k (k >= 1)."""
    if k < 1:
        return False
    return all(e == 1 for e in factorint(k).values())


def split_square(n: int) -> Tuple[int, int]:
    """Write n > 0 as s^2 * f with f square-free; returns (s, f)."""
    square, free = 1, 1
    for p, e in factorint(n).items():
        square *= int(p) ** (e // 2)
        if e % 2:
            free *= int(p)
    return square, free


@dataclass(frozen=True, eq=False)
class QuadExt:
    """Element a + b*sqrt(k) of Q(sqrt k)."""

    a: Fraction
    b: Fraction
    k: int

    def __post_init__(self):
        object.__setattr__(self, 'a', Fraction(self.a))
        object.__setattr__(self, 'b', Fraction(self.b))
        if isinstance(self.k, bool) or not isinstance(self.k, int):
            raise FieldError(f"radicand must be an integer, got {self.k!r}")
        if self.k < 2 or not is_squarefree(self.k):
            raise FieldError(f"radicand must be a square-free integer > 1, got {self.k}")

    def _coerce(self, other) -> Optional['QuadExt']:
        if isinstance(other, QuadExt):
            if other.k != self.k:
                raise FieldError(f"mixed radicands: sqrt({self.k}) and sqrt({other.k})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.k)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return QuadExt(self.a + q.a, self.b + q.b, self.k)

    __radd__ = __add__

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return QuadExt(self.a - q.a, self.b - q.b, self.k)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return QuadExt(q.a - self.a, q.b - self.b, self.k)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return QuadExt(self.a * q.a + self.k * self.b * q.b,
                       self.a * q.b + self.b * q.a, self.k)

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self * q.inverse()

    def __rtruediv__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q * self.inverse()

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.k)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = QuadExt(Fraction(1), Fraction(0), self.k)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self) -> Fraction:
        """a^2 - k*b^2 (product with the conjugate)."""
        return self.a * self.a - self.k * self.b * self.b

    def conjugate(self) -> 'QuadExt':
        return QuadExt(self.a, -self.b, self.k)

    def inverse(self) -> 'QuadExt':
        n = self.norm()
        if n == 0:
            raise FieldError("division by zero")
        return QuadExt(self.a / n, -self.b / n, self.k)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.k != self.k:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.k))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def _compare(self, other) -> Optional[int]:
        q = self._coerce(other)
        if q is None:
            return None
        return sign(self - q)

    def __lt__(self, other):
        s = self._compare(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._compare(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._compare(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._compare(other)
        return NotImplemented if s is None else s >= 0

    def __abs__(self):
        return -self if sign(self) < 0 else self

    def __float__(self):
        return float(to_decimal(self))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"QuadExt({format_scalar(self)})"


Scalar = Union[Fraction, QuadExt]


def sign(s) -> int:
    """Exact sign of a scalar, no floating point involved."""
    if isinstance(s, QuadExt):
        return sign_radical(s.a, s.b, s.k)
    return (s > 0) - (s < 0)


def sign_radical(a, b, k) -> int:
    """
    Sign of a + b*sqrt(k) for ordered-field elements a, b and k >= 0.

    k need not be square-free: the case split only compares a^2 with k*b^2.
    """
    if sign(k) < 0:
        raise FieldError("negative radicand")
    sa, sb = sign(a), sign(b)
    if sb == 0 or sign(k) == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # a and b*sqrt(k) have opposite signs
    diff = sign(a * a - k * b * b)
    if diff > 0:
        return sa
    if diff < 0:
        return sb
    return 0


def exact_sqrt(s) -> Optional[Scalar]:
    """
    Square root inside the field of s, or None when it leaves the field.

    For a rational, both numerator and denominator must be perfect squares.
    The root returned is the nonnegative one.
    """
    if sign(s) < 0:
        raise FieldError(f"square root of a negative number: {format_scalar(s)}")
    if isinstance(s, QuadExt):
        return _quad_sqrt(s)
    s = Fraction(s)
    rn, rd = isqrt(s.numerator), isqrt(s.denominator)
    if rn * rn == s.numerator and rd * rd == s.denominator:
        return Fraction(rn, rd)
    return None


def _quad_sqrt(q: QuadExt) -> Optional[QuadExt]:
    if q.b == 0:
        root = exact_sqrt(q.a)
        if root is not None:
            return QuadExt(root, 0, q.k)
        root = exact_sqrt(q.a / q.k)
        if root is not None:
            return QuadExt(0, root, q.k)
        return None

    # (p + t*sqrt(k))^2 = q forces p^2 to be a root of X^2 - a X + k b^2 / 4
    norm = q.norm()
    if norm < 0:
        return None
    n = exact_sqrt(norm)
    if n is None:
        return None
    for p2 in ((q.a + n) / 2, (q.a - n) / 2):
        if p2 <= 0:
            continue
        p = exact_sqrt(p2)
        if p is None:
            continue
        root = QuadExt(p, q.b / (2 * p), q.k)
        if root * root == q:
            return root if sign(root) >= 0 else -root
    return None


def sqrt_in_extension(q) -> Scalar:
    """
    sqrt(q) for a positive rational q, as a Fraction or as b*sqrt(k).

    The square-free part of numerator * denominator comes from factorint.
    """
    q = Fraction(q)
    if q < 0:
        raise FieldError(f"square root of a negative number: {q}")
    root = exact_sqrt(q)
    if root is not None:
        return root
    # sqrt(n/d) = sqrt(n*d)/d
    square, free = split_square(q.numerator * q.denominator)
    return QuadExt(0, Fraction(square, q.denominator), free)


def promote(s, k: Optional[int]) -> Scalar:
    """Lift a scalar into Q(sqrt k); k=None keeps it rational."""
    if k is None:
        if isinstance(s, QuadExt):
            raise FieldError(f"irrational value {format_scalar(s)} in a rational context")
        return Fraction(s)
    if isinstance(s, QuadExt):
        if s.k != k:
            raise FieldError(f"mixed radicands: sqrt({s.k}) and sqrt({k})")
        return s
    return QuadExt(Fraction(s), Fraction(0), k)


def common_radicand(values: Iterable) -> Optional[int]:
    """The radicand shared by all QuadExt values, or None if all are rational."""
    k = None
    for v in values:
        if isinstance(v, QuadExt):
            if k is not None and v.k != k:
                raise FieldError(f"mixed radicands: sqrt({k}) and sqrt({v.k})")
            k = v.k
    return k


def _dec(f: Fraction) -> Decimal:
    return Decimal(f.numerator) / Decimal(f.denominator)


def to_decimal(s, precision: int = APPROX_PRECISION) -> Decimal:
    """High-precision decimal value of a scalar (diagnostics and bounds only)."""
    with localcontext() as ctx:
        ctx.prec = precision
        if isinstance(s, QuadExt):
            return _dec(s.a) + _dec(s.b) * Decimal(s.k).sqrt()
        return _dec(Fraction(s))


def rational_lower_bound(s) -> Fraction:
    """A rational q with q <= s, certified by an exact comparison."""
    if not isinstance(s, QuadExt):
        return Fraction(s)
    approx = Fraction(to_decimal(s))
    margin = Fraction(1, 10 ** 30)
    candidate = approx - margin * (1 + abs(approx))
    while sign(s - candidate) < 0:
        margin *= 10
        candidate = approx - margin * (1 + abs(approx))
    return candidate


def format_scalar(s) -> str:
    """Canonical literal: "p/q", "p" or "p/q+r/s*sqrt(k)"; a zero sqrt part is dropped."""
    if isinstance(s, QuadExt):
        if s.b == 0:
            return str(s.a)
        op = '-' if s.b < 0 else '+'
        return f"{s.a}{op}{abs(s.b)}*sqrt({s.k})"
    return str(Fraction(s))


def format_approx(s) -> str:
    """Inexact decimal rendering, always flagged with a '~' prefix."""
    return f"{APPROX_PREFIX}{to_decimal(s):.{APPROX_DIGITS}g}"


def _parse_rational(token: str, text: str) -> Fraction:
    num, _, den = token.partition('/')
    if den and int(den) == 0:
        raise LiteralError(f"zero denominator in scalar literal: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_scalar(text: str) -> Scalar:
    """
    Parse a scalar literal (whitespace-insensitive).

    Args:
        text: "p/q", "p" or "p/q+r/s*sqrt(k)"

    Returns:
        Fraction, or QuadExt when a sqrt term is present

    Raises:
        LiteralError: malformed literal, zero denominator, bad radicand
    """
    compact = re.sub(r'\s+', '', text)
    match = _LITERAL_RE.match(compact)
    if not match:
        raise LiteralError(f"malformed scalar literal: {text!r}")

    a = _parse_rational(match['a'], text)
    if match['b'] is None:
        return a

    k = int(match['k'])
    if k <= 0:
        raise LiteralError(f"radicand must be positive: {text!r}")
    if isqrt(k) ** 2 == k:
        raise LiteralError(f"radicand is a perfect square: {text!r}")
    if not is_squarefree(k):
        raise LiteralError(f"radicand must be square-free: {text!r}")

    b = _parse_rational(match['b'], text)
    if match['sign'] == '-':
        b = -b
    return QuadExt(a, b, k)
