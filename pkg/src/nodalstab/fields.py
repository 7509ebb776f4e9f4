"""Exact coefficient fields and small dense linear algebra over them.

Two concrete fields are supported: prime fields F_p (elements are ints in
[0, p)) and the rationals Q (elements are ``fractions.Fraction``).  Both
expose the same tiny protocol, enough for the gluing-flag rank
computations and for root searches.
"""

from fractions import Fraction

from .errors import InvalidInput, NoRoot


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """The field F_p for a prime p, elements represented as ints in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise InvalidInput(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1

    def element(self, x) -> int:
        return int(x) % self.p

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
            raise ZeroDivisionError("inverse of 0 in " + self.name)
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def nonzero_elements(self):
        return range(1, self.p)

    def parse(self, s) -> int:
        return self.element(int(s))

    def format(self, a) -> str:
        return str(a % self.p)

    def rth_root(self, a, r: int):
        """Smallest b in F_p^x with b^r = a, by exhaustive search."""
        a = self.element(a)
        if a == 0:
            raise InvalidInput("r-th roots are only taken of nonzero scalars")
        for b in self.nonzero_elements():
            if pow(b, r, self.p) == a:
                return b
        raise NoRoot(f"{a} has no {r}-th root in {self.name}")

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p


def _int_nth_root(m: int, r: int):
    """Exact floor r-th root of m >= 0 (bisection on ints)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m in (0, 1):
        return m
    lo, hi = 1, 1 << ((m.bit_length() + r - 1) // r + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**r <= m:
            lo = mid
        else:
            hi = mid - 1
    return lo


class RationalField:
    """The rationals, elements represented as ``Fraction``."""

    def __init__(self):
        self.name = "Q"
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def element(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def parse(self, s) -> Fraction:
        return Fraction(str(s))

    def format(self, a) -> str:
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def rth_root(self, a, r: int):
        """Exact rational r-th root when one exists."""
        a = Fraction(a)
        if a == 0:
            raise InvalidInput("r-th roots are only taken of nonzero scalars")
        if a < 0 and r % 2 == 0:
            raise NoRoot(f"{a} has no rational {r}-th root (negative, even exponent)")
        num, den = abs(a.numerator), a.denominator
        rn, rd = _int_nth_root(num, r), _int_nth_root(den, r)
        if rn**r != num or rd**r != den:
            raise NoRoot(f"{a} has no rational {r}-th root")
        root = Fraction(rn, rd)
        return -root if a < 0 else root

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)


def parse_field(name: str):
    """Build a field from a descriptor string: "Q" or "F<p>"."""
    name = name.strip()
    if name == "Q":
        return RationalField()
    if name.startswith("F") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    raise InvalidInput(f"unknown field descriptor {name!r}")


def mat_rank(field, rows) -> int:
    """Rank of a dense matrix (list of rows) by Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    col = 0
    while rank < len(m) and col < ncols:
        pivot = next((i for i in range(rank, len(m)) if not field.is_zero(m[i][col])), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = field.inv(m[rank][col])
        m[rank] = [field.mul(inv, x) for x in m[rank]]
        for i in range(len(m)):
            if i != rank and not field.is_zero(m[i][col]):
                f = m[i][col]
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def mat_det(field, rows):
    """Determinant of a square matrix over a field, by elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise InvalidInput("determinant needs a square matrix")
    det = field.one
    for col in range(n):
        pivot = next((i for i in range(col, n) if not field.is_zero(m[i][col])), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = field.neg(det)
        det = field.mul(det, m[col][col])
        inv = field.inv(m[col][col])
        for i in range(col + 1, n):
            if not field.is_zero(m[i][col]):
                f = field.mul(inv, m[i][col])
                m[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(m[i], m[col])]
    return det
