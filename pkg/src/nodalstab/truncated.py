"""Exact arithmetic in k[pi]/(pi^(n+1)) and the matrix-group identities
of the determinant-correction step.

Scalars are coefficient vectors over a prime field; a scalar is a unit
exactly when its constant coefficient is nonzero.  The stage-n identity
det(I + pi^n A) = 1 + pi^n tr(A) holds because pi^(2n) dies at this
truncation once n >= 1, and it is what makes the kernel of the one-stage
reduction of SL abelian and trace-classified.  The torsor correction
multiplies a cocycle of invertible matrices by trace-section lifts so
its determinant picks up a prescribed unit.
"""

from dataclasses import dataclass

from .errors import InvalidInput, NotUnit
from .fields import _is_prime


@dataclass(frozen=True)
class TruncatedScalar:
    """Element of k[pi]/(pi^(n+1)) over k = F_p; coeffs[k] multiplies pi^k."""

    p: int
    n: int
    coeffs: tuple

    def __post_init__(self):
        if not _is_prime(self.p):
            raise InvalidInput(f"{self.p} is not prime")
        if self.n < 0:
            raise InvalidInput("truncation order must be nonnegative")
        cs = tuple(int(x) % self.p for x in self.coeffs)
        if len(cs) != self.n + 1:
            raise InvalidInput(f"need {self.n + 1} coefficients, got {len(cs)}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def zero(cls, p, n):
        return cls(p, n, (0,) * (n + 1))

    @classmethod
    def one(cls, p, n):
        return cls(p, n, (1,) + (0,) * n)

    @classmethod
    def pi_power(cls, p, n, k):
        if k > n:
            return cls.zero(p, n)
        return cls(p, n, tuple(1 if j == k else 0 for j in range(n + 1)))

    @classmethod
    def constant(cls, p, n, value):
        return cls(p, n, (value,) + (0,) * n)

    def _like(self, other):
        if not isinstance(other, TruncatedScalar) or (other.p, other.n) != (self.p, self.n):
            raise InvalidInput("scalars belong to different truncated rings")
        return other

    def __add__(self, other):
        self._like(other)
        return TruncatedScalar(self.p, self.n,
                               tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._like(other)
        return TruncatedScalar(self.p, self.n,
                               tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncatedScalar(self.p, self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        self._like(other)
        out = [0] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedScalar(self.p, self.n, tuple(out))

    @property
    def is_unit(self) -> bool:
        return self.coeffs[0] % self.p != 0

    @property
    def is_zero(self) -> bool:
        return all(a % self.p == 0 for a in self.coeffs)

    def inverse(self):
        """Coefficient-by-coefficient inversion; needs a unit."""
        if not self.is_unit:
            raise NotUnit("scalar with zero constant term has no inverse")
        c0_inv = pow(self.coeffs[0], self.p - 2, self.p)
        out = [c0_inv]
        for k in range(1, self.n + 1):
            acc = sum(self.coeffs[i] * out[k - i] for i in range(1, k + 1))
            out.append((-c0_inv * acc) % self.p)
        return TruncatedScalar(self.p, self.n, tuple(out))

    def reduce(self, m: int):
        """Image in k[pi]/(pi^(m+1)) for m <= n."""
        if not 0 <= m <= self.n:
            raise InvalidInput(f"cannot reduce order {self.n} to order {m}")
        return TruncatedScalar(self.p, m, self.coeffs[:m + 1])

    def extend(self, m: int):
        """Arbitrary preimage at order m >= n (pads zero coefficients)."""
        if m < self.n:
            raise InvalidInput(f"cannot extend order {self.n} down to {m}")
        return TruncatedScalar(self.p, m, self.coeffs + (0,) * (m - self.n))

    def __repr__(self):
        return f"TruncatedScalar(p={self.p}, n={self.n}, coeffs={self.coeffs})"


@dataclass(frozen=True)
class TruncatedMatrix:
    """Square matrix of truncated scalars in one common ring."""

    p: int
    n: int
    entries: tuple

    def __post_init__(self):
        rows = []
        for row in self.entries:
            cells = []
            for x in row:
                if not isinstance(x, TruncatedScalar):
                    x = TruncatedScalar(self.p, self.n, x)
                if (x.p, x.n) != (self.p, self.n):
                    raise InvalidInput("matrix entries belong to different rings")
                cells.append(x)
            rows.append(tuple(cells))
        r = len(rows)
        if r == 0 or any(len(row) != r for row in rows):
            raise InvalidInput("matrix must be square and nonempty")
        object.__setattr__(self, "entries", tuple(rows))

    @property
    def r(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, p, n, r):
        one, zero = TruncatedScalar.one(p, n), TruncatedScalar.zero(p, n)
        return cls(p, n, tuple(tuple(one if i == j else zero for j in range(r))
                               for i in range(r)))

    @classmethod
    def from_int_entries(cls, p, n, rows):
        """Constant matrix: each integer becomes a pi-degree-0 scalar."""
        return cls(p, n, tuple(tuple(TruncatedScalar.constant(p, n, x) for x in row)
                               for row in rows))

    def __matmul__(self, other):
        if (other.p, other.n, other.r) != (self.p, self.n, self.r):
            raise InvalidInput("matrix shapes or rings differ")
        r = self.r
        return TruncatedMatrix(self.p, self.n, tuple(
            tuple(sum((self.entries[i][k] * other.entries[k][j] for k in range(r)),
                      TruncatedScalar.zero(self.p, self.n))
                  for j in range(r))
            for i in range(r)))

    def __add__(self, other):
        if (other.p, other.n, other.r) != (self.p, self.n, self.r):
            raise InvalidInput("matrix shapes or rings differ")
        return TruncatedMatrix(self.p, self.n, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)))

    def scale(self, s: TruncatedScalar):
        return TruncatedMatrix(self.p, self.n, tuple(
            tuple(s * x for x in row) for row in self.entries))

    def trace(self) -> TruncatedScalar:
        return sum((self.entries[i][i] for i in range(self.r)),
                   TruncatedScalar.zero(self.p, self.n))

    def det(self) -> TruncatedScalar:
        """Cofactor expansion; valid over any commutative ring."""
        ent = self.entries

        def rec(rows, cols):
            if len(cols) == 1:
                return ent[rows[0]][cols[0]]
            top, rest = rows[0], rows[1:]
            acc = TruncatedScalar.zero(self.p, self.n)
            for k, j in enumerate(cols):
                minor = rec(rest, cols[:k] + cols[k + 1:])
                term = ent[top][j] * minor
                acc = acc + term if k % 2 == 0 else acc - term
            return acc

        idx = tuple(range(self.r))
        return rec(idx, idx)

    @property
    def is_invertible(self) -> bool:
        """Invertible iff the constant-term matrix is invertible over k."""
        return self.det().is_unit

    def reduce(self, m: int):
        return TruncatedMatrix(self.p, m, tuple(
            tuple(x.reduce(m) for x in row) for row in self.entries))

    def extend(self, m: int):
        return TruncatedMatrix(self.p, m, tuple(
            tuple(x.extend(m) for x in row) for row in self.entries))


@dataclass(frozen=True)
class DetTraceVerdict:
    lhs: TruncatedScalar   # det(I + pi^n A)
    rhs: TruncatedScalar   # 1 + pi^n tr(A)
    holds: bool


@dataclass(frozen=True)
class SlKernelVerdict:
    det_is_one: bool
    reduces_to_identity: bool
    trace_residue: int | None   # tr(B) mod p when M = I + pi^n B, else None
    in_kernel: bool             # det_is_one and reduces_to_identity
    trace_condition: bool       # reduces_to_identity and trace_residue == 0
    biconditional_holds: bool


def one_plus_pi_n(p: int, n: int, A) -> TruncatedMatrix:
    """The matrix I + pi^n A for an integer matrix A over k."""
    r = len(A)
    pin = TruncatedScalar.pi_power(p, n, n)
    base = TruncatedMatrix.from_int_entries(p, n, A).scale(pin)
    return TruncatedMatrix.identity(p, n, r) + base


def det_trace_identity(p: int, A, n: int) -> DetTraceVerdict:
    """Check det(I + pi^n A) = 1 + pi^n tr(A) at truncation order n >= 1."""
    if n < 1:
        raise InvalidInput("the determinant-trace identity needs n >= 1")
    if not A or any(len(row) != len(A) for row in A):
        raise InvalidInput("A must be square and nonempty")
    lhs = one_plus_pi_n(p, n, A).det()
    tr = sum(A[i][i] for i in range(len(A))) % p
    rhs = TruncatedScalar.one(p, n) + TruncatedScalar(
        p, n, tuple(tr if k == n else 0 for k in range(n + 1)))
    return DetTraceVerdict(lhs=lhs, rhs=rhs, holds=lhs == rhs)


def sl_kernel_check(M: TruncatedMatrix) -> SlKernelVerdict:
    """Both descriptions of the kernel of the one-stage SL reduction.

    A matrix at truncation order n lies in the kernel iff it has
    determinant 1 and reduces to the identity one stage down, and that
    holds iff it is I + pi^n B with tr(B) = 0 in k.  The verdict reports
    each condition and the biconditional.
    """
    if M.n < 1:
        raise InvalidInput("kernel test needs truncation order n >= 1")
    n, p, r = M.n, M.p, M.r
    det_is_one = M.det() == TruncatedScalar.one(p, n)
    reduces = M.reduce(n - 1) == TruncatedMatrix.identity(p, n - 1, r)
    trace_residue = None
    if reduces:
        trace_residue = sum(M.entries[i][i].coeffs[n] for i in range(r)) % p
    in_kernel = det_is_one and reduces
    trace_condition = reduces and trace_residue == 0
    return SlKernelVerdict(det_is_one=det_is_one, reduces_to_identity=reduces,
                           trace_residue=trace_residue, in_kernel=in_kernel,
                           trace_condition=trace_condition,
                           biconditional_holds=in_kernel == trace_condition)


def trace_section(lam: TruncatedScalar, r: int) -> TruncatedMatrix:
    """Section of the trace map: lam in the (1,1) slot, zeros elsewhere."""
    if r < 1:
        raise InvalidInput("matrix size must be positive")
    zero = TruncatedScalar.zero(lam.p, lam.n)
    return TruncatedMatrix(lam.p, lam.n, tuple(
        tuple(lam if i == j == 0 else zero for j in range(r)) for i in range(r)))


def det_section(u: TruncatedScalar, r: int) -> TruncatedMatrix:
    """Section of the determinant map: diag(u, 1, ..., 1); u must be a unit."""
    if r < 1:
        raise InvalidInput("matrix size must be positive")
    if not u.is_unit:
        raise NotUnit("determinant section needs a unit scalar")
    one, zero = TruncatedScalar.one(u.p, u.n), TruncatedScalar.zero(u.p, u.n)
    return TruncatedMatrix(u.p, u.n, tuple(
        tuple((u if i == 0 else one) if i == j else zero for j in range(r))
        for i in range(r)))


def torsor_correct(cocycle, gammas) -> list:
    """Multiply each cocycle matrix by the trace-section lift of its unit.

    Every gamma must lie in 1 + pi^n R.  Writing gamma = 1 + pi^n lam,
    the lift is I + pi^n phi(lam), and the corrected matrix has
    determinant gamma times the old determinant, which is the
    commutativity this step depends on.
    """
    cocycle, gammas = list(cocycle), list(gammas)
    if len(cocycle) != len(gammas):
        raise InvalidInput("cocycle and unit lists must have equal length")
    out = []
    for F, gamma in zip(cocycle, gammas):
        if (F.p, F.n) != (gamma.p, gamma.n):
            raise InvalidInput("cocycle and units must live in the same ring")
        n, p = F.n, F.p
        if n < 1:
            raise InvalidInput("torsor correction needs truncation order n >= 1")
        if not F.is_invertible:
            raise InvalidInput("cocycle matrices must be invertible")
        if gamma.coeffs[0] != 1 or any(gamma.coeffs[k] != 0 for k in range(1, n)):
            raise InvalidInput("units must lie in 1 + pi^n R")
        lam = TruncatedScalar.constant(p, n, gamma.coeffs[n])
        pin = TruncatedScalar.pi_power(p, n, n)
        lift = TruncatedMatrix.identity(p, n, F.r) + trace_section(lam, F.r).scale(pin)
        out.append(lift @ F)
    return out


def sl_lift(M: TruncatedMatrix) -> TruncatedMatrix:
    """Lift a determinant-1 matrix one truncation stage, keeping det = 1.

    Pads the coefficients, then rescales the first column by the inverse
    of the padded determinant (a unit in 1 + pi^(n+1) R), which fixes the
    determinant without disturbing the reduction.
    """
    if M.det() != TruncatedScalar.one(M.p, M.n):
        raise InvalidInput("sl_lift needs a determinant-1 matrix")
    padded = M.extend(M.n + 1)
    u = padded.det()
    correction = det_section(u.inverse(), M.r)
    return padded @ correction
