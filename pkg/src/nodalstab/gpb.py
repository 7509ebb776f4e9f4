"""Generalized parabolic bundle numerics and explicit gluing linear algebra.

A class lives on the normalization of an irreducible nodal curve: rank,
degree, and one two-point node divisor per node.  The canonical
structure puts the diagonal r-dimensional flag inside the 2r-dimensional
node fiber with weights (0, 1), so each node contributes its flag
dimension to the parabolic weight.  Gluing flags are stored as explicit
row-span matrices over an exact field, and descent to the nodal curve is
tested by rank computations on the two node projections.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegreeBound,
    DimensionBound,
    InvalidInput,
    SingularProjection,
)
from .fields import mat_det, mat_rank

WEIGHTS = (0, 1)


@dataclass(frozen=True)
class GpbClass:
    """Numerical data of a generalized parabolic bundle with weights (0, 1)."""

    rank: int
    degree: int
    nodes: int
    flag_dims: tuple = None   # per node (m1, m2); defaults to the canonical (r, r)

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidInput("rank must be positive")
        if self.nodes < 0:
            raise InvalidInput("node count must be nonnegative")
        dims = self.flag_dims
        if dims is None:
            dims = tuple((self.rank, self.rank) for _ in range(self.nodes))
        else:
            dims = tuple((int(a), int(b)) for a, b in dims)
        if len(dims) != self.nodes:
            raise InvalidInput("need one flag dimension pair per node")
        for m1, m2 in dims:
            if m1 < 0 or m2 < 0 or m1 + m2 != 2 * self.rank:
                raise InvalidInput("flag dimensions at a node must satisfy m1 + m2 = 2r")
        object.__setattr__(self, "flag_dims", dims)

    @property
    def weights(self) -> tuple:
        return WEIGHTS

    @property
    def is_canonical(self) -> bool:
        return all(m2 == self.rank for _, m2 in self.flag_dims)

    @property
    def weight(self) -> int:
        # weights (0, 1): each node contributes m2 * 1
        return sum(m2 for _, m2 in self.flag_dims)

    @property
    def parabolic_degree(self) -> int:
        return self.degree + self.weight


@dataclass(frozen=True)
class SubbundleVerdict:
    sub_slope: Fraction
    total_slope: Fraction
    le: bool
    chain_mid: Fraction          # (d' + gamma * r') / r'
    slope_condition: bool        # d'/r' <= d/r
    chain_holds: bool


@dataclass(frozen=True)
class PhiNumbers:
    rank: int
    degree: int
    chi: int


@dataclass(frozen=True)
class GluingFlag:
    """Row span of the flag inside E(p) + E(q), in the fixed bases."""

    field: object
    rank: int
    basis_matrix: tuple   # r rows of length 2r, entries in the field

    def __post_init__(self):
        rows = tuple(tuple(self.field.element(x) for x in row) for row in self.basis_matrix)
        if len(rows) != self.rank or any(len(row) != 2 * self.rank for row in rows):
            raise InvalidInput("flag matrix must be rank x 2*rank")
        object.__setattr__(self, "basis_matrix", rows)
        if mat_rank(self.field, rows) != self.rank:
            raise InvalidInput("flag rows must be linearly independent")

    def left_block(self):
        return [list(row[:self.rank]) for row in self.basis_matrix]

    def right_block(self):
        return [list(row[self.rank:]) for row in self.basis_matrix]


@dataclass(frozen=True)
class ProjectionVerdict:
    pr1_iso: bool
    pr2_iso: bool

    @property
    def locally_free(self) -> bool:
        return self.pr1_iso and self.pr2_iso


@dataclass(frozen=True)
class KernelSectionVerdict:
    dim_meet_p_side: int
    dim_meet_q_side: int

    @property
    def passes(self) -> bool:
        return self.dim_meet_p_side == 0 and self.dim_meet_q_side == 0


def parabolic_slope(g: GpbClass) -> Fraction:
    """(degree + weight) / rank, exactly."""
    return Fraction(g.parabolic_degree, g.rank)


def gpb_subbundle_check(g: GpbClass, sub_rank: int, sub_degree: int,
                        sub_flag_dims) -> SubbundleVerdict:
    """Compare a subbundle's parabolic slope with the full class.

    The subbundle is given numerically: rank, degree, and the dimension
    of its intersection with the flag at each node (each at most the
    subbundle rank, which is what caps its parabolic weight).
    """
    if not 1 <= sub_rank < g.rank:
        raise InvalidInput("subbundle rank must satisfy 1 <= r' < r")
    dims = tuple(int(x) for x in sub_flag_dims)
    if len(dims) != g.nodes:
        raise InvalidInput("need one flag dimension per node")
    for k, f in enumerate(dims):
        if f < 0:
            raise InvalidInput("flag dimensions are nonnegative")
        if f > sub_rank:
            raise DimensionBound(
                f"flag dimension {f} at node {k + 1} exceeds the subbundle rank {sub_rank}")
    sub = Fraction(sub_degree + sum(dims), sub_rank)
    total = parabolic_slope(g)
    mid = Fraction(sub_degree + g.nodes * sub_rank, sub_rank)
    slope_condition = Fraction(sub_degree, sub_rank) <= Fraction(g.degree, g.rank)
    chain_holds = sub <= mid and (not slope_condition or mid <= total)
    return SubbundleVerdict(sub_slope=sub, total_slope=total, le=sub <= total,
                            chain_mid=mid, slope_condition=slope_condition,
                            chain_holds=chain_holds)


def phi_rank_degree(g: GpbClass, genus_normalization: int) -> PhiNumbers:
    """Rank, degree, and chi of the descended sheaf on the nodal curve.

    On the normalization the class has chi = d + r(1 - g); descending
    drops r per node, and the nodal curve's genus gains the node count,
    so the degree comes back out equal to d.  The identity is asserted.
    """
    if genus_normalization < 0:
        raise InvalidInput("genus must be nonnegative")
    if not g.is_canonical:
        raise InvalidInput("descent bookkeeping needs the canonical diagonal flags")
    r, d, gamma = g.rank, g.degree, g.nodes
    chi_upstairs = d + r * (1 - genus_normalization)
    chi = chi_upstairs - gamma * r
    rho_a = genus_normalization + gamma
    degree = chi + r * (rho_a - 1)
    assert degree == d, "descent must preserve the degree"
    return PhiNumbers(rank=r, degree=degree, chi=chi)


def build_rational_flag(field, r: int, d: int, a: int) -> GluingFlag:
    """The standard gluing flag for a split bundle on a rational normalization.

    Row j is e_j on the p side and the sum of all f_l except f_j on the
    q side, giving the block matrix [I | J - I].  Requires r*a <= d (the
    summand-degree bound).  The q-side projection J - I has determinant
    (-1)^(r-1) * (r - 1) and is singular precisely when the field
    characteristic divides r - 1; that case is refused explicitly.
    """
    if r < 1:
        raise InvalidInput("rank must be positive")
    if r * a > d:
        raise DegreeBound(f"need r*a <= d, got {r}*{a} > {d}")
    one, zero = field.one, field.zero
    rows = []
    for j in range(r):
        left = [one if l == j else zero for l in range(r)]
        right = [zero if l == j else one for l in range(r)]
        rows.append(left + right)
    pr2 = [row[r:] for row in rows]
    det = mat_det(field, pr2)
    if field.is_zero(det):
        raise SingularProjection(
            f"q-side projection is singular over {field.name}: "
            f"det(J - I) = (-1)^(r-1)(r-1) vanishes for r = {r}")
    return GluingFlag(field=field, rank=r, basis_matrix=rows)


def check_projections(flag: GluingFlag) -> ProjectionVerdict:
    """Are both node projections isomorphisms on the flag?

    Both being isomorphisms is the local-freeness criterion for the
    descended sheaf at this node.
    """
    pr1 = mat_rank(flag.field, flag.left_block()) == flag.rank
    pr2 = mat_rank(flag.field, flag.right_block()) == flag.rank
    return ProjectionVerdict(pr1_iso=pr1, pr2_iso=pr2)


def check_no_kernel_section(flag: GluingFlag) -> KernelSectionVerdict:
    """Dimensions of the flag's intersections with the two coordinate halves.

    A nonzero intersection with E(p) + 0 is exactly a combination of flag
    vectors with vanishing q side, so the dimensions are the rank
    deficiencies of the two blocks.
    """
    r = flag.rank
    return KernelSectionVerdict(
        dim_meet_p_side=r - mat_rank(flag.field, flag.right_block()),
        dim_meet_q_side=r - mat_rank(flag.field, flag.left_block()),
    )


def picard_rth_root(field, r: int, gluing_scalars) -> list:
    """Componentwise r-th roots of the node gluing scalars.

    Models surjectivity of the r-th power map on the gluing torus: over
    an algebraically closed field every scalar has a root; over the
    concrete fields here a missing root raises NoRoot rather than being
    silently patched.
    """
    if r < 1:
        raise InvalidInput("root exponent must be positive")
    scalars = [field.element(s) for s in gluing_scalars]
    if any(field.is_zero(s) for s in scalars):
        raise InvalidInput("gluing scalars must be nonzero")
    return [field.rth_root(s, r) for s in scalars]
