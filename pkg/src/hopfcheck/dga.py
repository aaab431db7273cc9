"""Two-term differential graded structure on an algebra with a marked
central element, and the cohomology that separates the mixed theory from
the stable one.

A pair (R, z) with z central determines the complex

    R --(right multiplication by z)--> R      (degrees -1 and 0)

whose degree -1 cohomology taken together with centrality,

    hh_minus_one(R, z) = { r in R : r z = 0 and r central },

is the invariant that distinguishes the full two-term structure from its
quotient by z.  For a central z the two-sided ideal (z) equals the image
of right multiplication by z, so the plain kernel of the differential
always has the dimension of R/(z); the sharper questions are whether the
differential is diagonalizable and how big the centrality-constrained
kernel is.
"""

from dataclasses import dataclass

from .cyclotomic import Cyclotomic, root_of_unity
from .linalg import (
    Matrix,
    Subspace,
    is_diagonalizable,
    eigensplit,
    kernel,
    matrix_order,
    minimal_polynomial,
    poly_is_squarefree,
)
from .algebra import AlgebraElement, QuotientResult, StructureAlgebra
from .report import FAIL, PASS, CheckReport


@dataclass
class TwoTermDga:
    """An algebra with a central element acting as the degree -1 -> 0
    differential of the two-term complex."""

    ring: StructureAlgebra
    z: AlgebraElement

    def __post_init__(self):
        if len(self.z.coords) != self.ring.dim:
            raise ValueError("marked element does not live in the ring")
        if not self.ring.is_central(self.z):
            raise ValueError("marked element must be central")
        lz = self.ring.left_mult_matrix(self.z.coords)
        # centrality makes the one-sided ideal two-sided; this is the
        # matrix-level restatement used throughout
        assert lz == self.differential()

    def differential(self) -> Matrix:
        return self.ring.right_mult_matrix(self.z.coords)


def stable_quotient(dga: TwoTermDga) -> QuotientResult:
    """The quotient of the ring by the two-sided ideal generated by z."""
    return dga.ring.quotient([dga.z.coords])


def stable_dga(dga: TwoTermDga) -> tuple[TwoTermDga, QuotientResult]:
    """The induced pair on the stable quotient, where z maps to zero."""
    q = stable_quotient(dga)
    return TwoTermDga(q.algebra, q.algebra.zero_element()), q


def hh_minus_one(dga: TwoTermDga) -> Subspace:
    """{ r : r z = 0 and r central }, as a subspace of the ring.

    Computed as one kernel: stack right multiplication by z with all the
    commutator maps r -> r e_j - e_j r.
    """
    ring = dga.ring
    n = ring.dim
    blocks = [dga.differential()]
    for j in range(n):
        cj = ring._basis_coords(j)
        blocks.append(ring.right_mult_matrix(cj) - ring.left_mult_matrix(cj))
    space = kernel(Matrix.vstack(blocks))
    center = ring.center()
    assert center.contains_subspace(space)
    if all(not c for c in dga.z.coords):
        assert space == center
    return space


@dataclass
class CohomologyProfile:
    """Dimension data of the two-term complex of (R, z)."""

    dim_h_minus1: int
    dim_h0: int
    image_dim: int
    overlap_dim: int


def complex_cohomology(dga: TwoTermDga) -> CohomologyProfile:
    """Kernel and cokernel dimensions of the differential, plus the
    kernel/image overlap (zero exactly when the 0-generalized-eigenspace
    splits off).  By rank-nullity the two cohomology dimensions agree."""
    rz = dga.differential()
    ker = kernel(rz)
    n = dga.ring.dim
    image = Subspace.from_vectors(n, [rz.column(j) for j in range(n)])
    profile = CohomologyProfile(
        dim_h_minus1=ker.dim,
        dim_h0=n - image.dim,
        image_dim=image.dim,
        overlap_dim=ker.intersection(image).dim,
    )
    assert profile.dim_h_minus1 == profile.dim_h0
    return profile


def _candidate_eigenvalues(dga: TwoTermDga, order_limit: int = 64) -> list[Cyclotomic]:
    """Candidate pool for eigenvalues of the differential.

    The typical z is s - 1 for a central s of finite multiplicative order
    m, which confines the eigenvalues to { xi^a - 1 : xi^m = 1 }.  The
    order of z + 1 is detected from its matrix (up to order_limit); the
    pool built from it is extended by xi^a - 1 over the ring's scalar
    order and by 0 and +-2 as a safety net.
    """
    orders = [max(dga.ring.order, 1)]
    rz1 = dga.differential().add_scalar_diag(Cyclotomic.one())
    m = matrix_order(rz1, order_limit)
    if m is not None:
        orders.append(m)
    pool: list[Cyclotomic] = []
    for order in orders:
        for a in range(order):
            v = root_of_unity(order, a) - Cyclotomic.one()
            if all(v != w for w in pool):
                pool.append(v)
    for extra in (Cyclotomic.zero(), Cyclotomic.from_int(2), Cyclotomic.from_int(-2)):
        if all(extra != w for w in pool):
            pool.append(extra)
    return pool


def diagonalizability_report(
    dga: TwoTermDga, check_id: str = "diag-report"
) -> CheckReport:
    """Diagonalizability of the differential and its consequences.

    When the minimal polynomial is squarefree the report verifies the
    eigensplit over the candidate pool is complete and that the
    0-eigenspace has the dimension of the stable quotient.  When it is
    not, the report exhibits the nonzero kernel/image overlap as the
    witness.  Either finding is a pass; a fail means the internal
    consistency checks themselves broke (an eigenvalue outside the pool,
    or a dimension mismatch).
    """
    rz = dga.differential()
    mp = minimal_polynomial(rz)
    squarefree = poly_is_squarefree(mp)
    profile = complex_cohomology(dga)
    quotient_dim = stable_quotient(dga).algebra.dim
    witnesses: dict = {
        "minimal_polynomial": [t.pretty() for t in mp],
        "diagonalizable": squarefree,
        "kernel_dim": profile.dim_h_minus1,
        "stable_quotient_dim": quotient_dim,
        "kernel_matches_quotient": profile.dim_h_minus1 == quotient_dim,
    }
    ok = profile.dim_h_minus1 == quotient_dim
    assert squarefree == is_diagonalizable(rz)
    if squarefree:
        pairs, complete = eigensplit(rz, _candidate_eigenvalues(dga))
        zero_dim = 0
        spectrum = []
        for value, space in pairs:
            if space.dim:
                spectrum.append({"eigenvalue": value.pretty(), "dim": space.dim})
            if not value:
                zero_dim = space.dim
        witnesses["split_complete"] = complete
        witnesses["spectrum"] = spectrum
        witnesses["zero_eigenspace_dim"] = zero_dim
        ok = ok and complete and zero_dim == quotient_dim
    else:
        witnesses["kernel_image_overlap_dim"] = profile.overlap_dim
        ok = ok and profile.overlap_dim > 0
    return CheckReport(check_id, PASS if ok else FAIL, witnesses)
