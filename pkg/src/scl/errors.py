"""Exception types shared across the library."""


class SclError(Exception):
    """Base class for all library errors."""


# -- curve construction / differentials ------------------------------------

class RepeatedRoot(SclError):
    """Hyperelliptic polynomial is not squarefree."""


class BadModulus(SclError):
    """Elliptic modulus does not lie in the upper half plane."""


class BadGenus(SclError):
    """Curve genus is outside the supported range (g >= 1)."""


class OutOfChart(SclError):
    """Point lies outside the declared domain of a chart."""


class ZeroDifferential(SclError):
    """Operation requires a differential that is not identically zero."""


# -- spectral covers --------------------------------------------------------

class WeightMismatch(SclError):
    """Coefficient differentials do not carry weights 1..n in order."""


class IdenticallyZero(SclError):
    """Discriminant vanishes identically (globally non-reduced cover)."""


class NonSimpleZero(SclError):
    """A zero assumed simple has higher multiplicity."""


class UnresolvedTracking(SclError):
    """Root continuation step size underflowed."""


class CoincidentPoints(SclError):
    """Two points that must be distinct coincide."""


# -- monodromy / homology ---------------------------------------------------

class MultipleBranchPoint(SclError):
    """Branch locus contains a multiple zero."""


class MultipleZero(SclError):
    """Zero divisor contains a multiple point where simple ones are needed."""


class DisconnectedCover(SclError):
    """Monodromy does not act transitively on the sheets."""


class QuadratureFailure(SclError):
    """Adaptive quadrature could not reach the requested tolerance."""


# -- theta / kernels --------------------------------------------------------

class NotPositiveDefinite(SclError):
    """Imaginary part of a period matrix is not positive definite."""


class SingularBlock(SclError):
    """C*Omega + D is numerically singular."""


class DegenerateCharacteristic(SclError):
    """Chosen odd theta characteristic has a vanishing gradient."""


class VanishingWronskian(SclError):
    """Wronskian of the holomorphic frame vanishes at the evaluation point."""


class LatticeRoundingFailure(SclError):
    """Residual after lattice rounding exceeds tolerance."""


# -- tau --------------------------------------------------------------------

class MultipleZeroUnsupported(SclError):
    """Multiplicity detection failed for the zero divisor."""


class AuxiliaryCollision(SclError):
    """Auxiliary point collides with a marked zero."""


class StepTooLarge(SclError):
    """Finite-difference residual is dominated by the truncation term."""


# -- picard -----------------------------------------------------------------

class OutOfRange(SclError):
    """Parameters (n, g) outside the validity range of a relation."""


class InconsistentSystem(SclError):
    """Linear relation system is inconsistent."""


# -- cli / cache ------------------------------------------------------------

class CorruptCache(SclError):
    """Cache entry failed its hash or version check."""


class BadJobSpec(SclError):
    """Job specification failed validation."""
