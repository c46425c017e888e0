"""Exception hierarchy.

Every error carries the name of the violated invariant in ``invariant`` so the
CLI can report it without a traceback.
"""


class TwistLatticeError(Exception):
    invariant = "unspecified"

    def __init__(self, message=""):
        super().__init__(message or self.invariant)


class ValidationError(TwistLatticeError, ValueError):
    """Input violates a documented invariant."""


class NotSymmetric(ValidationError):
    invariant = "gram is symmetric"


class Degenerate(ValidationError):
    invariant = "gram is nondegenerate"


class DimensionMismatch(ValidationError):
    invariant = "dimensions match"


class NotAnIsometry(ValidationError):
    invariant = "matrix preserves the form"


class WrongSignature(ValidationError):
    invariant = "lattice has signature (1, rank-1)"


class ZeroGenerator(ValidationError):
    invariant = "cone generators are nonzero"


class EmptyInput(ValidationError):
    invariant = "input list is nonempty"


class NotInPositiveCone(ValidationError):
    invariant = "vector lies in the chosen positive cone"


class NonIntegralReflection(ValidationError):
    invariant = "2(x, v)/(v, v) is integral for every basis vector x"


class NotARoot(ValidationError):
    invariant = "root has negative square"


class WalkDiverged(TwistLatticeError):
    invariant = "chamber walk terminates within the iteration cap"


class UnboundedRegion(ValidationError):
    invariant = "region is bounded (generators in the closed positive cone, off the null cone)"


class BudgetExceeded(TwistLatticeError):
    invariant = "enumeration box within the point budget"


class NotStabilized(TwistLatticeError):
    invariant = "Dirichlet domain stable under growing word radius"


class EqualRoots(ValidationError):
    invariant = "roots are distinct up to sign"


class UnequalNorms(ValidationError):
    invariant = "roots share the same self-pairing"


class ActionDoesNotPreserveRoots(ValidationError):
    invariant = "action maps the root set into itself"


class SignIncoherentOrbit(ValidationError):
    invariant = "matched roots in an orbit pair positively"


class InvalidGroup(ValidationError):
    invariant = "multiplication table defines a group"


class InvalidAction(ValidationError):
    invariant = "action is a homomorphism into automorphisms"


class NotACocycle(ValidationError):
    invariant = "c(gh) = c(g) * sigma_g(c(h))"


class InvalidExtensionDatum(ValidationError):
    invariant = "extension datum defines an almost abelian group"


class LiftSearchExhausted(TwistLatticeError):
    invariant = "quotient cocycle lifts within the search bound"


class MalformedInput(TwistLatticeError):
    invariant = "input file matches the problem schema"


class InvalidParameter(ValidationError):
    invariant = "numeric parameters are positive integers"
