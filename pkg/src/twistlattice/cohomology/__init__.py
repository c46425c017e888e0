"""First cohomology H^1(Gamma, G) for a finite group Gamma."""

from .almost_abelian import (AlmostAbelianGammaGroup, AlmostAbelianGroup, AlmostAbelianH1,
                             almost_abelian_action, h1_almost_abelian, h1_cardinality_bound,
                             make_almost_abelian, stable_core)
from .core import (GammaGroup, TwistedGammaGroup, check_cocycle, conjugate_cocycle,
                   extend_from_generators, is_cocycle, multiply_cocycles, trivial_cocycle,
                   twist_action, untwist)
from .finite import (FiniteGammaGroup, cocycles_finite, cohomology_classes, finite_action,
                     h1_finite, trivial_finite_action)
from .free_abelian import (FreeAbelianGammaGroup, FreeAbelianH1, free_abelian_action,
                           h1_free_abelian, is_coboundary)
