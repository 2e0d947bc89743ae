"""Spread nets: safe Petri nets annotated with vector clocks.

A multi-clock net is a safe net whose places are partitioned into sequential
components.  Spreading replays the net while tracking one word of history
per component, merging places whose label and clock agree.  Free histories
give branching-process unfoldings, length-and-target histories give trellis
processes, and finite equation systems give custom foldings in between.
"""

from .errors import (DimensionMismatch, KNotInJ, LetterOutsideAlphabet,
                     MissingClock, NetDefinitionError, NonInjectiveInputLabels,
                     NotAnMcNet, NotARun, NotComposable, NotEnabled,
                     ParseError, SpreadNetError, TableMiss, UnsafeFiring,
                     UnsafeNet, WordTooLong)
from .examples import (running_example, running_example_custom_mode,
                       three_component_example)
from .mcnets import (ComponentAutomaton, McNet, check_mcn_morphism,
                     components, validate_mcnet)
from .modes import (BP, CUSTOM, TRELLIS, TRIVIAL, ComponentSpec, ModeSpec,
                    instantiate, spread_with_mode, trivial_spread_net)
from .nets import (FiringSequence, Net, NetMorphism, ReachabilityResult,
                   Verdict, check_net_morphism, enabled, fire, fire_sequence,
                   morphism_preserves_markings, reachable_markings)
from .oracle import LabeledIso, isomorphic, trellis_oracle, unfold_bp_oracle
from .spread import (DomainMapping, FoldingMorphism, SpreadMorphism, SpreadNet,
                     SpreadResult, check_folding, check_spread_morphism,
                     compose_spread_morphisms, spread, validate_spread)
from .ticking import (EPSILON, EquationDomain, FreeDomain, TickingDomain,
                      TickingMap, TrellisDomain, VectorClockDomain, Word,
                      canonical, op_mix, same_class, tick, word)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "1.0.0"
