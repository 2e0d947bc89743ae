"""Exception hierarchy for the spread-nets library."""


class SpreadNetError(Exception):
    """Base class for all library errors."""


class NetDefinitionError(SpreadNetError):
    """The net structure violates a construction invariant."""


class NotEnabled(SpreadNetError):
    """Attempt to fire a transition that is not enabled."""


class UnsafeFiring(SpreadNetError):
    """Firing would put a second token into a place."""


class UnsafeNet(SpreadNetError):
    """A 1-safety violation was found during state-space exploration."""


class NotAnMcNet(SpreadNetError):
    """Operation requires a valid multi-clock net."""


class WordTooLong(SpreadNetError):
    """Word exceeds the length bound of a finite-equation domain."""


class LetterOutsideAlphabet(SpreadNetError):
    """Word contains a letter outside the domain alphabet."""


class NotARun(SpreadNetError):
    """Word is not a firing sequence of the component automaton."""


class KNotInJ(SpreadNetError):
    """Mixing operation invoked with selector index outside the index set."""


class MissingClock(SpreadNetError):
    """Mixing operation invoked with a clock map not matching the index set."""


class TableMiss(SpreadNetError):
    """Custom ticking table has no entry for the requested pair."""


class DimensionMismatch(SpreadNetError):
    """Vector-clock domain dimension or alphabets do not match the net."""


class NonInjectiveInputLabels(SpreadNetError):
    """Spreading requires an injectively labeled input net."""


class NotComposable(SpreadNetError):
    """Morphism composition with mismatched middle object."""


class ParseError(SpreadNetError):
    """Malformed input document."""
