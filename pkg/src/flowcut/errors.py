"""Exception hierarchy shared across the package."""

from __future__ import annotations


class FlowcutError(Exception):
    """Base class for all errors raised by this package."""


# --- instance validation ---


class EmptyInstance(FlowcutError):
    """The job list is empty."""


class NonIntegralField(FlowcutError):
    """A job field is not a plain integer."""


class NegativeField(FlowcutError):
    """A release date or weight is negative."""


class NonPositiveProcessing(FlowcutError):
    """A processing requirement is < 1."""


# --- schedules ---


class InfeasibleSchedule(FlowcutError):
    """A schedule violates slot-ownership invariants (count or release)."""


class DeadlineMiss(FlowcutError):
    """EDF failed to complete a job by its deadline.

    Unreachable for IP1-feasible inputs; raising it signals a feasibility
    checker bug upstream.
    """


# --- segments ---


class ReleaseOutOfRange(FlowcutError):
    """Release date outside [0, T) or horizon not a power of two."""


class SlotBeforeRelease(FlowcutError):
    """Queried a slot before the job's release date."""


# --- covering programs ---


class KindMismatch(FlowcutError):
    """A model and a solution have different kinds (ip1 vs ip2)."""


class InfeasibleInput(FlowcutError):
    """A conversion was handed a solution that is not feasible."""


# --- reduction / DMC ---


class InfeasibleEdgeSet(FlowcutError):
    """An edge set does not satisfy every demand path."""


class DmcInfeasible(FlowcutError):
    """No edge set can satisfy the demand paths."""


class CorruptTable(FlowcutError):
    """DP argmin replay disagrees with the stored table value."""


class TooLarge(FlowcutError):
    """Instance exceeds an exact-search size cap."""


# --- CLI ---


class ParseError(FlowcutError):
    """An input file does not match the expected format."""


class PipelineInfeasible(FlowcutError):
    """The end-to-end pipeline produced no feasible schedule (a bug sentinel)."""
