"""Exact-arithmetic laboratory for bracket words."""

from ._bracketword import (  # noqa: F401
    Error,
    Session,
    Word,
    balance,
    complexity,
    counting,
    frequency,
    halfspace_cuts,
    lattice_approx,
    pisot_member,
    pisot_traces,
    recurrence,
    run_criterion,
)
