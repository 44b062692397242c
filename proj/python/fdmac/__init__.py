"""Throughput theory and slot simulator for a full-duplex access point."""

from ._core import (
    BacklogPolicy,
    ComparisonResult,
    EmptyNetwork,
    FlowComparison,
    FlowEstimate,
    InvalidConfig,
    NetworkConfig,
    SimStats,
    Simulation,
    ThroughputReport,
    Violation,
    compare,
    dca_config,
    dca_gain,
    default_capacity,
    empirical_report,
    estimate,
    fairness_config,
    head_fraction,
    run,
    throughputs,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
