"""Rooted graph transformation runtime with mark-indexed host-graph storage."""

from rgt._core import (  # noqa: F401
    Backend,
    BenchRecord,
    BudgetExceededError,
    EdgeId,
    EdgeMark,
    HostGraph,
    NodeId,
    NodeMark,
    Orientation,
    Outcome,
    Program,
    RunResult,
    StaleHandleError,
    StepCounters,
    attach_rules,
    build_program,
    generate,
    observably_equal,
    parse_host_graph,
    parse_program,
    print_host_graph,
    print_program,
    program_names,
    random_digraph,
    run,
    run_bench,
)

__all__ = [
    "Backend", "BenchRecord", "BudgetExceededError", "EdgeId", "EdgeMark",
    "HostGraph", "NodeId", "NodeMark", "Orientation", "Outcome", "Program",
    "RunResult", "StaleHandleError", "StepCounters", "attach_rules",
    "build_program", "generate", "observably_equal", "parse_host_graph",
    "parse_program", "print_host_graph", "print_program", "program_names",
    "random_digraph", "run", "run_bench",
]
