"""Exact search tools for flat-box intersection representations.

Graphs, box families, and decompositions are plain dicts in the same shape
as the CLI's JSON documents:

- graph:          {"n": 5, "edges": [[1, 3], [1, 4], ...]}
- box family:     {"d": 2, "boxes": [[[0, 1], [1, 1]], ...]}
- decomposition:  {"p": 1, "d": 2, "Fs": [graph, ...], "Jv": {"1": [2], ...}}

Coordinates may be integers or exact "p/q" strings.
"""

from flatbox._core import (
    __version__,
    analyze_missing_partition,
    boxicity,
    check_slim,
    chromatic_number,
    complement,
    complete_graph,
    from_boxes,
    gallery_get,
    gallery_names,
    h_value,
    helly_gallai_check,
    intersection_graph,
    lower_bound_witness,
    make_cycle,
    p_boxicity,
    pierceable,
    piercing_number,
    realizable_some_d,
    recognize_interval,
    to_boxes,
    upper_bound_check,
    verify_forbidden,
)

__all__ = [
    "__version__",
    "analyze_missing_partition",
    "boxicity",
    "check_slim",
    "chromatic_number",
    "complement",
    "complete_graph",
    "from_boxes",
    "gallery_get",
    "gallery_names",
    "h_value",
    "helly_gallai_check",
    "intersection_graph",
    "lower_bound_witness",
    "make_cycle",
    "p_boxicity",
    "pierceable",
    "piercing_number",
    "realizable_some_d",
    "recognize_interval",
    "to_boxes",
    "upper_bound_check",
    "verify_forbidden",
]
