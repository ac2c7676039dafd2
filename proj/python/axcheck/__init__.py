from ._axcheck import (  # noqa: F401
    axial_check,
    decompose,
    fusion_check,
    highwater_window_report,
    lemma_check,
    martindale,
    parse_roundtrip,
    residual_check,
    search,
    zoo_emit,
    zoo_names,
)
