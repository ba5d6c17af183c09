"""Privacy risk scoring for social network datasets.

Three per-user risk components (profile attributes, graph position,
posted content) are normalized over the population and combined into a
weighted composite score, with per-item breakdowns, setting
recommendations, and what-if analysis.
"""

from .aggregate import (
    SCENARIO_PRESETS,
    AhpResult,
    ahp_weights,
    cprs,
    normalize_population,
)
from .config import EngineConfig, default_config, load_config, save_config
from .model import (
    AttributeValue,
    Comment,
    Post,
    PrivacySetting,
    RiskReport,
    SensitiveEntity,
    SocialGraph,
    UserId,
    UserProfile,
    WeightVector,
    validate_dataset,
)
from .pipeline import (
    Dataset,
    SettingChange,
    Snapshot,
    WhatIfResult,
    build_report,
    load_snapshot,
    save_snapshot,
    score_dataset,
    what_if,
)

__version__ = "0.1.0"

__all__ = [
    "AhpResult",
    "AttributeValue",
    "Comment",
    "Dataset",
    "EngineConfig",
    "Post",
    "PrivacySetting",
    "RiskReport",
    "SCENARIO_PRESETS",
    "SensitiveEntity",
    "SettingChange",
    "Snapshot",
    "SocialGraph",
    "UserId",
    "UserProfile",
    "WeightVector",
    "WhatIfResult",
    "ahp_weights",
    "build_report",
    "cprs",
    "default_config",
    "load_config",
    "load_snapshot",
    "normalize_population",
    "save_config",
    "save_snapshot",
    "score_dataset",
    "validate_dataset",
    "what_if",
]
