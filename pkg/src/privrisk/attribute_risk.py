"""Attribute-based privacy risk: frequency-driven sensitivity times visibility.

Sensitivity follows the AFIUF form f / log2(m/f + 1) computed over the
population; visibility maps a privacy setting to the fraction of the network
able to view the attribute, with a fixed floor for only-me items.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .model import AttributeValue, PrivacySetting, SocialGraph, UserProfile

#: Residual visibility of an only-me attribute: small but non-zero exposure
#: (account compromise, platform access).
ONLY_ME_VISIBILITY = 0.1


@dataclass(frozen=True)
class AttributeStats:
    """Population attribute frequencies: counts[a] users possess attribute a."""

    counts: Mapping[str, int]
    total_users: int

    def __post_init__(self):
        if self.total_users < 0:
            raise ValueError("total_users must be non-negative")
        for name, count in self.counts.items():
            if not (0 <= count <= self.total_users):
                raise ValueError(
                    f"count for {name} is {count}, outside [0, {self.total_users}]"
                )

    def frequency(self, attr: str) -> int:
        return self.counts.get(attr, 0)


def compute_stats(profiles: Sequence[UserProfile], network_size: int) -> AttributeStats:
    """Count how many users possess each attribute; m is the network size."""
    counts: dict[str, int] = {}
    for profile in profiles:
        for name in profile.attributes:
            counts[name] = counts.get(name, 0) + 1
    return AttributeStats(counts=counts, total_users=network_size)


def sensitivity(stats: AttributeStats, attr: str, mode: str = "afiuf") -> float:
    """Sensitivity score of an attribute from its population frequency.

    ``afiuf`` is f / log2(m/f + 1), which grows with frequency. ``inverse``
    is log2(m/f + 1), an alternative that rewards rarity instead; both are
    exposed because the two readings circulate in the literature. Attributes
    possessed by nobody score 0 by convention (the formula is undefined at
    f = 0).
    """
    f = stats.frequency(attr)
    if f == 0:
        return 0.0
    m = stats.total_users
    log_term = math.log2(m / f + 1)
    if mode == "afiuf":
        return f / log_term
    if mode == "inverse":
        return log_term
    raise ValueError(f"unknown sensitivity mode {mode!r}")


def visibility(
    setting: PrivacySetting,
    friend_count: int,
    network_size: int,
    only_me_floor: float = ONLY_ME_VISIBILITY,
) -> float:
    """Fraction of the network able to view an item under ``setting``.

    Public is 1.0, friends-only is the friend count over the network size,
    only-me is the fixed floor.
    """
    if network_size < 1:
        raise ValueError("network_size must be >= 1")
    if friend_count > network_size:
        raise ValueError(
            f"friend_count {friend_count} exceeds network size {network_size}"
        )
    if friend_count < 0:
        raise ValueError("friend_count must be non-negative")
    if setting is PrivacySetting.PUBLIC:
        return 1.0
    if setting is PrivacySetting.FRIENDS_ONLY:
        return friend_count / network_size
    return only_me_floor


def attribute_risk(sens: float, vis: float) -> float:
    """Risk of one attribute: sensitivity times visibility."""
    if sens < 0 or vis < 0:
        raise ValueError("sensitivity and visibility must be non-negative")
    return sens * vis


def aprs(
    profile: UserProfile,
    stats: AttributeStats,
    graph: SocialGraph,
    only_me_floor: float = ONLY_ME_VISIBILITY,
    mode: str = "afiuf",
) -> tuple[float, dict[str, float]]:
    """Attribute risk score for one user: sum of per-attribute risk terms.

    Returns the raw (unbounded) score and the per-attribute breakdown.
    Friends-only visibility uses the user's degree in the graph.
    """
    if profile.user not in graph:
        raise ValueError(f"user {profile.user} not in graph")
    degree = graph.degree(profile.user)
    network_size = graph.size
    breakdown: dict[str, float] = {}
    for name, attr_value in sorted(profile.attributes.items()):
        sens = sensitivity(stats, name, mode=mode)
        vis = visibility(attr_value.setting, degree, network_size, only_me_floor)
        breakdown[name] = attribute_risk(sens, vis)
    return sum(breakdown.values()), breakdown


def setting_deltas(
    current: PrivacySetting,
    sens: float,
    friend_count: int,
    network_size: int,
    only_me_floor: float = ONLY_ME_VISIBILITY,
) -> list[tuple[PrivacySetting, float]]:
    """Raw risk reduction achieved by each stricter setting, largest audience
    cut first. Settings that would not reduce risk (a friends circle smaller
    than the only-me floor) are omitted.
    """
    current_vis = visibility(current, friend_count, network_size, only_me_floor)
    options: list[tuple[PrivacySetting, float]] = []
    for candidate in current.stricter_settings():
        new_vis = visibility(candidate, friend_count, network_size, only_me_floor)
        delta = attribute_risk(sens, current_vis) - attribute_risk(sens, new_vis)
        if delta > 0:
            options.append((candidate, delta))
    return options
