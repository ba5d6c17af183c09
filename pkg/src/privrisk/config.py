"""Typed engine configuration with YAML round-trip and fingerprinting.

One structured config drives every stage: the attribute schema and its
synthetic-generation distributions, the audience map, the entity taxonomy
and sensitivity table, graph-score parameters, normalization choice, and
the named weighting scenarios. Defaults are importable (``default_config``)
and every scoring run records the fingerprint of the config it used.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Mapping

import yaml

from .aggregate import DEFAULT_SCENARIO, SCENARIO_PRESETS
from .content_risk import DEFAULT_SENSITIVITY
from .graph_risk import PageRankParams, SgprsWeights, SimRankParams
from .model import DEFAULT_ATTRIBUTES, DEFAULT_ENTITY_TYPES, PrivacySetting, WeightVector

_PROB_TOLERANCE = 1e-9


def _check_distribution(probs: tuple[float, ...], label: str) -> None:
    if any(p < 0 for p in probs):
        raise ValueError(f"{label}: probabilities must be non-negative")
    if abs(sum(probs) - 1.0) > _PROB_TOLERANCE:
        raise ValueError(f"{label}: probabilities sum to {sum(probs)}, expected 1")


@dataclass(frozen=True)
class AttributeModel:
    """Synthetic-generation model for one profile attribute.

    ``presence`` is the probability a user lists the attribute at all;
    ``values`` with optional ``value_probs`` (uniform when omitted) is the
    base categorical distribution; ``visibility`` gives the probabilities
    of (public, friends, only_me) for the attribute's privacy setting.
    """

    presence: float
    values: tuple[str, ...]
    value_probs: tuple[float, ...] | None = None
    visibility: tuple[float, float, float] = (0.5, 0.3, 0.2)

    def __post_init__(self) -> None:
        if not 0.0 <= self.presence <= 1.0:
            raise ValueError(f"presence must be in [0, 1], got {self.presence}")
        if not self.values:
            raise ValueError("attribute model needs at least one value")
        if self.value_probs is not None:
            if len(self.value_probs) != len(self.values):
                raise ValueError(
                    f"{len(self.value_probs)} probabilities for {len(self.values)} values"
                )
            _check_distribution(tuple(self.value_probs), "value_probs")
        _check_distribution(tuple(self.visibility), "visibility")

    @property
    def effective_value_probs(self) -> tuple[float, ...]:
        if self.value_probs is not None:
            return self.value_probs
        n = len(self.values)
        return tuple(1.0 / n for _ in range(n))


def _phone_pool() -> tuple[str, ...]:
    return tuple(f"+1-555-010-{i:04d}" for i in range(24))


def _email_pool() -> tuple[str, ...]:
    return tuple(f"member{i:02d}@example.net" for i in range(24))


def _dob_pool() -> tuple[str, ...]:
    years = (1978, 1983, 1987, 1990, 1992, 1995, 1998, 2001)
    days = ((3, 14), (6, 21), (11, 2))
    return tuple(f"{y}-{m:02d}-{d:02d}" for y in years for m, d in days)


_CITIES = (
    "Chicago", "Houston", "Seattle", "Denver", "Boston", "Atlanta",
    "Portland", "Austin", "Miami", "Phoenix", "Toronto", "London",
    "Berlin", "Madrid", "Mumbai", "Tokyo",
)

_SCHOOLS = (
    "Stanford University", "State College", "Riverside High School",
    "Central University", "Lakeside Academy", "Northern Institute",
    "City College", "Eastwood University", "Hillcrest School",
    "Valley Technical Institute", "Summit University", "Harbor College",
)

_WORKPLACES = (
    "Acme Logistics", "Blue Harbor Media", "Cedar Grove Clinic",
    "Open Source Collective", "Northwind Traders", "Quarry Analytics",
    "Sunrise Retail", "Ironwood Manufacturing", "Pioneer Energy",
    "Maple Leaf Foods", "Apex Consulting", "Harborview Hospital",
    "Granite Insurance", "Silverline Software",
)


def default_attribute_models() -> dict[str, AttributeModel]:
    """Shipped generation model for the ten standard attributes.

    Presence rates spread attribute frequencies for the sensitivity curve;
    visibility modes follow common platform behavior (contact details
    locked down, demographics broadly public, school shared with friends).
    """
    return {
        "Mobile": AttributeModel(0.25, _phone_pool(), visibility=(0.05, 0.25, 0.70)),
        "Email": AttributeModel(0.55, _email_pool(), visibility=(0.10, 0.25, 0.65)),
        "Gender": AttributeModel(
            0.95,
            ("Female", "Male", "Nonbinary", "PreferNotToSay"),
            (0.46, 0.44, 0.06, 0.04),
            (0.80, 0.15, 0.05),
        ),
        "Pronoun": AttributeModel(
            0.60,
            ("she/her", "he/him", "they/them"),
            (0.45, 0.45, 0.10),
            (0.85, 0.10, 0.05),
        ),
        "DateOfBirth": AttributeModel(0.70, _dob_pool(), visibility=(0.25, 0.40, 0.35)),
        "RelationshipStatus": AttributeModel(
            0.50,
            ("Single", "Married", "InRelationship", "Complicated"),
            (0.40, 0.30, 0.22, 0.08),
            (0.45, 0.40, 0.15),
        ),
        "FromLocation": AttributeModel(0.65, _CITIES, visibility=(0.55, 0.30, 0.15)),
        "LivesInLocation": AttributeModel(0.80, _CITIES, visibility=(0.35, 0.45, 0.20)),
        "School": AttributeModel(0.70, _SCHOOLS, visibility=(0.30, 0.55, 0.15)),
        "Workplace": AttributeModel(0.45, _WORKPLACES, visibility=(0.40, 0.40, 0.20)),
    }


@dataclass(frozen=True)
class HomophilyConfig:
    """Attribute assignment over the friendship graph.

    With probability ``homophily_strength`` a node's attribute state is
    copied from an already-assigned neighbor; otherwise it is drawn from
    the attribute's base model.
    """

    homophily_strength: float = 0.55
    attributes: Mapping[str, AttributeModel] = field(
        default_factory=default_attribute_models
    )

    def __post_init__(self) -> None:
        if not 0.0 <= self.homophily_strength <= 1.0:
            raise ValueError(
                f"homophily_strength must be in [0, 1], got {self.homophily_strength}"
            )
        if not self.attributes:
            raise ValueError("homophily config needs at least one attribute model")


@dataclass(frozen=True)
class PostGenConfig:
    """Synthetic post corpus shape.

    ``posts_per_user_weights[k]`` is the probability of writing k posts;
    likewise for comments per post. Post visibility is sampled from
    (public, friends, only_me) weights; timestamps spread uniformly over
    ``months`` calendar months starting at ``start_month``.
    """

    posts_per_user_weights: tuple[float, ...] = (0.0, 0.35, 0.40, 0.25)
    comments_per_post_weights: tuple[float, ...] = (0.60, 0.40)
    visibility_weights: tuple[float, float, float] = (0.70, 0.15, 0.15)
    start_month: str = "2021-01"
    months: int = 12

    def __post_init__(self) -> None:
        _check_distribution(tuple(self.posts_per_user_weights), "posts_per_user_weights")
        _check_distribution(
            tuple(self.comments_per_post_weights), "comments_per_post_weights"
        )
        _check_distribution(tuple(self.visibility_weights), "visibility_weights")
        if self.months < 1:
            raise ValueError("months must be at least 1")
        year, dash, month = self.start_month.partition("-")
        if dash != "-" or not (year.isdigit() and month.isdigit() and 1 <= int(month) <= 12):
            raise ValueError(f"start_month must be YYYY-MM, got {self.start_month!r}")


@dataclass(frozen=True)
class EngineConfig:
    """Complete scoring configuration."""

    attributes: tuple[str, ...] = DEFAULT_ATTRIBUTES
    sensitivity_mode: str = "afiuf"
    only_me_floor: float = 0.1
    entity_types: tuple[str, ...] = DEFAULT_ENTITY_TYPES
    sensitivity_table: Mapping[str, float] = field(
        default_factory=lambda: dict(DEFAULT_SENSITIVITY)
    )
    comment_attribution: str = "post_author"
    simrank: SimRankParams = field(default_factory=SimRankParams)
    pagerank: PageRankParams = field(default_factory=PageRankParams)
    sgprs_weights: SgprsWeights = field(default_factory=SgprsWeights)
    normalization: str = "minmax"
    scenarios: Mapping[str, WeightVector] = field(
        default_factory=lambda: dict(SCENARIO_PRESETS)
    )
    default_scenario: str = DEFAULT_SCENARIO
    recommendation_threshold: float = 0.1
    neighbor_limit: int = 150
    homophily: HomophilyConfig = field(default_factory=HomophilyConfig)
    posts: PostGenConfig = field(default_factory=PostGenConfig)

    def __post_init__(self) -> None:
        if self.sensitivity_mode not in ("afiuf", "inverse"):
            raise ValueError(
                f"sensitivity_mode must be 'afiuf' or 'inverse', got {self.sensitivity_mode!r}"
            )
        if not 0.0 <= self.only_me_floor <= 1.0:
            raise ValueError(f"only_me_floor must be in [0, 1], got {self.only_me_floor}")
        if self.normalization not in ("minmax", "rank"):
            raise ValueError(
                f"normalization must be 'minmax' or 'rank', got {self.normalization!r}"
            )
        if self.comment_attribution not in ("post_author", "commenter"):
            raise ValueError(
                "comment_attribution must be 'post_author' or 'commenter', "
                f"got {self.comment_attribution!r}"
            )
        if self.default_scenario not in self.scenarios:
            raise ValueError(
                f"default_scenario {self.default_scenario!r} not among scenarios "
                f"{sorted(self.scenarios)}"
            )
        if not 0.0 <= self.recommendation_threshold <= 1.0:
            raise ValueError("recommendation_threshold must be in [0, 1]")
        if self.neighbor_limit < 1:
            raise ValueError("neighbor_limit must be at least 1")
        missing = [t for t in self.entity_types if t not in self.sensitivity_table]
        if missing:
            raise ValueError(f"sensitivity_table missing entity types: {missing}")


def default_config() -> EngineConfig:
    return EngineConfig()


def with_overrides(config: EngineConfig, **changes: Any) -> EngineConfig:
    return replace(config, **changes)


# ---------------------------------------------------------------------------
# serialization

def config_to_dict(config: EngineConfig) -> dict[str, Any]:
    """Plain-type representation, stable under round-trip."""
    return {
        "attributes": list(config.attributes),
        "sensitivity_mode": config.sensitivity_mode,
        "only_me_floor": config.only_me_floor,
        "entity_types": list(config.entity_types),
        "sensitivity_table": {k: config.sensitivity_table[k] for k in sorted(config.sensitivity_table)},
        "comment_attribution": config.comment_attribution,
        "simrank": {
            "decay": config.simrank.decay,
            "max_iterations": config.simrank.max_iterations,
            "epsilon": config.simrank.epsilon,
            "pair_scope": config.simrank.pair_scope,
        },
        "pagerank": {
            "damping": config.pagerank.damping,
            "max_iterations": config.pagerank.max_iterations,
            "epsilon": config.pagerank.epsilon,
        },
        "sgprs_weights": {
            "similarity": config.sgprs_weights.w_sim,
            "importance": config.sgprs_weights.w_imp,
        },
        "normalization": config.normalization,
        "scenarios": {
            name: {"aprs": w.w_aprs, "sgprs": w.w_sgprs, "cbprs": w.w_cbprs}
            for name, w in sorted(config.scenarios.items())
        },
        "default_scenario": config.default_scenario,
        "recommendation_threshold": config.recommendation_threshold,
        "neighbor_limit": config.neighbor_limit,
        "homophily": {
            "homophily_strength": config.homophily.homophily_strength,
            "attributes": {
                name: _attribute_model_to_dict(model)
                for name, model in config.homophily.attributes.items()
            },
        },
        "posts": {
            "posts_per_user_weights": list(config.posts.posts_per_user_weights),
            "comments_per_post_weights": list(config.posts.comments_per_post_weights),
            "visibility_weights": list(config.posts.visibility_weights),
            "start_month": config.posts.start_month,
            "months": config.posts.months,
        },
    }


def _attribute_model_to_dict(model: AttributeModel) -> dict[str, Any]:
    out: dict[str, Any] = {
        "presence": model.presence,
        "values": list(model.values),
        "visibility": {
            "public": model.visibility[0],
            "friends": model.visibility[1],
            "only_me": model.visibility[2],
        },
    }
    if model.value_probs is not None:
        out["value_probs"] = list(model.value_probs)
    return out


def _attribute_model_from_dict(data: Mapping[str, Any]) -> AttributeModel:
    vis = data.get("visibility", {})
    if isinstance(vis, Mapping):
        visibility = (
            float(vis.get("public", 0.5)),
            float(vis.get("friends", 0.3)),
            float(vis.get("only_me", 0.2)),
        )
    else:
        visibility = tuple(float(v) for v in vis)  # type: ignore[assignment]
    probs = data.get("value_probs")
    return AttributeModel(
        presence=float(data["presence"]),
        values=tuple(str(v) for v in data["values"]),
        value_probs=tuple(float(p) for p in probs) if probs is not None else None,
        visibility=visibility,  # type: ignore[arg-type]
    )


def config_from_dict(data: Mapping[str, Any]) -> EngineConfig:
    """Build a config from plain types; absent keys keep defaults."""
    base = EngineConfig()
    kwargs: dict[str, Any] = {}
    if "attributes" in data:
        kwargs["attributes"] = tuple(str(a) for a in data["attributes"])
    for key in (
        "sensitivity_mode",
        "only_me_floor",
        "comment_attribution",
        "normalization",
        "default_scenario",
        "recommendation_threshold",
        "neighbor_limit",
    ):
        if key in data:
            kwargs[key] = data[key]
    if "entity_types" in data:
        kwargs["entity_types"] = tuple(str(t) for t in data["entity_types"])
    if "sensitivity_table" in data:
        kwargs["sensitivity_table"] = {
            str(k): float(v) for k, v in data["sensitivity_table"].items()
        }
    if "simrank" in data:
        s = data["simrank"]
        kwargs["simrank"] = SimRankParams(
            decay=float(s.get("decay", base.simrank.decay)),
            max_iterations=int(s.get("max_iterations", base.simrank.max_iterations)),
            epsilon=float(s.get("epsilon", base.simrank.epsilon)),
            pair_scope=str(s.get("pair_scope", base.simrank.pair_scope)),
        )
    if "pagerank" in data:
        p = data["pagerank"]
        kwargs["pagerank"] = PageRankParams(
            damping=float(p.get("damping", base.pagerank.damping)),
            max_iterations=int(p.get("max_iterations", base.pagerank.max_iterations)),
            epsilon=float(p.get("epsilon", base.pagerank.epsilon)),
        )
    if "sgprs_weights" in data:
        w = data["sgprs_weights"]
        kwargs["sgprs_weights"] = SgprsWeights(
            w_sim=float(w["similarity"]), w_imp=float(w["importance"])
        )
    if "scenarios" in data:
        kwargs["scenarios"] = {
            str(name): WeightVector(
                float(w["aprs"]), float(w["sgprs"]), float(w["cbprs"])
            )
            for name, w in data["scenarios"].items()
        }
    if "homophily" in data:
        h = data["homophily"]
        models = h.get("attributes")
        kwargs["homophily"] = HomophilyConfig(
            homophily_strength=float(
                h.get("homophily_strength", base.homophily.homophily_strength)
            ),
            attributes=(
                {str(n): _attribute_model_from_dict(m) for n, m in models.items()}
                if models
                else default_attribute_models()
            ),
        )
    if "posts" in data:
        p = data["posts"]
        kwargs["posts"] = PostGenConfig(
            posts_per_user_weights=tuple(
                float(x) for x in p.get("posts_per_user_weights", base.posts.posts_per_user_weights)
            ),
            comments_per_post_weights=tuple(
                float(x)
                for x in p.get("comments_per_post_weights", base.posts.comments_per_post_weights)
            ),
            visibility_weights=tuple(
                float(x) for x in p.get("visibility_weights", base.posts.visibility_weights)
            ),
            start_month=str(p.get("start_month", base.posts.start_month)),
            months=int(p.get("months", base.posts.months)),
        )
    return EngineConfig(**kwargs)


def load_config(path: str | Path) -> EngineConfig:
    """Read a YAML config file; an empty file yields the defaults."""
    raw = Path(path).read_text(encoding="utf-8")
    data = yaml.safe_load(raw)
    if data is None:
        return EngineConfig()
    if not isinstance(data, Mapping):
        raise ValueError(f"config root must be a mapping, got {type(data).__name__}")
    return config_from_dict(data)


def save_config(config: EngineConfig, path: str | Path) -> None:
    Path(path).write_text(
        yaml.safe_dump(config_to_dict(config), sort_keys=True), encoding="utf-8"
    )


def config_fingerprint(config: EngineConfig) -> str:
    """Stable hex digest of the full configuration."""
    canonical = json.dumps(config_to_dict(config), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


#: Name of the environment variable the CLI honors for a config override path.
CONFIG_ENV_VAR = "PRIVRISK_CONFIG"
