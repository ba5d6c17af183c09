"""End-to-end scoring pipeline and the immutable snapshot it produces.

``score_dataset`` runs every stage once and freezes the results into a
Snapshot; the CLI and the HTTP service both consume snapshots, so their
outputs agree by construction. What-if analysis recomputes the affected
terms against the frozen population and never mutates the snapshot.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Sequence

from . import attribute_risk, content_risk, graph_risk
from .aggregate import (
    ComponentSummary,
    cprs as combine_cprs,
    normalize_population,
    scenario_table,
    summarize,
)
from .config import EngineConfig, config_fingerprint, config_from_dict, config_to_dict
from .content_risk import PostScore, RuleExtractor, RuleExtractorConfig, score_post
from .graph_risk import SimilarityScores
from .model import (
    AttributeValue,
    Comment,
    Post,
    PrivacySetting,
    Recommendation,
    RiskReport,
    SensitiveEntity,
    SensitivityTable,
    SocialGraph,
    UserId,
    UserProfile,
    WeightVector,
)

COMPONENTS = ("aprs", "sgprs", "cbprs")


@dataclass(frozen=True)
class Dataset:
    graph: SocialGraph
    profiles: tuple[UserProfile, ...]
    posts: tuple[Post, ...]

    def __post_init__(self) -> None:
        profiled = {p.user for p in self.profiles}
        missing = [n for n in self.graph.nodes if n not in profiled]
        if missing:
            raise ValueError(f"nodes without profiles, e.g. {missing[:5]}")

    @property
    def profile_of(self) -> dict[UserId, UserProfile]:
        return {p.user: p for p in self.profiles}


@dataclass(frozen=True)
class ScoreSet:
    """All per-user scores for one population, raw and normalized."""

    aprs_raw: Mapping[UserId, float]
    sgprs_raw: Mapping[UserId, float]
    cbprs_raw: Mapping[UserId, float]
    aprs: Mapping[UserId, float]
    sgprs: Mapping[UserId, float]
    cbprs: Mapping[UserId, float]
    r_struct: Mapping[UserId, float]
    r_imp: Mapping[UserId, float]
    pagerank: Mapping[UserId, float]
    cprs: Mapping[str, Mapping[UserId, float]]


@dataclass(frozen=True)
class Snapshot:
    """A scored dataset frozen for serving and what-if analysis.

    Holds everything downstream consumers need: the dataset, the config
    and its fingerprint, per-attribute sensitivities, frozen node
    similarities, per-post content scores, and every per-user score.
    """

    dataset: Dataset
    config: EngineConfig
    fingerprint: str
    seed: int
    attribute_sensitivity: Mapping[str, float]
    similarities: SimilarityScores
    post_scores: Mapping[str, PostScore]
    aprs_breakdown: Mapping[UserId, Mapping[str, float]]
    cbprs_breakdown: Mapping[UserId, Mapping[str, float]]
    scores: ScoreSet

    @property
    def users(self) -> tuple[UserId, ...]:
        return self.dataset.graph.nodes

    def posts_by(self, user: UserId) -> list[Post]:
        return [p for p in self.dataset.posts if p.author == user]


def post_visibility(post: Post, graph: SocialGraph, config: EngineConfig) -> float:
    """Audience score of a post: same audience map as profile attributes."""
    return attribute_risk.visibility(
        post.visibility_setting,
        graph.degree(post.author),
        graph.size,
        config.only_me_floor,
    )


def _content_contributions(
    score: PostScore, author: UserId, attribution: str
) -> dict[UserId, float]:
    """Which users a post's risk accrues to, and how much."""
    out: dict[UserId, float] = {}
    if attribution == "post_author":
        out[author] = score.total
        return out
    out[author] = score.post_risk
    for cs in score.comment_scores:
        out[cs.comment.author] = out.get(cs.comment.author, 0.0) + cs.risk
    return out


def build_extractor(config: EngineConfig) -> RuleExtractor:
    return RuleExtractor(RuleExtractorConfig(enabled_types=tuple(config.entity_types)))


def score_dataset(dataset: Dataset, config: EngineConfig, seed: int = 0) -> Snapshot:
    """Run the full pipeline once and freeze the results.

    Stages: attribute statistics and per-user attribute risk; content
    extraction and per-post risk; node similarity and importance; the
    neighborhood risk mix; population normalization; and the composite
    under every registered scenario.
    """
    graph = dataset.graph
    if graph.size == 0:
        raise ValueError("cannot score an empty graph")
    profile_of = dataset.profile_of

    stats = attribute_risk.compute_stats(dataset.profiles, graph.size)
    attr_sens = {
        name: attribute_risk.sensitivity(stats, name, mode=config.sensitivity_mode)
        for name in sorted(stats.counts)
    }

    aprs_raw: dict[UserId, float] = {}
    aprs_breakdown: dict[UserId, Mapping[str, float]] = {}
    for node in graph.nodes:
        total, breakdown = attribute_risk.aprs(
            profile_of[node],
            stats,
            graph,
            only_me_floor=config.only_me_floor,
            mode=config.sensitivity_mode,
        )
        aprs_raw[node] = total
        aprs_breakdown[node] = breakdown

    table = SensitivityTable(weights=dict(config.sensitivity_table))
    extractor = build_extractor(config)
    post_scores: dict[str, PostScore] = {}
    cbprs_raw: dict[UserId, float] = {node: 0.0 for node in graph.nodes}
    cbprs_breakdown: dict[UserId, dict[str, float]] = {node: {} for node in graph.nodes}
    for post in dataset.posts:
        if post.author not in graph:
            raise ValueError(f"post {post.id}: author {post.author} not in graph")
        score = score_post(post, table, extractor, post_visibility(post, graph, config))
        post_scores[post.id] = score
        for user, amount in _content_contributions(
            score, post.author, config.comment_attribution
        ).items():
            if user not in cbprs_raw:
                raise ValueError(f"post {post.id}: commenter {user} not in graph")
            cbprs_raw[user] += amount
            cbprs_breakdown[user][post.id] = cbprs_breakdown[user].get(post.id, 0.0) + amount

    aprs_n = normalize_population(aprs_raw, config.normalization)

    similarities = graph_risk.simrank(graph, config.simrank)
    r_struct = graph_risk.structural_risk(graph, similarities, aprs_n)
    pr = graph_risk.pagerank(graph, config.pagerank)
    r_imp = graph_risk.importance_risk(pr)
    sgprs_raw = graph_risk.sgprs(r_struct, r_imp, config.sgprs_weights)

    sgprs_n = normalize_population(sgprs_raw, config.normalization)
    cbprs_n = normalize_population(cbprs_raw, config.normalization)

    composite = {
        name: combine_cprs(aprs_n, sgprs_n, cbprs_n, weights)
        for name, weights in sorted(config.scenarios.items())
    }

    return Snapshot(
        dataset=dataset,
        config=config,
        fingerprint=config_fingerprint(config),
        seed=seed,
        attribute_sensitivity=attr_sens,
        similarities=similarities,
        post_scores=post_scores,
        aprs_breakdown=aprs_breakdown,
        cbprs_breakdown=cbprs_breakdown,
        scores=ScoreSet(
            aprs_raw=aprs_raw,
            sgprs_raw=sgprs_raw,
            cbprs_raw=cbprs_raw,
            aprs=aprs_n,
            sgprs=sgprs_n,
            cbprs=cbprs_n,
            r_struct=r_struct,
            r_imp=r_imp,
            pagerank=pr,
            cprs=composite,
        ),
    )


# ---------------------------------------------------------------------------
# reports

def build_report(snapshot: Snapshot, user: UserId) -> RiskReport:
    """Assemble the full per-user report, including recommendations for
    every item whose risk term is at least the configured fraction of the
    user's raw component score."""
    if user not in snapshot.dataset.graph:
        raise KeyError(f"unknown user {user}")
    s = snapshot.scores
    graph = snapshot.dataset.graph
    config = snapshot.config
    profile = snapshot.dataset.profile_of[user]
    degree = graph.degree(user)

    threshold = config.recommendation_threshold
    recommendations: list[Recommendation] = []

    attr_breakdown = dict(snapshot.aprs_breakdown[user])
    floor = threshold * s.aprs_raw[user]
    for name, term in sorted(attr_breakdown.items(), key=lambda kv: (-kv[1], kv[0])):
        if term <= 0.0 or term < floor:
            continue
        setting = profile.attributes[name].setting
        options = attribute_risk.setting_deltas(
            setting,
            snapshot.attribute_sensitivity[name],
            degree,
            graph.size,
            config.only_me_floor,
        )
        if options:
            recommendations.append(
                Recommendation(
                    kind="attribute",
                    item=name,
                    current_setting=setting,
                    risk_term=term,
                    options=tuple(options),
                )
            )

    post_breakdown = dict(snapshot.cbprs_breakdown[user])
    floor = threshold * s.cbprs_raw[user]
    for post_id, term in sorted(post_breakdown.items(), key=lambda kv: (-kv[1], kv[0])):
        if term <= 0.0 or term < floor:
            continue
        score = snapshot.post_scores[post_id]
        if score.post.author != user:
            continue  # commenter-attributed term on a post the user cannot retune
        current = score.post.visibility_setting
        options: list[tuple[PrivacySetting, float]] = []
        for candidate in current.stricter_settings():
            new_vis = attribute_risk.visibility(
                candidate, degree, graph.size, config.only_me_floor
            )
            delta = score.total_sensitivity * (score.visibility - new_vis)
            if delta > 0:
                options.append((candidate, delta))
        if options:
            recommendations.append(
                Recommendation(
                    kind="post",
                    item=post_id,
                    current_setting=current,
                    risk_term=term,
                    options=tuple(options),
                )
            )

    return RiskReport(
        user=user,
        aprs_raw=s.aprs_raw[user],
        sgprs_raw=s.sgprs_raw[user],
        cbprs_raw=s.cbprs_raw[user],
        aprs=s.aprs[user],
        sgprs=s.sgprs[user],
        cbprs=s.cbprs[user],
        cprs={name: scores[user] for name, scores in s.cprs.items()},
        attribute_breakdown=attr_breakdown,
        post_breakdown=post_breakdown,
        recommendations=tuple(recommendations),
    )


def component_summary(snapshot: Snapshot) -> dict[str, ComponentSummary]:
    s = snapshot.scores
    return {
        "aprs": summarize(s.aprs),
        "sgprs": summarize(s.sgprs),
        "cbprs": summarize(s.cbprs),
    }


def snapshot_scenario_table(snapshot: Snapshot) -> dict[str, dict[str, float]]:
    s = snapshot.scores
    return scenario_table(s.aprs, s.sgprs, s.cbprs, snapshot.config.scenarios)


# ---------------------------------------------------------------------------
# what-if

@dataclass(frozen=True)
class SettingChange:
    """One requested privacy-setting change for a user's item."""

    kind: str  # "attribute" | "post"
    item: str
    new_setting: PrivacySetting

    def __post_init__(self) -> None:
        if self.kind not in ("attribute", "post"):
            raise ValueError(f"change kind must be 'attribute' or 'post', got {self.kind!r}")


@dataclass(frozen=True)
class WhatIfResult:
    """Before/after scores for one user under hypothetical setting changes.

    ``sgprs_approximate`` is set when attribute changes shifted neighbor
    risks: the neighborhood term is refreshed against frozen similarities
    rather than a full similarity recomputation.
    """

    user: UserId
    old: Mapping[str, float]
    new: Mapping[str, float]
    old_cprs: Mapping[str, float]
    new_cprs: Mapping[str, float]
    sgprs_approximate: bool

    def component_delta(self, component: str) -> float:
        return self.new[component] - self.old[component]


def what_if(
    snapshot: Snapshot, user: UserId, changes: Sequence[SettingChange]
) -> WhatIfResult:
    """Recompute scores as if ``user`` applied ``changes``.

    Raw attribute/content terms are recomputed exactly; normalization is
    redone against the snapshot population with the change applied; the
    neighborhood risk term is refreshed with similarities frozen. The
    snapshot itself is never modified, so repeating a what-if always
    returns the same result.
    """
    graph = snapshot.dataset.graph
    if user not in graph:
        raise KeyError(f"unknown user {user}")
    config = snapshot.config
    profile = snapshot.dataset.profile_of[user]
    degree = graph.degree(user)
    s = snapshot.scores

    aprs_raw = dict(s.aprs_raw)
    cbprs_raw = dict(s.cbprs_raw)
    aprs_changed = False

    for change in changes:
        if change.kind == "attribute":
            attrs = profile.attributes
            if change.item not in attrs:
                raise KeyError(f"user {user} has no attribute {change.item!r}")
            sens = snapshot.attribute_sensitivity[change.item]
            old_vis = attribute_risk.visibility(
                attrs[change.item].setting, degree, graph.size, config.only_me_floor
            )
            new_vis = attribute_risk.visibility(
                change.new_setting, degree, graph.size, config.only_me_floor
            )
            aprs_raw[user] += sens * (new_vis - old_vis)
            if new_vis != old_vis:
                aprs_changed = True
        else:
            score = snapshot.post_scores.get(change.item)
            if score is None or score.post.author != user:
                raise KeyError(f"user {user} has no post {change.item!r}")
            new_vis = attribute_risk.visibility(
                change.new_setting, degree, graph.size, config.only_me_floor
            )
            rescored = PostScore(
                post=score.post,
                entities=score.entities,
                sensitivity=score.sensitivity,
                visibility=new_vis,
                post_risk=content_risk.post_risk(score.sensitivity, new_vis),
                comment_scores=tuple(
                    content_risk.CommentScore(
                        comment=cs.comment,
                        entities=cs.entities,
                        sensitivity=cs.sensitivity,
                        risk=content_risk.post_risk(cs.sensitivity, new_vis),
                    )
                    for cs in score.comment_scores
                ),
                comment_total=sum(
                    cs.sensitivity * new_vis for cs in score.comment_scores
                ),
            )
            old_contrib = _content_contributions(score, user, config.comment_attribution)
            new_contrib = _content_contributions(rescored, user, config.comment_attribution)
            for who, amount in old_contrib.items():
                cbprs_raw[who] -= amount
            for who, amount in new_contrib.items():
                cbprs_raw[who] += amount

    aprs_n = normalize_population(aprs_raw, config.normalization)
    if aprs_changed:
        r_struct = graph_risk.structural_risk(graph, snapshot.similarities, aprs_n)
        sgprs_raw = graph_risk.sgprs(r_struct, s.r_imp, config.sgprs_weights)
    else:
        sgprs_raw = dict(s.sgprs_raw)
    sgprs_n = normalize_population(sgprs_raw, config.normalization)
    cbprs_n = normalize_population(cbprs_raw, config.normalization)

    old_components = {
        "aprs_raw": s.aprs_raw[user],
        "sgprs_raw": s.sgprs_raw[user],
        "cbprs_raw": s.cbprs_raw[user],
        "aprs": s.aprs[user],
        "sgprs": s.sgprs[user],
        "cbprs": s.cbprs[user],
    }
    new_components = {
        "aprs_raw": aprs_raw[user],
        "sgprs_raw": sgprs_raw[user],
        "cbprs_raw": cbprs_raw[user],
        "aprs": aprs_n[user],
        "sgprs": sgprs_n[user],
        "cbprs": cbprs_n[user],
    }
    old_cprs = {name: scores[user] for name, scores in s.cprs.items()}
    new_cprs = {
        name: combine_cprs(aprs_n, sgprs_n, cbprs_n, weights)[user]
        for name, weights in sorted(config.scenarios.items())
    }
    return WhatIfResult(
        user=user,
        old=old_components,
        new=new_components,
        old_cprs=old_cprs,
        new_cprs=new_cprs,
        sgprs_approximate=aprs_changed,
    )


# ---------------------------------------------------------------------------
# wire forms

def report_record(report: RiskReport) -> dict[str, Any]:
    """JSON-ready form of a report; field names are the API contract."""
    return {
        "user": report.user,
        "components": {
            "aprs": {"raw": report.aprs_raw, "normalized": report.aprs},
            "sgprs": {"raw": report.sgprs_raw, "normalized": report.sgprs},
            "cbprs": {"raw": report.cbprs_raw, "normalized": report.cbprs},
        },
        "cprs": dict(sorted(report.cprs.items())),
        "attribute_breakdown": dict(sorted(report.attribute_breakdown.items())),
        "post_breakdown": dict(sorted(report.post_breakdown.items())),
        "recommendations": [
            {
                "kind": rec.kind,
                "item": rec.item,
                "current_setting": rec.current_setting.value,
                "risk_term": rec.risk_term,
                "options": [
                    {"setting": setting.value, "delta": delta}
                    for setting, delta in rec.options
                ],
            }
            for rec in report.recommendations
        ],
    }


def summary_record(snapshot: Snapshot) -> dict[str, Any]:
    """Population summary: per-component distribution plus the scenario table."""
    summary = component_summary(snapshot)
    return {
        "population": len(snapshot.users),
        "components": {
            name: {"min": cs.minimum, "mean": cs.mean, "max": cs.maximum}
            for name, cs in summary.items()
        },
        "scenarios": snapshot_scenario_table(snapshot),
        "config_fingerprint": snapshot.fingerprint,
    }


def entity_record(
    post: Post, entity: SensitiveEntity, sensitivity: float, comment_id: str | None
) -> dict[str, Any]:
    return {
        "post_id": post.id,
        "comment_id": comment_id,
        "entity_type": entity.entity_type,
        "start": entity.start,
        "end": entity.end,
        "surface": entity.surface,
        "sensitivity": sensitivity,
    }


def content_record(snapshot: Snapshot, post: Post) -> dict[str, Any]:
    """Wire form of one scored post with entity spans and risk terms."""
    score = snapshot.post_scores[post.id]
    table = snapshot.config.sensitivity_table
    return {
        "post_id": post.id,
        "author": post.author,
        "text": post.text,
        "timestamp": post.timestamp,
        "visibility_setting": post.visibility_setting.value,
        "visibility": score.visibility,
        "sensitivity": score.sensitivity,
        "entities": [
            {
                "entity_type": e.entity_type,
                "start": e.start,
                "end": e.end,
                "surface": e.surface,
                "sensitivity": table[e.entity_type],
            }
            for e in score.entities
        ],
        "post_risk": score.post_risk,
        "comment_risk": score.comment_total,
        "total_risk": score.total,
        "comments": [
            {
                "comment_id": cs.comment.id,
                "author": cs.comment.author,
                "text": cs.comment.text,
                "timestamp": cs.comment.timestamp,
                "sensitivity": cs.sensitivity,
                "risk": cs.risk,
                "entities": [
                    {
                        "entity_type": e.entity_type,
                        "start": e.start,
                        "end": e.end,
                        "surface": e.surface,
                        "sensitivity": table[e.entity_type],
                    }
                    for e in cs.entities
                ],
            }
            for cs in score.comment_scores
        ],
    }


# ---------------------------------------------------------------------------
# exports

def export_reports(snapshot: Snapshot, path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for user in snapshot.users:
            record = report_record(build_report(snapshot, user))
            fh.write(json.dumps(record, sort_keys=True) + "\n")


def export_summary(snapshot: Snapshot, path: Path) -> None:
    path.write_text(
        json.dumps(summary_record(snapshot), sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )


def export_graph_scores(snapshot: Snapshot, path: Path) -> None:
    s = snapshot.scores
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("user_id,r_struct,r_imp,sgprs_raw,sgprs\n")
        for user in snapshot.users:
            fh.write(
                f"{user},{s.r_struct[user]!r},{s.r_imp[user]!r},"
                f"{s.sgprs_raw[user]!r},{s.sgprs[user]!r}\n"
            )


def export_entities(snapshot: Snapshot, path: Path) -> None:
    table = snapshot.config.sensitivity_table
    with open(path, "w", encoding="utf-8") as fh:
        for post in snapshot.dataset.posts:
            score = snapshot.post_scores[post.id]
            for entity in score.entities:
                fh.write(
                    json.dumps(
                        entity_record(post, entity, table[entity.entity_type], None),
                        sort_keys=True,
                    )
                    + "\n"
                )
            for cs in score.comment_scores:
                for entity in cs.entities:
                    fh.write(
                        json.dumps(
                            entity_record(
                                post, entity, table[entity.entity_type], cs.comment.id
                            ),
                            sort_keys=True,
                        )
                        + "\n"
                    )


def export_all(snapshot: Snapshot, out_dir: Path) -> dict[str, Path]:
    """Write every export artifact; returns name → path."""
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {
        "reports": out_dir / "reports.jsonl",
        "summary": out_dir / "summary.json",
        "graph_scores": out_dir / "graph_scores.csv",
        "entities": out_dir / "entities.jsonl",
    }
    export_reports(snapshot, paths["reports"])
    export_summary(snapshot, paths["summary"])
    export_graph_scores(snapshot, paths["graph_scores"])
    export_entities(snapshot, paths["entities"])
    return paths


# ---------------------------------------------------------------------------
# snapshot persistence

def _entity_to_obj(entity: SensitiveEntity) -> list[Any]:
    return [entity.entity_type, entity.start, entity.end, entity.surface]


def _entity_from_obj(obj: Sequence[Any]) -> SensitiveEntity:
    return SensitiveEntity(
        entity_type=str(obj[0]), start=int(obj[1]), end=int(obj[2]), surface=str(obj[3])
    )


def save_snapshot(snapshot: Snapshot, path: str | Path) -> None:
    """Serialize a snapshot so serve/what-if runs skip rescoring.

    Everything needed to reconstruct the snapshot exactly is stored,
    including frozen similarities and extracted entities.
    """
    ds = snapshot.dataset
    s = snapshot.scores
    data: dict[str, Any] = {
        "format": 1,
        "seed": snapshot.seed,
        "config": config_to_dict(snapshot.config),
        "fingerprint": snapshot.fingerprint,
        "graph": {
            "nodes": list(ds.graph.nodes),
            "edges": [[u, v] for u, v in ds.graph.edges],
        },
        "profiles": [
            {
                "user": p.user,
                "entries": [
                    [name, attr.value, attr.setting.value] for name, attr in p.entries
                ],
            }
            for p in ds.profiles
        ],
        "posts": [
            {
                "id": p.id,
                "author": p.author,
                "text": p.text,
                "timestamp": p.timestamp,
                "visibility": p.visibility_setting.value,
                "comments": [
                    {"id": c.id, "author": c.author, "text": c.text, "timestamp": c.timestamp}
                    for c in p.comments
                ],
            }
            for p in ds.posts
        ],
        "attribute_sensitivity": dict(sorted(snapshot.attribute_sensitivity.items())),
        "similarities": {
            "scope": snapshot.similarities.scope,
            "pairs": [[u, v, value] for (u, v), value in sorted(snapshot.similarities.items())],
        },
        "post_scores": {
            post_id: {
                "entities": [_entity_to_obj(e) for e in score.entities],
                "sensitivity": score.sensitivity,
                "visibility": score.visibility,
                "comments": [
                    {
                        "id": cs.comment.id,
                        "entities": [_entity_to_obj(e) for e in cs.entities],
                        "sensitivity": cs.sensitivity,
                    }
                    for cs in score.comment_scores
                ],
            }
            for post_id, score in sorted(snapshot.post_scores.items())
        },
        "aprs_breakdown": {
            str(u): dict(sorted(b.items())) for u, b in sorted(snapshot.aprs_breakdown.items())
        },
        "cbprs_breakdown": {
            str(u): dict(sorted(b.items())) for u, b in sorted(snapshot.cbprs_breakdown.items())
        },
        "scores": {
            "aprs_raw": {str(u): v for u, v in sorted(s.aprs_raw.items())},
            "sgprs_raw": {str(u): v for u, v in sorted(s.sgprs_raw.items())},
            "cbprs_raw": {str(u): v for u, v in sorted(s.cbprs_raw.items())},
            "aprs": {str(u): v for u, v in sorted(s.aprs.items())},
            "sgprs": {str(u): v for u, v in sorted(s.sgprs.items())},
            "cbprs": {str(u): v for u, v in sorted(s.cbprs.items())},
            "r_struct": {str(u): v for u, v in sorted(s.r_struct.items())},
            "r_imp": {str(u): v for u, v in sorted(s.r_imp.items())},
            "pagerank": {str(u): v for u, v in sorted(s.pagerank.items())},
            "cprs": {
                name: {str(u): v for u, v in sorted(scores.items())}
                for name, scores in sorted(s.cprs.items())
            },
        },
    }
    Path(path).write_text(json.dumps(data, sort_keys=True), encoding="utf-8")


def _user_map(data: Mapping[str, float]) -> dict[UserId, float]:
    # restore numeric key order so reloaded aggregations sum in the same
    # order they were computed in (bit-identical means)
    return {int(u): float(data[u]) for u in sorted(data, key=int)}


def load_snapshot(path: str | Path) -> Snapshot:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if data.get("format") != 1:
        raise ValueError(f"unsupported snapshot format: {data.get('format')!r}")
    config = config_from_dict(data["config"])
    graph = SocialGraph.from_edges(
        [(int(u), int(v)) for u, v in data["graph"]["edges"]],
        nodes=[int(n) for n in data["graph"]["nodes"]],
    )
    profiles = tuple(
        UserProfile(
            user=int(p["user"]),
            entries=tuple(
                (str(name), AttributeValue(value=str(value), setting=PrivacySetting.parse(setting)))
                for name, value, setting in p["entries"]
            ),
        )
        for p in data["profiles"]
    )
    posts = tuple(
        Post(
            id=str(p["id"]),
            author=int(p["author"]),
            text=str(p["text"]),
            timestamp=int(p["timestamp"]),
            visibility_setting=PrivacySetting.parse(p["visibility"]),
            comments=tuple(
                Comment(
                    id=str(c["id"]),
                    author=int(c["author"]),
                    text=str(c["text"]),
                    timestamp=int(c["timestamp"]),
                )
                for c in p["comments"]
            ),
        )
        for p in data["posts"]
    )
    dataset = Dataset(graph=graph, profiles=profiles, posts=posts)

    similarities = SimilarityScores(
        {(int(u), int(v)): float(value) for u, v, value in data["similarities"]["pairs"]},
        scope=str(data["similarities"]["scope"]),
    )

    posts_by_id = {p.id: p for p in posts}
    post_scores: dict[str, PostScore] = {}
    for post_id, raw in data["post_scores"].items():
        post = posts_by_id[post_id]
        post_comments = {c.id: c for c in post.comments}
        visibility = float(raw["visibility"])
        comment_scores = tuple(
            content_risk.CommentScore(
                comment=post_comments[c["id"]],
                entities=tuple(_entity_from_obj(e) for e in c["entities"]),
                sensitivity=float(c["sensitivity"]),
                risk=float(c["sensitivity"]) * visibility,
            )
            for c in raw["comments"]
        )
        sensitivity = float(raw["sensitivity"])
        post_scores[post_id] = PostScore(
            post=post,
            entities=tuple(_entity_from_obj(e) for e in raw["entities"]),
            sensitivity=sensitivity,
            visibility=visibility,
            post_risk=sensitivity * visibility,
            comment_scores=comment_scores,
            comment_total=sum(cs.risk for cs in comment_scores),
        )

    raw_scores = data["scores"]
    scores = ScoreSet(
        aprs_raw=_user_map(raw_scores["aprs_raw"]),
        sgprs_raw=_user_map(raw_scores["sgprs_raw"]),
        cbprs_raw=_user_map(raw_scores["cbprs_raw"]),
        aprs=_user_map(raw_scores["aprs"]),
        sgprs=_user_map(raw_scores["sgprs"]),
        cbprs=_user_map(raw_scores["cbprs"]),
        r_struct=_user_map(raw_scores["r_struct"]),
        r_imp=_user_map(raw_scores["r_imp"]),
        pagerank=_user_map(raw_scores["pagerank"]),
        cprs={
            name: _user_map(values) for name, values in raw_scores["cprs"].items()
        },
    )
    return Snapshot(
        dataset=dataset,
        config=config,
        fingerprint=str(data["fingerprint"]),
        seed=int(data["seed"]),
        attribute_sensitivity={
            str(k): float(v) for k, v in data["attribute_sensitivity"].items()
        },
        similarities=similarities,
        post_scores=post_scores,
        aprs_breakdown={
            int(u): {str(a): float(t) for a, t in b.items()}
            for u, b in data["aprs_breakdown"].items()
        },
        cbprs_breakdown={
            int(u): {str(p): float(t) for p, t in b.items()}
            for u, b in data["cbprs_breakdown"].items()
        },
        scores=scores,
    )
