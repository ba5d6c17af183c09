"""Shared domain types: users, profiles, graphs, posts, entities, reports.

Everything here is immutable after construction so snapshots can be shared
freely across threads and processes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Sequence

UserId = int

#: Attribute names present in every default taxonomy. Configs may extend this
#: list but never shrink it.
DEFAULT_ATTRIBUTES = (
    "Mobile",
    "Email",
    "Gender",
    "Pronoun",
    "DateOfBirth",
    "RelationshipStatus",
    "FromLocation",
    "LivesInLocation",
    "School",
    "Workplace",
)

#: Entity taxonomy: the common 18 NER types plus EMAIL and PHONE, which the
#: built-in extractor detects directly from text patterns.
DEFAULT_ENTITY_TYPES = (
    "PERSON",
    "NORP",
    "FAC",
    "ORG",
    "GPE",
    "LOC",
    "PRODUCT",
    "EVENT",
    "WORK_OF_ART",
    "LAW",
    "LANGUAGE",
    "DATE",
    "TIME",
    "PERCENT",
    "MONEY",
    "QUANTITY",
    "ORDINAL",
    "CARDINAL",
    "EMAIL",
    "PHONE",
)


class PrivacySetting(Enum):
    """Audience setting attached to an attribute or post."""

    PUBLIC = "public"
    FRIENDS_ONLY = "friends"
    ONLY_ME = "only_me"

    @classmethod
    def parse(cls, text: str) -> "PrivacySetting":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(
                f"unknown privacy setting {text!r}; expected one of "
                f"{[s.value for s in cls]}"
            ) from None

    def stricter_settings(self) -> tuple["PrivacySetting", ...]:
        """Settings with a smaller audience than this one, strictest last."""
        order = (PrivacySetting.PUBLIC, PrivacySetting.FRIENDS_ONLY, PrivacySetting.ONLY_ME)
        return order[order.index(self) + 1:]


def audience_size(setting: PrivacySetting, friend_count: int, network_size: int):
    """Number of users able to view an item, or None for the only-me floor.

    Only-me items have no audience count; their residual exposure is modelled
    as a fixed visibility floor instead (see attribute_risk.visibility).
    """
    if setting is PrivacySetting.PUBLIC:
        return network_size
    if setting is PrivacySetting.FRIENDS_ONLY:
        return friend_count
    return None


@dataclass(frozen=True)
class AttributeValue:
    """One profile attribute: opaque value text plus its privacy setting."""

    value: str
    setting: PrivacySetting


@dataclass(frozen=True)
class UserProfile:
    """A user's attribute values.

    ``entries`` preserves the raw (attribute, value) rows as loaded, so a
    malformed profile carrying duplicate attributes can be represented and
    flagged by validate_dataset. ``attributes`` exposes the well-formed map
    view (first entry wins on duplicates).
    """

    user: UserId
    entries: tuple[tuple[str, AttributeValue], ...]

    @classmethod
    def from_mapping(cls, user: UserId, attributes: Mapping[str, AttributeValue]) -> "UserProfile":
        return cls(user=user, entries=tuple(sorted(attributes.items())))

    @property
    def attributes(self) -> dict[str, AttributeValue]:
        result: dict[str, AttributeValue] = {}
        for name, value in self.entries:
            result.setdefault(name, value)
        return result

    def duplicate_attributes(self) -> list[str]:
        seen: set[str] = set()
        dupes: list[str] = []
        for name, _ in self.entries:
            if name in seen and name not in dupes:
                dupes.append(name)
            seen.add(name)
        return dupes


@dataclass(frozen=True)
class SocialGraph:
    """Undirected friendship graph over user ids.

    Neighbor lists are sorted and self-loops are rejected; adjacency is
    symmetric by construction.
    """

    nodes: tuple[UserId, ...]
    edges: tuple[tuple[UserId, UserId], ...]
    adjacency: Mapping[UserId, tuple[UserId, ...]] = field(repr=False)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[UserId, UserId]],
        nodes: Iterable[UserId] = (),
    ) -> "SocialGraph":
        """Build a graph from unordered pairs; duplicates collapse.

        Raises ValueError on self-loops and negative ids. ``nodes`` may add
        isolated nodes beyond the edge endpoints.
        """
        node_set = set(nodes)
        edge_set: set[tuple[UserId, UserId]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            if u < 0 or v < 0:
                raise ValueError(f"negative user id in edge ({u}, {v})")
            edge_set.add((u, v) if u < v else (v, u))
            node_set.add(u)
            node_set.add(v)
        if any(n < 0 for n in node_set):
            raise ValueError("negative user id")
        adjacency: dict[UserId, list[UserId]] = {n: [] for n in node_set}
        for u, v in edge_set:
            adjacency[u].append(v)
            adjacency[v].append(u)
        frozen = {n: tuple(sorted(nbrs)) for n, nbrs in adjacency.items()}
        return cls(
            nodes=tuple(sorted(node_set)),
            edges=tuple(sorted(edge_set)),
            adjacency=frozen,
        )

    def __contains__(self, user: UserId) -> bool:
        return user in self.adjacency

    def neighbors(self, user: UserId) -> tuple[UserId, ...]:
        return self.adjacency[user]

    def degree(self, user: UserId) -> int:
        return len(self.adjacency[user])

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class Comment:
    """A comment under a post; visibility is inherited from the parent."""

    id: str
    author: UserId
    text: str
    timestamp: int


@dataclass(frozen=True)
class Post:
    """A timestamped text item with its own audience setting."""

    id: str
    author: UserId
    text: str
    timestamp: int
    visibility_setting: PrivacySetting
    comments: tuple[Comment, ...] = ()


@dataclass(frozen=True)
class SensitiveEntity:
    """A typed span of sensitive text.

    ``start``/``end`` are byte offsets into the UTF-8 encoding of the source
    text, so spans stay meaningful across language boundaries.
    """

    entity_type: str
    start: int
    end: int
    surface: str

    def __post_init__(self):
        if not (0 <= self.start < self.end):
            raise ValueError(
                f"invalid span ({self.start}, {self.end}) for {self.entity_type}"
            )


@dataclass(frozen=True)
class SensitivityTable:
    """Per-entity-type sensitivity weights in [0, 1]."""

    weights: Mapping[str, float]

    def __post_init__(self):
        for name, w in self.weights.items():
            if w < 0:
                raise ValueError(f"negative sensitivity for {name}: {w}")

    def __getitem__(self, entity_type: str) -> float:
        try:
            return self.weights[entity_type]
        except KeyError:
            raise KeyError(f"entity type {entity_type!r} has no sensitivity entry") from None

    def __contains__(self, entity_type: str) -> bool:
        return entity_type in self.weights

    def check_covers(self, taxonomy: Iterable[str]) -> None:
        missing = [t for t in taxonomy if t not in self.weights]
        if missing:
            raise ValueError(f"sensitivity table missing entries for {missing}")


@dataclass(frozen=True)
class WeightVector:
    """Relative importance of the three risk components.

    Components must sum to 1 up to rounding slack: published presets are
    printed with two decimals (0.33 + 0.33 + 0.33 = 0.99), so the check
    tolerates up to 0.02 of drift rather than 1e-9.
    """

    w_aprs: float
    w_sgprs: float
    w_cbprs: float

    SUM_TOLERANCE = 0.02

    def __post_init__(self):
        for w in (self.w_aprs, self.w_sgprs, self.w_cbprs):
            if not (0.0 <= w <= 1.0):
                raise ValueError(f"weight {w} outside [0, 1]")
        total = self.w_aprs + self.w_sgprs + self.w_cbprs
        if abs(total - 1.0) > self.SUM_TOLERANCE:
            raise ValueError(f"weights sum to {total}, expected 1.0")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.w_aprs, self.w_sgprs, self.w_cbprs)


@dataclass(frozen=True)
class Recommendation:
    """One actionable mitigation: tighten the setting on an attribute or post.

    ``options`` lists each stricter setting with the raw risk reduction it
    achieves, recomputed through the same formulas that scored the item.
    """

    kind: str  # "attribute" | "post"
    item: str
    current_setting: PrivacySetting
    risk_term: float
    options: tuple[tuple[PrivacySetting, float], ...]


@dataclass(frozen=True)
class RiskReport:
    """Everything known about one user's privacy risk."""

    user: UserId
    aprs_raw: float
    sgprs_raw: float
    cbprs_raw: float
    aprs: float
    sgprs: float
    cbprs: float
    cprs: Mapping[str, float]
    attribute_breakdown: Mapping[str, float]
    post_breakdown: Mapping[str, float]
    recommendations: tuple[Recommendation, ...]

    def __post_init__(self):
        for name, value in (("aprs", self.aprs), ("sgprs", self.sgprs), ("cbprs", self.cbprs)):
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"normalized {name} outside [0, 1]: {value}")


@dataclass(frozen=True)
class Finding:
    """One dataset integrity problem."""

    kind: str
    subject: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...]

    @property
    def ok(self) -> bool:
        return not self.findings

    def by_kind(self, kind: str) -> list[Finding]:
        return [f for f in self.findings if f.kind == kind]


def validate_dataset(
    profiles: Sequence[UserProfile],
    graph: SocialGraph,
    posts: Sequence[Post],
) -> ValidationReport:
    """Check referential integrity of a loaded dataset.

    Report-style: never raises. Flags profile users and post/comment authors
    missing from the graph, duplicate attribute rows, and duplicate
    profile/post ids.
    """
    findings: list[Finding] = []
    seen_users: set[UserId] = set()
    for profile in profiles:
        if profile.user in seen_users:
            findings.append(
                Finding("duplicate-profile", str(profile.user), "more than one profile for user")
            )
        seen_users.add(profile.user)
        if profile.user not in graph:
            findings.append(
                Finding("dangling-profile", str(profile.user), "profile user not in graph")
            )
        for name in profile.duplicate_attributes():
            findings.append(
                Finding(
                    "duplicate-attribute",
                    f"{profile.user}:{name}",
                    f"attribute {name} appears more than once",
                )
            )
    seen_posts: set[str] = set()
    for post in posts:
        if post.id in seen_posts:
            findings.append(Finding("duplicate-post", post.id, "post id appears more than once"))
        seen_posts.add(post.id)
        if post.author not in graph:
            findings.append(
                Finding("dangling-author", post.id, f"post author {post.author} not in graph")
            )
        for comment in post.comments:
            if comment.author not in graph:
                findings.append(
                    Finding(
                        "dangling-commenter",
                        f"{post.id}:{comment.id}",
                        f"comment author {comment.author} not in graph",
                    )
                )
    return ValidationReport(findings=tuple(findings))
