"""Content-based privacy risk: sensitive entities in posts and comments.

The built-in extractor is deliberately rule-based: regex patterns for
structured types (emails, phones, dates, amounts) plus case-insensitive
longest-match gazetteers for name-like types. That keeps extraction fully
deterministic and dependency-free; a statistical NER can be plugged in
through the same interface.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Mapping, Protocol, Sequence

from .model import (
    DEFAULT_ENTITY_TYPES,
    Comment,
    Post,
    SensitiveEntity,
    SensitivityTable,
    UserId,
)

#: Default per-type sensitivity weights. Identity-revealing contact types
#: rank highest, descriptive types lowest; all values are configurable.
DEFAULT_SENSITIVITY = {
    "EMAIL": 1.0,
    "PHONE": 1.0,
    "PERSON": 0.8,
    "DATE": 0.7,
    "GPE": 0.7,
    "LOC": 0.7,
    "MONEY": 0.6,
    "ORG": 0.5,
    "NORP": 0.5,
    "EVENT": 0.4,
    "FAC": 0.4,
    "LAW": 0.4,
    "PRODUCT": 0.4,
    "TIME": 0.3,
    "PERCENT": 0.3,
    "QUANTITY": 0.3,
    "LANGUAGE": 0.2,
    "WORK_OF_ART": 0.2,
    "ORDINAL": 0.2,
    "CARDINAL": 0.2,
}

_MONTH = (
    r"(?:January|February|March|April|May|June|July|August|September|October|"
    r"November|December|Jan|Feb|Mar|Apr|Jun|Jul|Aug|Sep|Sept|Oct|Nov|Dec)"
)

#: (entity_type, pattern) in priority order; earlier entries win exact-span
#: ties during overlap resolution.
PATTERN_RULES: tuple[tuple[str, str], ...] = (
    ("EMAIL", r"\b[A-Za-z0-9._%+-]+@[A-Za-z0-9-]+(?:\.[A-Za-z0-9-]+)*\.[A-Za-z]{2,}\b"),
    (
        "PHONE",
        r"(?<![\d\w])(?:\+\d{1,3}[-.\s])?(?:\(\d{3}\)\s?|\d{3}[-.\s])\d{3}[-.\s]\d{4}(?!\d)",
    ),
    ("PHONE", r"(?<![\d\w])\+\d{10,14}(?!\d)"),
    (
        "DATE",
        rf"\b{_MONTH}\.?\s+\d{{1,2}}(?:st|nd|rd|th)?(?:,\s*\d{{4}})?\b",
    ),
    (
        "DATE",
        rf"\b\d{{1,2}}(?:st|nd|rd|th)?\s+{_MONTH}\b(?:,?\s*\d{{4}})?\b",
    ),
    ("DATE", rf"\b{_MONTH}\s+\d{{4}}\b"),
    ("DATE", r"\b\d{4}-\d{2}-\d{2}\b"),
    ("DATE", r"\b\d{1,2}/\d{1,2}/\d{2,4}\b"),
    ("DATE", r"\b(?:19|20)\d{2}\b"),
    ("DATE", r"\b(?:today|tomorrow|yesterday)\b"),
    ("TIME", r"\b\d{1,2}:\d{2}(?::\d{2})?(?:\s?[ap]\.?m\.?)?(?!\w)"),
    ("TIME", r"\b\d{1,2}\s?[ap]\.?m\.?(?!\w)"),
    ("TIME", r"\b(?:noon|midnight)\b"),
    ("MONEY", r"(?<![\w$])\$\s?\d+(?:,\d{3})*(?:\.\d+)?(?:\s?(?:million|billion|k))?\b"),
    (
        "MONEY",
        r"\b\d+(?:,\d{3})*(?:\.\d+)?\s?(?:dollars?|euros?|usd|cents?|bucks?)\b",
    ),
    ("PERCENT", r"(?<!\w)\d+(?:\.\d+)?\s?%"),
    ("PERCENT", r"\b\d+(?:\.\d+)?\s?percent\b"),
    (
        "QUANTITY",
        r"\b\d+(?:\.\d+)?\s?(?:kg|kilograms?|km|kilometers?|miles?|pounds?|lbs|"
        r"liters?|litres?|grams?|meters?|metres?|tons?|acres?|ounces?|feet|foot|inches)\b",
    ),
    ("ORDINAL", r"\b\d+(?:st|nd|rd|th)\b"),
    (
        "ORDINAL",
        r"\b(?:first|second|third|fourth|fifth|sixth|seventh|eighth|ninth|tenth)\b",
    ),
    ("CARDINAL", r"(?<![\w,.])\d+(?:,\d{3})*(?:\.\d+)?(?!\w)"),
)

#: Entity types recognized through gazetteer lists rather than patterns,
#: in priority order.
GAZETTEER_TYPES: tuple[str, ...] = (
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
)


class EntityExtractor(Protocol):
    def extract(self, text: str) -> list[SensitiveEntity]:
        """Return entities sorted by span start; deterministic for fixed text."""
        ...


def load_gazetteer(entity_type: str, directory: Path | None = None) -> tuple[str, ...]:
    """Read one term per line for a gazetteer type, skipping blanks."""
    name = f"{entity_type.lower()}.txt"
    if directory is not None:
        raw = (directory / name).read_text(encoding="utf-8")
    else:
        raw = (resources.files("privrisk") / "data" / "gazetteers" / name).read_text(
            encoding="utf-8"
        )
    return tuple(line.strip() for line in raw.splitlines() if line.strip())


@dataclass(frozen=True)
class RuleExtractorConfig:
    """Tuning knobs for the built-in extractor.

    ``enabled_types`` restricts extraction to a taxonomy subset;
    ``extra_terms`` extends (or, for unknown types, creates) gazetteers;
    ``gazetteer_dir`` swaps the shipped word lists for external ones.
    """

    enabled_types: tuple[str, ...] = DEFAULT_ENTITY_TYPES
    gazetteer_dir: Path | None = None
    extra_terms: Mapping[str, Sequence[str]] = field(default_factory=dict)


class RuleExtractor:
    """Deterministic pattern and gazetteer entity extraction.

    Candidates from every rule are resolved longest-match-first, ties by
    leftmost start, further ties by rule priority. Surviving spans never
    overlap. Span offsets are byte offsets into the UTF-8 encoding of the
    input.
    """

    def __init__(self, config: RuleExtractorConfig | None = None):
        self.config = config or RuleExtractorConfig()
        enabled = set(self.config.enabled_types)
        self._rules: list[tuple[str, re.Pattern[str]]] = []
        for entity_type, pattern in PATTERN_RULES:
            if entity_type in enabled:
                self._rules.append((entity_type, re.compile(pattern, re.IGNORECASE)))
        for entity_type in GAZETTEER_TYPES:
            if entity_type not in enabled:
                continue
            terms = list(load_gazetteer(entity_type, self.config.gazetteer_dir))
            terms.extend(self.config.extra_terms.get(entity_type, ()))
            if terms:
                self._rules.append((entity_type, _compile_gazetteer(terms)))

    def extract(self, text: str) -> list[SensitiveEntity]:
        if not text:
            return []
        candidates: list[tuple[int, int, int, str]] = []
        for priority, (entity_type, pattern) in enumerate(self._rules):
            for match in pattern.finditer(text):
                start, end = match.span()
                if start < end:
                    candidates.append((start, end, priority, entity_type))
        if not candidates:
            return []
        # longest first, then leftmost, then rule priority
        candidates.sort(key=lambda c: (-(c[1] - c[0]), c[0], c[2]))
        chosen: list[tuple[int, int, str]] = []
        for start, end, _, entity_type in candidates:
            if all(end <= s or start >= e for s, e, _ in chosen):
                chosen.append((start, end, entity_type))
        chosen.sort()
        to_byte = _byte_offset_fn(text)
        return [
            SensitiveEntity(
                entity_type=entity_type,
                start=to_byte(start),
                end=to_byte(end),
                surface=text[start:end],
            )
            for start, end, entity_type in chosen
        ]


def _compile_gazetteer(terms: Sequence[str]) -> re.Pattern[str]:
    # longer alternatives first so the regex engine prefers the longest term
    ordered = sorted(set(terms), key=lambda t: (-len(t), t))
    alternation = "|".join(re.escape(term) for term in ordered)
    return re.compile(rf"(?<!\w)(?:{alternation})(?!\w)", re.IGNORECASE)


def _byte_offset_fn(text: str) -> Callable[[int], int]:
    if text.isascii():
        return lambda i: i
    prefix = [0] * (len(text) + 1)
    total = 0
    for i, ch in enumerate(text):
        total += len(ch.encode("utf-8"))
        prefix[i + 1] = total
    return lambda i: prefix[i]


def post_sensitivity(entities: Iterable[SensitiveEntity], table: SensitivityTable) -> float:
    """Total sensitivity of a text: sum over its entities, duplicates counted."""
    return sum(table[e.entity_type] for e in entities)


def post_risk(sensitivity: float, visibility: float) -> float:
    """Risk of a post body: sensitivity scaled by audience visibility."""
    if sensitivity < 0 or visibility < 0:
        raise ValueError("sensitivity and visibility must be non-negative")
    return sensitivity * visibility


@dataclass(frozen=True)
class CommentScore:
    comment: Comment
    entities: tuple[SensitiveEntity, ...]
    sensitivity: float
    risk: float


@dataclass(frozen=True)
class PostScore:
    """Full content scoring detail for one post."""

    post: Post
    entities: tuple[SensitiveEntity, ...]
    sensitivity: float
    visibility: float
    post_risk: float
    comment_scores: tuple[CommentScore, ...]
    comment_total: float

    @property
    def total(self) -> float:
        return self.post_risk + self.comment_total

    @property
    def total_sensitivity(self) -> float:
        return self.sensitivity + sum(c.sensitivity for c in self.comment_scores)


def score_post(
    post: Post,
    table: SensitivityTable,
    extractor: EntityExtractor,
    visibility: float,
) -> PostScore:
    """Extract and score a post and its comments under one visibility.

    Comments inherit the post's visibility; their risks accrue to the post.
    """
    entities = tuple(extractor.extract(post.text))
    sens = post_sensitivity(entities, table)
    comment_scores = []
    for comment in post.comments:
        c_entities = tuple(extractor.extract(comment.text))
        c_sens = post_sensitivity(c_entities, table)
        comment_scores.append(
            CommentScore(
                comment=comment,
                entities=c_entities,
                sensitivity=c_sens,
                risk=post_risk(c_sens, visibility),
            )
        )
    return PostScore(
        post=post,
        entities=entities,
        sensitivity=sens,
        visibility=visibility,
        post_risk=post_risk(sens, visibility),
        comment_scores=tuple(comment_scores),
        comment_total=sum(c.risk for c in comment_scores),
    )


def comment_risks(
    post: Post,
    table: SensitivityTable,
    extractor: EntityExtractor,
    visibility: float,
) -> tuple[list[tuple[str, float]], float]:
    """Per-comment risks under the post's visibility, and their sum."""
    scored = score_post(post, table, extractor, visibility)
    return (
        [(c.comment.id, c.risk) for c in scored.comment_scores],
        scored.comment_total,
    )


def post_total_risk(
    post: Post,
    table: SensitivityTable,
    extractor: EntityExtractor,
    visibility: float,
) -> float:
    """Combined risk of a post's own content plus all its comments."""
    return score_post(post, table, extractor, visibility).total


def cbprs(
    user: UserId,
    posts: Sequence[Post],
    table: SensitivityTable,
    extractor: EntityExtractor,
    visibility_of: Callable[[Post], float],
) -> tuple[float, dict[str, float]]:
    """Content risk score for one user: total risk summed over their posts.

    ``visibility_of`` supplies each post's visibility score (degree-aware in
    the full pipeline). Returns the raw score and the per-post breakdown.
    """
    breakdown: dict[str, float] = {}
    for post in posts:
        if post.author != user:
            continue
        breakdown[post.id] = post_total_risk(post, table, extractor, visibility_of(post))
    return sum(breakdown.values()), breakdown
