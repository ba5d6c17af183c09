"""Dataset loading, synthesis, and sampling.

Handles the three input artifacts (edge list, profile table, post corpus),
generates synthetic profiles over a graph with tunable homophily, builds a
synthetic post corpus, and performs month-bucketed uniform downsampling.
Every generator is deterministic for a fixed seed.
"""
from __future__ import annotations

import calendar
import csv
import json
import logging
import random
import re
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Mapping, Sequence

from .config import AttributeModel, HomophilyConfig, PostGenConfig
from .model import (
    AttributeValue,
    Comment,
    Post,
    PrivacySetting,
    SocialGraph,
    UserId,
    UserProfile,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DatasetManifest:
    """Paths and seed for one reproducible run.

    Only the graph is mandatory; profiles and posts fall back to synthetic
    generation when absent.
    """

    graph_path: str
    profiles_path: str | None = None
    posts_path: str | None = None
    config_path: str | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if not self.graph_path:
            raise ValueError("manifest requires a graph_path")
        if not -(2**63) <= self.seed < 2**63:
            raise ValueError("seed must fit in 64 bits")


def load_manifest(path: str | Path) -> DatasetManifest:
    """Read a manifest file (JSON object). Relative paths stay relative."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValueError(f"manifest root must be an object: {path}")
    unknown = set(data) - {"graph_path", "profiles_path", "posts_path", "config_path", "seed"}
    if unknown:
        raise ValueError(f"manifest has unknown fields {sorted(unknown)}: {path}")
    if "graph_path" not in data:
        raise ValueError(f"manifest missing graph_path: {path}")
    return DatasetManifest(
        graph_path=str(data["graph_path"]),
        profiles_path=(str(data["profiles_path"]) if data.get("profiles_path") else None),
        posts_path=(str(data["posts_path"]) if data.get("posts_path") else None),
        config_path=(str(data["config_path"]) if data.get("config_path") else None),
        seed=int(data.get("seed", 0)),
    )


def save_manifest(manifest: DatasetManifest, path: str | Path) -> None:
    record: dict[str, Any] = {"graph_path": manifest.graph_path, "seed": manifest.seed}
    if manifest.profiles_path:
        record["profiles_path"] = manifest.profiles_path
    if manifest.posts_path:
        record["posts_path"] = manifest.posts_path
    if manifest.config_path:
        record["config_path"] = manifest.config_path
    Path(path).write_text(json.dumps(record, sort_keys=True, indent=2) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# edge lists

@dataclass(frozen=True)
class EdgeListStats:
    lines_read: int
    self_loops_dropped: int
    duplicates_collapsed: int


def read_edge_list(path: str | Path) -> tuple[SocialGraph, EdgeListStats]:
    """Parse a whitespace-delimited edge list into an undirected graph.

    Lines starting with '#' and blank lines are skipped. Duplicate edges
    (either orientation) collapse; self-loops register the node but no edge
    and are counted in the stats.
    """
    edges: set[tuple[UserId, UserId]] = set()
    loop_nodes: list[UserId] = []
    self_loops = 0
    duplicates = 0
    lines_read = 0
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            lines_read += 1
            parts = stripped.split()
            if len(parts) != 2:
                raise ValueError(
                    f"{path}:{lineno}: expected two fields, got {len(parts)}: {stripped!r}"
                )
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: non-integer node id in {stripped!r}"
                ) from None
            if u < 0 or v < 0:
                raise ValueError(f"{path}:{lineno}: negative node id in {stripped!r}")
            if u == v:
                self_loops += 1
                loop_nodes.append(u)
                continue
            key = (u, v) if u < v else (v, u)
            if key in edges:
                duplicates += 1
            else:
                edges.add(key)
    if self_loops:
        logger.warning("%s: dropped %d self-loop(s)", path, self_loops)
    graph = SocialGraph.from_edges(sorted(edges), nodes=loop_nodes)
    return graph, EdgeListStats(lines_read, self_loops, duplicates)


def load_edge_list(path: str | Path) -> SocialGraph:
    return read_edge_list(path)[0]


def save_edge_list(graph: SocialGraph, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in graph.edges:
            fh.write(f"{u} {v}\n")
        for node in graph.nodes:
            if graph.degree(node) == 0:
                fh.write(f"{node} {node}\n")


# ---------------------------------------------------------------------------
# profiles

PROFILE_COLUMNS = ("user_id", "attribute", "value", "setting")


def load_profiles(path: str | Path) -> list[UserProfile]:
    """Read the per-row attribute table; duplicate attribute rows are kept
    so validation can flag them."""
    rows_by_user: dict[UserId, list[tuple[str, AttributeValue]]] = {}
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            return []
        if tuple(h.strip() for h in header) != PROFILE_COLUMNS:
            raise ValueError(
                f"{path}: expected header {','.join(PROFILE_COLUMNS)}, got {','.join(header)}"
            )
        for rowno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 4:
                raise ValueError(f"{path}:{rowno}: expected 4 columns, got {len(row)}")
            raw_id, attribute, value, setting = row
            try:
                user = int(raw_id)
            except ValueError:
                raise ValueError(f"{path}:{rowno}: non-integer user_id {raw_id!r}") from None
            try:
                parsed = PrivacySetting.parse(setting)
            except ValueError as exc:
                raise ValueError(f"{path}:{rowno}: {exc}") from None
            rows_by_user.setdefault(user, []).append(
                (attribute, AttributeValue(value=value, setting=parsed))
            )
    return [
        UserProfile(user=user, entries=tuple(entries))
        for user, entries in sorted(rows_by_user.items())
    ]


def save_profiles(profiles: Sequence[UserProfile], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(PROFILE_COLUMNS)
        for profile in sorted(profiles, key=lambda p: p.user):
            for name, attr in profile.entries:
                writer.writerow([profile.user, name, attr.value, attr.setting.value])


# ---------------------------------------------------------------------------
# posts

def _comment_from_record(data: Mapping[str, Any], where: str) -> Comment:
    for field_name in ("id", "author", "text", "timestamp"):
        if field_name not in data:
            raise ValueError(f"{where}: comment missing field {field_name!r}")
    return Comment(
        id=str(data["id"]),
        author=int(data["author"]),
        text=str(data["text"]),
        timestamp=int(data["timestamp"]),
    )


def load_posts(path: str | Path) -> list[Post]:
    """Read newline-delimited post records, returned in timestamp order."""
    posts: list[Post] = []
    with open(path, "r", encoding="utf-8") as fh:
        for index, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            where = f"{path}: record {index}"
            try:
                data = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{where}: invalid record: {exc}") from None
            if not isinstance(data, dict):
                raise ValueError(f"{where}: record must be an object")
            for field_name in ("id", "author", "text", "timestamp", "visibility"):
                if field_name not in data:
                    raise ValueError(f"{where}: missing field {field_name!r}")
            try:
                visibility = PrivacySetting.parse(str(data["visibility"]))
            except ValueError as exc:
                raise ValueError(f"{where}: {exc}") from None
            comments = tuple(
                _comment_from_record(c, where) for c in data.get("comments", ())
            )
            posts.append(
                Post(
                    id=str(data["id"]),
                    author=int(data["author"]),
                    text=str(data["text"]),
                    timestamp=int(data["timestamp"]),
                    visibility_setting=visibility,
                    comments=comments,
                )
            )
    posts.sort(key=lambda p: p.timestamp)
    return posts


def save_posts(posts: Sequence[Post], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for post in posts:
            record = {
                "id": post.id,
                "author": post.author,
                "text": post.text,
                "timestamp": post.timestamp,
                "visibility": post.visibility_setting.value,
                "comments": [
                    {
                        "id": c.id,
                        "author": c.author,
                        "text": c.text,
                        "timestamp": c.timestamp,
                    }
                    for c in post.comments
                ],
            }
            fh.write(json.dumps(record, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# temporal sampling

def _month_key(timestamp: int) -> tuple[int, int]:
    dt = datetime.fromtimestamp(timestamp, tz=timezone.utc)
    return (dt.year, dt.month)


def temporal_uniform_sample(posts: Sequence[Post], k: int, seed: int) -> list[Post]:
    """Downsample to about k posts spread evenly over calendar months (UTC).

    Each month gets an equal quota (floor division, remainder to the
    earliest months). Quota a short month cannot fill is reassigned to the
    remaining months, earliest first, so the result has exactly
    min(k, len(posts)) items. Within a month, sampling is uniform without
    replacement. Output is in timestamp order.
    """
    if k < 0:
        raise ValueError(f"sample size must be non-negative, got {k}")
    if k == 0 or not posts:
        return []
    if k >= len(posts):
        return sorted(posts, key=lambda p: (p.timestamp, p.id))

    buckets: dict[tuple[int, int], list[Post]] = {}
    for post in posts:
        buckets.setdefault(_month_key(post.timestamp), []).append(post)
    months = sorted(buckets)
    for key in months:
        buckets[key].sort(key=lambda p: (p.timestamp, p.id))

    quotas = {key: 0 for key in months}
    remaining = {key: len(buckets[key]) for key in months}
    budget = k
    # waterfill: split the remaining budget evenly across months that still
    # have unsampled posts, earliest months absorbing the remainder
    while budget > 0:
        open_months = [key for key in months if remaining[key] > 0]
        if not open_months:
            break
        share, extra = divmod(budget, len(open_months))
        allocated = 0
        for i, key in enumerate(open_months):
            want = share + (1 if i < extra else 0)
            take = min(want, remaining[key])
            quotas[key] += take
            remaining[key] -= take
            allocated += take
        budget -= allocated
        if allocated == 0:
            break

    rng = random.Random(seed)
    chosen: list[Post] = []
    for key in months:
        quota = quotas[key]
        bucket = buckets[key]
        if quota >= len(bucket):
            chosen.extend(bucket)
        elif quota > 0:
            chosen.extend(rng.sample(bucket, quota))
    chosen.sort(key=lambda p: (p.timestamp, p.id))
    return chosen


def assign_authors(posts: Sequence[Post], users: Sequence[UserId], seed: int) -> list[Post]:
    """Rewrite each post's author to a uniformly chosen user.

    Comment authors are rewritten the same way so a foreign corpus maps
    entirely into the network's population.
    """
    if not users:
        raise ValueError("cannot assign authors from an empty user list")
    rng = random.Random(seed)
    pool = sorted(users)
    out: list[Post] = []
    for post in posts:
        comments = tuple(
            Comment(id=c.id, author=rng.choice(pool), text=c.text, timestamp=c.timestamp)
            for c in post.comments
        )
        out.append(
            Post(
                id=post.id,
                author=rng.choice(pool),
                text=post.text,
                timestamp=post.timestamp,
                visibility_setting=post.visibility_setting,
                comments=comments,
            )
        )
    return out


# ---------------------------------------------------------------------------
# synthetic profiles

_ABSENT = object()


def _sample_state(model: AttributeModel, rng: random.Random) -> Any:
    if rng.random() >= model.presence:
        return _ABSENT
    return rng.choices(model.values, weights=model.effective_value_probs, k=1)[0]


def _bfs_order(graph: SocialGraph) -> list[UserId]:
    """Nodes in breadth-first order, one component at a time, so every
    non-root node is visited after at least one of its neighbors."""
    seen: set[UserId] = set()
    order: list[UserId] = []
    for start in graph.nodes:
        if start in seen:
            continue
        seen.add(start)
        frontier = [start]
        while frontier:
            order.extend(frontier)
            nxt: list[UserId] = []
            for node in frontier:
                for neighbor in graph.neighbors(node):
                    if neighbor not in seen:
                        seen.add(neighbor)
                        nxt.append(neighbor)
            frontier = sorted(nxt)
    return order


def generate_synthetic_profiles(
    graph: SocialGraph, config: HomophilyConfig, seed: int
) -> list[UserProfile]:
    """One profile per node with neighbor-correlated attribute values.

    Nodes are processed in breadth-first order per component. For each
    attribute, with probability h the node copies the presence/value state
    of a uniformly chosen already-assigned neighbor, otherwise it samples
    the base model. At h = 1 every component is therefore uniform per
    attribute. Visibility settings are always sampled independently.
    """
    rng = random.Random(seed)
    h = config.homophily_strength
    names = list(config.attributes)
    states: dict[UserId, dict[str, Any]] = {}
    settings = (PrivacySetting.PUBLIC, PrivacySetting.FRIENDS_ONLY, PrivacySetting.ONLY_ME)

    profiles: dict[UserId, UserProfile] = {}
    for node in _bfs_order(graph):
        assigned_neighbors = [v for v in graph.neighbors(node) if v in states]
        node_state: dict[str, Any] = {}
        entries: list[tuple[str, AttributeValue]] = []
        for name in names:
            model = config.attributes[name]
            if assigned_neighbors and rng.random() < h:
                donor = assigned_neighbors[rng.randrange(len(assigned_neighbors))]
                state = states[donor][name]
            else:
                state = _sample_state(model, rng)
            node_state[name] = state
            if state is not _ABSENT:
                setting = rng.choices(settings, weights=model.visibility, k=1)[0]
                entries.append((name, AttributeValue(value=state, setting=setting)))
        states[node] = node_state
        profiles[node] = UserProfile(user=node, entries=tuple(entries))
    return [profiles[node] for node in graph.nodes]


# ---------------------------------------------------------------------------
# synthetic posts

#: Template sensitivity sums are kept in a narrow band so population
#: content risk is not dominated by a few outlier authors.
_POST_TEMPLATES: tuple[str, ...] = (
    "Had a great time with {person} in {gpe} on {date}",
    "Celebrating at {fac} at {time}, message me at {email}",
    "New number {phone}, call after {time}, I moved to {gpe}",
    "Reading {work} while flying to {gpe} on {date}",
    "{person} and I are going to {event} in {gpe} this weekend",
    "Started a new job at {org} in {gpe} on {date}",
    "Lunch near {loc} cost me {money} today",
    "Happy birthday {person}! Party on {date} at {time}",
    "Just moved to {gpe}, reach me at {email}",
    "Training for a long run by {loc}, did 10 miles with {person}",
    "Meeting {person} at {fac} on {date}",
    "Our {org} offsite is at {fac} on {date}",
)

_COMMENT_TEMPLATES: tuple[str, ...] = (
    "So jealous, say hi to {person} for me",
    "I will be in {gpe} next week too",
    "Call me later at {phone}",
    "Congrats! Drinks at {fac}?",
    "Nice, that cost me {money} last year",
    "See you there at {time}",
    "Wish I could go",
    "Great news!",
)

_FILLERS: Mapping[str, tuple[str, ...]] = {
    "person": ("Jane", "Priya", "Carlos", "Sofia", "Mateo", "Aisha"),
    "gpe": ("Chicago", "Austin", "Tokyo", "Berlin", "El Paso"),
    "loc": ("Lake Michigan", "Grand Canyon", "Lake Tahoe"),
    "org": ("Starbucks", "Spotify", "Toyota"),
    "fac": ("Union Station", "Times Square", "Madison Square Garden"),
    "event": ("Oktoberfest", "Coachella", "Comic-Con"),
    "work": ("The Great Gatsby", "Hamlet"),
    "email": ("ana.lopez@example.com", "sam.k@example.org", "dev.patel@example.net"),
    "phone": ("555-201-3344", "555-774-9120", "(555) 318-2265"),
    "date": ("May 5, 2021", "June 12", "2021-09-30", "tomorrow"),
    "time": ("6 pm", "14:30", "noon"),
    "money": ("$25", "$140.50", "30 dollars"),
}

_FIELD_PATTERN = re.compile(r"\{(\w+)\}")


def _fill_template(template: str, rng: random.Random) -> str:
    return _FIELD_PATTERN.sub(
        lambda m: rng.choice(_FILLERS[m.group(1)]), template
    )


def _month_start_epochs(start_month: str, months: int) -> list[tuple[int, int]]:
    """(epoch_start, epoch_end) per month, end exclusive."""
    year, month = (int(p) for p in start_month.split("-"))
    spans: list[tuple[int, int]] = []
    for _ in range(months):
        days = calendar.monthrange(year, month)[1]
        start = int(datetime(year, month, 1, tzinfo=timezone.utc).timestamp())
        spans.append((start, start + days * 86400))
        month += 1
        if month > 12:
            month = 1
            year += 1
    return spans


def generate_post_corpus(
    users: Sequence[UserId], config: PostGenConfig, seed: int
) -> list[Post]:
    """Template-generated posts and comments over the user population.

    Post counts, visibility, and timestamps follow the config
    distributions; comment authors are drawn from the whole population.
    Deterministic for a fixed seed; output in timestamp order.
    """
    if not users:
        return []
    rng = random.Random(seed)
    pool = sorted(users)
    spans = _month_start_epochs(config.start_month, config.months)
    post_counts = list(range(len(config.posts_per_user_weights)))
    comment_counts = list(range(len(config.comments_per_post_weights)))
    settings = (PrivacySetting.PUBLIC, PrivacySetting.FRIENDS_ONLY, PrivacySetting.ONLY_ME)

    posts: list[Post] = []
    serial = 0
    for user in pool:
        n_posts = rng.choices(post_counts, weights=config.posts_per_user_weights, k=1)[0]
        for _ in range(n_posts):
            start, end = spans[rng.randrange(len(spans))]
            timestamp = rng.randrange(start, end)
            n_comments = rng.choices(
                comment_counts, weights=config.comments_per_post_weights, k=1
            )[0]
            comments = tuple(
                Comment(
                    id=f"p{serial}c{ci}",
                    author=rng.choice(pool),
                    text=_fill_template(rng.choice(_COMMENT_TEMPLATES), rng),
                    timestamp=timestamp + 60 * (ci + 1),
                )
                for ci in range(n_comments)
            )
            posts.append(
                Post(
                    id=f"p{serial}",
                    author=user,
                    text=_fill_template(rng.choice(_POST_TEMPLATES), rng),
                    timestamp=timestamp,
                    visibility_setting=rng.choices(
                        settings, weights=config.visibility_weights, k=1
                    )[0],
                    comments=comments,
                )
            )
            serial += 1
    posts.sort(key=lambda p: (p.timestamp, p.id))
    return posts


# ---------------------------------------------------------------------------
# synthetic graphs

def generate_community_graph(
    n_nodes: int,
    n_communities: int,
    mean_degree: float,
    rewire_fraction: float,
    seed: int,
) -> SocialGraph:
    """Random community-structured graph with a bounded degree spread.

    Nodes are split evenly into communities; each node draws edges to
    community peers until the target mean degree is reached, then a
    fraction of stubs rewire across communities. Degrees concentrate
    around the mean (no hub tail), which keeps population risk scores
    from being dominated by a handful of nodes.
    """
    if n_nodes < 2 or n_communities < 1:
        raise ValueError("need at least 2 nodes and 1 community")
    if not 0.0 <= rewire_fraction <= 1.0:
        raise ValueError("rewire_fraction must be in [0, 1]")
    rng = random.Random(seed)
    community_of = [i % n_communities for i in range(n_nodes)]
    members: list[list[int]] = [[] for _ in range(n_communities)]
    for node, c in enumerate(community_of):
        members[c].append(node)

    target_edges = int(n_nodes * mean_degree / 2)
    edges: set[tuple[int, int]] = set()
    attempts = 0
    while len(edges) < target_edges and attempts < target_edges * 50:
        attempts += 1
        u = rng.randrange(n_nodes)
        if rng.random() < rewire_fraction:
            v = rng.randrange(n_nodes)
        else:
            peers = members[community_of[u]]
            v = peers[rng.randrange(len(peers))]
        if u == v:
            continue
        edges.add((u, v) if u < v else (v, u))

    # guarantee connectivity without creating hubs: chain each community's
    # members (adds at most 2 to any degree), then ring the communities
    for peers in members:
        for a, b in zip(peers, peers[1:]):
            edges.add((a, b) if a < b else (b, a))
    for c in range(n_communities):
        u = members[c][0]
        v = members[(c + 1) % n_communities][0]
        if u != v:
            edges.add((u, v) if u < v else (v, u))

    return SocialGraph.from_edges(sorted(edges), nodes=range(n_nodes))
