"""Regenerate the dashboard test fixtures from a live scoring service.

Builds a small hand-authored dataset whose posts mix ASCII and multi-byte
text (accents, emoji), scores it, and captures the exact JSON the HTTP
service returns for each endpoint the dashboard consumes. The dashboard
test suite replays these files, so its notion of the wire format is always
whatever the service actually said.

Usage: python3 scripts/make_dashboard_fixtures.py [--out frontend/tests/fixtures]
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from fastapi.testclient import TestClient

from privrisk.config import default_config
from privrisk.model import (
    AttributeValue,
    Comment,
    Post,
    PrivacySetting,
    SocialGraph,
    UserProfile,
)
from privrisk.pipeline import Dataset, score_dataset
from privrisk.service import create_app

PUB = PrivacySetting.PUBLIC
FRI = PrivacySetting.FRIENDS_ONLY
OME = PrivacySetting.ONLY_ME


def build_dataset() -> Dataset:
    graph = SocialGraph.from_edges(
        [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (0, 5)],
    )
    profiles = [
        UserProfile(
            user=0,
            entries=(
                ("Email", AttributeValue("jane@example.org", PUB)),
                ("Mobile", AttributeValue("555-0100", FRI)),
                ("DateOfBirth", AttributeValue("1990-02-11", OME)),
                ("Gender", AttributeValue("f", PUB)),
            ),
        ),
        UserProfile(user=1, entries=(("Gender", AttributeValue("m", PUB)),)),
        UserProfile(
            user=2,
            entries=(
                ("Email", AttributeValue("lee@example.org", FRI)),
                ("School", AttributeValue("State U", PUB)),
            ),
        ),
        UserProfile(user=3, entries=(("Gender", AttributeValue("x", OME)),)),
        UserProfile(user=4, entries=()),
        UserProfile(user=5, entries=(("Hometown", AttributeValue("Lyon", FRI)),)),
    ]
    # Multi-byte characters sit before the sensitive terms on purpose, so the
    # captured spans exercise real byte-vs-character offset conversion.
    posts = [
        Post(
            id="fp1",
            author=0,
            text="Écrivez à jane@example.org 🎉 on May 5, 2020",
            timestamp=1_650_000_000,
            visibility_setting=PUB,
            comments=(
                Comment(
                    id="fp1c1",
                    author=1,
                    text="À bientôt à Berlin",
                    timestamp=1_650_000_300,
                ),
            ),
        ),
        Post(
            id="fp2",
            author=0,
            text="naïve café ☕ please call 555-123-4567",
            timestamp=1_650_100_000,
            visibility_setting=FRI,
            comments=(),
        ),
        Post(
            id="fp3",
            author=0,
            text="nothing sensitive here",
            timestamp=1_650_200_000,
            visibility_setting=PUB,
            comments=(),
        ),
        Post(
            id="fp4",
            author=2,
            text="Barack Obama spoke at Starbucks in Chicago",
            timestamp=1_650_300_000,
            visibility_setting=PUB,
            comments=(
                Comment(
                    id="fp4c1",
                    author=0,
                    text="great talk",
                    timestamp=1_650_300_060,
                ),
            ),
        ),
    ]
    return Dataset(graph=graph, profiles=tuple(profiles), posts=tuple(posts))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        default="frontend/tests/fixtures",
        help="directory the fixture JSON files are written into",
    )
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    snapshot = score_dataset(build_dataset(), default_config(), seed=11)
    client = TestClient(create_app(snapshot))

    captures: dict[str, object] = {}

    def get(name: str, path: str) -> None:
        response = client.get(path)
        response.raise_for_status()
        captures[name] = response.json()

    def post(name: str, path: str, body: object) -> None:
        response = client.post(path, json=body)
        response.raise_for_status()
        captures[name] = response.json()

    get("health.json", "/api/health")
    get("summary.json", "/api/summary")
    get("report_0.json", "/api/users/0/report")
    get("report_2.json", "/api/users/2/report")
    get("neighbors_0_d1.json", "/api/users/0/neighbors?depth=1")
    get("neighbors_0_d2.json", "/api/users/0/neighbors?depth=2")
    get("content_0.json", "/api/users/0/content")
    get("content_4.json", "/api/users/4/content")
    post(
        "whatif_attr.json",
        "/api/users/0/whatif",
        {"changes": [{"kind": "attribute", "item": "Email", "setting": "only_me"}]},
    )
    post(
        "whatif_post.json",
        "/api/users/0/whatif",
        {"changes": [{"kind": "post", "item": "fp1", "setting": "friends"}]},
    )
    post("whatif_empty.json", "/api/users/0/whatif", {"changes": []})

    for name, payload in captures.items():
        path = out / name
        path.write_text(
            json.dumps(payload, indent=2, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
