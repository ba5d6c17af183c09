"""HTTP service over a scored snapshot."""

import pytest
from fastapi.testclient import TestClient

from privrisk.model import PrivacySetting
from privrisk.pipeline import (
    SettingChange,
    build_report,
    report_record,
    summary_record,
    what_if,
)
from privrisk.service import create_app, publish_snapshot


@pytest.fixture(scope="module")
def client(tiny_snapshot) -> TestClient:
    return TestClient(create_app(tiny_snapshot))


@pytest.fixture()
def empty_client() -> TestClient:
    return TestClient(create_app())


class TestHealth:
    def test_before_snapshot(self, empty_client):
        body = empty_client.get("/api/health").json()
        assert body["status"] == "ok"
        assert body["snapshot_published"] is False
        assert body["population"] == 0
        assert body["config_fingerprint"] is None

    def test_after_snapshot(self, client, tiny_snapshot):
        body = client.get("/api/health").json()
        assert body["snapshot_published"] is True
        assert body["population"] == 5
        assert body["config_fingerprint"] == tiny_snapshot.fingerprint


class TestSummary:
    def test_before_snapshot_503(self, empty_client):
        assert empty_client.get("/api/summary").status_code == 503

    def test_matches_summary_record(self, client, tiny_snapshot):
        response = client.get("/api/summary")
        assert response.status_code == 200
        assert response.json() == summary_record(tiny_snapshot)

    def test_three_scenario_rows(self, client):
        body = client.get("/api/summary").json()
        assert set(body["scenarios"]) == {"equal", "content-focused", "graph-focused"}


class TestReport:
    def test_known_user(self, client, tiny_snapshot):
        response = client.get("/api/users/0/report")
        assert response.status_code == 200
        assert response.json() == report_record(build_report(tiny_snapshot, 0))

    def test_cprs_under_all_scenarios(self, client):
        body = client.get("/api/users/2/report").json()
        assert set(body["cprs"]) == {"equal", "content-focused", "graph-focused"}

    def test_unknown_user_404(self, client):
        response = client.get("/api/users/12345/report")
        assert response.status_code == 404
        assert "12345" in response.json()["detail"]

    def test_before_snapshot_503(self, empty_client):
        assert empty_client.get("/api/users/0/report").status_code == 503


class TestNeighbors:
    def test_depth_one_ring(self, client, tiny_snapshot):
        body = client.get("/api/users/2/neighbors").json()
        graph = tiny_snapshot.dataset.graph
        expected = {2} | set(graph.neighbors(2))
        assert {n["id"] for n in body["nodes"]} == expected
        assert body["center"] == 2
        assert body["truncated"] is False
        for u, v in body["edges"]:
            assert u in expected and v in expected

    def test_node_scores_match_snapshot(self, client, tiny_snapshot):
        body = client.get("/api/users/2/neighbors").json()
        s = tiny_snapshot.scores
        for node in body["nodes"]:
            assert node["sgprs"] == s.sgprs[node["id"]]
            assert node["r_struct"] == s.r_struct[node["id"]]
            assert node["r_imp"] == s.r_imp[node["id"]]
            assert node["neighbor_risk"] == s.aprs[node["id"]]

    def test_depth_zero_single_node(self, client):
        body = client.get("/api/users/2/neighbors", params={"depth": 0}).json()
        assert [n["id"] for n in body["nodes"]] == [2]
        assert body["edges"] == []

    def test_depth_two_reaches_whole_path(self, client):
        body = client.get("/api/users/4/neighbors", params={"depth": 2}).json()
        assert {n["id"] for n in body["nodes"]} == {4, 3, 2}

    def test_negative_depth_400(self, client):
        assert client.get("/api/users/2/neighbors", params={"depth": -1}).status_code == 400

    def test_unknown_user_404(self, client):
        assert client.get("/api/users/777/neighbors").status_code == 404

    def test_truncation_flag(self, tiny_snapshot):
        from privrisk.service import _neighbor_subgraph

        body = _neighbor_subgraph(tiny_snapshot, 2, depth=1, limit=2)
        assert body["truncated"] is True
        assert len(body["nodes"]) == 2


class TestContent:
    def test_posts_with_entities(self, client, tiny_snapshot):
        body = client.get("/api/users/0/content").json()
        assert body["user"] == 0
        assert [p["post_id"] for p in body["posts"]] == ["p1", "p2"]
        first = body["posts"][0]
        assert [e["entity_type"] for e in first["entities"]] == ["EMAIL"]
        assert first["entities"][0]["sensitivity"] == 1.0
        assert first["total_risk"] == pytest.approx(
            first["post_risk"] + first["comment_risk"], abs=1e-12
        )

    def test_user_with_no_posts(self, client):
        body = client.get("/api/users/4/content").json()
        assert body["posts"] == []

    def test_unknown_user_404(self, client):
        assert client.get("/api/users/777/content").status_code == 404


class TestWhatIf:
    def test_matches_pipeline_recompute(self, client, tiny_snapshot):
        payload = {
            "changes": [{"kind": "attribute", "item": "Email", "setting": "only_me"}]
        }
        response = client.post("/api/users/0/whatif", json=payload)
        assert response.status_code == 200
        body = response.json()
        expected = what_if(
            tiny_snapshot,
            0,
            [SettingChange("attribute", "Email", PrivacySetting.ONLY_ME)],
        )
        assert body["old"] == dict(expected.old)
        assert body["new"] == dict(expected.new)
        assert body["new_cprs"] == dict(expected.new_cprs)
        assert body["sgprs_approximate"] is True
        assert body["new"]["aprs_raw"] <= body["old"]["aprs_raw"]

    def test_empty_changes_zero_deltas(self, client):
        response = client.post("/api/users/0/whatif", json={"changes": []})
        assert response.status_code == 200
        body = response.json()
        assert all(delta == 0 for delta in body["deltas"].values())
        assert all(delta == 0 for delta in body["cprs_deltas"].values())
        assert body["sgprs_approximate"] is False

    def test_repeatable_and_snapshot_unchanged(self, client):
        payload = {"changes": [{"kind": "post", "item": "p1", "setting": "friends"}]}
        before = client.get("/api/users/0/report").json()
        first = client.post("/api/users/0/whatif", json=payload).json()
        second = client.post("/api/users/0/whatif", json=payload).json()
        assert first == second
        assert client.get("/api/users/0/report").json() == before

    def test_malformed_body_400(self, client):
        assert client.post("/api/users/0/whatif", json={"nope": 1}).status_code == 400
        assert (
            client.post(
                "/api/users/0/whatif", json={"changes": [{"kind": "attribute"}]}
            ).status_code
            == 400
        )
        assert (
            client.post(
                "/api/users/0/whatif",
                json={"changes": [{"kind": "attribute", "item": "Email", "setting": "xx"}]},
            ).status_code
            == 400
        )

    def test_unknown_item_404(self, client):
        response = client.post(
            "/api/users/0/whatif",
            json={"changes": [{"kind": "attribute", "item": "Workplace", "setting": "only_me"}]},
        )
        assert response.status_code == 404

    def test_unknown_user_404(self, client):
        response = client.post(
            "/api/users/555/whatif",
            json={"changes": []},
        )
        assert response.status_code == 404


class TestPublish:
    def test_publish_after_start(self, tiny_snapshot):
        app = create_app()
        client = TestClient(app)
        assert client.get("/api/summary").status_code == 503
        publish_snapshot(app, tiny_snapshot)
        assert client.get("/api/summary").status_code == 200

    def test_unknown_route_404(self, client):
        assert client.get("/api/nope").status_code == 404


class TestStaticMount:
    def test_serves_dashboard_files(self, tiny_snapshot, tmp_path):
        (tmp_path / "index.html").write_text("<!doctype html><title>dash</title>")
        (tmp_path / "app.js").write_text("console.log('hi')")
        client = TestClient(create_app(tiny_snapshot, static_dir=tmp_path))
        home = client.get("/")
        assert home.status_code == 200
        assert "dash" in home.text
        assert client.get("/app.js").text == "console.log('hi')"
        # the API stays reachable alongside the mount
        assert client.get("/api/health").status_code == 200

    def test_missing_dir_leaves_root_unmounted(self, tiny_snapshot, tmp_path):
        client = TestClient(
            create_app(tiny_snapshot, static_dir=tmp_path / "absent")
        )
        assert client.get("/").status_code == 404
        assert client.get("/api/health").status_code == 200
