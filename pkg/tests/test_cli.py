"""Batch CLI: generate, score, and what-if subcommands with exit codes."""

import json
from pathlib import Path

import pytest

from privrisk.cli import EXIT_IO, EXIT_OK, EXIT_VALIDATION, main
from privrisk.config import (
    CONFIG_ENV_VAR,
    default_config,
    save_config,
    with_overrides,
)
from privrisk.ingest import (
    DatasetManifest,
    generate_community_graph,
    save_edge_list,
    save_manifest,
)


@pytest.fixture()
def fixture_dir(tmp_path) -> Path:
    graph = generate_community_graph(24, 2, 4.0, 0.1, seed=31)
    save_edge_list(graph, tmp_path / "graph.txt")
    save_manifest(
        DatasetManifest(graph_path=str(tmp_path / "graph.txt"), seed=61),
        tmp_path / "manifest.json",
    )
    return tmp_path


def run(argv):
    return main([str(a) for a in argv])


class TestGenerate:
    def test_writes_dataset_bundle(self, fixture_dir, capsys):
        out = fixture_dir / "gen"
        code = run(["generate", "--manifest", fixture_dir / "manifest.json", "--out", out])
        assert code == EXIT_OK
        for name in ("profiles.csv", "posts.jsonl", "config.yaml", "manifest.json"):
            assert (out / name).exists(), name
        assert "wrote" in capsys.readouterr().out

    def test_same_seed_byte_identical(self, fixture_dir):
        out_a = fixture_dir / "a"
        out_b = fixture_dir / "b"
        manifest = fixture_dir / "manifest.json"
        assert run(["generate", "--manifest", manifest, "--out", out_a]) == EXIT_OK
        assert run(["generate", "--manifest", manifest, "--out", out_b]) == EXIT_OK
        for name in ("profiles.csv", "posts.jsonl", "config.yaml"):
            assert (out_a / name).read_bytes() == (out_b / name).read_bytes(), name

    def test_seed_changes_output(self, fixture_dir):
        manifest = fixture_dir / "manifest.json"
        out_a = fixture_dir / "a"
        out_b = fixture_dir / "b"
        assert run(["generate", "--manifest", manifest, "--out", out_a]) == EXIT_OK
        assert (
            run(["generate", "--manifest", manifest, "--out", out_b, "--seed", 62]) == EXIT_OK
        )
        assert (out_a / "profiles.csv").read_bytes() != (out_b / "profiles.csv").read_bytes()

    def test_posts_target_downsamples(self, fixture_dir):
        out = fixture_dir / "gen"
        code = run(
            [
                "generate", "--manifest", fixture_dir / "manifest.json",
                "--out", out, "--posts-target", 5,
            ]
        )
        assert code == EXIT_OK
        lines = (out / "posts.jsonl").read_text().splitlines()
        assert len(lines) == 5

    def test_missing_manifest_is_io_error(self, tmp_path, capsys):
        code = run(["generate", "--manifest", tmp_path / "nope.json", "--out", tmp_path / "o"])
        assert code == EXIT_IO
        assert "error:" in capsys.readouterr().err


class TestScore:
    def test_smoke_run_writes_exports(self, fixture_dir, capsys):
        out = fixture_dir / "scored"
        code = run(["score", "--manifest", fixture_dir / "manifest.json", "--out", out])
        assert code == EXIT_OK
        for name in (
            "reports.jsonl",
            "summary.json",
            "graph_scores.csv",
            "entities.jsonl",
            "snapshot.json",
        ):
            assert (out / name).exists(), name
        printed = capsys.readouterr().out
        for row in ("APRS", "SGPRS", "CBPRS"):
            assert row in printed
        for scenario in ("equal", "content-focused", "graph-focused"):
            assert scenario in printed

    def test_missing_graph_is_io_error(self, tmp_path, capsys):
        save_manifest(
            DatasetManifest(graph_path=str(tmp_path / "absent.txt"), seed=1),
            tmp_path / "manifest.json",
        )
        code = run(["score", "--manifest", tmp_path / "manifest.json", "--out", tmp_path / "o"])
        assert code == EXIT_IO
        assert "graph file not found" in capsys.readouterr().err

    def test_dangling_author_is_validation_error(self, fixture_dir, capsys):
        posts_path = fixture_dir / "posts.jsonl"
        posts_path.write_text(
            json.dumps(
                {
                    "id": "p1",
                    "author": 4242,
                    "text": "hi",
                    "timestamp": 0,
                    "visibility": "public",
                    "comments": [],
                }
            )
            + "\n"
        )
        save_manifest(
            DatasetManifest(
                graph_path=str(fixture_dir / "graph.txt"),
                posts_path=str(posts_path),
                seed=61,
            ),
            fixture_dir / "manifest2.json",
        )
        code = run(["score", "--manifest", fixture_dir / "manifest2.json", "--out", fixture_dir / "o"])
        assert code == EXIT_VALIDATION
        err = capsys.readouterr().err
        assert "dangling-author" in err

    def test_unknown_scenario_rejected(self, fixture_dir, capsys):
        code = run(
            [
                "score", "--manifest", fixture_dir / "manifest.json",
                "--out", fixture_dir / "o", "--scenario", "balanced",
            ]
        )
        assert code == EXIT_VALIDATION
        assert "unknown scenario" in capsys.readouterr().err

    def test_env_var_overrides_config(self, fixture_dir, monkeypatch, capsys):
        strict = with_overrides(default_config(), only_me_floor=0.05)
        config_path = fixture_dir / "strict.yaml"
        save_config(strict, config_path)
        monkeypatch.setenv(CONFIG_ENV_VAR, str(config_path))
        out = fixture_dir / "scored"
        assert run(["score", "--manifest", fixture_dir / "manifest.json", "--out", out]) == EXIT_OK
        summary = json.loads((out / "summary.json").read_text())
        from privrisk.config import config_fingerprint

        assert summary["config_fingerprint"] == config_fingerprint(strict)

    def test_determinism_across_runs(self, fixture_dir):
        manifest = fixture_dir / "manifest.json"
        out_a = fixture_dir / "runa"
        out_b = fixture_dir / "runb"
        assert run(["score", "--manifest", manifest, "--out", out_a]) == EXIT_OK
        assert run(["score", "--manifest", manifest, "--out", out_b]) == EXIT_OK
        for name in ("reports.jsonl", "summary.json", "graph_scores.csv", "entities.jsonl"):
            assert (out_a / name).read_bytes() == (out_b / name).read_bytes(), name


class TestWhatIf:
    def run_scored(self, fixture_dir):
        out = fixture_dir / "scored"
        assert run(["score", "--manifest", fixture_dir / "manifest.json", "--out", out]) == EXIT_OK
        reports = [
            json.loads(line)
            for line in (out / "reports.jsonl").read_text().splitlines()
        ]
        return out, reports

    def pick_attribute_user(self, reports):
        for record in reports:
            for name, term in record["attribute_breakdown"].items():
                if term > 0:
                    return record["user"], name
        raise AssertionError("no scored attribute found")

    def test_attribute_change_prints_delta(self, fixture_dir, capsys):
        out, reports = self.run_scored(fixture_dir)
        capsys.readouterr()
        user, attribute = self.pick_attribute_user(reports)
        code = run(
            [
                "whatif", "--manifest", fixture_dir / "manifest.json", "--out", out,
                "--user", user, "--attribute", attribute, "--setting", "only_me",
            ]
        )
        assert code == EXIT_OK
        printed = capsys.readouterr().out
        assert "aprs_raw" in printed
        assert "cprs[equal]" in printed

    def test_unknown_attribute_is_validation_error(self, fixture_dir, capsys):
        out, reports = self.run_scored(fixture_dir)
        capsys.readouterr()
        user = reports[0]["user"]
        code = run(
            [
                "whatif", "--manifest", fixture_dir / "manifest.json", "--out", out,
                "--user", user, "--attribute", "NoSuchAttr", "--setting", "only_me",
            ]
        )
        assert code == EXIT_VALIDATION
        assert "NoSuchAttr" in capsys.readouterr().err

    def test_unknown_user_is_validation_error(self, fixture_dir, capsys):
        out, _ = self.run_scored(fixture_dir)
        capsys.readouterr()
        code = run(
            [
                "whatif", "--manifest", fixture_dir / "manifest.json", "--out", out,
                "--user", 99999, "--attribute", "Email", "--setting", "only_me",
            ]
        )
        assert code == EXIT_VALIDATION

    def test_requires_exactly_one_item_flag(self, fixture_dir, capsys):
        with pytest.raises(SystemExit):
            run(
                [
                    "whatif", "--manifest", fixture_dir / "manifest.json",
                    "--out", fixture_dir / "scored", "--user", 1, "--setting", "only_me",
                ]
            )

    def test_reuses_cached_snapshot(self, fixture_dir, capsys):
        out, reports = self.run_scored(fixture_dir)
        capsys.readouterr()
        user, attribute = self.pick_attribute_user(reports)
        snapshot_bytes = (out / "snapshot.json").read_bytes()
        code = run(
            [
                "whatif", "--manifest", fixture_dir / "manifest.json", "--out", out,
                "--user", user, "--attribute", attribute, "--setting", "friends",
            ]
        )
        assert code == EXIT_OK
        assert (out / "snapshot.json").read_bytes() == snapshot_bytes


class TestParser:
    def test_subcommand_required(self):
        with pytest.raises(SystemExit):
            main([])

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit):
            main(["frobnicate"])

    def test_serve_accepts_static_dir(self):
        from privrisk.cli import build_parser

        args = build_parser().parse_args(
            ["serve", "--manifest", "m.json", "--out", "o", "--static", "dist"]
        )
        assert args.static == "dist"
        assert (args.host, args.port) == ("127.0.0.1", 8000)
