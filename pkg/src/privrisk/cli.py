"""Command-line entry point: generate, score, whatif, serve.

Exit codes: 0 success, 1 validation failures (bad dataset, unknown
user/item), 2 I/O failures (missing or malformed files). Heavy imports
happen after argument parsing so --jobs can cap the linear-algebra thread
pools before they initialize.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2

logger = logging.getLogger(__name__)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="privrisk",
        description="Privacy risk scoring for social network datasets.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="increase log verbosity"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, jobs: bool = True) -> None:
        p.add_argument("--manifest", required=True, help="dataset manifest (JSON)")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--seed", type=int, default=None, help="override the manifest seed")
        if jobs:
            p.add_argument(
                "--jobs", type=int, default=None, help="cap numeric thread pools"
            )

    p_gen = sub.add_parser("generate", help="write synthetic profiles and posts")
    common(p_gen, jobs=False)
    p_gen.add_argument(
        "--posts-target",
        type=int,
        default=None,
        help="downsample the generated corpus to about this many posts",
    )

    p_score = sub.add_parser("score", help="score a dataset and export reports")
    common(p_score)
    p_score.add_argument("--scenario", default=None, help="scenario to highlight")

    p_what = sub.add_parser("whatif", help="preview a privacy-setting change")
    common(p_what)
    p_what.add_argument("--user", type=int, required=True)
    group = p_what.add_mutually_exclusive_group(required=True)
    group.add_argument("--attribute", help="attribute name to retune")
    group.add_argument("--post", help="post id to retune")
    p_what.add_argument(
        "--setting",
        required=True,
        choices=["public", "friends", "only_me"],
        help="hypothetical new setting",
    )
    p_what.add_argument("--scenario", default=None, help="scenario to highlight")

    p_serve = sub.add_parser("serve", help="serve the scored snapshot over HTTP")
    common(p_serve)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument(
        "--static",
        default=None,
        help="directory of dashboard assets to mount at the web root",
    )

    return parser


def _cap_threads(jobs: int | None) -> None:
    if jobs is None:
        return
    if jobs < 1:
        raise CliError(f"--jobs must be at least 1, got {jobs}", EXIT_VALIDATION)
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(var, str(jobs))


def _resolve_config(manifest):
    """Manifest config, unless the environment names an override path."""
    from .config import CONFIG_ENV_VAR, default_config, load_config

    override = os.environ.get(CONFIG_ENV_VAR)
    path = override or manifest.config_path
    if path is None:
        return default_config()
    try:
        return load_config(path)
    except FileNotFoundError:
        raise CliError(f"config file not found: {path}", EXIT_IO) from None
    except ValueError as exc:
        raise CliError(f"config file {path}: {exc}", EXIT_IO) from None


def _load_manifest(path: str):
    from .ingest import load_manifest

    try:
        return load_manifest(path)
    except FileNotFoundError:
        raise CliError(f"manifest not found: {path}", EXIT_IO) from None
    except (ValueError, json.JSONDecodeError) as exc:
        raise CliError(f"manifest {path}: {exc}", EXIT_IO) from None


def _load_graph(path: str):
    from .ingest import read_edge_list

    try:
        graph, stats = read_edge_list(path)
    except FileNotFoundError:
        raise CliError(f"graph file not found: {path}", EXIT_IO) from None
    except ValueError as exc:
        raise CliError(str(exc), EXIT_IO) from None
    logger.info(
        "graph: %d nodes, %d edges (%d self-loops dropped, %d duplicates)",
        graph.size,
        len(graph.edges),
        stats.self_loops_dropped,
        stats.duplicates_collapsed,
    )
    return graph


def _build_dataset(manifest, config, seed):
    """Load what the manifest names; synthesize what it omits."""
    from .ingest import generate_post_corpus, generate_synthetic_profiles, load_posts, load_profiles
    from .pipeline import Dataset

    graph = _load_graph(manifest.graph_path)
    if manifest.profiles_path:
        try:
            profiles = load_profiles(manifest.profiles_path)
        except FileNotFoundError:
            raise CliError(f"profiles file not found: {manifest.profiles_path}", EXIT_IO) from None
        except ValueError as exc:
            raise CliError(str(exc), EXIT_IO) from None
    else:
        profiles = generate_synthetic_profiles(graph, config.homophily, seed)
    if manifest.posts_path:
        try:
            posts = load_posts(manifest.posts_path)
        except FileNotFoundError:
            raise CliError(f"posts file not found: {manifest.posts_path}", EXIT_IO) from None
        except ValueError as exc:
            raise CliError(str(exc), EXIT_IO) from None
    else:
        posts = generate_post_corpus(graph.nodes, config.posts, seed + 1)

    from .model import validate_dataset

    report = validate_dataset(profiles, graph, posts)
    if not report.ok:
        for finding in report.findings[:20]:
            print(f"validation: {finding.kind} {finding.subject}: {finding.detail}", file=sys.stderr)
        extra = len(report.findings) - 20
        if extra > 0:
            print(f"validation: {extra} further finding(s) suppressed", file=sys.stderr)
        raise CliError(f"dataset failed validation with {len(report.findings)} finding(s)", EXIT_VALIDATION)
    return Dataset(graph=graph, profiles=tuple(profiles), posts=tuple(posts))


def _snapshot_for(manifest, config, seed, out_dir: Path):
    """Reuse the cached snapshot when its config fingerprint and seed match;
    otherwise score from scratch and cache."""
    from .config import config_fingerprint
    from .pipeline import load_snapshot, save_snapshot, score_dataset

    cache = out_dir / "snapshot.json"
    if cache.exists():
        try:
            snapshot = load_snapshot(cache)
            if snapshot.fingerprint == config_fingerprint(config) and snapshot.seed == seed:
                logger.info("reusing cached snapshot %s", cache)
                return snapshot
            logger.info("cached snapshot is stale; rescoring")
        except (ValueError, KeyError) as exc:
            logger.warning("cached snapshot unreadable (%s); rescoring", exc)
    dataset = _build_dataset(manifest, config, seed)
    snapshot = score_dataset(dataset, config, seed)
    out_dir.mkdir(parents=True, exist_ok=True)
    save_snapshot(snapshot, cache)
    return snapshot


def _print_summary(snapshot, scenario: str | None) -> None:
    from .pipeline import component_summary, snapshot_scenario_table

    summary = component_summary(snapshot)
    print("component      min     mean      max")
    for name in ("aprs", "sgprs", "cbprs"):
        cs = summary[name]
        print(f"{name.upper():<10} {cs.minimum:>7.3f} {cs.mean:>8.3f} {cs.maximum:>8.3f}")
    print()
    print("scenario               w_aprs  w_sgprs  w_cbprs  mean_cprs")
    table = snapshot_scenario_table(snapshot)
    for name in sorted(table):
        row = table[name]
        marker = " *" if name == scenario else ""
        print(
            f"{name:<22} {row['w_aprs']:>6.2f} {row['w_sgprs']:>8.2f} "
            f"{row['w_cbprs']:>8.2f} {row['mean_cprs']:>10.3f}{marker}"
        )


def cmd_generate(args) -> int:
    from .config import save_config
    from .ingest import (
        generate_post_corpus,
        generate_synthetic_profiles,
        save_manifest,
        save_posts,
        save_profiles,
        temporal_uniform_sample,
    )

    manifest = _load_manifest(args.manifest)
    config = _resolve_config(manifest)
    seed = manifest.seed if args.seed is None else args.seed
    graph = _load_graph(manifest.graph_path)

    profiles = generate_synthetic_profiles(graph, config.homophily, seed)
    posts = generate_post_corpus(graph.nodes, config.posts, seed + 1)
    if args.posts_target is not None:
        posts = temporal_uniform_sample(posts, args.posts_target, seed + 2)

    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        save_profiles(profiles, out_dir / "profiles.csv")
        save_posts(posts, out_dir / "posts.jsonl")
        save_config(config, out_dir / "config.yaml")
        from .ingest import DatasetManifest

        save_manifest(
            DatasetManifest(
                graph_path=manifest.graph_path,
                profiles_path=str(out_dir / "profiles.csv"),
                posts_path=str(out_dir / "posts.jsonl"),
                config_path=str(out_dir / "config.yaml"),
                seed=seed,
            ),
            out_dir / "manifest.json",
        )
    except OSError as exc:
        raise CliError(f"cannot write outputs: {exc}", EXIT_IO) from None
    print(f"wrote {len(profiles)} profiles and {len(posts)} posts to {out_dir}")
    return EXIT_OK


def cmd_score(args) -> int:
    from .pipeline import export_all, save_snapshot, score_dataset

    manifest = _load_manifest(args.manifest)
    config = _resolve_config(manifest)
    seed = manifest.seed if args.seed is None else args.seed
    scenario = args.scenario or config.default_scenario
    if scenario not in config.scenarios:
        raise CliError(
            f"unknown scenario {scenario!r}; registered: {sorted(config.scenarios)}",
            EXIT_VALIDATION,
        )

    dataset = _build_dataset(manifest, config, seed)
    snapshot = score_dataset(dataset, config, seed)
    out_dir = Path(args.out)
    try:
        paths = export_all(snapshot, out_dir)
        save_snapshot(snapshot, out_dir / "snapshot.json")
    except OSError as exc:
        raise CliError(f"cannot write outputs: {exc}", EXIT_IO) from None
    _print_summary(snapshot, scenario)
    for name, path in sorted(paths.items()):
        logger.info("wrote %s -> %s", name, path)
    return EXIT_OK


def cmd_whatif(args) -> int:
    from .model import PrivacySetting
    from .pipeline import SettingChange, what_if

    manifest = _load_manifest(args.manifest)
    config = _resolve_config(manifest)
    seed = manifest.seed if args.seed is None else args.seed
    scenario = args.scenario or config.default_scenario

    out_dir = Path(args.out)
    snapshot = _snapshot_for(manifest, config, seed, out_dir)

    change = SettingChange(
        kind="attribute" if args.attribute else "post",
        item=args.attribute or args.post,
        new_setting=PrivacySetting.parse(args.setting),
    )
    try:
        result = what_if(snapshot, args.user, [change])
    except KeyError as exc:
        raise CliError(exc.args[0], EXIT_VALIDATION) from None

    print(f"user {args.user}: {change.kind} {change.item!r} -> {change.new_setting.value}")
    print("metric        old        new      delta")
    for key in ("aprs_raw", "sgprs_raw", "cbprs_raw", "aprs", "sgprs", "cbprs"):
        old, new = result.old[key], result.new[key]
        print(f"{key:<10} {old:>9.4f} {new:>10.4f} {new - old:>+10.4f}")
    for name in sorted(result.new_cprs):
        old, new = result.old_cprs[name], result.new_cprs[name]
        marker = " *" if name == scenario else ""
        print(f"cprs[{name}]: {old:.4f} -> {new:.4f} ({new - old:+.4f}){marker}")
    if result.sgprs_approximate:
        print("note: sgprs refreshed against frozen similarities (approximation)")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    manifest = _load_manifest(args.manifest)
    config = _resolve_config(manifest)
    seed = manifest.seed if args.seed is None else args.seed

    snapshot = _snapshot_for(manifest, config, seed, Path(args.out))
    app = create_app(snapshot, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


COMMANDS = {
    "generate": cmd_generate,
    "score": cmd_score,
    "whatif": cmd_whatif,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    _cap_threads(getattr(args, "jobs", None))
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
