"""Command-line interface tying the pipeline together:
analyze -> learn -> generate -> evaluate, plus a parameter-grid sweep.
"""

from __future__ import annotations

import json
import os
import sys
from collections import defaultdict

import click
import numpy as np

from . import baseline as baseline_mod
from .errors import SignetError
from .evaluate import evaluate as run_evaluate
from .generate import generate as run_generate
from .graph import SignedGraph
from .io import read_graph, write_canonical
from .learn import LearnConfig, ModelParams, learn_parameters
from .metrics import stats_report

SCHEMA_VERSION = 1


def _write_json(path, payload):
    payload = dict(payload)
    payload["schema_version"] = SCHEMA_VERSION
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _write_tsv(path, header_cols, rows):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# columns: " + " ".join(header_cols) + "\n")
        for row in rows:
            fh.write("\t".join(str(x) for x in row) + "\n")


def _load(path) -> SignedGraph:
    try:
        return read_graph(path)
    except SignetError as exc:
        raise click.ClickException(str(exc)) from exc


def _learn_config(seed, em_samples, em_iters) -> LearnConfig:
    cfg = LearnConfig(seed=seed)
    if em_samples is not None:
        cfg.em_sample_size = em_samples
    if em_iters is not None:
        cfg.em_max_iters = em_iters
    return cfg


@click.group()
def main():
    """Signed-network modeling toolkit."""


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_dir", type=click.Path(file_okay=False), required=True)
def analyze(input_path, out_dir):
    """Measure a network and emit stats JSON plus plot-data TSVs."""
    g = _load(input_path)
    os.makedirs(out_dir, exist_ok=True)
    stats = stats_report(g)
    _write_json(
        os.path.join(out_dir, "stats.json"),
        {
            "n": stats.n,
            "m": stats.m,
            "m_positive": stats.m_positive,
            "eta": stats.eta,
            "delta_b": stats.delta_b,
            "triangle_counts": stats.census.as_counts(),
            "triangle_distribution": stats.census.distribution(),
            "degree_histogram": {str(k): v for k, v in sorted(stats.degree_histogram.items())},
        },
    )
    _write_tsv(
        os.path.join(out_dir, "degree_histogram.tsv"),
        ["degree", "count"],
        sorted(stats.degree_histogram.items()),
    )
    _write_tsv(
        os.path.join(out_dir, "clustering_raw.tsv"),
        ["degree", "coefficient"],
        [(d, c) for d, c in zip(stats.degrees, stats.clustering)],
    )
    by_degree = defaultdict(list)
    for d, c in zip(stats.degrees, stats.clustering):
        by_degree[d].append(c)
    _write_tsv(
        os.path.join(out_dir, "clustering_by_degree.tsv"),
        ["degree", "mean_coefficient"],
        [(d, float(np.mean(cs))) for d, cs in sorted(by_degree.items())],
    )
    click.echo(f"analyzed {input_path}: N={stats.n} M={stats.m} eta={stats.eta:.3f}")


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
@click.option("--seed", default=42, show_default=True)
@click.option("--em-samples", type=int, default=None)
@click.option("--em-iters", type=int, default=None)
def learn(input_path, out_path, seed, em_samples, em_iters):
    """Learn model parameters from a network."""
    g = _load(input_path)
    params = learn_parameters(g, _learn_config(seed, em_samples, em_iters))
    payload = params.to_dict()
    payload["config"] = {"seed": seed, "em_samples": em_samples, "em_iters": em_iters}
    _write_json(out_path, payload)
    click.echo(
        f"learned rho={params.rho:.4f} alpha={params.alpha:.4f} beta={params.beta:.4f}"
    )


def _generate_runs(g, params, runs, seed, out_dir, policy="balance"):
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for r in range(runs):
        run_seed = seed + r
        if policy == "iid":
            g_out = baseline_mod.stcl_generate(g, params.rho, run_seed)
        else:
            g_out = run_generate(g, params, run_seed)
        path = os.path.join(out_dir, f"generated_{r:03d}.tsv")
        write_canonical(g_out, path)
        _write_json(
            os.path.join(out_dir, f"manifest_{r:03d}.json"),
            {
                "run": r,
                "seed": run_seed,
                "policy": policy,
                "params": {k: v for k, v in params.to_dict().items() if k != "trace"},
                "n": g_out.n,
                "m": g_out.m,
            },
        )
        paths.append(path)
    return paths


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--params", "params_path", type=click.Path(exists=True), required=True)
@click.option("--runs", default=10, show_default=True)
@click.option("--seed", default=42, show_default=True)
@click.option("--outdir", type=click.Path(file_okay=False), required=True)
@click.option("--policy", type=click.Choice(["balance", "iid"]), default="balance",
              show_default=True, help="iid = STCL baseline signs")
def generate(input_path, params_path, runs, seed, outdir, policy):
    """Generate R synthetic networks; run r uses seed S+r."""
    g = _load(input_path)
    with open(params_path, "r", encoding="utf-8") as fh:
        params = ModelParams.from_dict(json.load(fh))
    paths = _generate_runs(g, params, runs, seed, outdir, policy)
    click.echo(f"wrote {len(paths)} networks to {outdir}")


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--generated-dir", type=click.Path(exists=True, file_okay=False), required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "tsv"]), default="json",
              show_default=True)
def evaluate(input_path, generated_dir, out_path, fmt):
    """Compare generated networks in a directory against the input."""
    g = _load(input_path)
    gen_paths = sorted(
        os.path.join(generated_dir, f)
        for f in os.listdir(generated_dir)
        if f.startswith("generated_") and f.endswith(".tsv")
    )
    if not gen_paths:
        raise click.ClickException(f"no generated_*.tsv files in {generated_dir}")
    report = run_evaluate(g, [_load(p) for p in gen_paths])
    if fmt == "json":
        _write_json(out_path, report.to_dict())
    else:
        rows = [
            (r["run"], r["stats"]["eta"], r["stats"]["delta_b"],
             r["deltas"]["abs_eta_diff"], r["deltas"]["abs_delta_b_diff"],
             r["deltas"]["triangle_l1"], r["deltas"]["degree_ks"])
            for r in report.runs
        ]
        _write_tsv(
            out_path,
            ["run", "eta", "delta_b", "abs_eta_diff", "abs_delta_b_diff",
             "triangle_l1", "degree_ks"],
            rows,
        )
    m = report.mean
    click.echo(
        "mean |d_eta|={abs_eta_diff:.4f} |d_delta_b|={abs_delta_b_diff:.4f} "
        "triangle_l1={triangle_l1:.4f} ks={degree_ks:.4f}".format(**m)
    )


def _parse_grid(text):
    try:
        values = [float(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise click.ClickException(f"bad grid {text!r}: {exc}") from exc
    if not values:
        raise click.ClickException("empty grid")
    return values


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--alpha-grid", required=True, help="comma-separated alpha values")
@click.option("--beta-grid", required=True, help="comma-separated beta values")
@click.option("--runs", default=3, show_default=True)
@click.option("--seed", default=42, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
@click.option("--em-samples", type=int, default=None)
@click.option("--em-iters", type=int, default=None)
def sweep(input_path, alpha_grid, beta_grid, runs, seed, out_path, em_samples, em_iters):
    """Grid search over (alpha, beta); emits surface data for each point."""
    g = _load(input_path)
    learned = learn_parameters(g, _learn_config(seed, em_samples, em_iters))
    alphas = _parse_grid(alpha_grid)
    betas = _parse_grid(beta_grid)
    rows = []
    for a in alphas:
        for b in betas:
            point = ModelParams(
                rho=learned.rho, alpha=a, beta=b,
                eta=learned.eta, delta_b=learned.delta_b,
            )
            d_eta, d_bal = [], []
            for r in range(runs):
                gen = run_generate(g, point, seed + r)
                rep = run_evaluate(g, [gen])
                d_eta.append(rep.runs[0]["deltas"]["abs_eta_diff"])
                d_bal.append(rep.runs[0]["deltas"]["abs_delta_b_diff"])
            rows.append(
                (a, b, float(np.mean(d_bal)), float(np.mean(d_eta)),
                 int(a == learned.alpha and b == learned.beta))
            )
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write("# columns: alpha beta abs_delta_b_diff abs_eta_diff is_learned_point\n")
        fh.write(f"# learned: alpha={learned.alpha} beta={learned.beta} rho={learned.rho}\n")
        for row in rows:
            fh.write("\t".join(str(x) for x in row) + "\n")
    click.echo(f"swept {len(rows)} grid points -> {out_path}")


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--outdir", type=click.Path(file_okay=False), required=True)
@click.option("--runs", default=10, show_default=True)
@click.option("--seed", default=42, show_default=True)
@click.option("--em-samples", type=int, default=None)
@click.option("--em-iters", type=int, default=None)
@click.pass_context
def pipeline(ctx, input_path, outdir, runs, seed, em_samples, em_iters):
    """analyze -> learn -> generate -> evaluate in one command."""
    os.makedirs(outdir, exist_ok=True)
    ctx.invoke(analyze, input_path=input_path, out_dir=os.path.join(outdir, "analysis"))
    params_path = os.path.join(outdir, "params.json")
    ctx.invoke(learn, input_path=input_path, out_path=params_path,
               seed=seed, em_samples=em_samples, em_iters=em_iters)
    gen_dir = os.path.join(outdir, "generated")
    ctx.invoke(generate, input_path=input_path, params_path=params_path,
               runs=runs, seed=seed, outdir=gen_dir, policy="balance")
    ctx.invoke(evaluate, input_path=input_path, generated_dir=gen_dir,
               out_path=os.path.join(outdir, "report.json"), fmt="json")


if __name__ == "__main__":
    sys.exit(main())
