"""Command-line entry point.

Subcommands cover graph generation, network analysis, embedding reports,
the ML experiment suite, reproduction checks against the built-in
reference tables, and plot-data export.  Exit codes: 0 success, 2 a
deterministic reproduction check failed, 3 a resource cap was hit, 4 bad
configuration.
"""

from __future__ import annotations

import csv
import json
import os

import click

from . import plots
from . import reference as ref
from .analytics import full_stats, minimum_cycle_basis
from .embedding import (
    _seed_quiver_ids,
    cluster_count,
    embed_cycle,
    mcb_embedding_profile,
    orbit_permutations,
    permutation_factor,
    seed_quiver_ratio,
)
from .errors import ClusterMutError, DomainError, ResourceLimitError
from .exchange_graph import (
    DEFAULT_MAX_VERTICES,
    generate_full,
    generate_quiver_eg,
    generate_seed_eg,
    seed_from_json,
)
from .ml import experiments as mlx
from .ml.data import assemble_dataset
from .mutation import BUILTIN_NAMES, as_matrix, builtin_seed, initial_seed

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_RESOURCE = 3
EXIT_CONFIG = 4

OUT_ENV = "CLUSTERMUT_OUT"


# -- config helpers --------------------------------------------------------

def _resolve_seed(name: str, catalogue: str | None):
    """Initial seed from the catalogue override file or the builtins."""
    if catalogue:
        try:
            with open(catalogue) as fh:
                entries = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise DomainError(f"cannot read catalogue {catalogue}: {exc}")
        if name in entries:
            entry = entries[name]
            if isinstance(entry, dict) and "matrix" in entry and "cluster" not in entry:
                return initial_seed(as_matrix(entry["matrix"]))
            return seed_from_json(entry)
    if name in BUILTIN_NAMES:
        return builtin_seed(name)
    raise DomainError(f"unknown seed name {name!r}; builtins: {', '.join(BUILTIN_NAMES)}")


def _parse_depth(depth: str) -> int | None:
    if depth in ("full", "closure"):
        return None
    try:
        value = int(depth)
    except ValueError:
        raise DomainError(f"depth must be an integer or 'full', got {depth!r}")
    if value < 0:
        raise DomainError("depth must be >= 0")
    return value


def _out_dir(out: str | None) -> str:
    path = out or os.environ.get(OUT_ENV) or "."
    os.makedirs(path, exist_ok=True)
    return path


def _generate(name, catalogue, depth, mode, payload, max_vertices):
    seed = _resolve_seed(name, catalogue)
    if payload == "quivers":
        return generate_quiver_eg(seed, depth, mode, algebra=name,
                                  max_vertices=max_vertices)
    return generate_seed_eg(seed, depth, mode, algebra=name,
                            max_vertices=max_vertices)


def _write_graph(graph, path: str, fmt: str) -> None:
    with open(path, "w") as fh:
        if fmt == "json":
            json.dump(graph.to_json_dict(), fh)
        elif fmt == "dot":
            fh.write(graph.to_dot())
        else:
            fh.write(graph.to_csv())


# -- reproduction report plumbing ------------------------------------------

class Report:
    def __init__(self, title: str):
        self.title = title
        self.rows: list[tuple[str, str, str, bool]] = []

    def check(self, label: str, computed, expected) -> None:
        if isinstance(expected, str):
            shown = ref.format_like(computed, expected) if computed is not None else "-"
            ok = ref.matches(computed, expected)
        else:
            shown = str(computed)
            ok = computed == expected
        self.rows.append((label, shown, str(expected), ok))

    def check_bool(self, label: str, ok: bool, computed, expected) -> None:
        self.rows.append((label, str(computed), str(expected), bool(ok)))

    @property
    def passed(self) -> bool:
        return all(ok for *_, ok in self.rows)

    def emit(self, out_dir: str, stem: str) -> int:
        path = os.path.join(out_dir, f"{stem}.csv")
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["check", "computed", "expected", "status"])
            for label, shown, expected, ok in self.rows:
                writer.writerow([label, shown, expected, "pass" if ok else "FAIL"])
        for label, shown, expected, ok in self.rows:
            status = "pass" if ok else "FAIL"
            click.echo(f"[{status}] {label}: {shown} (expected {expected})")
        n_fail = sum(not ok for *_, ok in self.rows)
        click.echo(f"{self.title}: {len(self.rows) - n_fail}/{len(self.rows)} checks pass "
                   f"-> {path}")
        return EXIT_OK if self.passed else EXIT_MISMATCH


def _check_stats(report, name, stats, expected) -> None:
    vertices, dens, clus, wiener, centrality, mcb = expected
    report.check(f"{name} vertices", stats.n_vertices, vertices)
    report.check(f"{name} density", stats.density, dens)
    report.check(f"{name} clustering tri", stats.clustering_triangle, clus[0])
    report.check(f"{name} clustering squ", stats.clustering_square, clus[1])
    report.check(f"{name} wiener", stats.wiener_full, wiener[0])
    report.check(f"{name} wiener norm", stats.wiener_norm, wiener[1])
    report.check(f"{name} centre", stats.centre, centrality[0])
    report.check(f"{name} centrality diff", stats.centrality_diff, centrality[1])
    report.check(f"{name} cycle basis", dict(stats.cycle_profile), mcb)


# -- commands --------------------------------------------------------------

@click.group()
def cli():
    """Exchange-graph generation, analysis, and learning toolkit."""


_seed_opt = click.option("--seed-name", "--seed", "seed_name", required=True,
                         help="Initial seed (builtin name or catalogue entry).")
_catalogue_opt = click.option("--catalogue", type=click.Path(), default=None,
                              help="JSON file overriding the builtin seed catalogue.")
_depth_opt = click.option("--depth", default="4", show_default=True,
                          help="Generation depth, or 'full' for closure.")
_mode_opt = click.option("--mode", type=click.Choice(["exact", "perm"]),
                         default="exact", show_default=True)
_payload_opt = click.option("--payload", type=click.Choice(["seeds", "quivers"]),
                            default="seeds", show_default=True)
_out_opt = click.option("--out", default=None,
                        help=f"Output directory (default ${OUT_ENV} or cwd).")
_cap_opt = click.option("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES,
                        show_default=True)


@cli.command()
@_seed_opt
@_catalogue_opt
@_depth_opt
@_mode_opt
@_payload_opt
@_cap_opt
@_out_opt
@click.option("--format", "fmt", type=click.Choice(["json", "dot", "csv"]),
              default="json", show_default=True)
def generate(seed_name, catalogue, depth, mode, payload, max_vertices, out, fmt):
    """Generate an exchange graph and write it to a file."""
    depth_value = _parse_depth(depth)
    out_dir = _out_dir(out)
    stem = f"{seed_name}_{payload}_{depth if depth_value is not None else 'full'}_{mode}"
    path = os.path.join(out_dir, f"{stem}.{fmt}")
    try:
        graph = _generate(seed_name, catalogue, depth_value, mode, payload, max_vertices)
    except ResourceLimitError as exc:
        if exc.partial is not None:
            _write_graph(exc.partial, path, fmt)
            click.echo(f"resource cap hit at depth {exc.completed_depth}; "
                       f"partial graph -> {path}", err=True)
        else:
            click.echo(f"resource cap hit: {exc}", err=True)
        return EXIT_RESOURCE
    _write_graph(graph, path, fmt)
    counts = graph.seeds_per_depth()
    click.echo(f"{seed_name} {payload} mode={mode}: {graph.n_vertices} vertices, "
               f"{graph.n_edges} edges -> {path}")
    click.echo("per-depth counts: " + ", ".join(map(str, counts)))
    return EXIT_OK


@cli.command()
@_seed_opt
@_catalogue_opt
@_depth_opt
@_mode_opt
@_payload_opt
@_cap_opt
@_out_opt
def analyze(seed_name, catalogue, depth, mode, payload, max_vertices, out):
    """Generate a graph and write its network statistics plus a figure."""
    depth_value = _parse_depth(depth)
    out_dir = _out_dir(out)
    graph = _generate(seed_name, catalogue, depth_value, mode, payload, max_vertices)
    stats = full_stats(graph)
    stem = f"{seed_name}_{payload}_{depth if depth_value is not None else 'full'}_stats"
    path = os.path.join(out_dir, f"{stem}.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["vertices", "edges", "density", "clustering_tri",
                         "clustering_squ", "wiener", "wiener_norm", "centre",
                         "centrality_diff", "cycle_basis"])
        writer.writerow([
            stats.n_vertices, stats.n_edges, f"{stats.density:.6f}",
            f"{stats.clustering_triangle:.6f}", f"{stats.clustering_square:.6f}",
            stats.wiener_full, f"{stats.wiener_norm:.4f}",
            "" if stats.centre is None else stats.centre,
            "" if stats.centrality_diff is None else f"{stats.centrality_diff:.6f}",
            ";".join(f"{l}:{f}" for l, f in stats.cycle_profile),
        ])
    fig_path = os.path.join(out_dir, f"{stem}.png")
    plots.save_cycle_histogram(stats.cycle_profile, fig_path,
                               title=f"{seed_name} {payload}")
    click.echo(f"{seed_name}: {stats.n_vertices} vertices, density "
               f"{stats.density:.4f}, cycle basis "
               + " ".join(f"[{l},{f}]" for l, f in stats.cycle_profile))
    click.echo(f"stats -> {path}; figure -> {fig_path}")
    return EXIT_OK


@cli.command()
@_seed_opt
@_catalogue_opt
@_cap_opt
@_out_opt
def embed(seed_name, catalogue, max_vertices, out):
    """Full-graph cycle-embedding report for a finite-type seed."""
    out_dir = _out_dir(out)
    seed = _resolve_seed(seed_name, catalogue)
    seed_graph = generate_full(seed, algebra=seed_name, max_vertices=max_vertices)
    quiver_graph = generate_full(seed, payload="quivers", algebra=seed_name,
                                 max_vertices=max_vertices)
    ratio = seed_quiver_ratio(seed_graph, quiver_graph)
    profile = mcb_embedding_profile(seed_graph, quiver_graph)
    path = os.path.join(out_dir, f"{seed_name}_embedding.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["seeds", "quivers", "ratio", "quiver_mcb",
                         "scale_hist", "copy_hist", "products"])
        writer.writerow([
            seed_graph.n_vertices, quiver_graph.n_vertices, str(ratio),
            ";".join(f"{l}:{f}" for l, f in profile.quiver_mcb),
            ";".join(f"{p}:{f}" for p, f in profile.scale_hist),
            ";".join(f"{q}:{f}" for q, f in profile.copy_hist),
            ";".join(map(str, sorted(profile.products))),
        ])
    fig_path = os.path.join(out_dir, f"{seed_name}_embedding.png")
    plots.save_cycle_histogram(profile.quiver_mcb, fig_path,
                               title=f"{seed_name} quiver cycle basis")
    click.echo(f"{seed_name}: {seed_graph.n_vertices} seeds / "
               f"{quiver_graph.n_vertices} quivers, ratio {ratio}")
    click.echo(f"scale hist {profile.scale_hist}, copy hist {profile.copy_hist}, "
               f"products {sorted(profile.products)}")
    click.echo(f"report -> {path}; figure -> {fig_path}")
    return EXIT_OK


@cli.command()
@click.argument("experiment", type=click.Choice(sorted(mlx.EXPERIMENTS)))
@click.option("--rng", type=int, default=0, show_default=True,
              help="Seed for all experiment randomness.")
@click.option("--pairs", default=None,
              help="Comma-separated A:B pairs to restrict binary runs.")
@click.option("--max-depth", type=int, default=13, show_default=True)
@_out_opt
def ml(experiment, rng, pairs, max_depth, out):
    """Run a learning experiment and write metric reports plus a figure."""
    out_dir = _out_dir(out)
    kwargs = {}
    if pairs is not None:
        if experiment != "binary-pairs":
            raise DomainError("--pairs only applies to the binary experiment")
        kwargs["pairs"] = [tuple(p.split(":")) for p in pairs.split(",")]
    if experiment == "depth-sweep":
        kwargs["max_depth"] = max_depth
    rows = mlx.run_experiment(experiment, rng_seed=rng, **kwargs)
    if not isinstance(rows, list):
        rows = [rows]
    stem = f"{experiment}_rng{rng}"
    mlx.write_reports(rows, out_dir, stem, rng)
    fig_path = os.path.join(out_dir, f"{stem}.png")
    if experiment == "depth-sweep":
        plots.save_depth_sweep(range(1, len(rows) + 1), rows, fig_path)
    else:
        plots.save_metric_bars(rows, fig_path)
    for row in rows:
        click.echo(f"{row.name} matrix={row.include_matrix}: "
                   f"accuracy {row.report.accuracy_mean:.3f}±{row.report.accuracy_se:.3f}, "
                   f"MCC {row.report.mcc_mean:.3f}±{row.report.mcc_se:.3f}")
    click.echo(f"reports -> {out_dir}/{stem}.csv, .json; figure -> {fig_path}")
    return EXIT_OK


def _reproduce_seed_stats(report):
    for name, expected in ref.SEED_GRAPH_DEPTH4.items():
        graph = generate_seed_eg(builtin_seed(name), 4, algebra=name)
        _check_stats(report, name, full_stats(graph), expected)


def _reproduce_quiver_stats(report):
    for name, expected in ref.QUIVER_GRAPH_DEPTH4.items():
        graph = generate_quiver_eg(builtin_seed(name), 4, algebra=name)
        _check_stats(report, name, full_stats(graph), expected)


def _reproduce_full_stats(report):
    for name, expected in ref.SEED_GRAPH_FULL.items():
        graph = generate_full(builtin_seed(name), algebra=name)
        report.check(f"{name} closure depth", graph.closure_depth, expected[1])
        _check_stats(report, name,
                     full_stats(graph),
                     expected[:1] + expected[2:])


def _reproduce_counts(report):
    for name, (n_perm, n_exact, factor) in ref.PERMUTATION_COUNTS.items():
        report.check(f"{name} count formula", cluster_count(name), n_perm)
        perm_graph = generate_full(builtin_seed(name), mode="perm", algebra=name)
        report.check(f"{name} count perm-mode", perm_graph.n_vertices, n_perm)
        exact_graph = generate_full(builtin_seed(name), algebra=name)
        report.check(f"{name} count exact", exact_graph.n_vertices, n_exact)
        report.check(f"{name} factor",
                     permutation_factor(builtin_seed(name).matrix), factor)
        perms = set(orbit_permutations(exact_graph))
        expected = ref.ORBIT_PERMUTATIONS[name]
        if expected == "all":
            report.check(f"{name} orbit perms", len(perms), factor)
        else:
            report.check_bool(f"{name} orbit perms", perms == expected,
                              sorted(perms), sorted(expected))


def _reproduce_ratios(report):
    for name, expected in sorted(ref.RATIOS_RANK_LE_4.items()):
        seed = builtin_seed(name)
        ratio = seed_quiver_ratio(
            generate_full(seed, algebra=name),
            generate_full(seed, payload="quivers", algebra=name))
        report.check_bool(f"{name} ratio", ratio == expected, str(ratio), expected)


def _reproduce_embedding(report):
    for name, (mcb, p_hist, q_hist) in ref.CYCLE_EMBEDDING_PROFILES.items():
        seed = builtin_seed(name)
        seed_graph = generate_full(seed, algebra=name)
        quiver_graph = generate_full(seed, payload="quivers", algebra=name)
        ratio = int(seed_quiver_ratio(seed_graph, quiver_graph))
        profile = mcb_embedding_profile(seed_graph, quiver_graph)
        report.check(f"{name} quiver cycle basis", dict(profile.quiver_mcb), mcb)
        report.check(f"{name} scale hist", dict(profile.scale_hist), p_hist)
        report.check(f"{name} copy hist", dict(profile.copy_hist), q_hist)
        report.check(f"{name} products", sorted(profile.products), [ratio])
        ids = _seed_quiver_ids(seed_graph, quiver_graph)
        cycles = minimum_cycle_basis(quiver_graph.n_vertices,
                                     quiver_graph.edge_pairs())
        odd_ok = all(embed_cycle(seed_graph, quiver_graph, c, ids).scale % 2 == 0
                     for c in cycles if len(c) % 2)
        report.check_bool(f"{name} odd cycles even scale", odd_ok, odd_ok, True)


def _reproduce_binary(report, rng, pairs):
    rows = mlx.run_binary_pairs(rng, pairs=pairs)
    for row in rows:
        key = tuple(row.name.split(" vs "))
        sizes, length, with_m, without_m = ref.BINARY_BENCHMARKS[key]
        bench_acc, _ = with_m if row.include_matrix else without_m
        tag = f"{row.name}{'+m' if row.include_matrix else ''}"
        report.check(f"{tag} class sizes", tuple(row.class_sizes), sizes)
        if not row.include_matrix:
            report.check(f"{tag} length", row.length, length)
        acc = row.report.accuracy_mean
        report.check_bool(f"{tag} accuracy band",
                          abs(acc - bench_acc) <= ref.ACCURACY_BAND,
                          f"{acc:.3f}", f"{bench_acc:.3f}±{ref.ACCURACY_BAND}")
        report.check_bool(f"{tag} MCC floor", row.report.mcc_mean > ref.MCC_FLOOR,
                          f"{row.report.mcc_mean:.3f}", f">{ref.MCC_FLOOR}")
        if key == ("A4", "A13") and row.include_matrix:
            report.check_bool(f"{tag} accuracy floor", acc >= 0.85,
                              f"{acc:.3f}", ">=0.85")


def _reproduce_depth_sweep(report, rng, metrics_band):
    for depth, a_seeds, d_seeds in mlx.depth_sweep_corpora():
        expected = ref.DEPTH_SWEEP_CLASS_SIZES[depth - 1]
        report.check(f"depth {depth} class sizes",
                     (len(a_seeds), len(d_seeds)), expected)
        data = assemble_dataset([a_seeds, d_seeds], include_matrix=True, rng=None)
        report.check(f"depth {depth} length", data.length,
                     ref.DEPTH_SWEEP_LENGTHS[depth - 1])
    if metrics_band:
        rows = mlx.run_depth_sweep(rng, max_depth=4)
        for depth, row in enumerate(rows, start=1):
            report.check_bool(
                f"depth {depth} MCC floor", row.report.mcc_mean > 0,
                f"{row.report.mcc_mean:.3f}", ">0")


def _reproduce_fake(report, rng):
    rows = mlx.run_fake_vs_true(rng)
    easy_floor = 1.0
    by_name = {}
    for row in rows:
        name = row.name.split(" ")[0]
        by_name[name] = row
        report.check(f"{name} length", row.length, ref.FAKE_VS_TRUE_LENGTHS[name])
    for name in ref.FAKE_VS_TRUE_EASY:
        acc = by_name[name].report.accuracy_mean
        easy_floor = min(easy_floor, acc)
        report.check_bool(f"{name} accuracy", acc >= 0.97, f"{acc:.3f}", ">=0.97")
    for name, (lo, hi) in ref.FAKE_VS_TRUE_HARD_BAND.items():
        acc = by_name[name].report.accuracy_mean
        report.check_bool(f"{name} accuracy band", lo <= acc <= hi,
                          f"{acc:.3f}", f"[{lo},{hi}]")
        report.check_bool(f"{name} below finite scores", acc < easy_floor,
                          f"{acc:.3f}", f"<{easy_floor:.3f}")


REPRODUCE_TARGETS = {
    "1": ("seed-stats", _reproduce_seed_stats),
    "seed-stats": ("seed-stats", _reproduce_seed_stats),
    "quiver-stats": ("quiver-stats", _reproduce_quiver_stats),
    "2": ("full-stats", _reproduce_full_stats),
    "full-stats": ("full-stats", _reproduce_full_stats),
    "3": ("counts", _reproduce_counts),
    "counts": ("counts", _reproduce_counts),
    "5": ("ratios", _reproduce_ratios),
    "6": ("ratios", _reproduce_ratios),
    "ratios": ("ratios", _reproduce_ratios),
    "7": ("embedding", _reproduce_embedding),
    "embedding": ("embedding", _reproduce_embedding),
    "8": ("binary", None),
    "binary": ("binary", None),
    "9": ("depth-sweep", None),
    "depth-sweep": ("depth-sweep", None),
    "10": ("fake", None),
    "fake": ("fake", None),
}


@cli.command()
@click.argument("target")
@click.option("--rng", type=int, default=0, show_default=True)
@click.option("--pairs", default=None,
              help="Comma-separated A:B pairs to restrict the binary report.")
@click.option("--metrics-band", is_flag=True,
              help="Also run learning metrics for the depth-sweep report.")
@_out_opt
def reproduce(target, rng, pairs, metrics_band, out):
    """Recompute a reference table and report computed vs expected."""
    if target not in REPRODUCE_TARGETS:
        raise DomainError(
            f"unknown report {target!r}; choose from "
            + ", ".join(sorted(set(REPRODUCE_TARGETS))))
    stem, runner = REPRODUCE_TARGETS[target]
    report = Report(stem)
    if runner is not None:
        runner(report)
    elif stem == "binary":
        pair_list = [tuple(p.split(":")) for p in pairs.split(",")] if pairs else None
        _reproduce_binary(report, rng, pair_list)
    elif stem == "depth-sweep":
        _reproduce_depth_sweep(report, rng, metrics_band)
    else:
        _reproduce_fake(report, rng)
    return report.emit(_out_dir(out), f"reproduce_{stem}")


@cli.command("export-plotdata")
@click.option("--series", type=click.Choice(["ratio", "counts"]), required=True)
@click.option("--seed-name", "--seed", "seed_names", multiple=True,
              help="Algebras to include (defaults depend on the series).")
@_catalogue_opt
@_depth_opt
@_out_opt
def export_plotdata(series, seed_names, catalogue, depth, out):
    """Write (depth, value) series as CSV with a rendered figure."""
    out_dir = _out_dir(out)
    names = list(seed_names)
    if series == "ratio":
        names = names or ["A4", "D4", "F4", "A13", "A22", "I1", "I2"]
        depth_value = _parse_depth(depth)
        if depth_value is None:
            raise DomainError("ratio series needs a finite depth")
        path = os.path.join(out_dir, "ratio_series.csv")
        curves = {}
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["algebra", "depth", "seeds", "quivers", "ratio"])
            for name in names:
                seed = _resolve_seed(name, catalogue)
                s_counts = generate_seed_eg(seed, depth_value,
                                            algebra=name).seeds_per_depth()
                q_counts = generate_quiver_eg(seed, depth_value,
                                              algebra=name).seeds_per_depth()
                curve = []
                for d in range(1, min(len(s_counts), len(q_counts))):
                    ratio = q_counts[d] / s_counts[d]
                    writer.writerow([name, d, s_counts[d], q_counts[d],
                                     f"{ratio:.4f}"])
                    curve.append(ratio)
                curves[name] = curve
        fig_path = os.path.join(out_dir, "ratio_series.png")
        plots.save_count_series(curves, fig_path, ylabel="quivers / seeds")
    else:
        if not names:
            raise DomainError("counts series needs at least one --seed-name")
        path = os.path.join(out_dir, "count_series.csv")
        curves = {}
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["algebra", "depth", "seeds"])
            for name in names:
                seed = _resolve_seed(name, catalogue)
                counts = generate_full(seed, algebra=name).seeds_per_depth()
                for d, count in enumerate(counts):
                    writer.writerow([name, d, count])
                curves[name] = counts
        fig_path = os.path.join(out_dir, "count_series.png")
        plots.save_count_series(curves, fig_path)
    click.echo(f"series -> {path}; figure -> {fig_path}")
    return EXIT_OK


def main(argv=None):
    try:
        result = cli.main(args=argv, standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return EXIT_CONFIG
    except click.exceptions.Abort:
        return EXIT_CONFIG
    except ResourceLimitError as exc:
        click.echo(f"resource cap hit: {exc}", err=True)
        return EXIT_RESOURCE
    except ClusterMutError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_CONFIG
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
