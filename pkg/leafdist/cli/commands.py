import logging
from fractions import Fraction
from pathlib import Path
from shutil import copyfile
from typing import Optional, Tuple

import click
from click import version_option

from leafdist import __version__, validation
from leafdist.cli.helpers import edit_yaml, ensure_approval
from leafdist.cli.options import INTEGER, State, default_options, output_options
from leafdist.cli.output import OutputRecord, format_config, green_bold, red_bold, write_output
from leafdist.config import config_path, sample_config_path
from leafdist.controller.verification_controller import VerificationController
from leafdist.exact.asymptotics import mean_asymptotic, median_asymptotic, percentile_asymptotic
from leafdist.exact.counts import check_leaf_count, distribution
from leafdist.exact.moments import summary_stats
from leafdist.exact.quantiles import check_probability, median, percentile
from leafdist.helpers import parse_ratio
from leafdist.trees.sampling import dkw_bound, iter_sampled_trees, kolmogorov_distance, monte_carlo_distribution
from leafdist.trees.tree import to_newick

log = logging.getLogger(__name__)

DKW_ALPHA = 0.01


def _emit(state: State, record: OutputRecord, output_format: Optional[str], output: Optional[str]) -> None:
    log.debug(f"Writing {record!r}.")
    write_output(record, output_format or state.config.output_format, output)


@click.group(invoke_without_command=True, no_args_is_help=True)
@version_option(__version__)
@default_options
def leafdist(state: State):
    """leafdist - exact statistics of the distance between two leaves.

    Computes the distribution, median, percentiles, mean and variance of the number of edges between leaves 1 and 2
    of a uniformly chosen unrooted binary tree with n labelled leaves, and cross-checks every closed form.
    """
    pass


@leafdist.group(help="Configuration-related options.", no_args_is_help=True)
@default_options
def config(state: State):
    pass


@leafdist.command("dist")
@click.argument("n", type=INTEGER)
@output_options
@default_options
def dist(state: State, n: int, output_format: Optional[str], output: Optional[str]):
    """Exact counts c_i and probabilities of d(1, 2) = i for i = 1..n-1."""
    record = OutputRecord("dist", {"n": n}, distribution(n).rows())
    _emit(state, record, output_format, output)


@leafdist.command("median")
@click.argument("n", type=INTEGER)
@click.option("--asymptotics", is_flag=True, default=False, help="Append the asymptotic estimates and their ratio.")
@output_options
@default_options
def median_(state: State, n: int, asymptotics: bool, output_format: Optional[str], output: Optional[str]):
    """Exact median of d(1, 2): the largest k with P(d <= k) <= 1/2."""
    value = median(n, exact_max_n=state.config.exact_max_n, log_margin=state.config.log_margin)
    row = {"n": n, "median": value}
    if asymptotics:
        plain = median_asymptotic(n)
        row.update(asymptote=plain, refined=median_asymptotic(n, refined=True), ratio=value / plain)
    _emit(state, OutputRecord("median", {"n": n, "asymptotics": asymptotics}, [row]), output_format, output)


@leafdist.command("percentile")
@click.argument("n", type=INTEGER)
@click.argument("p", metavar="P")
@click.option(
    "--asymptotic-only",
    is_flag=True,
    default=False,
    help="Only evaluate sqrt(-4 ln(1-p) n). P may then also be a decimal.",
)
@output_options
@default_options
def percentile_(
    state: State, n: int, p: str, asymptotic_only: bool, output_format: Optional[str], output: Optional[str]
):
    """Exact percentile x_p of d(1, 2) for P given as an exact ratio like 9/10."""
    check_leaf_count(n)
    if asymptotic_only:
        threshold = parse_ratio(p, allow_decimal=True)
        row = {"n": n, "p": threshold, "asymptote": percentile_asymptotic(n, threshold)}
    else:
        threshold = check_probability(parse_ratio(p))
        value = percentile(n, threshold, exact_max_n=state.config.exact_max_n, log_margin=state.config.log_margin)
        asymptote = percentile_asymptotic(n, threshold)
        row = {"n": n, "p": threshold, "percentile": value, "asymptote": asymptote, "ratio": value / asymptote}
    record = OutputRecord("percentile", {"n": n, "p": p, "asymptotic_only": asymptotic_only}, [row])
    _emit(state, record, output_format, output)


@leafdist.command("stats")
@click.argument("n", type=INTEGER)
@output_options
@default_options
def stats(state: State, n: int, output_format: Optional[str], output: Optional[str]):
    """Exact mean, variance and median of d(1, 2), with the mean compared to sqrt(pi n)."""
    summary = summary_stats(n, exact_max_n=state.config.exact_max_n, log_margin=state.config.log_margin)
    asymptote = mean_asymptotic(n)
    row = dict(summary.as_dict(), mean_float=float(summary.mean), asymptote=asymptote)
    row["ratio"] = float(summary.mean) / asymptote
    _emit(state, OutputRecord("stats", {"n": n}, [row]), output_format, output)


@leafdist.command("verify")
@click.option("--max-n-enum", type=INTEGER, default=None, help="Enumerate every tree up to this n.")
@click.option("--max-n-formula", type=INTEGER, default=None, help="Check the closed forms up to this n.")
@click.option("--max-n-series", type=INTEGER, default=None, help="Check the generating function up to this n.")
@click.option("--max-n-ratio", type=INTEGER, default=None, help="Check certificates and term ratios up to this n.")
@click.option("--workers", type=INTEGER, default=None, help="Threads sharing the enumeration.")
@output_options
@default_options
def verify(
    state: State,
    max_n_enum: Optional[int],
    max_n_formula: Optional[int],
    max_n_series: Optional[int],
    max_n_ratio: Optional[int],
    workers: Optional[int],
    output_format: Optional[str],
    output: Optional[str],
):
    """Cross-check every closed form against enumeration, partial sums, series and certificates.

    Exits with code 2 if any check finds a counterexample.
    """
    defaults = state.config.verify_defaults
    parameters = {
        "max_n_enum": max_n_enum if max_n_enum is not None else defaults["max_n_enum"],
        "max_n_formula": max_n_formula if max_n_formula is not None else defaults["max_n_formula"],
        "max_n_series": max_n_series if max_n_series is not None else defaults["max_n_series"],
        "max_n_ratio": max_n_ratio if max_n_ratio is not None else defaults["max_n_ratio"],
        "workers": workers if workers is not None else state.config.workers,
    }
    controller = VerificationController(
        **parameters,
        max_leaves=state.config.max_leaves,
        exact_max_n=state.config.exact_max_n,
        log_margin=state.config.log_margin,
    )
    results = controller.run()
    _emit(state, OutputRecord("verify", parameters, [r.as_dict() for r in results]), output_format, output)
    if all(result.passed for result in results):
        click.echo(green_bold(f"All {len(results)} checks passed."), err=True)
    else:
        click.echo(red_bold("Verification failed."), err=True)
    controller.raise_on_failure(results)


@leafdist.command("sample")
@click.argument("n", type=INTEGER)
@click.option("--samples", type=INTEGER, default=None, help="Number of uniform trees to draw.")
@click.option("--seed", type=INTEGER, default=None, help="Unsigned 64-bit seed of the Philox generator.")
@click.option(
    "--emit-newick",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Also write every sampled tree to this file, one Newick string per line.",
)
@output_options
@default_options
def sample(
    state: State,
    n: int,
    samples: Optional[int],
    seed: Optional[int],
    emit_newick: Optional[str],
    output_format: Optional[str],
    output: Optional[str],
):
    """Monte Carlo histogram of d(1, 2) and its exact Kolmogorov distance to the exact distribution."""
    samples = samples if samples is not None else state.config.samples
    seed = seed if seed is not None else state.config.seed
    batch_size = state.config.batch_size
    histogram = monte_carlo_distribution(n, samples, seed, batch_size=batch_size)
    sup_distance = kolmogorov_distance(histogram, n)
    bound = dkw_bound(samples, DKW_ALPHA)
    log.info(f"Sup-distance {float(sup_distance):.6f}, DKW bound at {1 - DKW_ALPHA:.0%}: {bound:.6f}.")

    exact_cdf = distribution(n).cdf()
    rows = []
    cumulative = 0
    for i, (count, exact) in enumerate(zip(histogram, exact_cdf), start=1):
        cumulative += count
        rows.append(
            {
                "i": i,
                "count": count,
                "empirical_cdf": Fraction(cumulative, samples),
                "exact_cdf": exact,
                "sup_distance": sup_distance,
                "dkw_bound": bound,
            }
        )

    if emit_newick is not None:
        with Path(emit_newick).open("w") as f:
            for tree in iter_sampled_trees(n, samples, seed, batch_size=batch_size):
                f.write(to_newick(tree) + "\n")
        log.info(f"Wrote {samples} Newick strings to {emit_newick}.")

    record = OutputRecord("sample", {"n": n, "samples": samples, "seed": seed}, rows)
    _emit(state, record, output_format, output)


@leafdist.command("asympt")
@click.argument("n_values", metavar="N...", type=INTEGER, nargs=-1, required=True)
@click.option("--p", "p", default=None, help="Tabulate the percentile x_p instead of the median.")
@click.option(
    "--config-percentiles",
    is_flag=True,
    default=False,
    help="Tabulate every percentile listed under `asympt.percentiles` in the config.",
)
@output_options
@default_options
def asympt(
    state: State,
    n_values: Tuple[int, ...],
    p: Optional[str],
    config_percentiles: bool,
    output_format: Optional[str],
    output: Optional[str],
):
    """Convergence table of the exact median (or percentiles) against the asymptotic estimates."""
    for n in n_values:
        check_leaf_count(n)
    quantile_options = {"exact_max_n": state.config.exact_max_n, "log_margin": state.config.log_margin}
    if config_percentiles:
        thresholds = state.config.asympt_percentiles
    elif p is not None:
        thresholds = [check_probability(parse_ratio(p))]
    else:
        thresholds = []

    rows = []
    for n in n_values:
        if not thresholds:
            exact = median(n, **quantile_options)
            plain = median_asymptotic(n)
            rows.append(
                {
                    "n": n,
                    "median": exact,
                    "asymptote": plain,
                    "refined": median_asymptotic(n, refined=True),
                    "ratio": exact / plain,
                }
            )
        for threshold in thresholds:
            exact = percentile(n, threshold, **quantile_options)
            plain = percentile_asymptotic(n, threshold)
            rows.append(
                {
                    "n": n,
                    "p": threshold,
                    "percentile": exact,
                    "asymptote": plain,
                    "refined": percentile_asymptotic(n, threshold, refined=True),
                    "ratio": exact / plain,
                }
            )
    record = OutputRecord("asympt", {"n": list(n_values), "p": p, "config_percentiles": config_percentiles}, rows)
    _emit(state, record, output_format, output)


@config.command("show")
@default_options
def config_show(state: State):
    """Print the effective config."""
    click.echo(f"# {state.config.path}", err=True)
    click.echo(format_config(state.config.as_dict()), nl=False)


@config.command("recreate")
@default_options
def config_recreate(state: State):
    """(Re)create leafdist config.

    Overwrites the existing leafdist config file with the sample config. If no leafdist config file already exists,
    create one with the sample config."""
    if ensure_approval(f"Should the current config in {config_path()} get replaced?", no_verify=state.no_verify):
        config_path().parent.mkdir(parents=True, exist_ok=True)
        copyfile(sample_config_path().as_posix(), config_path())
        click.echo(f"Sample config written to {green_bold(str(config_path()))}.", err=True)


@config.command("edit", short_help="Edit leafdist config file.")
@default_options
def config_edit(state: State):
    """Opens the user's leafdist config file in the default editor, validating it on save."""
    path = config_path()
    old_yaml = path.read_text() if path.exists() else sample_config_path().read_text()
    new_yaml, _ = edit_yaml(old_yaml, validator=validation.validate_leafdist_config)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(new_yaml)
