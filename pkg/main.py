# main.py - umod command line
# Run with: python main.py --help

import functools
import time

import click

from umod.apps import (
    bijoin_witness,
    circular_order,
    extension_sequence,
    feedback_vertex_set,
    is_diamond_free,
    is_locally_transitive,
    is_totally_decomposable,
    isomorphic_decomposable,
    round_order,
)
from umod.bipartitive import build_umodular_tree, count_umodules
from umod.config import get_logger, get_settings, oracle_bound, set_log_level
from umod.errors import PreconditionError, UmodError
from umod.generators import random_graph, random_tournament
from umod.io import (
    dumps,
    error_payload,
    modular_text,
    parse_input,
    partition_payload,
    partition_text,
    sets_text,
    tree_text,
)
from umod.refine import METHODS, mu
from umod.relation import (
    Tournament,
    UndirectedGraph,
    brute_force_umodules,
    build_standard_relation,
    check_four_elements,
    is_self_complemented,
    local_congruence,
)
from umod.seidel import fast_umodular_tree, modular_strong_tree, seidel_switch
from umod.strong import check_crossing_family, strong_umodules

# ✅ CONFIGURATION
FORMATS = ("json", "dot", "text")
BENCH_HEADER = "operation,kind,n,seconds"

logger = get_logger("umod.cli")

input_argument = click.argument(
    "source", type=click.Path(exists=True, dir_okay=False, allow_dash=True), default="-"
)


def reports_errors(command):
    """Library errors become error JSON on stderr and the error's exit code."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except UmodError as exc:
            logger.debug("[FAILED] %s: %s", type(exc).__name__, exc)
            click.echo(error_payload(exc), err=True)
            raise SystemExit(exc.exit_code)

    return wrapper


def emit(ctx, payload, text=None, dot=None):
    fmt = ctx.obj["format"]
    if fmt == "text" and text is not None:
        click.echo(text)
    elif fmt == "dot":
        if dot is None:
            raise click.UsageError("--format dot is only available for umod-tree")
        click.echo(dot)
    else:
        click.echo(dumps(payload))


def _require_tournament(doc) -> Tournament:
    if not isinstance(doc.structure, Tournament):
        raise PreconditionError(f"this command needs a tournament, got {doc.kind}")
    return doc.structure


def _parse_ids(text: str):
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise click.BadParameter(f"expected element ids, got {text!r}")


@click.group()
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True)
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True,
              help="Workers for the pairwise MU loop; outputs do not change.")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG.")
@click.pass_context
def cli(ctx, fmt, threads, verbose):
    """Umodules, umodular decomposition trees and their tournament applications."""
    ctx.ensure_object(dict)
    ctx.obj["format"] = fmt
    ctx.obj["threads"] = threads
    if verbose:
        set_log_level("DEBUG" if verbose > 1 else "INFO")


@cli.command("mu")
@input_argument
@click.option("--set", "members", required=True, help="Element ids of S, comma or space separated.")
@click.option("--method", type=click.Choice(METHODS), default="hopcroft", show_default=True)
@click.pass_context
@reports_errors
def mu_command(ctx, source, members, method):
    """Coarsest umodule partition thinner than {S, X \\ S}."""
    H = parse_input(source).relation()
    partition = mu(H, _parse_ids(members), method=method)
    emit(ctx, partition_payload(partition), text=partition_text(partition))


@cli.command("strong-tree")
@input_argument
@click.pass_context
@reports_errors
def strong_tree_command(ctx, source):
    """Inclusion tree of the strong umodules."""
    H = parse_input(source).relation()
    tree = strong_umodules(H, workers=ctx.obj["threads"])
    emit(ctx, tree.to_dict(), text=sets_text(tree.internal()))


@cli.command("umod-tree")
@input_argument
@click.option("--fast/--generic", default=None,
              help="Seidel-switch path or MU path; default picks fast when local congruence allows.")
@click.pass_context
@reports_errors
def umod_tree_command(ctx, source, fast):
    """Umodular decomposition tree in canonical form."""
    doc = parse_input(source)
    H = doc.relation()
    if fast is None:
        fast = local_congruence(H) <= 2
    # graphs and tournaments go in as parsed so the bipartitive check is skipped
    if fast:
        tree = fast_umodular_tree(doc.structure)
    else:
        tree = build_umodular_tree(doc.structure, workers=ctx.obj["threads"])
    payload = tree.to_dict()
    payload["umodule_count"] = count_umodules(tree)
    emit(ctx, payload, text=tree_text(tree), dot=tree.to_dot().source)


@cli.command("seidel")
@input_argument
@click.option("--pivot", type=int, default=None, help="Pivot element; defaults to the configured pivot.")
@click.pass_context
@reports_errors
def seidel_command(ctx, source, pivot):
    """Seidel switch at a pivot and the modular tree of the result."""
    H = parse_input(source).relation()
    s = get_settings().pivot if pivot is None else pivot
    switched = seidel_switch(H, s)
    modular = modular_strong_tree(switched.relation)
    payload = {
        "pivot": s,
        "elements": list(switched.elements),
        "classes": [[int(c) if i != j else None for j, c in enumerate(row)]
                    for i, row in enumerate(switched.relation.classes.tolist())],
        "modular_tree": modular.to_dict(),
    }
    emit(ctx, payload, text=modular_text(modular))


@cli.command("check")
@input_argument
@click.pass_context
@reports_errors
def check_command(ctx, source):
    """Local congruence, four elements condition, primality and crossing report."""
    H = parse_input(source).relation()
    holds, witness = check_four_elements(H)
    tree = strong_umodules(H, workers=ctx.obj["threads"])
    payload = {
        "size": H.n,
        "local_congruence": local_congruence(H),
        "four_elements": {"holds": holds, "witness": list(witness) if witness else None},
        "umodular_prime": tree.is_star(),
        "strong_umodules": len(tree.internal()),
        "crossing_family": None,
        "self_complemented": None,
    }
    if H.n <= oracle_bound():
        family = brute_force_umodules(H)
        ground = range(H.n)
        payload["crossing_family"] = check_crossing_family(family, ground)
        payload["self_complemented"] = is_self_complemented(family, H.n)
    text = "\n".join(f"{k}: {v}" for k, v in sorted(payload.items()))
    emit(ctx, payload, text=text)


@cli.group("tournament")
def tournament_group():
    """Locally transitive tournaments."""


@tournament_group.command("recognize")
@input_argument
@click.pass_context
@reports_errors
def recognize_command(ctx, source):
    """Diamond-free, locally transitive, no prime node, extension sequence: all four."""
    T = _require_tournament(parse_input(source))
    diamond_free, witness = is_diamond_free(T)
    payload = {
        "diamond_free": diamond_free,
        "diamond": list(witness) if witness else None,
        "locally_transitive": is_locally_transitive(T),
        "totally_decomposable": is_totally_decomposable(T),
        "extension_sequence": extension_sequence(T) is not None,
    }
    answers = {payload[k] for k in ("diamond_free", "locally_transitive",
                                    "totally_decomposable", "extension_sequence")}
    if len(answers) > 1:
        logger.warning("[RECOGNIZE] characterizations disagree: %s", payload)
    text = "\n".join(f"{k}: {v}" for k, v in sorted(payload.items()))
    emit(ctx, payload, text=text)


@tournament_group.command("order")
@input_argument
@click.option("--round", "round_", is_flag=True,
              help="Order where each out-neighbourhood follows its vertex.")
@click.pass_context
@reports_errors
def order_command(ctx, source, round_):
    """Circular order of a locally transitive tournament."""
    T = _require_tournament(parse_input(source))
    order = round_order(T) if round_ else circular_order(T)
    emit(ctx, order.order, text=" ".join(str(x) for x in order.order))


@tournament_group.command("iso")
@input_argument
@click.argument("other", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@reports_errors
def iso_command(ctx, source, other):
    """Isomorphism of two locally transitive tournaments."""
    first = _require_tournament(parse_input(source))
    second = _require_tournament(parse_input(other))
    answer = isomorphic_decomposable(first, second)
    emit(ctx, {"isomorphic": answer}, text=str(answer).lower())


@tournament_group.command("fvs")
@input_argument
@click.pass_context
@reports_errors
def fvs_command(ctx, source):
    """Feedback vertex set of a locally transitive tournament."""
    dropped = feedback_vertex_set(_require_tournament(parse_input(source)))
    emit(ctx, dropped, text=" ".join(str(x) for x in dropped))


@tournament_group.command("extend")
@input_argument
@click.pass_context
@reports_errors
def extend_command(ctx, source):
    """Twin/antitwin extension sequence; graphs are accepted too."""
    doc = parse_input(source)
    if not isinstance(doc.structure, (Tournament, UndirectedGraph)):
        raise PreconditionError(f"extension sequences need a graph or a tournament, got {doc.kind}")
    sequence = extension_sequence(doc.structure)
    if sequence is None:
        raise PreconditionError("not totally decomposable: no twin or antitwin left to peel")
    text = "\n".join(f"{s.kind} {s.anchor} {s.new} {int(s.joined)}" for s in sequence.steps)
    emit(ctx, sequence, text=text)


@cli.command("bijoin")
@input_argument
@click.option("--set", "members", required=True, help="Element ids of U.")
@click.pass_context
@reports_errors
def bijoin_command(ctx, source, members):
    """C/D witness for a bijoin of a graph or tournament."""
    doc = parse_input(source)
    if not isinstance(doc.structure, (Tournament, UndirectedGraph)):
        raise PreconditionError(f"bijoins are defined for graphs and tournaments, got {doc.kind}")
    witness = bijoin_witness(doc.structure, _parse_ids(members))
    emit(ctx, witness, text="not a bijoin" if witness is None else f"C: {witness.C}\nD: {witness.D}")


def _timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


@cli.command("bench")
@click.option("--operation", type=click.Choice(["mu", "generic", "fast", "all"]), default="all",
              show_default=True)
@click.option("--size", "sizes", type=int, multiple=True, help="Override the configured sizes.")
@click.option("--seed", type=int, default=0, show_default=True)
@reports_errors
def bench_command(operation, sizes, seed):
    """CSV timings: operation,kind,n,seconds."""
    bench = get_settings().bench
    plan = {
        "mu": ("graph", list(sizes) or bench.mu_sizes),
        "generic": ("tournament", list(sizes) or bench.generic_sizes),
        "fast": ("tournament", list(sizes) or bench.fast_sizes),
    }
    chosen = list(plan) if operation == "all" else [operation]
    click.echo(BENCH_HEADER)
    for name in chosen:
        kind, ns = plan[name]
        for n in ns:
            logger.info("[BENCH] %s on %s n=%d", name, kind, n)
            if name == "mu":
                H = build_standard_relation(random_graph(n, seed=seed))
                seconds = _timed(lambda: mu(H, range(n // 2)))
            elif name == "generic":
                T = random_tournament(n, seed=seed)
                seconds = _timed(lambda: build_umodular_tree(T, check=False))
            else:
                T = random_tournament(n, seed=seed)
                seconds = _timed(lambda: fast_umodular_tree(T, check=False))
            click.echo(f"{name},{kind},{n},{seconds:.6f}")


if __name__ == "__main__":
    cli(obj={})
