"""Command-line front end.

Subcommands: ``check`` (verdicts for words from args or stdin),
``factorize`` (witness morphism), ``trace`` (round-by-round JSON document),
``oracle`` (brute-force cross-check), ``gen`` (word families) and ``bench``
(counter-instrumented CSV rows).

Exit codes: 0 ok, 1 usage error, 2 size-guard refusal, 3 I/O failure.
"""

from __future__ import annotations

import json
import sys
import time

import click

from .engine import FactorizationResult, Morphism, run
from .generate import palindrome_pair_word, random_word
from .oracle import (
    DEFAULT_SIZE_GUARD,
    WordTooLongError,
    min_expanding,
)
from .words import Word, intern_word

# exit-code contract above reserves 2 for guard refusals; usage errors are 1
click.UsageError.exit_code = 1

EPSILON = "ε"
ARROW = "↦"


def parse_word(text: str, tokens: bool) -> Word:
    """Intern one input line: UTF-8 symbols, or whitespace tokens."""
    return intern_word(text.split() if tokens else list(text))


def _read_lines(source) -> list[str]:
    try:
        return [line.rstrip("\n") for line in source]
    except OSError as exc:
        click.echo(f"error: cannot read input: {exc}", err=True)
        sys.exit(3)


def _render_images(word: Word, f: Morphism, sep: str) -> dict[str, str]:
    return {
        word.symbols[a]: sep.join(word.symbols[x] for x in f.images[a])
        for a in range(word.alphabet_size)
    }


def _sep(word: Word, tokens: bool) -> str:
    return " " if tokens or any(len(s) > 1 for s in word.symbols) else ""


def _final_block(word: Word, result: FactorizationResult, tokens: bool) -> dict:
    sep = _sep(word, tokens)
    return {
        "primitive": result.primitive,
        "expanding": sorted(word.symbols[a] for a in result.expanding),
        "images": _render_images(word, result.morphism, sep),
        "factor_cuts": list(result.factor_cuts),
    }


def trace_document(word: Word, result: FactorizationResult, tokens: bool = False) -> dict:
    """Full round-by-round document; serializes deterministically."""
    sep = _sep(word, tokens)
    rounds = [
        {
            "round": r.number,
            "letter": word.symbols[r.letter],
            "neighborhood": {
                "left": r.neighborhood.left_len,
                "right": r.neighborhood.right_len,
            },
            "L": list(r.left_cuts),
            "R": list(r.right_cuts),
        }
        for r in result.rounds
    ]
    return {
        "word": sep.join(word.symbols[a] for a in word.letters),
        "rounds": rounds,
        "final": _final_block(word, result, tokens),
        "counters": {
            "positions_scanned": result.counters.scanned,
            "neighborhood_visits": result.counters.visits,
            "edges_added": result.counters.edges,
            "recompress_cells": result.counters.cells,
            "loop_checks": result.counters.loop_checks,
        },
    }


def _dump(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, ensure_ascii=False)


@click.group()
def cli():
    """Decide morphic primitivity and construct fixed-point morphisms."""


@cli.command("check")
@click.argument("words", nargs=-1)
@click.option("--tokens", is_flag=True, help="Treat whitespace-separated tokens as letters.")
def cmd_check(words: tuple[str, ...], tokens: bool):
    """Print `word<TAB>verdict` for each word (args, or stdin lines)."""
    lines = list(words) if words else _read_lines(sys.stdin)
    for line in lines:
        result = run(parse_word(line, tokens))
        verdict = "primitive" if result.primitive else "imprimitive"
        click.echo(f"{line}\t{verdict}")


@cli.command("factorize")
@click.argument("word")
@click.option("--tokens", is_flag=True, help="Treat whitespace-separated tokens as letters.")
@click.option("--json", "as_json", is_flag=True, help="Emit the final block as JSON.")
def cmd_factorize(word: str, tokens: bool, as_json: bool):
    """Print the witness morphism and the factor segmentation."""
    w = parse_word(word, tokens)
    result = run(w)
    if as_json:
        click.echo(_dump(_final_block(w, result, tokens)))
        return
    sep = _sep(w, tokens)
    images = _render_images(w, result.morphism, sep)
    click.echo(", ".join(f"{s}{ARROW}{img or EPSILON}" for s, img in images.items()))
    cuts = result.factor_cuts
    factors = [
        sep.join(w.symbols[a] for a in w.segment(cuts[i] + 1, cuts[i + 1]))
        for i in range(len(cuts) - 1)
    ]
    click.echo("|".join(factors))
    click.echo("primitive" if result.primitive else "imprimitive")


@cli.command("trace")
@click.argument("word")
@click.option("--tokens", is_flag=True, help="Treat whitespace-separated tokens as letters.")
def cmd_trace(word: str, tokens: bool):
    """Print the full round-by-round trace as JSON."""
    w = parse_word(word, tokens)
    click.echo(_dump(trace_document(w, run(w), tokens)))


@cli.command("oracle")
@click.argument("word")
@click.option("--tokens", is_flag=True, help="Treat whitespace-separated tokens as letters.")
@click.option("--max-len", default=DEFAULT_SIZE_GUARD, show_default=True,
              help="Size guard for the exhaustive search.")
@click.option("--force", is_flag=True, help="Ignore the size guard.")
def cmd_oracle(word: str, tokens: bool, max_len: int, force: bool):
    """Brute-force verdict, minimal expanding-set size and one witness."""
    w = parse_word(word, tokens)
    try:
        res = min_expanding(w, max_len=max_len, force=force)
    except WordTooLongError as exc:
        click.echo(f"refused: {exc}", err=True)
        sys.exit(2)
    verdict = "imprimitive" if res.proper else "primitive"
    click.echo(f"{word}\t{verdict}")
    click.echo(f"min_expanding\t{res.size}")
    if w.alphabet_size:
        sep = _sep(w, tokens)
        witness = ", ".join(
            f"{w.symbols[a]}{ARROW}"
            f"{sep.join(w.symbols[x] for x in res.images.get(a, ())) or EPSILON}"
            for a in range(w.alphabet_size)
        )
        click.echo(f"witness\t{witness}")


@cli.command("gen")
@click.option("--family", type=click.Choice(["wn"]), default=None,
              help="Named family (wn: k distinct letters mirrored).")
@click.option("--n", "family_n", type=int, default=None, help="Family parameter k (>= 1).")
@click.option("--random", "random_", is_flag=True, help="Uniform random word.")
@click.option("--len", "length", type=int, default=None, help="Random word length.")
@click.option("--alphabet", type=int, default=None, help="Random alphabet size.")
@click.option("--seed", type=int, default=0, show_default=True, help="Random seed.")
@click.option("--count", type=int, default=1, show_default=True, help="Words to emit.")
def cmd_gen(family, family_n, random_, length, alphabet, seed, count):
    """Generate words, one per line."""
    if family == "wn":
        if family_n is None or family_n < 1:
            raise click.UsageError("--family wn requires --n >= 1")
        for _ in range(count):
            click.echo(palindrome_pair_word(family_n).render())
    elif random_:
        if length is None or alphabet is None:
            raise click.UsageError("--random requires --len and --alphabet")
        for i in range(count):
            click.echo(random_word(length, alphabet, seed + i).render())
    else:
        raise click.UsageError("choose --family wn or --random")


def _bench_rows(words: list[tuple[str, Word]]) -> list[tuple]:
    rows = []
    for surface, w in words:
        start = time.perf_counter_ns()
        result = run(w)
        elapsed = time.perf_counter_ns() - start
        c = result.counters
        rows.append((
            w.n,
            w.alphabet_size,
            len(result.expanding),
            result.round_count,
            c.scanned + c.visits,
            c.edges,
            elapsed,
        ))
    return rows


@cli.command("bench")
@click.option("--family", type=click.Choice(["wn"]), default=None,
              help="Benchmark the wn family for k = 1 .. --n-max.")
@click.option("--n-max", type=int, default=None, help="Largest family parameter.")
@click.option("--file", "path", type=str, default=None,
              help="Read words from a file ('-' for stdin).")
@click.option("--tokens", is_flag=True, help="Treat whitespace-separated tokens as letters.")
@click.option("--csv", "as_csv", is_flag=True, help="Emit CSV with a header row.")
def cmd_bench(family, n_max, path, tokens, as_csv):
    """One row per word: n, m, |E|, rounds, scanned, edges, nanoseconds."""
    words: list[tuple[str, Word]] = []
    if family == "wn":
        if n_max is None or n_max < 1:
            raise click.UsageError("--family wn requires --n-max >= 1")
        for k in range(1, n_max + 1):
            w = palindrome_pair_word(k)
            words.append((w.render(), w))
    elif path is not None:
        if path == "-":
            lines = _read_lines(sys.stdin)
        else:
            try:
                with open(path, encoding="utf-8") as fh:
                    lines = _read_lines(fh)
            except OSError as exc:
                click.echo(f"error: cannot open {path}: {exc}", err=True)
                sys.exit(3)
        words = [(line, parse_word(line, tokens)) for line in lines]
    else:
        raise click.UsageError("choose --family wn or --file")

    rows = _bench_rows(words)
    header = ("n", "m", "expanding", "rounds", "scanned", "edges", "ns")
    if as_csv:
        click.echo(",".join(header))
        for row in rows:
            click.echo(",".join(str(v) for v in row))
    else:
        click.echo("\t".join(header))
        for row in rows:
            click.echo("\t".join(str(v) for v in row))


def main():
    cli(prog_name="morphprim")


if __name__ == "__main__":
    main()
