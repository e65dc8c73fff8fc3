"""Word representations shared by the quantum and classical simulators.

A word can be given three ways:

* an ``int`` n, meaning the unary word made of n copies of the machine's
  single symbol;
* a ``str`` of symbols;
* a sequence of ``(symbol, count)`` run-length pairs, e.g.
  ``(("a", 2), ("b", 6))`` for the word aabbbbbb.

Run-length pairs are the cheap form: promise instances with millions of
repeated symbols never need to be materialized.
"""

from itertools import groupby


def as_runs(word, alphabet) -> tuple[tuple[str, int], ...]:
    """Normalize `word` to run-length pairs over `alphabet`.

    Adjacent runs of the same symbol are merged and zero-count runs are
    dropped. Raises ValueError for symbols outside `alphabet`, negative
    counts, or an int word on a multi-symbol alphabet.
    """
    if isinstance(word, int):
        if word < 0:
            raise ValueError(f"negative word length {word}")
        if len(alphabet) != 1:
            raise ValueError(
                "integer words are only meaningful for single-symbol alphabets"
            )
        return ((alphabet[0], word),) if word else ()
    if isinstance(word, str):
        pairs = [(sym, sum(1 for _ in grp)) for sym, grp in groupby(word)]
    else:
        pairs = [(sym, int(count)) for sym, count in word]
    runs = []
    for sym, count in pairs:
        if sym not in alphabet:
            raise ValueError(f"symbol {sym!r} not in alphabet {alphabet}")
        if count < 0:
            raise ValueError(f"negative run count {count} for symbol {sym!r}")
        if count == 0:
            continue
        if runs and runs[-1][0] == sym:
            runs[-1] = (sym, runs[-1][1] + count)
        else:
            runs.append((sym, count))
    return tuple(runs)


def materialize(word) -> str:
    """Expand a run-length or int word into its literal string."""
    if isinstance(word, str):
        return word
    if isinstance(word, int):
        return "a" * word
    return "".join(sym * count for sym, count in word)


def word_length(word) -> int:
    if isinstance(word, int):
        return word
    if isinstance(word, str):
        return len(word)
    return sum(count for _, count in word)
