"""Ground-truth cycle words for ``BP_3`` and ``BP_4``.

The packaged file ``data/v1/cycles.txt`` holds one entry per line,
``n length digitword``, with ``#`` comment lines.  Setting ``BURNT_DATA_DIR``
points the loader at another directory containing ``cycles.txt``.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import CorpusError, MissingLength, ParseError
from .graph import order
from .perm import GenWord, cycle_facts, identity

CORPUS_VERSION = "v1"
CORPUS_FILE = "cycles.txt"
CORPUS_DIMENSIONS = (3, 4)


@dataclass(frozen=True)
class CorpusEntry:
    n: int
    length: int
    word: GenWord


@dataclass
class Corpus:
    entries: dict = field(default_factory=dict)
    source: str = ""

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries[key] for key in sorted(self.entries))

    def lookup(self, n: int, length: int) -> CorpusEntry:
        try:
            return self.entries[(n, length)]
        except KeyError:
            raise MissingLength(f"no corpus cycle of length {length} for n={n}") from None

    def lengths(self, n: int) -> list[int]:
        return sorted(L for m, L in self.entries if m == n)


@dataclass(frozen=True)
class CorpusReport:
    checked: int
    failures: tuple[str, ...]
    gaps: dict

    @property
    def ok(self) -> bool:
        return not self.failures and not any(self.gaps.values())


def parse_corpus(text: str, source: str = "<string>") -> Corpus:
    corpus = Corpus(source=source)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("expected 'n length digitword'", lineno)
        try:
            n, length = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("n and length must be integers", lineno) from None
        if not parts[2].isdigit():
            raise ParseError("word must be a digit string", lineno)
        if n > 9 or n < 1:
            raise ParseError(f"digit words need 1 <= n <= 9, got {n}", lineno)
        try:
            word = GenWord(tuple(int(ch) for ch in parts[2]), n)
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if (n, length) in corpus.entries:
            raise ParseError(f"duplicate entry for n={n} length={length}", lineno)
        corpus.entries[(n, length)] = CorpusEntry(n, length, word)
    return corpus


def validate_corpus(corpus: Corpus) -> CorpusReport:
    failures = []
    for entry in corpus:
        if len(entry.word) != entry.length:
            failures.append(f"n={entry.n} length {entry.length}: word has {len(entry.word)} letters")
            continue
        closed, simple, pos = cycle_facts(identity(entry.n), entry.word.letters)
        if not simple:
            where = f" (repeat at letter {pos})" if pos is not None else ""
            failures.append(f"n={entry.n} length {entry.length}: not a simple cycle{where}")
    gaps = {}
    for n in sorted({n for n, _ in corpus.entries}):
        have = set(corpus.lengths(n))
        gaps[n] = [L for L in range(8, order(n) + 1) if L not in have]
    return CorpusReport(len(corpus), tuple(failures), gaps)


def load_corpus(path, validate: bool = True) -> Corpus:
    path = Path(path)
    corpus = parse_corpus(path.read_text(), str(path))
    if validate:
        report = validate_corpus(corpus)
        if report.failures:
            raise CorpusError(f"{path}: " + "; ".join(report.failures))
    return corpus


def default_corpus_text() -> str:
    override = os.environ.get("BURNT_DATA_DIR")
    if override:
        return (Path(override) / CORPUS_FILE).read_text()
    return resources.files("burnt").joinpath("data").joinpath(CORPUS_VERSION).joinpath(CORPUS_FILE).read_text()


@lru_cache(maxsize=1)
def default_corpus() -> Corpus:
    corpus = parse_corpus(default_corpus_text(), "packaged")
    report = validate_corpus(corpus)
    if report.failures:
        raise CorpusError("; ".join(report.failures))
    return corpus


def lookup(n: int, length: int) -> CorpusEntry:
    return default_corpus().lookup(n, length)
