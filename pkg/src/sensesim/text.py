"""Corpus ingestion: tokenization, stemming, context extraction, statistics.

Corpus file format: UTF-8 text, one sentence per line, a blank line starts a
new document.  In Tagged mode every token carries a part-of-speech suffix
``surface_P`` with P in {N, V, A, O}; the tag separator is the *last*
underscore of the token.  In Plain mode every non-stopword token is treated
as a noun (the pipeline then still runs without a tagger).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from importlib import resources

from .errors import CorpusParseError
from .stemming import stem


class Pos(enum.Enum):
    NOUN = "N"
    VERB = "V"
    ADJECTIVE = "A"
    OTHER = "O"


OPEN_CLASS = frozenset({Pos.NOUN, Pos.VERB, Pos.ADJECTIVE})


class Mode(enum.Enum):
    TAGGED = "tagged"
    PLAIN = "plain"


@dataclass(frozen=True)
class Token:
    surface: str
    stem: str
    pos: Pos
    position: int  # 0-based index within the sentence


@dataclass(frozen=True)
class Sentence:
    id: int
    doc_id: int
    tokens: tuple[Token, ...]

    def stems(self) -> set[str]:
        return {t.stem for t in self.tokens}


@dataclass(frozen=True)
class Origin:
    kind: str  # "original" | "feedback" | "test"
    sense: str | None = None

    def __post_init__(self):
        if self.kind not in ("original", "feedback", "test"):
            raise ValueError(f"unknown origin kind {self.kind!r}")
        if (self.kind == "feedback") != (self.sense is not None):
            raise ValueError("sense must be set exactly for feedback origins")


ORIGINAL = Origin("original")
TEST = Origin("test")


@dataclass(frozen=True)
class Context:
    """One example: a center sentence plus an optional one-sentence window."""

    id: str
    sentences: tuple[Sentence, ...]
    target_position: tuple[int, int]  # (sentence id, token index)
    origin: Origin = ORIGINAL

    @property
    def span(self) -> tuple[int, ...]:
        return tuple(s.id for s in self.sentences)

    def stems(self) -> set[str]:
        out: set[str] = set()
        for s in self.sentences:
            out |= s.stems()
        return out

    def flat_tokens(self) -> list[tuple[int, Token]]:
        """Tokens with offsets counted across the whole window."""
        out = []
        offset = 0
        for s in self.sentences:
            for t in s.tokens:
                out.append((offset + t.position, t))
            offset += len(s.tokens)
        return out

    def target_offset(self) -> int:
        offset = 0
        sent_id, tok_idx = self.target_position
        for s in self.sentences:
            if s.id == sent_id:
                return offset + tok_idx
            offset += len(s.tokens)
        raise ValueError(f"target sentence {sent_id} not in context {self.id}")

    def token_span(self) -> int:
        return sum(len(s.tokens) for s in self.sentences)


@dataclass
class CorpusStats:
    freq: dict[str, int]
    max5: float
    total_tokens: int = 0
    _by_pos: dict[str, Pos] = field(default_factory=dict)

    def pos_of(self, lexeme: str) -> Pos:
        return self._by_pos.get(lexeme, Pos.OTHER)


_TAGGED_TOKEN = re.compile(r"^(?P<surface>.+)_(?P<tag>[A-Za-z])$")
_PLAIN_TOKEN = re.compile(r"[A-Za-z][A-Za-z'\-]*")

_TAG_TO_POS = {"N": Pos.NOUN, "V": Pos.VERB, "A": Pos.ADJECTIVE, "O": Pos.OTHER}


def _load_stopwords() -> frozenset[str]:
    text = resources.files("sensesim.data").joinpath("stopwords.txt").read_text("utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line)
    return frozenset(words)


STOPWORDS = _load_stopwords()


def _parse_tagged_line(line: str, line_number: int, sent_id: int, doc_id: int) -> Sentence:
    tokens = []
    for position, raw in enumerate(line.split()):
        m = _TAGGED_TOKEN.match(raw)
        if m is None:
            raise CorpusParseError(
                f"token {raw!r} is not in surface_P form", line_number=line_number
            )
        tag = m.group("tag").upper()
        if tag not in _TAG_TO_POS:
            raise CorpusParseError(
                f"token {raw!r} has unknown tag {tag!r} (expected N, V, A or O)",
                line_number=line_number,
            )
        surface = m.group("surface")
        tokens.append(Token(surface, stem(surface), _TAG_TO_POS[tag], position))
    return Sentence(sent_id, doc_id, tuple(tokens))


def _parse_plain_line(line: str, sent_id: int, doc_id: int) -> Sentence:
    tokens = []
    for position, surface in enumerate(_PLAIN_TOKEN.findall(line)):
        pos = Pos.OTHER if surface.lower() in STOPWORDS else Pos.NOUN
        tokens.append(Token(surface, stem(surface), pos, position))
    return Sentence(sent_id, doc_id, tuple(tokens))


def tokenize_and_stem(raw: str, mode: Mode = Mode.TAGGED) -> list[Sentence]:
    """Parse corpus text into one Sentence per non-blank line.

    Blank lines increment the document id; consecutive blank lines are
    collapsed.
    """
    sentences: list[Sentence] = []
    doc_id = 0
    doc_has_sentences = False
    for line_number, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            if doc_has_sentences:
                doc_id += 1
                doc_has_sentences = False
            continue
        sent_id = len(sentences)
        if mode is Mode.TAGGED:
            sentence = _parse_tagged_line(line, line_number, sent_id, doc_id)
        else:
            sentence = _parse_plain_line(line, sent_id, doc_id)
        sentences.append(sentence)
        doc_has_sentences = True
    return sentences


def extract_contexts(
    sentences: list[Sentence],
    target: str,
    window: int = 0,
    origin: Origin = ORIGINAL,
    id_prefix: str = "orig",
) -> list[Context]:
    """One Context per occurrence of the target stem.

    window=1 attaches up to one adjacent sentence on each side, staying
    within the same document.
    """
    if window not in (0, 1):
        raise ValueError("window must be 0 or 1")
    contexts = []
    for idx, sentence in enumerate(sentences):
        for token in sentence.tokens:
            if token.stem != target:
                continue
            members = [sentence]
            if window == 1:
                if idx > 0 and sentences[idx - 1].doc_id == sentence.doc_id:
                    members.insert(0, sentences[idx - 1])
                if idx + 1 < len(sentences) and sentences[idx + 1].doc_id == sentence.doc_id:
                    members.append(sentences[idx + 1])
            contexts.append(
                Context(
                    id=f"{id_prefix}:{len(contexts)}",
                    sentences=tuple(members),
                    target_position=(sentence.id, token.position),
                    origin=origin,
                )
            )
    return contexts


def corpus_stats(sentences: list[Sentence]) -> CorpusStats:
    """Occurrence counts of open-class stems over the whole corpus.

    max5 is the arithmetic mean of the five largest frequencies (of all
    frequencies when fewer than five distinct stems exist).
    """
    if not sentences:
        raise ValueError("cannot compute statistics of an empty corpus")
    freq: dict[str, int] = {}
    by_pos: dict[str, dict[Pos, int]] = {}
    total = 0
    for sentence in sentences:
        for token in sentence.tokens:
            if token.pos not in OPEN_CLASS:
                continue
            freq[token.stem] = freq.get(token.stem, 0) + 1
            by_pos.setdefault(token.stem, {}).setdefault(token.pos, 0)
            by_pos[token.stem][token.pos] += 1
            total += 1
    if not freq:
        raise ValueError("corpus contains no open-class tokens")
    top = sorted(freq.values(), reverse=True)[:5]
    max5 = sum(top) / len(top)
    # Dominant part of speech per stem; ties resolved noun > verb > adjective.
    order = [Pos.NOUN, Pos.VERB, Pos.ADJECTIVE]
    dominant = {
        lexeme: max(order, key=lambda p: (counts.get(p, 0), -order.index(p)))
        for lexeme, counts in by_pos.items()
    }
    return CorpusStats(freq=freq, max5=max5, total_tokens=total, _by_pos=dominant)
