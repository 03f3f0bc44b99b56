"""CoNLL-U ingestion: tokens, sentences, and dependency-tree validation.

Only the columns the inflection rules consume are retained (id, form, lemma,
upos, feats, head, deprel). Multiword-token ranges and empty nodes are
skipped: the rules operate on syntactic words only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import ConlluParseError, TreeValidationError

NUM_COLUMNS = 10


@dataclass(frozen=True)
class SourceToken:
    """One syntactic word of a parsed source sentence."""

    index: int  # 1-based position
    surface: str
    lemma: str
    upos: str
    feats: dict[str, str] = field(default_factory=dict)
    head: int = 0  # 0 = root
    deprel: str = "dep"


@dataclass(frozen=True)
class ParsedSentence:
    sent_id: str
    tokens: tuple[SourceToken, ...]
    doc_id: str | None = None

    def __len__(self) -> int:
        return len(self.tokens)

    def token(self, index: int) -> SourceToken:
        """Return the token at a 1-based index."""
        if not 1 <= index <= len(self.tokens):
            raise ValueError(f"token index {index} out of range 1..{len(self.tokens)}")
        return self.tokens[index - 1]

    @property
    def root(self) -> SourceToken:
        return next(t for t in self.tokens if t.head == 0)

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]

    def children_of(self, index: int) -> list[SourceToken]:
        return [t for t in self.tokens if t.head == index]


def _parse_feats(value: str, line_no: int) -> dict[str, str]:
    if value in ("_", ""):
        return {}
    feats: dict[str, str] = {}
    for pair in value.split("|"):
        key, sep, val = pair.partition("=")
        if not sep or not key or not val:
            raise ConlluParseError(f"malformed feature {pair!r}", line_no)
        if key in feats:
            raise ConlluParseError(f"duplicate feature key {key!r}", line_no)
        # Multi-valued features like Case=Acc,Nom keep the full value string;
        # consumers treat it as ambiguous.
        feats[key] = val
    return feats


def _validate_sentence(sent_id: str, tokens: list[SourceToken]) -> None:
    n = len(tokens)
    for pos, tok in enumerate(tokens, start=1):
        if tok.index != pos:
            raise TreeValidationError(
                f"token ids not contiguous from 1 (saw {tok.index} at position {pos})",
                sent_id,
            )
        if not 0 <= tok.head <= n:
            raise TreeValidationError(
                f"head {tok.head} of token {tok.index} out of range 0..{n}", sent_id
            )
    roots = [t.index for t in tokens if t.head == 0]
    if len(roots) != 1:
        raise TreeValidationError(f"expected exactly one root, found {len(roots)}", sent_id)
    for tok in tokens:
        seen = set()
        cur = tok.index
        while cur != 0:
            if cur in seen:
                raise TreeValidationError(f"cycle through token {cur}", sent_id)
            seen.add(cur)
            cur = tokens[cur - 1].head


def parse_conllu(source: str | Iterable[str]) -> list[ParsedSentence]:
    """Parse CoNLL-U text (a string or an iterable of lines) into sentences.

    Comment lines supply `sent_id` and `newdoc id`; sentences without an
    explicit id are numbered s1, s2, ... in file order.
    """
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in source]

    sentences: list[ParsedSentence] = []
    tokens: list[SourceToken] = []
    sent_id: str | None = None
    doc_id: str | None = None
    auto_counter = 0

    def flush() -> None:
        nonlocal tokens, sent_id, auto_counter
        if not tokens:
            sent_id = None
            return
        auto_counter += 1
        sid = sent_id if sent_id is not None else f"s{auto_counter}"
        _validate_sentence(sid, tokens)
        sentences.append(ParsedSentence(sent_id=sid, tokens=tuple(tokens), doc_id=doc_id))
        tokens = []
        sent_id = None

    for line_no, line in enumerate(lines, start=1):
        if line.strip() == "":
            flush()
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("newdoc"):
                _, sep, value = body.partition("=")
                doc_id = value.strip() if sep else None
            elif body.startswith("sent_id"):
                _, sep, value = body.partition("=")
                if sep:
                    sent_id = value.strip()
            continue
        cols = line.split("\t")
        if len(cols) != NUM_COLUMNS:
            raise ConlluParseError(
                f"expected {NUM_COLUMNS} tab-separated columns, got {len(cols)}", line_no
            )
        tok_id = cols[0]
        if "-" in tok_id or "." in tok_id:
            continue  # multiword-token range / empty node
        try:
            index = int(tok_id)
        except ValueError:
            raise ConlluParseError(f"bad token id {tok_id!r}", line_no) from None
        try:
            head = int(cols[6])
        except ValueError:
            raise ConlluParseError(f"bad head {cols[6]!r}", line_no) from None
        tokens.append(
            SourceToken(
                index=index,
                surface=cols[1],
                lemma=cols[2],
                upos=cols[3],
                feats=_parse_feats(cols[5], line_no),
                head=head,
                deprel=cols[7],
            )
        )
    flush()
    return sentences


def parse_conllu_file(path) -> list[ParsedSentence]:
    with open(path, encoding="utf-8") as fh:
        return parse_conllu(fh)


def subtree_tokens(sentence: ParsedSentence, index: int) -> list[SourceToken]:
    """All tokens whose head chain reaches `index`, in surface order, excluding it."""
    sentence.token(index)  # range check
    children: dict[int, list[int]] = {}
    for tok in sentence.tokens:
        children.setdefault(tok.head, []).append(tok.index)
    collected: list[int] = []
    stack = [index]
    while stack:
        for child in children.get(stack.pop(), ()):
            collected.append(child)
            stack.append(child)
    return [sentence.token(i) for i in sorted(collected)]


def to_conllu(sentences: Iterable[ParsedSentence]) -> str:
    """Serialize the retained columns back to CoNLL-U text."""
    out: list[str] = []
    prev_doc: str | None = None
    for sent in sentences:
        if sent.doc_id is not None and sent.doc_id != prev_doc:
            out.append(f"# newdoc id = {sent.doc_id}")
        prev_doc = sent.doc_id
        out.append(f"# sent_id = {sent.sent_id}")
        for tok in sent.tokens:
            feats = (
                "|".join(f"{k}={v}" for k, v in sorted(tok.feats.items(), key=lambda kv: kv[0].lower()))
                or "_"
            )
            out.append(
                "\t".join(
                    [
                        str(tok.index),
                        tok.surface,
                        tok.lemma,
                        tok.upos,
                        "_",
                        feats,
                        str(tok.head),
                        tok.deprel,
                        "_",
                        "_",
                    ]
                )
            )
        out.append("")
    return "\n".join(out) + ("\n" if out else "")
