"""WordNet-style lexical database: parsing, sense lookup, taxonomy metrics.

The lexicon is read from the standard ``index.<pos>`` / ``data.<pos>`` file
pair layout.  Only the pointer symbols relevant to taxonomy navigation are
consumed (``@`` hypernym, ``~`` hyponym, ``%p``/``%m``/``%s`` meronym,
``#p``/``#m``/``#s`` holonym); everything else is ignored.

A parsed :class:`LexiconIndex` is immutable after construction and safe for
concurrent reads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

MERONYM_SYMBOLS = ("%p", "%m", "%s")
HOLONYM_SYMBOLS = ("#p", "#m", "#s")

_TOKEN_RE = re.compile(r"[a-z0-9]+")


class LexiconParseError(ValueError):
    """A malformed line in an index/data stream, with its line number."""

    def __init__(self, message, line_number):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class HierarchyCycleError(ValueError):
    """The hypernym graph contains a cycle; ``cycle`` lists its synset ids."""

    def __init__(self, cycle):
        super().__init__("cyclic hypernym links: " + " -> ".join(cycle))
        self.cycle = list(cycle)


class UndefinedSimilarityError(ValueError):
    """Two synsets share no root ancestor, so Wu-Palmer is undefined."""


def normalize_lemma(text: str) -> str:
    """Lowercase a term and normalize spaces to underscores."""
    return text.strip().lower().replace(" ", "_")


def tokenize(text: str, stopwords=frozenset()) -> list[str]:
    """Split free text into content tokens.

    Lowercases, splits on non-alphanumeric boundaries, and drops stopwords
    and single-character tokens.  This one rule is shared by gloss
    processing and document indexing so profiles and relatedness vectors
    agree on token identity.
    """
    out = []
    for tok in _TOKEN_RE.findall(text.lower()):
        if len(tok) < 2 or tok in stopwords:
            continue
        out.append(tok)
    return out


@dataclass
class Synset:
    """One word sense: its lemmas, gloss, and taxonomy links.

    Link lists hold synset ids.  ``hypernyms``/``hyponyms`` are exact
    inverses of each other across the lexicon, as are ``meronyms`` (parts
    of this synset) and ``holonyms`` (wholes it belongs to).
    """

    id: str
    pos: str
    lemmas: list[str]
    gloss: str
    hypernyms: list[str] = field(default_factory=list)
    hyponyms: list[str] = field(default_factory=list)
    meronyms: list[str] = field(default_factory=list)
    holonyms: list[str] = field(default_factory=list)

    @property
    def name(self) -> str:
        return self.lemmas[0]


class LexiconIndex:
    """Immutable index over a parsed lexicon.

    ``synsets`` maps id -> :class:`Synset`; ``lemma_index`` maps
    ``(lemma, pos)`` to synset ids in sense-rank order; ``roots`` lists
    synsets with no hypernyms.  Depths are precomputed: the depth of a
    synset is the node count of its longest root path (roots have depth 1).
    """

    def __init__(self, synsets: dict[str, Synset], lemma_index: dict[tuple[str, str], list[str]]):
        self.synsets = synsets
        self.lemma_index = lemma_index
        self.roots = [sid for sid, syn in synsets.items() if not syn.hypernyms]
        self._check_acyclic()
        self._depths = self._compute_depths()
        self._ancestor_cache: dict[str, frozenset[str]] = {}

    # -- construction helpers -------------------------------------------

    def _check_acyclic(self):
        WHITE, GRAY, BLACK = 0, 1, 2
        color = dict.fromkeys(self.synsets, WHITE)
        for start in self.synsets:
            if color[start] != WHITE:
                continue
            stack = [(start, iter(self.synsets[start].hypernyms))]
            color[start] = GRAY
            path = [start]
            while stack:
                node, links = stack[-1]
                advanced = False
                for nxt in links:
                    if nxt not in self.synsets:
                        continue
                    if color[nxt] == GRAY:
                        cycle = path[path.index(nxt):] + [nxt]
                        raise HierarchyCycleError(cycle)
                    if color[nxt] == WHITE:
                        color[nxt] = GRAY
                        path.append(nxt)
                        stack.append((nxt, iter(self.synsets[nxt].hypernyms)))
                        advanced = True
                        break
                if not advanced:
                    color[node] = BLACK
                    path.pop()
                    stack.pop()

    def _compute_depths(self) -> dict[str, int]:
        depths: dict[str, int] = {}

        def depth(sid: str) -> int:
            if sid in depths:
                return depths[sid]
            syn = self.synsets[sid]
            parents = [p for p in syn.hypernyms if p in self.synsets]
            d = 1 if not parents else 1 + max(depth(p) for p in parents)
            depths[sid] = d
            return d

        for sid in self.synsets:
            depth(sid)
        return depths

    # -- lookups ---------------------------------------------------------

    def __len__(self):
        return len(self.synsets)

    def __contains__(self, synset_id):
        return synset_id in self.synsets

    def get(self, synset_id: str) -> Synset:
        return self.synsets[synset_id]

    def senses(self, word: str, pos: str = "n") -> list[Synset]:
        """All senses of ``word`` in stored rank order; [] if unknown."""
        ids = self.lemma_index.get((normalize_lemma(word), pos), [])
        return [self.synsets[i] for i in ids]

    def has_lemma(self, word: str, pos: str = "n") -> bool:
        return (normalize_lemma(word), pos) in self.lemma_index

    def depth(self, synset_id: str) -> int:
        return self._depths[synset_id]

    def ancestors(self, synset_id: str) -> frozenset[str]:
        """The hypernym closure of a synset, including the synset itself."""
        cached = self._ancestor_cache.get(synset_id)
        if cached is not None:
            return cached
        seen = {synset_id}
        frontier = [synset_id]
        while frontier:
            sid = frontier.pop()
            for parent in self.synsets[sid].hypernyms:
                if parent in self.synsets and parent not in seen:
                    seen.add(parent)
                    frontier.append(parent)
        result = frozenset(seen)
        self._ancestor_cache[synset_id] = result
        return result

    # -- taxonomy metrics --------------------------------------------------

    def wup_similarity(self, a, b) -> float:
        """Wu-Palmer similarity 2*depth(lcs) / (depth(a) + depth(b)).

        Depth counts nodes on the path from a root, inclusive, taking the
        deepest path when several exist; the least common subsumer is the
        shared ancestor of maximal depth.  Raises
        :class:`UndefinedSimilarityError` when no ancestor is shared.
        """
        sid_a = a.id if isinstance(a, Synset) else a
        sid_b = b.id if isinstance(b, Synset) else b
        common = self.ancestors(sid_a) & self.ancestors(sid_b)
        if not common:
            raise UndefinedSimilarityError(f"no common ancestor for {sid_a} and {sid_b}")
        lcs_depth = max(self._depths[s] for s in common)
        return 2.0 * lcs_depth / (self._depths[sid_a] + self._depths[sid_b])

    def wsp_neighbors(self, sense, source_kind: str, stopwords=frozenset()) -> list[str]:
        """Context words of a sense from one of the five profile sources.

        ``source_kind`` is one of ``synonyms``, ``gloss_words``,
        ``direct_hypernyms_hyponyms``, ``meronyms_holonyms``,
        ``hyponym_gloss_words``.  Gloss text is tokenized with
        :func:`tokenize`; link-based kinds return all lemmas of the linked
        synsets.  Duplicates are removed keeping first occurrence.
        """
        syn = sense if isinstance(sense, Synset) else self.synsets[sense]
        if source_kind == "synonyms":
            words = list(syn.lemmas)
        elif source_kind == "gloss_words":
            words = tokenize(syn.gloss, stopwords)
        elif source_kind == "direct_hypernyms_hyponyms":
            words = self._linked_lemmas(syn.hypernyms + syn.hyponyms)
        elif source_kind == "meronyms_holonyms":
            words = self._linked_lemmas(syn.meronyms + syn.holonyms)
        elif source_kind == "hyponym_gloss_words":
            words = []
            for hypo in syn.hyponyms:
                if hypo in self.synsets:
                    words.extend(tokenize(self.synsets[hypo].gloss, stopwords))
        else:
            raise ValueError(f"unknown WSP source kind: {source_kind!r}")
        return list(dict.fromkeys(words))

    def _linked_lemmas(self, synset_ids) -> list[str]:
        words = []
        for sid in synset_ids:
            if sid in self.synsets:
                words.extend(self.synsets[sid].lemmas)
        return words


WSP_SOURCE_KINDS = (
    "synonyms",
    "gloss_words",
    "direct_hypernyms_hyponyms",
    "meronyms_holonyms",
    "hyponym_gloss_words",
)


@dataclass
class CorpusFrequencies:
    """Word occurrence counts from a reference corpus."""

    counts: dict[str, int]
    total: int

    @classmethod
    def from_counts(cls, counts: dict[str, int]) -> "CorpusFrequencies":
        return cls(dict(counts), sum(counts.values()))

    def information_content(self, word: str) -> float:
        """-ln of the word's corpus probability.

        Unseen words get -ln(1 / (total + 1)): high enough that they are
        never classified as very general top-level terms.
        """
        count = self.counts.get(normalize_lemma(word))
        if count is None:
            return -math.log(1.0 / (self.total + 1))
        return -math.log(count / self.total)


def information_content(word: str, freq: CorpusFrequencies) -> float:
    return freq.information_content(word)


# ---------------------------------------------------------------------------
# File parsing
# ---------------------------------------------------------------------------


def parse_lexicon(index_source, data_source) -> LexiconIndex:
    """Parse an ``index.<pos>`` / ``data.<pos>`` stream pair.

    Either argument may be an iterable of lines or a whole string.  Header
    lines starting with whitespace are skipped, as in the stock database
    files.  Inverse links (hyponym for hypernym, holonym for meronym) are
    reconstructed when only one direction appears in the source.
    """
    synsets: dict[str, Synset] = {}
    for line_no, line in enumerate(_lines(data_source), start=1):
        if not line.strip() or line[0] == " ":
            continue
        synsets.update(_parse_data_line(line, line_no))

    _reconstruct_inverses(synsets)

    lemma_index: dict[tuple[str, str], list[str]] = {}
    for line_no, line in enumerate(_lines(index_source), start=1):
        if not line.strip() or line[0] == " ":
            continue
        lemma, pos, sids = _parse_index_line(line, line_no)
        ranked = []
        for sid in sids:
            full = f"{sid}-{pos}"
            if full not in synsets:
                raise LexiconParseError(f"index references unknown synset {sid}", line_no)
            if full not in ranked:
                ranked.append(full)
        lemma_index[(lemma, pos)] = ranked

    # Lemmas only present in data lines still get (rank-ordered by offset)
    # index entries so every stored lemma is searchable.
    for sid in sorted(synsets):
        syn = synsets[sid]
        for lemma in syn.lemmas:
            key = (lemma, syn.pos)
            bucket = lemma_index.setdefault(key, [])
            if sid not in bucket:
                bucket.append(sid)

    return LexiconIndex(synsets, lemma_index)


def _lines(source):
    if isinstance(source, str):
        return source.splitlines()
    return source


def _parse_index_line(line, line_no):
    fields = line.split()
    if len(fields) < 4:
        raise LexiconParseError("too few fields in index line", line_no)
    lemma = normalize_lemma(fields[0])
    pos = fields[1]
    try:
        count = int(fields[2])
    except ValueError:
        raise LexiconParseError(f"bad synset count {fields[2]!r}", line_no) from None
    if count < 1 or len(fields) < 3 + count:
        raise LexiconParseError("synset count does not match offsets", line_no)
    offsets = fields[-count:]
    for off in offsets:
        if not off.isdigit():
            raise LexiconParseError(f"bad synset offset {off!r}", line_no)
    return lemma, pos, offsets


def _parse_data_line(line, line_no):
    body, _, gloss = line.partition("|")
    fields = body.split()
    if len(fields) < 6:
        raise LexiconParseError("too few fields in data line", line_no)
    offset, pos = fields[0], fields[2]
    if not offset.isdigit():
        raise LexiconParseError(f"bad synset offset {offset!r}", line_no)
    try:
        w_cnt = int(fields[3], 16)
    except ValueError:
        raise LexiconParseError(f"bad word count {fields[3]!r}", line_no) from None
    if w_cnt < 1 or len(fields) < 4 + 2 * w_cnt + 1:
        raise LexiconParseError("word count does not match fields", line_no)
    lemmas = [normalize_lemma(fields[4 + 2 * i]) for i in range(w_cnt)]
    if any(not lem for lem in lemmas):
        raise LexiconParseError("empty lemma", line_no)

    p_pos = 4 + 2 * w_cnt
    try:
        p_cnt = int(fields[p_pos])
    except ValueError:
        raise LexiconParseError(f"bad pointer count {fields[p_pos]!r}", line_no) from None
    if len(fields) < p_pos + 1 + 4 * p_cnt:
        raise LexiconParseError("pointer count does not match fields", line_no)

    syn = Synset(id=f"{offset}-{pos}", pos=pos, lemmas=lemmas, gloss=gloss.strip())
    for i in range(p_cnt):
        sym, target, tpos = fields[p_pos + 1 + 4 * i: p_pos + 4 + 4 * i]
        target_id = f"{target}-{tpos}"
        if sym == "@":
            _append_unique(syn.hypernyms, target_id)
        elif sym == "~":
            _append_unique(syn.hyponyms, target_id)
        elif sym in MERONYM_SYMBOLS:
            _append_unique(syn.meronyms, target_id)
        elif sym in HOLONYM_SYMBOLS:
            _append_unique(syn.holonyms, target_id)
    return {syn.id: syn}


def _append_unique(lst, item):
    if item not in lst:
        lst.append(item)


def _reconstruct_inverses(synsets):
    pairs = [("hypernyms", "hyponyms"), ("hyponyms", "hypernyms"),
             ("meronyms", "holonyms"), ("holonyms", "meronyms")]
    for sid in sorted(synsets):
        syn = synsets[sid]
        for forward, backward in pairs:
            for target in getattr(syn, forward):
                if target in synsets:
                    _append_unique(getattr(synsets[target], backward), sid)


# ---------------------------------------------------------------------------
# File writing (round-trip support and fixture generation)
# ---------------------------------------------------------------------------


def write_lexicon(index: LexiconIndex) -> tuple[str, str]:
    """Serialize an index back to (index text, data text) in file layout."""
    data_lines = []
    for sid in sorted(index.synsets):
        data_lines.append(_format_data_line(index.synsets[sid]))

    index_lines = []
    for (lemma, pos) in sorted(index.lemma_index):
        sids = index.lemma_index[(lemma, pos)]
        symbols = []
        for sid in sids:
            syn = index.synsets[sid]
            for sym, links in (("@", syn.hypernyms), ("~", syn.hyponyms),
                               ("%p", syn.meronyms), ("#p", syn.holonyms)):
                if links and sym not in symbols:
                    symbols.append(sym)
        offsets = " ".join(sid.split("-")[0] for sid in sids)
        index_lines.append(
            f"{lemma} {pos} {len(sids)} {len(symbols)}"
            + ("".join(" " + s for s in symbols))
            + f" {len(sids)} 0 {offsets}"
        )
    return "\n".join(index_lines) + "\n", "\n".join(data_lines) + "\n"


def _format_data_line(syn: Synset) -> str:
    offset = syn.id.split("-")[0]
    parts = [offset, "03", syn.pos, f"{len(syn.lemmas):02x}"]
    for lemma in syn.lemmas:
        parts.extend([lemma, "0"])
    pointers = []
    for sym, links in (("@", syn.hypernyms), ("~", syn.hyponyms),
                       ("%p", syn.meronyms), ("#p", syn.holonyms)):
        for target in links:
            toff, tpos = target.split("-")
            pointers.append(f"{sym} {toff} {tpos} 0000")
    parts.append(f"{len(pointers):03d}")
    parts.extend(pointers)
    return " ".join(parts) + " | " + syn.gloss


# ---------------------------------------------------------------------------
# Auxiliary file loaders
# ---------------------------------------------------------------------------


def load_lexicon(directory, pos: str = "noun") -> LexiconIndex:
    """Load ``index.<pos>`` and ``data.<pos>`` from a directory path."""
    from pathlib import Path

    base = Path(directory)
    with open(base / f"index.{pos}", encoding="utf-8") as idx:
        with open(base / f"data.{pos}", encoding="utf-8") as dat:
            return parse_lexicon(idx, dat)


def load_frequencies(source) -> CorpusFrequencies:
    """Read ``word<TAB>count`` lines into :class:`CorpusFrequencies`."""
    counts: dict[str, int] = {}
    for line_no, raw in enumerate(_lines(_read_if_path(source)), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word, count = line.split("\t")
            counts[normalize_lemma(word)] = counts.get(normalize_lemma(word), 0) + int(count)
        except ValueError:
            raise LexiconParseError(f"bad frequency line {line!r}", line_no) from None
    return CorpusFrequencies.from_counts(counts)


def load_stopwords(source) -> frozenset[str]:
    """Read a one-word-per-line stopword file."""
    words = set()
    for raw in _lines(_read_if_path(source)):
        word = raw.strip().lower()
        if word and not word.startswith("#"):
            words.add(word)
    return frozenset(words)


def _read_if_path(source):
    from pathlib import Path

    if isinstance(source, Path):
        return source.read_text(encoding="utf-8")
    if isinstance(source, str) and "\n" not in source and Path(source).exists():
        return Path(source).read_text(encoding="utf-8")
    return source
