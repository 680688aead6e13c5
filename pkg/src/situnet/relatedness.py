"""Explicit-semantic-analysis word relatedness over a document corpus.

Each indexed word is represented as a sparse vector of per-document
weights (raw counts or tf-idf); relatedness is the cosine similarity of
two such vectors.  Any object with a ``score(word_a, word_b) -> float in
[0, 1]`` method can stand in as a relatedness provider, which is how the
table-driven test providers plug into the same pipeline slots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lexicon import normalize_lemma, tokenize


@dataclass
class EsaIndex:
    """Sparse word-by-document matrix.

    ``vectors`` maps each word to a list of (concept index, weight) pairs
    sorted by concept index with strictly positive weights.  Immutable
    after construction; queries are safe to run concurrently.
    """

    concepts: list[str]
    vectors: dict[str, list[tuple[int, float]]]
    weighting: str = "raw_count"

    def vector(self, word: str) -> list[tuple[int, float]]:
        return self.vectors.get(word, [])

    def __contains__(self, word):
        return word in self.vectors

    def words(self):
        return self.vectors.keys()


def build_esa_index(documents, weighting: str = "raw_count",
                    stopwords=frozenset(), min_doc_freq: int = 1) -> EsaIndex:
    """Index a sequence of (title, text) documents.

    Texts are tokenized with the shared lexicon tokenization rule.  In
    ``raw_count`` mode an entry is the count of the word in the document;
    in ``tfidf`` mode it is count * ln(N / document_frequency).  Words
    appearing in fewer than ``min_doc_freq`` documents are dropped.
    """
    if weighting not in ("raw_count", "tfidf"):
        raise ValueError(f"unknown weighting {weighting!r}")
    documents = list(documents)
    if not documents:
        raise ValueError("at least one document is required")

    concepts = [title for title, _ in documents]
    counts: dict[str, dict[int, int]] = {}
    for doc_idx, (_, text) in enumerate(documents):
        for token in tokenize(text, stopwords):
            counts.setdefault(token, {}).setdefault(doc_idx, 0)
            counts[token][doc_idx] += 1

    n_docs = len(documents)
    vectors: dict[str, list[tuple[int, float]]] = {}
    for word, per_doc in counts.items():
        if len(per_doc) < min_doc_freq:
            continue
        idf = math.log(n_docs / len(per_doc)) if weighting == "tfidf" else 1.0
        vec = [(idx, count * idf) for idx, count in sorted(per_doc.items())]
        vec = [(idx, w) for idx, w in vec if w > 0]
        if vec:
            vectors[word] = vec
    return EsaIndex(concepts=concepts, vectors=vectors, weighting=weighting)


def _sparse_cosine(a, b) -> float:
    if not a or not b:
        return 0.0
    dot = 0.0
    b_dict = dict(b)
    for idx, w in a:
        w2 = b_dict.get(idx)
        if w2 is not None:
            dot += w * w2
    ssq_a = sum(w * w for _, w in a)
    ssq_b = sum(w * w for _, w in b)
    if ssq_a == 0.0 or ssq_b == 0.0 or dot == 0.0:
        return 0.0
    # sqrt of the product keeps cos(v, v) at exactly 1.0
    return min(1.0, dot / math.sqrt(ssq_a * ssq_b))


def esa_relatedness(index: EsaIndex, a: str, b: str) -> float:
    """Cosine similarity of two word vectors; 0 for unknown words."""
    return _sparse_cosine(index.vector(normalize_lemma(a)), index.vector(normalize_lemma(b)))


class EsaRelatedness:
    """Relatedness provider backed by an :class:`EsaIndex`.

    Multiword terms (underscore compounds) that are not indexed directly
    are scored through the sum of their constituent token vectors, so
    lexicon lemmas like ``cooking_utensil`` still relate to plain words.
    """

    def __init__(self, index: EsaIndex):
        self.index = index

    def score(self, word_a: str, word_b: str) -> float:
        return _sparse_cosine(self._term_vector(word_a), self._term_vector(word_b))

    def _term_vector(self, term):
        term = normalize_lemma(term)
        direct = self.index.vector(term)
        if direct or "_" not in term:
            return direct
        combined: dict[int, float] = {}
        for token in term.split("_"):
            for idx, w in self.index.vector(token):
                combined[idx] = combined.get(idx, 0.0) + w
        return sorted(combined.items())


class TableRelatedness:
    """Fixed-table provider for tests and controlled experiments.

    The table is symmetrized on construction; unknown pairs score 0 and
    identical known words score 1.
    """

    def __init__(self, table: dict[tuple[str, str], float], default: float = 0.0):
        self.table = {}
        for (a, b), value in table.items():
            a, b = normalize_lemma(a), normalize_lemma(b)
            self.table[(a, b)] = value
            self.table[(b, a)] = value
        self.default = default
        self._known = {a for a, _ in self.table}

    def score(self, word_a: str, word_b: str) -> float:
        a, b = normalize_lemma(word_a), normalize_lemma(word_b)
        if a == b:
            return 1.0 if a in self._known else self.default
        return self.table.get((a, b), self.default)


class ConstantRelatedness:
    """Provider returning one fixed score for distinct words."""

    def __init__(self, value: float = 0.0):
        self.value = value

    def score(self, word_a: str, word_b: str) -> float:
        if normalize_lemma(word_a) == normalize_lemma(word_b):
            return 1.0
        return self.value


# ---------------------------------------------------------------------------
# Persistence: a text layout that round-trips bit-exactly
# ---------------------------------------------------------------------------


def save_esa_index(index: EsaIndex, path) -> None:
    with open(path, "w", encoding="utf-8") as out:
        out.write(f"ESA\t{index.weighting}\t{len(index.concepts)}\n")
        for title in index.concepts:
            out.write(f"C\t{title}\n")
        for word in index.vectors:
            cells = " ".join(f"{idx}:{w!r}" for idx, w in index.vectors[word])
            out.write(f"V\t{word}\t{cells}\n")


def load_esa_index(path) -> EsaIndex:
    concepts: list[str] = []
    vectors: dict[str, list[tuple[int, float]]] = {}
    weighting = "raw_count"
    with open(path, encoding="utf-8") as handle:
        header = handle.readline().rstrip("\n").split("\t")
        if len(header) != 3 or header[0] != "ESA":
            raise ValueError(f"not an ESA index file: {path}")
        weighting = header[1]
        for raw in handle:
            line = raw.rstrip("\n")
            if not line:
                continue
            tag, _, rest = line.partition("\t")
            if tag == "C":
                concepts.append(rest)
            elif tag == "V":
                word, _, cells = rest.partition("\t")
                vec = []
                for cell in cells.split():
                    idx, _, w = cell.partition(":")
                    vec.append((int(idx), float(w)))
                vectors[word] = vec
            else:
                raise ValueError(f"bad ESA record tag {tag!r}")
    return EsaIndex(concepts=concepts, vectors=vectors, weighting=weighting)


def load_documents(path) -> list[tuple[str, str]]:
    """Read a ``title<TAB>text`` corpus file, one document per line."""
    docs = []
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            title, _, text = line.partition("\t")
            docs.append((title, text))
    return docs
