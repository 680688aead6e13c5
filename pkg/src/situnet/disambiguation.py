"""Word sense disambiguation for seed words and relation endpoints.

Seed words are disambiguated jointly: senses are chosen so that a
greedily grown spanning tree over the seed set has minimal total
attachment cost, where the cost between two senses is 1 - Wu-Palmer
similarity.  The growth starts from the seed with the fewest senses and
is repeated for each of its candidate senses, keeping the cheapest tree.

Relation endpoints are disambiguated independently: each candidate sense
is scored by summing the relatedness between the context word and every
word in the sense's word sense profile (synonyms, gloss words, direct
hypernyms/hyponyms, meronyms/holonyms, hyponym gloss words).
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import (
    WSP_SOURCE_KINDS,
    LexiconIndex,
    Synset,
    UndefinedSimilarityError,
    normalize_lemma,
)


class UnknownSeedError(ValueError):
    def __init__(self, word):
        super().__init__(f"seed word {word!r} has no noun sense in the lexicon")
        self.word = word


class UnknownTermError(ValueError):
    def __init__(self, term):
        super().__init__(f"term {term!r} is unknown to the lexicon")
        self.term = term


@dataclass
class SenseAssignment:
    """Chosen sense and attachment cost for each seed word.

    ``choices`` maps seed word -> (synset id, attachment cost); the start
    word anchors the tree and carries cost 0.  ``total_cost`` is the sum
    of attachment costs over the non-start words.
    """

    choices: dict[str, tuple[str, float]]
    total_cost: float
    start_word: str

    def sense_of(self, word: str) -> str | None:
        choice = self.choices.get(normalize_lemma(word))
        return choice[0] if choice else None

    def words(self):
        return list(self.choices)


@dataclass
class WordSenseProfile:
    """Deduplicated context words of one sense, drawn from five sources."""

    sense: str
    words: list[str]


def _cost(lexicon: LexiconIndex, a: Synset, b: Synset) -> float:
    try:
        return 1.0 - lexicon.wup_similarity(a, b)
    except UndefinedSimilarityError:
        return 1.0


def pairwise_cost(lexicon: LexiconIndex, senses_i, senses_j):
    """Minimum 1 - wup over all sense pairs, with the minimizing (k, l).

    Pairs in disjoint hierarchies contribute cost 1.0.  Ties resolve to
    the lexicographically lowest (k, l), i.e. the most frequent senses.
    """
    if not senses_i or not senses_j:
        raise ValueError("sense lists must be non-empty")
    best = None
    for k, sense_k in enumerate(senses_i):
        for l, sense_l in enumerate(senses_j):
            cost = _cost(lexicon, sense_k, sense_l)
            if best is None or cost < best[0]:
                best = (cost, (k, l))
    return best


def disambiguate_seeds(seeds, lexicon: LexiconIndex) -> SenseAssignment:
    """Jointly disambiguate a seed word list against the lexicon.

    The start word is the seed with the fewest noun senses (earlier input
    position wins ties).  For each of its candidate senses a tree is grown
    greedily: at every step the unattached word with the cheapest edge to
    any attached word joins the tree, its sense fixed to the minimizer of
    that edge cost.  The candidate start sense whose completed tree is
    cheapest wins; all remaining ties prefer lower sense rank, so the
    result is deterministic for a given input order.
    """
    seeds = [normalize_lemma(w) for w in seeds]
    deduped = list(dict.fromkeys(seeds))
    sense_lists = {}
    for word in deduped:
        senses = lexicon.senses(word, "n")
        if not senses:
            raise UnknownSeedError(word)
        sense_lists[word] = senses

    start_word = min(deduped, key=lambda w: (len(sense_lists[w]), deduped.index(w)))

    best: SenseAssignment | None = None
    for start_sense in sense_lists[start_word]:
        assignment = _grow_tree(deduped, sense_lists, start_word, start_sense, lexicon)
        if best is None or assignment.total_cost < best.total_cost:
            best = assignment
    return best


def _grow_tree(words, sense_lists, start_word, start_sense, lexicon):
    fixed: dict[str, tuple[str, float]] = {start_word: (start_sense.id, 0.0)}
    attached = [(start_word, start_sense)]
    remaining = [w for w in words if w != start_word]
    total = 0.0

    while remaining:
        # best = (cost, word position, sense rank) minimized lexicographically
        best_word = None
        best_key = None
        best_sense = None
        for w_pos, word in enumerate(remaining):
            for rank, candidate in enumerate(sense_lists[word]):
                cost = min(_cost(lexicon, candidate, anchor) for _, anchor in attached)
                key = (cost, w_pos, rank)
                if best_key is None or key < best_key:
                    best_key = key
                    best_word = word
                    best_sense = candidate
        cost = best_key[0]
        fixed[best_word] = (best_sense.id, cost)
        attached.append((best_word, best_sense))
        remaining.remove(best_word)
        total += cost

    ordered = {w: fixed[w] for w in words}
    return SenseAssignment(choices=ordered, total_cost=total, start_word=start_word)


def build_wsp(sense, lexicon: LexiconIndex, stopwords=frozenset()) -> WordSenseProfile:
    """Union the five neighbor sources into one profile, keeping order."""
    syn = sense if isinstance(sense, Synset) else lexicon.get(sense)
    words = []
    for kind in WSP_SOURCE_KINDS:
        words.extend(lexicon.wsp_neighbors(syn, kind, stopwords))
    deduped = [w for w in dict.fromkeys(words) if w and w not in stopwords]
    return WordSenseProfile(sense=syn.id, words=deduped)


def disambiguate_edge(c: str, d: str, lexicon: LexiconIndex, provider,
                      stopwords=frozenset()) -> tuple[str, float]:
    """Choose the sense of ambiguous term ``d`` given context word ``c``.

    Each sense of ``d`` is scored as the sum of provider relatedness
    between ``c`` and every profile word of that sense; the argmax wins,
    ties resolving to the lower sense rank.  Returns (synset id, score).
    """
    senses = lexicon.senses(d, "n")
    if not senses:
        raise UnknownTermError(d)
    best_sense = None
    best_score = None
    for sense in senses:
        profile = build_wsp(sense, lexicon, stopwords)
        score = sum(provider.score(c, w) for w in profile.words)
        if best_score is None or score > best_score:
            best_score = score
            best_sense = sense
    return best_sense.id, best_score


def save_assignment(assignment: SenseAssignment, path) -> None:
    """Write ``word<TAB>synset_id`` lines in input order."""
    with open(path, "w", encoding="utf-8") as out:
        for word in assignment.choices:
            out.write(f"{word}\t{assignment.choices[word][0]}\n")


def load_assignment(path) -> dict[str, str]:
    mapping = {}
    with open(path, encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            word, _, sid = line.partition("\t")
            mapping[word] = sid
    return mapping
