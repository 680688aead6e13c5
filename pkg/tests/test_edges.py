"""Relation dump ingestion, filtering, and weight normalization."""

import json

import pytest

from situnet.edges import (
    ConceptEdge,
    DegenerateScaleError,
    EdgeStore,
    RelationType,
    filter_multiword,
    ingest_edges,
    normalized_weight,
)

from conftest import bundled


def uri_line(rel, start, end, weight=None, lang="en"):
    meta = json.dumps({"weight": weight}) if weight is not None else "{}"
    return (f"/a/[/r/{rel}/,/c/{lang}/{start}/,/c/{lang}/{end}/]"
            f"\t/r/{rel}\t/c/{lang}/{start}\t/c/{lang}/{end}\t{meta}")


class TestIngest:
    def test_used_for_line(self):
        store = ingest_edges(uri_line("UsedFor", "stove", "heat", 2.0))
        assert len(store) == 1
        edge = store.edges[0]
        assert edge.start == "stove"
        assert edge.relation is RelationType.UsedFor
        assert edge.end == "heat"
        assert edge.weight == 2.0

    def test_unknown_relation_dropped(self):
        store = ingest_edges(uri_line("Antonym", "hot", "cold", 1.0))
        assert len(store) == 0
        assert store.skipped_lines == 0  # silent drop, not an error

    def test_language_filter(self):
        lines = "\n".join([uri_line("UsedFor", "pan", "fry", 1.0),
                           uri_line("UsedFor", "poele", "frire", 1.0, lang="fr")])
        assert len(ingest_edges(lines, "en")) == 1
        assert len(ingest_edges(lines, "fr")) == 1

    def test_simplified_four_column_layout(self):
        store = ingest_edges("AtLocation\tSock Drawer\tdresser\t1.5")
        edge = store.edges[0]
        assert edge.start == "sock_drawer"  # spaces normalized
        assert edge.weight == 1.5

    def test_default_weight_when_metadata_lacks_it(self):
        store = ingest_edges(uri_line("IsA", "pan", "cookware"))
        assert store.edges[0].weight == 1.0

    def test_malformed_lines_skipped_and_counted(self):
        lines = "\n".join([
            "/a/x\t/r/UsedFor\t/c/en/a",          # too few columns
            uri_line("UsedFor", "a", "b", 1.0) + "x",  # broken json
            uri_line("UsedFor", "pan", "fry", 2.0),
        ])
        store = ingest_edges(lines)
        assert len(store) == 1
        assert store.skipped_lines == 2

    def test_self_located_concept_rejected(self):
        store = ingest_edges(uri_line("AtLocation", "box", "box", 1.0))
        assert len(store) == 0
        assert store.skipped_lines == 1

    def test_duplicates_merge_keeping_max_weight(self):
        lines = "\n".join([uri_line("UsedFor", "broom", "sweep", 3.0),
                           uri_line("UsedFor", "broom", "sweep", 6.0),
                           uri_line("UsedFor", "broom", "sweep", 4.0)])
        store = ingest_edges(lines)
        assert len(store) == 1
        assert store.edges[0].weight == 6.0

    def test_bundled_dump_matches_grep_oracle(self, raw_store):
        """Retained-edge count re-derived by a minimal line scan."""
        keep = {"IsA", "AtLocation", "HasProperty", "UsedFor"}
        triples = set()
        with open(bundled("conceptnet.tsv"), encoding="utf-8") as handle:
            for line in handle:
                cols = line.rstrip("\n").split("\t")
                if len(cols) == 5:
                    rel = cols[1].removeprefix("/r/")
                    start, end = cols[2].split("/"), cols[3].split("/")
                    if (rel in keep and len(start) > 3 and len(end) > 3
                            and start[2] == "en" and end[2] == "en"):
                        try:
                            json.loads(cols[4])
                        except ValueError:
                            continue
                        if not (rel == "AtLocation" and start[3] == end[3]):
                            triples.add((rel, start[3], end[3]))
                elif len(cols) == 4 and cols[0] in keep:
                    triples.add((cols[0], cols[1], cols[2]))
        assert len(raw_store) == len(triples)

    def test_ingest_deterministic(self):
        text = open(bundled("conceptnet.tsv"), encoding="utf-8").read()
        first = ingest_edges(text)
        second = ingest_edges(text)
        assert first.edges == second.edges

    def test_indexes_mirror_each_other(self, raw_store):
        from_start = sorted((e.start, e.relation.value, e.end, e.weight)
                            for edges in raw_store.by_start.values() for e in edges)
        from_end = sorted((e.start, e.relation.value, e.end, e.weight)
                          for edges in raw_store.by_end.values() for e in edges)
        assert from_start == from_end
        for edges in raw_store.by_start.values():
            for e in edges:
                assert e in raw_store.by_end[(e.end, e.relation)]


class TestFilterMultiword:
    def test_free_phrase_removed(self, lexicon):
        store = ingest_edges(uri_line("UsedFor", "food", "satisfy_hunger", 1.0))
        assert len(filter_multiword(store, lexicon)) == 0

    def test_lexicon_lemma_kept(self, lexicon):
        store = ingest_edges(uri_line("IsA", "kitchen_roll", "paper_towel", 1.0))
        kept = filter_multiword(store, lexicon)
        assert len(kept) == 1  # paper_towel is a single lexicon concept

    def test_start_terms_never_filtered(self, lexicon):
        store = ingest_edges(uri_line("AtLocation", "paper_towel", "kitchen", 1.0))
        assert len(filter_multiword(store, lexicon)) == 1

    def test_numeric_token_not_a_phrase(self):
        store = ingest_edges(uri_line("IsA", "x", "route_66", 1.0))
        assert len(filter_multiword(store, None)) == 1

    def test_removed_set_matches_predicate_oracle(self, raw_store, lexicon):
        kept = filter_multiword(raw_store, lexicon)
        kept_keys = {(e.start, e.relation, e.end) for e in kept.edges}
        for e in raw_store.edges:
            tokens = e.end.split("_")
            phrase = any(a.isalpha() and b.isalpha()
                         for a, b in zip(tokens, tokens[1:]))
            expect_removed = phrase and not lexicon.has_lemma(e.end)
            assert ((e.start, e.relation, e.end) not in kept_keys) == expect_removed

    def test_idempotent(self, raw_store, lexicon):
        once = filter_multiword(raw_store, lexicon)
        twice = filter_multiword(once, lexicon)
        assert once.edges == twice.edges

    def test_bundled_dump_content(self, store):
        assert not store.has_edge("food", RelationType.UsedFor, "satisfy_hunger")
        assert store.has_edge("food", RelationType.AtLocation, "store")
        assert store.has_edge("broom", RelationType.UsedFor, "sweep")


class TestNormalizedWeight:
    def test_max_weight_edge_scores_one(self, store):
        for relation, scale in store.max_weight.items():
            tops = [e for e in store.edges
                    if e.relation is relation and e.weight == scale]
            assert tops
            assert normalized_weight(tops[0], store) == 1.0

    def test_forced_ratio(self):
        store = EdgeStore([
            ConceptEdge("a", RelationType.UsedFor, "b", 1.0),
            ConceptEdge("c", RelationType.UsedFor, "d", 4.0),
        ])
        assert normalized_weight(store.edges[0], store) == 0.25

    def test_all_bundled_edges_in_unit_range(self, store):
        for e in store.edges:
            value = normalized_weight(e, store)
            assert 0.0 <= value <= 1.0
            assert value == pytest.approx(e.weight / store.max_weight[e.relation])

    def test_zero_scale_rejected(self):
        store = EdgeStore([ConceptEdge("a", RelationType.IsA, "b", 0.0)])
        with pytest.raises(DegenerateScaleError):
            normalized_weight(store.edges[0], store)
