"""Generating a situated concept network, stage by stage.

Runs the recipe scenario through the full pipeline and shows what each
stage contributes: the raw hypernym closure, the compressed taxonomy,
the sense-gated relation attachment, and the environment-constrained
two-hop locations.
"""

from situnet import data_path
from situnet.cli import load_config
from situnet.disambiguation import disambiguate_seeds
from situnet.edges import RelationType, filter_multiword, load_edges
from situnet.lexicon import load_frequencies, load_lexicon, load_stopwords
from situnet.netgen import (
    add_isa_paths,
    attach_locations_two_hop,
    attach_relations,
    compress,
    serialize_graph,
)
from situnet.relatedness import EsaRelatedness, build_esa_index, load_documents

config, _ = load_config(data_path("configs", "recipe.cfg"))
lexicon = load_lexicon(config.lexicon)
freq = load_frequencies(config.corpus)
stopwords = load_stopwords(config.stopwords)
store = filter_multiword(load_edges(config.edges), lexicon)
provider = EsaRelatedness(build_esa_index(load_documents(config.esa_corpus),
                                          stopwords=stopwords))
seeds = [w.strip() for w in open(config.seeds) if w.strip()]

# -- stage 1: disambiguate and walk the hierarchy -----------------------------

assignment = disambiguate_seeds(seeds, lexicon)
raw = add_isa_paths(assignment, lexicon)
print(f"hypernym closure of {len(seeds)} seeds: "
      f"{len(raw.nodes)} concepts, {len(raw.edges)} IsA edges")

# -- stage 2: compression ------------------------------------------------------

compressed = compress(raw, freq, config.min_children, config.ic_threshold)
removed = sorted(set(raw.nodes) - set(compressed.nodes))
print(f"compression removed {len(removed)} over-general or thin nodes:")
print("  " + ", ".join(removed))

# -- stage 3: typed relations with the sense gate ------------------------------

attached = attach_relations(compressed, store, lexicon, provider,
                            assignment, stopwords)
print(f"\nrelation attachment added "
      f"{len(attached.edges) - len(compressed.edges)} edges, "
      f"dropped {attached.dropped_edges} whose sense did not fit the scenario")

# -- stage 4: two-hop locations inside the environment -------------------------

graph = attach_locations_two_hop(attached, store, config.environment)
locations = graph.node_ids("location")
print(f"locations constrained to '{config.environment}': {locations}")
print("(note 'store' was excluded: groceries come from stores, but stores"
      " are not located in kitchens)\n")

# -- the finished network -------------------------------------------------------

print(f"final graph: {len(graph.nodes)} nodes, {len(graph.edges)} edges")
for relation in RelationType:
    count = len(graph.edges_by_relation(relation))
    print(f"  {relation.value:12s} {count:3d} edges")

print("\nserialized sample (first 12 records):")
for line in serialize_graph(graph).splitlines()[:12]:
    print("  " + line)
