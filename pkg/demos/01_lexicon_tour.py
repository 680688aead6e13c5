"""A tour of the bundled lexical database.

Loads the miniature noun hierarchy shipped with the package, looks up
word senses, walks hypernym chains, and computes the two taxonomy
metrics everything else builds on: Wu-Palmer similarity and information
content.
"""

from situnet import data_path
from situnet.lexicon import load_frequencies, load_lexicon

lexicon = load_lexicon(data_path("lexicon"))
freq = load_frequencies(str(data_path("frequencies.tsv")))

print(f"lexicon: {len(lexicon)} synsets, {len(lexicon.roots)} root(s)\n")

# -- every sense of an ambiguous word ---------------------------------------

print("senses of 'pan':")
for rank, sense in enumerate(lexicon.senses("pan"), start=1):
    print(f"  {rank}. {', '.join(sense.lemmas):24s} -- {sense.gloss}")
print()

# -- hypernym chain of a seed-like word --------------------------------------

sense = lexicon.senses("garlic")[0]
chain = [sense]
while chain[-1].hypernyms:
    chain.append(lexicon.get(chain[-1].hypernyms[0]))
print("hypernym chain of 'garlic':")
print("  " + " -> ".join(s.name for s in chain))
print()

# -- Wu-Palmer similarity: nearby vs distant senses ---------------------------

pan_cooking = lexicon.senses("pan")[0]
pan_deity = lexicon.senses("pan")[1]
pot = lexicon.senses("pot")[0]
print("Wu-Palmer similarity (depth-weighted common ancestry):")
print(f"  pan (cookware)  vs pot:   {lexicon.wup_similarity(pan_cooking, pot):.3f}")
print(f"  pan (goat god)  vs pot:   {lexicon.wup_similarity(pan_deity, pot):.3f}")
print()

# -- information content: general terms score low ----------------------------

print("information content against the bundled frequency corpus")
print("(below 5.0 counts as a very general top-level term):")
for word in ("entity", "substance", "artifact", "food", "utensil", "garlic"):
    ic = freq.information_content(word)
    tag = "top-level" if ic < 5.0 else "specific"
    print(f"  {word:12s} {ic:6.2f}  {tag}")
