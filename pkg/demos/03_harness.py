"""
Running the implication harness
===============================

Each case states an implication between properties and is evaluated on every
corpus entry. An entry that misses the hypothesis counts as vacuous.
Takes about a minute.
"""

from skewarm import default_corpus, run_harness

corpus = default_corpus()
print(len(corpus), "entries")

ledger = run_harness(corpus, jobs=4)
print(ledger.table())
print("ok:", ledger.ok)
