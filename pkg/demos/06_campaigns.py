"""Seeded campaigns: verify the theorem on random instances, sweep the
constructions for sharpness, and hunt for conjecture counterexamples.

Every trial seeds its RNG from sha256(master_seed:trial_index), so reports
are byte-identical across runs, machines, and worker counts.
"""

from bergeham import (
    CampaignConfig,
    SampleProfile,
    conjecture_search,
    reverify_refutation,
    sharpness_campaign,
    verify_theorem_campaign,
)

# Verify: sample instances saturated to satisfy the condition, then demand
# a Hamiltonian Berge cycle from the exact search on every one.
cfg = CampaignConfig(n=9, r=3, samples=20, seed=7)
report = verify_theorem_campaign(cfg)
print("verify campaign:", report.counts())
print("  " + report.records[0].summary)

same_again = verify_theorem_campaign(cfg)
print(f"  render() reproducible: {report.render() == same_again.render()}")

# Sharpness: regenerate a family grid; every point must miss exactly its
# designated bound and be refuted by the search.
report = sharpness_campaign("H3", n_max=10)
print("\nsharpness campaign (H3, n <= 10):", report.counts())
for rec in report.records:
    print("  " + rec.summary)

# Conjecture hunt: only samples satisfying the conjectured condition while
# violating the proven one are informative; a skewed profile makes them
# common enough to be worth running.
cfg = CampaignConfig(
    n=9, r=3, samples=30, seed=42,
    profile=SampleProfile(edge_probability=0.85, starved=4, starved_probability=0.12),
)
report = conjecture_search(cfg)
print("\nconjecture search:", report.counts())
qualified = [r for r in report.records if r.outcome != "skip"]
if qualified:
    print("  " + qualified[0].summary)

# A 'fail' would ship as a refutation document; the re-checker replays one
# from its text alone, and rejects any tampering.
doc = next(iter(report.counterexamples), None)
if doc is None:
    print("  no counterexample found (expected; the conjecture stands)")
else:
    print(f"  counterexample re-verifies: {reverify_refutation(doc)}")
