# # Checking perfection
#
# A code is 1-perfect when every vertex has exactly one codeword in its
# radius-1 ball. Small graphs can be checked vertex by vertex; larger ones are
# sampled with a seeded generator so runs are reproducible.

from __future__ import annotations

from doobcodes import DoobPerfectCode, run_lemma_suite, verify_exhaustive, verify_sampled
from doobcodes.component_codes import substitution_from_forward, substitution_map

# ## Exhaustive: D(2, 1) and D(1, 3)
#
# Both have 4^5 = 1024 vertices and 64 codewords; balls have 16 vertices.

for m, n in [(2, 1), (1, 3)]:
    report = verify_exhaustive(DoobPerfectCode(m, n))
    print(f"D({m},{n})", report.passed, report.vertices_checked)

# ## Sampled: larger shapes
#
# D(21, 43) has 4^85 vertices. A hundred thousand samples is a smoke test,
# not a proof; the structural checks below carry the argument.

report = verify_sampled(DoobPerfectCode(21, 43), 100_000, seed=0)
print(report.to_text())

# ## Structural checks
#
# Sizes and distances of the component codes, nesting, coset counting and
# quadruple translations of Hamming codewords.

suite = run_lemma_suite()
print(suite.to_text())

# ## A broken substitution
#
# Swapping two images of phi across different small cosets destroys the
# coset structure, and the exhaustive check notices.

phi = substitution_map("phi")
fwd = phi.forward.copy()
fwd[[0, 1]] = fwd[[1, 0]]
broken = substitution_from_forward("phi", fwd, phi.target)
report = verify_exhaustive(DoobPerfectCode(2, 1, phi=broken))
print("broken phi passes?", report.passed, "bad vertices:", report.failure_count)
