"""Running the brute-force consistency suite.

Every closed form in the library has an independent check: fixed-point
counting plus exact decomposition for permutation characters, the
projective-cover recursion for determinant-1 characters, composition
against the factored definition for the Morita correspondent, counting
laws for the exceptional parts, and enumeration on a corpus of random
trees.  Failures come back as data.
"""

from cyclicblocks.local_reps import cap_dim
from cyclicblocks.oracle import GridSpec, consistency_suite

grid = GridSpec(primes=(3, 5), n_max=2, seed=12345)
report = consistency_suite(grid, corpus_size=15)
print(f"checks run: {report.checks_run}")
print(f"failures:   {len(report.failures)}")
print(f"passed:     {report.passed}")

# fault injection: corrupt the closed-form cap dimension and watch the
# suite catch it by name
corrupted = lambda w, g, i: cap_dim(w, g, i) + 1  # noqa: E731
bad = consistency_suite(grid, corpus_size=0, cap_dim_impl=corrupted)
print(f"\nwith a corrupted cap dimension: {len(bad.failures)} failures")
first = bad.failures[0]
print(f"first failure: {first.check} at {first.params}")
print(f"  expected {first.expected}, actual {first.actual}")
