"""Monte Carlo estimates of the DRR share against exact census values.

Sampling is reproducible: each trial draws from its own generator derived
from (seed, trial index), so the estimate does not depend on worker count.

Run: python demos/04_sampling_vs_exact.py
"""

from cayleygrr import exact_census, make_group, sample_census

for factors in ([7], [8], [2, 6], [12]):
    g = make_group(factors)
    exact = exact_census(g, "digraph")
    p = exact.totals["drr"] / exact.totals["subsets"]
    est = sample_census(g, "digraph", trials=5000)
    lo, hi = est.interval
    print(f"{g.name:<8} exact {p:.4f}   sampled {est.estimate:.4f}   99% CI [{lo:.4f}, {hi:.4f}]")

# Sampling also reaches orders an exhaustive census cannot.
g = make_group([24])
est = sample_census(g, "graph", trials=300, seed=1)
print(f"Z24, 300 sampled graphs: share with Aut = A x| <inversion> is {est.estimate:.3f}")
