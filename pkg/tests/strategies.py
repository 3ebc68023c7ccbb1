"""Hypothesis strategies for small hypergraphs."""

import itertools

from hypothesis import strategies as st

from hyperchrom.hypercore import Hypergraph


@st.composite
def hypergraphs(draw, max_n=6, max_edges=8, ts=(2, 3, 4), uniform=True):
    n = draw(st.integers(min_value=1, max_value=max_n))
    sizes = [t for t in ts if t <= n]
    if not sizes:
        return Hypergraph(n)
    if uniform:
        t = draw(st.sampled_from(sizes))
        pool = list(itertools.combinations(range(n), t))
    else:
        pool = [c for t in sizes for c in itertools.combinations(range(n), t)]
    chosen = draw(st.sets(st.sampled_from(pool), max_size=min(max_edges, len(pool))))
    return Hypergraph.from_edges(n, chosen)
