"""Deterministic random stream derivation.

Every stochastic component draws from a Generator derived from a root seed
plus a structured key, so results never depend on execution order or on how
work is split across processes.
"""

import numpy as np

# Domain tags keep streams for different purposes disjoint even when the
# remaining key integers collide.
DOMAIN_RECORD = 1
DOMAIN_INIT = 2
DOMAIN_SHUFFLE = 3
DOMAIN_AUGMENT = 4
DOMAIN_SAMPLE = 5
DOMAIN_PROBE = 6


def stream(seed, *key):
    """Generator for (seed, *key); the same arguments always give the same stream."""
    parts = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(k) & 0xFFFFFFFF for k in key]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(parts)))
