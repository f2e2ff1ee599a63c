"""Seedable random streams.

All randomness in the package flows through Philox counter-based generators
keyed by a 64-bit seed plus an integer path.  Distinct paths give independent
substreams, so sample budgets can be partitioned across workers while the
merged result stays identical for every partition.
"""

import numpy as np


def generator(seed, *path):
    """Return a fresh Philox generator for (seed, path).

    The same (seed, path) always yields the same stream, on every platform.
    """
    ss = np.random.SeedSequence(entropy=int(seed) & (2**64 - 1),
                                spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.Philox(ss))


def derive_seed(seed, *path):
    """Collapse (seed, path) into a single reproducible 64-bit seed."""
    ss = np.random.SeedSequence(entropy=int(seed) & (2**64 - 1),
                                spawn_key=tuple(int(p) for p in path))
    return int(ss.generate_state(1, dtype=np.uint64)[0])
