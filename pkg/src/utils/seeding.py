from typing import List

import numpy as np


def restart_generators(seed: int, restarts: int) -> List[np.random.Generator]:
    """
    One independent PCG64 stream per restart.

    Stream-splitting rule: restart r draws from the r-th child of
    ``numpy.random.SeedSequence(seed).spawn(restarts)``. The children depend only
    on (seed, r), so a restart's samples do not change with the restart count
    or the order restarts are executed in.
    """
    children = np.random.SeedSequence(seed).spawn(restarts)
    return [np.random.Generator(np.random.PCG64(child)) for child in children]


def generator(seed: int) -> np.random.Generator:
    """Single PCG64 stream for one-off sampling (oracle starts, property tests)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
