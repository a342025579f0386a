import numpy as np


SCALE_STAGE = 0
RECOVERY_STAGE = 1


def stream_for(seed, *keys):
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [int(key) for key in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))
