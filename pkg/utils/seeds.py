import random

import xxhash

_MASK = (1 << 64) - 1


def derive_seed(seed: int, channel: str, k: int) -> int:
    """Seed of sample k on a channel: seed XOR xxh64("channel:k")."""
    return (seed ^ xxhash.xxh64_intdigest(f"{channel}:{k}")) & _MASK


def sample_rng(seed: int, channel: str, k: int) -> random.Random:
    return random.Random(derive_seed(seed, channel, k))
