import hashlib

import numpy as np

__all__ = ('case_key', 'trial_generator', 'complex_normal')


def case_key(case_id: str) -> int:
    digest = hashlib.sha256(case_id.encode('utf-8')).digest()
    return int.from_bytes(digest[:8], 'little')


def trial_generator(seed_path) -> np.random.Generator:
    """Counter-based stream keyed on (master_seed, case_id, M, trial_index)."""
    master_seed, case_id, M, trial_index = seed_path
    sequence = np.random.SeedSequence([int(master_seed), case_key(str(case_id)), int(M), int(trial_index)])
    key = sequence.generate_state(2, dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    """Circularly symmetric complex Gaussian entries with unit variance."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
