import numpy as np
import pytest

import gcglasso as gg


@pytest.fixture
def band_sample():
    """Factory for a banded-truth pseudo-sample (model, ps)."""

    def make(d=8, n=60, seed=0, copula=True):
        model = gg.band_model(d)
        x = gg.sample_mvn(model, n, seed=seed)
        return model, gg.pseudo_sample(x, copula=copula)

    return make


def lam_max_of(s_tilde):
    off = np.abs(s_tilde - np.diag(np.diag(s_tilde)))
    return float(off.max())
