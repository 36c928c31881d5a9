"""Scalar activations with values and derivatives.

All supported activations vanish at zero and are 1-Lipschitz, so the
norm-based output bounds used elsewhere hold with unit Lipschitz factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class Activation:
    """A named activation: ``value(u)`` and pointwise derivative ``deriv(u)``."""

    name: str
    value: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    deriv: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    lipschitz: float = 1.0


def _relu(u):
    return np.maximum(u, 0.0)


def _relu_deriv(u):
    # derivative at 0 fixed to 0 so gradient flow stays well defined
    return np.where(u > 0.0, 1.0, 0.0)


def _tanh_deriv(u):
    t = np.tanh(u)
    return 1.0 - t * t


def _identity(u):
    return np.asarray(u, dtype=float)


def _identity_deriv(u):
    return np.ones_like(np.asarray(u, dtype=float))


_REGISTRY = {
    "relu": Activation("relu", _relu, _relu_deriv),
    "tanh": Activation("tanh", np.tanh, _tanh_deriv),
    "identity": Activation("identity", _identity, _identity_deriv),
}


def get_activation(name: str) -> Activation:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ValueError(
            f"unknown activation {name!r}; expected one of {sorted(_REGISTRY)}"
        ) from None
