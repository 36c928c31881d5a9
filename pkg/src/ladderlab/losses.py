"""Pointwise losses and their derivatives in the prediction argument."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class Loss:
    name: str
    value: Callable[[np.ndarray, np.ndarray], np.ndarray] = field(repr=False)
    deriv: Callable[[np.ndarray, np.ndarray], np.ndarray] = field(repr=False)


def _squared(yhat, y):
    r = yhat - y
    return 0.5 * r * r


def _squared_deriv(yhat, y):
    return yhat - y


def _logistic(yhat, y):
    # labels y in {-1, +1}; stable log(1 + exp(-y*yhat))
    return np.logaddexp(0.0, -y * yhat)


def _logistic_deriv(yhat, y):
    return -y / (1.0 + np.exp(y * yhat))


_REGISTRY = {
    "squared": Loss("squared", _squared, _squared_deriv),
    "logistic": Loss("logistic", _logistic, _logistic_deriv),
}


def get_loss(name: str) -> Loss:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ValueError(
            f"unknown loss {name!r}; expected one of {sorted(_REGISTRY)}"
        ) from None
