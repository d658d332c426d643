"""Seeded random corpora of states, unitaries and Hermitian generators."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.stats import unitary_group

from constants.enum import OperatorKind
from services.shared.types import HilbertShape, LocalUnitarySet, Operator, StateVector


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_state(dims: Sequence[int], rng: np.random.Generator) -> StateVector:
    """Haar-distributed pure state (normalized complex Gaussian draw)."""
    total = HilbertShape(tuple(dims)).total
    amps = rng.normal(size=total) + 1j * rng.normal(size=total)
    return StateVector.from_amplitudes(amps, dims, normalize=True)


def random_product_state(dims: Sequence[int], rng: np.random.Generator) -> StateVector:
    amps = np.ones(1, dtype=np.complex128)
    for d in dims:
        factor = rng.normal(size=d) + 1j * rng.normal(size=d)
        amps = np.kron(amps, factor / np.linalg.norm(factor))
    return StateVector.from_amplitudes(amps, dims, normalize=True)


def random_unitary(dim: int, rng: np.random.Generator) -> Operator:
    if dim == 1:
        matrix = np.array([[np.exp(2j * np.pi * rng.random())]])
    else:
        matrix = unitary_group.rvs(dim, random_state=rng)
    return Operator(HilbertShape((dim,)), matrix, OperatorKind.UNITARY)


def random_local_unitaries(dims: Sequence[int], rng: np.random.Generator) -> LocalUnitarySet:
    return LocalUnitarySet(tuple(random_unitary(d, rng) for d in dims))


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> Operator:
    raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return Operator(
        HilbertShape((dim,)), 0.5 * scale * (raw + raw.conj().T), OperatorKind.HERMITIAN
    )
