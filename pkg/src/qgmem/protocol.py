"""The two-player game protocol: initial entangled state, three-parameter
strategy unitaries, the arbiter's entangled measurement, and trace-rule
payoffs.

Conventions (fixed package-wide):

* two-qubit basis order |00>, |01>, |10>, |11>;
* payoff-table entries are always passed in the order
  ($_00, $_01, $_10, $_11);
* angles are radians; gamma and delta live in [0, pi/2], theta in [0, pi],
  alpha and beta in [-pi, pi].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .qmat import dagger, mat_trace

_IMAG_RESIDUE_TOL = 1e-10


@dataclass(frozen=True)
class StrategyParams:
    """One player's unitary move, U = cos(theta/2) R + sin(theta/2) P.

    R is the phase move (R|0> = e^{i alpha}|0>, R|1> = e^{-i alpha}|1>),
    P the flip move (P|0> = e^{i(pi/2 - beta)}|1>, P|1> = e^{i(pi/2 + beta)}|0>).
    """

    theta: float
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must be in [0, pi], got {self.theta}")
        if not -math.pi <= self.alpha <= math.pi:
            raise ValueError(f"alpha must be in [-pi, pi], got {self.alpha}")
        if not -math.pi <= self.beta <= math.pi:
            raise ValueError(f"beta must be in [-pi, pi], got {self.beta}")

    @classmethod
    def classical(cls, theta: float) -> "StrategyParams":
        """A player restricted to the classical mixture axis (alpha=beta=0)."""
        return cls(theta, 0.0, 0.0)


@dataclass(frozen=True)
class EntanglementParams:
    """Entanglement angles: gamma for the initial state, delta for the
    measurement basis."""

    gamma: float
    delta: float

    def __post_init__(self):
        if not 0.0 <= self.gamma <= math.pi / 2:
            raise ValueError(f"gamma must be in [0, pi/2], got {self.gamma}")
        if not 0.0 <= self.delta <= math.pi / 2:
            raise ValueError(f"delta must be in [0, pi/2], got {self.delta}")


def initial_state(gamma: float) -> np.ndarray:
    """Arbiter's initial state cos(gamma/2)|00> + i sin(gamma/2)|11>."""
    if not 0.0 <= gamma <= math.pi / 2:
        raise ValueError(f"gamma must be in [0, pi/2], got {gamma}")
    psi = np.zeros(4, dtype=complex)
    psi[0] = math.cos(gamma / 2)
    psi[3] = 1j * math.sin(gamma / 2)
    return psi


def initial_density(gamma: float) -> np.ndarray:
    psi = initial_state(gamma)
    return np.outer(psi, psi.conj())


def strategy_unitary(s: StrategyParams) -> np.ndarray:
    """2x2 unitary for one player's move, global phase taken literally."""
    c = math.cos(s.theta / 2)
    t = math.sin(s.theta / 2)
    return np.array(
        [
            [c * np.exp(1j * s.alpha), t * np.exp(1j * (math.pi / 2 + s.beta))],
            [t * np.exp(1j * (math.pi / 2 - s.beta)), c * np.exp(-1j * s.alpha)],
        ],
        dtype=complex,
    )


def measurement_basis(delta: float) -> np.ndarray:
    """The four entangled measurement vectors as rows, ordered 00,01,10,11.

    |v_00> = cos(d/2)|00> + i sin(d/2)|11>     |v_11> = cos(d/2)|11> + i sin(d/2)|00>
    |v_01> = cos(d/2)|01> - i sin(d/2)|10>     |v_10> = cos(d/2)|10> - i sin(d/2)|01>
    """
    if not 0.0 <= delta <= math.pi / 2:
        raise ValueError(f"delta must be in [0, pi/2], got {delta}")
    c = math.cos(delta / 2)
    s = math.sin(delta / 2)
    return np.array(
        [
            [c, 0, 0, 1j * s],
            [0, c, -1j * s, 0],
            [0, -1j * s, c, 0],
            [1j * s, 0, 0, c],
        ],
        dtype=complex,
    )


def payoff_projectors(delta: float) -> list[np.ndarray]:
    """Rank-1 projectors onto the measurement basis, ordered 00,01,10,11.

    They are mutually orthogonal and sum to the identity for every delta.
    """
    basis = measurement_basis(delta)
    return [np.outer(v, v.conj()) for v in basis]


def payoff_operator(delta: float, entries: Sequence[float]) -> np.ndarray:
    """Hermitian observable sum_ij $_ij |v_ij><v_ij| for one player.

    ``entries`` is the player's payoff column ($_00, $_01, $_10, $_11); the
    operator's eigenvalues are exactly these four numbers.
    """
    if len(entries) != 4:
        raise ValueError(f"expected 4 payoff entries, got {len(entries)}")
    projectors = payoff_projectors(delta)
    out = np.zeros((4, 4), dtype=complex)
    for value, proj in zip(entries, projectors):
        out += value * proj
    return out


def noiseless_final_state(
    gamma: float, s1: StrategyParams, s2: StrategyParams
) -> np.ndarray:
    """Density matrix after both strategies, with no channel noise."""
    u = np.kron(strategy_unitary(s1), strategy_unitary(s2))
    return u @ initial_density(gamma) @ dagger(u)


def measure_payoff(payoff_op: np.ndarray, rho: np.ndarray) -> float:
    """Tr(P rho) as a real payoff.

    The trace of a Hermitian observable against a density matrix is real up
    to round-off; an imaginary residue beyond 1e-10 signals an invalid input
    and raises instead of being silently discarded.
    """
    value = mat_trace(payoff_op @ rho)
    if abs(value.imag) > _IMAG_RESIDUE_TOL:
        raise ArithmeticError(
            f"payoff trace has imaginary residue {value.imag:.3e}; "
            "inputs are not a Hermitian observable and a density matrix"
        )
    return value.real
