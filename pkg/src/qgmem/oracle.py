"""Brute-force density-matrix simulation of the full game round, used as
ground truth against the closed-form payoffs.

The round is: arbiter prepares the entangled pair, the pair crosses channel
1 (its two qubits are that channel's two correlated uses), the players apply
their local unitaries, the pair crosses channel 2, the arbiter measures.
Nothing here shares code with the closed-form expressions; the only common
ground is the protocol primitives (state, unitaries, payoff operators) and
the Kraus families themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import ChannelSpec, apply_channel, two_use_kraus
from .games import Bimatrix
from .protocol import (
    EntanglementParams,
    StrategyParams,
    initial_density,
    measure_payoff,
    payoff_operator,
    strategy_unitary,
)
from .qmat import dagger


@dataclass(frozen=True)
class GameConfig:
    """One fully specified experiment point."""

    game: Bimatrix
    ch1: ChannelSpec
    ch2: ChannelSpec
    ent: EntanglementParams
    s1: StrategyParams
    s2: StrategyParams


def two_pass_state(
    ent: EntanglementParams,
    s1: StrategyParams,
    s2: StrategyParams,
    ch1: ChannelSpec,
    ch2: ChannelSpec,
) -> np.ndarray:
    """Final 4x4 density matrix after channel 1, the strategies, channel 2.

    The branch sum is evaluated in a fixed order (channel-1 outer Kraus
    index, channel-2 inner, both index-lexicographic as constructed), so
    results are bit-deterministic.
    """
    rho = initial_density(ent.gamma)
    rho = apply_channel(two_use_kraus(ch1), rho)
    u = np.kron(strategy_unitary(s1), strategy_unitary(s2))
    rho = u @ rho @ dagger(u)
    rho = apply_channel(two_use_kraus(ch2), rho)
    return rho


def oracle_payoffs(cfg: GameConfig) -> tuple[float, float]:
    """(Alice, Bob) payoffs of the simulated round."""
    rho = two_pass_state(cfg.ent, cfg.s1, cfg.s2, cfg.ch1, cfg.ch2)
    pa = measure_payoff(payoff_operator(cfg.ent.delta, cfg.game.a), rho)
    pb = measure_payoff(payoff_operator(cfg.ent.delta, cfg.game.b), rho)
    return pa, pb
