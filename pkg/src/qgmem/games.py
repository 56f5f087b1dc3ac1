"""The three classical 2x2 games and a minimal classical solver."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Bimatrix:
    """A 2x2 bimatrix game.

    ``a`` and ``b`` hold Alice's and Bob's payoffs in the flat order
    (cell 00, 01, 10, 11), where index 0 is the first move named by the
    game (C for pd/chicken, O for bos) and the first index is Alice's row.
    """

    name: str
    a: tuple[float, float, float, float]
    b: tuple[float, float, float, float]

    def cell(self, i: int, j: int) -> tuple[float, float]:
        k = 2 * i + j
        return self.a[k], self.b[k]

    def swapped(self) -> "Bimatrix":
        """The same game with the players' roles exchanged."""

        def transpose(t):
            return (t[0], t[2], t[1], t[3])

        return Bimatrix(self.name + "-swapped", transpose(self.b), transpose(self.a))


_BUILTIN = {
    "pd": Bimatrix("pd", (3, 0, 5, 1), (3, 5, 0, 1)),
    "bos": Bimatrix("bos", (2, 0, 0, 1), (1, 0, 0, 2)),
    "chicken": Bimatrix("chicken", (3, 1, 4, 0), (3, 4, 1, 0)),
}


def builtin_game(name: str) -> Bimatrix:
    """Prisoner's Dilemma (``pd``), Battle of the Sexes (``bos``) or
    ``chicken``."""
    try:
        return _BUILTIN[name]
    except KeyError:
        raise KeyError(
            f"unknown game {name!r}; choose from {sorted(_BUILTIN)}"
        ) from None


def classical_pure_nash(g: Bimatrix) -> set[tuple[int, int]]:
    """All cells where neither player gains by a unilateral flip."""
    out = set()
    for i in (0, 1):
        for j in (0, 1):
            a_here, b_here = g.cell(i, j)
            a_flip, _ = g.cell(1 - i, j)
            _, b_flip = g.cell(i, 1 - j)
            if a_here >= a_flip and b_here >= b_flip:
                out.add((i, j))
    return out


def classical_expected(g: Bimatrix, x: float, y: float) -> tuple[float, float]:
    """Expected payoffs when Alice plays row 0 with probability x and Bob
    column 0 with probability y."""
    if not 0.0 <= x <= 1.0 or not 0.0 <= y <= 1.0:
        raise ValueError(f"x and y must be probabilities, got {x}, {y}")
    pa = 0.0
    pb = 0.0
    for i, wi in ((0, x), (1, 1.0 - x)):
        for j, wj in ((0, y), (1, 1.0 - y)):
            va, vb = g.cell(i, j)
            pa += wi * wj * va
            pb += wi * wj * vb
    return pa, pb


def theta_weight(theta: float) -> float:
    """Probability of move 0 for a classical player at angle theta."""
    return math.cos(theta / 2) ** 2
