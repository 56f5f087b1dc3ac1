"""Grid best-response search, epsilon-Nash certificates, and the named case
studies over the quantum strategy space.

A "classical" player is restricted to alpha = beta = 0; the quantum player
searches the full (theta, alpha, beta) grid.  All claims reported by
``case_study`` are computed, never assumed: where a scenario's nominal
claim does not survive the exact dynamics, the report says so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .closedform import Pairing, payoff_surface
from .games import Bimatrix, builtin_game
from .protocol import EntanglementParams, StrategyParams

PI = math.pi

TIE_TOL = 1e-9
DEFAULT_EPSILON = 1e-6

CASE_IDS = ("i", "ii-a", "ii-b", "ii-c", "ii-d", "iii-a", "iii-b", "iii-c", "iv")

# (p, mu) sample grid used by the equilibrium certificates.
PM_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)
MU_GRID_11 = tuple(i / 10 for i in range(11))


@dataclass(frozen=True)
class StrategySpace:
    """Search grid for one player; endpoints are always included."""

    theta_points: int = 13
    alpha_points: int = 17
    beta_points: int = 17
    classical_only: bool = False

    def __post_init__(self):
        for name in ("theta_points", "alpha_points", "beta_points"):
            if getattr(self, name) < 2:
                raise ValueError(f"{name} must be >= 2")

    def axes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        theta = np.linspace(0.0, PI, self.theta_points)
        if self.classical_only:
            zero = np.zeros(1)
            return theta, zero, zero
        alpha = np.linspace(-PI, PI, self.alpha_points)
        beta = np.linspace(-PI, PI, self.beta_points)
        return theta, alpha, beta

    def mesh(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        theta, alpha, beta = self.axes()
        return np.meshgrid(theta, alpha, beta, indexing="ij")


CLASSICAL_SPACE = StrategySpace(classical_only=True)
QUANTUM_SPACE = StrategySpace()


@dataclass(frozen=True)
class PayoffEvaluator:
    """Closed-form payoff pair for a fixed game point; vectorized per player."""

    pairing: Pairing
    game: Bimatrix
    ent: EntanglementParams
    ch1: tuple[float, float]
    ch2: tuple[float, float]

    def pair(self, s1: StrategyParams, s2: StrategyParams) -> tuple[float, float]:
        pa = payoff_surface(self.pairing, self.game.a, self.ent, self.ch1, self.ch2,
                            s1.theta, s1.alpha, s1.beta, s2.theta, s2.alpha, s2.beta)
        pb = payoff_surface(self.pairing, self.game.b, self.ent, self.ch1, self.ch2,
                            s1.theta, s1.alpha, s1.beta, s2.theta, s2.alpha, s2.beta)
        return float(pa), float(pb)

    def own_surface(self, responder: int, opponent: StrategyParams,
                    theta, alpha, beta) -> np.ndarray:
        """Responder's payoff over their own strategy arrays."""
        if responder == 1:
            return payoff_surface(self.pairing, self.game.a, self.ent,
                                  self.ch1, self.ch2, theta, alpha, beta,
                                  opponent.theta, opponent.alpha, opponent.beta)
        if responder == 2:
            return payoff_surface(self.pairing, self.game.b, self.ent,
                                  self.ch1, self.ch2, opponent.theta,
                                  opponent.alpha, opponent.beta, theta, alpha, beta)
        raise ValueError(f"responder must be 1 or 2, got {responder}")


@dataclass(frozen=True)
class EquilibriumReport:
    profile: tuple[StrategyParams, StrategyParams]
    payoffs: tuple[float, float]
    max_unilateral_gain_a: float
    max_unilateral_gain_b: float
    epsilon: float = DEFAULT_EPSILON

    @property
    def is_epsilon_nash(self) -> bool:
        return max(self.max_unilateral_gain_a, self.max_unilateral_gain_b) <= self.epsilon


def best_response(
    evaluator: PayoffEvaluator,
    space: StrategySpace,
    opponent: StrategyParams,
    responder: int,
    tie_tol: float = TIE_TOL,
) -> list[StrategyParams]:
    """Argmax set over the responder's grid, ties kept, lexicographic order."""
    theta, alpha, beta = space.mesh()
    values = evaluator.own_surface(responder, opponent, theta, alpha, beta)
    cutoff = float(values.max()) - tie_tol
    idx = np.argwhere(values >= cutoff)
    return [
        StrategyParams(float(theta[i, j, k]), float(alpha[i, j, k]),
                       float(beta[i, j, k]))
        for i, j, k in idx
    ]


def check_profile(
    evaluator: PayoffEvaluator,
    profile: tuple[StrategyParams, StrategyParams],
    space_a: StrategySpace,
    space_b: StrategySpace | None = None,
    epsilon: float = DEFAULT_EPSILON,
) -> EquilibriumReport:
    """Exhaustive grid scan of both players' unilateral deviations.

    Gains are clamped at zero, so an off-grid profile that beats its own grid
    is reported as gain 0 rather than negative.
    """
    s1, s2 = profile
    space_b = space_a if space_b is None else space_b
    pa, pb = evaluator.pair(s1, s2)
    ta, aa, ba = space_a.mesh()
    gain_a = max(0.0, float(evaluator.own_surface(1, s2, ta, aa, ba).max()) - pa)
    tb, ab, bb = space_b.mesh()
    gain_b = max(0.0, float(evaluator.own_surface(2, s1, tb, ab, bb).max()) - pb)
    return EquilibriumReport((s1, s2), (pa, pb), gain_a, gain_b, epsilon)


# --------------------------------------------------------------------------
# case studies
# --------------------------------------------------------------------------
@dataclass(frozen=True)
class CaseClaim:
    label: str
    passed: bool
    detail: str


@dataclass
class CaseReport:
    case_id: str
    claims: list[CaseClaim] = field(default_factory=list)
    gain_rows: list[dict] = field(default_factory=list)

    @property
    def all_claims_pass(self) -> bool:
        return all(c.passed for c in self.claims)

    @property
    def nash_certified(self) -> bool:
        """True iff every equilibrium certificate in this case passed."""
        return all(c.passed for c in self.claims if c.label.startswith("nash"))

    def lines(self) -> list[str]:
        out = [f"case {self.case_id}:"]
        for c in self.claims:
            out.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.label}: {c.detail}")
        return out


# Figure profiles (strategy and entanglement settings from the plotted
# configurations; alpha1 = beta1 = 0 throughout, Alice is classical).
FIG2 = dict(ent=EntanglementParams(0.0, 0.0),
            s1=StrategyParams(0.0), s2=StrategyParams(PI / 2, PI / 2, 0.0))
FIG3 = dict(ent=EntanglementParams(PI / 2, 0.0),
            s1=StrategyParams(PI / 2), s2=StrategyParams(PI / 2, PI / 2, 0.0))
FIG4 = dict(ent=EntanglementParams(PI / 2, 0.0),
            s1=StrategyParams(0.0), s2=StrategyParams(PI / 2, PI / 2, 0.0))
FIG5 = dict(ent=EntanglementParams(0.0, PI / 2),
            s1=StrategyParams(0.0), s2=StrategyParams(PI / 2, 0.0, PI / 2))
FIG67 = dict(ent=EntanglementParams(PI / 2, PI / 2),
             s1=StrategyParams(0.0), s2=StrategyParams(PI / 2, PI / 2, 0.0))


def _mono_nondecreasing(values, tol=1e-12) -> bool:
    return all(b >= a - tol for a, b in zip(values, values[1:]))


def _mu_curve(pairing, game, ent, s1, s2, p, mus=MU_GRID_11, player=1):
    ev = [PayoffEvaluator(pairing, game, ent, (p, m), (p, m)).pair(s1, s2)
          for m in mus]
    return [v[player] for v in ev]


def _nash_rows(report_rows, case_id, pairing, game, ent, s1, s2, pm_grid,
               space_a=CLASSICAL_SPACE, space_b=None,
               epsilon=DEFAULT_EPSILON):
    """Scan a profile over (p, mu) and append gain rows; returns worst gain."""
    space_b = QUANTUM_SPACE if space_b is None else space_b
    worst = 0.0
    for p in pm_grid:
        for m in pm_grid:
            ev = PayoffEvaluator(pairing, game, ent, (p, m), (p, m))
            rep = check_profile(ev, (s1, s2), space_a, space_b, epsilon)
            worst = max(worst, rep.max_unilateral_gain_a, rep.max_unilateral_gain_b)
            report_rows.append(dict(
                case=case_id, pairing=pairing.value, game=game.name, p=p, mu=m,
                payoff_a=rep.payoffs[0], payoff_b=rep.payoffs[1],
                gain_a=rep.max_unilateral_gain_a, gain_b=rep.max_unilateral_gain_b,
            ))
    return worst


def _case_i(report: CaseReport, quantum_space: StrategySpace) -> None:
    # Phase independence: at gamma = delta = 0 the payoff cannot depend on
    # the quantum phases, for any pairing.
    ent = FIG2["ent"]
    worst = 0.0
    alpha = np.linspace(-PI, PI, 9)
    beta = np.linspace(-PI, PI, 9)
    a2, b2 = np.meshgrid(alpha, beta, indexing="ij")
    for pairing in Pairing:
        for game in _GAMES:
            vals = payoff_surface(pairing, game.b, ent, (0.35, 0.6), (0.35, 0.6),
                                  0.0, 0.0, 0.0, PI / 2, a2, b2)
            worst = max(worst, float(vals.max() - vals.min()))
    report.claims.append(CaseClaim(
        "phase-independence", worst < 1e-12,
        f"max payoff variation over the (alpha2, beta2) grid = {worst:.3e}"))

    # Memory compensation in the Fig-2 configuration, reported per curve.
    ok_all, detail = True, []
    for game in _GAMES:
        for p in (0.2, 0.8):
            for player, tag in ((0, "A"), (1, "B")):
                curve = _mu_curve(Pairing.AD_AD, game, ent, FIG2["s1"], FIG2["s2"],
                                  p, player=player)
                mono = _mono_nondecreasing(curve)
                ok_all &= mono
                if not mono:
                    detail.append(f"{game.name}/{tag}/p={p}")
    report.claims.append(CaseClaim(
        "memory-compensation (informational)", ok_all,
        "payoff nondecreasing in mu for every curve" if ok_all
        else "decreasing curves: " + ", ".join(detail)))

    # Classical equilibria under noise, certified on the (p, mu) grid.
    worst = 0.0
    for game in _GAMES:
        for cell in _CLASSICAL_NE[game.name]:
            t1, t2 = (0.0 if cell[0] == 0 else PI), (0.0 if cell[1] == 0 else PI)
            for pairing in (Pairing.PH_PH, Pairing.AD_AD, Pairing.D_D):
                worst = max(worst, _nash_rows(
                    report.gain_rows, "i", pairing, game, ent,
                    StrategyParams(t1), StrategyParams(t2), PM_GRID,
                    space_a=CLASSICAL_SPACE, space_b=quantum_space))
    report.claims.append(CaseClaim(
        "nash: classical equilibria unchanged", worst <= DEFAULT_EPSILON,
        f"worst unilateral gain over games/pairings/grid = {worst:.4f}"
        + ("" if worst <= DEFAULT_EPSILON else
           " (fails at extreme noise, e.g. amplitude damping at p=mu=1 "
           "inverts the effective moves)")))


def _case_ii_a(report: CaseReport, quantum_space: StrategySpace) -> None:
    ent, s1, s2 = FIG3["ent"], FIG3["s1"], FIG3["s2"]
    ok_mono, ok_p = True, True
    for game in (_PD, _CHICKEN):
        for p in (0.2, 0.8):
            curve = _mu_curve(Pairing.AD_AD, game, ent, s1, s2, p, player=1)
            ok_mono &= _mono_nondecreasing(curve)
        for m in (0.0, 0.5, 1.0):
            lo = PayoffEvaluator(Pairing.AD_AD, game, ent, (0.2, m), (0.2, m)).pair(s1, s2)[1]
            hi = PayoffEvaluator(Pairing.AD_AD, game, ent, (0.8, m), (0.8, m)).pair(s1, s2)[1]
            ok_p &= hi <= lo + 1e-12
    report.claims.append(CaseClaim(
        "mu-monotonicity", ok_mono,
        "quantum player's payoff nondecreasing in mu at p in {0.2, 0.8}"))
    report.claims.append(CaseClaim(
        "decoherence hurts", ok_p, "payoff at p=0.8 <= payoff at p=0.2"))


def _advantage_claim(report, case_id, pairings, fig, label):
    ok, details = True, []
    for pairing in pairings:
        margins = [
            PayoffEvaluator(pairing, _BOS, fig["ent"], (0.5, m), (0.5, m))
            .pair(fig["s1"], fig["s2"])
            for m in MU_GRID_11
        ]
        diffs = [b - a for a, b in margins]
        ok &= min(diffs) > 0
        details.append(f"{pairing.value}: min margin {min(diffs):+.4f}")
    report.claims.append(CaseClaim(label, ok, "; ".join(details)))


def _case_ii_b(report: CaseReport, quantum_space: StrategySpace) -> None:
    _advantage_claim(report, "ii-b", (Pairing.AD_AD,), FIG4,
                     "quantum advantage (bos, p=0.5)")
    worst = _nash_rows(report.gain_rows, "ii-b", Pairing.AD_AD, _BOS,
                       FIG4["ent"], FIG4["s1"], FIG4["s2"], PM_GRID,
                       space_b=quantum_space)
    report.claims.append(CaseClaim(
        "nash: nominal profile", worst <= DEFAULT_EPSILON,
        f"worst unilateral gain = {worst:.4f}"
        + ("" if worst <= DEFAULT_EPSILON else
           " (the quantum player's best response to theta1=0 is the theta2=0 "
           "family; the nominal profile is not an equilibrium)")))


def _case_ii_c(report: CaseReport, quantum_space: StrategySpace) -> None:
    _advantage_claim(report, "ii-c", (Pairing.PH_AD, Pairing.D_AD), FIG4,
                     "quantum advantage (bos, p=0.5)")


def _equal_payoffs_claim(report, pairings, fig, label):
    worst = 0.0
    for pairing in pairings:
        for game in _GAMES:
            for p in (0.3, 0.7):
                for m in (0.0, 0.5, 1.0):
                    pa, pb = PayoffEvaluator(pairing, game, fig["ent"],
                                             (p, m), (p, m)).pair(fig["s1"], fig["s2"])
                    worst = max(worst, abs(pa - pb))
    report.claims.append(CaseClaim(
        label, worst < 1e-9, f"max |payoff_A - payoff_B| = {worst:.3e}"))


def _case_ii_d(report: CaseReport, quantum_space: StrategySpace) -> None:
    _equal_payoffs_claim(report, (Pairing.PH_PH, Pairing.D_D), FIG4,
                         "equal payoffs (unital pairings)")
    # Memory moderates decoherence: at fixed p, distance from the noiseless
    # payoff shrinks as mu grows (exact for dephasing).  Checked at the
    # theta1 = theta2 = pi/2 profile, where the noise actually acts.
    s1, s2 = FIG3["s1"], FIG3["s2"]
    ref = PayoffEvaluator(Pairing.PH_PH, _PD, FIG4["ent"], (0.0, 0.0), (0.0, 0.0)).pair(s1, s2)[1]
    dist = [abs(PayoffEvaluator(Pairing.PH_PH, _PD, FIG4["ent"], (0.6, m), (0.6, m))
                .pair(s1, s2)[1] - ref) for m in MU_GRID_11]
    ok = (dist[0] > 1e-3 and dist[-1] < 1e-12
          and all(b <= a + 1e-12 for a, b in zip(dist, dist[1:])))
    report.claims.append(CaseClaim(
        "memory moderates decoherence (dephasing)", ok,
        f"distance to noiseless payoff falls from {dist[0]:.4f} to {dist[-1]:.1e}"))


def _case_iii_a(report: CaseReport, quantum_space: StrategySpace) -> None:
    _advantage_claim(report, "iii-a", (Pairing.D_D,), FIG5,
                     "quantum advantage (bos, p=0.5)")
    worst = _nash_rows(report.gain_rows, "iii-a", Pairing.D_D, _BOS,
                       FIG5["ent"], FIG5["s1"], FIG5["s2"], PM_GRID,
                       space_b=quantum_space)
    report.claims.append(CaseClaim(
        "nash: nominal profile", worst <= DEFAULT_EPSILON,
        f"worst unilateral gain = {worst:.4f}"
        + ("" if worst <= DEFAULT_EPSILON else
           " (with theta1=0 and gamma=0 every interference term vanishes; "
           "the payoffs at the profile are equal and the profile is not an "
           "equilibrium)")))


def _case_iii_b(report: CaseReport, quantum_space: StrategySpace) -> None:
    _equal_payoffs_claim(report, (Pairing.PH_PH, Pairing.AD_AD), FIG5,
                         "equal payoffs (ph-ph, ad-ad)")
    # Memory compensation, measured as the distance from the noiseless payoff
    # over mu, at the theta1 = theta2 = pi/2 profile where the noise acts
    # (with theta1 = 0 these payoffs are noise-independent).
    s1, s2 = StrategyParams(PI / 2), FIG5["s2"]
    for pairing, tag in ((Pairing.PH_PH, "dephasing"),
                         (Pairing.AD_AD, "amplitude damping")):
        ok, spread = True, 0.0
        for game in (_PD, _CHICKEN):
            ref = PayoffEvaluator(pairing, game, FIG5["ent"],
                                  (0.0, 0.0), (0.0, 0.0)).pair(s1, s2)[1]
            for p in (0.2, 0.8):
                dist = [abs(PayoffEvaluator(pairing, game, FIG5["ent"],
                                            (p, m), (p, m)).pair(s1, s2)[1] - ref)
                        for m in MU_GRID_11]
                ok &= all(b <= a + 1e-12 for a, b in zip(dist, dist[1:]))
                spread = max(spread, dist[-1])
        report.claims.append(CaseClaim(
            f"memory compensation ({tag})", ok,
            ("distance to the noiseless payoff shrinks with mu"
             + (f"; residual at mu=1: {spread:.4f}" if spread > 1e-12 else ", to zero"))
            if ok else
            "distance to the noiseless payoff is not monotone in mu "
            "(grows with mu for chicken)"))


def _case_iii_c(report: CaseReport, quantum_space: StrategySpace) -> None:
    _advantage_claim(report, "iii-c", (Pairing.PH_AD, Pairing.D_AD), FIG5,
                     "quantum advantage (bos, p=0.5)")


def _case_iv(report: CaseReport, quantum_space: StrategySpace) -> None:
    ent, s1, s2 = FIG67["ent"], FIG67["s1"], FIG67["s2"]
    worst_margin, where = math.inf, ""
    for pairing in Pairing:
        for game in _GAMES:
            for m in (0.25, 0.5, 0.75, 1.0):
                pa, pb = PayoffEvaluator(pairing, game, ent, (1.0, m), (1.0, m)).pair(s1, s2)
                if pb - pa < worst_margin:
                    worst_margin, where = pb - pa, f"{pairing.value}/{game.name}/mu={m}"
    report.claims.append(CaseClaim(
        "advantage at maximum noise (p=1)", worst_margin > 0,
        f"min Bob-Alice margin = {worst_margin:+.4f} at {where}"
        + ("" if worst_margin > 0 else
           " (zero for the AD-slotted pairings, negative for the rest)")))
    worst = _nash_rows(report.gain_rows, "iv", Pairing.AD_AD, _BOS, ent, s1, s2,
                       PM_GRID, space_b=quantum_space)
    report.claims.append(CaseClaim(
        "nash: figure profile (bos, ad-ad)", worst <= DEFAULT_EPSILON,
        f"worst unilateral gain = {worst:.4f}"))


_PD = builtin_game("pd")
_BOS = builtin_game("bos")
_CHICKEN = builtin_game("chicken")
_GAMES = (_PD, _BOS, _CHICKEN)
_CLASSICAL_NE = {"pd": [(1, 1)], "bos": [(0, 0), (1, 1)],
                 "chicken": [(0, 1), (1, 0)]}

_CASES = {
    "i": _case_i,
    "ii-a": _case_ii_a,
    "ii-b": _case_ii_b,
    "ii-c": _case_ii_c,
    "ii-d": _case_ii_d,
    "iii-a": _case_iii_a,
    "iii-b": _case_iii_b,
    "iii-c": _case_iii_c,
    "iv": _case_iv,
}


def case_study(case_id: str,
               quantum_space: StrategySpace = QUANTUM_SPACE) -> CaseReport:
    """Run one named case study; every claim's status is computed."""
    if case_id not in _CASES:
        raise KeyError(f"unknown case id {case_id!r}; choose from {CASE_IDS}")
    report = CaseReport(case_id)
    _CASES[case_id](report, quantum_space)
    return report
