"""Command-line front end: single payoffs, oracle-vs-closed-form checks,
parameter sweeps, figure-data CSVs, and equilibrium case studies.

Exit codes: 0 success, 2 usage or range error, 3 unsupported configuration,
4 verification or certificate failure.  All output is deterministic: CSV
files are byte-identical across runs for the same inputs.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from dataclasses import dataclass, field

from .channels import ChannelKind, ChannelSpec
from .closedform import Pairing, closed_payoff, closed_payoff_pair
from .equilibrium import CASE_IDS, StrategySpace, case_study
from .games import Bimatrix, builtin_game
from .oracle import two_pass_state
from .protocol import (EntanglementParams, StrategyParams, measure_payoff,
                       payoff_operator)

CSV_HEADER = ("game,pairing,p1,mu1,p2,mu2,gamma,delta,"
              "theta1,alpha1,beta1,theta2,alpha2,beta2,payoff_a,payoff_b")

USAGE_ERROR, UNSUPPORTED, VERIFY_FAIL = 2, 3, 4


def parse_angle(text: str) -> float:
    """Angles are radians; the literals pi, pi/2, -pi, pi/4 ... are accepted."""
    token = text.strip().lower().replace(" ", "")
    sign = 1.0
    if token.startswith(("-", "+")):
        sign = -1.0 if token[0] == "-" else 1.0
        token = token[1:]
    if token == "pi":
        return sign * math.pi
    if token.startswith("pi/"):
        return sign * math.pi / float(token[3:])
    return sign * float(token)


def fmt(value: float) -> str:
    """12-significant-digit decimal formatting used everywhere."""
    return f"{value:.12g}"


def make_row(game_name, pairing, p1, mu1, p2, mu2, ent, s1, s2, pa, pb) -> str:
    cells = [game_name, pairing.value] + [
        fmt(v) for v in (p1, mu1, p2, mu2, ent.gamma, ent.delta,
                         s1.theta, s1.alpha, s1.beta,
                         s2.theta, s2.alpha, s2.beta, pa, pb)
    ]
    return ",".join(cells)


# --------------------------------------------------------------------------
# payoff
# --------------------------------------------------------------------------
def cmd_payoff(args) -> int:
    game = builtin_game(args.game)
    pairing = Pairing.from_string(args.pairing)
    ent = EntanglementParams(args.gamma, args.delta)
    s1 = StrategyParams(args.theta1, args.alpha1, args.beta1)
    s2 = StrategyParams(args.theta2, args.alpha2, args.beta2)
    pa, pb = closed_payoff_pair(pairing, game, ent, s1, s2,
                                (args.p1, args.mu1), (args.p2, args.mu2))
    print(f"payoff_a={fmt(pa)} payoff_b={fmt(pb)}")
    return 0


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------
def cmd_verify(args) -> int:
    pairing = Pairing.from_string(args.pairing)
    # Deterministic tuples from the stdlib Mersenne Twister; random() streams
    # are stable across Python versions for a fixed integer seed.
    rng = random.Random(args.seed)
    worst = 0.0
    for _ in range(args.samples):
        entries = tuple(rng.uniform(-2.0, 5.0) for _ in range(4))
        ent = EntanglementParams(rng.uniform(0, math.pi / 2),
                                 rng.uniform(0, math.pi / 2))
        s1 = StrategyParams(rng.uniform(0, math.pi),
                            rng.uniform(-math.pi, math.pi),
                            rng.uniform(-math.pi, math.pi))
        s2 = StrategyParams(rng.uniform(0, math.pi),
                            rng.uniform(-math.pi, math.pi),
                            rng.uniform(-math.pi, math.pi))
        cps = []
        for kind in (pairing.first, pairing.second):
            mu = rng.random()
            if args.mu_zero and kind is ChannelKind.AMPLITUDE_DAMPING:
                mu = 0.0
            cps.append((rng.random(), mu))
        (p1, m1), (p2, m2) = cps
        closed = closed_payoff(pairing, entries, ent, s1, s2, (p1, m1), (p2, m2))
        rho = two_pass_state(ent, s1, s2,
                             ChannelSpec(pairing.first, p1, m1),
                             ChannelSpec(pairing.second, p2, m2))
        simulated = measure_payoff(payoff_operator(ent.delta, entries), rho)
        worst = max(worst, abs(closed - simulated))
    print(f"pairing={pairing.value} samples={args.samples} seed={args.seed} "
          f"max_abs_diff={worst:.3e} tol={args.tol:.3e}")
    return 0 if worst <= args.tol else VERIFY_FAIL


# --------------------------------------------------------------------------
# sweep
# --------------------------------------------------------------------------
SWEEPABLE = ("p1", "mu1", "p2", "mu2", "theta2", "alpha2", "beta2")


@dataclass
class SweepConfig:
    game: Bimatrix
    pairing: Pairing
    gamma: float = 0.0
    delta: float = 0.0
    theta1: float = 0.0
    alpha1: float = 0.0
    beta1: float = 0.0
    theta2: float = 0.0
    alpha2: float = 0.0
    beta2: float = 0.0
    p1: float = 0.0
    mu1: float = 0.0
    p2: float = 0.0
    mu2: float = 0.0
    output: str = "sweep.csv"
    axes: list[tuple[str, list[float]]] = field(default_factory=list)


def parse_sweep_config(text: str) -> SweepConfig:
    """Flat key=value lines with # comments; axes as ``sweep.mu1 = 0:1:11``."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key = value")
        key, _, val = line.partition("=")
        values[key.strip()] = val.strip()

    if values.get("game", "") == "custom":
        entries_a = [float(x) for x in values.pop("entries_a").split(",")]
        entries_b = [float(x) for x in values.pop("entries_b").split(",")]
        if len(entries_a) != 4 or len(entries_b) != 4:
            raise ValueError("custom game needs 4 entries per player")
        game = Bimatrix("custom", tuple(entries_a), tuple(entries_b))
    else:
        game = builtin_game(values["game"])
    cfg = SweepConfig(game=game, pairing=Pairing.from_string(values["pairing"]))

    angle_keys = {"gamma", "delta", "theta1", "alpha1", "beta1",
                  "theta2", "alpha2", "beta2"}
    for key, val in values.items():
        if key in ("game", "pairing"):
            continue
        if key.startswith("sweep."):
            axis = key[len("sweep."):]
            if axis not in SWEEPABLE:
                raise ValueError(f"cannot sweep {axis!r}; choose from {SWEEPABLE}")
            parts = val.split(":")
            if len(parts) != 3:
                raise ValueError(f"axis {axis}: expected start:stop:steps, got {val!r}")
            start, stop = parse_angle(parts[0]), parse_angle(parts[1])
            steps = int(parts[2])
            if steps < 2:
                raise ValueError(f"axis {axis}: steps must be >= 2")
            grid = [start + (stop - start) * i / (steps - 1) for i in range(steps)]
            cfg.axes.append((axis, grid))
        elif key == "output":
            cfg.output = val
        elif key in angle_keys:
            setattr(cfg, key, parse_angle(val))
        elif key in ("p1", "mu1", "p2", "mu2"):
            setattr(cfg, key, float(val))
        else:
            raise ValueError(f"unknown config key {key!r}")
    if not cfg.axes:
        raise ValueError("at least one sweep.<axis> line is required")
    cfg.axes.sort(key=lambda ax: SWEEPABLE.index(ax[0]))
    return cfg


def run_sweep(cfg: SweepConfig) -> list[str]:
    """Rows in lexicographic axis order (canonical axis order, last fastest)."""
    rows = []

    def recurse(i: int, point: dict):
        if i == len(cfg.axes):
            ent = EntanglementParams(cfg.gamma, cfg.delta)
            s1 = StrategyParams(point["theta1"], point["alpha1"], point["beta1"])
            s2 = StrategyParams(point["theta2"], point["alpha2"], point["beta2"])
            pa, pb = closed_payoff_pair(cfg.pairing, cfg.game, ent, s1, s2,
                                        (point["p1"], point["mu1"]),
                                        (point["p2"], point["mu2"]))
            rows.append(make_row(cfg.game.name, cfg.pairing, point["p1"],
                                 point["mu1"], point["p2"], point["mu2"],
                                 ent, s1, s2, pa, pb))
            return
        name, grid = cfg.axes[i]
        for value in grid:
            recurse(i + 1, {**point, name: value})

    base = {k: getattr(cfg, k) for k in
            ("p1", "mu1", "p2", "mu2", "theta1", "alpha1", "beta1",
             "theta2", "alpha2", "beta2")}
    recurse(0, base)
    return rows


def write_csv(path: str, rows: list[str]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(row + "\n")


def cmd_sweep(args) -> int:
    with open(args.config) as fh:
        cfg = parse_sweep_config(fh.read())
    rows = run_sweep(cfg)
    write_csv(cfg.output, rows)
    print(f"wrote {len(rows)} rows to {cfg.output}")
    return 0


# --------------------------------------------------------------------------
# figure
# --------------------------------------------------------------------------
PI = math.pi

# One entry per figure: entanglement, strategies, and the curve groups
# (game, pairing, p) in plotting order; mu is swept 0..1 in 101 steps.
FIGURES = {
    2: dict(ent=(0.0, 0.0), s1=(0.0, 0.0, 0.0), s2=(PI / 2, PI / 2, 0.0),
            groups=[(g, "ad-ad", p) for g in ("pd", "bos", "chicken")
                    for p in (0.8, 0.2)]),
    3: dict(ent=(PI / 2, 0.0), s1=(PI / 2, 0.0, 0.0), s2=(PI / 2, PI / 2, 0.0),
            groups=[(g, "ad-ad", p) for g in ("pd", "chicken")
                    for p in (0.8, 0.2)]),
    4: dict(ent=(PI / 2, 0.0), s1=(0.0, 0.0, 0.0), s2=(PI / 2, PI / 2, 0.0),
            groups=[("bos", pr, 0.5) for pr in ("ad-ad", "d-ad", "ph-ad")]),
    5: dict(ent=(0.0, PI / 2), s1=(0.0, 0.0, 0.0), s2=(PI / 2, 0.0, PI / 2),
            groups=[("bos", pr, 0.5) for pr in ("ad-ad", "d-ad", "ph-ad")]),
    6: dict(ent=(PI / 2, PI / 2), s1=(0.0, 0.0, 0.0), s2=(PI / 2, PI / 2, 0.0),
            groups=[(g, "ad-ad", 0.5) for g in ("pd", "bos", "chicken")]),
    7: dict(ent=(PI / 2, PI / 2), s1=(0.0, 0.0, 0.0), s2=(PI / 2, PI / 2, 0.0),
            groups=[(g, "d-d", 0.5) for g in ("pd", "bos", "chicken")]),
}

FIGURE_MU_STEPS = 101


def figure_rows(figure_id: int) -> list[str]:
    spec = FIGURES[figure_id]
    ent = EntanglementParams(*spec["ent"])
    s1 = StrategyParams(*spec["s1"])
    s2 = StrategyParams(*spec["s2"])
    rows = []
    for game_name, pairing_name, p in spec["groups"]:
        game = builtin_game(game_name)
        pairing = Pairing.from_string(pairing_name)
        for i in range(FIGURE_MU_STEPS):
            mu = i / (FIGURE_MU_STEPS - 1)
            pa, pb = closed_payoff_pair(pairing, game, ent, s1, s2,
                                        (p, mu), (p, mu))
            rows.append(make_row(game_name, pairing, p, mu, p, mu,
                                 ent, s1, s2, pa, pb))
    return rows


def cmd_figure(args) -> int:
    if args.id not in FIGURES:
        print(f"unknown figure id {args.id}; choose from {sorted(FIGURES)}",
              file=sys.stderr)
        return USAGE_ERROR
    path = f"{args.outdir}/figure{args.id}.csv"
    rows = figure_rows(args.id)
    write_csv(path, rows)
    print(f"wrote {len(rows)} rows to {path}")
    return 0


# --------------------------------------------------------------------------
# nash
# --------------------------------------------------------------------------
def cmd_nash(args) -> int:
    if args.case not in CASE_IDS:
        print(f"unknown case id {args.case!r}; choose from {CASE_IDS}",
              file=sys.stderr)
        return USAGE_ERROR
    space = None
    if args.grid:
        try:
            t, a, b = (int(x) for x in args.grid.lower().split("x"))
        except ValueError:
            print(f"bad grid spec {args.grid!r}; expected TxAxB", file=sys.stderr)
            return USAGE_ERROR
        space = StrategySpace(t, a, b)
    report = case_study(args.case, quantum_space=space) if space \
        else case_study(args.case)
    print("\n".join(report.lines()))
    if args.csv:
        header = "case,pairing,game,p,mu,payoff_a,payoff_b,gain_a,gain_b"
        with open(args.csv, "w", newline="") as fh:
            fh.write(header + "\n")
            for r in report.gain_rows:
                fh.write(",".join([r["case"], r["pairing"], r["game"]]
                                  + [fmt(r[k]) for k in
                                     ("p", "mu", "payoff_a", "payoff_b",
                                      "gain_a", "gain_b")]) + "\n")
        print(f"wrote {len(report.gain_rows)} gain rows to {args.csv}")
    return 0 if report.nash_certified else VERIFY_FAIL


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgmem",
        description="Two-player quantum games over noisy channels with memory.")
    sub = parser.add_subparsers(dest="command", required=True)

    pay = sub.add_parser("payoff", help="closed-form payoff at one point")
    pay.add_argument("--game", required=True, choices=("pd", "bos", "chicken"))
    pay.add_argument("--pairing", required=True)
    for name in ("gamma", "delta", "theta1", "alpha1", "beta1",
                 "theta2", "alpha2", "beta2"):
        required = name in ("gamma", "delta", "theta1", "theta2")
        pay.add_argument(f"--{name}", type=parse_angle,
                         required=required, default=0.0)
    for name in ("p1", "mu1", "p2", "mu2"):
        pay.add_argument(f"--{name}", type=float, required=True)
    pay.set_defaults(func=cmd_payoff)

    ver = sub.add_parser("verify", help="closed form vs Kraus-oracle check")
    ver.add_argument("--pairing", required=True)
    ver.add_argument("--samples", type=int, default=200)
    ver.add_argument("--seed", type=int, default=42)
    ver.add_argument("--tol", type=float, default=1e-9)
    ver.add_argument("--mu-zero", action="store_true",
                     help="restrict amplitude-damping slots to mu = 0")
    ver.set_defaults(func=cmd_verify)

    swp = sub.add_parser("sweep", help="CSV sweep from a key=value config file")
    swp.add_argument("--config", required=True)
    swp.set_defaults(func=cmd_sweep)

    fig = sub.add_parser("figure", help="emit one figure's data as CSV")
    fig.add_argument("--id", type=int, required=True)
    fig.add_argument("--outdir", default=".")
    fig.set_defaults(func=cmd_figure)

    nsh = sub.add_parser("nash", help="equilibrium case study and certificates")
    nsh.add_argument("--case", required=True)
    nsh.add_argument("--grid", default=None, help="quantum grid as TxAxB")
    nsh.add_argument("--csv", default=None, help="write gain rows to CSV")
    nsh.set_defaults(func=cmd_nash)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
