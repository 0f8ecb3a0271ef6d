"""XOR-gate and fanout cost ledger for the CRT encoder datapath."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .bch import BchCode
from .crt import CrtPlan
from .lfsr import Datapath, build_div_lfsr

STEP_NAMES = (
    "multiply by u_i",
    "divide by w_i",
    "multiply by w_i'",
    "sum r outputs",
)

# Published upper bounds on total XOR gates and division fanout, keyed by (t, K).
PUBLISHED_BOUNDS = {
    (11, 1926): {"xor_gates": 1595, "fanout": 11},
    (13, 7684): {"xor_gates": 20865, "fanout": 13},
}


@dataclass(frozen=True)
class StepCost:
    name: str
    bound: int
    actual: int

    @property
    def within_bound(self) -> bool:
        return self.actual <= self.bound


@dataclass(frozen=True)
class CostReport:
    t: int
    N: int
    K: int
    delta: int
    r: int
    deg_g: int
    steps: tuple[StepCost, ...]
    closed_form_bound: int
    max_division_fanout: int
    direct_division_fanout: int
    direct_division_xors: int
    step4_parallel_actual: int
    summation_depth: int

    @property
    def per_step_bound(self) -> tuple[int, ...]:
        return tuple(s.bound for s in self.steps)

    @property
    def per_step_actual(self) -> tuple[int, ...]:
        return tuple(s.actual for s in self.steps)

    @property
    def total_bound(self) -> int:
        return sum(self.per_step_bound)

    @property
    def total_actual(self) -> int:
        return sum(self.per_step_actual)

    @property
    def step4_parallel_exceeds_bound(self) -> bool:
        return self.step4_parallel_actual > self.steps[3].bound

    @property
    def published(self) -> dict | None:
        return PUBLISHED_BOUNDS.get((self.t, self.K))

    def to_dict(self) -> dict:
        d = {
            "code": {"t": self.t, "N": self.N, "K": self.K, "delta": self.delta},
            "r": self.r,
            "deg_g": self.deg_g,
            "steps": [{"name": s.name, "bound": s.bound, "actual": s.actual} for s in self.steps],
            "total_bound": self.total_bound,
            "total_actual": self.total_actual,
            "closed_form_bound": self.closed_form_bound,
            "max_division_fanout": self.max_division_fanout,
            "direct_division_fanout": self.direct_division_fanout,
            "direct_division_xors": self.direct_division_xors,
            "summation": {
                "serial_xors": self.steps[3].actual,
                "parallel_width_xors": self.step4_parallel_actual,
                "parallel_width_exceeds_bound": self.step4_parallel_exceeds_bound,
                "depth": self.summation_depth,
            },
        }
        pub = self.published
        if pub is not None:
            d["published"] = {
                "xor_gates": pub["xor_gates"],
                "fanout": pub["fanout"],
                "total_actual_within": self.total_actual <= pub["xor_gates"],
                "fanout_within": self.max_division_fanout <= pub["fanout"],
                "total_bound_matches": self.total_bound == pub["xor_gates"],
            }
        return d

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def cost_report(code: BchCode, plan: CrtPlan, datapath: Datapath) -> CostReport:
    t, dg, r = code.t, int(code.g.degree), plan.r
    bounds = (
        sum(int(b.u.degree) + 1 for b in plan.branches),
        sum(int(b.w.degree) + 1 for b in plan.branches),
        sum(dg - int(b.w.degree) + 1 for b in plan.branches),
        r * (t + 1),
    )
    actual = (
        sum(c.xor_count for c in datapath.stage1),
        sum(c.xor_count for c in datapath.stage2),
        sum(c.xor_count for c in datapath.stage3),
        datapath.stage4.xor_count,
    )
    steps = tuple(StepCost(n, b, a) for n, b, a in zip(STEP_NAMES, bounds, actual))
    direct = build_div_lfsr(code.g)
    rep = CostReport(
        t=t,
        N=code.N,
        K=code.K,
        delta=code.delta,
        r=r,
        deg_g=dg,
        steps=steps,
        closed_form_bound=2 * r * (t + 1) + r * (dg + 2),
        max_division_fanout=datapath.max_division_fanout,
        direct_division_fanout=direct.feedback_fanout,
        direct_division_xors=direct.xor_count,
        step4_parallel_actual=datapath.stage4.parallel_xor_count,
        summation_depth=datapath.stage4.depth,
    )
    for s in rep.steps:
        assert s.within_bound, f"step '{s.name}' uses {s.actual} XORs, bound {s.bound}"
    assert rep.max_division_fanout <= t
    return rep


def format_table(rep: CostReport) -> str:
    lines = [
        f"[{rep.N},{rep.K}] BCH code, t={rep.t}, delta={rep.delta}, r={rep.r}, deg(g)={rep.deg_g}",
        "",
        f"{'step':<22}{'bound':>10}{'actual':>10}",
    ]
    for i, s in enumerate(rep.steps, 1):
        lines.append(f"{i}. {s.name:<19}{s.bound:>10}{s.actual:>10}")
    lines.append(f"{'total':<22}{rep.total_bound:>10}{rep.total_actual:>10}")
    lines += [
        "",
        f"closed-form bound 2r(t+1)+r(deg g+2): {rep.closed_form_bound}",
        f"summation: {rep.steps[3].actual} XORs serial, depth {rep.summation_depth}; "
        f"{rep.step4_parallel_actual} if summed at full width"
        + (" (exceeds r(t+1))" if rep.step4_parallel_exceeds_bound else ""),
        f"max division fanout (CRT):  {rep.max_division_fanout}",
        f"division fanout (direct g): {rep.direct_division_fanout}",
    ]
    pub = rep.published
    if pub is not None:
        lines.append(
            f"published: <= {pub['xor_gates']} XORs, fanout <= {pub['fanout']}; "
            f"actual {'within' if rep.total_actual <= pub['xor_gates'] else 'ABOVE'}, "
            f"formula total {rep.total_bound} "
            + ("matches" if rep.total_bound == pub["xor_gates"] else "differs")
        )
    return "\n".join(lines)
