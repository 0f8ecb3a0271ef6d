"""Bit-serial LFSR circuits and the four-stage CRT encoder datapath.

Division circuits use the Galois (internal XOR) configuration: after the
dividend is clocked in MSB-first the register holds the remainder. The
feedback net drives one XOR per nonzero tap below the leading term, so its
fanout is nz(h) - 1.

Multiplication circuits are feed-forward: the input bit is broadcast to every
tap and the product leaves the top of the register one coefficient per clock.
There is no feedback loop, so the broadcast net can be pipelined.

Stages hand values to each other as whole polynomials; the cycle-level
alignment between stages is not modeled.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .gf2poly import Gf2Poly, nz

MULTIPLY = "multiply"
DIVIDE = "divide"


class LfsrCircuit:
    """One serial multiply or divide circuit for the tap polynomial ``taps``."""

    def __init__(self, kind: str, taps: Gf2Poly):
        if kind not in (MULTIPLY, DIVIDE):
            raise ValueError(f"unknown circuit kind {kind!r}")
        if kind == MULTIPLY and not taps:
            raise ValueError("cannot build a multiplier for the zero polynomial")
        if kind == DIVIDE and taps.degree < 1:
            raise ValueError(f"divider needs degree >= 1, got {taps}")
        self.kind = kind
        self.taps = taps
        self.length = int(taps.degree)
        self._tap_bits = bytes(taps.coeffs())
        self.state = 0

        k = nz(taps)
        if kind == DIVIDE:
            self.xor_count = k - 1
            self.feedback_fanout = k - 1
            self.input_fanout = 1
            self.pipelineable = False
        else:
            # the lowest tap feeds a cell that is otherwise always zero
            self.xor_count = k - 1
            self.feedback_fanout = 0
            self.input_fanout = k
            self.pipelineable = True

    def __repr__(self):
        return f"LfsrCircuit({self.kind}, {self.taps})"

    @property
    def xor_bound(self) -> int:
        return nz(self.taps)

    def reset(self) -> None:
        self.state = 0

    def clock(self, bit: int) -> int:
        """Advance one clock; returns the output bit."""
        d, h = self.length, self.taps.value
        if self.kind == DIVIDE:
            s = (self.state << 1) | (bit & 1)
            out = (s >> d) & 1
            if out:
                s ^= h
        else:
            s = self.state << 1
            if bit & 1:
                s ^= h
            out = (s >> d) & 1
            s &= (1 << d) - 1
        self.state = s
        return out

    def state_hex(self) -> str:
        return format(self.state, f"0{max(1, (self.length + 3) // 4)}x")


def build_mult_lfsr(h: Gf2Poly) -> LfsrCircuit:
    return LfsrCircuit(MULTIPLY, h)


def build_div_lfsr(h: Gf2Poly) -> LfsrCircuit:
    return LfsrCircuit(DIVIDE, h)


def simulate_serial(c: LfsrCircuit, input_bits, trace: list[str] | None = None, label: str = ""):
    """Reset ``c`` and clock ``input_bits`` through it.

    Returns ``(output_bits, final_state)`` where ``final_state`` is an int with
    bit i holding register cell i. Multipliers get deg(h) zero flush clocks
    appended so the output stream is the full product, MSB-first. For a
    divider the output stream is the feedback bit per clock, i.e. the quotient
    (preceded by deg(h) zeros) and the final state is the remainder.

    With ``trace`` given, one line per clock is appended:
    ``<clock> <in> <out> <state-hex>`` after a ``# <label> ...`` header.
    """
    bits = bytes(input_bits)
    if c.kind == MULTIPLY:
        bits += bytes(c.length)
    c.reset()
    if trace is None:
        if c.kind == DIVIDE:
            out, cells = kernels.div_lfsr(c._tap_bits, bits)
        else:
            out, cells = kernels.mul_lfsr(c._tap_bits, bits)
        c.state = Gf2Poly.from_bits(cells[::-1]).value
        return out, c.state
    trace.append(f"# {label or '-'} {c.kind} taps={c.taps.to_hex()} cells={c.length}")
    out = bytearray(len(bits))
    for k, b in enumerate(bits):
        out[k] = c.clock(b)
        trace.append(f"{k} {b} {out[k]} {c.state_hex()}")
    return bytes(out), c.state


@dataclass
class SummationTree:
    """XOR tree merging r serial streams, one bit per clock."""

    inputs: int
    width: int

    @property
    def depth(self) -> int:
        return math.ceil(math.log2(self.inputs)) if self.inputs > 1 else 0

    @property
    def xor_count(self) -> int:
        return self.inputs - 1

    @property
    def parallel_xor_count(self) -> int:
        """Gate count if all ``width`` output bits were summed in the same cycle."""
        return (self.inputs - 1) * self.width

    def merge(self, streams: list[bytes]) -> bytes:
        # streams are 0/1 bytes, so XOR of their big-endian ints is a bytewise XOR
        level = [int.from_bytes(s, "big") for s in streams]
        while len(level) > 1:
            nxt = [level[i] ^ level[i + 1] for i in range(0, len(level) - 1, 2)]
            if len(level) % 2:
                nxt.append(level[-1])
            level = nxt
        return level[0].to_bytes(self.width, "big") if self.width else b""


@dataclass
class Datapath:
    g: Gf2Poly
    stage1: list[LfsrCircuit]
    stage2: list[LfsrCircuit]
    stage3: list[LfsrCircuit]
    stage4: SummationTree
    n: int | None = None
    branch_polys: list[tuple[Gf2Poly, Gf2Poly, Gf2Poly]] = field(default_factory=list, repr=False)

    @property
    def r(self) -> int:
        return len(self.stage2)

    @property
    def max_division_fanout(self) -> int:
        return max(c.feedback_fanout for c in self.stage2)

    @property
    def collapsed(self) -> bool:
        """True when the plan is a single divider by g with passthrough stages."""
        return self.r == 1 and self.stage1[0].taps.value == 1 and self.stage3[0].taps.value == 1


def build_datapath(plan) -> Datapath:
    """Wire the four stages for a :class:`~crtbch.crt.CrtPlan`."""
    s1 = [build_mult_lfsr(b.u) for b in plan.branches]
    s2 = [build_div_lfsr(b.w) for b in plan.branches]
    s3 = [build_mult_lfsr(b.w_prime) for b in plan.branches]
    s4 = SummationTree(plan.r, int(plan.g.degree))
    polys = [(b.u, b.w, b.w_prime) for b in plan.branches]
    return Datapath(plan.g, s1, s2, s3, s4, plan.n, polys)


def _run_branch(d: Datapath, i: int, frame: bytes, trace: list[str] | None) -> bytes:
    s1, s2, s3 = d.stage1[i], d.stage2[i], d.stage3[i]
    prod, _ = simulate_serial(s1, frame, trace, f"stage1[{i}]")
    _, rem = simulate_serial(s2, prod, trace, f"stage2[{i}]")
    rem_bits = Gf2Poly(rem).to_bits(s2.length)
    out, _ = simulate_serial(s3, rem_bits, trace, f"stage3[{i}]")
    return out


def simulate_datapath(d: Datapath, m, workers: int | None = None, trace: list[str] | None = None) -> Gf2Poly:
    """Rem_g(m(x) x^(N-K)) through the four stages.

    ``m`` is an MSB-first bit vector of length K = N - deg(g), or a polynomial.
    """
    dg = int(d.g.degree)
    if isinstance(m, Gf2Poly):
        mp = m
        k = d.n - dg if d.n is not None else max(1, m.value.bit_length())
        if mp.value.bit_length() > k:
            raise ValueError(f"message degree {mp.degree} does not fit in K={k}")
    else:
        if d.n is None:
            raise ValueError("datapath has no code length; pass the message as a Gf2Poly")
        k = d.n - dg
        if len(m) != k:
            raise ValueError(f"message has {len(m)} bits, expected K={k}")
        mp = Gf2Poly.from_bits(m)
    frame = mp.to_bits(k) + bytes(dg)

    if trace is not None:
        streams = []
        for i in range(d.r):
            branch_trace: list[str] = []
            streams.append(_run_branch(d, i, frame, branch_trace))
            trace.extend(branch_trace)
    elif workers and workers > 1 and d.r > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            streams = list(pool.map(lambda i: _run_branch(d, i, frame, None), range(d.r)))
    else:
        streams = [_run_branch(d, i, frame, None) for i in range(d.r)]

    out = Gf2Poly.from_bits(d.stage4.merge(streams))
    assert out.degree < dg, "datapath output exceeded deg(g)"
    return out
