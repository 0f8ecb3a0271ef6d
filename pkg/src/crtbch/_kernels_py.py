"""Pure-Python LFSR kernels; reference semantics for the compiled ones.

Bit streams are ``bytes`` of 0/1 values. Tap vectors are little-endian
coefficient lists (``taps[i]`` is the coefficient of x^i) of length deg+1.
The register is held in an int, bit i being cell i.
"""

IMPLEMENTATION = "python"


def _taps_int(taps) -> int:
    v = 0
    for i, c in enumerate(taps):
        if c:
            v |= 1 << i
    return v


def div_lfsr(taps, bits):
    """Galois divider clocked MSB-first.

    Returns ``(out, state)``: ``out[k]`` is the feedback bit at clock k (the
    quotient stream), ``state`` holds the remainder cells, little-endian.
    """
    d = len(taps) - 1
    if d < 1 or not taps[d]:
        raise ValueError("divider needs a tap polynomial of degree >= 1")
    h = _taps_int(taps)
    top = 1 << d
    s = 0
    out = bytearray(len(bits))
    for k, b in enumerate(bits):
        s = (s << 1) | b
        if s & top:
            s ^= h
            out[k] = 1
    return bytes(out), bytes((s >> i) & 1 for i in range(d))


def mul_lfsr(taps, bits):
    """Feed-forward multiplier (input broadcast to every tap).

    Each clock accumulates ``s = s*x + b*h`` and emits the coefficient that
    leaves the register. Callers append deg(h) zero bits to flush.
    """
    d = len(taps) - 1
    if d < 0 or not taps[d]:
        raise ValueError("multiplier needs a nonzero tap polynomial")
    h = _taps_int(taps)
    mask = (1 << d) - 1
    s = 0
    out = bytearray(len(bits))
    for k, b in enumerate(bits):
        s <<= 1
        if b:
            s ^= h
        out[k] = (s >> d) & 1
        s &= mask
    return bytes(out), bytes((s >> i) & 1 for i in range(d))
