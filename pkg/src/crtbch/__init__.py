"""Binary BCH codes with a CRT-based parallel systematic encoder.

Builds codes from cyclotomic cosets and minimal polynomials, encodes with a
reference divider or the CRT decomposition of the remainder modulo g,
simulates the serial LFSR datapath, and tallies XOR gates and fanout.
"""

from .bch import BchCode, bch_build, failing_roots, verify_codeword
from .crt import CrtBranch, CrtPlan, crt_remainder, crt_setup, encode_poly, encode_systematic
from .gf2field import (
    CyclotomicCoset,
    Gf2mElement,
    Gf2mField,
    cyclotomic_cosets,
    elem_mul,
    minimal_polynomial,
)
from .gf2poly import (
    Gf2Poly,
    nz,
    poly_add,
    poly_divmod,
    poly_ext_gcd,
    poly_mod_inverse,
    poly_mul,
)
from .lfsr import (
    Datapath,
    LfsrCircuit,
    build_datapath,
    build_div_lfsr,
    build_mult_lfsr,
    simulate_datapath,
    simulate_serial,
)
from .report import CostReport, cost_report, format_table

__version__ = "0.1.0"


def field_new(t, prim_poly=None):
    return Gf2mField(t, prim_poly)
