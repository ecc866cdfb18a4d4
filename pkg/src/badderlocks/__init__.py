"""Large non-cryptographic message classifier and signature-representative assembly.

The classifier composes an 8-to-9-bit S-box expansion with a CRC over one
of 30 large generator polynomials (64 to 4288 output bits).  A bit-exact
reference engine, a table-driven streaming engine, registry verification
and the padding || classifier || hash representative layout are provided,
plus a CLI reproducing the published test vectors.
"""

from .classifier import ClassifierDigest, classify, entropy_ratio
from .fastcrc import engine_init
from .gf2poly import BitPolynomial, parse_hex, render_hex
from .params import GeneratorEntry, registry, select_generator, verify_entry
from .reefshoal import RepresentativeLayout, assemble, plan_layout
from .sbox import expand_message

__version__ = "0.1.0"

__all__ = [
    "BitPolynomial",
    "ClassifierDigest",
    "GeneratorEntry",
    "RepresentativeLayout",
    "assemble",
    "classify",
    "engine_init",
    "entropy_ratio",
    "expand_message",
    "parse_hex",
    "plan_layout",
    "registry",
    "render_hex",
    "select_generator",
    "verify_entry",
]
