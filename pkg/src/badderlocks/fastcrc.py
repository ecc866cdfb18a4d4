"""Table-driven streaming classifier engine.

The engine emulates a shift register as wide as the generator degree.  One
cycle extracts the top 9 bits of the register, shifts the next 9-bit S-box
codeword in from the bottom, and XORs in a precomputed reduction row picked
by the extracted value.  Finishing inserts `degree` zero bits the same way
(full 9-bit cycles plus one short cycle when the degree is not a multiple
of 9) and emits the byte-aligned digest.  Output is bit-identical to
classifier.classify.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classifier import ClassifierDigest
from .params import GeneratorEntry
from .sbox import FILLER, codeword_table

__all__ = ["CrcTables", "CrcEngine", "build_tables", "engine_init", "build_all_tables"]


@dataclass(frozen=True)
class CrcTables:
    """Precomputed reduction rows for one generator.

    main[v] = (v << degree) mod generator for each 9-bit v; final[v] covers
    the short end-of-message cycle of (degree mod 9) bits, and is empty when
    the degree is a multiple of 9.
    """

    degree: int
    main: tuple[int, ...]
    final: tuple[int, ...]

    def nbytes(self) -> int:
        """Approximate memory held by the table rows."""
        row = (self.degree + 7) // 8
        return row * (len(self.main) + len(self.final))


def _reduction_rows(generator: int, degree: int, width: int) -> tuple[int, ...]:
    """rows[v] = (v << degree) mod generator for all width-bit v."""
    basis = []
    cur = generator ^ (1 << degree)  # x^degree mod generator
    for _ in range(width):
        basis.append(cur)
        cur <<= 1
        if cur >> degree:
            cur ^= generator
    rows = [0] * (1 << width)
    for v in range(1, 1 << width):
        low = v & (v - 1)
        rows[v] = rows[low] ^ basis[(v ^ low).bit_length() - 1]
    return tuple(rows)


def build_tables(e: GeneratorEntry) -> CrcTables:
    """Build the lookup tables for one generator entry."""
    d = e.degree
    g = e.generator.value
    short = d % 9
    return CrcTables(
        degree=d,
        main=_reduction_rows(g, d, 9),
        final=_reduction_rows(g, d, short) if short else (),
    )


_table_cache: dict[int, CrcTables] = {}


def _tables_for(e: GeneratorEntry) -> CrcTables:
    tables = _table_cache.get(e.index)
    if tables is None:
        tables = _table_cache[e.index] = build_tables(e)
    return tables


def build_all_tables() -> dict[int, CrcTables]:
    """Eagerly build and cache tables for every registry entry."""
    from .params import registry

    for e in registry():
        _tables_for(e)
    return dict(_table_cache)


class CrcEngine:
    """Single-use streaming state: init, absorb chunks, finish once."""

    def __init__(self, entry: GeneratorEntry, tables: CrcTables):
        self.entry = entry
        self.tables = tables
        self.register = 0
        self.consumed = 0
        self._finished = False

    def absorb(self, chunk: bytes) -> "CrcEngine":
        """Run one table cycle per input byte; returns self for chaining."""
        if self._finished:
            raise RuntimeError("engine already finished")
        d = self.entry.degree
        reg = self.register
        main = self.tables.main
        sbox_entries = codeword_table().entries
        low_mask = (1 << (d - 9)) - 1
        shift = d - 9
        for byte in chunk:
            reg = (((reg & low_mask) << 9) | sbox_entries[byte]) ^ main[reg >> shift]
        self.register = reg
        self.consumed += len(chunk)
        return self

    def _absorb_codeword(self, code: int) -> None:
        d = self.entry.degree
        self.register = ((((self.register & ((1 << (d - 9)) - 1)) << 9) | code)
                         ^ self.tables.main[self.register >> (d - 9)])

    def finish(self) -> ClassifierDigest:
        """Apply the filler rule, insert the trailing zero bits, emit the digest."""
        if self._finished:
            raise RuntimeError("engine already finished")
        self._finished = True
        for _ in range(8 - self.consumed):
            self._absorb_codeword(FILLER)
        d = self.entry.degree
        for _ in range(d // 9):
            self._absorb_codeword(0)
        short = d % 9
        reg = self.register
        if short:
            # Short cycle applied as an XOR on the output-side representation.
            reg = ((reg & ((1 << (d - short)) - 1)) << short) \
                ^ self.tables.final[reg >> (d - short)]
        self.register = reg
        return ClassifierDigest(reg.to_bytes(self.entry.aligned_bits // 8, "big"),
                                self.entry)


def engine_init(e: GeneratorEntry) -> CrcEngine:
    """Fresh zeroed engine for entry e; tables are built lazily and shared."""
    return CrcEngine(e, _tables_for(e))
