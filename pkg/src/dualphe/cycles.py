"""Abstract cycle accounting.

The ledger counts arithmetic-unit time slots, a software stand-in for the
FPGA cycle counters.  Constants are model choices: only orderings and
ratios between configurations are meaningful, never absolute totals.
"""

from dataclasses import dataclass, field


def mul_cycles(k_bits: int) -> int:
    """One Montgomery multiplication slot: bit-serial loop plus setup/final subtract."""
    return k_bits + 2


def exp_cycles(k_bits: int, multipliers: int) -> int:
    """LSB-first exponentiation: k_bits iterations, two multiplies per iteration.

    With two multipliers the square and the conditional accumulate overlap
    (one slot per iteration); with one they serialize (two slots).
    """
    slots = 1 if multipliers >= 2 else 2
    return k_bits * slots * mul_cycles(k_bits)


def div_cycles(k_bits: int) -> int:
    """Plus-minus modular division."""
    return 2 * k_bits + 4


@dataclass
class CycleLedger:
    """Monotone per-operation cycle accumulator."""

    per_op: dict = field(default_factory=dict)

    def charge(self, kind: str, cycles: int) -> None:
        if cycles < 0:
            raise ValueError("cycle charge must be non-negative")
        self.per_op[kind] = self.per_op.get(kind, 0) + cycles

    @property
    def total_cycles(self) -> int:
        return sum(self.per_op.values())
