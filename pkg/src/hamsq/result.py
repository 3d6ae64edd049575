"""Three-valued search outcomes.

Exhaustive searches distinguish `none` (nonexistence proved) from
`unknown` (node budget exhausted).  Harness code must never treat
`unknown` as evidence either way.
"""

from __future__ import annotations

from dataclasses import dataclass

FOUND = "found"
NONE = "none"
UNKNOWN = "unknown"

_KERNEL_STATUS = {0: FOUND, 1: NONE, 2: UNKNOWN}


@dataclass(frozen=True)
class Outcome:
    status: str
    witness: object = None
    nodes: int = 0

    @property
    def found(self):
        return self.status == FOUND

    @property
    def none(self):
        return self.status == NONE

    @property
    def unknown(self):
        return self.status == UNKNOWN


def from_kernel(status, witness, nodes):
    return Outcome(_KERNEL_STATUS[status], witness, nodes)
