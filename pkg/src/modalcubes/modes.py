"""Category modes: which construction a cell lives in, and its arity.

Six constructions are supported.  In the comonadic modes every axis is a
necessity operator, in the monadic modes a possibility operator; in the
entwined modes the parity of the axis decides (even axes are comonads,
odd axes are monads).  Symmetric modes additionally carry the transposition
action and need at least two axes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import AxisError, ModeError
from .modlang import OpKind


class ModeKind(Enum):
    DCMD = "dcmd"
    SDCMD = "sdcmd"
    DMND = "dmnd"
    SDMND = "sdmnd"
    ENT = "ent"
    SENT = "sent"

    def __repr__(self) -> str:
        return f"ModeKind.{self.name}"


_SYMMETRIC = {ModeKind.SDCMD, ModeKind.SDMND, ModeKind.SENT}
_ENTWINED = {ModeKind.ENT, ModeKind.SENT}


@dataclass(frozen=True)
class Mode:
    kind: ModeKind
    arity: int

    def __post_init__(self):
        if self.arity < 1:
            raise ModeError("arity must be at least 1")
        if self.symmetric and self.arity < 2:
            raise ModeError(f"{self.kind.value} needs arity >= 2 (no transpositions below)")

    @property
    def symmetric(self) -> bool:
        return self.kind in _SYMMETRIC

    @property
    def entwined(self) -> bool:
        return self.kind in _ENTWINED

    def check_atom(self, atom: int) -> None:
        if not 0 <= atom < self.arity:
            raise AxisError(f"axis {atom} out of range for arity {self.arity}")

    def op_for(self, atom: int) -> OpKind:
        """The operator flavour carried by an axis."""
        self.check_atom(atom)
        if self.kind in (ModeKind.DCMD, ModeKind.SDCMD):
            return OpKind.BOX
        if self.kind in (ModeKind.DMND, ModeKind.SDMND):
            return OpKind.DIA
        return OpKind.BOX if atom % 2 == 0 else OpKind.DIA

    def comonad_atoms(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.arity) if self.op_for(a) is OpKind.BOX)

    def monad_atoms(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.arity) if self.op_for(a) is OpKind.DIA)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.arity})"


def mode_from_string(name: str, arity: int) -> Mode:
    try:
        kind = ModeKind(name.lower())
    except ValueError:
        valid = ", ".join(k.value for k in ModeKind)
        raise ModeError(f"unknown mode {name!r}; expected one of {valid}") from None
    return Mode(kind, arity)
