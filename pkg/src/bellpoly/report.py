from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple


@dataclass
class Counterexample:
    n: int
    k: int
    lhs: str
    rhs: str

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "k": self.k, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class IdentityReport:
    """Outcome of one identity checked over one index range.

    ``elapsed`` is wall-clock seconds; it is kept out of :meth:`to_dict` so
    that serialized reports are reproducible byte for byte.
    """

    identity: str
    range: Tuple[int, int]
    passed: bool
    counterexample: Optional[Counterexample] = None
    checked: int = 0
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self) -> None:
        if self.passed and self.counterexample is not None:
            raise ValueError("a passing report cannot carry a counterexample")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "nmax": self.range[0],
            "kmax": self.range[1],
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.identity} nmax={self.range[0]} kmax={self.range[1]} checked={self.checked}"
        if self.counterexample:
            ce = self.counterexample
            line += f"\n  counterexample n={ce.n} k={ce.k}\n    lhs: {ce.lhs}\n    rhs: {ce.rhs}"
        return line
