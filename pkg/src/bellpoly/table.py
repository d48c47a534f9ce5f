from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Tuple


@dataclass
class TriangularTable:
    """Values indexed by (n, k) for n_start <= n <= nmax and k_start <= k <= min(n, kmax).

    With ``triangular=False`` every row runs k_start..kmax regardless of n,
    which is what the associated number grids need.
    """

    nmax: int
    kmax: int
    n_start: int = 0
    k_start: int = 0
    triangular: bool = True
    rows: List[List[Any]] = field(default_factory=list)

    @classmethod
    def build(cls, fn: Callable[[int, int], Any], nmax: int, kmax: int | None = None, *,
              n_start: int = 0, k_start: int = 0, triangular: bool = True) -> "TriangularTable":
        kmax = nmax if kmax is None else kmax
        table = cls(nmax, kmax, n_start, k_start, triangular)
        for n in range(n_start, nmax + 1):
            table.rows.append([fn(n, k) for k in table.k_range(n)])
        return table

    def k_range(self, n: int) -> range:
        top = min(n, self.kmax) if self.triangular else self.kmax
        return range(self.k_start, top + 1)

    def __getitem__(self, nk: Tuple[int, int]) -> Any:
        n, k = nk
        if not (self.n_start <= n <= self.nmax) or k not in self.k_range(n):
            raise IndexError(f"({n}, {k}) outside table")
        return self.rows[n - self.n_start][k - self.k_start]

    def cells(self) -> Iterator[Tuple[int, int, Any]]:
        for n, row in enumerate(self.rows, start=self.n_start):
            for k, value in enumerate(row, start=self.k_start):
                yield n, k, value

    def to_json(self) -> Dict[str, Any]:
        return {
            "nmax": self.nmax,
            "kmax": self.kmax,
            "n_start": self.n_start,
            "k_start": self.k_start,
            "triangular": self.triangular,
            "rows": self.rows,
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "TriangularTable":
        return cls(data["nmax"], data["kmax"], data["n_start"], data["k_start"],
                   data["triangular"], [list(r) for r in data["rows"]])
