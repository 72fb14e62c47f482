"""Basis counts for free graded Lie algebras, bigraded by degree and
bracket length.

Given generator counts g_d (all at length 1), the counts L(d, l) of basic
products are defined by inverting the Poincare-Birkhoff-Witt identity
against the tensor algebra: with f = sum_d g_d t^d u,

* signed (super) convention::

    1/(1 - f) = prod_{d odd} (1 + t^d u^l)^L(d,l)
              * prod_{d even} (1 - t^d u^l)^(-L(d,l))

* unsigned convention::

    1/(1 - f) = prod_{d,l} (1 - t^d u^l)^(-L(d,l))

The solution proceeds by induction on length: once every count of length
below l is known and divided out of 1/(1-f), the weight-l slice of the
residual reads off L(., l) directly (distinct length-l factors only
interact from weight 2l upward).  Parity refers to the degree grading of
the table handed in; callers working with a degree-shifted bracket pass
shifted degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import ConfigurationError, IntegrityError, InvalidInputError
from .series import BiSeries, inverse_one_minus


@dataclass(frozen=True)
class DegreeWeightTable:
    """Nonnegative counts indexed by (degree, length/weight) inside caps."""

    max_degree: int
    max_weight: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[int, int], int] = {}
        for (d, l), c in self.entries.items():
            if c < 0:
                raise IntegrityError(f"negative count {c} at ({d},{l})")
            if d > self.max_degree or l > self.max_weight:
                raise ConfigurationError(f"entry ({d},{l}) outside caps")
            if c:
                clean[(d, l)] = c
        object.__setattr__(self, "entries", clean)

    def get(self, degree: int, length: int) -> int:
        return self.entries.get((degree, length), 0)

    def items(self) -> Iterator[tuple[int, int, int]]:
        for (d, l), c in sorted(self.entries.items()):
            yield d, l, c

    def total(self) -> int:
        return sum(self.entries.values())

    @classmethod
    def from_generators(
        cls, degrees: Mapping[int, int], max_degree: int, max_weight: int
    ) -> "DegreeWeightTable":
        """Length-1 table from a degree -> count map (the generating set);
        generators beyond either cap are dropped."""
        return cls(
            max_degree,
            max_weight,
            {
                (d, 1): c
                for d, c in degrees.items()
                if c and d <= max_degree and max_weight >= 1
            },
        )


def _divide_factor(
    rows: list[list[int]], d: int, l: int, count: int, exterior: bool
) -> None:
    """In place: divide the raw table by (1+t^d u^l)^count (exterior) or by
    (1-t^d u^l)^(-count) (polynomial).  Exact within the caps; intermediate
    cells may go negative only if the input was not actually divisible."""
    D = len(rows) - 1
    K = len(rows[0]) - 1
    imax = min(D // d, K // l)
    if exterior:
        # multiply by (1+s)^(-count) = sum (-1)^i C(count+i-1, i) s^i
        coeffs = [
            (-1) ** i * math.comb(count + i - 1, i) for i in range(imax + 1)
        ]
    else:
        # multiply by (1-s)^count = sum (-1)^i C(count, i) s^i
        imax = min(imax, count)
        coeffs = [(-1) ** i * math.comb(count, i) for i in range(imax + 1)]
    for x in range(D, -1, -1):
        row = rows[x]
        for y in range(K, -1, -1):
            acc = row[y]
            for i in range(1, min(imax, x // d, y // l) + 1):
                acc += coeffs[i] * rows[x - i * d][y - i * l]
            row[y] = acc


def lie_atom_counts(
    gens: DegreeWeightTable,
    signed: bool,
    max_degree: int | None = None,
    max_weight: int | None = None,
) -> DegreeWeightTable:
    """Solve the defining product identity for the basic-product counts.

    ``gens`` must live at length 1 with degrees >= 1.  Exactness needs the
    input caps at least as large as the requested output caps.  After
    peeling, the residual is checked to be exactly 1; any negative solved
    count or nonunit residual raises IntegrityError since neither can occur
    for a genuine generating set within adequate caps.
    """
    D = gens.max_degree if max_degree is None else max_degree
    K = gens.max_weight if max_weight is None else max_weight
    if D > gens.max_degree or K > gens.max_weight:
        raise ConfigurationError("output caps exceed the input table caps")
    degrees: dict[int, int] = {}
    for d, l, c in gens.items():
        if l != 1:
            raise InvalidInputError("generating set must sit at length 1")
        if d < 1:
            raise InvalidInputError("generator degrees must be >= 1")
        degrees[d] = c

    f = BiSeries.from_entries(D, K, {(d, 1): c for d, c in degrees.items()})
    rows = [list(row) for row in inverse_one_minus(f)._c]

    counts: dict[tuple[int, int], int] = {}
    for length in range(1, K + 1):
        solved = []
        for d in range(D + 1):
            c = rows[d][length]
            if c < 0:
                raise IntegrityError(
                    f"solved count {c} at ({d},{length}) is negative; "
                    "inconsistent input or caps too small for exact peeling"
                )
            if c:
                solved.append((d, c))
                counts[(d, length)] = c
        for d, c in solved:
            _divide_factor(rows, d, length, c, exterior=signed and d % 2 == 1)

    for d in range(D + 1):
        for k in range(K + 1):
            expect = 1 if (d, k) == (0, 0) else 0
            if rows[d][k] != expect:
                raise IntegrityError(
                    "reconstruction failed: residual is not the unit series "
                    f"at ({d},{k})"
                )
    return DegreeWeightTable(D, K, counts)
