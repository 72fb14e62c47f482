"""Weight-filtered Poincare series of iterated loop spaces on suspensions.

``factor_series(y, j, char, D, K)`` returns the series of the free
E_j-algebra on a connected graded module with reduced Betti numbers ``y``,
i.e. of H_*(Omega^j Sigma^j Y; F).  The weight grading is the configuration
length filtration: letters have weight 1, a bracket of length l has weight
l, and each Dyer-Lashof operation multiplies the weight by the prime.

The generator grammar, by characteristic:

* char 0: generators are the basic Browder-bracket products alone.
* char 2: every basic product w feeds admissible words Q_{b_s}...Q_{b_1} w,
  applied b_1 first with j-1 >= b_1 >= b_2 >= ... >= b_s >= 1; the
  operation in lower index b sends degree d to 2d + b.
* odd p: units (b, eps) with Q_b sending d to p*d + b(p-1) followed by eps
  Bockstein steps down by 1; constraints 1 <= b <= j-1, b congruent to the
  current degree mod 2, and b_{t+1} <= b_t - eps_t between consecutive
  units.  Atoms carry no standalone Bockstein (inputs behave like wedges
  of spheres).

Basic products are counted by the Witt inversion in a shifted grading
where every letter is raised by j-1 (making the degree-(j-1) bracket
degree-preserving); the sign convention of the count uses that shifted
degree, while the exterior/polynomial split of the resulting algebra uses
the actual degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidInputError
from .series import BiSeries, EXTERIOR, POLYNOMIAL, inverse_one_minus, power_factor
from .witt import DegreeWeightTable, lie_atom_counts

GradedBetti = dict[int, int]

# counts of basic bracket products by (actual degree, bracket length)
AtomTable = DegreeWeightTable
# counts of free-commutative-algebra generators by (degree, weight)
GeneratorCensus = DegreeWeightTable


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldChar:
    """Characteristic of the coefficient field: 0, 2, or an odd prime."""

    p: int

    def __post_init__(self):
        if self.p == 0 or self.p == 2:
            return
        if self.p < 3 or not _is_prime(self.p):
            raise InvalidInputError(f"{self.p} is not 0, 2 or an odd prime")

    @classmethod
    def rational(cls) -> "FieldChar":
        return cls(0)

    @classmethod
    def mod2(cls) -> "FieldChar":
        return cls(2)

    @classmethod
    def odd(cls, p: int) -> "FieldChar":
        if p < 3 or p % 2 == 0:
            raise InvalidInputError(f"odd characteristic must be an odd prime, got {p}")
        return cls(p)

    @classmethod
    def from_name(cls, name: str) -> "FieldChar":
        if name == "Q":
            return cls.rational()
        if name == "F2":
            return cls.mod2()
        if name.startswith("Fp:"):
            try:
                return cls.odd(int(name[3:]))
            except ValueError as exc:
                raise InvalidInputError(f"cannot parse field name {name!r}") from exc
        raise InvalidInputError(
            f"unknown field name {name!r}; expected 'Q', 'F2' or 'Fp:<p>'"
        )

    @property
    def name(self) -> str:
        if self.p == 0:
            return "Q"
        if self.p == 2:
            return "F2"
        return f"Fp:{self.p}"

    @property
    def is_two(self) -> bool:
        return self.p == 2

    @property
    def is_zero(self) -> bool:
        return self.p == 0


def normalize_betti(betti: Mapping[int, int], *, min_degree: int = 0) -> GradedBetti:
    """Validate and copy a degree -> dimension map, dropping zeros."""
    out: GradedBetti = {}
    for d, c in betti.items():
        if not isinstance(d, int) or not isinstance(c, int):
            raise InvalidInputError("Betti data must map int degrees to int counts")
        if c < 0:
            raise InvalidInputError(f"negative Betti number {c} in degree {d}")
        if d < min_degree:
            raise InvalidInputError(
                f"degree {d} class not allowed here (need degrees >= {min_degree})"
            )
        if c:
            out[d] = out.get(d, 0) + c
    return out


def suspend_betti(x: GradedBetti, q: int) -> GradedBetti:
    """Reduced Betti numbers of the q-fold suspension: shift degrees up by q."""
    if q < 0:
        raise InvalidInputError("suspension count must be >= 0")
    return {d + q: c for d, c in x.items()}


def atom_census(
    y: GradedBetti,
    j: int,
    char: FieldChar,
    max_degree: int,
    max_weight: int,
) -> AtomTable:
    """Counts of basic bracket products for the degree-(j-1) bracket.

    Computed by regrading every generator up by j-1, running the Witt count
    in that shifted grading (signed unless char is 2, where the self
    bracket vanishes in the free object), and shifting atom degrees back
    down: a length-l shifted word of degree d' is an actual word of degree
    d' - (j-1).
    """
    if j < 2:
        raise InvalidInputError("atom census needs j >= 2")
    y = normalize_betti(y, min_degree=1)
    shift = j - 1
    shifted_cap = max_degree + shift
    gens = DegreeWeightTable.from_generators(
        {d + shift: c for d, c in y.items()}, shifted_cap, max_weight
    )
    shifted = lie_atom_counts(gens, signed=not char.is_two)
    return DegreeWeightTable(
        max_degree,
        max_weight,
        {
            (d - shift, l): c
            for d, l, c in shifted.items()
            if d - shift <= max_degree
        },
    )


def generator_census(
    atoms: AtomTable,
    j: int,
    char: FieldChar,
    max_degree: int,
    max_weight: int,
) -> GeneratorCensus:
    """Close the atoms under admissible operation words.

    Characteristic 0 applies no operations.  Otherwise states aggregate by
    (degree, weight, largest index the next operation may use); every
    operation strictly raises degree, so the frontier dies within caps.
    """
    if j < 2:
        raise InvalidInputError("generator census needs j >= 2")
    census: dict[tuple[int, int], int] = {}
    for d, k, c in atoms.items():
        if d <= max_degree and k <= max_weight:
            census[(d, k)] = census.get((d, k), 0) + c
    if char.is_zero:
        return DegreeWeightTable(max_degree, max_weight, census)

    p = char.p
    frontier: dict[tuple[int, int, int], int] = {}
    for (d, k), c in census.items():
        frontier[(d, k, j - 1)] = frontier.get((d, k, j - 1), 0) + c
    while frontier:
        nxt: dict[tuple[int, int, int], int] = {}
        for (d, k, bmax), c in frontier.items():
            for b in range(1, bmax + 1):
                if p == 2:
                    moves = [(2 * d + b, 2 * k, b)]
                else:
                    if (b - d) % 2:
                        continue
                    base = p * d + b * (p - 1)
                    moves = [(base, p * k, b), (base - 1, p * k, b - 1)]
                for nd, nk, nb in moves:
                    if nd > max_degree or nk > max_weight:
                        continue
                    census[(nd, nk)] = census.get((nd, nk), 0) + c
                    if nb >= 1:
                        key = (nd, nk, nb)
                        nxt[key] = nxt.get(key, 0) + c
        frontier = nxt
    return DegreeWeightTable(max_degree, max_weight, census)


_factor_cache: dict[tuple, BiSeries] = {}
_FACTOR_CACHE_LIMIT = 512


def factor_series(
    y: GradedBetti,
    j: int,
    char: FieldChar,
    max_degree: int,
    max_weight: int,
) -> BiSeries:
    """Poincare series of the free E_j-algebra on reduced Betti data ``y``.

    * j = 0: the module 1 + sum y_d t^d u (every reduced class at weight 1).
    * j = 1: tensor algebra, weight = word length; identical for every
      characteristic.
    * j >= 2: free graded-commutative algebra on the generator census; in
      characteristic 2 all generators are polynomial, otherwise odd actual
      degree is exterior and even actual degree polynomial.
    """
    if j < 0:
        raise InvalidInputError("loop count j must be >= 0")
    y = normalize_betti(y, min_degree=0 if j == 0 else 1)
    key = (tuple(sorted(y.items())), j, char.p, max_degree, max_weight)
    cached = _factor_cache.get(key)
    if cached is not None:
        return cached

    if j == 0:
        entries = {(0, 0): 1}
        for d, c in y.items():
            if d <= max_degree and 1 <= max_weight:
                entries[(d, 1)] = entries.get((d, 1), 0) + c
        result = BiSeries.from_entries(max_degree, max_weight, entries)
    elif j == 1:
        f = BiSeries.from_entries(
            max_degree, max_weight, {(d, 1): c for d, c in y.items()}
        )
        result = inverse_one_minus(f)
    else:
        atoms = atom_census(y, j, char, max_degree, max_weight)
        census = generator_census(atoms, j, char, max_degree, max_weight)
        result = BiSeries.one(max_degree, max_weight)
        for d, k, c in census.items():
            if char.is_two or d % 2 == 0:
                kind = POLYNOMIAL
            else:
                kind = EXTERIOR
            result = power_factor(result, d, k, c, kind)

    if len(_factor_cache) >= _FACTOR_CACHE_LIMIT:
        _factor_cache.clear()
    _factor_cache[key] = result
    return result
