"""Independent verification path: explicit generator enumeration and a
catalog of classical closed-form series.

Nothing here touches the Witt inversion or the census worklist.  Basic
bracket products are enumerated as Lyndon words over the (shifted-graded)
alphabet of letters, bracketed by standard factorization, with the square
[w, w] adjoined for every word of odd shifted degree in the signed
characteristics; operation words are grown by exhaustive search with the
same admissibility grammar the engine documents.  Counting both ways and
comparing is the point: the two implementations share only the grammar,
not code.

The closed-form catalog is computed with one-variable coin/subset dynamic
programming, again independent of the series kernel.  Catalog entries are
degreewise; only ``james`` and ``stunted_weight2`` carry a meaningful
weight grading (those are classically known), all other entries park their
dimensions at weight 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import ConfigurationError, InvalidInputError
from .loops import FieldChar, GradedBetti, factor_series, normalize_betti
from .series import BiSeries, multiply


@dataclass(frozen=True)
class GeneratorDescriptor:
    """One explicit free-algebra generator: a bracket word plus an
    admissible operation word.

    ``letter_degrees`` lists the actual degrees of the letters in word
    order; ``ops`` lists (index, bockstein) units in application order.
    Degree and weight are stored as computed and must be reproducible from
    the data (checked in the test suite).
    """

    bracket: str
    letter_degrees: tuple[int, ...]
    ops: tuple[tuple[int, int], ...]
    degree: int
    weight: int


def _lyndon_words(
    degrees: tuple[int, ...], max_total: int, max_length: int
) -> Iterator[tuple[int, ...]]:
    """All Lyndon words over alphabet indices 0..len(degrees)-1 whose total
    letter degree stays within max_total.  Brute force by design."""

    def grow(word: tuple[int, ...], total: int) -> Iterator[tuple[int, ...]]:
        if word:
            rotations = [word[i:] + word[:i] for i in range(1, len(word))]
            if all(word < rot for rot in rotations):
                yield word
        if len(word) == max_length:
            return
        for letter, deg in enumerate(degrees):
            if total + deg <= max_total:
                yield from grow(word + (letter,), total + deg)

    yield from grow((), 0)


def _standard_bracketing(word: tuple[int, ...], names: list[str]) -> str:
    if len(word) == 1:
        return names[word[0]]
    # longest proper Lyndon suffix gives the standard factorization
    for i in range(1, len(word)):
        suffix = word[i:]
        if all(suffix < suffix[t:] + suffix[:t] for t in range(1, len(suffix))):
            left = _standard_bracketing(word[:i], names)
            right = _standard_bracketing(suffix, names)
            return f"[{left},{right}]"
    raise AssertionError("every Lyndon word of length >= 2 factors")


def _operation_words(
    p: int, j: int, degree: int, max_degree: int
) -> Iterator[tuple[tuple[int, int], ...]]:
    """All admissible operation words on a class of the given degree,
    pruned by degree only (weights are checked by the caller)."""

    def grow(
        ops: tuple[tuple[int, int], ...], d: int, bmax: int
    ) -> Iterator[tuple[tuple[int, int], ...]]:
        if ops:
            yield ops
        for b in range(1, bmax + 1):
            if p == 2:
                nd = 2 * d + b
                if nd <= max_degree:
                    yield from grow(ops + ((b, 0),), nd, b)
            else:
                if (b - d) % 2:
                    continue
                base = p * d + b * (p - 1)
                for eps in (0, 1):
                    nd = base - eps
                    if nd <= max_degree:
                        yield from grow(ops + ((b, eps),), nd, b - eps)

    yield from grow((), degree, j - 1)


def _op_result(p: int, degree: int, weight: int, ops) -> tuple[int, int]:
    for b, eps in ops:
        degree = p * degree + b * (p - 1) - eps
        weight *= p
    return degree, weight


def enumerate_generators(
    y: GradedBetti,
    j: int,
    char: FieldChar,
    max_degree: int,
    max_weight: int,
) -> list[GeneratorDescriptor]:
    """Explicit witnesses behind the generator census, within the caps.

    Intended for modest caps (degrees up to roughly 25): the enumeration is
    exhaustive on purpose.
    """
    if j < 2:
        raise InvalidInputError("generator enumeration needs j >= 2")
    y = normalize_betti(y, min_degree=1)
    shift = j - 1
    letters: list[int] = []  # actual degree per alphabet symbol
    for d in sorted(y):
        letters.extend([d] * y[d])
    names = [f"x{i + 1}" for i in range(len(letters))]
    shifted = tuple(d + shift for d in letters)

    atoms: list[tuple[str, tuple[int, ...], int, int]] = []
    max_len = min(max_weight, max_degree + shift)
    for word in _lyndon_words(shifted, max_degree + shift, max_len):
        sh_deg = sum(shifted[i] for i in word)
        actual = sh_deg - shift
        letter_degs = tuple(letters[i] for i in word)
        if actual <= max_degree:
            atoms.append(
                (_standard_bracketing(word, names), letter_degs, actual, len(word))
            )
        if not char.is_two and sh_deg % 2 == 1:
            sq_actual = 2 * sh_deg - shift
            if sq_actual <= max_degree and 2 * len(word) <= max_weight:
                inner = _standard_bracketing(word, names)
                atoms.append(
                    (f"[{inner},{inner}]", letter_degs * 2, sq_actual, 2 * len(word))
                )

    out: list[GeneratorDescriptor] = []
    for bracket, letter_degs, degree, length in atoms:
        if length <= max_weight:
            out.append(
                GeneratorDescriptor(bracket, letter_degs, (), degree, length)
            )
        if char.is_zero:
            continue
        for ops in _operation_words(char.p, j, degree, max_degree):
            nd, nk = _op_result(char.p, degree, length, ops)
            if nd <= max_degree and nk <= max_weight:
                out.append(
                    GeneratorDescriptor(bracket, letter_degs, ops, nd, nk)
                )
    out.sort(key=lambda g: (g.degree, g.weight, g.bracket, g.ops))
    return out


def census_from_descriptors(
    descriptors: list[GeneratorDescriptor],
) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for g in descriptors:
        key = (g.degree, g.weight)
        counts[key] = counts.get(key, 0) + 1
    return counts


# -- closed-form catalog ---------------------------------------------------


def _poly_counts(parts: list[int], max_degree: int) -> list[int]:
    dp = [0] * (max_degree + 1)
    dp[0] = 1
    for part in parts:
        for d in range(part, max_degree + 1):
            dp[d] += dp[d - part]
    return dp


def _ext_counts(parts: list[int], max_degree: int) -> list[int]:
    dp = [0] * (max_degree + 1)
    dp[0] = 1
    for part in parts:
        for d in range(max_degree, part - 1, -1):
            dp[d] += dp[d - part]
    return dp


def _conv(a: list[int], b: list[int]) -> list[int]:
    out = [0] * len(a)
    for i, va in enumerate(a):
        if va:
            for k in range(len(a) - i):
                vb = b[k]
                if vb:
                    out[i + k] += va * vb
    return out


def _degreewise(values: list[int], max_degree: int, max_weight: int) -> BiSeries:
    return BiSeries.from_entries(
        max_degree, max_weight, {(d, 0): v for d, v in enumerate(values) if v}
    )


def classical_series(
    name: str,
    params: Mapping[str, object] | None,
    max_degree: int,
    max_weight: int,
) -> BiSeries:
    """Ground-truth series from the literature.

    names: james(d); omega2_s3_mod2; omega2_s3_modp(p);
    rational_loops_sphere(j, m) for j in {1, 2} and m >= 2;
    stunted_weight2(d, j); even_sphere_split(k, field).
    """
    params = dict(params or {})
    D, K = max_degree, max_weight

    if name == "james":
        d = int(params.pop("d"))
        if d < 1:
            raise InvalidInputError("james needs d >= 1")
        _done(params, name)
        return BiSeries.from_entries(
            D, K, {(r * d, r): 1 for r in range(min(D // d, K) + 1)},
            is_algebra=True,
        )

    if name == "omega2_s3_mod2":
        _done(params, name)
        parts = []
        part = 1
        while part <= D:
            parts.append(part)
            part = 2 * part + 1
        return _degreewise(_poly_counts(parts, D), D, K)

    if name == "omega2_s3_modp":
        p = int(params.pop("p"))
        _done(params, name)
        if p < 3 or p % 2 == 0:
            raise InvalidInputError("omega2_s3_modp needs an odd prime")
        ext, poly = [], []
        q = 1
        while 2 * q - 1 <= D:
            ext.append(2 * q - 1)
            if q > 1 and 2 * q - 2 <= D:
                poly.append(2 * q - 2)
            q *= p
        values = _conv(_ext_counts(ext, D), _poly_counts(poly, D))
        return _degreewise(values, D, K)

    if name == "rational_loops_sphere":
        j = int(params.pop("j"))
        m = int(params.pop("m"))
        _done(params, name)
        if j not in (1, 2) or m < 2:
            raise InvalidInputError("rational_loops_sphere needs j in {1,2}, m >= 2")
        if j == 1:
            if m % 2:
                values = _poly_counts([m - 1], D)
            else:
                values = _conv(_ext_counts([m - 1], D), _poly_counts([2 * m - 2], D))
        else:
            if m % 2:
                values = _ext_counts([m - 2], D) if m > 2 else _ext_counts([1], D)
                if m == 2:
                    raise InvalidInputError("rational_loops_sphere(2, 2) undefined")
            else:
                if m == 2:
                    raise InvalidInputError(
                        "double loops on the 2-sphere have no finite closed form here"
                    )
                values = _conv(
                    _poly_counts([m - 2], D), _ext_counts([2 * m - 3], D)
                )
        return _degreewise(values, D, K)

    if name == "stunted_weight2":
        d = int(params.pop("d"))
        j = int(params.pop("j"))
        _done(params, name)
        if d < 1 or j < 2:
            raise InvalidInputError("stunted_weight2 needs d >= 1, j >= 2")
        if K < 2:
            raise InvalidInputError("stunted_weight2 needs max_weight >= 2")
        return BiSeries.from_entries(
            D, K, {(x, 2): 1 for x in range(2 * d, min(2 * d + j, D + 1))}
        )

    if name == "even_sphere_split":
        k = int(params.pop("k"))
        field = params.pop("field")
        _done(params, name)
        if k < 2:
            raise InvalidInputError("even_sphere_split needs k >= 2")
        char = field if isinstance(field, FieldChar) else FieldChar.from_name(str(field))
        james = classical_series("james", {"d": 2 * k - 2}, D, K)
        rest = factor_series({4 * k - 3: 1}, 2, char, D, K)
        return multiply(james, rest)

    raise InvalidInputError(f"unknown classical series {name!r}")


def _done(params: dict, name: str) -> None:
    if params:
        raise InvalidInputError(
            f"unexpected parameters for {name!r}: {sorted(params)}"
        )


def diff_report(a: BiSeries, b: BiSeries) -> list[tuple[int, int, int, int]]:
    """Sorted list of differing cells (degree, weight, a value, b value);
    empty exactly when the series agree."""
    if a.caps() != b.caps():
        raise ConfigurationError("diff_report needs series with shared caps")
    rows = []
    for d in range(a.max_degree + 1):
        for k in range(a.max_weight + 1):
            va, vb = a.get(d, k), b.get(d, k)
            if va != vb:
                rows.append((d, k, va, vb))
    return rows
