"""Product decomposition of configuration spaces with wedge labels, checked
as a Poincare-series identity.

For labels X_1 v ... v X_r the series of C((M,M0) x R; wedge) must agree
degreewise with the product over basic products w (a Hall-type basis of the
free Lie algebra on r letters) of the series of C((M_w, M0_w) x R; smash),
where the smash takes a_i copies of X_i (a_i = multiplicity of letter i in
w) and (M_w, M0_w) is a tubular neighbourhood of a diagonal: its relative
homology is that of (M, M0) shifted up by the codimension (l(w)-1)*m_dim,
a Thom-class identification that is unconditional mod 2.

The identity is a homotopy equivalence of spaces, not of filtered objects,
so only degreewise totals are compared; the weight gradings of the two
sides genuinely differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .errors import InvalidInputError
from .loops import FieldChar, GradedBetti, normalize_betti
from .assemble import factor_product
from .series import BiSeries, multiply


@dataclass(frozen=True)
class BasicWord:
    """Basic products with a fixed multiplicity vector over the letters."""

    multiplicities: tuple[int, ...]
    length: int
    count: int


def _mobius(n: int) -> int:
    result = 1
    k = 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    if n > 1:
        result = -result
    return result


def _gcd_all(values: tuple[int, ...]) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g


def _multinomial(total: int, parts: tuple[int, ...]) -> int:
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


def _witt_count(mult: tuple[int, ...]) -> int:
    """Number of basic products with the given letter multiplicities
    (the necklace/Witt formula; periodic vectors come out as zero)."""
    length = sum(mult)
    total = 0
    for div in range(1, _gcd_all(mult) + 1):
        if all(a % div == 0 for a in mult):
            total += _mobius(div) * _multinomial(
                length // div, tuple(a // div for a in mult)
            )
    count, rem = divmod(total, length)
    assert rem == 0, "Witt formula must divide evenly"
    return count


def basic_words(r: int, max_length: int) -> list[BasicWord]:
    """All multiplicity vectors of basic products on r letters, with counts,
    for lengths 1..max_length."""
    if r < 1:
        raise InvalidInputError("need at least one letter")
    words = []
    for length in range(1, max_length + 1):
        for slots in combinations_with_replacement(range(r), length):
            mult = tuple(slots.count(i) for i in range(r))
            count = _witt_count(mult)
            if count:
                words.append(BasicWord(mult, length, count))
    return words


def _smash_betti(x_list: list[GradedBetti], mult: tuple[int, ...]) -> GradedBetti:
    """Reduced Betti numbers of the smash of mult[i] copies of each X_i:
    the convolution of the reduced tables."""
    acc: GradedBetti = {0: 1}
    for x, a in zip(x_list, mult):
        for _ in range(a):
            nxt: GradedBetti = {}
            for d1, c1 in acc.items():
                for d2, c2 in x.items():
                    key = d1 + d2
                    nxt[key] = nxt.get(key, 0) + c1 * c2
            acc = nxt
    return acc


@dataclass
class HiltonReport:
    """Degreewise comparison of the wedge series against the basic-product
    decomposition."""

    passed: bool
    max_degree: int
    words_used: int
    first_mismatch: tuple[int, int, int] | None
    lhs_totals: list[int]
    rhs_totals: list[int]
    word_summary: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": "hilton_milnor",
            "status": "pass" if self.passed else "fail",
            "max_degree": self.max_degree,
            "words_used": self.words_used,
            "first_mismatch": self.first_mismatch,
            "lhs_totals": self.lhs_totals,
            "rhs_totals": self.rhs_totals,
            "words": self.word_summary,
        }


def hilton_milnor_check(
    m_dim: int,
    rel_betti: GradedBetti,
    x_list: list[GradedBetti],
    max_degree: int,
    char: FieldChar | None = None,
    orientable: bool = False,
) -> HiltonReport:
    """Verify the wedge-label decomposition degreewise up to max_degree.

    Runs over F2 by default, where the diagonal Thom shift needs no
    orientation hypothesis; pass char 0 together with orientable=True to
    run the same comparison rationally.  n is fixed at 1 (the decomposition
    concerns a single Euclidean factor).
    """
    if char is None:
        char = FieldChar.mod2()
    if not char.is_two and not (char.is_zero and orientable):
        raise InvalidInputError(
            "the decomposition check runs mod 2, or rationally with "
            "orientable=True; other characteristics need orientation data"
        )
    if not x_list:
        raise InvalidInputError("need at least one label space")
    x_list = [normalize_betti(x, min_degree=1) for x in x_list]
    for x in x_list:
        if not x:
            raise InvalidInputError("every label space must have reduced classes")
    rel = normalize_betti(rel_betti)
    if not rel or any(q > m_dim for q in rel):
        raise InvalidInputError("relative Betti data must be nonzero within 0..m_dim")

    D = max_degree
    K = D  # weights are not compared; degree >= weight holds throughout
    bottoms = [min(x) for x in x_list]
    min_rel = min(rel)

    wedge: GradedBetti = {}
    for x in x_list:
        for d, c in x.items():
            wedge[d] = wedge.get(d, 0) + c
    lhs = factor_product(m_dim, rel, 1, wedge, char, D, K)

    # a length-l factor first contributes in degree (l-1)m + min_rel + bottom
    max_len = 1
    while (
        max_len * min(bottoms) + (max_len) * m_dim - m_dim + min_rel <= D
        and max_len <= D + 1
    ):
        max_len += 1

    rhs = BiSeries.one(D, K)
    used = 0
    summary = []
    for word in basic_words(len(x_list), max_len):
        shift = (word.length - 1) * m_dim
        smash = _smash_betti(x_list, word.multiplicities)
        low = shift + min_rel + min(smash)
        if low > D:
            continue
        shifted_rel = {q + shift: b for q, b in rel.items()}
        factor = factor_product(
            word.length * m_dim, shifted_rel, 1, smash, char, D, K
        )
        rhs = multiply(rhs, factor**word.count if word.count != 1 else factor)
        used += 1
        summary.append(
            {
                "multiplicities": list(word.multiplicities),
                "length": word.length,
                "count": word.count,
                "lowest_degree": low,
            }
        )

    lhs_totals = lhs.degree_totals()
    rhs_totals = rhs.degree_totals()
    first = None
    for d, (lv, rv) in enumerate(zip(lhs_totals, rhs_totals)):
        if lv != rv:
            first = (d, lv, rv)
            break
    return HiltonReport(
        passed=first is None,
        max_degree=D,
        words_used=used,
        first_mismatch=first,
        lhs_totals=lhs_totals,
        rhs_totals=rhs_totals,
        word_summary=summary,
    )
