"""Assembly of the labeled-configuration-space series.

For a compact manifold pair (M, M0) of dimension m_dim with relative Betti
numbers b_q over F, a Euclidean factor R^n (n >= 1) and a label space X,
the homology series of C((M,M0) x R^n; X) is assembled as

    prod_{q=0}^{m_dim} factor_series(Sigma^q X, m_dim + n - q, F)^(b_q)

with the configuration-length filtration as weight grading (mode
``theorem_a``; X must be simply connected, reduced classes in degrees
>= 2).  Mode ``theorem_b`` lifts the restriction on X: the same product is
formed with the double suspension S^2 X at an enlarged internal degree cap
and each weight-k slice is desuspended by 2k, which computes the reduced
homology of every filtration quotient D_k for arbitrary X.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import InvalidInputError
from .loops import FieldChar, GradedBetti, factor_series, normalize_betti, suspend_betti
from .series import BiSeries, desuspend_by_weight, multiply

MODE_THEOREM_A = "theorem_a"
MODE_THEOREM_B = "theorem_b"


@dataclass
class ProblemSpec:
    """One full problem instance.

    ``max_weight`` is mandatory for theorem_b (for disconnected X
    arbitrarily many weights land in each low degree); theorem_a derives
    max_degree // 2 when it is omitted, which loses nothing because weight
    k then only contributes from degree 2k upward.
    """

    m_dim: int
    rel_betti: GradedBetti
    n: int
    x_betti: GradedBetti
    char: FieldChar
    max_degree: int
    max_weight: int | None = None
    mode: str = MODE_THEOREM_A

    def validate(self) -> None:
        if self.mode not in (MODE_THEOREM_A, MODE_THEOREM_B):
            raise InvalidInputError(f"unknown mode {self.mode!r}")
        if self.m_dim < 0:
            raise InvalidInputError("manifold dimension must be >= 0")
        if self.n < 1:
            raise InvalidInputError("the Euclidean factor needs n >= 1")
        if self.max_degree < 0:
            raise InvalidInputError("max_degree must be >= 0")
        rel = normalize_betti(self.rel_betti)
        if any(q > self.m_dim for q in rel):
            raise InvalidInputError(
                "relative Betti classes must live in degrees 0..m_dim"
            )
        if self.mode == MODE_THEOREM_A:
            x = normalize_betti(self.x_betti)
            if any(d < 2 for d in x):
                raise InvalidInputError(
                    "theorem_a mode requires a simply connected label space: "
                    "reduced classes in degrees >= 2 (theorem_b handles any X)"
                )
        else:
            normalize_betti(self.x_betti)
            if self.max_weight is None:
                raise InvalidInputError(
                    "theorem_b mode needs an explicit max_weight cap"
                )
        if self.max_weight is not None and self.max_weight < 0:
            raise InvalidInputError("max_weight must be >= 0")

    def effective_max_weight(self) -> int:
        if self.max_weight is not None:
            return self.max_weight
        return self.max_degree // 2


def factor_product(
    m_dim: int,
    rel_betti: GradedBetti,
    n: int,
    x_betti: GradedBetti,
    char: FieldChar,
    max_degree: int,
    max_weight: int,
) -> BiSeries:
    """Shared assembly core: the tensor product of loop-space factors.

    One factor of j = m_dim + n - q loops on the q-fold suspension of the
    labels appears for every relative class in degree q, so j >= n >= 1
    always; the degenerate q > m_dim branch is unreachable.
    """
    rel = normalize_betti(rel_betti)
    x = normalize_betti(x_betti)
    m = m_dim + n
    acc = BiSeries.one(max_degree, max_weight)
    for q in sorted(rel):
        j = m - q
        assert j >= 1, "factor with j < 1: relative class beyond m_dim"
        fs = factor_series(suspend_betti(x, q), j, char, max_degree, max_weight)
        acc = multiply(acc, fs ** rel[q] if rel[q] != 1 else fs)
    return acc


def theorem_a(spec: ProblemSpec) -> BiSeries:
    """Filtration series of C((M,M0) x R^n; X) for simply connected X."""
    if spec.mode != MODE_THEOREM_A:
        raise InvalidInputError("spec mode must be theorem_a")
    spec.validate()
    return factor_product(
        spec.m_dim,
        spec.rel_betti,
        spec.n,
        spec.x_betti,
        spec.char,
        spec.max_degree,
        spec.effective_max_weight(),
    )


def theorem_b(spec: ProblemSpec) -> BiSeries:
    """Per-weight homology of the filtration quotients D_k, any label space.

    The product is assembled with the doubly suspended labels at internal
    degree cap max_degree + 2*max_weight, so that shifting the weight-k
    slice down by 2k fills the requested window exactly.
    """
    if spec.mode != MODE_THEOREM_B:
        raise InvalidInputError("spec mode must be theorem_b")
    spec.validate()
    K = spec.effective_max_weight()
    inner_cap = spec.max_degree + 2 * K
    inner = factor_product(
        spec.m_dim,
        spec.rel_betti,
        spec.n,
        suspend_betti(normalize_betti(spec.x_betti), 2),
        spec.char,
        inner_cap,
        K,
    )
    return desuspend_by_weight(inner, 2).truncated(spec.max_degree, K)


def filtration_table(s: BiSeries) -> list[dict[int, int]]:
    """Row k: Betti numbers of the weight-k slice (the k-adic quotient D_k).

    Summing the rows recovers the input series.
    """
    rows = []
    for k in range(s.max_weight + 1):
        col = s.weight_slice(k)
        rows.append({d: v for d, v in enumerate(col) if v})
    return rows


# -- manifold presets ----------------------------------------------------


def preset(
    name: str, char: FieldChar | None = None, **params: int
) -> tuple[int, GradedBetti]:
    """Dimension and relative Betti data of a named manifold (pair).

    sphere(m), torus(m), surface(genus), disk_pair(m) for (D^m, bd D^m),
    rp(m) for RP^m with F2 coefficients, cube(m) for the absolute pair
    (I^m, empty), and point().
    """
    def need(key: str) -> int:
        if key not in params:
            raise InvalidInputError(f"preset {name!r} needs parameter {key!r}")
        v = params[key]
        if not isinstance(v, int) or v < 0:
            raise InvalidInputError(f"preset parameter {key!r} must be an int >= 0")
        return v

    known = {"sphere", "torus", "surface", "disk_pair", "rp", "cube", "point"}
    if name not in known:
        raise InvalidInputError(
            f"unknown preset {name!r}; known: {', '.join(sorted(known))}"
        )
    extra = set(params) - {"m", "genus"}
    if extra:
        raise InvalidInputError(f"unexpected preset parameters {sorted(extra)}")

    if name == "sphere":
        m = need("m")
        if m == 0:
            return 0, {0: 2}
        return m, {0: 1, m: 1}
    if name == "torus":
        m = need("m")
        return m, {q: math.comb(m, q) for q in range(m + 1)}
    if name == "surface":
        g = need("genus")
        return 2, {0: 1, 1: 2 * g, 2: 1} if g else {0: 1, 2: 1}
    if name == "disk_pair":
        m = need("m")
        return m, {m: 1}
    if name == "rp":
        m = need("m")
        if char is None or not char.is_two:
            raise InvalidInputError(
                "preset 'rp' carries F2 Betti data; select the field F2"
            )
        return m, {q: 1 for q in range(m + 1)}
    if name == "cube":
        m = need("m")
        return m, {0: 1}
    return 0, {0: 1}  # point


# -- the A/B coherence suite ----------------------------------------------


@dataclass
class CheckReport:
    """Outcome of a named consistency suite."""

    name: str
    passed: bool
    cases: int
    failures: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "cases": self.cases,
            "failures": self.failures,
        }


def random_problem_specs(
    seed: int, trials: int, max_degree: int
) -> list[ProblemSpec]:
    """Reproducible random specs with simply connected labels.

    Characteristics cycle through 0, 2 and an odd prime so each suite run
    touches all three.
    """
    rng = random.Random(seed)
    chars = [FieldChar.rational(), FieldChar.mod2(), FieldChar.odd(3)]
    specs = []
    for i in range(trials):
        m_dim = rng.randint(0, 3)
        rel: GradedBetti = {}
        for q in range(m_dim + 1):
            b = rng.choice((0, 0, 1, 1, 2))
            if b:
                rel[q] = b
        if not rel:
            rel[rng.randint(0, m_dim)] = 1
        x: GradedBetti = {}
        for _ in range(rng.randint(1, 2)):
            d = rng.randint(2, 4)
            x[d] = x.get(d, 0) + 1
        specs.append(
            ProblemSpec(
                m_dim=m_dim,
                rel_betti=rel,
                n=rng.randint(1, 3),
                x_betti=x,
                char=chars[i % len(chars)],
                max_degree=max_degree,
                max_weight=max_degree // 2,
            )
        )
    return specs


def ab_coherence_report(
    seed: int = 0, trials: int = 20, max_degree: int = 30
) -> CheckReport:
    """Check theorem_a == theorem_b bigraded-exactly on seeded random specs."""
    failures = []
    for idx, spec in enumerate(random_problem_specs(seed, trials, max_degree)):
        spec.mode = MODE_THEOREM_A
        a = theorem_a(spec)
        spec.mode = MODE_THEOREM_B
        b = theorem_b(spec)
        if a != b:
            mism = sorted(
                (d, k, a.get(d, k), b.get(d, k))
                for d, k, _ in set(a.items()) ^ set(b.items())
            )[:5]
            failures.append(
                {
                    "case": idx,
                    "spec": describe_spec(spec),
                    "first_mismatches": mism,
                }
            )
    return CheckReport(
        name="ab_coherence",
        passed=not failures,
        cases=trials,
        failures=failures,
    )


def describe_spec(spec: ProblemSpec) -> dict:
    return {
        "m_dim": spec.m_dim,
        "rel_betti": {str(q): b for q, b in sorted(spec.rel_betti.items())},
        "n": spec.n,
        "x_betti": {str(d): b for d, b in sorted(spec.x_betti.items())},
        "field": spec.char.name,
        "max_degree": spec.max_degree,
        "max_weight": spec.effective_max_weight(),
    }


def weight_one_slice_expected(
    rel_betti: GradedBetti, x_betti: GradedBetti, max_degree: int
) -> list[int]:
    """Degreewise dimensions of the length-1 configurations, i.e. of the
    smash of M/M0 with X: the convolution of the two reduced Betti tables."""
    rel = normalize_betti(rel_betti)
    x = normalize_betti(x_betti)
    out = [0] * (max_degree + 1)
    for q, b in rel.items():
        for d, c in x.items():
            if q + d <= max_degree:
                out[q + d] += b * c
    return out
