"""Brute-force oracles and one named check per identity the tables rest on.

Every check recomputes its claim through an independent route (enumeration,
interpolation, or the monomial power rule) and reports the first
counterexample on failure, so a run doubles as a certificate at the
configured ranges. Ranges live in VerifyConfig; nothing here is randomized,
hence two runs with the same config produce identical reports.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .binomial_poly import basis, from_values
from .constants import (
    c_table,
    lambda_lcm_c,
    lambda_product,
    q_direct,
    q_table,
    q_total,
)
from .exact_arith import EnumerationCapError, denominator_of, lcm_range, vp_int, vp_rat
from .stirling import (
    compositions,
    d_table,
    f_direct,
    f_from_partial_sums,
    f_from_stirling,
    f_from_subsets,
    f_table,
    stirling_first,
)
from .triangles import IntegerTriangle, RationalTriangle, StirlingTable

# The oracle differentiates every basis polynomial up to degree n in the
# monomial basis; cost grows quickly enough to warrant a cap.
DEFAULT_ORACLE_CAP = 14


@dataclass(frozen=True)
class Counterexample:
    """Parameters plus the two values that were supposed to agree."""

    params: str
    lhs: str
    rhs: str

    def __str__(self) -> str:
        return f"{self.params}: {self.lhs} vs {self.rhs}"


@dataclass(frozen=True)
class CheckReport:
    name: str
    tested: str
    passed: bool
    counterexample: Counterexample | None = None

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")


@dataclass(frozen=True)
class VerifyConfig:
    """Named ranges for every check; defaults keep the full suite fast."""

    theorem1_max_n: int = 12
    theorem2_oracle_max_n: int = 12
    theorem2_divisibility_max_n: int = 20
    theorem3_divisibility_max_n: int = 20
    theorem3_witness_max_n: int = 10
    theorem4_routes_max_n: int = 30
    theorem4_oracle_max_n: int = 12
    lemma1_max_n: int = 16
    lemma2_max_a: int = 10_000
    lemma2_primes: tuple[int, ...] = (2, 3, 5, 7)
    lemma3_max_n: int = 30
    lemma3_primes: tuple[int, ...] = (2, 3, 5)
    corollary1_max_n: int = 64
    proposition1_max_n: int = 14
    proposition2_max_n: int = 14
    oracle_cap: int = DEFAULT_ORACLE_CAP
    enum_cap: int | None = None

    def with_max_n(self, n: int, check: str | None = None) -> "VerifyConfig":
        """Rewrite the range fields of one check (or of all checks)."""
        if check is None:
            names = [f for fields in _RANGE_FIELDS.values() for f in fields]
        else:
            names = list(_RANGE_FIELDS[check])
        return dataclasses.replace(self, **{name: n for name in names})


_RANGE_FIELDS: dict[str, tuple[str, ...]] = {
    "corollary1": ("corollary1_max_n",),
    "lemma1": ("lemma1_max_n",),
    "lemma2": ("lemma2_max_a",),
    "lemma3": ("lemma3_max_n",),
    "proposition1": ("proposition1_max_n",),
    "proposition2": ("proposition2_max_n",),
    "theorem1": ("theorem1_max_n",),
    "theorem2": ("theorem2_oracle_max_n", "theorem2_divisibility_max_n"),
    "theorem3": ("theorem3_divisibility_max_n", "theorem3_witness_max_n"),
    "theorem4": ("theorem4_routes_max_n", "theorem4_oracle_max_n"),
}

CHECK_NAMES: tuple[str, ...] = tuple(sorted(_RANGE_FIELDS))


def _fail(name: str, tested: str, params: str, lhs, rhs) -> CheckReport:
    return CheckReport(name, tested, False, Counterexample(params, str(lhs), str(rhs)))


def minimal_multiplier_oracle(n: int, k: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Least positive a making a * P^(k) integer-valued for all P of degree <= n.

    Quantifying over the basis polynomials C(X, m), m <= n, suffices: every
    integer-valued polynomial of degree <= n is an integer combination of
    them, and P -> a * P^(k) is linear, so integrality on the basis implies
    integrality everywhere. Each basis derivative is taken in the monomial
    basis (power rule) and converted back, keeping this route independent of
    the difference-expansion machinery it is used to certify. The answer is
    the lcm of all basis-coefficient denominators; for k > n it is 1.
    """
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got ({n}, {k})")
    if n > cap:
        raise EnumerationCapError("minimal multiplier oracle", n, cap)
    out = 1
    for m in range(k, n + 1):
        derived = basis(m).to_monomial().derivative(k).to_binomial()
        for coeff in derived.coeffs:
            out = math.lcm(out, coeff.denominator)
    return out


def check_theorem1(max_n: int = 12, oracle_cap: int = DEFAULT_ORACLE_CAP) -> CheckReport:
    """Oracle for the first derivative equals lcm(1..n)."""
    name, tested = "theorem1", f"1 <= n <= {max_n}"
    for n in range(1, max_n + 1):
        lhs = minimal_multiplier_oracle(n, 1, cap=oracle_cap)
        rhs = lcm_range(n)
        if lhs != rhs:
            return _fail(name, tested, f"n={n}", f"oracle={lhs}", f"lcm(1..n)={rhs}")
    return CheckReport(name, tested, True)


def check_theorem2(
    oracle_max_n: int = 12,
    divisibility_max_n: int = 20,
    c: IntegerTriangle | None = None,
    q: IntegerTriangle | None = None,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> CheckReport:
    """c-table equals the oracle, and c(n, k) divides q(n, k)."""
    name = "theorem2"
    tested = f"oracle equality for n <= {oracle_max_n}; divisibility for n <= {divisibility_max_n}"
    hi = max(oracle_max_n, divisibility_max_n)
    if c is None:
        c = c_table(hi, d_table(f_table(hi)))
    if q is None:
        q = q_table(hi)
    for n in range(oracle_max_n + 1):
        for k in range(n + 1):
            want = minimal_multiplier_oracle(n, k, cap=oracle_cap)
            if c[n, k] != want:
                return _fail(name, tested, f"n={n}, k={k}", f"c={c[n, k]}", f"oracle={want}")
    for n in range(divisibility_max_n + 1):
        for k in range(n + 1):
            if q[n, k] % c[n, k] != 0:
                return _fail(
                    name, tested, f"n={n}, k={k}", f"c={c[n, k]}", f"q={q[n, k]} not a multiple"
                )
    return CheckReport(name, tested, True)


def check_theorem3(
    divisibility_max_n: int = 20,
    witness_max_n: int = 10,
    c: IntegerTriangle | None = None,
    q: IntegerTriangle | None = None,
    f: RationalTriangle | None = None,
) -> CheckReport:
    """q(n, k) divides k! * c(n, k); witness products certify the bound.

    For every composition (i_1, ..., i_k) with sum m the product of basis
    polynomials C(X, i_1) * ... * C(X, i_k) is rebuilt by evaluation at
    0..m and forward-difference interpolation; its k-th derivative at 0 must
    equal (-1)**(m-k) * k! / (i_1 * ... * i_k), whose denominator must
    divide k! * c(m, k).
    """
    name = "theorem3"
    tested = (
        f"divisibility for n <= {divisibility_max_n}; "
        f"witness compositions with sum <= {witness_max_n}"
    )
    hi = max(divisibility_max_n, witness_max_n)
    if c is None:
        c = c_table(hi, d_table(f_table(hi)))
    if q is None:
        q = q_table(hi)
    if f is None:
        f = f_table(witness_max_n)
    for n in range(divisibility_max_n + 1):
        for k in range(n + 1):
            if (math.factorial(k) * c[n, k]) % q[n, k] != 0:
                return _fail(
                    name, tested, f"n={n}, k={k}", f"k!*c={math.factorial(k) * c[n, k]}",
                    f"q={q[n, k]} not a divisor",
                )
    for k in range(1, witness_max_n + 1):
        for m in range(k, witness_max_n + 1):
            for parts in compositions(m, k):
                values = [math.prod(math.comb(x, i) for i in parts) for x in range(m + 1)]
                witness = from_values(values).derivative(k, f).eval_int(0)
                want = Fraction((-1) ** (m - k) * math.factorial(k), math.prod(parts))
                if witness != want:
                    return _fail(
                        name, tested, f"parts={parts}", f"derivative(0)={witness}", f"expected={want}"
                    )
                if (math.factorial(k) * c[m, k]) % denominator_of(witness) != 0:
                    return _fail(
                        name, tested, f"parts={parts}",
                        f"den={denominator_of(witness)}",
                        f"k!*c={math.factorial(k) * c[m, k]} not a multiple",
                    )
    return CheckReport(name, tested, True)


def check_theorem4(
    routes_max_n: int = 30,
    oracle_max_n: int = 12,
    c: IntegerTriangle | None = None,
    q: IntegerTriangle | None = None,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> CheckReport:
    """The three lambda routes agree; the oracle lcm reproduces them."""
    name = "theorem4"
    tested = f"three routes for n <= {routes_max_n}; oracle lcm for n <= {oracle_max_n}"
    hi = max(routes_max_n, oracle_max_n)
    if c is None:
        c = c_table(hi, d_table(f_table(hi)))
    if q is None:
        q = q_table(hi)
    for n in range(routes_max_n + 1):
        via_c = lambda_lcm_c(n, c)
        via_q = q_total(n, q)
        via_primes = lambda_product(n).value()
        if not via_c == via_q == via_primes:
            return _fail(
                name, tested, f"n={n}",
                f"lcm(c row)={via_c}",
                f"lcm(q row)={via_q}, prime product={via_primes}",
            )
    for n in range(oracle_max_n + 1):
        via_oracle = 1
        for k in range(n + 1):
            via_oracle = math.lcm(via_oracle, minimal_multiplier_oracle(n, k, cap=oracle_cap))
        if via_oracle != lambda_lcm_c(n, c):
            return _fail(
                name, tested, f"n={n}", f"oracle lcm={via_oracle}", f"lcm(c row)={lambda_lcm_c(n, c)}"
            )
    return CheckReport(name, tested, True)


def check_lemma1(max_n: int = 16, f: RationalTriangle | None = None) -> CheckReport:
    """Mean of reciprocal absolute slopes of C(X, n) at 0..n-1 is 2**(n-1)."""
    name, tested = "lemma1", f"1 <= n <= {max_n}"
    if f is None:
        f = f_table(max_n)
    for n in range(1, max_n + 1):
        slope = basis(n).derivative(1, f)
        total = Fraction(0)
        for k in range(n):
            value = slope.eval_int(k)
            if value == 0:
                return _fail(name, tested, f"n={n}, k={k}", "slope=0", "expected nonzero")
            total += 1 / abs(value)
        if total / n != 2 ** (n - 1):
            return _fail(name, tested, f"n={n}", f"mean={total / n}", f"expected={2 ** (n - 1)}")
    return CheckReport(name, tested, True)


def check_corollary1(max_n: int = 64) -> CheckReport:
    """lcm(1..n) >= 2**(n-1)."""
    name, tested = "corollary1", f"1 <= n <= {max_n}"
    for n in range(1, max_n + 1):
        if lcm_range(n) < 2 ** (n - 1):
            return _fail(name, tested, f"n={n}", f"lcm={lcm_range(n)}", f"bound={2 ** (n - 1)}")
    return CheckReport(name, tested, True)


def check_lemma2(max_a: int = 10_000, primes: tuple[int, ...] = (2, 3, 5, 7)) -> CheckReport:
    """vp(a) <= a / p, exhaustively."""
    name, tested = "lemma2", f"1 <= a <= {max_a}, p in {primes}"
    for p in primes:
        for a in range(1, max_a + 1):
            if vp_int(a, p) * p > a:
                return _fail(name, tested, f"a={a}, p={p}", f"vp={vp_int(a, p)}", f"a/p={a}/{p}")
    return CheckReport(name, tested, True)


def check_lemma3(
    max_n: int = 30,
    primes: tuple[int, ...] = (2, 3, 5),
    f: RationalTriangle | None = None,
) -> CheckReport:
    """The p-adic valuation of F(k*p, k) is exactly -k."""
    name, tested = "lemma3", f"k*p <= {max_n}, p in {primes}"
    if f is None:
        f = f_table(max_n)
    for p in primes:
        k = 1
        while k * p <= max_n:
            valuation = vp_rat(f[k * p, k], p)
            if valuation != -k:
                return _fail(name, tested, f"k={k}, p={p}", f"vp={valuation}", f"expected={-k}")
            k += 1
    return CheckReport(name, tested, True)


def cross_check_f(
    max_n: int = 14,
    f: RationalTriangle | None = None,
    s: StirlingTable | None = None,
    enum_cap: int | None = None,
) -> CheckReport:
    """All F routes agree entrywise, including both derivative-at-0 routes."""
    name, tested = "proposition1", f"0 <= k <= n <= {max_n}"
    if f is None:
        f = f_table(max_n)
    if s is None:
        s = stirling_first(max_n)
    for n in range(max_n + 1):
        mono = basis(n).to_monomial()
        for k in range(n + 1):
            base = f[n, k]
            routes: list[tuple[str, Fraction]] = [
                ("direct", f_direct(n, k, cap=enum_cap)),
                ("stirling", f_from_stirling(n, k, s)),
                ("power rule at 0", abs(mono.derivative(k).eval(0))),
                (
                    "difference expansion at 0",
                    abs(basis(n).derivative(k, f).eval_int(0)),
                ),
            ]
            if k >= 2:
                routes.append(("subsets", f_from_subsets(n, k, cap=enum_cap)))
            if k >= 1:
                routes.append(("partial sums", f_from_partial_sums(n, k, f)))
            for label, value in routes:
                if value != base:
                    return _fail(
                        name, tested, f"n={n}, k={k}, route={label}", f"{value}", f"table={base}"
                    )
    return CheckReport(name, tested, True)


def check_proposition2(
    max_n: int = 14,
    q: IntegerTriangle | None = None,
    enum_cap: int | None = None,
) -> CheckReport:
    """The q recurrence matches brute-force enumeration."""
    name, tested = "proposition2", f"0 <= k <= n <= {max_n}"
    if q is None:
        q = q_table(max_n)
    for n in range(max_n + 1):
        for k in range(n + 1):
            want = q_direct(n, k, cap=enum_cap)
            if q[n, k] != want:
                return _fail(name, tested, f"n={n}, k={k}", f"table={q[n, k]}", f"enumeration={want}")
    return CheckReport(name, tested, True)


def run_check(name: str, config: VerifyConfig = VerifyConfig()) -> CheckReport:
    """Run one named check with the configured ranges."""
    dispatch: dict[str, Callable[[], CheckReport]] = {
        "theorem1": lambda: check_theorem1(config.theorem1_max_n, config.oracle_cap),
        "theorem2": lambda: check_theorem2(
            config.theorem2_oracle_max_n,
            config.theorem2_divisibility_max_n,
            oracle_cap=config.oracle_cap,
        ),
        "theorem3": lambda: check_theorem3(
            config.theorem3_divisibility_max_n, config.theorem3_witness_max_n
        ),
        "theorem4": lambda: check_theorem4(
            config.theorem4_routes_max_n,
            config.theorem4_oracle_max_n,
            oracle_cap=config.oracle_cap,
        ),
        "lemma1": lambda: check_lemma1(config.lemma1_max_n),
        "lemma2": lambda: check_lemma2(config.lemma2_max_a, config.lemma2_primes),
        "lemma3": lambda: check_lemma3(config.lemma3_max_n, config.lemma3_primes),
        "corollary1": lambda: check_corollary1(config.corollary1_max_n),
        "proposition1": lambda: cross_check_f(
            config.proposition1_max_n, enum_cap=config.enum_cap
        ),
        "proposition2": lambda: check_proposition2(
            config.proposition2_max_n, enum_cap=config.enum_cap
        ),
    }
    if name not in dispatch:
        raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    return dispatch[name]()


def run_all(config: VerifyConfig = VerifyConfig()) -> list[CheckReport]:
    """Every check at its configured range, sorted by check name."""
    return [run_check(name, config) for name in CHECK_NAMES]
