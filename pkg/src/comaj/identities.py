"""Executable forms of the generating-function identities.

Each identity is computed through independent code paths and compared
coefficientwise.  A failing comparison reports the graded-lex-first
differing monomial together with both coefficients.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import engine, perm
from .characters import centralizer_size, character
from .enumeration import fundamental_principal_series, schur_principal_by_tableaux
from .qpoly import (
    QPoly,
    Truncation,
    collapse,
    pochhammer,
    pochhammer_all,
    schur_principal_jt,
)
from .tableaux import Partition, hook_length_count, partition, partitions, standard_tableaux

Side = tuple[str, QPoly]


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: str  # "pass" | "fail"
    digests: dict[str, str]
    elapsed: float = 0.0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_obj(self) -> dict:
        # Elapsed time stays off the wire so report streams are byte-stable.
        return {
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "digests": self.digests,
            "counterexample": self.counterexample,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))


def _first_difference(a: QPoly, b: QPoly) -> dict | None:
    keys = sorted(set(a.terms) | set(b.terms), key=lambda e: (sum(e), e))
    for e in keys:
        ca, cb = a.coeff(e), b.coeff(e)
        if ca != cb:
            return {"exponent": list(e), "left": str(ca), "right": str(cb)}
    return None


def _compare(identity: str, params: dict, pairs: list[tuple[Side, Side]],
             started: float, extra_checks: list[dict] | None = None) -> VerificationReport:
    digests: dict[str, str] = {}
    for (name_a, poly_a), (name_b, poly_b) in pairs:
        digests.setdefault(name_a, poly_a.digest())
        digests.setdefault(name_b, poly_b.digest())
    counterexample = None
    status = "pass"
    for (name_a, poly_a), (name_b, poly_b) in pairs:
        diff = _first_difference(poly_a, poly_b)
        if diff is not None:
            status = "fail"
            counterexample = {"pair": [name_a, name_b], **diff}
            break
    if status == "pass":
        for check in extra_checks or []:
            if check["left"] != check["right"]:
                status = "fail"
                counterexample = {
                    "check": check["name"],
                    "left": str(check["left"]),
                    "right": str(check["right"]),
                }
                break
    return VerificationReport(
        identity=identity,
        params=params,
        status=status,
        digests=digests,
        elapsed=time.perf_counter() - started,
        counterexample=counterexample,
    )


def _chained(sides: list[Side]) -> list[tuple[Side, Side]]:
    return list(zip(sides, sides[1:]))


def exact_degree_bound(n: int, k: int) -> int:
    """Largest possible total comaj weight: k * n(n-1)/2."""
    return k * n * (n - 1) // 2


def _sigma_vectors(n: int, k: int):
    """Stream all (k-1)-tuples over S_n in lexicographic mixed-radix order."""
    words = tuple(perm.symmetric_group(n))
    return itertools.product(words, repeat=k - 1)


def fundamental_comaj_polynomial(R, n: int, k: int) -> QPoly:
    """Sum over permutation vectors of the comaj-component weight, for one R."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    D = exact_degree_bound(n, k)
    acc: dict[tuple[int, ...], int] = {}
    for sigmas in _sigma_vectors(n, k):
        e = engine.comaj_components(R, n, sigmas)
        acc[e] = acc.get(e, 0) + 1
    return QPoly(k, D, acc)


def schur_comaj_polynomial(lam: Partition, k: int) -> QPoly:
    """Sum of comaj weights over standard tableaux and permutation vectors."""
    lam = partition(lam)
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    n = sum(lam)
    D = exact_degree_bound(n, k)
    acc: dict[tuple[int, ...], int] = {}
    for T in standard_tableaux(lam):
        R = T.descent_set()
        for sigmas in _sigma_vectors(n, k):
            e = engine.comaj_components(R, n, sigmas)
            acc[e] = acc.get(e, 0) + 1
    return QPoly(k, D, acc)


def labeled_tableau_polynomial(lam: Partition, k: int) -> QPoly:
    """Same sum computed from the weights of closed label chains."""
    lam = partition(lam)
    n = sum(lam)
    D = exact_degree_bound(n, k)
    acc: dict[tuple[int, ...], int] = {}
    for T in standard_tableaux(lam):
        for sigmas in _sigma_vectors(n, k):
            e = engine.labeled_tableau(T, sigmas).weight(k)
            acc[e] = acc.get(e, 0) + 1
    return QPoly(k, D, acc)


def graded_multiplicity_comaj(lam: Partition, k: int) -> QPoly:
    """Single-variable graded multiplicity via total comaj weights."""
    return collapse(schur_comaj_polynomial(lam, k))


def graded_multiplicity_character(lam: Partition, k: int,
                                  trunc: Truncation | None = None) -> QPoly:
    """The same multiplicity from character values and cycle-type series.

    Averages [(q;q)_n * prod 1/(1-q^{mu_i})]^k against the characters
    with exact rational bookkeeping; the result must collapse to
    integers.
    """
    lam = partition(lam)
    n = sum(lam)
    if trunc is None:
        trunc = Truncation(1, exact_degree_bound(n, k))
    if trunc.k != 1:
        raise ValueError("character oracle is single-variable")
    if trunc.D < exact_degree_bound(n, k):
        raise ValueError(
            f"need D >= {exact_degree_bound(n, k)} for an exact value, got {trunc.D}"
        )
    poch_n = pochhammer(1, n, trunc)
    acc: dict[tuple[int, ...], Fraction] = {}
    for mu in partitions(n):
        series = poch_n
        for part in mu:
            geo = QPoly(1, trunc.D, {(d * part,): 1 for d in range(trunc.D // part + 1)})
            series = series * geo
        powered = series**k
        weight = Fraction(character(lam, mu), centralizer_size(mu))
        for e, c in powered.terms.items():
            acc[e] = acc.get(e, Fraction(0)) + weight * c
    terms: dict[tuple[int, ...], int] = {}
    for e, c in acc.items():
        if c == 0:
            continue
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {c} at {e}")
        terms[e] = int(c)
    return QPoly(1, trunc.D, terms)


def verify_finite_evaluation(lam: Partition, k: int,
                             trunc: Truncation | None = None) -> VerificationReport:
    """Four-way check of the finite Schur principal evaluation."""
    started = time.perf_counter()
    lam = partition(lam)
    n = sum(lam)
    bound = exact_degree_bound(n, k)
    if trunc is None:
        trunc = Truncation(k, bound)
    if trunc.k != k:
        raise ValueError(f"truncation has {trunc.k} variables, expected {k}")
    if trunc.D < bound:
        raise ValueError(f"need D >= {bound} for an exact comparison, got {trunc.D}")
    jt = schur_principal_jt(lam, trunc)
    ssyt = schur_principal_by_tableaux(lam, trunc)
    normalized = pochhammer_all(n, trunc) * jt
    comaj_side = schur_comaj_polynomial(lam, k).rebound(trunc.D)
    chain_side = labeled_tableau_polynomial(lam, k).rebound(trunc.D)
    params = {"lambda": list(lam), "k": k, "D": trunc.D}
    pairs = _chained(
        [
            ("pochhammer_jacobi_trudi", normalized),
            ("comaj_formula", comaj_side),
            ("labeled_tableau_sum", chain_side),
        ]
    )
    pairs.append((("jacobi_trudi_series", jt), ("ssyt_enumeration", ssyt)))
    return _compare("finite_evaluation", params, pairs, started)


def verify_kronecker_multiplicity(lam: Partition, k: int) -> VerificationReport:
    """Comaj path against the character oracle, plus the dimension count."""
    started = time.perf_counter()
    lam = partition(lam)
    n = sum(lam)
    comaj_side = graded_multiplicity_comaj(lam, k)
    character_side = graded_multiplicity_character(lam, k)
    expected_dim = hook_length_count(lam) * factorial(n) ** (k - 1)
    params = {"lambda": list(lam), "k": k}
    return _compare(
        "kronecker_multiplicity",
        params,
        _chained([("comaj_path", comaj_side), ("character_path", character_side)]),
        started,
        extra_checks=[
            {
                "name": "value_at_one",
                "left": comaj_side.total_at_one(),
                "right": expected_dim,
            }
        ],
    )


def verify_fundamental_evaluation(R, n: int, k: int, trunc: Truncation) -> VerificationReport:
    """Pochhammer-normalized chain enumeration against the comaj formula."""
    started = time.perf_counter()
    if trunc.k != k:
        raise ValueError(f"truncation has {trunc.k} variables, expected {k}")
    series = fundamental_principal_series(R, n, trunc)
    normalized = pochhammer_all(n, trunc) * series
    formula = fundamental_comaj_polynomial(R, n, k).rebound(trunc.D)
    params = {"R": sorted(R), "n": n, "k": k, "D": trunc.D}
    return _compare(
        "fundamental_evaluation",
        params,
        _chained([("pochhammer_enumeration", normalized), ("comaj_formula", formula)]),
        started,
    )


def verify_row_case(n: int, k: int) -> VerificationReport:
    """Single-row shape: the comaj formula equals the product-one enumeration."""
    started = time.perf_counter()
    D = exact_degree_bound(n, k)
    lhs = schur_comaj_polynomial((n,), k)
    acc: dict[tuple[int, ...], int] = {}
    for sigmas in _sigma_vectors(n, k):
        closing = perm.identity(n)
        for sigma in sigmas:
            closing = perm.compose(closing, sigma)
        full = (*sigmas, perm.inverse(closing))
        e = tuple(perm.comaj(sigma) for sigma in full)
        acc[e] = acc.get(e, 0) + 1
    rhs = QPoly(k, D, acc)
    sides = [("comaj_formula", lhs), ("identity_product_enumeration", rhs)]
    if k == 2:
        paired: dict[tuple[int, ...], int] = {}
        for sigma in perm.symmetric_group(n):
            e = (perm.comaj(perm.inverse(sigma)), perm.comaj(sigma))
            paired[e] = paired.get(e, 0) + 1
        sides.append(("inverse_pair_enumeration", QPoly(k, D, paired)))
    # Hilbert series of the invariants: collapse against the character oracle.
    pairs = _chained(sides)
    pairs.append(
        (
            ("invariant_hilbert_series", collapse(rhs)),
            ("character_path", graded_multiplicity_character((n,), k)),
        )
    )
    return _compare("row_case", {"n": n, "k": k}, pairs, started)


@lru_cache(maxsize=None)
def _box_buckets(R: tuple[int, ...], n: int, r: int, bound: int):
    """Bounded-entry sums, bucketed for the injection-recursion check.

    Left buckets: over Z in (N^r)^n with entries <= bound, keyed by the
    reading order of Z and the descent set of its trailing coordinates.
    Right buckets: over S in (N^{r-1})^n, keyed by (sigma, descent set)
    for every sigma.  Both sums live in r variables truncated at bound.
    """
    Rf = frozenset(R)
    trunc = Truncation(r, bound)
    left: dict[tuple, dict] = {}
    for flat in itertools.product(range(bound + 1), repeat=n * r):
        Z = tuple(flat[i * r : (i + 1) * r] for i in range(n))
        sigma = engine.reading_order(Rf, Z)
        tails = tuple(z[1:] for z in Z)
        D = engine.descents(Rf, tails, sigma)
        e = engine.seq_weight(Z, r)
        bucket = left.setdefault((sigma, D), {})
        bucket[e] = bucket.get(e, 0) + 1
    right: dict[tuple, dict] = {}
    perms = tuple(perm.symmetric_group(n))
    for flat in itertools.product(range(bound + 1), repeat=n * (r - 1)):
        S = tuple(flat[i * (r - 1) : (i + 1) * (r - 1)] for i in range(n))
        e = engine.seq_weight(S, r)
        for sigma in perms:
            D = engine.descents(Rf, S, sigma)
            bucket = right.setdefault((sigma, D), {})
            bucket[e] = bucket.get(e, 0) + 1
    left_polys = {key: QPoly(*trunc, terms) for key, terms in left.items()}
    right_polys = {key: QPoly(*trunc, terms) for key, terms in right.items()}
    return left_polys, right_polys


def verify_injection_recursion(R, n: int, target, sigma,
                               r: int, bound: int) -> VerificationReport:
    """Bounded check that peeling one coordinate costs exactly the comaj weight.

    Compares (q_r; q_r)_n times the sum of q^Z over Z with the given
    reading order and trailing descent set, against q_r^{c(target)}
    times the sum of q^S over the one-coordinate-shorter lists with
    that descent set.  Entries are bounded by ``bound`` and both sides
    truncated at total degree ``bound``, which the entry bound cannot
    disturb.
    """
    started = time.perf_counter()
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    trunc = Truncation(r, bound)
    Rf = frozenset(R)
    target = frozenset(target)
    sigma = perm.perm(sigma)
    left_buckets, right_buckets = _box_buckets(tuple(sorted(Rf)), n, r, bound)
    zero = QPoly.zero(*trunc)
    left = pochhammer(r, n, trunc) * left_buckets.get((sigma, target), zero)
    c_target = sum(n - i for i in target)
    right = QPoly.variable(r, bound, r, c_target) * right_buckets.get(
        (sigma, target), zero
    )
    params = {
        "R": sorted(Rf),
        "n": n,
        "target": sorted(target),
        "sigma": list(sigma),
        "r": r,
        "bound": bound,
    }
    return _compare(
        "injection_recursion",
        params,
        _chained([("pochhammer_times_chain_side", left), ("weighted_short_side", right)]),
        started,
    )


def verify_variable_reindex(lam: Partition, m: int) -> VerificationReport:
    """Adding a variable and deleting it again reaches the reversed m-variable value."""
    started = time.perf_counter()
    lam = partition(lam)
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    n = sum(lam)
    big_bound = exact_degree_bound(n, m + 1)
    small = schur_comaj_polynomial(lam, m)
    reversed_small = small.permute_variables(tuple(range(m, 0, -1))).rebound(big_bound)
    big = schur_comaj_polynomial(lam, m + 1)
    restricted = big.set_variable_to_zero(m + 1).drop_variable(m + 1)
    params = {"lambda": list(lam), "m": m}
    return _compare(
        "variable_reindex",
        params,
        _chained([("reversed_small", reversed_small), ("restricted_large", restricted)]),
        started,
    )
