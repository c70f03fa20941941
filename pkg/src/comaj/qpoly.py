"""Exact truncated polynomial arithmetic in q_1..q_k.

A QPoly is a sparse map from exponent vectors (length k, total degree
at most D) to arbitrary-precision integer coefficients.  Every ring
operation truncates by total degree; coefficients of total degree <= D
in a product depend only on such coefficients of the factors, so the
truncated ring is closed and exact below the bound.

Principal evaluations substitute every monomial in q_1..q_k for the
alphabet of a symmetric function: the power sum p_r becomes the product
of 1/(1 - q_i^r), the homogeneous h_m follows from Newton's identity,
and Schur values come from the Jacobi-Trudi determinant in the h's.
"""

from __future__ import annotations

import hashlib
import json
from functools import lru_cache
from typing import NamedTuple


class Truncation(NamedTuple):
    """Variable count and total-degree bound shared by compatible QPolys."""

    k: int
    D: int


class QPoly:
    """Immutable truncated polynomial; do not mutate ``terms`` after creation."""

    __slots__ = ("k", "D", "terms")

    def __init__(self, k: int, D: int, terms: dict[tuple[int, ...], int] | None = None):
        if k < 1 or D < 0:
            raise ValueError(f"need k >= 1 and D >= 0, got k={k}, D={D}")
        self.k = k
        self.D = D
        clean: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            if c == 0:
                continue
            if len(e) != k or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector for k={k}: {e!r}")
            if sum(e) <= D:
                clean[e] = c
        self.terms = clean

    @classmethod
    def zero(cls, k: int, D: int) -> QPoly:
        return cls(k, D)

    @classmethod
    def one(cls, k: int, D: int) -> QPoly:
        return cls(k, D, {(0,) * k: 1})

    @classmethod
    def monomial(cls, k: int, D: int, e: tuple[int, ...], c: int = 1) -> QPoly:
        return cls(k, D, {tuple(e): c})

    @classmethod
    def variable(cls, k: int, D: int, index: int, power: int = 1) -> QPoly:
        """The monomial q_index^power (index is 1-based)."""
        if not 1 <= index <= k:
            raise ValueError(f"variable index out of range 1..{k}: {index}")
        e = [0] * k
        e[index - 1] = power
        return cls(k, D, {tuple(e): 1})

    def _check_compat(self, other: QPoly) -> None:
        if (self.k, self.D) != (other.k, other.D):
            raise ValueError(
                f"mismatched truncation: ({self.k},{self.D}) vs ({other.k},{other.D})"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, e: tuple[int, ...]) -> int:
        return self.terms.get(tuple(e), 0)

    def total_at_one(self) -> int:
        """Sum of all coefficients (the value at q_1 = ... = q_k = 1)."""
        return sum(self.terms.values())

    def degree(self) -> int:
        """Largest total degree with a nonzero coefficient (-1 for zero)."""
        return max((sum(e) for e in self.terms), default=-1)

    def __add__(self, other: QPoly) -> QPoly:
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check_compat(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return QPoly(self.k, self.D, out)

    def __neg__(self) -> QPoly:
        return QPoly(self.k, self.D, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: QPoly) -> QPoly:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> QPoly:
        if isinstance(other, int):
            return QPoly(self.k, self.D, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check_compat(other)
        # Group by total degree so entire blocks above the bound are skipped.
        a_blocks = _degree_blocks(self.terms)
        b_blocks = _degree_blocks(other.terms)
        out: dict[tuple[int, ...], int] = {}
        for da, at in a_blocks.items():
            for db, bt in b_blocks.items():
                if da + db > self.D:
                    continue
                for ea, ca in at.items():
                    for eb, cb in bt.items():
                        e = tuple(x + y for x, y in zip(ea, eb))
                        v = out.get(e, 0) + ca * cb
                        if v:
                            out[e] = v
                        elif e in out:
                            del out[e]
        return QPoly(self.k, self.D, out)

    def __rmul__(self, other) -> QPoly:
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> QPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer: {exponent!r}")
        result = QPoly.one(self.k, self.D)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        self._check_compat(other)
        return self.terms == other.terms

    def equals(self, other: QPoly) -> bool:
        return self == other

    def rebound(self, D: int) -> QPoly:
        """Same polynomial under a new degree bound (truncating if smaller)."""
        return QPoly(self.k, D, self.terms)

    def permute_variables(self, images: tuple[int, ...]) -> QPoly:
        """Send q_i to q_{images[i-1]} (images is a permutation of 1..k)."""
        if sorted(images) != list(range(1, self.k + 1)):
            raise ValueError(f"not a permutation of 1..{self.k}: {images!r}")
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            new = [0] * self.k
            for pos, x in enumerate(e):
                new[images[pos] - 1] = x
            out[tuple(new)] = c
        return QPoly(self.k, self.D, out)

    def set_variable_to_zero(self, index: int) -> QPoly:
        """Keep only terms with exponent 0 on q_index (1-based)."""
        if not 1 <= index <= self.k:
            raise ValueError(f"variable index out of range 1..{self.k}: {index}")
        return QPoly(
            self.k,
            self.D,
            {e: c for e, c in self.terms.items() if e[index - 1] == 0},
        )

    def drop_variable(self, index: int) -> QPoly:
        """Remove a variable that no term uses (1-based index)."""
        if self.k < 2:
            raise ValueError("cannot drop below one variable")
        if any(e[index - 1] != 0 for e in self.terms):
            raise ValueError(f"terms still use q_{index}")
        return QPoly(
            self.k - 1,
            self.D,
            {e[: index - 1] + e[index:]: c for e, c in self.terms.items()},
        )

    def graded_items(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms sorted in graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def to_obj(self) -> dict:
        return {
            "k": self.k,
            "D": self.D,
            "terms": [
                {"e": list(e), "c": str(c)} for e, c in self.graded_items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()

    def __repr__(self) -> str:
        if self.is_zero():
            return f"QPoly(k={self.k}, D={self.D}, 0)"
        parts = []
        for e, c in self.graded_items()[:8]:
            mono = "".join(f"q{i + 1}^{x}" for i, x in enumerate(e) if x)
            parts.append(f"{c}{'*' + mono if mono else ''}")
        tail = " + ..." if len(self.terms) > 8 else ""
        return f"QPoly(k={self.k}, D={self.D}, {' + '.join(parts)}{tail})"


def _degree_blocks(terms: dict[tuple[int, ...], int]) -> dict[int, dict]:
    blocks: dict[int, dict[tuple[int, ...], int]] = {}
    for e, c in terms.items():
        blocks.setdefault(sum(e), {})[e] = c
    return blocks


def exact_div(p: QPoly, m: int) -> QPoly:
    """Divide every coefficient by m, failing loudly when not integral."""
    out = {}
    for e, c in p.terms.items():
        q, rem = divmod(c, m)
        if rem:
            raise ArithmeticError(f"coefficient {c} of {e} not divisible by {m}")
        out[e] = q
    return QPoly(p.k, p.D, out)


def geometric_inverse(unit: QPoly) -> QPoly:
    """Multiplicative inverse up to the degree bound; constant term must be 1."""
    zero_e = (0,) * unit.k
    if unit.coeff(zero_e) != 1:
        raise ValueError("constant term must be 1")
    a_blocks = _degree_blocks(unit.terms)
    inv_blocks: dict[int, dict[tuple[int, ...], int]] = {0: {zero_e: 1}}
    for d in range(1, unit.D + 1):
        blk: dict[tuple[int, ...], int] = {}
        for j, ab in a_blocks.items():
            if j < 1 or j > d:
                continue
            src = inv_blocks.get(d - j)
            if not src:
                continue
            for ea, ca in ab.items():
                for eb, cb in src.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    v = blk.get(e, 0) - ca * cb
                    if v:
                        blk[e] = v
                    elif e in blk:
                        del blk[e]
        if blk:
            inv_blocks[d] = blk
    merged = {e: c for blk in inv_blocks.values() for e, c in blk.items()}
    return QPoly(unit.k, unit.D, merged)


def pochhammer(var_index: int, n: int, trunc: Truncation) -> QPoly:
    """(q; q)_n = (1 - q)(1 - q^2)...(1 - q^n) in the chosen variable."""
    k, D = trunc
    result = QPoly.one(k, D)
    for j in range(1, n + 1):
        factor = QPoly.one(k, D) - QPoly.variable(k, D, var_index, j)
        result = result * factor
    return result


def pochhammer_all(n: int, trunc: Truncation) -> QPoly:
    """Product of (q_i; q_i)_n over every variable."""
    result = QPoly.one(*trunc)
    for i in range(1, trunc.k + 1):
        result = result * pochhammer(i, n, trunc)
    return result


@lru_cache(maxsize=None)
def power_sum_principal(r: int, trunc: Truncation) -> QPoly:
    """p_r at the alphabet of all monomials: product of 1/(1 - q_i^r)."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    k, D = trunc
    result = QPoly.one(k, D)
    for i in range(1, k + 1):
        geo = QPoly(
            k, D, {tuple(d * r if j == i - 1 else 0 for j in range(k)): 1
                   for d in range(D // r + 1)}
        )
        result = result * geo
    return result


@lru_cache(maxsize=None)
def homogeneous_principal(m: int, trunc: Truncation) -> QPoly:
    """h_m at the alphabet of all monomials, via m*h_m = sum p_r h_{m-r}."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if m == 0:
        return QPoly.one(*trunc)
    acc = QPoly.zero(*trunc)
    for r in range(1, m + 1):
        acc = acc + power_sum_principal(r, trunc) * homogeneous_principal(m - r, trunc)
    return exact_div(acc, m)


def schur_principal_jt(lam: tuple[int, ...], trunc: Truncation) -> QPoly:
    """Schur value at the all-monomial alphabet by the Jacobi-Trudi determinant."""
    if not lam:
        raise ValueError("partition must be nonempty")
    ell = len(lam)

    def entry(i: int, j: int) -> QPoly | None:
        idx = lam[i] - (i + 1) + (j + 1)
        return None if idx < 0 else homogeneous_principal(idx, trunc)

    matrix = [[entry(i, j) for j in range(ell)] for i in range(ell)]
    return _determinant(matrix, trunc)


def _determinant(matrix, trunc: Truncation) -> QPoly:
    size = len(matrix)
    if size == 1:
        return matrix[0][0] if matrix[0][0] is not None else QPoly.zero(*trunc)
    acc = QPoly.zero(*trunc)
    for i in range(size):
        pivot = matrix[i][0]
        if pivot is None or pivot.is_zero():
            continue
        minor = [row[1:] for j, row in enumerate(matrix) if j != i]
        term = pivot * _determinant(minor, trunc)
        acc = acc + term if i % 2 == 0 else acc - term
    return acc


def collapse(p: QPoly) -> QPoly:
    """Set every variable to a single q: exponent becomes the total degree."""
    out: dict[tuple[int], int] = {}
    for e, c in p.terms.items():
        key = (sum(e),)
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    return QPoly(1, p.D, out)
