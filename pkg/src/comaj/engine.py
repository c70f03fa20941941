"""Generalized descents over lists of integer sequences.

The central data is a sequence list S = (s^1, ..., s^n): one r-tuple of
naturals per index in {1..n}.  Everything below is parametrized by a set
R of positions in {1..n-1}.  Two indices are R-neighbors when every
position strictly between them (inclusive of the smaller, exclusive of
the larger) lies in R; equivalently, when they belong to the same
maximal R-run.

Position i is a generalized descent of sigma with respect to (R, S)
when s^{sigma_i} is lexicographically larger than s^{sigma_{i+1}}, or
the two are equal and exactly one of these tie rules fires:

  * sigma_{i+1} < sigma_i and the two values are not R-neighbors, or
  * sigma_{i+1} > sigma_i and the two values are R-neighbors.

Strict lexicographic ordering plus that tie rule also defines the
reading order of S, the permutation listing indices from smallest to
largest.  ``prepend_labels`` turns descent counts into a new leading
coordinate on every sequence; chains of such steps produce the labeled
fillings whose coordinate sums are the comaj components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .perm import Perm, identity
from .tableaux import StandardTableau

SeqList = tuple[tuple[int, ...], ...]


def empty_seqlist(n: int) -> SeqList:
    """The r = 0 sequence list: n empty tuples, all comparing equal."""
    return ((),) * n


def seqlist(seqs) -> SeqList:
    """Validate uniform length and nonnegative entries."""
    s = tuple(tuple(x) for x in seqs)
    if not s:
        raise ValueError("sequence list must be nonempty")
    r = len(s[0])
    for row in s:
        if len(row) != r:
            raise ValueError(f"sequences must share one length: {s!r}")
        if any(e < 0 for e in row):
            raise ValueError(f"entries must be nonnegative: {row!r}")
    return s


def lex_cmp(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """-1, 0 or 1 comparing equal-length tuples lexicographically."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {a!r} vs {b!r}")
    if a < b:
        return -1
    return 1 if a > b else 0


@lru_cache(maxsize=None)
def _run_ids(R: frozenset[int], n: int) -> tuple[int, ...]:
    """Run id of each index 1..n; a run breaks after index i when i not in R."""
    ids = [0] * n
    for i in range(1, n):
        ids[i] = ids[i - 1] + (0 if i in R else 1)
    return tuple(ids)


def _check_r(R, n: int) -> frozenset[int]:
    R = frozenset(R)
    if any(not (1 <= i <= n - 1) for i in R):
        raise ValueError(f"R must be a subset of 1..{n - 1}: {sorted(R)!r}")
    return R


def are_neighbors(R, n: int, i: int, j: int) -> bool:
    """True when every index from min(i,j) to max(i,j)-1 lies in R."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices out of range 1..{n}: {(i, j)!r}")
    run = _run_ids(_check_r(R, n), n)
    return run[i - 1] == run[j - 1]


def _check_seqs(S: SeqList, n: int) -> None:
    if len(S) != n:
        raise ValueError(f"expected {n} sequences, got {len(S)}")
    r = len(S[0])
    if any(len(s) != r for s in S):
        raise ValueError("sequences must share one length")


def _descent_positions(R: frozenset[int], S: SeqList, sigma: Perm) -> list[int]:
    n = len(sigma)
    _check_seqs(S, n)
    run = _run_ids(R, n)
    out = []
    for i in range(1, n):
        a, b = sigma[i - 1], sigma[i]
        sa, sb = S[a - 1], S[b - 1]
        if sa > sb:
            out.append(i)
        elif sa == sb:
            same_run = run[a - 1] == run[b - 1]
            if b < a:
                if not same_run:
                    out.append(i)
            elif same_run:
                out.append(i)
    return out


def descents(R, S: SeqList, sigma: Perm) -> frozenset[int]:
    """Generalized descent set of sigma relative to (R, S)."""
    return frozenset(_descent_positions(_check_r(R, len(sigma)), S, sigma))


def comaj(R, S: SeqList, sigma: Perm) -> int:
    """Sum of (n - i) over the generalized descents."""
    n = len(sigma)
    return sum(n - i for i in _descent_positions(_check_r(R, n), S, sigma))


def _labels(descent_positions: list[int], sigma: Perm) -> list[int]:
    """Label index sigma_1 with 0, increasing by 1 after each descent."""
    n = len(sigma)
    lab = [0] * n
    dset = set(descent_positions)
    cur = 0
    for i in range(1, n):
        if i in dset:
            cur += 1
        lab[sigma[i] - 1] = cur
    return lab


def prepend_labels(R, sigma: Perm, S: SeqList) -> SeqList:
    """Prepend the descent-count labels of sigma as a new first coordinate.

    The sum of the new coordinates equals comaj(R, S, sigma).
    """
    n = len(sigma)
    Rf = _check_r(R, n)
    lab = _labels(_descent_positions(Rf, S, sigma), sigma)
    return tuple((lab[i],) + S[i] for i in range(n))


def label_chain(R, n: int, sigmas, close_with_identity: bool = True) -> SeqList:
    """Iterate prepend_labels from the empty list over a permutation vector.

    With ``close_with_identity`` a final step with the identity is
    applied, producing the filling whose coordinate sums are the k comaj
    components (k = len(sigmas) + 1).
    """
    S = empty_seqlist(n)
    for sigma in sigmas:
        if len(sigma) != n:
            raise ValueError(f"permutation size {len(sigma)} != {n}")
        S = prepend_labels(R, sigma, S)
    if close_with_identity:
        S = prepend_labels(R, identity(n), S)
    return S


def comaj_components(R, n: int, sigmas) -> tuple[int, ...]:
    """The k = len(sigmas) + 1 comaj components of a permutation vector.

    Component i is comaj(R, S, sigma^i) evaluated against the chain
    built from the previous steps; the final component uses the
    identity.
    """
    Rf = _check_r(R, n)
    S = empty_seqlist(n)
    comps = []
    for sigma in (*sigmas, identity(n)):
        if len(sigma) != n:
            raise ValueError(f"permutation size {len(sigma)} != {n}")
        positions = _descent_positions(Rf, S, sigma)
        comps.append(sum(n - i for i in positions))
        lab = _labels(positions, sigma)
        S = tuple((lab[i],) + S[i] for i in range(n))
    return tuple(comps)


def comaj_total(R, n: int, sigmas) -> int:
    return sum(comaj_components(R, n, sigmas))


def tableau_comaj_components(T: StandardTableau, sigmas) -> tuple[int, ...]:
    return comaj_components(T.descent_set(), T.n, sigmas)


def tableau_comaj_total(T: StandardTableau, sigmas) -> int:
    return sum(tableau_comaj_components(T, sigmas))


def reading_order(R, S: SeqList) -> Perm:
    """The permutation listing indices by increasing sequence value.

    Ties are broken so that, within one R-run, larger indices are read
    first, while across different runs smaller indices come first.
    """
    n = len(S)
    _check_seqs(S, n)
    run = _run_ids(_check_r(R, n), n)
    order = sorted(range(1, n + 1), key=lambda i: (S[i - 1], run[i - 1], -i))
    return tuple(order)


def increment_suffix(R, sigma: Perm, i: int, S: SeqList) -> SeqList:
    """Add 1 to the first coordinate of every sequence read after position i.

    Requires sigma to be the reading order of S (checked under assert)
    and 0 <= i <= n - 1; the weight gained is n - i in the variable
    paired with the first coordinate.  Reading order and the descents of
    the trailing coordinates are unchanged.
    """
    n = len(sigma)
    _check_seqs(S, n)
    if not S[0]:
        raise ValueError("sequences need a first coordinate to increment")
    if not 0 <= i <= n - 1:
        raise ValueError(f"threshold out of range 0..{n - 1}: {i}")
    assert reading_order(R, S) == sigma, "sigma must be the reading order of S"
    bumped = {sigma[j] for j in range(i, n)}
    return tuple(
        ((s[0] + 1,) + s[1:]) if idx in bumped else s
        for idx, s in enumerate(S, start=1)
    )


def zero_comaj_perm(R, n: int) -> Perm:
    """The unique permutation with zero comaj against the empty list.

    Built by listing the maximal R-runs of {1..n} in increasing order,
    each run in decreasing order.
    """
    Rf = _check_r(R, n)
    word: list[int] = []
    start = 1
    for i in range(1, n + 1):
        if i == n or i not in Rf:
            word.extend(range(i, start - 1, -1))
            start = i + 1
    return tuple(word)


def seq_weight(S: SeqList, k: int) -> tuple[int, ...]:
    """Exponent vector of q^S in variables q_1..q_k.

    Coordinate 1 of the sequences (the most recently prepended label)
    pairs with q_r, coordinate r with q_1; variables beyond r get
    exponent 0.
    """
    _check_seqs(S, len(S))
    r = len(S[0])
    if r > k:
        raise ValueError(f"{r} coordinates do not fit in {k} variables")
    return tuple(
        sum(s[r - i] for s in S) if i <= r else 0 for i in range(1, k + 1)
    )


@dataclass(frozen=True)
class LabeledTableau:
    """A standard tableau with entry i replaced by the i-th chain sequence."""

    base: StandardTableau
    filling: SeqList

    @property
    def shape(self):
        return self.base.shape

    def filled_rows(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        return tuple(
            tuple(self.filling[v - 1] for v in row) for row in self.base.rows
        )

    def weight(self, k: int) -> tuple[int, ...]:
        return seq_weight(self.filling, k)


def labeled_tableau(T: StandardTableau, sigmas) -> LabeledTableau:
    """Close the chain of T's descent set over sigmas and fill T with it."""
    filling = label_chain(T.descent_set(), T.n, sigmas, close_with_identity=True)
    return LabeledTableau(base=T, filling=filling)
