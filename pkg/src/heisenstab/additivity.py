"""Nonnegative integer matrices with prescribed margins, additivity
certificates, and generation of provably stable triples.

Two matrix families.  A plain margin matrix is any p x q nonnegative
integer matrix with given row-sum and column-sum vectors (a contingency
table); these drive the Kronecker product of h-basis elements.  A cornered
matrix is a (p+1) x (q+1) matrix with a zero top-left corner whose margins
ignore the first row and first column (each margin is still a full row or
column sum); these drive the Heisenberg product.

A matrix is additive when row/column potentials x_i + y_j reproduce the
strict order of its entries; additivity is decided exactly by reducing to
rational feasibility (`ratfeas`).  Additive matrices yield stable triples,
with the certificate attached.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .partitions import (
    Composition,
    Partition,
    is_dominated_by,
    pi_sequence,
)
from .ratfeas import solve_strict


class MatrixParseError(ValueError):
    """Malformed matrix text (ragged rows, negative or nonzero corner...)."""


class BudgetExceededError(RuntimeError):
    """Enumeration refused: margins exceed the configured budget."""


@dataclass(frozen=True)
class EnumerationBudget:
    max_total: int = 24   # |beta| + |gamma|
    max_rows: int = 5     # full matrix dimensions
    max_cols: int = 5


DEFAULT_BUDGET = EnumerationBudget()


def _validated_rows(rows) -> tuple[tuple[int, ...], ...]:
    rs = tuple(tuple(int(e) for e in row) for row in rows)
    if rs:
        width = len(rs[0])
        if any(len(r) != width for r in rs):
            raise MatrixParseError("ragged rows")
    if any(e < 0 for r in rs for e in r):
        raise MatrixParseError("negative entry")
    return rs


class KroneckerMatrix:
    """p x q nonnegative integer matrix, margins = plain row/column sums."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        object.__setattr__(self, "rows", _validated_rows(rows))

    @property
    def row_margins(self) -> Composition:
        return Composition(sum(r) for r in self.rows)

    @property
    def col_margins(self) -> Composition:
        return Composition(sum(col) for col in zip(*self.rows))

    @property
    def pi(self) -> Partition:
        return pi_sequence(self.rows)

    @property
    def total(self) -> int:
        return sum(sum(r) for r in self.rows)

    def scaled(self, n: int) -> "KroneckerMatrix":
        return KroneckerMatrix(tuple(tuple(n * e for e in r) for r in self.rows))

    def __eq__(self, other):
        return type(other) is type(self) and self.rows == other.rows

    def __hash__(self):
        return hash((type(self).__name__, self.rows))

    def __repr__(self):
        return f"{type(self).__name__}({list(map(list, self.rows))})"

    def to_text(self) -> str:
        return "\n".join(" ".join(str(e) for e in r) for r in self.rows)


class HeisenbergMatrix(KroneckerMatrix):
    """(p+1) x (q+1) nonnegative integer matrix with a zero top-left corner.

    Margins skip the first row and first column: row_margins are the full
    sums of rows 2..p+1, col_margins the full sums of columns 2..q+1."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        if not self.rows or not self.rows[0]:
            raise MatrixParseError("cornered matrix needs at least the corner")
        if self.rows[0][0] != 0:
            raise MatrixParseError("top-left corner must be 0")

    @property
    def row_margins(self) -> Composition:
        return Composition(sum(r) for r in self.rows[1:])

    @property
    def col_margins(self) -> Composition:
        return Composition(sum(col) for col in list(zip(*self.rows))[1:])

    def scaled(self, n: int) -> "HeisenbergMatrix":
        return HeisenbergMatrix(tuple(tuple(n * e for e in r) for r in self.rows))


def parse_matrix(text: str, kind: str) -> KroneckerMatrix:
    """Parse the plain text format: one row per line, space-separated
    nonnegative integers.  kind is "k" or "h"."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise MatrixParseError(f"bad line {line!r}") from exc
    if kind == "k":
        return KroneckerMatrix(rows)
    if kind == "h":
        return HeisenbergMatrix(rows)
    raise ValueError(f"unknown matrix kind {kind!r}")


# ---------------------------------------------------------------------------
# Enumeration


def _bounded_vectors(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors with the given sum, entry i <= caps[i]."""
    if total < 0:
        return
    if not caps:
        if total == 0:
            yield ()
        return
    if sum(caps) < total:
        return
    head_cap = min(caps[0], total)
    for head in range(head_cap + 1):
        for tail in _bounded_vectors(total - head, caps[1:]):
            yield (head,) + tail


def kronecker_matrices(beta: Sequence[int], gamma: Sequence[int]) -> Iterator[KroneckerMatrix]:
    """All matrices with row sums beta and column sums gamma (empty stream
    when |beta| != |gamma|)."""
    beta, gamma = Composition(beta), Composition(gamma)
    if beta.size != gamma.size:
        return
    if len(beta) == 0 or len(gamma) == 0:
        # degenerate shapes exist exactly when both margin totals are zero
        if beta.size == 0:
            yield KroneckerMatrix([() for _ in beta] if len(gamma) == 0 else [])
        return

    def fill(i: int, remaining_cols: tuple[int, ...], acc: list[tuple[int, ...]]) -> Iterator[KroneckerMatrix]:
        if i == len(beta):
            if all(c == 0 for c in remaining_cols):
                yield KroneckerMatrix(acc)
            return
        for row in _bounded_vectors(beta[i], remaining_cols):
            acc.append(row)
            yield from fill(i + 1, tuple(c - r for c, r in zip(remaining_cols, row)), acc)
            acc.pop()

    yield from fill(0, tuple(gamma), [])


def kronecker_class(beta, gamma, alpha) -> Iterator[KroneckerMatrix]:
    alpha = Partition(alpha)
    return (A for A in kronecker_matrices(beta, gamma) if A.pi == alpha)


def heisenberg_matrices(beta: Sequence[int], gamma: Sequence[int]) -> Iterator[HeisenbergMatrix]:
    """All cornered matrices with margins (beta, gamma): inner p x q block B
    with row sums <= beta and column sums <= gamma; the first column and
    first row absorb the slack, so margins hold by construction."""
    beta, gamma = Composition(beta), Composition(gamma)
    p, q = len(beta), len(gamma)

    def build(block: list[tuple[int, ...]]) -> HeisenbergMatrix:
        col_used = [sum(block[i][j] for i in range(p)) for j in range(q)]
        first_row = (0,) + tuple(gamma[j] - col_used[j] for j in range(q))
        rows = [first_row]
        for i in range(p):
            rows.append((beta[i] - sum(block[i]),) + block[i])
        return HeisenbergMatrix(rows)

    def fill(i: int, col_room: tuple[int, ...], acc: list[tuple[int, ...]]) -> Iterator[HeisenbergMatrix]:
        if i == p:
            yield build(acc)
            return
        for s in range(beta[i] + 1):
            for row in _bounded_vectors(s, col_room):
                acc.append(row)
                yield from fill(i + 1, tuple(c - r for c, r in zip(col_room, row)), acc)
                acc.pop()

    yield from fill(0, tuple(gamma), [])


def heisenberg_class(beta, gamma, alpha) -> Iterator[HeisenbergMatrix]:
    alpha = Partition(alpha)
    return (A for A in heisenberg_matrices(beta, gamma) if A.pi == alpha)


def in_heisenberg_class(A: HeisenbergMatrix, beta, gamma, alpha) -> bool:
    """Membership test that avoids enumerating the class."""
    return (
        A.row_margins == Composition(beta)
        and A.col_margins == Composition(gamma)
        and A.pi == Partition(alpha)
    )


def check_budget(beta: Sequence[int], gamma: Sequence[int], cornered: bool,
                 budget: EnumerationBudget = DEFAULT_BUDGET) -> None:
    beta, gamma = Composition(beta), Composition(gamma)
    rows = len(beta) + (1 if cornered else 0)
    cols = len(gamma) + (1 if cornered else 0)
    if beta.size + gamma.size > budget.max_total:
        raise BudgetExceededError(
            f"margin total {beta.size + gamma.size} exceeds budget {budget.max_total}")
    if rows > budget.max_rows or cols > budget.max_cols:
        raise BudgetExceededError(
            f"dimensions {rows}x{cols} exceed budget {budget.max_rows}x{budget.max_cols}")


# ---------------------------------------------------------------------------
# Additivity


@dataclass(frozen=True)
class AdditivityCertificate:
    """Row potentials x and column potentials y witnessing additivity.

    For cornered matrices the first row and first column potentials are
    pinned to zero."""

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    def as_json(self) -> dict:
        return {"x": [str(v) for v in self.x], "y": [str(v) for v in self.y]}


def _positions(A: KroneckerMatrix) -> list[tuple[int, int]]:
    ps = [(i, j) for i in range(len(A.rows)) for j in range(len(A.rows[0]))]
    if isinstance(A, HeisenbergMatrix):
        ps.remove((0, 0))
    return ps


def _strict_pairs(A: KroneckerMatrix) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    """Ordered position pairs ((i,j),(k,l)) with a_{ij} > a_{kl}, restricted
    to consecutive value levels.

    Restricting to consecutive levels is sound: a solution with slack 1 on
    each consecutive pair has slack >= 2 on pairs two levels apart, so the
    full strict system is satisfied by exactly the same potentials."""
    by_value: dict[int, list[tuple[int, int]]] = {}
    for i, j in _positions(A):
        by_value.setdefault(A.rows[i][j], []).append((i, j))
    levels = sorted(by_value, reverse=True)
    for hi, lo in zip(levels, levels[1:]):
        for a in by_value[hi]:
            for b in by_value[lo]:
                yield a, b


def _solve_additivity(A: KroneckerMatrix) -> Optional[AdditivityCertificate]:
    n_rows, n_cols = len(A.rows), len(A.rows[0])
    cornered = isinstance(A, HeisenbergMatrix)
    # Variables: free row potentials then free column potentials.  For
    # cornered matrices x_1 = y_1 = 0 is encoded by omitting them.
    row_var = {i: (i - 1 if cornered else i) for i in range(n_rows)}
    col_off = n_rows - 1 if cornered else n_rows
    col_var = {j: col_off + (j - 1 if cornered else j) for j in range(n_cols)}
    num_vars = col_off + (n_cols - 1 if cornered else n_cols)

    rows = set()
    for (i, j), (k, l) in _strict_pairs(A):
        coeffs = [0] * num_vars
        for idx, sign in ((i, 1), (k, -1)):
            if not (cornered and idx == 0):
                coeffs[row_var[idx]] += sign
        for idx, sign in ((j, 1), (l, -1)):
            if not (cornered and idx == 0):
                coeffs[col_var[idx]] += sign
        assert any(coeffs), "strict pair between identical positions"
        rows.add(tuple(coeffs))
    z = solve_strict(sorted(rows), num_vars)
    if z is None:
        return None
    if cornered:
        x = (Fraction(0),) + z[: n_rows - 1]
        y = (Fraction(0),) + z[n_rows - 1:]
    else:
        x = z[:n_rows]
        y = z[n_rows:]
    cert = AdditivityCertificate(x=x, y=y)
    assert check_certificate(A, cert), "solver certificate failed re-validation"
    return cert


def is_kronecker_additive(A: KroneckerMatrix) -> Optional[AdditivityCertificate]:
    """Certificate of additivity for a plain margin matrix, or None."""
    if isinstance(A, HeisenbergMatrix):
        raise TypeError("use is_heisenberg_additive for cornered matrices")
    return _solve_additivity(A)


def is_heisenberg_additive(A: HeisenbergMatrix) -> Optional[AdditivityCertificate]:
    """Certificate of additivity for a cornered matrix (corner excluded from
    the strict pairs, first row/column potentials pinned to 0), or None."""
    if not isinstance(A, HeisenbergMatrix):
        raise TypeError("expected a cornered matrix")
    return _solve_additivity(A)


def check_certificate(A: KroneckerMatrix, cert: AdditivityCertificate) -> bool:
    """Independent verification: every strict entry pair must have strictly
    ordered potential sums.  Checks all pairs, not just consecutive levels."""
    if len(cert.x) != len(A.rows) or len(cert.y) != len(A.rows[0]):
        raise ValueError("certificate dimensions do not match the matrix")
    pos = _positions(A)
    for (i, j), (k, l) in itertools.permutations(pos, 2):
        if A.rows[i][j] > A.rows[k][l]:
            if cert.x[i] + cert.y[j] <= cert.x[k] + cert.y[l]:
                return False
    return True


# ---------------------------------------------------------------------------
# The margin constraint matrix and the flattening map


@dataclass(frozen=True)
class ConstraintMatrix:
    p: int
    q: int
    rows: tuple[tuple[int, ...], ...]  # (p+q) x (pq+p+q), 0/1 entries

    def rank(self) -> int:
        return exact_rank(self.rows)


def build_constraint_matrix(p: int, q: int) -> ConstraintMatrix:
    """0/1 matrix M with M . flatten(A) = (row margins, col margins) for
    every cornered matrix A of inner size p x q."""
    if p < 1 or q < 1:
        raise ValueError("need p, q >= 1")
    width = p * q + p + q
    rows = []
    for i in range(1, p + 1):
        row = [0] * width
        for j in range(i * (q + 1), q + i * (q + 1) + 1):
            row[j - 1] = 1
        rows.append(tuple(row))
    for i in range(p + 1, p + q + 1):
        s = i - p
        row = [0] * width
        for k in range(p + 1):
            row[s + k * (q + 1) - 1] = 1
        rows.append(tuple(row))
    return ConstraintMatrix(p=p, q=q, rows=tuple(rows))


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    m = [[Fraction(e) for e in row] for row in rows]
    rank = 0
    col = 0
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    while rank < n_rows and col < n_cols:
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(n_rows):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def flatten(A: HeisenbergMatrix) -> tuple[int, ...]:
    """Row-major entries skipping only the corner: (a_{1,2}..a_{1,q+1},
    a_{2,1}..a_{2,q+1}, ..., a_{p+1,1}..a_{p+1,q+1})."""
    out = list(A.rows[0][1:])
    for row in A.rows[1:]:
        out.extend(row)
    return tuple(out)


def unflatten(vec: Sequence[int], p: int, q: int) -> HeisenbergMatrix:
    if len(vec) != p * q + p + q:
        raise ValueError("flat vector has wrong length")
    rows = [(0,) + tuple(vec[:q])]
    for i in range(p):
        start = q + i * (q + 1)
        rows.append(tuple(vec[start:start + q + 1]))
    return HeisenbergMatrix(rows)


def permutohedron_contains(a: Sequence, x: Sequence) -> bool:
    """x lies in the convex hull of the coordinate permutations of a, i.e.
    x is majorized by a (Rado's criterion).  No vertex enumeration."""
    return is_dominated_by(x, a)


# ---------------------------------------------------------------------------
# Minimality and stable-triple generation


@dataclass(frozen=True)
class MinimalityResult:
    minimal: bool
    witness: Optional[HeisenbergMatrix] = None


def integer_minimality_check(A: HeisenbergMatrix,
                             budget: EnumerationBudget = DEFAULT_BUDGET) -> MinimalityResult:
    """Search the full margin class for a witness B != A whose sorted entry
    sequence is majorized by A's (equality of sorted sequences counts: the
    class must be a singleton).  Only matrices with the same entry total can
    compare.  Refuses (raises) outside the enumeration budget."""
    beta, gamma = A.row_margins, A.col_margins
    check_budget(beta, gamma, cornered=True, budget=budget)
    target = A.pi
    total = A.total
    for B in heisenberg_matrices(beta, gamma):
        if B.total != total or B == A:
            continue
        if is_dominated_by(B.pi, target):
            return MinimalityResult(minimal=False, witness=B)
    return MinimalityResult(minimal=True)


@dataclass(frozen=True)
class CertifiedTriple:
    """Stable triple produced by an additive matrix.

    beta and gamma are the margins exactly as the matrix presents them
    (compositions); sorting them is harmless because permuting rows 2..p+1
    or columns 2..q+1 preserves both the margin class and additivity, so
    `as_partitions` gives the canonical partition triple under the same
    certificate."""

    alpha: Partition
    beta: Composition
    gamma: Composition
    certificate: AdditivityCertificate

    def as_partitions(self) -> tuple[Partition, Partition, Partition]:
        return self.alpha, pi_sequence(self.beta), pi_sequence(self.gamma)


def heisenberg_stable_triple(A: HeisenbergMatrix) -> Optional[CertifiedTriple]:
    """If A is additive, (sorted entries; row margins; column margins) is a
    certified stable triple; otherwise None."""
    cert = is_heisenberg_additive(A)
    if cert is None:
        return None
    return CertifiedTriple(alpha=A.pi, beta=A.row_margins,
                           gamma=A.col_margins, certificate=cert)


def kronecker_stable_triple(A: KroneckerMatrix) -> Optional[CertifiedTriple]:
    """Same generation for plain margin matrices; margins always share one
    total, so the result is a same-size triple."""
    cert = is_kronecker_additive(A)
    if cert is None:
        return None
    return CertifiedTriple(alpha=A.pi, beta=A.row_margins,
                           gamma=A.col_margins, certificate=cert)
