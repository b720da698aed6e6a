"""The three structure-constant engines and their cross-check routes.

* Littlewood-Richardson coefficients by direct lattice-word tableau
  counting, with an independent hive-model counter (rhombus inequalities on
  a triangular array) as the second route.
* Kronecker coefficients by the exact character sum over conjugacy classes.
* Heisenberg coefficients by the quintuple-product formula that splits a
  query into two LR decompositions, one Kronecker factor in the shared
  degree, and two LR recombinations; the second route expands Schur
  functions into the complete-homogeneous basis and multiplies there, where
  the product is a sum over margin-constrained matrices.

All values are exact nonnegative integers and every engine memoizes
process-wide: stabilization sequences hammer overlapping subqueries.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Counter as CounterT

from .additivity import heisenberg_matrices, kronecker_matrices
from .partitions import (
    Composition,
    Partition,
    contains,
    partitions_of,
    subpartitions_of_size,
)
from .symfun import (
    character_vector,
    class_sizes,
    kostka,
    schur_in_h_basis,
)

_LR_CACHE: dict[tuple, int] = {}
_KRON_CACHE: dict[tuple, int] = {}
_HEIS_CACHE: dict[tuple, int] = {}


def clear_caches() -> None:
    _LR_CACHE.clear()
    _KRON_CACHE.clear()
    _HEIS_CACHE.clear()
    _heis_h_expansion.cache_clear()
    _kron_h_expansion.cache_clear()


# ---------------------------------------------------------------------------
# Littlewood-Richardson


def _lr_count(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """Count skew tableaux of shape lam/mu and content nu whose reverse
    reading word is a lattice word.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) so the lattice condition prunes incrementally; rows must
    weakly increase left to right, columns strictly increase downwards."""
    if not contains(lam, mu):
        return 0
    n_vals = len(nu)
    if n_vals == 0:
        return 1  # empty content, empty skew shape (sizes matched upstream)
    rows = []
    for r, lam_r in enumerate(lam):
        inner = mu[r] if r < len(mu) else 0
        if lam_r < inner:
            return 0
        rows.append((r, inner, lam_r))

    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (n_vals + 1)
    remaining = list(nu)

    cells: list[tuple[int, int]] = []
    for r, inner, outer in rows:
        for c in range(outer - 1, inner - 1, -1):
            cells.append((r, c))

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        hi = n_vals
        if (r, c + 1) in grid:
            hi = min(hi, grid[(r, c + 1)])
        lo = 1
        if (r - 1, c) in grid:
            lo = max(lo, grid[(r - 1, c)] + 1)
        total = 0
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            remaining[v - 1] -= 1
            counts[v] += 1
            grid[(r, c)] = v
            total += fill(idx + 1)
            del grid[(r, c)]
            counts[v] -= 1
            remaining[v - 1] += 1
        return total

    return fill(0)


def lr_coeff(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient: multiplicity of the lam-irreducible
    in the induction product of the mu- and nu-irreducibles.  Returns 0 when
    |lam| != |mu| + |nu|."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return 0
    # symmetric in (mu, nu): fill the smaller content over the bigger inner shape
    if (mu.size, mu) < (nu.size, nu):
        mu, nu = nu, mu
    key = (tuple(lam), tuple(mu), tuple(nu))
    val = _LR_CACHE.get(key)
    if val is None:
        val = _lr_count(*key)
        _LR_CACHE[key] = val
    return val


def lr_coeff_hive(lam, mu, nu) -> int:
    """Same coefficient counted as integer triangular arrays with fixed
    boundary and rhombus inequalities; independent of the tableau route."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return 0
    k = max(len(lam), len(mu), len(nu), 0) + 1

    # H[i][j], 0 <= j <= i <= k.  Boundary: H[i][0] = mu_1+..+mu_i,
    # H[i][i] = lam_1+..+lam_i, H[k][j] = |mu| + nu_1+..+nu_j.
    # Every unit rhombus demands: sum over its short diagonal >= sum over
    # its long diagonal.  Filling row-major, each rhombus is checked at its
    # last-filled vertex, giving one lower and up to two upper bounds.
    mu_ps = [0] * (k + 1)
    lam_ps = [0] * (k + 1)
    nu_ps = [0] * (k + 1)
    for i in range(1, k + 1):
        mu_ps[i] = mu_ps[i - 1] + mu.part(i - 1)
        lam_ps[i] = lam_ps[i - 1] + lam.part(i - 1)
        nu_ps[i] = nu_ps[i - 1] + nu.part(i - 1)

    H = [[0] * (i + 1) for i in range(k + 1)]

    def bounds(i: int, j: int) -> tuple[int | None, int | None]:
        lo = None
        hi = None
        # lower bound: rhombus with last vertex (i,j), short diagonal
        # (i-1,j-1)-(i,j): H[i][j] >= H[i][j-1] + H[i-1][j] - H[i-1][j-1]
        if i >= 1 and 1 <= j <= i - 1:
            lo = H[i][j - 1] + H[i - 1][j] - H[i - 1][j - 1]
        # upper bound 1: short diagonal (i-1,j-1)-(i,j-1):
        # H[i][j] <= H[i-1][j-1] + H[i][j-1] - H[i-1][j-2]
        if i >= 1 and j >= 2:
            b = H[i - 1][j - 1] + H[i][j - 1] - H[i - 1][j - 2]
            hi = b if hi is None else min(hi, b)
        # upper bound 2: short diagonal (i-1,j-1)-(i-1,j):
        # H[i][j] <= H[i-1][j-1] + H[i-1][j] - H[i-2][j-1]
        if i >= 2 and 1 <= j <= i - 1:
            b = H[i - 1][j - 1] + H[i - 1][j] - H[i - 2][j - 1]
            hi = b if hi is None else min(hi, b)
        return lo, hi

    def fixed_value(i: int, j: int) -> int | None:
        if j == 0:
            return mu_ps[i]
        if j == i:
            return lam_ps[i]
        if i == k:
            return mu_ps[k] + nu_ps[j]
        return None

    def fill(i: int, j: int) -> int:
        if i > k:
            return 1
        nj, ni = (j + 1, i) if j < i else (0, i + 1)
        lo, hi = bounds(i, j)
        fv = fixed_value(i, j)
        if fv is not None:
            if (lo is not None and fv < lo) or (hi is not None and fv > hi):
                return 0
            H[i][j] = fv
            return fill(ni, nj)
        if lo is None or hi is None:  # interior cells always have both
            raise AssertionError("unbounded interior hive cell")
        total = 0
        for v in range(lo, hi + 1):
            H[i][j] = v
            total += fill(ni, nj)
        return total

    return fill(0, 0)


# ---------------------------------------------------------------------------
# Kronecker


def kron_coeff(lam, mu, nu) -> int:
    """Kronecker coefficient via the exact character sum; fully symmetric in
    its three arguments."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = lam.size
    if mu.size != n or nu.size != n:
        raise ValueError(f"Kronecker query needs equal sizes, got {lam.size}, {mu.size}, {nu.size}")
    key = tuple(sorted((tuple(lam), tuple(mu), tuple(nu))))
    val = _KRON_CACHE.get(key)
    if val is None:
        a = character_vector(key[0])
        b = character_vector(key[1])
        c = character_vector(key[2])
        sizes = class_sizes(n)
        total = sum(s * x * y * z for s, x, y, z in zip(sizes, a, b, c))
        nf = factorial(n)
        assert total % nf == 0, "character sum is not an integer"
        val = total // nf
        _KRON_CACHE[key] = val
    return val


# ---------------------------------------------------------------------------
# Heisenberg


def heisenberg_coeff(lam, mu, nu) -> int:
    """Multiplicity of the lam-irreducible in the Heisenberg product of the
    mu- and nu-irreducibles.  Zero outside max(|mu|,|nu|) <= |lam| <=
    |mu|+|nu|."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if (mu.size, tuple(mu)) < (nu.size, tuple(nu)):
        mu, nu = nu, mu  # the product is commutative
    l, m, n = lam.size, mu.size, nu.size
    p, q, r = l - n, m + n - l, l - m
    if p < 0 or q < 0 or r < 0:
        return 0
    key = (tuple(lam), tuple(mu), tuple(nu))
    val = _HEIS_CACHE.get(key)
    if val is None:
        val = _heis_by_formula(lam, mu, nu, p, q, r)
        _HEIS_CACHE[key] = val
    return val


def _heis_by_formula(lam: Partition, mu: Partition, nu: Partition,
                     p: int, q: int, r: int) -> int:
    # mu splits into (alpha |- p, beta |- q); nu splits into (eta |- q,
    # rho |- r); beta and eta meet in a Kronecker factor over delta |- q;
    # alpha and delta recombine into tau |- p+q, then tau and rho into lam.
    beta_cands = list(subpartitions_of_size(mu, q))
    c1_by_alpha: dict[tuple, list[tuple[Partition, int]]] = {}
    for alpha in partitions_of(p):
        terms = []
        for beta in beta_cands:
            c1 = lr_coeff(mu, alpha, beta)
            if c1:
                terms.append((beta, c1))
        if terms:
            c1_by_alpha[alpha] = terms
    if not c1_by_alpha:
        return 0

    total = 0
    for rho in partitions_of(r):
        eta_terms = []
        for eta in subpartitions_of_size(nu, q):
            c2 = lr_coeff(nu, eta, rho)
            if c2:
                eta_terms.append((eta, c2))
        if not eta_terms:
            continue
        for tau in subpartitions_of_size(lam, lam.size - r):
            c4 = lr_coeff(lam, tau, rho)
            if not c4:
                continue
            for alpha, c1_terms in c1_by_alpha.items():
                for delta in subpartitions_of_size(tau, q):
                    c3 = lr_coeff(tau, alpha, delta)
                    if not c3:
                        continue
                    inner = 0
                    for beta, c1 in c1_terms:
                        for eta, c2 in eta_terms:
                            g = kron_coeff(delta, beta, eta)
                            if g:
                                inner += c1 * c2 * g
                    total += c4 * c3 * inner
    return total


@dataclass
class Decomposition:
    """Multiplicity map of a (part of a) product, with its degree span."""

    terms: dict
    degree_range: tuple[int, int]

    def restricted(self, degree: int) -> dict:
        return {k: v for k, v in self.terms.items() if k.size == degree}


def heisenberg_component(mu, nu, degree: int) -> Decomposition:
    """The degree-l piece of the Heisenberg product: all partitions of l with
    their multiplicities."""
    mu, nu = Partition(mu), Partition(nu)
    lo, hi = max(mu.size, nu.size), mu.size + nu.size
    if not lo <= degree <= hi:
        raise ValueError(f"degree {degree} outside [{lo}, {hi}]")
    terms = {}
    for lam in partitions_of(degree):
        h = heisenberg_coeff(lam, mu, nu)
        if h:
            terms[lam] = h
    return Decomposition(terms=terms, degree_range=(degree, degree))


def heisenberg_product(mu, nu) -> Decomposition:
    """The full Heisenberg product decomposition across all degrees."""
    mu, nu = Partition(mu), Partition(nu)
    lo, hi = max(mu.size, nu.size), mu.size + nu.size
    terms = {}
    for degree in range(lo, hi + 1):
        terms.update(heisenberg_component(mu, nu, degree).terms)
    return Decomposition(terms=terms, degree_range=(lo, hi))


# ---------------------------------------------------------------------------
# The h-basis (complete homogeneous) second route


def h_basis_kron_product(beta, gamma) -> CounterT[Partition]:
    """Kronecker product of two h-basis elements: the multiset of sorted
    entry sequences over all matrices with margins (beta, gamma)."""
    beta, gamma = Composition(beta), Composition(gamma)
    if beta.size != gamma.size:
        raise ValueError(f"margin totals differ: {beta.size} != {gamma.size}")
    return Counter(A.pi for A in kronecker_matrices(beta, gamma))


def h_basis_heisenberg_product(beta, gamma) -> CounterT[Partition]:
    """Heisenberg product of two h-basis elements: the multiset of sorted
    entry sequences over all cornered matrices with margins (beta, gamma)."""
    beta, gamma = Composition(beta), Composition(gamma)
    return Counter(A.pi for A in heisenberg_matrices(beta, gamma))


@lru_cache(maxsize=None)
def _heis_h_expansion(mu: tuple, nu: tuple) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Signed h-basis coefficients of the Heisenberg product of two Schur
    elements, grouped by sorted margin sequence."""
    out: CounterT[Partition] = Counter()
    for delta, a in schur_in_h_basis(Partition(mu)).items():
        for eps, b in schur_in_h_basis(Partition(nu)).items():
            w = a * b
            for theta, mult in h_basis_heisenberg_product(delta, eps).items():
                out[theta] += w * mult
    return tuple((tuple(k), v) for k, v in out.items() if v != 0)


@lru_cache(maxsize=None)
def _kron_h_expansion(mu: tuple, nu: tuple) -> tuple[tuple[tuple[int, ...], int], ...]:
    out: CounterT[Partition] = Counter()
    for delta, a in schur_in_h_basis(Partition(mu)).items():
        for eps, b in schur_in_h_basis(Partition(nu)).items():
            w = a * b
            for theta, mult in h_basis_kron_product(delta, eps).items():
                out[theta] += w * mult
    return tuple((tuple(k), v) for k, v in out.items() if v != 0)


def heisenberg_coeff_oracle(lam, mu, nu) -> int:
    """Second, independent route: expand both factors into the h-basis,
    multiply there via cornered matrices, and convert back through Kostka
    numbers.  The signed total must be a nonnegative integer."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if (mu.size, tuple(mu)) < (nu.size, tuple(nu)):
        mu, nu = nu, mu
    total = 0
    for theta, w in _heis_h_expansion(tuple(mu), tuple(nu)):
        if sum(theta) == lam.size:
            k = kostka(lam, theta)
            if k:
                total += w * k
    if total < 0:
        raise ArithmeticError(
            f"h-basis route produced a negative multiplicity {total} "
            f"for ({lam}; {mu}, {nu}): implementation bug")
    return total


def kron_coeff_oracle(lam, mu, nu) -> int:
    """h-basis route for Kronecker coefficients (second engine for the CLI
    cross-check)."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size or lam.size != nu.size:
        raise ValueError("Kronecker query needs equal sizes")
    total = 0
    for theta, w in _kron_h_expansion(tuple(mu), tuple(nu)):
        if sum(theta) == lam.size:
            k = kostka(lam, theta)
            if k:
                total += w * k
    if total < 0:
        raise ArithmeticError("h-basis route produced a negative multiplicity")
    return total
