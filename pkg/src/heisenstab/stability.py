"""Triple classification, stability certification/refutation, and
stabilization sequences.

A triple of partitions is classified by its size pattern (equal sizes;
split sizes; or the interpolating range) and the positivity of the matching
coefficient.  Stability along a triple means: shifting any same-pattern
base by n times the triple gives an eventually constant coefficient
sequence.  For the split (LR) pattern that is decidable by one finite
check; for the other two patterns a scan can only refute (a value >= 2 at
any scale) or stay inconclusive, unless an additivity certificate from the
matrix pipeline certifies it externally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .coefficients import heisenberg_coeff, kron_coeff, lr_coeff
from .partitions import Partition, add, scale


class Kind(enum.Enum):
    KRONECKER = "kron"
    LR = "lr"
    HEISENBERG = "heis"

    @staticmethod
    def from_token(token: str) -> "Kind":
        for kind in Kind:
            if kind.value == token:
                return kind
        raise ValueError(f"unknown kind {token!r} (expected kron, lr, or heis)")


class NotATripleError(ValueError):
    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason  # "size_pattern" or "zero_coefficient"


def size_pattern_ok(kind: Kind, a: Partition, b: Partition, c: Partition) -> bool:
    if kind is Kind.KRONECKER:
        return a.size == b.size == c.size
    if kind is Kind.LR:
        return a.size == b.size + c.size
    return max(b.size, c.size) <= a.size <= b.size + c.size


def coefficient(kind: Kind, lam, mu, nu) -> int:
    if kind is Kind.KRONECKER:
        return kron_coeff(lam, mu, nu)
    if kind is Kind.LR:
        return lr_coeff(lam, mu, nu)
    return heisenberg_coeff(lam, mu, nu)


@dataclass(frozen=True)
class Triple:
    alpha: Partition
    beta: Partition
    gamma: Partition
    kind: Kind                  # most specific pattern
    flags: frozenset            # every pattern the sizes satisfy
    coefficient: int            # value of the kind's coefficient at scale 1


def classify_triple(alpha, beta, gamma) -> Triple:
    """Classify by size pattern, then demand a positive coefficient.

    Equal sizes classify as the Kronecker kind (the interpolating flag is
    always set too, since both special patterns embed in the general one)."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    flags = frozenset(k for k in Kind if size_pattern_ok(k, alpha, beta, gamma))
    if not flags:
        raise NotATripleError(
            "size_pattern",
            f"sizes ({alpha.size}; {beta.size}, {gamma.size}) fit no pattern")
    if Kind.KRONECKER in flags:
        kind = Kind.KRONECKER
    elif Kind.LR in flags:
        kind = Kind.LR
    else:
        kind = Kind.HEISENBERG
    value = coefficient(kind, alpha, beta, gamma)
    if value == 0:
        raise NotATripleError(
            "zero_coefficient",
            f"coefficient of kind {kind.value} vanishes on ({alpha}; {beta}, {gamma})")
    return Triple(alpha=alpha, beta=beta, gamma=gamma, kind=kind,
                  flags=flags, coefficient=value)


class Verdict(enum.Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive_up_to"


@dataclass(frozen=True)
class StabilityReport:
    triple: Triple
    verdict: Verdict
    n_max: int
    sequence: tuple  # ((n, coefficient), ...)
    witness: Optional[tuple] = None         # (n, value >= 2) when refuted
    certified_by: Optional[str] = None


def stability_check(triple: Triple, n_max: int = 8) -> StabilityReport:
    """Certify, refute, or bound the stability question for a triple.

    Split-pattern triples are decided by the single value at scale 1 (1
    certifies, anything bigger refutes).  For the other patterns the scaled
    values are scanned up to n_max: any value >= 2 refutes; a clean scan of
    ones stays inconclusive (upgrade to certified needs an additivity
    certificate from the matrix pipeline)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    a, b, c = triple.alpha, triple.beta, triple.gamma
    seq: list[tuple[int, int]] = []
    witness = None
    for n in range(1, n_max + 1):
        value = coefficient(triple.kind, scale(n, a), scale(n, b), scale(n, c))
        seq.append((n, value))
        if value >= 2:
            witness = (n, value)
            break
        if value == 0:
            raise RuntimeError("scaled coefficient vanished on a valid triple")
    if triple.kind is Kind.LR:
        if triple.coefficient == 1:
            return StabilityReport(triple=triple, verdict=Verdict.CERTIFIED,
                                   n_max=n_max, sequence=tuple(seq),
                                   certified_by="finite_lr_check")
        return StabilityReport(triple=triple, verdict=Verdict.REFUTED,
                               n_max=n_max, sequence=tuple(seq),
                               witness=(1, triple.coefficient))
    if witness is not None:
        return StabilityReport(triple=triple, verdict=Verdict.REFUTED,
                               n_max=n_max, sequence=tuple(seq), witness=witness)
    return StabilityReport(triple=triple, verdict=Verdict.INCONCLUSIVE,
                           n_max=n_max, sequence=tuple(seq))


def stabilization_sequence(kind: Kind,
                           base: Sequence,
                           direction: Sequence,
                           ns: Sequence[int]) -> list[tuple[int, int]]:
    """Coefficient of the base shifted n steps along the direction, for each
    n.  Both the base and the direction must fit the kind's size pattern,
    which makes every shifted query fit it too."""
    lam, mu, nu = (Partition(x) for x in base)
    al, be, ga = (Partition(x) for x in direction)
    if not size_pattern_ok(kind, lam, mu, nu):
        raise ValueError(f"base sizes ({lam.size}; {mu.size}, {nu.size}) "
                         f"violate the {kind.value} pattern")
    if not size_pattern_ok(kind, al, be, ga):
        raise ValueError(f"direction sizes ({al.size}; {be.size}, {ga.size}) "
                         f"violate the {kind.value} pattern")
    out = []
    for n in ns:
        value = coefficient(kind, add(lam, scale(n, al)),
                            add(mu, scale(n, be)), add(nu, scale(n, ga)))
        out.append((n, value))
    return out


def detect_stable_limit(values: Sequence[int], window: int = 4
                        ) -> Optional[tuple[int, int]]:
    """Heuristic tail detector: if the last `window` entries agree, return
    (value, index where the final run starts); otherwise None.  Agreement
    over a window is evidence, not proof, of stabilization."""
    if window < 2:
        raise ValueError("window must be >= 2")
    if len(values) < window:
        return None
    tail = values[-window:]
    if any(v != tail[0] for v in tail):
        return None
    onset = len(values) - 1
    while onset > 0 and values[onset - 1] == tail[0]:
        onset -= 1
    return tail[0], onset


@dataclass(frozen=True)
class MonotonicityResult:
    increasing: bool
    violation: Optional[tuple] = None  # (n_prev, n_next, v_prev, v_next)


def monotonicity_check(kind: Kind, base, direction, ns: Sequence[int]
                       ) -> MonotonicityResult:
    """Check that the stabilization sequence is weakly increasing.  The
    direction must be a valid triple of the kind (positive coefficient)."""
    al, be, ga = (Partition(x) for x in direction)
    if not size_pattern_ok(kind, al, be, ga):
        raise ValueError("direction violates the size pattern")
    if coefficient(kind, al, be, ga) == 0:
        raise ValueError("direction coefficient vanishes: not a valid triple")
    seq = stabilization_sequence(kind, base, direction, ns)
    for (n0, v0), (n1, v1) in zip(seq, seq[1:]):
        if v1 < v0:
            return MonotonicityResult(increasing=False, violation=(n0, n1, v0, v1))
    return MonotonicityResult(increasing=True)
