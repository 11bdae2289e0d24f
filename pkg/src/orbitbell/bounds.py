"""Quantum and classical bounds of the orbit-generated Bell expression.

The Bell expression is the sum, over the 2*M*d orbit terms, of the
probabilities of seeing that term's outcome pair at that term's
setting pair. Its quantum value on a shared state psi is <psi|A|psi>
with A the sum of orbit projectors, so the quantum bound is the top
eigenvalue of A. Two independent routes compute it:

* numeric: Jacobi diagonalization of A;
* analytic: the eigenbasis of the step operator B is known in closed
  form, and A's eigenvalues are 2*M*d times the seed weight each
  degenerate eigenvalue group of B captures.

The classical bound is the exact maximum of the same expression over
deterministic local strategies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .linalg import hermitian_eigs, kron
from .orbit import MeasLabel, OrbitEntry, ProblemSpec, fourier_eigenbasis, orbit

__all__ = [
    "EigenPair",
    "DeterministicStrategy",
    "BellInequality",
    "InstanceTooLarge",
    "STRATEGY_GUARD",
    "root_of_unity_index",
    "accumulate_A",
    "quantum_bound_numeric",
    "b_eigensystem",
    "quantum_bound_analytic",
    "classical_bound",
    "build_inequality",
]

# Deterministic strategy pairs are capped at this count; larger
# instances are rejected instead of silently running for hours.
STRATEGY_GUARD = 10**8


class InstanceTooLarge(Exception):
    """Deterministic-strategy search space exceeds the enumeration guard."""


@dataclass(frozen=True)
class EigenPair:
    """Eigenvector of the step operator; eigenvalue is the root of unity
    exp(2*pi*i*root_index / (2*M*d))."""

    root_index: int
    vector: np.ndarray


@dataclass(frozen=True)
class DeterministicStrategy:
    """Fixed outcome per setting for each party."""

    alice_map: tuple[int, ...]
    bob_map: tuple[int, ...]


@dataclass(frozen=True)
class BellInequality:
    """Everything derived for one instance: terms, bounds, maximizer."""

    spec: ProblemSpec
    terms: tuple[tuple[MeasLabel, MeasLabel], ...]
    classical_bound: int
    quantum_bound: float
    optimal_state: np.ndarray
    per_term_probs: np.ndarray
    witness: DeterministicStrategy


def root_of_unity_index(value: complex, order: int, tol: float = 1e-9) -> int:
    """Snap a unit-modulus value to its nearest order-th root of unity.

    Raises RuntimeError when the snap error exceeds ``tol``; that only
    happens on a branch-convention bug, never from roundoff.
    """
    idx = int(round(float(np.angle(value)) * order / (2.0 * np.pi))) % order
    err = abs(value - np.exp(2j * np.pi * idx / order))
    if err > tol:
        raise RuntimeError(
            f"{value!r} is not an order-{order} root of unity "
            f"(snap error {err:.3e} exceeds {tol:.1e})"
        )
    return idx


def accumulate_A(orbit_entries: list[OrbitEntry]) -> np.ndarray:
    """Sum of projectors onto the orbit states."""
    dim = orbit_entries[0].vector.shape[0]
    a = np.zeros((dim, dim), dtype=complex)
    for entry in orbit_entries:
        a += np.outer(entry.vector, entry.vector.conj())
    return a


def quantum_bound_numeric(a: np.ndarray) -> tuple[float, np.ndarray]:
    """Top eigenvalue of the projector sum and its eigenvector, by Jacobi."""
    w, v = hermitian_eigs(a)
    return float(w[0]), v[:, 0]


def b_eigensystem(spec: ProblemSpec) -> list[EigenPair]:
    """Closed-form eigensystem of the step operator B.

    B permutes the products of shift eigenvectors: w_j w_j is an
    eigenvector with U's eigenvalue lambda_j, and each unordered pair
    j < k spans a 2-dimensional block whose eigenvalues are the two
    square roots +/- sqrt(lambda_j lambda_k). All eigenvalues are
    2*M*d-th roots of unity; they are kept as exact integer indices so
    that degeneracy detection never depends on floating-point
    clustering. The principal branch (half the phase of the product
    taken in (-pi, pi], boundary at +pi) fixes the signs reproducibly.
    """
    d = spec.outcomes
    order = spec.orbit_length
    half = order // 2  # = M * d
    basis = fourier_eigenbasis(d)
    lambdas = [np.exp(1j * theta / spec.settings) for _, theta in basis]
    indices = [root_of_unity_index(lam, order) for lam in lambdas]

    pairs: list[EigenPair] = []
    for j in range(d):
        w = basis[j][0]
        pairs.append(EigenPair(indices[j], kron(w, w)))
    for j in range(d):
        for k in range(j + 1, d):
            total = (indices[j] + indices[k]) % order
            if total % 2:
                raise RuntimeError(
                    "odd root-index sum in a two-dimensional block: "
                    "branch arithmetic bug"
                )
            principal = total if total <= half else total - order
            plus = (principal // 2) % order
            minus = (plus + half) % order
            mu = np.exp(2j * np.pi * plus / order)
            ratio = mu / lambdas[j]
            wj, wk = basis[j][0], basis[k][0]
            direct = kron(wj, wk)
            swapped = kron(wk, wj)
            pairs.append(EigenPair(plus, (direct + ratio * swapped) / np.sqrt(2)))
            pairs.append(EigenPair(minus, (direct - ratio * swapped) / np.sqrt(2)))
    return pairs


def quantum_bound_analytic(
    spec: ProblemSpec, orbit_entries: list[OrbitEntry]
) -> tuple[float, np.ndarray]:
    """Quantum bound from the closed-form eigenstructure of B.

    A commutes with nothing as useful as B itself: grouping B's
    eigenvectors by (exact) eigenvalue index, the seed state's weight
    in each group gives one eigenvalue of A, namely 2*M*d times that
    weight, with eigenvector the (normalized) projection of the seed
    onto the group. Returns the largest such value with its state;
    ties go to the smallest root index. Groups the seed misses
    entirely contribute the value 0 and no state.
    """
    seed = orbit_entries[0].vector
    length = spec.orbit_length

    groups: dict[int, list[EigenPair]] = {}
    for pair in b_eigensystem(spec):
        groups.setdefault(pair.root_index, []).append(pair)

    best_value = -1.0
    best_state: np.ndarray | None = None
    for idx in sorted(groups):
        members = groups[idx]
        coeffs = [np.vdot(p.vector, seed) for p in members]
        weight = float(sum(abs(c) ** 2 for c in coeffs))
        value = 0.0 if weight < 1e-15 else length * weight
        if value > best_value + 1e-12:
            best_value = value
            if weight < 1e-15:
                best_state = None
            else:
                x = sum(c * p.vector for c, p in zip(coeffs, members))
                best_state = x / np.linalg.norm(x)
    assert best_state is not None  # seed has unit total weight
    return best_value, best_state


def classical_bound(
    orbit_entries: list[OrbitEntry], spec: ProblemSpec
) -> tuple[int, DeterministicStrategy]:
    """Exact maximum of the Bell expression over deterministic strategies.

    Equivalent to scanning all d^(2M) strategy pairs: for a fixed
    Alice assignment the terms split by Bob's setting, so Bob's best
    reply is a per-setting argmax and needs no enumeration. Ties are
    broken toward the lexicographically smallest (alice_map, bob_map)
    table, identical to what the naive double scan would return.

    Raises InstanceTooLarge when d^(2M) exceeds STRATEGY_GUARD.
    """
    d, m = spec.outcomes, spec.settings
    if d ** (2 * m) > STRATEGY_GUARD:
        raise InstanceTooLarge(
            f"instance too large: {d}^{2 * m} deterministic strategies "
            f"exceed the enumeration guard of {STRATEGY_GUARD:.0e}"
        )
    terms = [(e.alice, e.bob) for e in orbit_entries]

    best = -1
    best_strategy: DeterministicStrategy | None = None
    for alice_map in itertools.product(range(d), repeat=m):
        hits = [[0] * d for _ in range(m)]
        for a, b in terms:
            if alice_map[a.setting] == a.outcome:
                hits[b.setting][b.outcome] += 1
        total = 0
        bob_map = []
        for s in range(m):
            row = hits[s]
            pick = max(range(d), key=row.__getitem__)  # first max: smallest outcome
            bob_map.append(pick)
            total += row[pick]
        if total > best:
            best = total
            best_strategy = DeterministicStrategy(alice_map, tuple(bob_map))
    assert best_strategy is not None
    return best, best_strategy


def build_inequality(spec: ProblemSpec) -> BellInequality:
    """Assemble the Bell inequality for one instance.

    Computes the quantum bound along both routes and insists they
    agree to 1e-9; the analytic value and state are the ones reported.
    """
    entries = orbit(spec)
    a = accumulate_A(entries)
    numeric, _ = quantum_bound_numeric(a)
    analytic, state = quantum_bound_analytic(spec, entries)
    if abs(numeric - analytic) > 1e-9:
        raise RuntimeError(
            f"quantum bound routes disagree: numeric {numeric!r} vs "
            f"analytic {analytic!r}"
        )
    c_value, witness = classical_bound(entries, spec)
    probs = np.array(
        [abs(np.vdot(state, e.vector)) ** 2 for e in entries], dtype=float
    )
    return BellInequality(
        spec=spec,
        terms=tuple((e.alice, e.bob) for e in entries),
        classical_bound=c_value,
        quantum_bound=analytic,
        optimal_state=state,
        per_term_probs=probs,
        witness=witness,
    )
