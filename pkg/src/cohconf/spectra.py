"""Spectral analysis: exact SRG closed forms, numerical stratum dimensions,
trace identities, and the dominance/component dichotomy.

Exact paths use :mod:`cohconf.exactnum`; the only floating-point computation
is the cyclic-Jacobi eigensolve behind :func:`stratum_dimensions` and
:func:`perron_check`, validated by clustering tolerances and a second
independent random draw.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .core import CoherentConfig, is_association_scheme, is_bipartite, is_commutative, symmetrize, weak_components
from .errors import (
    NegativeDiscriminant,
    NonIntegralMultiplicity,
    NotCommutative,
    UnstableClustering,
)
from .exactnum import QuadraticNumber, sqrt_exact

#: Environment variable overriding the generic-element RNG seed.
SEED_ENV_VAR = "COHCONF_SEED"
DEFAULT_SEED = 0


def resolve_seed(seed: int | None = None) -> int:
    if seed is not None:
        return seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_SEED


# ---------------------------------------------------------------------------
# parameter types


@dataclass(frozen=True)
class SrgParams:
    """Strongly-regular-graph parameter tuple (n, k, lambda, mu)."""

    n: int
    k: int
    lam: int
    mu: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.lam, self.mu)

    def __str__(self) -> str:
        return f"srg({self.n},{self.k},{self.lam},{self.mu})"


@dataclass(frozen=True)
class SrgSpectrum:
    """Exact spectrum of an SRG: eigenvalues k > r > s with multiplicities
    1, f, g.  ``conference`` holds iff 2k = (n-1)(mu-lambda)."""

    k: int
    r: QuadraticNumber
    s: QuadraticNumber
    f: int
    g: int
    conference: bool

    @property
    def n(self) -> int:
        return 1 + self.f + self.g

    def pattern(self) -> "MultiplicityPattern":
        return MultiplicityPattern.of(1, self.f, self.g)


@dataclass(frozen=True)
class MultiplicityPattern:
    """Sorted stratum dimensions; for homogeneous configurations the first
    entry is the 1-dimensional all-ones stratum."""

    dims: tuple[int, ...]

    def __post_init__(self):
        d = tuple(sorted(int(x) for x in self.dims))
        if any(x <= 0 for x in d):
            raise ValueError("stratum dimensions must be positive")
        object.__setattr__(self, "dims", d)

    @classmethod
    def of(cls, *dims: int) -> "MultiplicityPattern":
        return cls(tuple(dims))

    @property
    def total(self) -> int:
        return sum(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def __len__(self):
        return len(self.dims)

    def __str__(self) -> str:
        return "(" + ",".join(str(d) for d in self.dims) + ")"


# ---------------------------------------------------------------------------
# exact SRG closed forms


def srg_spectrum(p: SrgParams) -> SrgSpectrum:
    """Exact eigenvalues r, s = ((lam-mu) +- sqrt((lam-mu)^2 + 4(k-mu)))/2 and
    multiplicities f, g solving f+g = n-1, k + f r + g s = 0.

    Raises NegativeDiscriminant, or NonIntegralMultiplicity when f, g fail to
    be positive integers (irrational eigenvalues are admissible only in the
    conference case f = g = (n-1)/2).
    """
    n, k, lam, mu = p.n, p.k, p.lam, p.mu
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc < 0:
        raise NegativeDiscriminant(f"{p}: discriminant {disc} < 0")
    if disc == 0:
        raise NonIntegralMultiplicity(f"{p}: repeated non-principal eigenvalue")
    conference = 2 * k == (n - 1) * (mu - lam)
    root = sqrt_exact(disc)
    half = Fraction(1, 2)
    r = QuadraticNumber(half * (lam - mu)) + half * root
    s = QuadraticNumber(half * (lam - mu)) - half * root
    if not root.is_rational:
        if not conference or (n - 1) % 2:
            raise NonIntegralMultiplicity(
                f"{p}: irrational eigenvalues need the conference condition 2k=(n-1)(mu-lam)"
            )
        f = g = (n - 1) // 2
        return SrgSpectrum(k, r, s, f, g, True)
    rr, ss = r.rational(), s.rational()
    f_exact = Fraction(-k - (n - 1) * ss, 1) / (rr - ss)
    if f_exact.denominator != 1:
        raise NonIntegralMultiplicity(f"{p}: f = {f_exact} is not an integer")
    f = int(f_exact)
    g = (n - 1) - f
    if f <= 0 or g <= 0:
        raise NonIntegralMultiplicity(f"{p}: multiplicities ({f},{g}) not positive")
    return SrgSpectrum(k, r, s, f, g, conference)


def complement_params(p: SrgParams) -> SrgParams:
    """Parameters of the complement graph:
    (n, n-k-1, n-2k+mu-2, n-2k+lambda)."""
    n, k, lam, mu = p.n, p.k, p.lam, p.mu
    return SrgParams(n, n - k - 1, n - 2 * k + mu - 2, n - 2 * k + lam)


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    reason: str | None = None
    spectrum: SrgSpectrum | None = None
    degenerate: bool = False

    def __bool__(self) -> bool:
        return self.feasible

    def __str__(self) -> str:
        if self.feasible:
            tag = "Feasible (degenerate)" if self.degenerate else "Feasible"
            return tag
        return f"Infeasible: {self.reason}"


def _union_case(p: SrgParams) -> bool:
    """mu = 0 disjoint union of m >= 2 complete graphs K_{k+1}."""
    return (
        p.mu == 0
        and p.lam == p.k - 1
        and p.n % (p.k + 1) == 0
        and p.n // (p.k + 1) >= 2
    )


def basic_feasibility(p: SrgParams) -> FeasibilityVerdict:
    """Counting identity k(k-lam-1) = (n-k-1)mu, then exact spectrum
    integrality, then the eigenvalue-dominance bounds |r|, |s| < k (waived in
    the degenerate union / complete-multipartite cases, where one relation is
    disconnected)."""
    n, k, lam, mu = p.n, p.k, p.lam, p.mu
    if not (0 <= k < n) or lam < 0 or mu < 0:
        return FeasibilityVerdict(False, "parameters out of range")
    if k == 0 or k == n - 1:
        return FeasibilityVerdict(False, "degenerate: empty or complete graph")
    if k * (k - lam - 1) != (n - k - 1) * mu:
        return FeasibilityVerdict(
            False,
            f"counting identity fails: k(k-lam-1) = {k * (k - lam - 1)} "
            f"!= (n-k-1)mu = {(n - k - 1) * mu}",
        )
    if mu > k:
        return FeasibilityVerdict(False, f"mu = {mu} exceeds k = {k}")
    if mu == 0:
        if not _union_case(p):
            return FeasibilityVerdict(False, "mu = 0 but not a union of complete graphs")
        return FeasibilityVerdict(True, None, srg_spectrum(p), degenerate=True)
    if mu == k:
        comp = complement_params(p)
        if not _union_case(comp):
            return FeasibilityVerdict(False, "mu = k but complement is not a union of complete graphs")
        return FeasibilityVerdict(True, None, srg_spectrum(p), degenerate=True)
    try:
        spec = srg_spectrum(p)
    except (NegativeDiscriminant, NonIntegralMultiplicity) as exc:
        return FeasibilityVerdict(False, str(exc))
    if not (abs(spec.r) < k and abs(spec.s) < k):
        return FeasibilityVerdict(False, "non-principal eigenvalue modulus reaches k")
    return FeasibilityVerdict(True, None, spec)


# ---------------------------------------------------------------------------
# numerical stratum dimensions


def _cluster(evals: np.ndarray, scale: float) -> tuple[int, ...]:
    """Multiplicities of eigenvalue clusters at tolerance 1e-7 * max(1, scale)."""
    tol = 1e-7 * max(1.0, scale)
    evs = np.sort(evals)
    sizes = []
    start = 0
    for i in range(1, len(evs)):
        if evs[i] - evs[i - 1] > tol:
            sizes.append(i - start)
            start = i
    sizes.append(len(evs) - start)
    return tuple(sorted(sizes))


def stratum_dimensions(
    cc: CoherentConfig, *, seed: int | None = None, draws: int = 2
) -> MultiplicityPattern:
    """Common-eigenspace dimensions of a commutative configuration.

    A generic element sum(c_i A_i) with distinct random integer coefficients
    in [1, 10^6] is eigensolved (cyclic Jacobi) and its spectrum clustered;
    ``draws`` independent coefficient draws must agree, else
    UnstableClustering.  Configurations with directed classes are symmetrized
    first (their conjugate strata merge pairwise).
    """
    cc.require_homogeneous("stratum_dimensions")
    if not is_commutative(cc):
        raise NotCommutative("stratum dimensions are defined for commutative configurations")
    if not is_association_scheme(cc):
        cc = symmetrize(cc)
    rng = random.Random(resolve_seed(seed))
    mats = [cc.class_matrix(i).astype(np.float64) for i in range(cc.rank)]
    results = []
    for _ in range(max(2, draws)):
        coeffs = rng.sample(range(1, 10 ** 6 + 1), cc.rank)
        m = sum(c * a for c, a in zip(coeffs, mats))
        evals = _kernels.jacobi_eigenvalues(m)
        sizes = _cluster(evals, float(np.max(np.abs(evals))))
        if sum(sizes) != cc.n:
            raise UnstableClustering(f"cluster sizes {sizes} do not sum to n = {cc.n}")
        results.append(sizes)
    if any(rj != results[0] for rj in results[1:]):
        raise UnstableClustering(f"independent draws disagree: {results}")
    return MultiplicityPattern(results[0])


# ---------------------------------------------------------------------------
# exact trace identities


@dataclass(frozen=True)
class Stratum:
    multiplicity: int
    eigenvalues: tuple[QuadraticNumber, ...]


@dataclass(frozen=True)
class SpectralTable:
    """Claimed per-class eigenvalue table for a homogeneous configuration.

    One column per off-diagonal class (valency k_i); one row per non-principal
    stratum.  The principal stratum (multiplicity 1, eigenvalue k_i) is
    implicit.
    """

    n_points: int
    valencies: tuple[int, ...]
    strata: tuple[Stratum, ...]

    @classmethod
    def build(
        cls,
        n_points: int,
        valencies: Sequence[int],
        strata: Sequence[tuple[int, Sequence[QuadraticNumber | int | Fraction]]],
    ) -> "SpectralTable":
        rows = tuple(
            Stratum(int(m), tuple(_as_quad(v) for v in evs)) for m, evs in strata
        )
        return cls(n_points, tuple(int(k) for k in valencies), rows)

    @classmethod
    def from_srg(cls, p: SrgParams, spec: SrgSpectrum | None = None) -> "SpectralTable":
        """Two-class table for a graph and its complement; the complement
        eigenvalue on each stratum is -1 - (graph eigenvalue)."""
        spec = spec or srg_spectrum(p)
        k2 = p.n - p.k - 1
        minus1 = QuadraticNumber(-1)
        return cls.build(
            p.n,
            (p.k, k2),
            [
                (spec.f, (spec.r, minus1 - spec.r)),
                (spec.g, (spec.s, minus1 - spec.s)),
            ],
        )


def _as_quad(v) -> QuadraticNumber:
    return v if isinstance(v, QuadraticNumber) else QuadraticNumber(v)


@dataclass(frozen=True)
class IdentityVerdict:
    passed: bool
    failures: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.passed

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None


class _ExactSum:
    """Accumulates quadratic numbers across different radicands.

    Distinct square-free radicands are linearly independent over the
    rationals, so a mixed sum equals a rational target iff the rational
    parts match and every surd coefficient vanishes.
    """

    def __init__(self):
        self.rational = Fraction(0)
        self.surd: dict[int, Fraction] = {}

    def add(self, value: QuadraticNumber, weight: int = 1) -> None:
        self.rational += weight * value.a
        if value.d:
            self.surd[value.d] = self.surd.get(value.d, Fraction(0)) + weight * value.b

    def equals(self, target: int | Fraction) -> bool:
        return self.rational == target and all(b == 0 for b in self.surd.values())

    def __str__(self) -> str:
        parts = [str(self.rational)]
        for d, b in sorted(self.surd.items()):
            if b:
                parts.append(f"{b}*sqrt({d})")
        return " + ".join(parts)


def trace_identities(table: SpectralTable, cc: CoherentConfig | None = None) -> IdentityVerdict:
    """Verify, in exact arithmetic:

    * multiplicities (1 + non-principal) sum to n;
    * per class, Tr A_i = k_i + sum(m_s * ev) = 0;
    * per class, Tr A_i^2 = k_i^2 + sum(m_s * ev^2) = n * k_i;
    * per non-principal stratum, sum over classes of ev = -1
      (because the off-diagonal classes sum to J - I).

    When ``cc`` is given, the table's valencies must match its off-diagonal
    classes.  Verdict-valued; ``failures`` lists every identity that broke.
    """
    fails: list[str] = []
    n = table.n_points
    if cc is not None:
        cc.require_homogeneous("trace_identities")
        if cc.n != n:
            fails.append(f"table n = {n} but configuration has {cc.n} points")
        cc_vals = tuple(cc.valencies[i] for i in cc.off_diagonal_classes())
        if tuple(sorted(cc_vals)) != tuple(sorted(table.valencies)):
            fails.append(f"valencies {table.valencies} do not match configuration {cc_vals}")
    mult_total = 1 + sum(s.multiplicity for s in table.strata)
    if mult_total != n:
        fails.append(f"multiplicities sum to {mult_total}, not n = {n}")
    for idx, stratum in enumerate(table.strata):
        if len(stratum.eigenvalues) != len(table.valencies):
            fails.append(f"stratum {idx} has {len(stratum.eigenvalues)} eigenvalues for {len(table.valencies)} classes")
    if fails:
        return IdentityVerdict(False, tuple(fails))
    for ci, k in enumerate(table.valencies):
        tr = _ExactSum()
        tr.add(QuadraticNumber(k))
        tr2 = _ExactSum()
        tr2.add(QuadraticNumber(k * k))
        for stratum in table.strata:
            ev = stratum.eigenvalues[ci]
            tr.add(ev, stratum.multiplicity)
            tr2.add(ev * ev, stratum.multiplicity)
        if not tr.equals(0):
            fails.append(f"class {ci}: Tr A = {tr} != 0")
        if not tr2.equals(n * k):
            fails.append(f"class {ci}: Tr A^2 = {tr2} != n*k = {n * k}")
    for idx, stratum in enumerate(table.strata):
        total = _ExactSum()
        for ev in stratum.eigenvalues:
            total.add(ev)
        if not total.equals(-1):
            fails.append(f"stratum {idx}: eigenvalue sum {total} != -1")
    return IdentityVerdict(not fails, tuple(fails))


# ---------------------------------------------------------------------------
# dominance / component dichotomy


@dataclass(frozen=True)
class ClassPerronVerdict:
    """Per-class outcome: either the class digraph splits into ``components``
    weak components (the reducible alternative), or dominance of the row sum
    is certified: every non-principal eigenvalue modulus < row sum.

    Dominance is decided exactly (connected and, for the symmetrized matrix,
    non-bipartite) and cross-checked numerically; ``max_other_modulus`` is
    the measured second-largest modulus of the symmetrized class matrix.
    """

    class_index: int
    valency: int
    components: int
    dominant: bool | None = None
    bipartite: bool | None = None
    max_other_modulus: float | None = None

    def __str__(self) -> str:
        if self.components > 1:
            return f"class {self.class_index}: {self.components} components"
        state = "dominant" if self.dominant else "not dominant (bipartite)"
        return f"class {self.class_index}: connected, {state}"


def perron_check(cc: CoherentConfig) -> list[ClassPerronVerdict]:
    """Apply the component/dominance dichotomy to every off-diagonal class.

    Directed classes are symmetrized (A + A^T) for the spectral part; weak
    connectivity is used for component counting, which equals ordinary
    connectivity for symmetric classes.
    """
    cc.require_homogeneous("perron_check")
    out = []
    for i in cc.off_diagonal_classes():
        a = cc.class_matrix(i)
        comps = weak_components(a)
        if len(comps) > 1:
            out.append(ClassPerronVerdict(i, cc.valencies[i], len(comps)))
            continue
        sym = a if cc.converse[i] == i else ((a + a.T) > 0).astype(np.int64)
        rowsum = int(sym.sum(axis=1)[0])
        bip = is_bipartite(sym)
        evals = np.sort(np.abs(_kernels.jacobi_eigenvalues(sym.astype(np.float64))))[::-1]
        max_other = float(evals[1]) if len(evals) > 1 else 0.0
        dominant = not bip
        tol = 1e-7 * max(1.0, rowsum)
        if dominant and max_other >= rowsum - tol:
            raise AssertionError(
                f"class {i}: connected non-bipartite but measured modulus {max_other} ~ row sum {rowsum}"
            )
        out.append(
            ClassPerronVerdict(
                i, cc.valencies[i], 1, dominant=dominant, bipartite=bip, max_other_modulus=max_other
            )
        )
    return out
