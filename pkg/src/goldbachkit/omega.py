"""Lower-bound construction for the extremal size of G_k.

Instantiates, at desk scale, the chain that forces integers divisible by a
primorial modulus q to carry large Goldbach mass:

  psi(2x; q, a) >= x / (2 phi(q))            for (a, q) = 1,
  sum_{n <= 2Lx, n = b (q)} G_L(n) >= x^L / (2^L phi(q)),
  sum_{n <= 2kx, q | n} G_k(n) >= x^k / (2^k phi(q)),
  max_{n <= 2kx} G_k(n) >= (x^(k-1) / 2^(k+1)) q/phi(q),

with q/phi(q) growing like e^gamma log y (Mertens).  The bounds hold
asymptotically with unspecified constants, so every inequality here is
evaluated and reported with its margin; only the residue-partition
identities are hard invariants.

The literal cutoff q = product of primes below x makes q astronomically
larger than 2x at any computable scale (the progressions would be mostly
empty), so the prime cutoff y is decoupled from x and defaults to
max(3, log x); configurations with q >= 2x are flagged, not hidden.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .accum import exact_sum
from .goldbach import GoldbachTable
from .mangoldt import (
    MangoldtTable,
    Primorial,
    phi_of_int,
    primorial,
    psi_progression,
)

EULER_GAMMA = 0.5772156649015329


def default_cutoff(x: float) -> float:
    """Default prime cutoff y for the modulus: max(3, log x)."""
    return max(3.0, math.log(x))


@dataclass(frozen=True)
class OmegaConfig:
    """Scale x, prime cutoff y for q = prod_{p < y} p, exceptional modulus 1.

    No exceptional (Siegel) zero exists in any computable range, so the
    exceptional modulus is pinned to 1 and never excludes a prime.
    """

    k: int
    x: float
    y: float | None = None
    exceptional_modulus: int = 1

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"need k >= 2, got {self.k}")
        if self.x < 2:
            raise ValueError(f"need x >= 2, got {self.x}")
        if self.exceptional_modulus != 1:
            raise ValueError("exceptional modulus is fixed to 1")

    @property
    def cutoff(self) -> float:
        return self.y if self.y is not None else default_cutoff(self.x)

    @property
    def modulus(self) -> Primorial:
        return primorial(self.cutoff)


@dataclass(frozen=True)
class ProgressionRow:
    residue: int
    psi_value: float
    bound: float

    @property
    def ratio(self) -> float:
        return self.psi_value / self.bound if self.bound else math.inf


@dataclass(frozen=True)
class ProgressionReport:
    x: float
    q: int
    phi_q: int
    rows: tuple[ProgressionRow, ...]
    vacuous: bool  # q >= 2x: classes mostly empty, bound not meaningful

    @property
    def min_ratio(self) -> float:
        return min(row.ratio for row in self.rows)


def progression_bound_check(table: MangoldtTable, x: float, q: int) -> ProgressionReport:
    """psi(2x; q, a) against x / (2 phi(q)) for every residue a coprime to q."""
    if 2 * x > table.limit:
        raise ValueError(f"need 2x <= sieve limit, got 2x = {2 * x}")
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    phi_q = phi_of_int(q)
    bound = x / (2.0 * phi_q)
    rows = []
    for a in range(q):
        if q > 1 and math.gcd(a, q) != 1:
            continue
        rows.append(ProgressionRow(
            residue=a,
            psi_value=psi_progression(table, 2 * x, q, a),
            bound=bound,
        ))
    return ProgressionReport(x=x, q=q, phi_q=phi_q, rows=tuple(rows),
                             vacuous=q >= 2 * x)


@dataclass(frozen=True)
class ChainLevel:
    level: int
    residues: tuple[int, ...]
    rhs: float
    min_lhs: float
    min_mid: float
    margin: float
    consistency_error: float


@dataclass(frozen=True)
class ChainReport:
    x: float
    q: int
    phi_q: int
    levels: tuple[ChainLevel, ...]
    final_lhs: float  # sum over n <= 2kx with q | n of G_k(n)
    final_rhs: float
    max_g: float
    max_g_bound: float

    @property
    def max_g_ratio(self) -> float:
        return self.max_g / self.max_g_bound


def _class_sums(values: np.ndarray, up_to: int, q: int) -> list[float]:
    """sum of values[n] over n <= up_to with n = b (mod q), for each b."""
    out = []
    for b in range(q):
        start = b if b != 0 else q
        if start > up_to:
            out.append(0.0)
        else:
            out.append(exact_sum(values[start : up_to + 1 : q]))
    return out


def unit_sumsets(q: int, k: int) -> list[tuple[int, ...]]:
    """Residues reachable as sums of 1, 2, ..., k units mod q.

    Level L of the chain concerns integers that are sums of L terms each
    coprime to q, so only these classes can carry the stacked progression
    mass.  (For even q no sum of two units is coprime to q: the level-2
    admissible classes are all even.)  Entry [L-1] is the level-L set.
    """
    units = [a for a in range(q) if q == 1 or math.gcd(a, q) == 1]
    sets: list[tuple[int, ...]] = [tuple(units)]
    current = set(units)
    for _ in range(k - 1):
        current = {(b + a) % q for b in current for a in units}
        sets.append(tuple(sorted(current)))
    return sets


def chain_check(table: MangoldtTable, gtables: dict[int, GoldbachTable],
                x: float, q: int) -> ChainReport:
    """Evaluate every level of the chain inequality and its aggregation.

    gtables maps level L (2..k) to a G_L table with limit >= 2Lx.  At each
    level, for every admissible residue b (a sum of L units mod q; other
    classes cannot carry L-fold progression mass):

      lhs_L(b) = sum_{n <= 2Lx, n = b (q)} G_L(n)
      mid_L(b) = sum_{(a,q)=1} psi(2x; q, a) * lhs_{L-1}(b - a)

    with lhs_1 the psi progressions themselves.  mid is also recomputed
    from first principles (iterating over prime powers m <= 2x instead of
    residue classes); the two groupings are algebraically identical and
    their relative gap is reported as consistency_error.
    """
    if q < 1:
        raise ValueError(f"need q >= 1, got {q}")
    levels = sorted(gtables)
    if not levels or levels[0] != 2 or levels != list(range(2, levels[-1] + 1)):
        raise ValueError(f"need contiguous levels 2..k, got {levels}")
    k = levels[-1]
    for level in levels:
        need = int(2 * level * x)
        if gtables[level].limit < need:
            raise ValueError(
                f"G_{level} table limit {gtables[level].limit} < 2*{level}*x = {need}"
            )
        if gtables[level].k != level:
            raise ValueError(f"table at level {level} was built with k = {gtables[level].k}")
    if 2 * x > table.limit:
        raise ValueError(f"need 2x <= sieve limit, got 2x = {2 * x}")

    phi_q = phi_of_int(q)
    coprime = [a for a in range(q) if q == 1 or math.gcd(a, q) == 1]
    psi_by_class = {a: psi_progression(table, 2 * x, q, a) for a in coprime}

    # level 1: psi progressions per class
    prev_class_sums = [psi_progression(table, 2 * x, q, b) for b in range(q)]

    report_levels = []
    for level in range(2, k + 1):
        up_to = int(math.floor(2 * level * x))
        cls = _class_sums(gtables[level].values, up_to, q)
        mid = {}
        for b in coprime:
            mid[b] = math.fsum(
                psi_by_class[a] * prev_class_sums[(b - a) % q] for a in coprime
            )
        # independent grouping: iterate prime powers directly
        mid_direct = {b: [] for b in coprime}
        m_top = int(math.floor(2 * x))
        for m in range(1, m_top + 1):
            lam = table.values[m]
            if lam == 0.0:
                continue
            if q > 1 and math.gcd(m, q) != 1:
                continue
            for b in coprime:
                mid_direct[b].append(lam * prev_class_sums[(b - m) % q])
        consistency = 0.0
        for b in coprime:
            direct = math.fsum(mid_direct[b])
            denom = max(abs(mid[b]), abs(direct), 1e-300)
            consistency = max(consistency, abs(mid[b] - direct) / denom)

        rhs = x**level / (2.0**level * phi_q)
        min_lhs = min(cls[b] for b in coprime)
        min_mid = min(mid[b] for b in coprime)
        report_levels.append(ChainLevel(
            level=level,
            rhs=rhs,
            min_lhs=min_lhs,
            min_mid=min_mid,
            margin=min_lhs - rhs,
            consistency_error=consistency,
        ))
        prev_class_sums = cls

    final_up = int(math.floor(2 * k * x))
    final_lhs = _class_sums(gtables[k].values, final_up, q)[0]
    final_rhs = x**k / (2.0**k * phi_q)
    max_g = float(np.max(gtables[k].values[: final_up + 1]))
    q_over_phi = q / phi_q
    max_g_bound = x ** (k - 1) / 2.0 ** (k + 1) * q_over_phi
    return ChainReport(
        x=x, q=q, phi_q=phi_q, levels=tuple(report_levels),
        final_lhs=final_lhs, final_rhs=final_rhs,
        max_g=max_g, max_g_bound=max_g_bound,
    )


@dataclass(frozen=True)
class MaxGkScan:
    max_g: float
    argmax: int
    primorial_bound: float
    loglog_reference: float
    q: int
    phi_q: int
    fallback_applied: bool


def max_gk_scan(gtable: GoldbachTable, x: float,
                q: Primorial | None = None) -> MaxGkScan:
    """max G_k(n) over n <= 2kx, its primorial lower bound, and x^(k-1) loglog x.

    A requested modulus with q >= 2x (where the construction is vacuous)
    is replaced by the default-cutoff primorial and flagged.
    """
    k = gtable.k
    scan_top = int(math.floor(2 * k * x))
    if gtable.limit < scan_top:
        raise ValueError(f"table limit {gtable.limit} < 2kx = {scan_top}")
    fallback = False
    if q is None:
        q = primorial(default_cutoff(x))
    elif q.value >= 2 * x:
        q = primorial(default_cutoff(x))
        fallback = True
    values = gtable.values[: scan_top + 1]
    argmax = int(np.argmax(values))
    bound = x ** (k - 1) / 2.0 ** (k + 1) * (q.value / q.phi)
    reference = x ** (k - 1) * math.log(math.log(x))
    return MaxGkScan(
        max_g=float(values[argmax]),
        argmax=argmax,
        primorial_bound=bound,
        loglog_reference=reference,
        q=q.value,
        phi_q=q.phi,
        fallback_applied=fallback,
    )


def mertens_ratio(y: float) -> tuple[float, float]:
    """(prod_{p < y} (1 - 1/p)^-1, e^gamma log y).

    The product equals q/phi(q) for the primorial with cutoff y; its ratio
    to the reference tends to 1.  The product itself is nondecreasing in
    y; the ratio is not monotone (the reference grows between primes).
    """
    if y < 3:
        raise ValueError(f"need y >= 3, got {y}")
    q = primorial(y)
    product = 1.0
    for p in q.primes:
        product *= p / (p - 1.0)
    return product, math.exp(EULER_GAMMA) * math.log(y)
