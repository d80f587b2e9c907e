"""Intersection numbers of psi-classes on complex brick manifolds.

The complex brick manifold of arity n is a smooth projective variety of
complex dimension n - 2.  It carries n + 1 line bundles, one attached to
the root and one to each input, whose first Chern classes we write
psi_0, psi_1, ..., psi_n.  The correlator

    <tau_{d_0} tau_{d_1} ... tau_{d_n}>

is the integral of psi_0^{d_0} ... psi_n^{d_n} over the manifold.  This
module evaluates correlators through two independent engines:

- ``correlator_closed`` reads the coefficient off the generating
  polynomial (t_0 + t_2)(t_0 + t_3) ... (t_0 + t_{n-1}), so every value
  is 0 or 1;
- ``correlator_trr`` recurses on topological recursion relations: one
  psi-power is traded for the sum of one-edge boundary divisors that
  represents the class, and the integral splits over each divisor into
  an upper and a lower factor of strictly smaller arity.

The recursion steps are exposed individually (``strip_interior_left``,
``strip_interior_right``, ``strip_root``) so the three families of
relations can be cross-validated against each other: the two interior
variants agree wherever both apply, and the root relation gives the
same answer for every admissible pivot.

All engines are pure; the recursive one memoizes on the exponent
vector, and since every insert is idempotent the cache is safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "CorrelatorIndex",
    "all_indices",
    "correlator_closed",
    "correlator_trr",
    "generating_polynomial",
    "nonzero_indices",
    "strip_interior_left",
    "strip_interior_right",
    "strip_root",
]


@dataclass(frozen=True)
class CorrelatorIndex:
    """Exponent vector (d_0; d_1, ..., d_n) of a psi-class monomial.

    ``d0`` is the exponent of the root class psi_0 and ``ds[i - 1]`` the
    exponent of the input class psi_i, so the arity n is ``len(ds)`` and
    must be at least 2.  The integral vanishes unless the total degree
    d_0 + ... + d_n equals n - 2, the dimension of the brick manifold.
    """

    d0: int
    ds: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "d0", int(self.d0))
        object.__setattr__(self, "ds", tuple(int(d) for d in self.ds))
        if self.d0 < 0 or any(d < 0 for d in self.ds):
            raise ValueError("psi-class exponents must be nonnegative")
        if len(self.ds) < 2:
            raise ValueError("correlators need arity at least 2")

    @property
    def n(self) -> int:
        """Arity: the number of inputs."""
        return len(self.ds)

    @property
    def total(self) -> int:
        """Total degree d_0 + d_1 + ... + d_n."""
        return self.d0 + sum(self.ds)

    def exponents(self) -> tuple[int, ...]:
        """The full tuple (d_0, d_1, ..., d_n)."""
        return (self.d0,) + self.ds

    def __str__(self) -> str:
        taus = " ".join(f"tau_{d}" for d in self.exponents())
        return f"<{taus}>"


Pair = tuple[CorrelatorIndex, CorrelatorIndex]


def strip_interior_left(idx: CorrelatorIndex, i: int) -> list[Pair]:
    """Trade one power of psi_i for the boundary divisors left of i.

    At an interior input 2 <= i <= n - 1 the class psi_i is the sum of
    the divisors indexed by intervals [l, i] with 1 <= l <= i - 1: the
    one-edge trees whose lower vertex carries inputs l, ..., i, so that
    input i sits away from both the root and input i + 1.  Each divisor
    splits the integral into an upper factor (inputs outside [l, i] plus
    the collapsed point, which carries no psi-power) and a lower factor
    (inputs l..i, with the stripped exponent at the last slot).  Returns
    the list of (upper, lower) factor pairs; the correlator of ``idx``
    equals the sum of the products of each pair.
    """
    ds, n = idx.ds, idx.n
    if not 2 <= i <= n - 1:
        raise ValueError("interior relations need 2 <= i <= n - 1")
    if ds[i - 1] < 1:
        raise ValueError(f"no psi-power to strip at input {i}")
    pairs: list[Pair] = []
    for left in range(1, i):
        upper = CorrelatorIndex(idx.d0, ds[: left - 1] + (0,) + ds[i:])
        lower = CorrelatorIndex(0, ds[left - 1 : i - 1] + (ds[i - 1] - 1,))
        pairs.append((upper, lower))
    return pairs


def strip_interior_right(idx: CorrelatorIndex, i: int) -> list[Pair]:
    """Trade one power of psi_i for the boundary divisors right of i.

    Mirror image of :func:`strip_interior_left`: psi_i is also the sum
    of the divisors indexed by intervals [i, r] with i + 1 <= r <= n,
    the one-edge trees whose lower vertex carries inputs i, ..., r, so
    that input i sits away from both the root and input i - 1.  The
    stripped exponent lands at the first slot of the lower factor.
    """
    ds, n = idx.ds, idx.n
    if not 2 <= i <= n - 1:
        raise ValueError("interior relations need 2 <= i <= n - 1")
    if ds[i - 1] < 1:
        raise ValueError(f"no psi-power to strip at input {i}")
    pairs: list[Pair] = []
    for right in range(i + 1, n + 1):
        upper = CorrelatorIndex(idx.d0, ds[: i - 1] + (0,) + ds[right:])
        lower = CorrelatorIndex(0, (ds[i - 1] - 1,) + ds[i:right])
        pairs.append((upper, lower))
    return pairs


def strip_root(idx: CorrelatorIndex, i: int) -> list[Pair]:
    """Trade one power of psi_0 for the divisors separating i from i + 1.

    For any pivot 1 <= i <= n - 1 the root class psi_0 is the sum of the
    divisors indexed by intervals [l, m] with l <= i < m, excluding the
    full interval [1, n]: the one-edge trees whose lower vertex carries
    inputs l, ..., m, so that inputs i and i + 1 both sit away from the
    root.  The collapsed point of the upper factor and the root of the
    lower factor carry no psi-power.  The resulting value is independent
    of the pivot i.
    """
    ds, n = idx.ds, idx.n
    if idx.d0 < 1:
        raise ValueError("no psi-power to strip at the root")
    if not 1 <= i <= n - 1:
        raise ValueError("root relations need 1 <= i <= n - 1")
    pairs: list[Pair] = []
    for left in range(1, i + 1):
        for right in range(i + 1, n + 1):
            if right - left >= n - 1:
                continue
            upper = CorrelatorIndex(
                idx.d0 - 1, ds[: left - 1] + (0,) + ds[right:]
            )
            lower = CorrelatorIndex(0, ds[left - 1 : right])
            pairs.append((upper, lower))
    return pairs


@lru_cache(maxsize=None)
def _evaluate(d0: int, ds: tuple[int, ...]) -> int:
    n = len(ds)
    if d0 + sum(ds) != n - 2:
        return 0
    if ds[0] > 0 or ds[-1] > 0:
        # psi_1 and psi_n vanish: no interval [l, 1] with l <= 0 and no
        # interval [n, r] with r > n exists, so their divisor sums are
        # empty.
        return 0
    if n == 2:
        return 1
    idx = CorrelatorIndex(d0, ds)
    interior = next((i for i in range(2, n) if ds[i - 1] >= 1), None)
    if interior is not None:
        pairs = strip_interior_left(idx, interior)
    else:
        pairs = strip_root(idx, 1)
    return sum(
        _evaluate(upper.d0, upper.ds) * _evaluate(lower.d0, lower.ds)
        for upper, lower in pairs
    )


def correlator_trr(idx: CorrelatorIndex) -> int:
    """Evaluate a correlator by recursion on boundary divisors.

    Off-dimension indices and indices with a psi-power at the first or
    last input evaluate to zero outright; <tau_0 tau_0 tau_0> = 1 is the
    base case.  Otherwise one psi-power is stripped, at the smallest
    interior input carrying one if any exists and at the root otherwise,
    and the factors are evaluated recursively.  Both factors of every
    divisor have strictly smaller arity, so the recursion terminates.
    """
    return _evaluate(idx.d0, idx.ds)


def correlator_closed(idx: CorrelatorIndex) -> int:
    """Evaluate a correlator from the generating polynomial.

    The value is the coefficient of t_0^{d_0} t_1^{d_1} ... t_n^{d_n} in
    (t_0 + t_2)(t_0 + t_3) ... (t_0 + t_{n-1}): it equals 1 when
    d_1 = d_n = 0, every interior exponent is at most 1, and the total
    degree is n - 2, and it equals 0 otherwise.
    """
    if idx.total != idx.n - 2:
        return 0
    if idx.ds[0] != 0 or idx.ds[-1] != 0:
        return 0
    if any(d > 1 for d in idx.ds[1:-1]):
        return 0
    return 1


def generating_polynomial(n: int) -> dict[tuple[int, ...], int]:
    """Expand the correlator generating polynomial of arity n.

    Returns the expansion of (t_0 + t_2)(t_0 + t_3) ... (t_0 + t_{n-1})
    as a mapping from full exponent tuples (d_0, d_1, ..., d_n) to
    coefficients.  Every coefficient equals 1, there are 2^{n-2}
    monomials, and the arity-2 product is empty, hence equal to 1.
    """
    if n < 2:
        raise ValueError("generating polynomial needs arity >= 2")
    poly: dict[tuple[int, ...], int] = {(0,) * (n + 1): 1}
    for i in range(2, n):
        expanded: dict[tuple[int, ...], int] = {}
        for expo, coeff in poly.items():
            for slot in (0, i):
                bumped = expo[:slot] + (expo[slot] + 1,) + expo[slot + 1 :]
                expanded[bumped] = expanded.get(bumped, 0) + coeff
        poly = expanded
    return poly


def nonzero_indices(n: int) -> list[CorrelatorIndex]:
    """Indices of nonzero correlators of arity n, in lexicographic order."""
    return [
        CorrelatorIndex(expo[0], expo[1:])
        for expo in sorted(generating_polynomial(n))
    ]


def _weak_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def all_indices(n: int, total: int | None = None) -> Iterator[CorrelatorIndex]:
    """All exponent vectors of the given total degree in arity n.

    The default total degree n - 2 enumerates exactly the indices that
    can integrate to a nonzero value.
    """
    if total is None:
        total = n - 2
    for expo in _weak_compositions(total, n + 1):
        yield CorrelatorIndex(expo[0], expo[1:])
