"""Multiplicative tables of ideal counts and ideal Mobius sums by norm.

For a field K the table holds, for every n <= N,

    a[n] = number of ideals of norm n
    b[n] = sum of the ideal Mobius function over ideals of norm n

Both are multiplicative, so they are assembled prime by prime from the
local factor determined by the splitting type: the a-values at p^k are
the series coefficients of prod_i (1 - X^{f_i})^{-1} and the b-values
those of prod_i (1 - X^{f_i}).  Spreading onto all n <= N touches each
slot once per prime dividing it, about N log log N work in vectorized
slices.

The central consumer regroups the ideal Mobius sum by norm: the count
of relatively r-prime m-tuples with all norms <= x equals

    sum over n <= x^(1/r) of  b[n] * I_K(x / n^r)^m

which turns an enumeration over ideals into a single O(x^(1/r)) array
pass.
"""

from __future__ import annotations

import hashlib
import json
import struct
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, FieldSpecError
from .fields import FieldSpec, SplittingType, splitting_type
from .polygf import DEFAULT_FACTOR_SEED

MAX_TABLE_N = 10**8  # beyond this the flat int32 layout stops fitting desk RAM

_INT64_SAFE = 2**62  # headroom below int64 overflow for vectorized sums


def local_series(split: SplittingType, p: int, N: int) -> tuple[list[int], list[int]]:
    """Coefficients of the local factor at p, truncated to p^k <= N.

    Returns (a_pows, b_pows) where index k corresponds to norm p^k:
    a_pows are coefficients of prod_i (1 - X^{f_i})^{-1} and b_pows of
    prod_i (1 - X^{f_i}).  Only residue degrees matter; ramification
    indices never change norms.
    """
    if N < p:
        raise ValueError(f"need N >= p, got N={N}, p={p}")
    kmax = 0
    q = p
    while q <= N:
        kmax += 1
        q *= p
    a = [0] * (kmax + 1)
    a[0] = 1
    b = [0] * (kmax + 1)
    b[0] = 1
    for _, f in split.parts:
        if f > kmax:
            continue
        for k in range(f, kmax + 1):  # multiply by 1/(1 - X^f)
            a[k] += a[k - f]
        for k in range(kmax, f - 1, -1):  # multiply by (1 - X^f)
            b[k] -= b[k - f]
    return a, b


def prime_flags(N: int) -> np.ndarray:
    flags = np.ones(N + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(N**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return flags


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """Immutable a/b tables for one field up to norm N.

    Arrays are flat int32 (a, b) with the cumulative ideal count in
    int64; they are marked read-only, so a built table can be shared
    across threads and queried concurrently.  Tables compare by
    identity (the arrays make value equality a trap).
    """

    field: FieldSpec
    N: int
    a: np.ndarray
    b: np.ndarray
    I_prefix: np.ndarray

    def __post_init__(self) -> None:
        for arr in (self.a, self.b, self.I_prefix):
            arr.setflags(write=False)


def build_tables(field: FieldSpec, N: int, seed: int = DEFAULT_FACTOR_SEED) -> CoefficientTable:
    """Sieve the a/b tables for all norms up to N.

    Enumerates rational primes p <= N, asks the field for the splitting
    type of each, and multiplies the local coefficients onto every slot
    with p-adic valuation exactly k.  Index-divisor refusals from the
    splitting computation propagate.
    """
    if N < 1:
        raise ValueError(f"table cap must be >= 1, got {N}")
    if N > MAX_TABLE_N:
        raise BudgetExceededError(f"table cap {N} exceeds the documented limit {MAX_TABLE_N}")
    a = np.ones(N + 1, dtype=np.int32)
    b = np.ones(N + 1, dtype=np.int32)
    a[0] = 0
    b[0] = 0
    flags = prime_flags(N)
    for p in np.flatnonzero(flags):
        p = int(p)
        split = splitting_type(field, p, seed=seed)
        a_loc, b_loc = local_series(split, p, N)
        kmax = len(a_loc) - 1
        if kmax == 1:
            # p^2 > N: every multiple of p has valuation exactly 1
            a[p::p] *= a_loc[1]
            b[p::p] *= b_loc[1]
            continue
        for k in range(1, kmax + 1):
            step = p**k
            idx = np.arange(step, N + 1, step, dtype=np.int64)
            if k < kmax:
                idx = idx[(idx // step) % p != 0]  # valuation exactly k
            a[idx] *= a_loc[k]
            b[idx] *= b_loc[k]
    # a counts ideals and dominates |b|; values at desk scale stay tiny
    # relative to int32, but fail loudly rather than ship a wrapped table.
    if int(a.min()) < 0 or bool(np.any(np.abs(b) > a)):
        raise OverflowError("coefficient table overflowed its 32-bit layout")
    I_prefix = np.cumsum(a, dtype=np.int64)
    return CoefficientTable(field=field, N=N, a=a, b=b, I_prefix=I_prefix)


def ideal_count(table: CoefficientTable, x: float) -> int:
    """Number of ideals with norm <= x (floor semantics on x)."""
    if x < 0:
        raise ValueError(f"x must be nonnegative, got {x}")
    if x > table.N:
        raise ValueError(f"x={x} exceeds the table cap N={table.N}")
    return int(table.I_prefix[int(x)])


def _integer_root(n: int, r: int) -> int:
    """Largest k with k**r <= n."""
    if n < 0 or r < 1:
        raise ValueError("integer root needs n >= 0, r >= 1")
    if r == 1 or n < 2:
        return n
    k = int(round(n ** (1.0 / r)))
    while k > 0 and k**r > n:
        k -= 1
    while (k + 1) ** r <= n:
        k += 1
    return k


def count_rprime_mobius(table: CoefficientTable, x: float, m: int, r: int) -> int:
    """Exact count of relatively r-prime m-tuples with all norms <= x.

    Evaluates the Mobius-sum identity aggregated by norm.  The sum is
    taken in int64 when a proven bound shows no overflow is possible
    and falls back to arbitrary-precision integers otherwise, so the
    result is exact either way.
    """
    if m < 1 or r < 1:
        raise ValueError(f"need m >= 1 and r >= 1, got m={m}, r={r}")
    if x < 1:
        raise ValueError(f"x must be >= 1, got x={x}")
    if x > table.N:
        raise ValueError(f"x={x} exceeds the table cap N={table.N}")
    X = int(x)
    L = _integer_root(X, r)
    ns = np.arange(1, L + 1, dtype=np.int64)
    args = X // ns**r
    ivals = table.I_prefix[args]
    bvals = table.b[1 : L + 1].astype(np.int64)
    bound = int(np.abs(bvals).sum()) * int(ivals.max()) ** m
    if bound < _INT64_SAFE:
        total = int(np.sum(bvals * ivals**m))
    else:
        total = sum(
            int(bv) * int(iv) ** m for bv, iv in zip(bvals.tolist(), ivals.tolist()) if bv
        )
    if total < 0:
        raise OverflowError("negative tuple count: table corrupt")
    return total


_CACHE_MAGIC = b"RPTABLE1"
_CACHE_VERSION = 1


def table_fingerprint(field: FieldSpec) -> bytes:
    """Digest of the field data that determines the table contents."""
    payload = json.dumps(field.fingerprint_data(), sort_keys=True).encode("utf-8")
    return hashlib.sha256(payload).digest()


def save_table(table: CoefficientTable, path: str) -> None:
    """Dump (fingerprint, N, a, b) as a little-endian binary cache."""
    with open(path, "wb") as handle:
        handle.write(_CACHE_MAGIC)
        handle.write(struct.pack("<I", _CACHE_VERSION))
        handle.write(table_fingerprint(table.field))
        handle.write(struct.pack("<Q", table.N))
        handle.write(table.a.astype("<i4").tobytes())
        handle.write(table.b.astype("<i4").tobytes())


def load_table(field: FieldSpec, path: str) -> CoefficientTable:
    """Load a cached table, validating magic, version and fingerprint."""
    with open(path, "rb") as handle:
        blob = handle.read()
    header = len(_CACHE_MAGIC) + 4 + 32 + 8
    if len(blob) < header or blob[: len(_CACHE_MAGIC)] != _CACHE_MAGIC:
        raise FieldSpecError(f"{path}: not a table cache file")
    (version,) = struct.unpack_from("<I", blob, len(_CACHE_MAGIC))
    if version != _CACHE_VERSION:
        raise FieldSpecError(f"{path}: unsupported cache version {version}")
    fp = blob[len(_CACHE_MAGIC) + 4 : len(_CACHE_MAGIC) + 4 + 32]
    if fp != table_fingerprint(field):
        raise FieldSpecError(f"{path}: cache fingerprint does not match field {field.name!r}")
    (N,) = struct.unpack_from("<Q", blob, len(_CACHE_MAGIC) + 4 + 32)
    expected = header + 2 * 4 * (N + 1)
    if len(blob) != expected:
        raise FieldSpecError(f"{path}: truncated cache (have {len(blob)} bytes, want {expected})")
    a = np.frombuffer(blob, dtype="<i4", count=N + 1, offset=header).astype(np.int32)
    b = np.frombuffer(blob, dtype="<i4", count=N + 1, offset=header + 4 * (N + 1)).astype(np.int32)
    I_prefix = np.cumsum(a, dtype=np.int64)
    return CoefficientTable(field=field, N=int(N), a=a, b=b, I_prefix=I_prefix)
