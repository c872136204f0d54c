"""Number fields described by their defining data.

A field is given by a monic integer polynomial plus optional exact
invariants (class number, regulator, unit count, field discriminant,
signature) copied from standard tables.  Everything downstream needs
only the splitting type of each rational prime and, for main terms,
the density constant assembled from the invariants.

No ideal arithmetic happens here: splitting types are read off from
per-prime overrides, from the Kronecker symbol of the field
discriminant (quadratic fields), or from factoring the defining
polynomial mod p.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass

from .errors import FieldSpecError, IndexDivisorError
from .polygf import DEFAULT_FACTOR_SEED, factor_mod_p, poly_from_int_coeffs


@dataclass(frozen=True)
class SplittingType:
    """Multiset of (ramification index e, residue degree f) above a prime.

    Parts are kept sorted by (f, e) so equality is structural.
    """

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise FieldSpecError("splitting type needs at least one part")
        for e, f in self.parts:
            if e < 1 or f < 1:
                raise FieldSpecError(f"splitting part ({e},{f}) must be positive")
        canon = tuple(sorted(self.parts, key=lambda part: (part[1], part[0])))
        if canon != self.parts:
            object.__setattr__(self, "parts", canon)

    @property
    def degree_sum(self) -> int:
        """Sum of e_i * f_i; must equal the owning field's degree."""
        return sum(e * f for e, f in self.parts)


@dataclass(frozen=True)
class FieldInvariants:
    """Optional exact invariants; all fields independent, all optional.

    r1/r2 are the real/complex place counts, h the class number, R the
    regulator, w the number of roots of unity, d_K the field
    discriminant.  c, when given, short-circuits the density-constant
    formula (useful when copied straight from a table).
    """

    r1: int | None = None
    r2: int | None = None
    h: int | None = None
    R: float | None = None
    w: int | None = None
    d_K: int | None = None
    c: float | None = None

    def has_classical_set(self) -> bool:
        return None not in (self.r1, self.r2, self.h, self.R, self.w, self.d_K)


@dataclass(frozen=True)
class FieldSpec:
    """A number field given by a monic irreducible integer polynomial.

    `poly` lists coefficients constant term first with leading
    coefficient 1.  `poly_is_maximal` asserts the polynomial order is
    the full ring of integers; when the polynomial discriminant is
    squarefree that assertion is automatic, and otherwise factoring mod
    a prime p with p^2 | poly_disc is refused unless an override is
    supplied.  Instances are immutable and hashable, and every
    operation on them is a pure function, so they are safe to share
    across threads.
    """

    name: str
    poly: tuple[int, ...]
    poly_disc: int
    poly_is_maximal: bool = False
    invariants: FieldInvariants | None = None
    splitting_overrides: tuple[tuple[int, SplittingType], ...] = ()

    def __post_init__(self) -> None:
        if len(self.poly) < 2:
            raise FieldSpecError("defining polynomial must have degree >= 1")
        if self.poly[-1] != 1:
            raise FieldSpecError(
                f"defining polynomial must be monic, leading coefficient {self.poly[-1]}"
            )
        if self.poly_disc == 0:
            raise FieldSpecError("polynomial discriminant must be nonzero")
        inv = self.invariants
        if inv is not None:
            if (inv.r1 is None) != (inv.r2 is None):
                raise FieldSpecError("r1 and r2 must be supplied together")
            if inv.r1 is not None and inv.r1 + 2 * inv.r2 != self.degree:
                raise FieldSpecError(
                    f"signature mismatch: r1 + 2*r2 = {inv.r1 + 2 * inv.r2} != degree {self.degree}"
                )
            if inv.w is not None and inv.w < 2:
                raise FieldSpecError("roots-of-unity count w must be >= 2")
            if inv.h is not None and inv.h < 1:
                raise FieldSpecError("class number h must be >= 1")
            if inv.R is not None and inv.R <= 0:
                raise FieldSpecError("regulator R must be positive")
            if inv.d_K == 0:
                raise FieldSpecError("field discriminant d_K must be nonzero")
            if inv.c is not None and inv.c <= 0:
                raise FieldSpecError("density constant c must be positive")
        seen = set()
        for p, split in self.splitting_overrides:
            if p in seen:
                raise FieldSpecError(f"duplicate override for p={p}")
            seen.add(p)
            if self.poly_disc % (p * p) != 0:
                raise FieldSpecError(
                    f"override at p={p} not allowed: p^2 does not divide poly_disc={self.poly_disc}"
                )
            if split.degree_sum != self.degree:
                raise FieldSpecError(
                    f"override at p={p}: sum of e*f is {split.degree_sum}, expected {self.degree}"
                )

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    def override_for(self, p: int) -> SplittingType | None:
        for q, split in self.splitting_overrides:
            if q == p:
                return split
        return None

    def fingerprint_data(self) -> dict:
        """Everything that determines splitting types and hence tables."""
        return {
            "poly": list(self.poly),
            "poly_disc": self.poly_disc,
            "poly_is_maximal": self.poly_is_maximal,
            "d_K": self.invariants.d_K if self.invariants else None,
            "overrides": [
                [p, [list(part) for part in split.parts]]
                for p, split in self.splitting_overrides
            ],
        }


def kronecker_symbol(D: int, p: int) -> int:
    """Kronecker symbol (D|p) for prime p and fundamental discriminant D."""
    if p < 2 or not _is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    d = D % p
    if d == 0:
        return 0
    ls = pow(d, (p - 1) // 2, p)
    return 1 if ls == 1 else -1


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin; the witness set covers all n < 3.3e24
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


_RATIONAL_SPLIT = SplittingType(((1, 1),))
_QUADRATIC_SPLIT = SplittingType(((1, 1), (1, 1)))
_QUADRATIC_INERT = SplittingType(((1, 2),))
_QUADRATIC_RAMIFIED = SplittingType(((2, 1),))


def splitting_type(field: FieldSpec, p: int, seed: int = DEFAULT_FACTOR_SEED) -> SplittingType:
    """Decomposition type of the prime p in the field.

    Resolution order: explicit override, Kronecker symbol of d_K for
    quadratic fields with invariants, then factorization of the
    defining polynomial mod p.  The last route is refused when
    p^2 | poly_disc without a maximality assertion, because the
    factorization may misreport splitting at index divisors.
    """
    override = field.override_for(p)
    if override is not None:
        return override
    n = field.degree
    if n == 1:
        return _RATIONAL_SPLIT
    inv = field.invariants
    if n == 2 and inv is not None and inv.d_K is not None:
        # inline Kronecker symbol of d_K; p is prime by precondition
        D = inv.d_K
        if p == 2:
            symbol = 0 if D % 2 == 0 else (1 if D % 8 in (1, 7) else -1)
        else:
            d = D % p
            symbol = 0 if d == 0 else (1 if pow(d, (p - 1) // 2, p) == 1 else -1)
        if symbol == 1:
            return _QUADRATIC_SPLIT
        if symbol == -1:
            return _QUADRATIC_INERT
        return _QUADRATIC_RAMIFIED
    if field.poly_disc % (p * p) == 0 and not field.poly_is_maximal:
        raise IndexDivisorError(
            f"{field.name}: cannot trust factorization mod p={p} "
            f"(p^2 | poly_disc={field.poly_disc}, order not asserted maximal, no override)"
        )
    factors = factor_mod_p(poly_from_int_coeffs(p, field.poly), seed=seed)
    return SplittingType(tuple((mult, g.degree) for g, mult in factors))


def ideal_density_constant(field: FieldSpec) -> float:
    """Constant c with ideal count I_K(x) ~ c*x.

    Assembled as 2^r1 (2*pi)^r2 h R / (w sqrt(|d_K|)); an explicitly
    supplied c takes precedence, with a consistency warning when both
    are present and disagree by more than 1e-9 relative.
    """
    inv = field.invariants
    if inv is None or (inv.c is None and not inv.has_classical_set()):
        raise FieldSpecError(
            f"{field.name}: density constant needs invariants (r1, r2, h, R, w, d_K) or explicit c"
        )
    formula = None
    if inv.has_classical_set():
        formula = (
            (2.0**inv.r1)
            * (2.0 * math.pi) ** inv.r2
            * inv.h
            * inv.R
            / (inv.w * math.sqrt(abs(inv.d_K)))
        )
    if inv.c is not None:
        if formula is not None and abs(inv.c - formula) > 1e-9 * abs(formula):
            warnings.warn(
                f"{field.name}: supplied c={inv.c!r} disagrees with invariant "
                f"formula {formula!r}; using the supplied value",
                stacklevel=2,
            )
        return inv.c
    return formula


def parse_field_spec(text: str) -> FieldSpec:
    """Parse a JSON field-spec document and validate every invariant.

    Recognized keys: name (string), poly (integer array, constant term
    first), poly_disc (integer), poly_is_maximal (bool, default false),
    invariants (object with any of r1, r2, h, R, w, d_K, c), overrides
    (array of {"p": prime, "parts": [[e, f], ...]}).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FieldSpecError(f"malformed field-spec document: {exc}") from exc
    if not isinstance(doc, dict):
        raise FieldSpecError("field-spec document must be a JSON object")
    try:
        name = doc["name"]
        poly = doc["poly"]
        poly_disc = doc["poly_disc"]
    except KeyError as exc:
        raise FieldSpecError(f"missing required key {exc.args[0]!r}") from exc
    if not isinstance(name, str):
        raise FieldSpecError("name must be a string")
    if not isinstance(poly, list) or not all(isinstance(c, int) for c in poly):
        raise FieldSpecError("poly must be an array of integers")
    if not isinstance(poly_disc, int):
        raise FieldSpecError("poly_disc must be an integer")
    maximal = doc.get("poly_is_maximal", False)
    if not isinstance(maximal, bool):
        raise FieldSpecError("poly_is_maximal must be a boolean")

    invariants = None
    if "invariants" in doc:
        raw = doc["invariants"]
        if not isinstance(raw, dict):
            raise FieldSpecError("invariants must be an object")
        unknown = set(raw) - {"r1", "r2", "h", "R", "w", "d_K", "c"}
        if unknown:
            raise FieldSpecError(f"unknown invariant keys: {sorted(unknown)}")
        for key in ("r1", "r2", "h", "w", "d_K"):
            if key in raw and not isinstance(raw[key], int):
                raise FieldSpecError(f"invariant {key} must be an integer")
        for key in ("R", "c"):
            if key in raw and not isinstance(raw[key], (int, float)):
                raise FieldSpecError(f"invariant {key} must be a number")
        invariants = FieldInvariants(
            r1=raw.get("r1"),
            r2=raw.get("r2"),
            h=raw.get("h"),
            R=float(raw["R"]) if "R" in raw else None,
            w=raw.get("w"),
            d_K=raw.get("d_K"),
            c=float(raw["c"]) if "c" in raw else None,
        )

    overrides: list[tuple[int, SplittingType]] = []
    for entry in doc.get("overrides", []):
        if not isinstance(entry, dict) or "p" not in entry or "parts" not in entry:
            raise FieldSpecError("each override needs keys 'p' and 'parts'")
        p = entry["p"]
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldSpecError(f"override key p={p!r} is not a prime")
        parts = entry["parts"]
        if not isinstance(parts, list) or not all(
            isinstance(part, list) and len(part) == 2 for part in parts
        ):
            raise FieldSpecError(f"override at p={p}: parts must be an array of [e, f] pairs")
        overrides.append((p, SplittingType(tuple((e, f) for e, f in parts))))

    return FieldSpec(
        name=name,
        poly=tuple(poly),
        poly_disc=poly_disc,
        poly_is_maximal=maximal,
        invariants=invariants,
        splitting_overrides=tuple(overrides),
    )


def load_field_file(path: str) -> FieldSpec:
    """Read and parse a field-spec document from disk."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_field_spec(handle.read())
