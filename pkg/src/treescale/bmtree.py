"""Hyperbolic elements of universal tree groups as twisted periodic colour
words, and their scale arithmetic.

An element is encoded by its local action group F on the colours {1..k}, a
twist tau in F (the local action applied at each axis vertex) and the word
of edge colours (c_1, ..., c_n) read from a vertex v towards x^-1 v.  The
seam colour c_0 := tau(c_n) is the colour of the edge from v towards x v;
properness forces c_i != c_{i+1} and c_0 != c_1.

The scale of such an element is the product of the suborbit sizes
|F_{c_{i-1}} . c_i| for i = 1..n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidAxisError, PreconditionError
from .perm import PermGroup, Permutation
from .supernat import is_prime, prime_factors, valuation
from .sylow import sylow_of_symmetric, sylow_subgroup

VALUE_CAP = 10 ** 6
EXPONENT_CAP = 12
LENGTH_CAP = 8


@dataclass(frozen=True)
class AxisData:
    """Axis of a single-twist hyperbolic element: (F, tau, colour word)."""

    group: PermGroup
    twist: Permutation
    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))

    @property
    def seam_colour(self) -> int:
        return self.twist(self.word[-1])

    def describe(self) -> str:
        twist = "id" if self.twist.is_identity() else self.twist.cycle_string()
        return f"twist={twist}; word={','.join(map(str, self.word))}"


def validate_axis(a: AxisData) -> list[str]:
    """All violated axis invariants, empty when the axis is realisable."""
    violations = []
    k = a.group.degree
    if len(a.word) == 0:
        violations.append("word is empty")
        return violations
    for pos, c in enumerate(a.word, start=1):
        if not 1 <= c <= k:
            violations.append(f"colour {c} at position {pos} outside 1..{k}")
    for pos in range(len(a.word) - 1):
        if a.word[pos] == a.word[pos + 1]:
            violations.append(f"repeated colour at positions {pos + 1},{pos + 2}")
    if a.twist.degree != k:
        violations.append("twist degree does not match the colour count")
        return violations
    if a.twist not in a.group:
        violations.append("twist is not a member of the local action group")
    if not violations and a.twist(a.word[-1]) == a.word[0]:
        violations.append("seam colour equals the first word colour")
    return violations


def require_valid(a: AxisData) -> None:
    violations = validate_axis(a)
    if violations:
        raise InvalidAxisError(violations)


def scale(a: AxisData) -> int:
    """Product of suborbit sizes along the word, seam colour first."""
    require_valid(a)
    f = a.group
    prev = a.seam_colour
    value = 1
    for c in a.word:
        value *= f.suborbit_size(prev, c)
        prev = c
    return value


def inverse_axis(a: AxisData) -> AxisData:
    """Axis of the inverse element: twist tau^-1, word (tau c_n, ..., tau c_1)."""
    require_valid(a)
    word = tuple(a.twist(c) for c in reversed(a.word))
    return AxisData(a.group, a.twist.inverse(), word)


def modular(a: AxisData) -> Fraction:
    """scale(x) / scale(x^-1) as an exact rational."""
    return Fraction(scale(a), scale(inverse_axis(a)))


def designated_sylow(f: PermGroup, p: int) -> PermGroup:
    """F(p): the block constructor on full symmetric groups, the generic
    algorithm otherwise."""
    if f.order() == math.factorial(f.degree):
        return sylow_of_symmetric(f.degree, p)
    return sylow_subgroup(f, p)


def localized_scale(a: AxisData, p: int) -> int:
    """Scale of the same word over F(p); the axis must be valid over F(p),
    in particular the twist must lie in it."""
    fp = designated_sylow(a.group, p)
    return scale(AxisData(fp, a.twist, a.word))


def aggregate_scale(a: AxisData) -> int:
    """Product of the localized scales over all primes dividing |F|.

    Restricted to colour-preserving axes (identity twist): the identity lies
    in every F(p), so all localisations are simultaneously defined.
    """
    require_valid(a)
    if not a.twist.is_identity():
        raise PreconditionError(
            "aggregate scale requires a colour-preserving axis (identity twist)")
    total = 1
    for p in prime_factors(a.group.order()):
        total *= localized_scale(a, p)
    return total


@dataclass(frozen=True)
class ScaleSpectrum:
    """Achieved scale values (or p-exponents) up to a word-length bound."""

    mode: str  # "values" | "exponents"
    prime: int | None
    max_len: int
    cap: int
    truncated: bool
    entries: tuple[int, ...]

    def to_json_dict(self) -> dict:
        out = {"mode": self.mode}
        if self.prime is not None:
            out["prime"] = self.prime
        out["max_len"] = self.max_len
        out["cap"] = self.cap
        out["truncated"] = self.truncated
        out["entries"] = list(self.entries)
        return out


def scale_spectrum(f: PermGroup, max_len: int, mode: str = "values",
                   prime: int | None = None, cap: int | None = None,
                   start_colours=None) -> ScaleSpectrum:
    """All scale values (or their p-exponents) of valid axes with word length
    at most max_len, by dynamic programming over the colour digraph.

    States are (start colour, current colour, accumulated product or
    exponent); a state of word (c_1..c_j) is finalised over every seam
    colour c_0 in the F-orbit of c_j with c_0 != c_1 by multiplying in the
    first factor.  Values over the cap are dropped and flagged.

    ``start_colours`` restricts the words to the given first colours; the
    union of the spectra over a partition of the colours equals the full
    spectrum, so partitions may be evaluated independently and merged.
    """
    if max_len < 1:
        raise PreconditionError("max_len must be at least 1")
    if mode not in ("values", "exponents"):
        raise PreconditionError(f"unknown spectrum mode {mode!r}")
    if mode == "exponents":
        if prime is None:
            raise PreconditionError("exponent mode needs a prime")
        if cap is None:
            cap = EXPONENT_CAP
    else:
        prime = None
        if cap is None:
            cap = VALUE_CAP

    k = f.degree
    colours = range(1, k + 1)
    if mode == "values":
        unit = 1

        def weight(a, b):
            return f.suborbit_size(a, b)

        def combine(acc, w):
            return acc * w
    else:
        unit = 0

        def weight(a, b):
            return valuation(f.suborbit_size(a, b), prime)

        def combine(acc, w):
            return acc + w

    w_cache: dict[tuple[int, int], int] = {}

    def w(a, b):
        key = (a, b)
        if key not in w_cache:
            w_cache[key] = weight(a, b)
        return w_cache[key]

    starts = tuple(colours) if start_colours is None else tuple(sorted(start_colours))
    if any(not 1 <= c <= k for c in starts):
        raise PreconditionError("start colours must lie in the colour range")
    orbit_sets = {c: f.orbit(c) for c in colours}
    entries = {unit}
    truncated = False
    # state (start colour, current colour) -> set of accumulated weights of
    # the factors strictly after the seam factor
    frontier: dict[tuple[int, int], set[int]] = {(c, c): {unit} for c in starts}
    for length in range(1, max_len + 1):
        if length > 1:
            new: dict[tuple[int, int], set[int]] = {}
            for (start, cur), accs in frontier.items():
                for nxt in colours:
                    if nxt == cur:
                        continue
                    step = w(cur, nxt)
                    bucket = new.setdefault((start, nxt), set())
                    for acc in accs:
                        val = combine(acc, step)
                        if val > cap:
                            truncated = True
                        else:
                            bucket.add(val)
            frontier = {k_: v for k_, v in new.items() if v}
            if not frontier:
                break
        for (start, cur), accs in frontier.items():
            for seam in orbit_sets[cur]:
                if seam == start:
                    continue
                first = w(seam, start)
                for acc in accs:
                    val = combine(acc, first)
                    if val > cap:
                        truncated = True
                    else:
                        entries.add(val)
    return ScaleSpectrum(mode, prime, max_len, cap, truncated,
                         tuple(sorted(entries)))


_LOCAL_KINDS = ("zero-only", "even-naturals", "naturals-minus-one", "all-naturals")


@dataclass(frozen=True)
class SymmetricScalePrediction:
    """Case prediction for the local and ambient exponent sets over Sym(k)."""

    k: int
    p: int
    local_exponents: str  # one of _LOCAL_KINDS
    ambient_step: int     # ambient exponent set is {ambient_step * n : n >= 0}

    def local_text(self) -> str:
        return {
            "zero-only": "{0}",
            "even-naturals": "2N0",
            "naturals-minus-one": "N0 \\ {1}",
            "all-naturals": "N0",
        }[self.local_exponents]

    def ambient_text(self) -> str:
        if self.ambient_step == 0:
            return "{0}"
        if self.ambient_step == 1:
            return "N0"
        return f"{self.ambient_step}N0"

    def local_contains(self, e: int) -> bool:
        if self.local_exponents == "zero-only":
            return e == 0
        if self.local_exponents == "even-naturals":
            return e % 2 == 0
        if self.local_exponents == "naturals-minus-one":
            return e != 1
        return True


def symscale_case(k: int, p: int) -> SymmetricScalePrediction:
    """Classify the exponent sets for the Sylow-restricted and full symmetric
    local actions on k colours.

    Local exponent set: {0} when k <= p; the even naturals when k = 2p with
    p odd; the naturals without 1 when k = rp with 3 <= r < p; all naturals
    otherwise.  Ambient set: multiples of e where p^e is the p-part of k-1.
    """
    if k < 3:
        raise PreconditionError("k must be at least 3")
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if k <= p:
        kind = "zero-only"
    elif p > 2 and k == 2 * p:
        kind = "even-naturals"
    elif p > 3 and k % p == 0 and 3 <= k // p < p:
        kind = "naturals-minus-one"
    else:
        kind = "all-naturals"
    return SymmetricScalePrediction(k, p, kind, valuation(k - 1, p))


def build_alternating(f: PermGroup, i: int, j: int) -> AxisData:
    """Colour-preserving element along a line alternately coloured i and j;
    its scale is |F_i . j| * |F_j . i|."""
    if i == j:
        raise PreconditionError("alternating axis needs two distinct colours")
    a = AxisData(f, Permutation.identity(f.degree), (j, i))
    require_valid(a)
    return a


def build_tau_cycle(f: PermGroup, tau: Permutation, j: int) -> AxisData:
    """Translation of distance one along a line whose colours cycle through
    the tau-orbit of j; its scale is |F_{tau(j)} . j|."""
    if tau not in f:
        raise PreconditionError("twist must belong to the local action group")
    if tau(j) == j:
        raise PreconditionError("twist must move the chosen colour")
    a = AxisData(f, tau, (j,))
    require_valid(a)
    return a
