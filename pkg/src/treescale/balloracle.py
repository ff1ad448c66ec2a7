"""Brute-force orbit oracle on a finite ball of the coloured tree.

Counts the images of x^-m v under the pointwise stabiliser of [v, xv] by
walking transporter sets step by step along the extended colour word.  It
never uses the suborbit product formula, so it is an independent check of
the closed form.
"""

from __future__ import annotations

from collections import defaultdict

from .bmtree import AxisData, require_valid
from .errors import PreconditionError

DEPTH_CAP = 12
GROUP_CAP = 100


def extended_word(a: AxisData, power: int) -> list[int]:
    """Colour word of [v, x^-power v]: m copies of the word, each twisted
    one step further by tau^-1."""
    seg = list(a.word)
    tw_inv = a.twist.inverse()
    out: list[int] = []
    for _ in range(power):
        out.extend(seg)
        seg = [tw_inv(c) for c in seg]
    return out


def orbit_count(a: AxisData, power: int = 1, depth_cap: int = DEPTH_CAP) -> int:
    """|U . x^-power v| by transporter-set dynamic programming.

    The walk state is only (position, current image colour); the number of
    continuations from a state does not depend on how it was reached, which
    the exhaustive oracle verifies on small instances.
    """
    require_valid(a)
    if power < 1:
        raise PreconditionError("power must be at least 1")
    word = extended_word(a, power)
    if len(word) > depth_cap:
        raise PreconditionError(
            f"walk depth {len(word)} exceeds the cap {depth_cap}")
    f = a.group
    c0 = a.seam_colour
    counts: dict[int, int] = {b: 1 for b in f.transporter_images(c0, c0, word[0])}
    for i in range(1, len(word)):
        nxt: dict[int, int] = defaultdict(int)
        for b, n in counts.items():
            for b2 in f.transporter_images(word[i - 1], b, word[i]):
                nxt[b2] += n
        counts = dict(nxt)
    return sum(counts.values())


def reachable_sequences(a: AxisData, power: int = 1,
                        depth_cap: int = DEPTH_CAP) -> set[tuple[int, ...]]:
    """The full set of image colour sequences behind orbit_count (small use)."""
    require_valid(a)
    word = extended_word(a, power)
    if len(word) > depth_cap:
        raise PreconditionError(
            f"walk depth {len(word)} exceeds the cap {depth_cap}")
    f = a.group
    c0 = a.seam_colour
    seqs = {(b,) for b in f.transporter_images(c0, c0, word[0])}
    for i in range(1, len(word)):
        seqs = {seq + (b2,)
                for seq in seqs
                for b2 in f.transporter_images(word[i - 1], seq[-1], word[i])}
    return seqs


def _check_exhaustive_domain(a: AxisData) -> None:
    if a.group.order() > GROUP_CAP:
        raise PreconditionError(
            f"group order {a.group.order()} exceeds the oracle cap {GROUP_CAP}")
    if len(a.word) > 3:
        raise PreconditionError("exhaustive oracle handles words of length <= 3")


def explicit_sequences(a: AxisData) -> set[tuple[int, ...]]:
    """Image sequences from explicit tuples of local actions (f_0..f_{n-1})
    with f_0 fixing the seam colour and each f_i matching the previous image."""
    require_valid(a)
    _check_exhaustive_domain(a)
    f = a.group
    elems = f.elements()
    word = list(a.word)
    c0 = a.seam_colour
    n = len(word)
    seqs: set[tuple[int, ...]] = set()

    def rec(i: int, src: int, img: int, prefix: tuple[int, ...]) -> None:
        if i == n:
            seqs.add(prefix)
            return
        for g in elems:
            if g(src) != img:
                continue
            b = g(word[i])
            rec(i + 1, word[i], b, prefix + (b,))

    rec(0, c0, c0, ())
    return seqs


def exhaustive_orbit_count(a: AxisData) -> int:
    """Fully explicit second oracle; must agree with orbit_count."""
    return len(explicit_sequences(a))
