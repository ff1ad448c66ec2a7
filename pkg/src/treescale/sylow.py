"""Sylow subgroups, cores, the Fitting subgroup, Sylow bases and the Hall
covering check for finite permutation groups.

Everything here is deterministic: searches scan elements in the canonical
(image-lexicographic) order, and the basis backtracking visits primes in
increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PreconditionError
from .perm import (ENUMERATION_BOUND, PermGroup, Permutation,
                   commutator_subgroup, generated, intersect, is_subgroup,
                   normal_closure, spanning_generators)
from .supernat import Supernatural, is_prime, prime_factors, valuation


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")


def p_part_of_order(g: PermGroup, p: int) -> int:
    return p ** valuation(g.order(), p)


def sylow_subgroup(g: PermGroup, p: int, bound: int = ENUMERATION_BOUND) -> PermGroup:
    """A Sylow p-subgroup of g, grown one p-step at a time.

    At each step the normaliser of the current p-subgroup is scanned in
    canonical element order for an element of p-power order outside the
    subgroup whose p-th power falls inside; adjoining it multiplies the
    order by exactly p.
    """
    _require_prime(p)
    target = p_part_of_order(g, p)
    current = PermGroup.trivial(g.degree)
    while current.order() < target:
        norm = g.normaliser(current, bound)
        grown = None
        cur_set = current.element_set(bound)
        for x in norm.elements(bound):
            if x in cur_set:
                continue
            o = x.order()
            q = 1
            while q < o:
                q *= p
            if q != o:
                continue
            if x ** p in cur_set:
                grown = x
                break
        if grown is None:
            raise RuntimeError("Sylow growth step found no witness; this is a bug")
        current = PermGroup(g.degree, list(current.generators) + [grown])
    return current


def sylow_of_symmetric(k: int, p: int) -> PermGroup:
    """The standard Sylow p-subgroup of Sym(k) from the base-p block layout.

    {1..k} splits into consecutive blocks, largest power of p first; each
    block of size p^j carries an iterated wreath product generated by the
    sub-block cycles.  The result's order is the p-part of k!.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    _require_prime(p)
    rest = k
    j = 0
    width = 1
    while width * p <= k:
        width *= p
        j += 1
    gens: list[Permutation] = []
    start = 1
    while j >= 0:
        count, rest = divmod(rest, width)
        for _ in range(count):
            gens.extend(_wreath_generators(k, start, p, j))
            start += width
        width //= p
        j -= 1
    return PermGroup(k, gens)


def _wreath_generators(degree: int, start: int, p: int, j: int) -> list[Permutation]:
    """Generators of the iterated wreath product on [start, start + p^j)."""
    gens = []
    size = 1
    for _ in range(j):
        # cycle the p sub-blocks of width `size` inside the first p*size points
        cycles = [[start + r + t * size for t in range(p)] for r in range(size)]
        gens.append(Permutation.from_cycles(degree, cycles))
        size *= p
    return gens


def p_core(g: PermGroup, p: int, bound: int = ENUMERATION_BOUND) -> PermGroup:
    """O_p(g): intersect conjugates of one Sylow p-subgroup until stable."""
    _require_prime(p)
    core = sylow_subgroup(g, p, bound)
    while True:
        stable = True
        for x in g.generators:
            conj = core.conjugate(x)
            meet = intersect(core, conj, bound)
            if meet.order() < core.order():
                core = meet
                stable = False
        if stable:
            return core


def pi_core(g: PermGroup, pi, bound: int = ENUMERATION_BOUND) -> PermGroup:
    """O_pi(g): the largest normal subgroup whose order is a pi-number.

    An element belongs to it exactly when its normal closure is a pi-group,
    so the core is generated by all such elements.
    """
    pi = frozenset(pi)
    for p in pi:
        _require_prime(p)
    members: list[Permutation] = []
    core = PermGroup.trivial(g.degree)
    for x in g.elements(bound):
        if x.is_identity() or x in core:
            continue
        closure = normal_closure(g, [x])
        if set(prime_factors(closure.order())) <= pi:
            members.append(x)
            core = PermGroup(g.degree, spanning_generators(g.degree, members))
    return core


def fitting(g: PermGroup, bound: int = ENUMERATION_BOUND) -> PermGroup:
    """The Fitting subgroup, generated by the p-cores over p dividing |g|."""
    cores = [p_core(g, p, bound) for p in prime_factors(g.order())]
    if not cores:
        return PermGroup.trivial(g.degree)
    return generated(cores)


def is_p_normal(g: PermGroup, p: int, bound: int = ENUMERATION_BOUND) -> bool:
    """True iff O_p(g) is already a full Sylow p-subgroup."""
    return p_core(g, p, bound).order() == p_part_of_order(g, p)


@dataclass(frozen=True)
class SylowBasis:
    """One Sylow subgroup per prime dividing the parent's order, pairwise
    permutable."""

    parent: PermGroup
    members: dict[int, PermGroup] = field(compare=False)

    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def conjugate(self, g: Permutation) -> "SylowBasis":
        return SylowBasis(self.parent, {p: m.conjugate(g) for p, m in self.members.items()})

    def violations(self, bound: int = ENUMERATION_BOUND) -> list[str]:
        out = []
        for p, m in self.members.items():
            if m.order() != p_part_of_order(self.parent, p):
                out.append(f"member at {p} is not Sylow")
        primes = self.primes()
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                if not are_permutable(self.members[p], self.members[q], bound):
                    out.append(f"members at {p} and {q} do not permute")
        return out


def are_permutable(a: PermGroup, b: PermGroup, bound: int = ENUMERATION_BOUND) -> bool:
    """True iff AB = BA, tested via |<A,B>| = |A||B| / |A meet B|."""
    joined = generated([a, b])
    meet = intersect(a, b, bound)
    return joined.order() * meet.order() == a.order() * b.order()


def _sylow_conjugates(g: PermGroup, p: int, bound: int) -> list[PermGroup]:
    """All conjugates of the canonical Sylow p-subgroup, discovery order."""
    base = sylow_subgroup(g, p, bound)
    seen = {base.element_set(bound)}
    out = [base]
    for x in g.elements(bound):
        conj = base.conjugate(x)
        key = conj.element_set(bound)
        if key not in seen:
            seen.add(key)
            out.append(conj)
    return out


def sylow_basis(g: PermGroup, bound: int = ENUMERATION_BOUND) -> SylowBasis:
    """A Sylow basis of a soluble group, by backtracking over conjugates.

    Primes are visited in increasing order; candidates for each prime are
    conjugates of the canonical Sylow subgroup in canonical transversal
    order.  Hall's theorem guarantees the search succeeds.
    """
    if not g.is_soluble():
        raise PreconditionError("sylow_basis requires a soluble group")
    primes = sorted(prime_factors(g.order()))
    candidates = {p: _sylow_conjugates(g, p, bound) for p in primes}

    chosen: list[PermGroup] = []

    def extend(i: int) -> bool:
        if i == len(primes):
            return True
        for cand in candidates[primes[i]]:
            if all(are_permutable(cand, old, bound) for old in chosen):
                chosen.append(cand)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        raise RuntimeError("no Sylow basis found for a soluble group; this is a bug")
    return SylowBasis(g, dict(zip(primes, chosen)))


def basis_normaliser(g: PermGroup, basis: SylowBasis,
                     bound: int = ENUMERATION_BOUND) -> PermGroup:
    """Intersection of the normalisers of the basis members."""
    member_sets = {p: m.element_set(bound) for p, m in basis.members.items()}
    found = []
    for x in g.elements(bound):
        xinv = x.inverse()
        if all(all(x * h * xinv in member_sets[p] for h in basis.members[p].generators)
               for p in basis.members):
            found.append(x)
    return PermGroup(g.degree, spanning_generators(g.degree, found))


def is_normal_in(v: PermGroup, u: PermGroup) -> bool:
    return (is_subgroup(v, u)
            and all(v.conjugate(x).same_subgroup(v) for x in u.generators))


def quotient_is_nilpotent(u: PermGroup, k: PermGroup,
                          bound: int = ENUMERATION_BOUND) -> bool:
    """Whether U/K is nilpotent, via the lower central series modulo K."""
    term = u
    for _ in range(u._series_cap()):
        step = commutator_subgroup(u, term)
        nxt = generated([step, k])
        if nxt.order() == k.order():
            return True
        if nxt.order() == term.order():
            return False
        term = nxt
    return False


def verify_hall_covering(u: PermGroup, basis: SylowBasis, k: PermGroup,
                         bound: int = ENUMERATION_BOUND) -> bool:
    """Check that the basis normaliser together with K covers all of U.

    Preconditions (violations raise, they are not a False verdict):
    K normal in U, U soluble, U/K nilpotent, and the basis belongs to U.
    """
    if not u.is_soluble():
        raise PreconditionError("hall covering requires a soluble group")
    if not is_normal_in(k, u):
        raise PreconditionError("hall covering requires K normal in U")
    if not quotient_is_nilpotent(u, k, bound):
        raise PreconditionError("hall covering requires U/K nilpotent")
    for p, member in basis.members.items():
        if not is_subgroup(member, u) or member.order() != p_part_of_order(u, p):
            raise PreconditionError("hall covering requires a Sylow basis of U")
    if sorted(basis.members) != sorted(prime_factors(u.order())):
        raise PreconditionError("hall covering requires one basis member per prime")
    n = basis_normaliser(u, basis, bound)
    meet = intersect(n, k, bound)
    product_size = n.order() * k.order() // meet.order()
    return product_size == u.order()


def core_commensurability_check(u: PermGroup, v: PermGroup, prime_sets,
                                bound: int = ENUMERATION_BOUND) -> bool:
    """Check O_P(U) meet V = O_P(V) for V normal in U and P a set of
    pairwise disjoint prime sets."""
    sets = [frozenset(s) for s in prime_sets]
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if a & b:
                raise PreconditionError("prime sets must be pairwise disjoint")
    if not is_normal_in(v, u):
        raise PreconditionError("core commensurability requires V normal in U")
    o_u = generated([pi_core(u, s, bound) for s in sets])
    o_v = generated([pi_core(v, s, bound) for s in sets])
    return intersect(o_u, v, bound).same_subgroup(o_v)


def subgroup_index(g: PermGroup, h: PermGroup) -> Supernatural:
    """|G : H| as a supernatural number (finite here)."""
    if not is_subgroup(h, g):
        raise PreconditionError("index requires H <= G")
    return Supernatural.from_int(g.order() // h.order())


def corpus() -> list[tuple[str, PermGroup]]:
    """The built-in test corpus of small groups."""
    sym3xc3 = PermGroup(6, ["(1 2)", "(1 2 3)", "(4 5 6)"])
    q8 = PermGroup(8, ["(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"])
    v4 = PermGroup(4, ["(1 2)(3 4)", "(1 3)(2 4)"])
    return [
        ("sym3", PermGroup.symmetric(3)),
        ("sym4", PermGroup.symmetric(4)),
        ("alt4", PermGroup.alternating(4)),
        ("c6", PermGroup.cyclic(6)),
        ("d8", PermGroup.dihedral(4)),
        ("d12", PermGroup.dihedral(6)),
        ("sym3xc3", sym3xc3),
        ("q8", q8),
        ("v4", v4),
    ]
