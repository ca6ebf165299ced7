"""6-transposition systems: validation, minimality, and quotient
classification.

A system is a group together with a normal generating set D of involutions
in which every product of two D-elements has order at most 6.  The
identity is admitted as a degenerate involution.  The central test is the
minimality criterion: every subgroup generated by three D-elements either
is the whole group or can be generated by two D-elements (equivalently is
dihedral).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .catalogue import group_by_name, identify
from .fpgroup import Presentation, Word, parse_presentation, parse_word, triangle_presentation
from .permgroup import (
    PermGroup,
    Perm,
    pconj,
    pid,
    pinv,
    pmul,
    porder,
    word_permutation,
)
from .toddcox import coset_enumeration


class InvalidSystem(ValueError):
    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class TranspositionSystem:
    group: PermGroup
    d_set: frozenset

    def d_sorted(self) -> list[Perm]:
        return sorted(self.d_set)

    def nonidentity_d(self) -> list[Perm]:
        idp = self.group.identity()
        return [d for d in self.d_sorted() if d != idp]


def system_violations(group: PermGroup, d_set: Iterable[Perm]) -> list[str]:
    """All ways (group, D) fails to be a 6-transposition system."""
    d = sorted(set(map(tuple, d_set)))
    problems = []
    for x in d:
        if porder(x) > 2:
            problems.append(f"element {x} has order {porder(x)} > 2")
        if x not in group:
            problems.append(f"element {x} is not in the group")
    for x in d:
        for g in group.generators:
            if pconj(x, g) not in set(d):
                problems.append(f"D is not closed under conjugation at {x}")
                break
    if group.subgroup_generated(d).order() != group.order():
        problems.append("D does not generate the group")
    dset = set(d)
    for i, x in enumerate(d):
        for y in d[i:]:
            o = porder(pmul(x, y))
            if o > 6:
                problems.append(f"product of two D-elements has order {o}")
                return problems
    return problems


def verify_system(group: PermGroup, d_set: Iterable[Perm]) -> TranspositionSystem:
    problems = system_violations(group, d_set)
    if problems:
        raise InvalidSystem(problems)
    return TranspositionSystem(group, frozenset(map(tuple, d_set)))


def two_generated_by_d(subgroup_elements: frozenset, d_set: frozenset, degree: int) -> bool:
    """True iff some pair of D-elements inside generates the subgroup.

    Two distinct non-identity involutions generate a dihedral group of
    order twice the order of their product, so only an order comparison is
    needed per pair.
    """
    n = len(subgroup_elements)
    idp = pid(degree)
    local_d = sorted(x for x in subgroup_elements if x in d_set)
    if n == 1:
        return True
    if n == 2:
        return any(x != idp for x in local_d)
    for i, x in enumerate(local_d):
        if x == idp:
            continue
        for y in local_d[i + 1:]:
            if y == idp:
                continue
            if 2 * porder(pmul(x, y)) == n:
                return True
    return False


@dataclass
class MinimalityResult:
    minimal: bool
    witness_triple: tuple[Perm, Perm, Perm] | None = None
    witness_subgroup: PermGroup | None = None


def _closure_capped(degree: int, gens: Sequence[Perm], cap: int):
    """Closure of `gens`; None as soon as it exceeds `cap` elements."""
    idp = pid(degree)
    els = {idp}
    gens = [g for g in gens if g != idp]
    frontier = list(dict.fromkeys(gens))
    els.update(frontier)
    if len(els) > cap:
        return None
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = pmul(x, g)
                if y not in els:
                    els.add(y)
                    if len(els) > cap:
                        return None
                    new.append(y)
        frontier = new
    return els


def is_minimal_3generated(system: TranspositionSystem) -> MinimalityResult:
    """The minimality criterion, by pruned search over D-triples.

    The property is invariant under simultaneous conjugation, so the first
    element runs over class representatives and the second over orbits of
    the first's centralizer on D.
    """
    group = system.group
    degree = group.degree
    n = group.order()
    dset = system.d_set
    d_elements = system.nonidentity_d()
    if not _exists_generating_triple(group, d_elements):
        raise ValueError("group is not 3-generated by D")
    if n <= 2:
        return MinimalityResult(True)

    cap = n // 2  # a subgroup with more than n/2 elements is the group
    reps = sorted({min(group.class_of(x)) for x in d_elements})
    cent_cache: dict[Perm, list[Perm]] = {}
    for a in reps:
        cent = group.centralizer(a).elements()
        seen: set[Perm] = set()
        b_reps = []
        for b in d_elements:
            if b in seen:
                continue
            orbit = {pconj(b, g) for g in cent}
            seen |= orbit
            b_reps.append(min(orbit))
        for b in b_reps:
            pair = _closure_capped(degree, [a, b], cap)
            for c in d_elements:
                if pair is not None and c in pair:
                    continue  # <a,b,c> = <a,b>, dihedral by construction
                h = _closure_capped(degree, [a, b, c], cap)
                if h is None:
                    continue  # the triple generates the whole group
                if len(h) == n:
                    continue
                if not two_generated_by_d(frozenset(h), dset, degree):
                    sub = group.subgroup(sorted(h), elements=h)
                    return MinimalityResult(False, (a, b, c), sub)
    return MinimalityResult(True)


def _exists_generating_triple(group: PermGroup, d_elements: Sequence[Perm]) -> bool:
    n = group.order()
    if n == 1:
        return True
    degree = group.degree
    for i, a in enumerate(d_elements):
        for b in d_elements[i:]:
            pair = _closure_capped(degree, [a, b], n)
            if pair is not None and len(pair) == n:
                return True
            for c in d_elements:
                h = _closure_capped(degree, [a, b, c], n // 2)
                if h is None or len(h) == n:
                    return True
    return False


def generating_triples_with_orders(
    group: PermGroup, d_elements: Sequence[Perm], klm: tuple[int, int, int]
):
    """Triples (a,b,c) of D-elements generating the group with product
    orders exactly |ab|=k, |bc|=l, |ac|=m; first match only.

    The first element is pruned to class representatives (the condition is
    conjugation-invariant).
    """
    k, l, m = klm
    degree = group.degree
    n = group.order()
    reps = sorted({min(group.class_of(x)) for x in d_elements})
    for a in reps:
        for b in d_elements:
            if porder(pmul(a, b)) != k:
                continue
            for c in d_elements:
                if porder(pmul(b, c)) != l or porder(pmul(a, c)) != m:
                    continue
                h = _closure_capped(degree, [a, b, c], n // 2)
                if h is None:
                    return (a, b, c)
                if len(h) == n:
                    return (a, b, c)
    return None


# -- quotient classification ---------------------------------------------------


@dataclass
class QuotientReport:
    name: str
    order: int
    minimal: bool
    witness: dict | None


@dataclass
class ClassificationReport:
    presentation: str
    extra_relators: list[str]
    order: int
    group_name: str
    quotients: list[QuotientReport] = field(default_factory=list)

    def minimal_names(self) -> set[str]:
        return {q.name for q in self.quotients if q.minimal}

    def to_json(self) -> dict:
        return {
            "presentation": self.presentation,
            "extra_relators": self.extra_relators,
            "order": self.order,
            "group": self.group_name,
            "quotients": [
                {
                    "name": q.name,
                    "order": q.order,
                    "minimal": q.minimal,
                    "witness": q.witness,
                }
                for q in self.quotients
            ],
        }


def _small_faithful_representation(
    presentation: Presentation, order: int, max_cosets: int
) -> tuple[PermGroup, list[Perm]]:
    from .catalogue import small_faithful_representation

    return small_faithful_representation(presentation, order, max_cosets)


def classify_minimal_quotients(
    presentation: Presentation,
    klm: tuple[int, int, int],
    *,
    extra_relator_strs: Sequence[str] = (),
    d_spec: str = "generator_classes",
    max_cosets: int = 2_000_000,
    strategy: str = "hlt",
) -> ClassificationReport:
    """Classify the minimal 3-generated quotients lying in S(k,l,m).

    Enumerates the presented group, walks all quotients by normal
    subgroups, equips each with D (the classes of the generator images, or
    all involution classes under ``d_spec='all_involutions'``), and keeps
    the quotients that are minimal 3-generated members of S(k,l,m).
    """
    table = coset_enumeration(presentation, max_cosets=max_cosets, strategy=strategy)
    order = table.n_cosets
    group, gen_images = _small_faithful_representation(presentation, order, max_cosets)

    report = ClassificationReport(
        presentation=str(presentation),
        extra_relators=list(extra_relator_strs),
        order=order,
        group_name=identify(group) if order <= 2000 else f"unknown(order={order})",
    )

    seen_names: set[str] = set()
    for n_sub in group.normal_subgroups():
        quotient = group.quotient(n_sub)
        images = _quotient_generator_images(group, n_sub, gen_images)
        result = _check_quotient(quotient, images, klm, d_spec)
        if result is None:
            continue
        minimal, witness = result
        name = identify(quotient)
        if name in seen_names:
            continue
        seen_names.add(name)
        report.quotients.append(
            QuotientReport(name=name, order=quotient.order(), minimal=minimal, witness=witness)
        )
    report.quotients.sort(key=lambda q: (q.order, q.name))
    return report


def _quotient_generator_images(group, n_sub, gen_images):
    """Images of specific group elements in group/n_sub, recomputed with the
    same coset labelling as PermGroup.quotient."""
    nset = n_sub.element_set()
    coset_id: dict[Perm, int] = {}
    reps: list[Perm] = []
    for x in group.elements():
        if x not in coset_id:
            k = len(reps)
            reps.append(x)
            for h in nset:
                coset_id[pmul(h, x)] = k
    out = []
    for g in gen_images:
        out.append(tuple(coset_id[pmul(r, g)] for r in reps))
    return out


def _check_quotient(quotient, images, klm, d_spec):
    """None if the quotient cannot lie in S(k,l,m) with the induced D;
    otherwise (minimal flag, witness json)."""
    idq = quotient.identity()
    if any(porder(x) > 2 for x in images):
        return None
    if d_spec == "all_involutions":
        classes = quotient.involution_classes()
        d = {x for cls in classes for x in cls}
    else:
        d = set()
        for x in images:
            if x != idq:
                d |= set(quotient.class_of(x))
    if not d:
        return None
    d_elements = sorted(d)
    if quotient.subgroup_generated(d_elements).order() != quotient.order():
        return None
    # 6-transposition bound
    for i, x in enumerate(d_elements):
        for y in d_elements[i:]:
            if porder(pmul(x, y)) > 6:
                return None
    if generating_triples_with_orders(quotient, d_elements, klm) is None:
        return None
    system = TranspositionSystem(quotient, frozenset(d_elements))
    result = is_minimal_3generated(system)
    witness = None
    if not result.minimal:
        witness = {
            "triple": [list(x) for x in result.witness_triple],
            "subgroup_order": result.witness_subgroup.order(),
            "subgroup": identify(result.witness_subgroup),
        }
    return result.minimal, witness


# -- K_p membership and the odd core -------------------------------------------


def kp_membership(system: TranspositionSystem, p: int) -> bool:
    """Whether every product of distinct non-identity D-elements has order
    dividing p, on top of the minimality criterion."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    d = system.nonidentity_d()
    for i, x in enumerate(d):
        for y in d[i + 1:]:
            if p % porder(pmul(x, y)) != 0:
                return False
    return is_minimal_3generated(system).minimal


@dataclass
class OddCoreReport:
    order: int
    structure: str
    complement_ok: bool
    generated_by_products: bool

    def to_json(self):
        return {
            "odd_core_order": self.order,
            "structure": self.structure,
            "splits_off_involution": self.complement_ok,
            "generated_by_generator_products": self.generated_by_products,
        }


def odd_core_structure(system: TranspositionSystem) -> OddCoreReport:
    """The largest odd-order normal subgroup and its isomorphism type."""
    group = system.group
    odd = [n for n in group.normal_subgroups() if n.order() % 2 == 1]
    core = max(odd, key=lambda n: n.order())
    o = core.order()

    structure = f"order {o}"
    if o == 1:
        structure = "trivial"
    else:
        primes = sorted({p for p in _prime_factors(o)})
        if len(primes) == 1:
            p = primes[0]
            if o == p:
                structure = f"cyclic {p}"
            elif o == p * p and core.is_abelian() and core.exponent_divides(p):
                structure = f"elementary abelian {p}^2"
            elif o == p**3 and not core.is_abelian() and core.exponent_divides(p):
                structure = f"extraspecial {p}^(1+2)"

    # complement check: G = O(G) : <a> for an involution a
    n = group.order()
    complement_ok = n == 2 * o and any(
        x not in core.element_set() for x in system.nonidentity_d()
    )
    gens = group.generators
    generated = False
    if len(gens) >= 2:
        a = gens[0]
        prods = [pmul(a, g) for g in gens[1:]]
        generated = group.subgroup_generated(prods).order() == o
    return OddCoreReport(o, structure, complement_ok, generated)


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- the classification audit ---------------------------------------------------


@dataclass
class AuditEntry:
    label: str
    group_name: str
    d_description: str
    expected_minimal: bool
    valid_system: bool = False
    minimal: bool = False
    witness: dict | None = None

    @property
    def passed(self) -> bool:
        return self.valid_system and self.minimal == self.expected_minimal

    def to_json(self):
        return {
            "entry": self.label,
            "group": self.group_name,
            "d_set": self.d_description,
            "expected_minimal": self.expected_minimal,
            "valid_6transposition_system": self.valid_system,
            "minimal_3generated": self.minimal,
            "witness": self.witness,
            "passed": self.passed,
        }


def _system_from_presentation(name: str, d_words: Sequence[str] | None):
    """Build (group, D) from a catalogue presentation; D is the union of
    the classes of the given words, or of all involution classes."""
    from .catalogue import _PRESENTATIONS

    pres = parse_presentation(_PRESENTATIONS[name])
    table = coset_enumeration(pres)
    group, gen_perms = _small_faithful_representation(pres, table.n_cosets, 2_000_000)
    d = set()
    if d_words is None:
        for cls in group.involution_classes():
            d |= set(cls)
    else:
        for wtext in d_words:
            word = parse_word(wtext, pres.generator_names)
            x = word_permutation(word, gen_perms, group.degree)
            d |= set(group.class_of(x))
    return group, d


def theorem_audit() -> list[AuditEntry]:
    """Re-verify the classification list entry by entry, plus the two
    non-minimal direct products with their 2^3 witnesses."""
    entries: list[AuditEntry] = []

    def check(label, group, d, expected=True, d_desc="all involutions"):
        name = label.split()[-1] if " " in label else label
        entry = AuditEntry(label, name, d_desc, expected)
        problems = system_violations(group, d)
        entry.valid_system = not problems
        if entry.valid_system:
            result = is_minimal_3generated(TranspositionSystem(group, frozenset(d)))
            entry.minimal = result.minimal
            if result.witness_subgroup is not None:
                entry.witness = {
                    "subgroup_order": result.witness_subgroup.order(),
                    "subgroup": identify(result.witness_subgroup),
                    "triple": [list(t) for t in result.witness_triple],
                }
        entries.append(entry)

    def all_involutions(group):
        return {x for cls in group.involution_classes() for x in cls}

    def check_searched(label, group):
        """Entries whose D is unspecified: search all unions of involution
        classes and record which choices give a minimal system."""
        classes = group.involution_classes()
        passing = []
        for mask in range(1, 2 ** len(classes)):
            d = {x for i, cls in enumerate(classes) if mask & (1 << i) for x in cls}
            if system_violations(group, d):
                continue
            if is_minimal_3generated(TranspositionSystem(group, frozenset(d))).minimal:
                passing.append(sorted(len(cls) for i, cls in enumerate(classes) if mask & (1 << i)))
        name = label.split()[-1]
        entry = AuditEntry(
            label, name,
            f"searched class unions; passing class-size choices: {passing}", True,
        )
        entry.valid_system = bool(passing)
        entry.minimal = bool(passing)
        entries.append(entry)

    # (i) dihedral groups; D is not unique for even n, so search
    for n in (1, 2, 3, 4, 5, 6, 10):
        g = group_by_name(f"D{2*n}") if 2 * n > 4 else group_by_name({1: "2", 2: "2^2"}[n])
        check_searched(f"(i) D{2*n}", g)

    # (ii) 2^3, S4, A5 with all involutions; GL(2,3) searched
    for name in ("2^3", "S4", "A5"):
        g = group_by_name(name)
        check(f"(ii) {name}", g, all_involutions(g))
    check_searched("(ii) GL(2,3)", group_by_name("GL(2,3)"))

    # (iii) p^2:2
    for p in (3, 5):
        name = f"{p}^2:2"
        group, d = _system_from_presentation(name, None)
        check(f"(iii) {name}", group, d)

    # (iv) (2m x 2):2 with the stated D choices
    for m, options in ((2, [["y", "z", "x*z"], ["y", "z", "x*z", "x^2"]]),
                       (3, [["y", "z"], ["y", "z", "x^3"]])):
        name = {2: "(4x2):2", 3: "(6x2):2"}[m]
        for words in options:
            group, d = _system_from_presentation(name, words)
            check(f"(iv) {name} D=classes of {{{','.join(words)}}}", group, d,
                  d_desc=f"classes of {words}")

    # (v) p^(1+2):2
    for p in (3, 5):
        name = f"{p}^(1+2):2"
        group, d = _system_from_presentation(name, None)
        check(f"(v) {name}", group, d)

    # (vi) (5^2:3):2
    group, d = _system_from_presentation("(5^2:3):2", None)
    check("(vi) (5^2:3):2", group, d)

    # the non-minimal direct products, expected to fail with a 2^3 witness
    for name in ("2xD8", "2xD12"):
        g = group_by_name(name)
        check(f"non-minimal {name}", g, all_involutions(g), expected=False)

    return entries
