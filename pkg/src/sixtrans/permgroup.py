"""Permutation groups on 0-based points, sized for exhaustive work.

Permutations are plain tuples: ``p[i]`` is the image of point ``i``, and
products compose left to right (``pmul(p, q)`` maps ``i`` to ``q[p[i]]``).
Groups cache their element list once computed; everything downstream
(classes, centralizers, normal subgroups, quotients) works from that list,
which keeps the exhaustive algorithms exact and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd

Perm = tuple[int, ...]

# Exhaustive element listing is refused above this order; stabilizer-chain
# order computation still works beyond it.
CACHE_BOUND = 200_000


class GroupTooLarge(ValueError):
    pass


def pid(degree: int) -> Perm:
    return tuple(range(degree))


def pmul(p: Perm, q: Perm) -> Perm:
    return tuple(map(q.__getitem__, p))


def pinv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def pconj(p: Perm, g: Perm) -> Perm:
    """g^-1 * p * g."""
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[g[i]] = g[pi]
    return tuple(out)


def ppow(p: Perm, n: int) -> Perm:
    if n < 0:
        return ppow(pinv(p), -n)
    result = pid(len(p))
    base = p
    while n:
        if n & 1:
            result = pmul(result, base)
        base = pmul(base, base)
        n >>= 1
    return result


def porder(p: Perm) -> int:
    n = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        n = n * length // gcd(n, length)
    return n


def cycle_string(p: Perm) -> str:
    """Cycle notation on 1-based points, GAP style."""
    parts = []
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        seen[i] = True
        parts.append("(" + ",".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) if parts else "()"


def word_permutation(word, gen_perms: list[Perm], degree: int) -> Perm:
    p = pid(degree)
    for letter in word:
        g = gen_perms[abs(letter) - 1]
        p = pmul(p, g if letter > 0 else pinv(g))
    return p


def _closure(degree: int, gens, cap: int | None = None) -> set[Perm] | None:
    """Product closure of `gens`; None if the closure exceeds `cap`."""
    idp = pid(degree)
    els = {idp}
    frontier = [idp]
    gens = [g for g in gens if g != idp]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = pmul(x, g)
                if y not in els:
                    els.add(y)
                    new.append(y)
                    if cap is not None and len(els) > cap:
                        return None
        frontier = new
    return els


class PermGroup:
    """A permutation group given by generators, with lazy exact caches."""

    def __init__(self, degree: int, generators, *, _elements=None):
        idp = pid(degree)
        gens = []
        seen = set()
        for g in generators:
            g = tuple(g)
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
            if g != idp and g not in seen:
                seen.add(g)
                gens.append(g)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._order: int | None = None
        self._elements: tuple[Perm, ...] | None = None
        self._element_set: frozenset | None = None
        self._classes: tuple[tuple[Perm, ...], ...] | None = None
        self._chain = None
        if _elements is not None:
            self._elements = tuple(sorted(_elements))
            self._element_set = frozenset(_elements)
            self._order = len(self._elements)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)}, order={self._order})"

    # -- order and membership ------------------------------------------------

    def order(self) -> int:
        if self._order is None:
            self._order = _chain_order(self._stabilizer_chain())
        return self._order

    def _stabilizer_chain(self):
        if self._chain is None:
            self._chain = _schreier_sims(self.degree, list(self.generators))
        return self._chain

    def __contains__(self, p: Perm) -> bool:
        if self._element_set is not None:
            return p in self._element_set
        return _chain_sift(self._stabilizer_chain(), p) is None

    def elements(self) -> tuple[Perm, ...]:
        if self._elements is None:
            if self.order() > CACHE_BOUND:
                raise GroupTooLarge(f"order {self.order()} exceeds cache bound {CACHE_BOUND}")
            els = _closure(self.degree, self.generators)
            self._elements = tuple(sorted(els))
            self._element_set = frozenset(els)
        return self._elements

    def element_set(self) -> frozenset:
        self.elements()
        return self._element_set

    def identity(self) -> Perm:
        return pid(self.degree)

    def is_trivial(self) -> bool:
        return not self.generators

    def is_abelian(self) -> bool:
        return all(
            pmul(a, b) == pmul(b, a)
            for a, b in combinations(self.generators, 2)
        )

    def exponent_divides(self, n: int) -> bool:
        return all(porder(g) in _divisors(n) for g in self.elements())

    # -- conjugacy classes ---------------------------------------------------

    def conjugacy_classes(self) -> tuple[tuple[Perm, ...], ...]:
        """All conjugacy classes, each sorted, ordered lexicographically."""
        if self._classes is None:
            els = self.elements()
            unassigned = set(els)
            classes = []
            for x in els:
                if x not in unassigned:
                    continue
                orbit = {x}
                frontier = [x]
                while frontier:
                    new = []
                    for y in frontier:
                        for g in self.generators:
                            z = pconj(y, g)
                            if z not in orbit:
                                orbit.add(z)
                                new.append(z)
                    frontier = new
                unassigned -= orbit
                classes.append(tuple(sorted(orbit)))
            self._classes = tuple(sorted(classes))
        return self._classes

    def class_of(self, x: Perm) -> tuple[Perm, ...]:
        orbit = {x}
        frontier = [x]
        while frontier:
            new = []
            for y in frontier:
                for g in self.generators:
                    z = pconj(y, g)
                    if z not in orbit:
                        orbit.add(z)
                        new.append(z)
            frontier = new
        return tuple(sorted(orbit))

    def involution_classes(self, include_identity: bool = False):
        """Classes of elements whose order divides 2."""
        out = []
        for cls in self.conjugacy_classes():
            o = porder(cls[0])
            if o == 2 or (o == 1 and include_identity):
                out.append(cls)
        return tuple(out)

    # -- subgroups -----------------------------------------------------------

    def subgroup(self, gens, elements=None) -> "PermGroup":
        if elements is None:
            elements = _closure(self.degree, gens)
        return PermGroup(self.degree, gens, _elements=elements)

    def subgroup_generated(self, elems) -> "PermGroup":
        return self.subgroup(list(elems))

    def centralizer(self, x: Perm) -> "PermGroup":
        els = [g for g in self.elements() if pmul(g, x) == pmul(x, g)]
        return PermGroup(self.degree, els, _elements=els)

    def center(self) -> "PermGroup":
        els = [
            g
            for g in self.elements()
            if all(pmul(g, h) == pmul(h, g) for h in self.generators)
        ]
        return PermGroup(self.degree, els, _elements=els)

    def small_generators(self) -> list[Perm]:
        """A small generating list (the stored one unless it is bloated)."""
        if len(self.generators) <= 6:
            return list(self.generators)
        n = self.order()
        chosen: list[Perm] = []
        current = {self.identity()}
        for x in sorted(self.generators, key=lambda x: (-porder(x), x)):
            if x in current:
                continue
            chosen.append(x)
            current = _subgroup_closure(self.degree, chosen)
            if len(current) == n:
                break
        return chosen

    def derived_subgroup(self) -> "PermGroup":
        gens = self.small_generators()
        base = [
            pmul(pmul(pinv(a), pinv(b)), pmul(a, b))
            for a, b in combinations(gens, 2)
        ]
        els = _normal_closure(self, base)
        return PermGroup(self.degree, sorted(els), _elements=els)

    def normal_subgroups(self) -> list["PermGroup"]:
        """All normal subgroups, via join-closure over unions of classes.

        Every normal subgroup is generated by the classes it contains, so
        repeatedly joining one more class onto each subgroup found reaches
        all of them.
        """
        classes = self.conjugacy_classes()
        idp = self.identity()
        found: dict[frozenset, list] = {frozenset([idp]): []}
        frontier = [frozenset([idp])]
        while frontier:
            new = []
            for key in frontier:
                gens = found[key]
                for cls in classes:
                    if cls[0] in key:
                        continue
                    joined = _normal_closure(self, gens + [cls[0]])
                    fkey = frozenset(joined)
                    if fkey not in found:
                        found[fkey] = gens + [cls[0]]
                        new.append(fkey)
            frontier = new
        subs = [
            PermGroup(self.degree, sorted(els), _elements=set(els))
            for els in found
        ]
        subs.sort(key=lambda h: (h.order(), h.elements()))
        return subs

    def quotient(self, n: "PermGroup") -> "PermGroup":
        """The quotient by a normal subgroup, acting on its cosets."""
        nset = n.element_set()
        if not nset <= set(self.elements()):
            raise ValueError("subgroup is not contained in the group")
        for g in self.generators:
            for h in n.generators:
                if pconj(h, g) not in nset:
                    raise ValueError("subgroup is not normal")
        coset_id: dict[Perm, int] = {}
        reps: list[Perm] = []
        for x in self.elements():
            if x not in coset_id:
                k = len(reps)
                reps.append(x)
                for h in nset:
                    coset_id[pmul(h, x)] = k
        images = []
        for g in self.generators:
            images.append(tuple(coset_id[pmul(r, g)] for r in reps))
        return PermGroup(len(reps), images)

    def all_subgroups_containing(self, t: Perm) -> list[frozenset]:
        """Element sets of every subgroup containing t (exhaustive BFS,
        adding one generator at a time)."""
        els = self.elements()
        base = frozenset(_subgroup_closure(self.degree, [t]))
        found: dict[frozenset, tuple] = {base: (t,)}
        frontier = [base]
        while frontier:
            new = []
            for h in frontier:
                gens = found[h]
                for x in els:
                    if x in h:
                        continue
                    bigger = frozenset(_subgroup_closure(self.degree, gens + (x,)))
                    if bigger not in found:
                        found[bigger] = gens + (x,)
                        new.append(bigger)
            frontier = new
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def subgroups_between(self, t: Perm) -> list["PermGroup"]:
        """All H with <t> <= H <= C(t), up to conjugacy within C(t).

        The identity is admitted as a degenerate involution, in which case
        this enumerates all subgroups of the group up to conjugacy.
        """
        if t not in self:
            raise ValueError("element not in group")
        if porder(t) > 2:
            raise ValueError("element is not an involution")
        cent = self.centralizer(t)
        subs = cent.all_subgroups_containing(t)
        cent_els = cent.elements()
        seen: set[frozenset] = set()
        reps = []
        for h in subs:
            if h in seen:
                continue
            orbit = {h}
            frontier = [h]
            while frontier:
                new = []
                for s in frontier:
                    for g in cent_els:
                        gi = pinv(g)
                        conj = frozenset(pmul(pmul(gi, x), g) for x in s)
                        if conj not in orbit:
                            orbit.add(conj)
                            new.append(conj)
                frontier = new
            seen |= orbit
            canonical = min(orbit, key=lambda s: sorted(s))
            reps.append(PermGroup(self.degree, sorted(canonical), _elements=canonical))
        reps.sort(key=lambda h: (h.order(), h.elements()))
        return reps

    # -- invariants and isomorphism -------------------------------------------

    def element_order_histogram(self) -> tuple[tuple[int, int], ...]:
        hist: dict[int, int] = {}
        for x in self.elements():
            o = porder(x)
            hist[o] = hist.get(o, 0) + 1
        return tuple(sorted(hist.items()))

    def derived_length(self) -> int:
        g = self
        length = 0
        while not g.is_trivial():
            d = g.derived_subgroup()
            if d.order() == g.order():
                return -1  # perfect, not solvable
            g = d
            length += 1
        return length

    def abelian_invariants(self) -> tuple[int, ...]:
        """Invariant factors of G/G' as a sorted tuple of prime powers."""
        ab = self.quotient(self.derived_subgroup())
        return _abelian_type(ab)

    def fingerprint(self) -> tuple:
        return (
            self.order(),
            self.element_order_histogram(),
            tuple(sorted(len(c) for c in self.conjugacy_classes())),
            self.abelian_invariants(),
            self.derived_length(),
            self.center().order(),
        )

    def minimal_generating_sequence(self) -> list[Perm]:
        """A short generating list, greedily built from class representatives
        (falling back to the full element list if the representatives do not
        generate)."""
        if self.order() == 1:
            return []
        n = self.order()
        reps = sorted(
            (cls[0] for cls in self.conjugacy_classes()),
            key=lambda x: (-porder(x), x),
        )
        pools = [reps, sorted(self.elements(), key=lambda x: (-porder(x), x))]
        for pool in pools:
            chosen: list[Perm] = []
            current = {self.identity()}
            for x in pool:
                if x in current:
                    continue
                chosen.append(x)
                current = _subgroup_closure(self.degree, chosen)
                if len(current) == n:
                    return chosen
        raise RuntimeError("failed to build generating sequence")

    def is_isomorphic(self, other: "PermGroup") -> bool:
        if self.order() != other.order():
            return False
        if self.fingerprint() != other.fingerprint():
            return False
        return _isomorphism_exists(self, other)


# -- helpers ------------------------------------------------------------------


def _subgroup_closure(degree: int, gens) -> set:
    """Elements of the subgroup generated by `gens` (BFS from identity)."""
    idp = pid(degree)
    gens = [g for g in dict.fromkeys(map(tuple, gens)) if g != idp]
    els = {idp}
    els.update(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = pmul(x, g)
                if y not in els:
                    els.add(y)
                    new.append(y)
        frontier = new
    return els


def _normal_closure(group: PermGroup, base) -> set:
    """Smallest normal subgroup of `group` containing `base`."""
    degree = group.degree
    conjugators = group.small_generators()
    gens = [g for g in dict.fromkeys(map(tuple, base)) if g != pid(degree)]
    els = _subgroup_closure(degree, gens)
    while True:
        extra = []
        for x in els:
            for g in conjugators:
                y = pconj(x, g)
                if y not in els:
                    extra.append(y)
        if not extra:
            return els
        gens.extend(dict.fromkeys(extra))
        els = _subgroup_closure(degree, gens)


def _divisors(n: int) -> set[int]:
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _abelian_type(ab: PermGroup) -> tuple[int, ...]:
    """Primary decomposition of an abelian group from its order histogram.

    For the p-part of type p^(l1) x p^(l2) x ... the count of elements of
    order dividing p^k is p^(sum min(li, k)), so the differences of the
    exponents give the conjugate partition of (l1, l2, ...).
    """
    n = ab.order()
    if n == 1:
        return ()
    hist = dict(ab.element_order_histogram())
    parts: list[int] = []
    for prime, mult in _factorize(n).items():
        exps = []
        for k in range(mult + 1):
            pk = prime**k
            count = sum(c for o, c in hist.items() if pk % o == 0)
            e = 0
            while prime**e < count:
                e += 1
            if prime**e != count:
                raise ValueError("group is not abelian")
            exps.append(e)
        conjugate = [exps[k] - exps[k - 1] for k in range(1, mult + 1)]
        i = 1
        while True:
            li = sum(1 for d in conjugate if d >= i)
            if li == 0:
                break
            parts.append(prime**li)
            i += 1
    return tuple(sorted(parts))


def _schreier_sims(degree: int, gens: list[Perm]):
    """Deterministic Schreier-Sims.

    Returns chain levels ``{'b': base point, 'S': level generators,
    'T': transversal}`` where S at level i generates the stabilizer of the
    base points above it.  Every Schreier generator is pushed down the
    chain whenever a level changes, which is slow in theory but entirely
    adequate at the orders this library handles.
    """
    idp = pid(degree)
    levels: list[dict] = []

    def rebuild(idx):
        lev = levels[idx]
        T = {lev["b"]: idp}
        frontier = [lev["b"]]
        while frontier:
            new = []
            for a in frontier:
                ta = T[a]
                for s in lev["S"]:
                    c = s[a]
                    if c not in T:
                        T[c] = pmul(ta, s)
                        new.append(c)
            frontier = new
        lev["T"] = T

    def strip(p, start):
        for idx in range(start, len(levels)):
            lev = levels[idx]
            t = lev["T"].get(p[lev["b"]])
            if t is None:
                return p, idx
            p = pmul(p, pinv(t))
        return p, len(levels)

    def add(p, level):
        """Insert p, which stabilizes all base points before `level`."""
        stack = [(p, level)]
        while stack:
            q, lvl = stack.pop()
            residue, depth = strip(q, lvl)
            if residue == idp:
                continue
            if depth == len(levels):
                b = min(i for i in range(degree) if residue[i] != i)
                levels.append({"b": b, "S": [], "T": {b: idp}})
            for j in range(lvl, depth + 1):
                lev = levels[j]
                lev["S"].append(residue)
                rebuild(j)
                for a in list(lev["T"]):
                    ta = lev["T"][a]
                    for s in lev["S"]:
                        sg = pmul(pmul(ta, s), pinv(lev["T"][s[a]]))
                        if sg != idp:
                            stack.append((sg, j + 1))

    for g in gens:
        add(g, 0)
    return levels


def _chain_order(levels) -> int:
    return reduce(lambda acc, lev: acc * len(lev["T"]), levels, 1)


def _chain_sift(levels, p: Perm):
    """None if p is in the group, else the non-identity residue."""
    idp = pid(len(p))
    for lev in levels:
        image = p[lev["b"]]
        t = lev["T"].get(image)
        if t is None:
            return p
        p = pmul(p, pinv(t))
    return None if p == idp else p


def _isomorphism_exists(g: PermGroup, h: PermGroup) -> bool:
    """Backtracking search for an isomorphism g -> h over generator images."""
    gens = g.minimal_generating_sequence()
    if not gens:
        return h.order() == 1

    def profile_map(group):
        out = {}
        for cls in group.conjugacy_classes():
            profile = (porder(cls[0]), len(cls))
            for x in cls:
                out[x] = profile
        return out

    g_profiles = profile_map(g)
    h_profiles = profile_map(h)
    candidates = []
    for x in gens:
        profile = g_profiles[x]
        cands = [y for y in h.elements() if h_profiles[y] == profile]
        if not cands:
            return False
        candidates.append(cands)

    # multiplication tables for the word check, built lazily per attempt
    def try_images(images) -> bool:
        # build the map by BFS over g's elements as words in gens
        n = g.order()
        phi = {g.identity(): h.identity()}
        frontier = [g.identity()]
        while frontier:
            new = []
            for x in frontier:
                fx = phi[x]
                for s, fs in zip(gens, images):
                    y = pmul(x, s)
                    fy = pmul(fx, fs)
                    old = phi.get(y)
                    if old is None:
                        phi[y] = fy
                        new.append(y)
                    elif old != fy:
                        return False
            frontier = new
        if len(phi) != n:
            return False
        # homomorphism check on (element, generator) pairs
        for x, fx in phi.items():
            for s, fs in zip(gens, images):
                if phi[pmul(x, s)] != pmul(fx, fs):
                    return False
        return len(set(phi.values())) == n

    def backtrack(i, images):
        if i == len(gens):
            return try_images(images)
        for y in candidates[i]:
            images.append(y)
            # quick pruning: partial subgroup order must divide |h|
            if try_partial(images):
                if backtrack(i + 1, images):
                    return True
            images.pop()
        return False

    def try_partial(images) -> bool:
        # orders of short products must match
        k = len(images)
        for idx in range(k - 1):
            if porder(pmul(gens[idx], gens[k - 1])) != porder(pmul(images[idx], images[k - 1])):
                return False
        return True

    return backtrack(0, [])
