"""Reference constructions of the named groups and fingerprint lookup.

Groups that have standard faithful actions (cyclic, dihedral, symmetric,
alternating, elementary abelian, GL(2,3) on the nonzero vectors of F_3^2)
are built directly; the remaining names are built by coset enumeration
over their defining presentations.  ``identify`` matches a group against
the catalogue by fingerprint and confirms with an isomorphism search.
"""

from __future__ import annotations

from functools import lru_cache

from .fpgroup import parse_presentation
from .permgroup import PermGroup, pid, pmul
from .toddcox import coset_enumeration


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, [])
    return PermGroup(n, [tuple((i + 1) % n for i in range(n))])


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order (2, 4 and 2n-gon symmetries)."""
    if order % 2:
        raise ValueError("dihedral groups here have even order")
    n = order // 2
    if n == 1:
        return cyclic(2)
    if n == 2:
        return PermGroup(4, [(1, 0, 2, 3), (0, 1, 3, 2)])
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((n - i) % n for i in range(n))
    return PermGroup(n, [rot, ref])


def symmetric(n: int) -> PermGroup:
    if n <= 1:
        return PermGroup(max(n, 1), [])
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(n, gens)


def alternating(n: int) -> PermGroup:
    if n <= 2:
        return PermGroup(max(n, 1), [])
    threecycle = tuple([1, 2, 0] + list(range(3, n)))
    if n == 3:
        return PermGroup(3, [threecycle])
    if n % 2:
        big = tuple(list(range(1, n)) + [0])
    else:
        big = tuple([0] + list(range(2, n)) + [1])
    return PermGroup(n, [threecycle, big])


def elementary_abelian_2(k: int) -> PermGroup:
    gens = []
    for i in range(k):
        img = list(range(2 * k))
        img[2 * i], img[2 * i + 1] = img[2 * i + 1], img[2 * i]
        gens.append(tuple(img))
    return PermGroup(2 * k, gens)


def direct_product(g: PermGroup, h: PermGroup) -> PermGroup:
    dg, dh = g.degree, h.degree
    gens = [tuple(p) + tuple(dg + i for i in range(dh)) for p in g.generators]
    gens += [tuple(range(dg)) + tuple(dg + q[i] for i in range(dh)) for q in h.generators]
    return PermGroup(dg + dh, gens)


def gl23() -> PermGroup:
    """GL(2,3) acting on the eight nonzero vectors of F_3^2."""
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def action(matrix):
        a, b, c, d = matrix
        return tuple(
            index[((a * x + c * y) % 3, (b * x + d * y) % 3)] for x, y in vectors
        )

    # two transvections generate SL(2,3); diag(1,2) adds determinant 2
    return PermGroup(
        8, [action((1, 1, 0, 1)), action((1, 0, 1, 1)), action((1, 0, 0, 2))]
    )


def small_faithful_representation(pres, order: int, max_cosets: int = 2_000_000):
    """A faithful coset action of smallish degree for a presented group of
    known order; returns (group, generator permutations in presentation
    order).  Tries 2-generator subgroups, then cyclic ones, then the
    regular action.
    """
    ngens = pres.ngens
    candidates = []
    for i in range(ngens):
        for j in range(i + 1, ngens):
            candidates.append(((i + 1,), (j + 1,)))
    for i in range(ngens):
        candidates.append(((i + 1,),))
    candidates.append(())
    for sub in candidates:
        try:
            table = coset_enumeration(pres, sub, max_cosets=max_cosets)
        except Exception:
            continue
        gens = [table.generator_permutation(i) for i in range(ngens)]
        group = PermGroup(table.n_cosets, gens)
        if table.n_cosets == order or group.order() == order:
            group._order = order
            return group, gens
    raise RuntimeError("no faithful representation found")


def from_presentation(text: str) -> PermGroup:
    pres = parse_presentation(text)
    table = coset_enumeration(pres)
    group, _ = small_faithful_representation(pres, table.n_cosets)
    return group


def regular_representation(g: PermGroup) -> PermGroup:
    els = g.elements()
    index = {e: i for i, e in enumerate(els)}
    gens = [tuple(index[pmul(e, s)] for e in els) for s in g.generators]
    return PermGroup(len(els), gens)


# presentations from the classification of minimal 3-generated groups
_PRESENTATIONS = {
    "3^2:2": "x,y,z | x^3, y^3, [x,y], z^2, x^z*x, y^z*y",
    "5^2:2": "x,y,z | x^5, y^5, [x,y], z^2, x^z*x, y^z*y",
    "3^(1+2):2": "x,y,z | x^3, y^3, [x,y]^3, [x,[x,y]], [y,[x,y]], z^2, x^z*x, y^z*y",
    "5^(1+2):2": "x,y,z | x^5, y^5, [x,y]^5, [x,[x,y]], [y,[x,y]], z^2, x^z*x, y^z*y",
    "(4x2):2": "x,y,z | x^4, y^2, [x,y], z^2, x^z*x, y^z*x^2*y",
    "(6x2):2": "x,y,z | x^6, y^2, [x,y], z^2, x^z*x, y^z*x^3*y",
    "(5^2:3):2": "x,y,z,w | x^5, y^5, z^3, [x,y], w^2, x^w*y^-1, y^z*y*x^-1, z^w*z",
}

_ALIASES = {
    "D2": "2",
    "D4": "2^2",
    "D6": "S3",
    "(3^2:3):2": "3^(1+2):2",
    "(3^3:3):2": "3^(1+2):2",
    "(5^2:5):2": "5^(1+2):2",
    "V4": "2^2",
}


@lru_cache(maxsize=None)
def catalogue() -> dict[str, PermGroup]:
    """All named reference groups, keyed by their ASCII names."""
    groups: dict[str, PermGroup] = {
        "1": PermGroup(1, []),
        "2": cyclic(2),
        "2^2": dihedral(4),
        "2^3": elementary_abelian_2(3),
        "S3": symmetric(3),
        "D8": dihedral(8),
        "D10": dihedral(10),
        "D12": dihedral(12),
        "D20": dihedral(20),
        "S4": symmetric(4),
        "A5": alternating(5),
        "GL(2,3)": gl23(),
        "2xS4": direct_product(cyclic(2), symmetric(4)),
        "2xA5": direct_product(cyclic(2), alternating(5)),
        "2xD8": direct_product(cyclic(2), dihedral(8)),
        "2xD12": direct_product(cyclic(2), dihedral(12)),
    }
    for name, text in _PRESENTATIONS.items():
        groups[name] = from_presentation(text)
    return groups


def group_by_name(name: str) -> PermGroup:
    name = name.strip()
    name = _ALIASES.get(name, name)
    groups = catalogue()
    if name not in groups:
        raise KeyError(f"unknown group name {name!r}")
    return groups[name]


@lru_cache(maxsize=None)
def _fingerprint_index():
    out: dict[tuple, list[str]] = {}
    for name, group in catalogue().items():
        out.setdefault(group.fingerprint(), []).append(name)
    return out


def identify(group: PermGroup) -> str:
    """Catalogue name of the group, or ``unknown(order=..)`` if unmatched.

    A fingerprint match is always confirmed by an isomorphism search.
    """
    if group.order() == 1:
        return "1"
    try:
        fp = group.fingerprint()
    except Exception:
        return f"unknown(order={group.order()})"
    for name in _fingerprint_index().get(fp, []):
        if group.is_isomorphic(catalogue()[name]):
            return name
    return f"unknown(order={group.order()}, fingerprint={hash(fp) & 0xFFFFFFFF:08x})"
