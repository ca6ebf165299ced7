"""The nine dihedral Majorana algebras, in exact rational arithmetic.

Each algebra is stored as structure constants and a Gram matrix over its
printed basis.  Only a transversal of basis pairs is seeded explicitly;
the rest is produced by the completion closure, which propagates the
seeded entries under the dihedral symmetries (the two Majorana
involutions and the swap of the two generating axes) and fails loudly on
any conflict or on an undetermined pair.

Axis labels a_j use indices mod N (the type number); the extra basis
vectors attached to rotations (a_rho, a_rho^2, a_rho^3, u_rho, u_rho^2,
v_rho, w_rho) are fixed by all three symmetries with sign +1 -- for w_rho
this is forced by the printed a0.w_rho product, and the closure
consistency check guards the convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from .rational_linalg import (
    Echelon,
    Vec,
    determinant,
    invert,
    kernel_basis,
    leading_principal_minors,
    matvec,
    unit,
    vadd,
    vscale,
    zeros,
)

F = Fraction

TYPE_NAMES = ("1A", "2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A")

EIGENVALUES = (F(1), F(0), F(1, 4), F(1, 32))

# dimensions of the (1, 0, 1/4, 1/32) eigenspaces about an a_j axis
EXPECTED_EIGEN_DIMENSIONS = {
    "1A": (1, 0, 0, 0),
    "2A": (1, 1, 1, 0),
    "2B": (1, 1, 0, 0),
    "3A": (1, 1, 1, 1),
    "3C": (1, 1, 0, 1),
    "4A": (1, 2, 1, 1),
    "4B": (1, 2, 1, 1),
    "5A": (1, 2, 1, 2),
    "6A": (1, 3, 2, 2),
}


class AlgebraConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class BasisLabel:
    name: str
    kind: str  # "axis" or "extra"
    axis_index: int | None = None  # j for a_j labels, None otherwise

    def __str__(self):
        return self.name


def _axis(j: int) -> BasisLabel:
    return BasisLabel(f"a{j}", "axis", j)


def _rho_axis(k: int) -> BasisLabel:
    suffix = "" if k == 1 else f"^{k}"
    return BasisLabel(f"a_rho{suffix}", "axis", None)


def _extra(name: str) -> BasisLabel:
    return BasisLabel(name, "extra", None)


# basis lists exactly as in the structure-constant table
_BASES: dict[str, list[BasisLabel]] = {
    "1A": [_axis(0)],
    "2A": [_axis(0), _axis(1), _rho_axis(1)],
    "2B": [_axis(0), _axis(1)],
    "3A": [_axis(-1), _axis(0), _axis(1), _extra("u_rho")],
    "3C": [_axis(-1), _axis(0), _axis(1)],
    "4A": [_axis(-1), _axis(0), _axis(1), _axis(2), _extra("v_rho")],
    "4B": [_axis(-1), _axis(0), _axis(1), _axis(2), _rho_axis(2)],
    "5A": [_axis(-2), _axis(-1), _axis(0), _axis(1), _axis(2), _extra("w_rho")],
    "6A": [
        _axis(-2), _axis(-1), _axis(0), _axis(1), _axis(2), _axis(3),
        _rho_axis(3), _extra("u_rho^2"),
    ],
}

_TYPE_N = {"1A": 1, "2A": 2, "2B": 2, "3A": 3, "3C": 3, "4A": 4, "4B": 4, "5A": 5, "6A": 6}


def _seed_products(t: str) -> list[tuple[str, str, dict[str, Fraction]]]:
    """Products printed in the table, plus the handful inherited from the
    2A/3A subalgebras where the table leaves them implicit (recorded in the
    construction notes and cross-checked by the axiom audits)."""
    if t == "1A":
        return []
    if t == "2A":
        return [
            ("a0", "a1", {"a0": F(1, 8), "a1": F(1, 8), "a_rho": F(-1, 8)}),
            ("a0", "a_rho", {"a0": F(1, 8), "a_rho": F(1, 8), "a1": F(-1, 8)}),
        ]
    if t == "2B":
        return [("a0", "a1", {})]
    if t == "3A":
        return [
            ("a0", "a1", {"a0": F(2, 32), "a1": F(2, 32), "a-1": F(1, 32),
                          "u_rho": F(-27 * 5, 2**11)}),
            ("a0", "u_rho", {"a0": F(2, 9), "a1": F(-1, 9), "a-1": F(-1, 9),
                             "u_rho": F(5, 32)}),
            ("u_rho", "u_rho", {"u_rho": F(1)}),
        ]
    if t == "3C":
        return [("a0", "a1", {"a0": F(1, 64), "a1": F(1, 64), "a-1": F(-1, 64)})]
    if t == "4A":
        return [
            ("a0", "a1", {"a0": F(3, 64), "a1": F(3, 64), "a2": F(1, 64),
                          "a-1": F(1, 64), "v_rho": F(-3, 64)}),
            ("a0", "v_rho", {"a0": F(5, 16), "a1": F(-2, 16), "a2": F(-1, 16),
                             "a-1": F(-2, 16), "v_rho": F(3, 16)}),
            ("v_rho", "v_rho", {"v_rho": F(1)}),
            ("a0", "a2", {}),
        ]
    if t == "4B":
        return [
            ("a0", "a1", {"a0": F(1, 64), "a1": F(1, 64), "a-1": F(-1, 64),
                          "a2": F(-1, 64), "a_rho^2": F(1, 64)}),
            ("a0", "a2", {"a0": F(1, 8), "a2": F(1, 8), "a_rho^2": F(-1, 8)}),
            # 2A subalgebra <<a0, a2>> with third axis a_rho^2
            ("a0", "a_rho^2", {"a0": F(1, 8), "a_rho^2": F(1, 8), "a2": F(-1, 8)}),
        ]
    if t == "5A":
        return [
            ("a0", "a1", {"a0": F(3, 128), "a1": F(3, 128), "a2": F(-1, 128),
                          "a-1": F(-1, 128), "a-2": F(-1, 128), "w_rho": F(1)}),
            ("a0", "a2", {"a0": F(3, 128), "a2": F(3, 128), "a1": F(-1, 128),
                          "a-1": F(-1, 128), "a-2": F(-1, 128), "w_rho": F(-1)}),
            ("a0", "w_rho", {"a1": F(7, 2**12), "a-1": F(7, 2**12),
                             "a2": F(-7, 2**12), "a-2": F(-7, 2**12),
                             "w_rho": F(7, 32)}),
            ("w_rho", "w_rho", {lbl: F(25 * 7, 2**19)
                                for lbl in ("a-2", "a-1", "a0", "a1", "a2")}),
        ]
    if t == "6A":
        return [
            ("a0", "a1", {"a0": F(1, 64), "a1": F(1, 64), "a-2": F(-1, 64),
                          "a-1": F(-1, 64), "a2": F(-1, 64), "a3": F(-1, 64),
                          "a_rho^3": F(1, 64), "u_rho^2": F(45, 2**11)}),
            ("a0", "a2", {"a0": F(2, 32), "a2": F(2, 32), "a-2": F(1, 32),
                          "u_rho^2": F(-27 * 5, 2**11)}),
            ("a0", "u_rho^2", {"a0": F(2, 9), "a2": F(-1, 9), "a-2": F(-1, 9),
                               "u_rho^2": F(5, 32)}),
            ("a0", "a3", {"a0": F(1, 8), "a3": F(1, 8), "a_rho^3": F(-1, 8)}),
            ("a_rho^3", "u_rho^2", {}),
            # 3A subalgebra <<a0, a2>> supplies the u_rho^2 idempotency
            ("u_rho^2", "u_rho^2", {"u_rho^2": F(1)}),
            # 2A subalgebra <<a0, a3>> with third axis a_rho^3
            ("a0", "a_rho^3", {"a0": F(1, 8), "a_rho^3": F(1, 8), "a3": F(-1, 8)}),
        ]
    raise KeyError(t)


def _seed_inners(t: str) -> list[tuple[str, str, Fraction]]:
    if t == "1A":
        return []
    if t == "2A":
        return [("a0", "a1", F(1, 8)), ("a0", "a_rho", F(1, 8))]
    if t == "2B":
        return [("a0", "a1", F(0))]
    if t == "3A":
        return [("a0", "a1", F(13, 256)), ("a0", "u_rho", F(1, 4)),
                ("u_rho", "u_rho", F(8, 5))]
    if t == "3C":
        return [("a0", "a1", F(1, 64))]
    if t == "4A":
        return [("a0", "a1", F(1, 32)), ("a0", "a2", F(0)),
                ("a0", "v_rho", F(3, 8)), ("v_rho", "v_rho", F(2))]
    if t == "4B":
        return [("a0", "a1", F(1, 64)), ("a0", "a2", F(1, 8)),
                ("a0", "a_rho^2", F(1, 8))]
    if t == "5A":
        return [("a0", "a1", F(3, 128)), ("a0", "w_rho", F(0)),
                ("w_rho", "w_rho", F(125 * 7, 2**19)),
                # (a0, a2) is not reachable from (a0, a1) by the dihedral
                # action; the value is forced by the associativity of the
                # form (see the oracle test deriving it from M1)
                ("a0", "a2", F(3, 128))]
    if t == "6A":
        return [("a0", "a1", F(5, 256)), ("a0", "a2", F(13, 256)),
                ("a0", "a3", F(1, 8)), ("a_rho^3", "u_rho^2", F(0)),
                # 3A subalgebra values for the u_rho^2 rows
                ("a0", "u_rho^2", F(1, 4)), ("u_rho^2", "u_rho^2", F(8, 5)),
                # 2A subalgebra value for the a_rho^3 rows
                ("a0", "a_rho^3", F(1, 8))]
    raise KeyError(t)


SignedImage = tuple[int, int]  # (basis index, +1 or -1)


@dataclass
class AlgebraTable:
    """One dihedral algebra: exact products, Gram matrix and symmetries."""

    type_name: str
    labels: list[BasisLabel]
    products: dict[tuple[int, int], Vec]
    gram: list[list[Fraction]]
    # signed basis maps for tau0, tau1 and the a0<->a1 flip
    dihedral_action: dict[str, list[SignedImage]]

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def n_value(self) -> int:
        return _TYPE_N[self.type_name]

    def index(self, name: str) -> int:
        for i, lbl in enumerate(self.labels):
            if lbl.name == name:
                return i
        raise KeyError(f"{self.type_name} has no basis vector {name!r}")

    def basis_vector(self, name: str) -> Vec:
        return unit(self.dim, self.index(name))

    def axis_names(self) -> list[str]:
        return [lbl.name for lbl in self.labels if lbl.kind == "axis"]

    def vector(self, coeffs: dict[str, Fraction]) -> Vec:
        v = [F(0)] * self.dim
        for name, c in coeffs.items():
            v[self.index(name)] += F(c)
        return tuple(v)

    def multiply(self, u: Vec, v: Vec) -> Vec:
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("vector dimension mismatch")
        out = [F(0)] * self.dim
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            for j, vj in enumerate(v):
                if vj == 0:
                    continue
                prod = self.products[(i, j) if i <= j else (j, i)]
                c = ui * vj
                for k, pk in enumerate(prod):
                    if pk != 0:
                        out[k] += c * pk
        return tuple(out)

    def inner(self, u: Vec, v: Vec) -> Fraction:
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("vector dimension mismatch")
        total = F(0)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.gram[i]
            for j, vj in enumerate(v):
                if vj != 0:
                    total += ui * vj * row[j]
        return total

    def apply_map(self, name: str, v: Vec) -> Vec:
        out = [F(0)] * self.dim
        for i, c in enumerate(v):
            if c != 0:
                j, sign = self.dihedral_action[name][i]
                out[j] += sign * c
        return tuple(out)

    def ad_matrix(self, axis_name: str) -> list[Vec]:
        a = self.basis_vector(axis_name)
        cols = [self.multiply(a, unit(self.dim, j)) for j in range(self.dim)]
        return [tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim)]


def _axis_action(t: str, formula) -> list[SignedImage]:
    """Signed basis map from an index formula on a_j labels; all other
    basis vectors are fixed."""
    labels = _BASES[t]
    n = _TYPE_N[t]
    index_of = {}
    for i, lbl in enumerate(labels):
        if lbl.axis_index is not None:
            index_of[lbl.axis_index % n] = i
    images: list[SignedImage] = []
    for i, lbl in enumerate(labels):
        if lbl.axis_index is None:
            images.append((i, 1))
        else:
            images.append((index_of[formula(lbl.axis_index) % n], 1))
    return images


def _build_actions(t: str) -> dict[str, list[SignedImage]]:
    return {
        "tau0": _axis_action(t, lambda j: -j),
        "tau1": _axis_action(t, lambda j: 2 - j),
        "flip": _axis_action(t, lambda j: 1 - j),
    }


def algebra_table(t: str) -> AlgebraTable:
    """Build and complete the structure-constant table for one type.

    Raises :class:`AlgebraConstructionError` if the closure derives two
    different values for one entry or leaves an entry undetermined.
    """
    if t not in TYPE_NAMES:
        raise KeyError(f"unknown dihedral type {t!r}")
    labels = _BASES[t]
    dim = len(labels)
    index = {lbl.name: i for i, lbl in enumerate(labels)}
    actions = _build_actions(t)

    products: dict[tuple[int, int], Vec] = {}
    gram_entries: dict[tuple[int, int], Fraction] = {}

    def put_product(i, j, vec, origin):
        key = (i, j) if i <= j else (j, i)
        if key in products:
            if products[key] != vec:
                raise AlgebraConstructionError(
                    f"{t}: conflicting product for {labels[key[0]]}*{labels[key[1]]} ({origin})"
                )
            return False
        products[key] = vec
        return True

    def put_inner(i, j, value, origin):
        key = (i, j) if i <= j else (j, i)
        if key in gram_entries:
            if gram_entries[key] != value:
                raise AlgebraConstructionError(
                    f"{t}: conflicting inner product ({labels[key[0]]},{labels[key[1]]}) ({origin})"
                )
            return False
        gram_entries[key] = value
        return True

    # seeds: axis idempotency and unit norm (M3), then the printed entries
    work: list[tuple[str, tuple]] = []
    for i, lbl in enumerate(labels):
        if lbl.kind == "axis":
            put_product(i, i, unit(dim, i), "M3")
            put_inner(i, i, F(1), "M3")
            work.append(("p", (i, i)))
            work.append(("g", (i, i)))
    for x, y, coeffs in _seed_products(t):
        i, j = index[x], index[y]
        v = [F(0)] * dim
        for name, c in coeffs.items():
            v[index[name]] += c
        put_product(i, j, tuple(v), "seed")
        work.append(("p", (min(i, j), max(i, j))))
    for x, y, value in _seed_inners(t):
        i, j = index[x], index[y]
        put_inner(i, j, value, "seed")
        work.append(("g", (min(i, j), max(i, j))))

    def map_vec(action, v):
        out = [F(0)] * dim
        for i, c in enumerate(v):
            if c != 0:
                jj, sign = action[i]
                out[jj] += sign * c
        return tuple(out)

    while work:
        kind, key = work.pop()
        i, j = key
        for action in actions.values():
            ii, si = action[i]
            jj, sj = action[j]
            if kind == "p":
                image = map_vec(action, products[key])
                if si * sj == -1:
                    image = tuple(-c for c in image)
                if put_product(ii, jj, image, "closure"):
                    work.append(("p", (min(ii, jj), max(ii, jj))))
            else:
                value = si * sj * gram_entries[key]
                if put_inner(ii, jj, value, "closure"):
                    work.append(("g", (min(ii, jj), max(ii, jj))))

    missing = [
        (labels[i].name, labels[j].name)
        for i in range(dim)
        for j in range(i, dim)
        if (i, j) not in products or (i, j) not in gram_entries
    ]
    if missing:
        raise AlgebraConstructionError(f"{t}: undetermined entries {missing}")

    gram = [[gram_entries[(min(i, j), max(i, j))] for j in range(dim)] for i in range(dim)]
    return AlgebraTable(t, labels, products, gram, actions)


# -- axiom checks ---------------------------------------------------------------


def check_commutativity(table: AlgebraTable) -> list[str]:
    # products are stored symmetrically by construction; verify multiply
    violations = []
    for i in range(table.dim):
        for j in range(table.dim):
            u, v = unit(table.dim, i), unit(table.dim, j)
            if table.multiply(u, v) != table.multiply(v, u):
                violations.append(f"{table.labels[i]}*{table.labels[j]}")
    return violations


def check_m1(table: AlgebraTable) -> list[str]:
    """(u, v.w) = (u.v, w) over all ordered basis triples."""
    violations = []
    n = table.dim
    basis = [unit(n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = table.inner(basis[i], table.multiply(basis[j], basis[k]))
                rhs = table.inner(table.multiply(basis[i], basis[j]), basis[k])
                if lhs != rhs:
                    violations.append(
                        f"({table.labels[i]},{table.labels[j]}*{table.labels[k]})"
                    )
    return violations


def check_m3(table: AlgebraTable) -> list[str]:
    violations = []
    for lbl in table.labels:
        if lbl.kind != "axis":
            continue
        a = table.basis_vector(lbl.name)
        if table.multiply(a, a) != a:
            violations.append(f"{lbl} not idempotent")
        if table.inner(a, a) != 1:
            violations.append(f"{lbl} has norm {table.inner(a, a)}")
    return violations


@dataclass
class EigenDecomposition:
    axis: str
    spaces: dict[Fraction, list[Vec]]

    @property
    def dimensions(self) -> tuple[int, int, int, int]:
        return tuple(len(self.spaces[mu]) for mu in EIGENVALUES)


def eigen_decomposition(table: AlgebraTable, axis_name: str) -> EigenDecomposition:
    """Exact eigenspaces of ad(axis) for the four Majorana eigenvalues.

    Raises if the four kernels do not exhaust the algebra (which would
    mean the adjoint has an eigenvalue outside the Majorana spectrum or is
    not diagonalisable).
    """
    lbl = next(l for l in table.labels if l.name == axis_name)
    if lbl.kind != "axis":
        raise ValueError(f"{axis_name} is not an axis")
    ad = table.ad_matrix(axis_name)
    n = table.dim
    spaces = {}
    total = 0
    for mu in EIGENVALUES:
        shifted = [
            tuple(ad[i][j] - (mu if i == j else 0) for j in range(n)) for i in range(n)
        ]
        basis = kernel_basis(shifted)
        spaces[mu] = basis
        total += len(basis)
    if total != n:
        raise AlgebraConstructionError(
            f"{table.type_name}: adjoint of {axis_name} is not diagonalisable over "
            f"the Majorana spectrum (dims {[len(spaces[mu]) for mu in EIGENVALUES]})"
        )
    return EigenDecomposition(axis_name, spaces)


def check_m4_m5(table: AlgebraTable, axis_name: str) -> EigenDecomposition:
    decomp = eigen_decomposition(table, axis_name)
    one_space = decomp.spaces[F(1)]
    if len(one_space) != 1:
        raise AlgebraConstructionError(f"{table.type_name}: 1-eigenspace not a line")
    v = one_space[0]
    a = table.basis_vector(axis_name)
    nonzero = [i for i, c in enumerate(v) if c != 0]
    if len(nonzero) != 1 or nonzero[0] != table.index(axis_name):
        raise AlgebraConstructionError(
            f"{table.type_name}: 1-eigenspace of {axis_name} is not its span"
        )
    return decomp


def check_eigenspace_orthogonality(table: AlgebraTable, decomp: EigenDecomposition) -> list[str]:
    violations = []
    for mu in EIGENVALUES:
        for nu in EIGENVALUES:
            if mu <= nu:
                continue
            for u in decomp.spaces[mu]:
                for v in decomp.spaces[nu]:
                    if table.inner(u, v) != 0:
                        violations.append(f"({mu},{nu}) not orthogonal about {decomp.axis}")
    return violations


def in_eigenspace(table: AlgebraTable, axis_name: str, mu: Fraction, v: Vec) -> bool:
    a = table.basis_vector(axis_name)
    return table.multiply(a, v) == vscale(mu, v)


# Eigenvectors about a0 as printed in the eigenspace table.  Entries whose
# `corrected` note is set are sign misprints in the source: both printed
# vectors contain a tau0-skew combination (a_j - a_-j), which cannot lie in
# a 0-eigenspace; the symmetric reading is the member.  The audit records
# these as discrepancies rather than silently fixing them.
PRINTED_EIGENVECTORS: list[tuple[str, Fraction, dict[str, Fraction], str | None]] = [
    ("2A", F(0), {"a1": 1, "a_rho": 1, "a0": F(-1, 4)}, None),
    ("2A", F(1, 4), {"a1": 1, "a_rho": -1}, None),
    ("2B", F(0), {"a1": 1}, None),
    ("3A", F(0), {"u_rho": 1, "a0": F(-10, 27), "a1": F(32, 27), "a-1": F(32, 27)}, None),
    ("3A", F(1, 4), {"u_rho": 1, "a0": F(-8, 45), "a1": F(-32, 45), "a-1": F(-32, 45)}, None),
    ("3A", F(1, 32), {"a1": 1, "a-1": -1}, None),
    ("3C", F(0), {"a1": 1, "a-1": 1, "a0": F(-1, 32)}, None),
    ("3C", F(1, 32), {"a1": 1, "a-1": -1}, None),
    ("4A", F(0), {"v_rho": 1, "a0": F(-1, 2), "a1": 2, "a-1": 2}, None),
    ("4A", F(0), {"a2": 1}, None),
    ("4A", F(1, 4), {"v_rho": 1, "a0": F(-1, 3), "a1": F(-2, 3), "a-1": F(-2, 3), "a2": F(-1, 3)}, None),
    ("4A", F(1, 32), {"a1": 1, "a-1": -1}, None),
    ("4B", F(0), {"a1": 1, "a-1": 1, "a0": F(-1, 32), "a_rho^2": F(-1, 8), "a2": F(1, 8)}, None),
    ("4B", F(0), {"a2": 1, "a_rho^2": 1, "a0": F(-1, 4)}, None),
    ("4B", F(1, 4), {"a2": 1, "a_rho^2": -1}, None),
    ("4B", F(1, 32), {"a1": 1, "a-1": -1}, None),
    ("5A", F(0),
     {"w_rho": 1, "a0": F(3, 512), "a1": F(-15, 128), "a-1": F(-15, 128),
      "a2": F(-1, 128), "a-2": F(-1, 128)},
     "printed with -(a2 - a-2)/2^7; the 0-eigenvector carries -(a2 + a-2)/2^7"),
    ("5A", F(0),
     {"w_rho": 1, "a0": F(-3, 512), "a1": F(1, 128), "a-1": F(1, 128),
      "a2": F(15, 128), "a-2": F(15, 128)}, None),
    ("5A", F(1, 4),
     {"w_rho": 1, "a1": F(1, 128), "a-1": F(1, 128), "a2": F(-1, 128), "a-2": F(-1, 128)}, None),
    ("5A", F(1, 32), {"a1": 1, "a-1": -1}, None),
    ("5A", F(1, 32), {"a2": 1, "a-2": -1}, None),
    ("6A", F(0),
     {"u_rho^2": 1, "a0": F(2, 45), "a1": F(-256, 45), "a-1": F(-256, 45),
      "a2": F(-32, 45), "a-2": F(-32, 45), "a3": F(-32, 45), "a_rho^3": F(32, 45)},
     "printed with -(2^8/3^2.5)(a1 - a-1); the 0-eigenvector carries (a1 + a-1)"),
    ("6A", F(0), {"a3": 1, "a_rho^3": 1, "a0": F(-1, 4)}, None),
    ("6A", F(0), {"u_rho^2": 1, "a0": F(-10, 27), "a2": F(32, 27), "a-2": F(32, 27)}, None),
    ("6A", F(1, 4),
     {"u_rho^2": 1, "a0": F(-8, 45), "a2": F(-32, 45), "a-2": F(-32, 45),
      "a3": F(-32, 45), "a_rho^3": F(32, 45)}, None),
    ("6A", F(1, 4), {"a3": 1, "a_rho^3": -1}, None),
    ("6A", F(1, 32), {"a1": 1, "a-1": -1}, None),
    ("6A", F(1, 32), {"a2": 1, "a-2": -1}, None),
]


def check_printed_eigenvectors(t: str) -> tuple[list[str], list[str]]:
    """Membership of every tabulated eigenvector of the type about a0.

    Returns (failures, corrected_notes); a clean audit has no failures and
    exactly the known sign-misprint notes.
    """
    table = algebra_table(t)
    failures = []
    notes = []
    for typ, mu, coeffs, corrected in PRINTED_EIGENVECTORS:
        if typ != t:
            continue
        v = table.vector(coeffs)
        if not in_eigenspace(table, "a0", mu, v):
            failures.append(f"{t}: tabulated {mu}-eigenvector is not in the eigenspace")
        if corrected:
            notes.append(f"{t} {mu}-eigenvector: {corrected}")
    return failures, notes


# -- tau and sigma ---------------------------------------------------------------


def tau_matrix(table: AlgebraTable, axis_name: str) -> list[Vec]:
    """The Majorana involution of an axis: -1 on the 1/32 eigenspace, +1
    elsewhere, assembled exactly from the eigenbasis."""
    decomp = eigen_decomposition(table, axis_name)
    return _signed_eigen_map(table, decomp, {F(1): 1, F(0): 1, F(1, 4): 1, F(1, 32): -1})


def _signed_eigen_map(table, decomp, signs) -> list[Vec]:
    n = table.dim
    columns = []
    diag = []
    for mu in EIGENVALUES:
        for v in decomp.spaces[mu]:
            columns.append(v)
            diag.append(signs[mu])
    basis = [tuple(columns[c][r] for c in range(n)) for r in range(n)]  # matrix with eigenvectors as columns
    inv = invert(basis)
    scaled = [tuple(diag[c] * basis[r][c] for c in range(n)) for r in range(n)]
    out = [
        tuple(
            sum(scaled[r][k] * inv[k][c] for k in range(n)) for c in range(n)
        )
        for r in range(n)
    ]
    return out


def apply_matrix(m: list[Vec], v: Vec) -> Vec:
    return matvec(m, v)


def is_algebra_automorphism(table: AlgebraTable, m: list[Vec]) -> bool:
    n = table.dim
    basis = [unit(n, i) for i in range(n)]
    images = [matvec(m, b) for b in basis]
    for i in range(n):
        for j in range(i, n):
            if table.multiply(images[i], images[j]) != matvec(
                m, table.multiply(basis[i], basis[j])
            ):
                return False
    return True


def is_gram_isometry(table: AlgebraTable, m: list[Vec]) -> bool:
    n = table.dim
    basis = [unit(n, i) for i in range(n)]
    images = [matvec(m, b) for b in basis]
    for i in range(n):
        for j in range(i, n):
            if table.inner(images[i], images[j]) != table.inner(basis[i], basis[j]):
                return False
    return True


def signed_permutation_of(table: AlgebraTable, m: list[Vec]) -> list[SignedImage] | None:
    """Decode a matrix as a signed basis permutation, or None."""
    n = table.dim
    out = []
    for j in range(n):
        col = [m[i][j] for i in range(n)]
        nonzero = [i for i, c in enumerate(col) if c != 0]
        if len(nonzero) != 1 or abs(col[nonzero[0]]) != 1:
            return None
        out.append((nonzero[0], int(col[nonzero[0]])))
    return out


@dataclass
class SigmaMap:
    """The signed map on the fixed part V+ of tau(a): -1 on the 1/4
    eigenspace, +1 on the 1- and 0-eigenspaces."""

    table: AlgebraTable
    axis: str
    decomp: EigenDecomposition

    def plus_basis(self) -> list[Vec]:
        return [
            v
            for mu in (F(1), F(0), F(1, 4))
            for v in self.decomp.spaces[mu]
        ]

    def apply(self, v: Vec) -> Vec:
        parts = _eigen_components(self.table, self.decomp, v)
        if any(c != 0 for c in parts[F(1, 32)]):
            raise ValueError("vector is not in the fixed part V+")
        out = zeros(self.table.dim)
        for mu, sign in ((F(1), 1), (F(0), 1), (F(1, 4), -1)):
            out = vadd(out, vscale(sign, parts[mu]))
        return out


def _eigen_components(table, decomp, v) -> dict[Fraction, Vec]:
    n = table.dim
    columns = []
    slots = []
    for mu in EIGENVALUES:
        for w in decomp.spaces[mu]:
            columns.append(w)
            slots.append(mu)
    basis = [tuple(columns[c][r] for c in range(n)) for r in range(n)]
    from .rational_linalg import solve

    coeffs = solve(basis, v)
    if coeffs is None:
        raise ValueError("vector outside the span of the eigenbasis")
    parts = {mu: zeros(n) for mu in EIGENVALUES}
    for k, (c, mu) in enumerate(zip(coeffs, slots)):
        if c != 0:
            parts[mu] = vadd(parts[mu], vscale(c, columns[k]))
    return parts


def sigma_map(table: AlgebraTable, axis_name: str) -> SigmaMap:
    decomp = eigen_decomposition(table, axis_name)
    return SigmaMap(table, axis_name, decomp)


def check_sigma_automorphism(table: AlgebraTable, sigma: SigmaMap) -> bool:
    """sigma preserves the product and the form on V+ (a subalgebra)."""
    plus = sigma.plus_basis()
    for i, u in enumerate(plus):
        for v in plus[i:]:
            prod = table.multiply(u, v)
            if table.multiply(sigma.apply(u), sigma.apply(v)) != sigma.apply(prod):
                return False
            if table.inner(sigma.apply(u), sigma.apply(v)) != table.inner(u, v):
                return False
    return True


# -- subalgebras -----------------------------------------------------------------


def _generated_subalgebra_signature(table: AlgebraTable, x: Vec, y: Vec):
    """Deterministic closure of the subalgebra generated by (x, y) and its
    structure constants in the closure basis.

    Two generated subalgebras receive identical signatures exactly when
    there is an isomorphism (with isometric form) matching the generators
    in order, so signatures classify generated subalgebras by type.
    """
    ech = Echelon(table.dim)
    seq: list[Vec] = []

    def consider(v):
        if ech.add(v):
            seq.append(v)

    consider(x)
    consider(y)
    changed = True
    while changed:
        changed = False
        k = len(seq)
        for i in range(k):
            for j in range(i, k):
                p = table.multiply(seq[i], seq[j])
                before = ech.dim
                consider(p)
                if ech.dim > before:
                    changed = True
    # structure constants and gram in the closure basis
    basis_matrix = [tuple(seq[c][r] for c in range(len(seq))) for r in range(table.dim)]
    from .rational_linalg import solve

    def coords(v):
        sol = solve(basis_matrix, v)
        if sol is None:
            raise AlgebraConstructionError("closure is not multiplicatively closed")
        return sol

    k = len(seq)
    consts = tuple(
        tuple(coords(table.multiply(seq[i], seq[j])) for j in range(k)) for i in range(k)
    )
    gram = tuple(tuple(table.inner(seq[i], seq[j]) for j in range(k)) for i in range(k))
    return (k, consts, gram)


_REFERENCE_SIGNATURES: dict | None = None


def _reference_signatures():
    global _REFERENCE_SIGNATURES
    if _REFERENCE_SIGNATURES is None:
        sigs = {}
        for t in TYPE_NAMES:
            table = algebra_table(t)
            if t == "1A":
                a0 = table.basis_vector("a0")
                sigs[_generated_subalgebra_signature(table, a0, a0)] = t
            else:
                x = table.basis_vector("a0")
                y = table.basis_vector("a1")
                sigs[_generated_subalgebra_signature(table, x, y)] = t
        _REFERENCE_SIGNATURES = sigs
    return _REFERENCE_SIGNATURES


def subalgebra_type(table: AlgebraTable, x_name: str, y_name: str) -> str:
    """Type of the subalgebra generated by two axis basis vectors."""
    for name in (x_name, y_name):
        lbl = next(l for l in table.labels if l.name == name)
        if lbl.kind != "axis":
            raise ValueError(f"{name} is not an axis")
    sig = _generated_subalgebra_signature(
        table, table.basis_vector(x_name), table.basis_vector(y_name)
    )
    try:
        return _reference_signatures()[sig]
    except KeyError:
        raise AlgebraConstructionError(
            f"{table.type_name}: <<{x_name},{y_name}>> matches no dihedral type"
        ) from None


def inclusion_map(t: str) -> dict[tuple[str, str], str]:
    """Types of all proper subalgebras generated by axis pairs."""
    table = algebra_table(t)
    out = {}
    axes = table.axis_names()
    for i, x in enumerate(axes):
        for y in axes[i + 1:]:
            sub = subalgebra_type(table, x, y)
            if sub != t:
                out[(x, y)] = sub
    return out


# -- Gram positivity and the Norton sampling -------------------------------------


def gram_positive_definite(table: AlgebraTable) -> bool:
    return all(m > 0 for m in leading_principal_minors(table.gram))


def gram_determinant(table: AlgebraTable) -> Fraction:
    return determinant(table.gram)


class _LCG:
    """Fixed linear congruential generator (Numerical Recipes constants),
    so sampled checks are reproducible from the seed."""

    MOD = 2**32
    MULT = 1664525
    INC = 1013904223

    def __init__(self, seed: int):
        self.state = seed % self.MOD

    def next(self) -> int:
        self.state = (self.MULT * self.state + self.INC) % self.MOD
        return self.state


def sample_vector(rng: _LCG, dim: int) -> Vec:
    """Rational vector with numerators in [-4, 4] and denominators 1, 2 or 4."""
    out = []
    for _ in range(dim):
        num = rng.next() % 9 - 4
        den = 2 ** (rng.next() % 3)
        out.append(F(num, den))
    return tuple(out)


@dataclass
class NortonReport:
    trials: int
    violations: list[tuple[Vec, Vec]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def norton_sample(table: AlgebraTable, trials: int, seed: int = 1) -> NortonReport:
    """Sampled check of the Norton inequality (u.u, v.v) >= (u.v, u.v)."""
    rng = _LCG(seed)
    report = NortonReport(trials)
    for _ in range(trials):
        u = sample_vector(rng, table.dim)
        v = sample_vector(rng, table.dim)
        uu = table.multiply(u, u)
        vv = table.multiply(v, v)
        uv = table.multiply(u, v)
        if table.inner(uu, vv) < table.inner(uv, uv):
            report.violations.append((u, v))
    return report


# -- serialisation ----------------------------------------------------------------


def table_to_json(table: AlgebraTable) -> dict:
    products = []
    for (i, j), vec in sorted(table.products.items()):
        products.append([i, j, [str(c) for c in vec]])
    return {
        "type": table.type_name,
        "basis": [lbl.name for lbl in table.labels],
        "axis_flags": [lbl.kind == "axis" for lbl in table.labels],
        "products": products,
        "gram": [[str(c) for c in row] for row in table.gram],
    }
