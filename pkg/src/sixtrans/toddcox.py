"""Todd-Coxeter coset enumeration.

Two strategies are implemented: relator-based HLT with lookahead (the
default) and the deduction-driven Felsch method.  Both produce the same
completed table (up to the standardisation applied at the end), which the
test suite uses as a cross-check.

Cosets are numbered from 0 internally; dead cosets are compacted away and
the table standardised before it is returned, so the final table is
gap-free and deterministic for fixed inputs and strategy.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .fpgroup import Presentation, Word, cyclic_reduce, free_reduce

DEFAULT_MAX_COSETS = 2_000_000

_FELSCH_STACK_LIMIT = 4096


class CosetLimitError(RuntimeError):
    """Enumeration exceeded the coset limit; the index is unknown at this
    limit (this never means the group is infinite)."""

    def __init__(self, limit: int):
        super().__init__(f"coset enumeration exceeded the limit of {limit} cosets")
        self.limit = limit


class _NeedSpace(Exception):
    pass


@dataclass
class CosetTable:
    """A completed coset table: row per coset, column per generator/inverse.

    Column 2*i is the action of generator i, column 2*i+1 of its inverse.
    """

    presentation: Presentation
    subgroup_generators: tuple[Word, ...]
    table: list[list[int]]
    status: str = "complete"
    strategy: str = "hlt"

    @property
    def n_cosets(self) -> int:
        return len(self.table)

    def generator_permutation(self, i: int) -> tuple[int, ...]:
        """Right-multiplication action of generator i on cosets."""
        return tuple(row[2 * i] for row in self.table)

    def trace(self, coset: int, word: Iterable[int]) -> int:
        for letter in word:
            col = 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1
            coset = self.table[coset][col]
        return coset

    def validate(self) -> None:
        """Check closure, inverse consistency, relator traces and subgroup
        generator fixing; raises AssertionError on any defect."""
        n = len(self.table)
        ncols = 2 * self.presentation.ngens
        for alpha, row in enumerate(self.table):
            assert len(row) == ncols
            for col in range(ncols):
                beta = row[col]
                assert 0 <= beta < n, "table entry out of range"
                assert self.table[beta][col ^ 1] == alpha, "inverse link broken"
        for rel in self.presentation.relators:
            for alpha in range(n):
                assert self.trace(alpha, rel) == alpha, "relator does not close"
        for word in self.subgroup_generators:
            assert self.trace(0, word) == 0, "subgroup generator moves coset 0"


def _word_cols(word: Word) -> tuple[int, ...]:
    return tuple(2 * (l - 1) if l > 0 else 2 * (-l - 1) + 1 for l in word)


def _cols_inverse(cols: Sequence[int]) -> tuple[int, ...]:
    return tuple(c ^ 1 for c in reversed(cols))


def coset_enumeration(
    presentation: Presentation,
    subgroup: Iterable[Word] = (),
    *,
    max_cosets: int = DEFAULT_MAX_COSETS,
    strategy: str = "hlt",
) -> CosetTable:
    """Enumerate the cosets of <subgroup> in the presented group.

    Returns a complete, compacted, standardised table whose row count is
    the index of the subgroup.  Raises :class:`CosetLimitError` when more
    than ``max_cosets`` simultaneous cosets would be required.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    if strategy not in ("hlt", "felsch"):
        raise ValueError(f"unknown strategy {strategy!r}")

    subgroup = tuple(free_reduce(w) for w in subgroup)
    relator_cols = []
    seen = set()
    for rel in presentation.relators:
        rel = cyclic_reduce(rel)
        if rel and rel not in seen:
            seen.add(rel)
            relator_cols.append(_word_cols(rel))
    subgroup_cols = [_word_cols(w) for w in subgroup if w]
    ncols = 2 * presentation.ngens

    table: list[list[int]] = [[-1] * ncols]
    p: list[int] = [0]
    deductions: deque[tuple[int, int]] | None = deque() if strategy == "felsch" else None

    def rep(k: int) -> int:
        r = k
        while p[r] != r:
            r = p[r]
        while p[k] != r:
            p[k], k = r, p[k]
        return r

    def merge(k: int, lam: int, queue: deque) -> None:
        k, lam = rep(k), rep(lam)
        if k != lam:
            mu, v = (k, lam) if k < lam else (lam, k)
            p[v] = mu
            queue.append(v)

    def coincidence(alpha: int, beta: int) -> None:
        queue: deque[int] = deque()
        merge(alpha, beta, queue)
        while queue:
            gamma = queue.popleft()
            row = table[gamma]
            for x in range(ncols):
                delta = row[x]
                if delta < 0:
                    continue
                table[delta][x ^ 1] = -1
                if deductions is not None:
                    deductions.append((delta, x ^ 1))
                mu = rep(gamma)
                nu = rep(delta)
                t = table[mu][x]
                if t >= 0:
                    merge(nu, t, queue)
                else:
                    t = table[nu][x ^ 1]
                    if t >= 0:
                        merge(mu, t, queue)
                    else:
                        table[mu][x] = nu
                        table[nu][x ^ 1] = mu
                        if deductions is not None:
                            deductions.append((mu, x))

    def define(alpha: int, x: int) -> int:
        if len(table) >= max_cosets:
            raise _NeedSpace
        beta = len(table)
        row = [-1] * ncols
        row[x ^ 1] = alpha
        table.append(row)
        p.append(beta)
        table[alpha][x] = beta
        if deductions is not None:
            deductions.append((alpha, x))
        return beta

    def scan(alpha: int, cols: Sequence[int], fill: bool) -> None:
        f, i = alpha, 0
        b, j = alpha, len(cols) - 1
        while True:
            while i <= j:
                t = table[f][cols[i]]
                if t < 0:
                    break
                f = t
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i:
                t = table[b][cols[j] ^ 1]
                if t < 0:
                    break
                b = t
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[f][cols[i]] = b
                table[b][cols[i] ^ 1] = f
                if deductions is not None:
                    deductions.append((f, cols[i]))
                return
            if not fill:
                return
            define(f, cols[i])

    def lookahead() -> None:
        for beta in range(len(table)):
            if p[beta] != beta:
                continue
            for cols in relator_cols:
                scan(beta, cols, fill=False)
                if p[beta] != beta:
                    break

    def compact(current: int) -> int:
        """Drop dead rows; returns the new index of live coset `current`."""
        new_index = {}
        live = []
        for alpha in range(len(table)):
            if p[alpha] == alpha:
                new_index[alpha] = len(live)
                live.append(alpha)
        new_table = []
        for alpha in live:
            row = table[alpha]
            new_row = [-1 if t < 0 else new_index[rep(t)] for t in row]
            new_table.append(new_row)
        table[:] = new_table
        p[:] = list(range(len(live)))
        if deductions is not None:
            deductions.clear()
        return new_index[rep(current)]

    def run_hlt() -> None:
        for cols in subgroup_cols:
            while True:
                try:
                    scan(0, cols, fill=True)
                    break
                except _NeedSpace:
                    lookahead()
                    compact(0)
                    if len(table) >= max_cosets:
                        raise CosetLimitError(max_cosets)
        alpha = 0
        while alpha < len(table):
            if p[alpha] != alpha:
                alpha += 1
                continue
            restart = False
            for cols in relator_cols:
                try:
                    scan(alpha, cols, fill=True)
                except _NeedSpace:
                    lookahead()
                    alpha = compact(alpha)
                    if len(table) >= max_cosets:
                        raise CosetLimitError(max_cosets)
                    restart = True
                    break
                if p[alpha] != alpha:
                    break
            if restart:
                continue
            if p[alpha] == alpha:
                for x in range(ncols):
                    if table[alpha][x] < 0:
                        try:
                            define(alpha, x)
                        except _NeedSpace:
                            lookahead()
                            alpha = compact(alpha)
                            if len(table) >= max_cosets:
                                raise CosetLimitError(max_cosets)
                            restart = True
                            break
                if restart:
                    continue
            alpha += 1

    def run_felsch() -> None:
        by_first: dict[int, list[tuple[int, ...]]] = {x: [] for x in range(ncols)}
        conj_seen = set()
        for cols in relator_cols:
            for variant in (cols, _cols_inverse(cols)):
                n = len(variant)
                for shift in range(n):
                    rot = variant[shift:] + variant[:shift]
                    if rot not in conj_seen:
                        conj_seen.add(rot)
                        by_first[rot[0]].append(rot)

        def process_deductions() -> None:
            assert deductions is not None
            while deductions:
                if len(deductions) > _FELSCH_STACK_LIMIT:
                    deductions.clear()
                    lookahead()
                    continue
                alpha, x = deductions.pop()
                alpha = rep(alpha)
                for cols in by_first[x]:
                    scan(alpha, cols, fill=False)
                    if p[alpha] != alpha:
                        break
                beta = table[rep(alpha)][x] if p[alpha] == alpha else -1
                if beta >= 0 and p[beta] == beta:
                    for cols in by_first[x ^ 1]:
                        scan(beta, cols, fill=False)
                        if p[beta] != beta:
                            break

        for cols in subgroup_cols:
            try:
                scan(0, cols, fill=True)
            except _NeedSpace:
                raise CosetLimitError(max_cosets)
            process_deductions()
        alpha = 0
        while alpha < len(table):
            while p[alpha] == alpha:
                undefined = [x for x in range(ncols) if table[alpha][x] < 0]
                if not undefined:
                    break
                try:
                    define(alpha, undefined[0])
                except _NeedSpace:
                    lookahead()
                    alpha = compact(alpha)
                    if len(table) >= max_cosets:
                        raise CosetLimitError(max_cosets)
                    continue
                process_deductions()
            alpha += 1

    if strategy == "hlt":
        run_hlt()
    else:
        run_felsch()

    final = _compact_final(table, p, rep, ncols)
    _standardize(final, ncols)
    return CosetTable(
        presentation=presentation,
        subgroup_generators=subgroup,
        table=final,
        status="complete",
        strategy=strategy,
    )


def _compact_final(table, p, rep, ncols) -> list[list[int]]:
    new_index = {}
    live = []
    for alpha in range(len(table)):
        if p[alpha] == alpha:
            new_index[alpha] = len(live)
            live.append(alpha)
    out = []
    for alpha in live:
        out.append([new_index[rep(t)] for t in table[alpha]])
    return out


def _standardize(table: list[list[int]], ncols: int) -> None:
    """Relabel cosets in breadth-first visit order from coset 0."""
    n = len(table)
    if n <= 1:
        return
    label = [-1] * n
    label[0] = 0
    nxt = 1
    queue = deque([0])
    while queue:
        alpha = queue.popleft()
        for x in range(ncols):
            beta = table[alpha][x]
            if label[beta] < 0:
                label[beta] = nxt
                nxt += 1
                queue.append(beta)
    new_table = [[0] * ncols for _ in range(n)]
    for alpha in range(n):
        for x in range(ncols):
            new_table[label[alpha]][x] = label[table[alpha][x]]
    table[:] = new_table
