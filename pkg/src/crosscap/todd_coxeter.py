"""Bounded coset enumeration (HLT strategy, no lookahead).

Cosets are numbered in order of definition; the same input always produces
the same table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .presentation import Presentation, Word

DEFAULT_MAX_COSETS = 10**5


@dataclass(frozen=True)
class Index:
    value: int


@dataclass(frozen=True)
class OutOfBounds:
    max_cosets: int


class _Overflow(Exception):
    pass


class CosetTable:
    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1

    def define(self, c: int, x: int) -> int:
        if self.live >= self.max:
            raise _Overflow
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        return d

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        k = 0
        while k < len(queue):
            e = queue[k]
            k += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f is None:
                    continue
                if self.table[f][x ^ 1] == e:
                    self.table[f][x ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] is not None:
                    self._merge(f1, self.table[e1][x], queue)
                elif self.table[f1][x ^ 1] is not None:
                    self._merge(e1, self.table[f1][x ^ 1], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][x ^ 1] = e1

    def scan_and_fill(self, c: int, w: Sequence[int]) -> None:
        t = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and t[f][w[i]] is not None:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][w[j] ^ 1] is not None:
                b = t[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])


def _encode(p: Presentation, w: Word) -> list[int]:
    col = {g: k for k, g in enumerate(p.generators)}
    try:
        return [2 * col[n] + (0 if e == 1 else 1) for n, e in w]
    except KeyError as exc:
        raise ValueError(f"unknown generator {exc}") from None


def todd_coxeter(
    p: Presentation, subgroup: Sequence[Word] = (), max_cosets: int = DEFAULT_MAX_COSETS
) -> Union[Index, OutOfBounds]:
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    ct = CosetTable(len(p.generators), max_cosets)
    rels = [_encode(p, r) for r in p.relators if r]
    subs = [_encode(p, w) for w in subgroup if w]
    try:
        for w in subs:
            ct.scan_and_fill(0, w)
        c = 0
        while c < len(ct.table):
            for r in rels:
                if ct.parent[c] != c:
                    break
                ct.scan_and_fill(c, r)
            if ct.parent[c] == c:
                for x in range(ct.ncols):
                    if ct.table[c][x] is None:
                        ct.define(c, x)
            c += 1
    except _Overflow:
        return OutOfBounds(max_cosets)
    return Index(ct.live)
