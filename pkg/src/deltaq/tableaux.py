"""Semistandard tableaux and the charge statistic."""

from __future__ import annotations

from functools import lru_cache

from .partition import Partition


@lru_cache(maxsize=None)
def ssyt(shape: Partition, content: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All semistandard tableaux of the given shape and content, as row tuples.

    Rows weakly increase left to right, columns strictly increase downward,
    value i appears content[i-1] times.
    """
    shape = Partition(shape)
    content = tuple(content)
    if shape.size != sum(content):
        return ()
    nvals = len(content)
    remaining = list(content)
    rows = [[0] * p for p in shape]
    found: list[tuple[tuple[int, ...], ...]] = []

    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]

    def fill(idx: int) -> None:
        if idx == len(cells):
            found.append(tuple(tuple(r) for r in rows))
            return
        i, j = cells[idx]
        lo = rows[i][j - 1] if j else 1
        if i:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, nvals + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                rows[i][j] = v
                fill(idx + 1)
                remaining[v - 1] += 1
        rows[i][j] = 0

    fill(0)
    return tuple(found)


def reading_word(tab) -> tuple[int, ...]:
    """Rows read left to right, bottom row first."""
    word: list[int] = []
    for row in reversed(tab):
        word.extend(row)
    return tuple(word)


def charge(word) -> int:
    """Lascoux-Schutzenberger charge of a word whose content is a partition.

    Repeatedly extract a standard subword: take the rightmost 1, then scan
    leftward (cyclically) for a 2, then a 3, and so on.  Each letter whose
    scan wraps around the left end increments the running index; charge is
    the sum of the indices over all letters of all extracted subwords.
    """
    w = list(word)
    total = 0
    while w:
        top = max(w)
        pos = max(i for i, v in enumerate(w) if v == 1)
        chosen = [pos]
        index = 0
        for letter in range(2, top + 1):
            j = pos - 1
            wrapped = False
            while True:
                if j < 0:
                    j = len(w) - 1
                    wrapped = True
                if w[j] == letter:
                    break
                j -= 1
            if wrapped:
                index += 1
            total += index
            chosen.append(j)
            pos = j
        for j in sorted(chosen, reverse=True):
            del w[j]
    return total


@lru_cache(maxsize=None)
def kostka_number(shape: Partition, content: Partition) -> int:
    return len(ssyt(Partition(shape), Partition(content)))
