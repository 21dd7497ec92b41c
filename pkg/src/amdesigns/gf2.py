"""Binary linear codes as packed-integer row spaces.

Codewords are Python ints used as bitsets: bit j (value 1 << j) is coordinate
j + 1.  Generator matrices are kept in reduced row echelon form, which makes
code equality plain tuple equality.  Enumeration walks the 2^k span in
Gray-code order (one row XOR per step); large spans are handed to a blocked
numpy path that XORs whole tables of packed words at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import CapacityError, ParseError
from .polynomials import HomPoly2, macwilliams

#: Refuse to enumerate more than 2^ENUMERATION_CAP codewords by default.
ENUMERATION_CAP = 28

# pure-Python Gray walk below this many rows, numpy blocks above
_NUMPY_THRESHOLD = 16
_LOW_BLOCK_BITS = 16


def rref(rows, n: int) -> tuple[int, ...]:
    """Reduced row echelon form of packed rows; returns rows sorted by pivot."""
    reduced: list[int] = []
    pivots: list[int] = []
    for row in rows:
        if row >> n:
            raise ValueError(f"row 0b{row:b} has bits beyond column {n}")
        for piv, r in zip(pivots, reduced):
            if (row >> piv) & 1:
                row ^= r
        if row == 0:
            continue
        piv = (row & -row).bit_length() - 1
        for i, (p, r) in enumerate(zip(pivots, reduced)):
            if (r >> piv) & 1:
                reduced[i] = r ^ row
        pivots.append(piv)
        reduced.append(row)
    order = sorted(range(len(pivots)), key=lambda i: pivots[i])
    return tuple(reduced[i] for i in order)


@dataclass(frozen=True)
class BinaryCode:
    """A binary [n, k] linear code, canonically represented.

    ``rows`` is the reduced-row-echelon generator, ordered by pivot column,
    so two codes are equal iff their dataclass fields are equal.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("code length must be positive")
        canonical = rref(self.rows, self.n)
        if canonical != tuple(self.rows):
            object.__setattr__(self, "rows", canonical)

    @classmethod
    def from_rows(cls, rows, n: int) -> BinaryCode:
        """Code spanned by arbitrary packed rows; dependent rows reduce k."""
        return cls(n, tuple(rows))

    @classmethod
    def from_text(cls, text: str) -> BinaryCode:
        """Parse a generator matrix: one row of '0'/'1' per line.

        Blank lines and '#' comments are ignored.  Ragged rows, stray
        characters and empty input raise ParseError naming the line.
        """
        rows = []
        width = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if set(line) - {"0", "1"}:
                bad = next(ch for ch in line if ch not in "01")
                raise ParseError(f"line {lineno}: invalid character {bad!r} in generator row")
            if width is None:
                width = len(line)
            elif len(line) != width:
                raise ParseError(
                    f"line {lineno}: row has {len(line)} columns, expected {width}"
                )
            rows.append(sum(1 << j for j, ch in enumerate(line) if ch == "1"))
        if width is None:
            raise ParseError("line 1: no generator rows found")
        return cls(width, tuple(rows))

    @classmethod
    def from_file(cls, path) -> BinaryCode:
        with open(path, encoding="ascii") as fh:
            return cls.from_text(fh.read())

    # ---- basic parameters -------------------------------------------------

    @property
    def k(self) -> int:
        return len(self.rows)

    @cached_property
    def contains_all_ones(self) -> bool:
        word = (1 << self.n) - 1
        for row in self.rows:
            piv = (row & -row).bit_length() - 1
            if (word >> piv) & 1:
                word ^= row
        return word == 0

    def __contains__(self, word: int) -> bool:
        for row in self.rows:
            piv = (row & -row).bit_length() - 1
            if (word >> piv) & 1:
                word ^= row
        return word == 0

    def generator_text(self) -> str:
        return "\n".join(
            "".join("1" if (row >> j) & 1 else "0" for j in range(self.n))
            for row in self.rows
        )

    def __repr__(self) -> str:
        return f"BinaryCode[{self.n},{self.k}]"

    # ---- duality ----------------------------------------------------------

    def dual(self) -> BinaryCode:
        """The [n, n-k] code of all vectors orthogonal to this one."""
        pivots = [(row & -row).bit_length() - 1 for row in self.rows]
        pivot_set = set(pivots)
        free = [c for c in range(self.n) if c not in pivot_set]
        dual_rows = []
        for f in free:
            word = 1 << f
            for piv, row in zip(pivots, self.rows):
                if (row >> f) & 1:
                    word |= 1 << piv
            dual_rows.append(word)
        return BinaryCode(self.n, tuple(dual_rows))

    # ---- enumeration ------------------------------------------------------

    def _check_cap(self, side: int, cap: int | None) -> None:
        cap = ENUMERATION_CAP if cap is None else cap
        if side > cap:
            raise CapacityError(
                f"enumeration of 2^{side} codewords exceeds cap 2^{cap}"
            )

    def codewords(self, cap: int | None = None):
        """Yield all 2^k codewords as packed ints, Gray-code order."""
        self._check_cap(self.k, cap)
        word = 0
        yield word
        for i in range(1, 1 << self.k):
            word ^= self.rows[(i & -i).bit_length() - 1]
            yield word

    def weight_distribution(self, cap: int | None = None) -> tuple[int, ...]:
        """Exact counts A_0..A_n of codewords by weight.

        Enumerates whichever of the code and its dual is smaller and, when
        the dual side was walked, converts back through the MacWilliams
        transform.
        """
        side = min(self.k, self.n - self.k)
        self._check_cap(side, cap)
        if self.k <= self.n - self.k:
            return _weight_counts(self.rows, self.n)
        dual_counts = _weight_counts(self.dual().rows, self.n)
        dual_poly = HomPoly2.from_counts(dual_counts)
        return tuple(macwilliams(dual_poly, self.n - self.k).coeffs)

    def minimum_distance(self, cap: int | None = None) -> int:
        """Smallest positive weight; the zero code has none."""
        if self.k == 0:
            raise ValueError("no nonzero codeword")
        counts = self.weight_distribution(cap)
        return next(i for i in range(1, self.n + 1) if counts[i])

    def codewords_of_weight(self, w: int, cap: int | None = None) -> list[frozenset[int]]:
        """Supports (1-based coordinate sets) of all weight-w codewords."""
        if not 0 <= w <= self.n:
            raise ValueError(f"weight {w} out of range 0..{self.n}")
        self._check_cap(self.k, cap)
        out = []
        for word in self.codewords(cap):
            if word.bit_count() == w:
                out.append(frozenset(_support(word)))
        return out

    def supports_by_weight(self, cap: int | None = None) -> dict[int, list[tuple[int, ...]]]:
        """One enumeration pass grouping every support by its weight."""
        self._check_cap(self.k, cap)
        out: dict[int, list[tuple[int, ...]]] = {}
        for word in self.codewords(cap):
            out.setdefault(word.bit_count(), []).append(tuple(_support(word)))
        return out


def _support(word: int) -> list[int]:
    sup = []
    while word:
        low = word & -word
        sup.append(low.bit_length())
        word ^= low
    return sup


def _weight_counts(rows, n: int) -> tuple[int, ...]:
    k = len(rows)
    if k <= _NUMPY_THRESHOLD:
        counts = [0] * (n + 1)
        counts[0] = 1
        word = 0
        for i in range(1, 1 << k):
            word ^= rows[(i & -i).bit_length() - 1]
            counts[word.bit_count()] += 1
        return tuple(counts)
    return _weight_counts_numpy(rows, n)


def _pack_words(value: int, n_words: int) -> list[int]:
    mask = (1 << 64) - 1
    return [(value >> (64 * t)) & mask for t in range(n_words)]


def _weight_counts_numpy(rows, n: int) -> tuple[int, ...]:
    """Blocked Gray enumeration: a 2^k1 table XORed against 2^(k-k1) offsets."""
    k = len(rows)
    k1 = min(k, _LOW_BLOCK_BITS)
    n_words = (n + 63) // 64
    table = np.zeros((1, n_words), dtype=np.uint64)
    for row in rows[:k1]:
        packed = np.array(_pack_words(row, n_words), dtype=np.uint64)
        table = np.concatenate([table, table ^ packed])
    counts = np.zeros(n + 1, dtype=np.int64)
    high_rows = rows[k1:]
    offset = 0
    for i in range(1 << (k - k1)):
        if i:
            offset ^= high_rows[(i & -i).bit_length() - 1]
        packed = np.array(_pack_words(offset, n_words), dtype=np.uint64)
        weights = np.bitwise_count(table ^ packed).sum(axis=1, dtype=np.int64)
        counts += np.bincount(weights, minlength=n + 1)
    return tuple(int(c) for c in counts)
