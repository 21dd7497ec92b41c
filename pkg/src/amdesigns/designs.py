"""Block designs, t-design verification, and support-design strength.

A BlockDesign is a point set {1..v} with distinct equal-size blocks.  The
direct t-design test counts, block side, how often each t-subset of points is
covered; the harmonic test checks instead that the extended harmonic
functions sum to zero over the blocks for every degree up to t.  The two must
agree, and the test suite holds them to that.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from collections import Counter
from math import comb

from .errors import ParseError
from .gf2 import BinaryCode
from .harmonics import harm_basis, ksubsets, tilde


@dataclass(frozen=True)
class BlockDesign:
    """Points {1..v} plus distinct blocks of one common size."""

    v: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.v <= 0:
            raise ValueError("point count must be positive")
        if not self.blocks:
            raise ValueError("design has no blocks")
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        sizes = {len(b) for b in blocks}
        if len(sizes) != 1:
            raise ValueError(f"blocks have mixed sizes {sorted(sizes)}")
        kb = sizes.pop()
        if not 0 < kb <= self.v:
            raise ValueError(f"block size {kb} out of range 1..{self.v}")
        if len(set(blocks)) != len(blocks):
            raise ValueError("blocks must be pairwise distinct")
        for b in blocks:
            if b[0] < 1 or b[-1] > self.v or len(set(b)) != len(b):
                raise ValueError(f"block {b} is not a subset of 1..{self.v}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_text(cls, text: str) -> BlockDesign:
        """Parse the design file format: 'v=<int>' then one block per line."""
        lines = text.splitlines()
        v = None
        blocks = []
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if v is None:
                if not line.startswith("v="):
                    raise ParseError(f"line {lineno}: expected header 'v=<integer>'")
                try:
                    v = int(line[2:])
                except ValueError:
                    raise ParseError(f"line {lineno}: bad point count {line[2:]!r}") from None
                continue
            try:
                block = tuple(int(tok) for tok in line.split())
            except ValueError:
                raise ParseError(f"line {lineno}: blocks must be space-separated integers") from None
            blocks.append(block)
        if v is None:
            raise ParseError("line 1: missing 'v=<integer>' header")
        if not blocks:
            raise ParseError("line 1: design file has no blocks")
        try:
            return cls(v, tuple(blocks))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def from_file(cls, path) -> BlockDesign:
        with open(path, encoding="ascii") as fh:
            return cls.from_text(fh.read())

    def __repr__(self) -> str:
        return f"BlockDesign(v={self.v}, b={self.num_blocks}, k={self.block_size})"


@dataclass(frozen=True)
class DesignCheck:
    """Outcome of a t-design test: the common lambda, or a witness pair."""

    is_design: bool
    t: int
    lam: int | None = None
    witness: tuple | None = None  # ((subset, count), (subset, count))


def _coverage_counts(design: BlockDesign, t: int) -> Counter:
    return Counter(chain.from_iterable(combinations(b, t) for b in design.blocks))


def is_t_design_direct(design: BlockDesign, t: int) -> DesignCheck:
    """Count containing blocks for every t-subset of points.

    Returns the common count lambda, or a witness pair of t-subsets with
    unequal counts.
    """
    if not 0 <= t <= design.block_size:
        raise ValueError(f"t={t} out of range 0..{design.block_size}")
    if t == 0:
        return DesignCheck(True, 0, lam=design.num_blocks)
    counts = _coverage_counts(design, t)
    total = comb(design.v, t)
    if len(counts) == total:
        lo_key, lo = min(counts.items(), key=lambda kv: kv[1])
        hi_key, hi = max(counts.items(), key=lambda kv: kv[1])
        if lo == hi:
            return DesignCheck(True, t, lam=lo)
        return DesignCheck(False, t, witness=((lo_key, lo), (hi_key, hi)))
    uncovered = next(
        s for s in combinations(range(1, design.v + 1), t) if s not in counts
    )
    hi_key, hi = max(counts.items(), key=lambda kv: kv[1])
    return DesignCheck(False, t, witness=((uncovered, 0), (hi_key, hi)))


def is_t_design_harmonic(design: BlockDesign, t: int, basis_provider=harm_basis) -> bool:
    """Decide the t-design property through the harmonic kernel criterion.

    The design is a t-design iff, for every degree 1 <= k <= t and every
    basis function of that degree, the extensions f~ sum to zero over the
    blocks.
    """
    if not 0 <= t <= design.block_size:
        raise ValueError(f"t={t} out of range 0..{design.block_size}")
    for k in range(1, t + 1):
        cover = _coverage_counts(design, k)
        subsets = ksubsets(design.v, k)
        for f in basis_provider(design.v, k):
            total = sum(f.values[i] * cover[z] for i, z in enumerate(subsets) if z in cover)
            if total != 0:
                return False
    return True


def design_strength(design: BlockDesign, max_t: int | None = None) -> int:
    """Largest t for which the design is a t-design (0: not even a 1-design).

    Strength is capped at the block size; the scan stops at the first
    failing t, using the lambda divisibility identity b*C(k,t) = lam*C(v,t)
    as a cheap rejection before counting.
    """
    limit = design.block_size if max_t is None else min(max_t, design.block_size)
    if design.num_blocks == 1 and design.block_size == design.v:
        return limit  # the single full block covers every t-subset once
    strength = 0
    for t in range(1, limit + 1):
        if (design.num_blocks * comb(design.block_size, t)) % comb(design.v, t):
            break
        if not is_t_design_direct(design, t).is_design:
            break
        strength = t
    return strength


def support_design(code: BinaryCode, w: int, cap: int | None = None) -> BlockDesign:
    """Design whose blocks are the supports of the weight-w codewords."""
    if not 0 < w <= code.n:
        raise ValueError(f"weight {w} out of range 1..{code.n}")
    sups = code.codewords_of_weight(w, cap)
    if not sups:
        raise ValueError(f"no codewords of weight {w}: empty support design")
    return BlockDesign(code.n, tuple(tuple(sorted(s)) for s in sups))


def complementary_design(design: BlockDesign) -> BlockDesign:
    """Design of the block complements (invalid when a block is everything)."""
    points = frozenset(range(1, design.v + 1))
    return BlockDesign(design.v, tuple(tuple(sorted(points - set(b))) for b in design.blocks))


def is_self_complementary(design: BlockDesign) -> bool:
    if 2 * design.block_size != design.v:
        return False
    return set(complementary_design(design).blocks) == set(design.blocks)


def derived_design(design: BlockDesign, p: int) -> BlockDesign:
    """Blocks through p, with p removed; points renumbered to {1..v-1}."""
    if not 1 <= p <= design.v:
        raise ValueError(f"point {p} out of range 1..{design.v}")
    kept = [b for b in design.blocks if p in b]
    if not kept:
        raise ValueError(f"point {p} lies in no block: empty derived design")
    relabel = lambda q: q if q < p else q - 1
    return BlockDesign(
        design.v - 1,
        tuple(tuple(sorted(relabel(q) for q in b if q != p)) for b in kept),
    )


def intersection_numbers(design: BlockDesign) -> set[int]:
    """Sizes of pairwise intersections of distinct blocks."""
    if design.num_blocks < 2:
        raise ValueError("need at least two blocks for intersection numbers")
    sets = [frozenset(b) for b in design.blocks]
    out = set()
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            out.add(len(a & b))
    return out


@dataclass(frozen=True)
class DesignReport:
    """Per-weight support-design strengths of a code, with the min and max.

    The full weight w = n (the single all-ones block, trivially a design of
    every strength) appears in ``strengths`` but is excluded from the
    delta/s aggregation; ``aggregated_weights`` lists what was aggregated.
    """

    strengths: dict[int, int]
    delta: int
    s: int
    aggregated_weights: tuple[int, ...]


def delta_s(code: BinaryCode, cap: int | None = None, max_t: int | None = None) -> DesignReport:
    """Design strength of every nonempty support design, plus delta and s."""
    by_weight = code.supports_by_weight(cap)
    weights = sorted(w for w in by_weight if w > 0)
    aggregated = tuple(w for w in weights if w < code.n)
    if not aggregated:
        raise ValueError("code has no nonzero weight below n")
    strengths = {}
    for w in weights:
        design = BlockDesign(code.n, tuple(by_weight[w]))
        strengths[w] = design_strength(design, max_t=max_t)
    return DesignReport(
        strengths=strengths,
        delta=min(strengths[w] for w in aggregated),
        s=max(strengths[w] for w in aggregated),
        aggregated_weights=aggregated,
    )
