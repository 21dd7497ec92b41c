"""Discrete harmonic functions on k-subsets and harmonic weight enumerators.

A function f on the k-subsets of {1..n} is harmonic when its subset
derivative vanishes: for every (k-1)-subset y, the values of f over the
k-subsets containing y sum to zero.  Such an f extends to all subsets by
f~(u) = sum of f over the k-subsets inside u; weighting each codeword of a
binary code by f~(support) gives the harmonic weight enumerator, which is
divisible by (xy)^k, and the quotient obeys a MacWilliams-type transform
whose scale is the exact rational (-1)^k 2^(k - dim C).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm

from .errors import CapacityError
from .gf2 import BinaryCode
from .polynomials import HomPoly2


@lru_cache(maxsize=None)
def ksubsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of {1..n} in colexicographic order."""
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range for n={n}")
    return tuple(sorted(combinations(range(1, n + 1), k), key=lambda s: s[::-1]))


@lru_cache(maxsize=None)
def _subset_index(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(ksubsets(n, k))}


@dataclass(frozen=True)
class HarmonicFn:
    """A rational-valued function on the k-subsets of {1..n}.

    ``values`` is aligned with ksubsets(n, k); instances produced by
    harm_basis are integer-valued with content 1.
    """

    n: int
    k: int
    values: tuple

    def __post_init__(self):
        expected = len(ksubsets(self.n, self.k))
        if len(self.values) != expected:
            raise ValueError(f"expected {expected} values for k-subsets of an {self.n}-set")

    def value(self, subset) -> Fraction | int:
        key = tuple(sorted(subset))
        return self.values[_subset_index(self.n, self.k)[key]]

    def items(self):
        """(subset, value) pairs for the nonzero entries."""
        for s, v in zip(ksubsets(self.n, self.k), self.values):
            if v:
                yield s, v


def derivative(f: HarmonicFn) -> HarmonicFn:
    """The subset derivative, a function on (k-1)-subsets."""
    if f.k == 0:
        raise ValueError("degree-0 functions have no derivative")
    out = [0] * len(ksubsets(f.n, f.k - 1))
    idx = _subset_index(f.n, f.k - 1)
    for s, v in f.items():
        for y in combinations(s, f.k - 1):
            out[idx[y]] += v
    return HarmonicFn(f.n, f.k - 1, tuple(out))


def is_harmonic(f: HarmonicFn) -> bool:
    return f.k == 0 or all(v == 0 for v in derivative(f).values)


@lru_cache(maxsize=None)
def harm_basis(n: int, k: int) -> tuple[HarmonicFn, ...]:
    """Basis of the harmonic space, by exact kernel computation.

    Fraction-free elimination over the integers; basis vectors are scaled to
    integer entries with content 1, first nonzero entry positive, ordered by
    their free column.  For 1 <= k <= n/2 the basis has C(n,k) - C(n,k-1)
    elements.
    """
    if k < 0 or k > n:
        raise ValueError(f"k={k} out of range for n={n}")
    if k == 0:
        return (HarmonicFn(n, 0, (1,)),)
    cols = ksubsets(n, k)
    col_idx = _subset_index(n, k)
    rows = ksubsets(n, k - 1)
    nc = len(cols)
    mat: list[list[int]] = []
    for y in rows:
        row = [0] * nc
        member = set(y)
        for p in range(1, n + 1):
            if p not in member:
                row[col_idx[tuple(sorted(y + (p,)))]] = 1
        mat.append(row)
    rank, piv_cols = _bareiss_forward(mat)
    free = sorted(set(range(nc)) - set(piv_cols))
    basis = []
    for fc in free:
        vec = _kernel_vector(mat, piv_cols, rank, nc, fc)
        basis.append(HarmonicFn(n, k, vec))
    return tuple(basis)


def _bareiss_forward(mat: list[list[int]]) -> tuple[int, list[int]]:
    """In-place fraction-free forward elimination; returns (rank, pivot cols)."""
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    piv_cols: list[int] = []
    r = 0
    prev = 1
    for c in range(nc):
        p = next((i for i in range(r, nr) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        pivot_row = mat[r]
        pivot = pivot_row[c]
        for i in range(r + 1, nr):
            factor = mat[i][c]
            if factor:
                mat[i] = [(pivot * a - factor * b) // prev for a, b in zip(mat[i], pivot_row)]
            elif prev != pivot:
                mat[i] = [(pivot * a) // prev for a in mat[i]]
        prev = pivot
        piv_cols.append(c)
        r += 1
        if r == nr:
            break
    return r, piv_cols


def _kernel_vector(mat, piv_cols, rank, nc, free_col) -> tuple[int, ...]:
    vec = [Fraction(0)] * nc
    vec[free_col] = Fraction(1)
    for i in reversed(range(rank)):
        c = piv_cols[i]
        row = mat[i]
        acc = Fraction(0)
        for j in range(c + 1, nc):
            if row[j] and vec[j]:
                acc += row[j] * vec[j]
        vec[c] = -acc / row[c]
    den = 1
    for x in vec:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def tilde(f: HarmonicFn, subset) -> Fraction | int:
    """f~(u): sum of f over the k-subsets of u (zero when |u| < k)."""
    u = tuple(sorted(subset))
    if len(u) < f.k:
        return 0
    idx = _subset_index(f.n, f.k)
    values = f.values
    return sum(values[idx[z]] for z in combinations(u, f.k))


@lru_cache(maxsize=512)
def subset_weight_table(code: BinaryCode, k: int, cap: int | None = None):
    """For each k-subset z: {weight w: number of weight-w codewords covering z}.

    One enumeration pass; the table turns every harmonic-enumerator
    computation on this code into a sparse dot product.
    """
    table: dict[tuple[int, ...], dict[int, int]] = {}
    for weight, sups in code.supports_by_weight(cap).items():
        if weight < k:
            continue
        for sup in sups:
            for z in combinations(sup, k):
                per = table.setdefault(z, {})
                per[weight] = per.get(weight, 0) + 1
    return table


def harmonic_enumerator(code: BinaryCode, f: HarmonicFn, cap: int | None = None) -> HomPoly2:
    """The enumerator sum over codewords of f~(support) x^(n-w) y^w."""
    if f.n != code.n:
        raise ValueError(f"harmonic function on {f.n} points, code of length {code.n}")
    table = subset_weight_table(code, f.k, cap)
    coeffs = [0] * (code.n + 1)
    if f.k == 0:
        scale = f.values[0]
        for w, count in enumerate(code.weight_distribution(cap)):
            coeffs[w] = scale * count
        return HomPoly2.from_counts(coeffs)
    for z, v in f.items():
        per = table.get(z)
        if per:
            for w, count in per.items():
                coeffs[w] += v * count
    return HomPoly2.from_counts(coeffs)


def bachoc_z(w_poly: HomPoly2, k: int) -> HomPoly2:
    """Strip the guaranteed (xy)^k factor from a harmonic enumerator."""
    return w_poly.divide_xy(k)


def bachoc_transform(z: HomPoly2, k: int, code_dim: int, n: int | None = None) -> HomPoly2:
    """Transform Z of the code into Z of the dual code.

    Substituting ((x+y)/sqrt2, (x-y)/sqrt2) into a homogeneous polynomial of
    degree n-2k and multiplying by (-1)^k 2^(n/2)/2^code_dim collapses to the
    exact rational scale (-1)^k 2^(k-code_dim); no irrational number is ever
    touched.
    """
    if n is not None and z.degree != n - 2 * k:
        raise ValueError(f"degree {z.degree} inconsistent with n={n}, k={k}")
    scale = Fraction((-1) ** k * 2**k, 2**code_dim)
    return z.substitute_linear(1, 1, 1, -1, scale=scale)
