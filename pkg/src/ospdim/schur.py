"""gl(n) dimensions, gl(m|n) superdimensions, Littlewood-Richardson
coefficients and exact Schur polynomial evaluation.

The three gl(n) dimension formulas (Weyl product, hook-content, Frobenius
coordinates) are kept as genuinely separate code paths so they can be played
against each other in tests; none of them is defined in terms of another.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

from .partitions import FrobeniusForm, Partition, subpartitions


def dim_gl_weyl(n: int, lam: Partition) -> int:
    """Dimension of the gl(n) irrep with highest weight lam, as the Weyl
    product over pairs i < j of (lam_i - lam_j + j - i)/(j - i).

    The weight is padded with zeros to length n; a partition longer than n
    rows is not a gl(n) highest weight and gives 0.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if len(lam) > n:
        return 0
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0, f"Weyl product for {lam!r}, n={n} did not divide evenly"
    return q


def dim_gl_hook(n: int, lam: Partition) -> int:
    """The same dimension as the hook-content product: for every box (i,j)
    a factor (n + j - i) over the box's hook length.

    A content factor vanishes as soon as the diagram has more than n rows,
    so overlong partitions give 0 without a special case.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    num = 1
    den = 1
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            num *= n + j - i
            den *= lam.hook_length(i, j)
    q, r = divmod(num, den)
    assert r == 0, f"hook-content product for {lam!r}, n={n} did not divide evenly"
    return q


def dim_gl_frobenius(n: int, form: FrobeniusForm) -> int:
    """The same dimension from Frobenius coordinates (a | b):

        prod_k (n + a_k)! / (n - b_k - 1)!
        * prod_{k<l} (a_k - a_l)(b_k - b_l)
        / ( prod_k a_k! b_k!  *  prod_{k,l} (a_k + b_l + 1) )

    Any leg of length n or more means more than n rows, hence 0.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    arms, legs = form.arms, form.legs
    if any(b >= n for b in legs):
        return 0
    num = 1
    for a, b in zip(arms, legs):
        num *= factorial(n + a) // factorial(n - b - 1)
    r = form.rank
    for k in range(r):
        for l in range(k + 1, r):
            num *= (arms[k] - arms[l]) * (legs[k] - legs[l])
    den = 1
    for a, b in zip(arms, legs):
        den *= factorial(a) * factorial(b)
    for a in arms:
        for b in legs:
            den *= a + b + 1
    q, rem = divmod(num, den)
    assert rem == 0, f"Frobenius product for {form!r}, n={n} did not divide evenly"
    return q


def sdim_gl(m: int, n: int, lam: Partition) -> int:
    """Superdimension of the covariant gl(m|n) irrep labelled by lam.

    For m = n + k the value is the gl(k) dimension of lam; for n = m + k it
    is (-1)**|lam| times the gl(k) dimension of the conjugate.  Both
    branches vanish outside the (m,n) fat hook, and for m = n every
    non-empty lam gives 0.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    if m >= n:
        k = m - n
        if k == 0:
            return 1 if lam.weight == 0 else 0
        return dim_gl_weyl(k, lam)
    k = n - m
    sign = -1 if lam.weight % 2 else 1
    return sign * dim_gl_weyl(k, lam.conjugate())


# -- Littlewood-Richardson coefficients -------------------------------------

_LR_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], dict[tuple[int, ...], int]] = {}


def lr_expansion(outer: Partition, inner: Partition) -> Mapping[tuple[int, ...], int]:
    """Multiplicities of every content nu in the skew Schur expansion
    s_{outer/inner} = sum_nu c^{outer}_{inner,nu} s_nu.

    Contents are counted by enumerating Littlewood-Richardson fillings of
    the skew diagram: semistandard, with the reverse reading word (rows read
    right to left, top to bottom) a lattice word.  Filling the boxes in
    reverse reading order lets every constraint be checked incrementally.
    Results are cached; treat the returned mapping as read-only.
    """
    key = (outer.parts, inner.parts)
    cached = _LR_CACHE.get(key)
    if cached is not None:
        return cached
    if not outer.contains(inner):
        _LR_CACHE[key] = {}
        return _LR_CACHE[key]

    nrows = len(outer)
    cells = [
        (i, j)
        for i in range(nrows)
        for j in range(outer[i] - 1, inner[i] - 1, -1)
    ]
    grid = [[0] * outer[i] for i in range(nrows)]
    counts = [0] * (nrows + 1)  # counts[v] = copies of value v placed so far
    found: dict[tuple[int, ...], int] = {}

    def fill(pos: int) -> None:
        if pos == len(cells):
            content = counts[1:]
            while content and content[-1] == 0:
                content.pop()
            t = tuple(content)
            found[t] = found.get(t, 0) + 1
            return
        i, j = cells[pos]
        hi = i + 1  # a Littlewood-Richardson filling has entries <= row index
        if j + 1 < outer[i]:
            hi = min(hi, grid[i][j + 1])
        if i > 0 and j < outer[i - 1] and j >= inner[i - 1]:
            lo = grid[i - 1][j] + 1
        else:
            lo = 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # would break the lattice property
            grid[i][j] = v
            counts[v] += 1
            fill(pos + 1)
            counts[v] -= 1
        grid[i][j] = 0

    fill(0)
    _LR_CACHE[key] = found
    return found


def lr_coefficient(outer: Partition, inner: Partition, content: Partition) -> int:
    """The Littlewood-Richardson coefficient c^{outer}_{inner, content}."""
    if not outer.contains(inner):
        return 0
    if inner.weight + content.weight != outer.weight:
        return 0
    return lr_expansion(outer, inner).get(content.parts, 0)


# -- exact Schur evaluation --------------------------------------------------


def _complete_homogeneous(xs: Sequence[Fraction], top: int) -> list[Fraction]:
    """h_0 .. h_top of the given variables, by adding one variable at a time
    via h_k(x, y..) = h_k(y..) + x * h_{k-1}(x, y..)."""
    hs = [Fraction(0)] * (top + 1)
    hs[0] = Fraction(1)
    for x in xs:
        for k in range(1, top + 1):
            hs[k] += x * hs[k - 1]
    return hs


def _det(mat: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(mat)
    sign = 1
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            sign = -sign
        p = mat[col][col]
        det *= p
        for r in range(col + 1, n):
            if mat[r][col]:
                f = mat[r][col] / p
                for c in range(col, n):
                    mat[r][c] -= f * mat[col][c]
    return det * sign


def schur_eval(lam: Partition, xs: Sequence) -> Fraction:
    """Exact value of the Schur polynomial s_lam at the given coordinates.

    Evaluated as the Jacobi-Trudi determinant det(h_{lam_i - i + j}) in the
    complete homogeneous polynomials, which stays well defined at repeated
    coordinates where the bialternant quotient degenerates to 0/0.
    """
    xs = [Fraction(x) for x in xs]
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    if ell > len(xs):
        return Fraction(0)
    top = lam[0] + ell - 1
    hs = _complete_homogeneous(xs, top)

    def h(k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        return hs[k]

    mat = [[h(lam[i] - (i + 1) + (j + 1)) for j in range(ell)] for i in range(ell)]
    return _det(mat)


def super_schur_eval(lam: Partition, xs: Sequence, ys: Sequence) -> Fraction:
    """Exact value of the supersymmetric Schur polynomial s_lam(x | y),
    expanded as sum over mu, nu of c^lam_{mu,nu} s_mu(x) s_{nu'}(y).

    Vanishes unless lam fits in the (m,n) fat hook, i.e. lam_{m+1} <= n.
    """
    xs = [Fraction(x) for x in xs]
    ys = [Fraction(y) for y in ys]
    m, n = len(xs), len(ys)
    if lam[m] > n:
        return Fraction(0)
    total = Fraction(0)
    for mu in subpartitions(lam, max_len=m):
        sx = schur_eval(mu, xs)
        if sx == 0:
            continue
        for nu_parts, c in lr_expansion(lam, mu).items():
            if nu_parts and nu_parts[0] > n:
                continue  # conjugate would need more than n variables
            sy = schur_eval(Partition(nu_parts).conjugate(), ys)
            if sy:
                total += c * sx * sy
    return total
