"""Triangular count matrices and the flat-count formulas built from them.

All matrices here are square truncations of infinite unitriangular
matrices, stored with rows indexed by flat dimension k and columns by
ambient dimension n. That is the transpose of the familiar lower-triangular
number-triangle layout, so the matrices are upper triangular; truncation at
any size is exact because no discarded entry can reach a kept one.

The two generators are the Stirling matrices: entry (k, n) of
stirling2_matrix is S(n, k) and of stirling1_matrix is c(n, k), unsigned.
Their product lah_matrix holds the Lah numbers, and the flat counts of the
extended arrangements are matrix words in these:

    shi_triangle(m)     = lah_matrix ** m
    catalan_triangle(m) = lah_matrix ** m  @  stirling2_matrix

so entry (k, n) counts the k-dimensional flats of the n-dimensional
arrangement with parameter m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import DEFAULT_ORDER, factorial


@dataclass(frozen=True)
class Triangle:
    """Upper-triangular matrix of counts T(k, n), 1 <= k, n <= size."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        size = len(self.rows)
        for k0, row in enumerate(self.rows):
            if len(row) != size:
                raise ValueError(f"row {k0 + 1} has length {len(row)}, expected {size}")
            for n0, value in enumerate(row):
                if not isinstance(value, int) or value < 0:
                    raise ValueError(f"entries must be nonnegative integers, got {value!r}")
                if k0 > n0 and value != 0:
                    raise ValueError(f"entry ({k0 + 1}, {n0 + 1}) below the diagonal must be 0")

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, k: int, n: int) -> int:
        """T(k, n) with 1-based indices."""
        if not (1 <= k <= self.size and 1 <= n <= self.size):
            raise ValueError(f"indices ({k}, {n}) outside 1..{self.size}")
        return self.rows[k - 1][n - 1]

    def column(self, n: int) -> tuple[int, ...]:
        """Counts by dimension k = 1..n for the n-dimensional arrangement."""
        if not 1 <= n <= self.size:
            raise ValueError(f"column {n} outside 1..{self.size}")
        return tuple(self.rows[k - 1][n - 1] for k in range(1, n + 1))


def _build(size, entry_fn) -> Triangle:
    return Triangle(
        tuple(
            tuple(entry_fn(k, n) if k <= n else 0 for n in range(1, size + 1))
            for k in range(1, size + 1)
        )
    )


def identity_triangle(size: int) -> Triangle:
    return _build(size, lambda k, n: 1 if k == n else 0)


def stirling2_matrix(size: int = DEFAULT_ORDER) -> Triangle:
    """Entry (k, n) = S(n, k), the number of partitions of [n] into k blocks."""
    if size < 1:
        raise ValueError("size must be at least 1")
    # S(n, k) = S(n-1, k-1) + k * S(n-1, k)
    table = [[0] * (size + 1) for _ in range(size + 1)]
    table[0][0] = 1
    for n in range(1, size + 1):
        for k in range(1, n + 1):
            table[n][k] = table[n - 1][k - 1] + k * table[n - 1][k]
    return _build(size, lambda k, n: table[n][k])


def stirling1_matrix(size: int = DEFAULT_ORDER) -> Triangle:
    """Entry (k, n) = c(n, k), the number of permutations of [n] with k cycles."""
    if size < 1:
        raise ValueError("size must be at least 1")
    # c(n, k) = c(n-1, k-1) + (n-1) * c(n-1, k)
    table = [[0] * (size + 1) for _ in range(size + 1)]
    table[0][0] = 1
    for n in range(1, size + 1):
        for k in range(1, n + 1):
            table[n][k] = table[n - 1][k - 1] + (n - 1) * table[n - 1][k]
    return _build(size, lambda k, n: table[n][k])


def mat_mul(a: Triangle, b: Triangle) -> Triangle:
    """Product in the (k, n) orientation: (AB)(k, n) = sum_j A(k, j) B(j, n)."""
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} vs {b.size}")

    def entry(k, n):
        return sum(a.rows[k - 1][j - 1] * b.rows[j - 1][n - 1] for j in range(k, n + 1))

    return _build(a.size, entry)


def mat_pow(a: Triangle, exponent: int) -> Triangle:
    """exponent-fold product of a with itself; exponent 0 gives the identity."""
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    result = identity_triangle(a.size)
    for _ in range(exponent):
        result = mat_mul(result, a)
    return result


def lah_matrix(size: int = DEFAULT_ORDER) -> Triangle:
    """Entry (k, n) = Lah(n, k), via the Stirling factorization S * c."""
    return mat_mul(stirling2_matrix(size), stirling1_matrix(size))


def shi_triangle(m: int, size: int = DEFAULT_ORDER) -> Triangle:
    """Flat counts of the extended Shi arrangements: the m-th power of the Lah matrix.

    m = 0 is the empty arrangement, whose only flat is the ambient space;
    that extension returns the identity matrix.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return mat_pow(lah_matrix(size), m)


def catalan_triangle(m: int, size: int = DEFAULT_ORDER) -> Triangle:
    """Flat counts of the extended Catalan arrangements: (S c)^m S.

    m = 0 gives the braid arrangement, i.e. the Stirling-2 matrix.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    return mat_mul(mat_pow(lah_matrix(size), m), stirling2_matrix(size))


def shi_count_closed(m: int, n: int, k: int) -> int:
    """Closed form for the k-dimensional flat count of the n-dimensional
    m-extended Shi arrangement: m^(n-k) * n! (n-1)! / (k! (k-1)! (n-k)!)."""
    if m < 1:
        raise ValueError("m must be positive")
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k}, n={n}")
    lah = (factorial(n) * factorial(n - 1)) // (
        factorial(k) * factorial(k - 1) * factorial(n - k)
    )
    return m ** (n - k) * lah


def lah_power_closed(m: int, size: int = DEFAULT_ORDER) -> Triangle:
    """Entry (k, n) = m^(n-k) * Lah(n, k): the closed form of the m-th Lah-matrix power."""
    if m < 1:
        raise ValueError("m must be positive")
    return _build(size, lambda k, n: shi_count_closed(m, n, k))


def total_flats(triangle: Triangle, n: int) -> int:
    """Total number of flats of the n-dimensional arrangement: the n-th column sum."""
    return sum(triangle.column(n))
