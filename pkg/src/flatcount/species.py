"""Counting sequences of species and their algebra.

A species is represented here only through its counting sequence
a_0, ..., a_N (the number of structures on each label-set size, truncated
at order N). Sum and product act on sequences the way they act on
exponential generating functions; composition F o G is computed through
partial Bell polynomials,

    (F o G)_n = sum_k f_k * B_{n,k}(g_1, g_2, ...),

which also gives the Bell transform of a sequence as a Triangle. All values
are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import DEFAULT_ORDER, binomial, factorial
from .triangles import Triangle


class CompositionConstantTerm(ValueError):
    """Composition inner operand has a nonzero constant term."""


@dataclass(frozen=True)
class CountSeq:
    """Exact counting sequence a_0..a_N of a species, truncated at order N."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a counting sequence needs at least the order-0 coefficient")
        for a in self.coeffs:
            if not isinstance(a, int) or a < 0:
                raise ValueError(f"coefficients must be nonnegative integers, got {a!r}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def truncate(self, order: int) -> "CountSeq":
        """Restriction to a lower order."""
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return CountSeq(self.coeffs[: order + 1])

    def __add__(self, other: "CountSeq") -> "CountSeq":
        _same_order(self, other)
        return CountSeq(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "CountSeq") -> "CountSeq":
        # EGF product: h_n = sum_i C(n, i) f_i g_{n-i}
        _same_order(self, other)
        return CountSeq(
            tuple(
                sum(binomial(n, i) * self.coeffs[i] * other.coeffs[n - i] for i in range(n + 1))
                for n in range(self.order + 1)
            )
        )

    def compose(self, inner: "CountSeq") -> "CountSeq":
        """Counting sequence of the substitution self o inner.

        The inner sequence must have a_0 = 0; the order-0 coefficient of the
        result is the outer a_0 (the unique structure on the empty set, when
        the outer species has one).
        """
        _same_order(self, inner)
        if inner.coeffs[0] != 0:
            raise CompositionConstantTerm("inner sequence of a composition must have a_0 = 0")
        table = _bell_table(self.order, inner.coeffs)
        out = [self.coeffs[0]]
        for n in range(1, self.order + 1):
            out.append(sum(self.coeffs[k] * table[n][k] for k in range(1, n + 1)))
        return CountSeq(tuple(out))

    def iterate(self, times: int) -> "CountSeq":
        """times-fold self-composition; 0 gives the singleton species."""
        if times < 0:
            raise ValueError("iteration count must be nonnegative")
        if self.coeffs[0] != 0:
            raise CompositionConstantTerm("iterated sequence must have a_0 = 0")
        result = seq_k_set(self.order, 1)
        for _ in range(times):
            result = result.compose(self)
        return result


def _same_order(a: CountSeq, b: CountSeq):
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")


def seq_sets(order: int = DEFAULT_ORDER) -> CountSeq:
    """Sets: one structure on every label set."""
    return CountSeq((1,) * (order + 1))


def seq_sets_nonempty(order: int = DEFAULT_ORDER) -> CountSeq:
    """Nonempty sets: a_0 = 0, otherwise 1."""
    return CountSeq((0,) + (1,) * order)


def seq_k_set(order: int, k: int) -> CountSeq:
    """Sets of size exactly k: a_k = 1 and nothing else. k = 1 is the singleton
    species, the identity for composition."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return CountSeq(tuple(1 if n == k else 0 for n in range(order + 1)))


def seq_lists(order: int = DEFAULT_ORDER) -> CountSeq:
    """Linear orders: a_n = n!."""
    return CountSeq(tuple(factorial(n) for n in range(order + 1)))


def seq_lists_nonempty(order: int = DEFAULT_ORDER) -> CountSeq:
    """Nonempty linear orders: a_0 = 0, a_n = n! otherwise."""
    return CountSeq((0,) + tuple(factorial(n) for n in range(1, order + 1)))


def seq_cycles_nonempty(order: int = DEFAULT_ORDER) -> CountSeq:
    """Nonempty cyclic orders: a_n = (n-1)!."""
    return CountSeq((0,) + tuple(factorial(n - 1) for n in range(1, order + 1)))


def compose(outer: CountSeq, inner: CountSeq) -> CountSeq:
    return outer.compose(inner)


def iterate_compose(seq: CountSeq, times: int) -> CountSeq:
    return seq.iterate(times)


def _bell_table(order, z):
    """Partial Bell values B[n][k] for 0 <= k <= n <= order, with arguments
    z_1, z_2, ... read from z[1:]."""
    table = [[0] * (order + 1) for _ in range(order + 1)]
    table[0][0] = 1
    for n in range(1, order + 1):
        for k in range(1, n + 1):
            table[n][k] = sum(
                binomial(n - 1, i - 1) * z[i] * table[n - i][k - 1]
                for i in range(1, n - k + 2)
            )
    return table


def partial_bell(n: int, k: int, z) -> int:
    """Partial Bell polynomial B_{n,k}(z_1, ..., z_{n-k+1}).

    Computed by the recurrence
    B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) z_i B_{n-i,k-1}
    with B_{0,0} = 1 and B_{n,0} = 0 for n > 0. z is indexed from z_1,
    so z[0] holds z_1.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    if len(z) < n - k + 1:
        raise ValueError(f"need z_1..z_{n - k + 1}, got only {len(z)} arguments")
    # Only cells with n' <= n - (k - k') are reachable from B_{n,k}; computing
    # just those keeps every z index within the promised n-k+1 arguments.
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for kk in range(1, k + 1):
        for nn in range(kk, n - k + kk + 1):
            table[nn][kk] = sum(
                binomial(nn - 1, i - 1) * z[i - 1] * table[nn - i][kk - 1]
                for i in range(1, nn - kk + 2)
            )
    return table[n][k]


def complete_bell(n: int, z) -> int:
    """Complete Bell polynomial: the sum of B_{n,k} over k = 1..n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 0
    if len(z) < n:
        raise ValueError(f"need z_1..z_{n}, got only {len(z)} arguments")
    table = _bell_table(n, (0,) + tuple(z))
    return sum(table[n][k] for k in range(1, n + 1))


def bell_transform(seq: CountSeq) -> Triangle:
    """Triangle T(k, n) = B_{n,k}(a_1, a_2, ...) of a sequence with a_0 = 0.

    Row k is the counting sequence of k-block set partitions decorated with
    the given structures, i.e. of the composition E_k o F.
    """
    if seq.coeffs[0] != 0:
        raise CompositionConstantTerm("Bell transform needs a_0 = 0")
    size = seq.order
    table = _bell_table(size, seq.coeffs)
    return Triangle(
        tuple(
            tuple(table[n][k] if k <= n else 0 for n in range(1, size + 1))
            for k in range(1, size + 1)
        )
    )
