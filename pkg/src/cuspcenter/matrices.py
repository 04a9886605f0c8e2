"""Tiny exact matrix helpers, generic over a commutative ring.

Matrices are tuples of row tuples whose entries support +, -, * among
themselves and with ints.  Inversion needs a field (entries must
support /).  The characteristic polynomial is computed by the Leibniz
expansion of det(Y*I - A), which divides by nothing and therefore works
verbatim over finite fields and cyclotomic rings alike; fine for n <= 4.
"""

from __future__ import annotations

from itertools import permutations

from .errors import NoSolution


def identity(n: int, zero, one):
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def mat_mul(a, b, zero):
    n, mid, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for k in range(mid):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_trace(a, zero):
    acc = zero
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def mat_pow(a, k, zero, one):
    out = identity(len(a), zero, one)
    base = a
    while k:
        if k & 1:
            out = mat_mul(out, base, zero)
        base = mat_mul(base, base, zero)
        k >>= 1
    return out


def _perm_sign(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def det(a, zero):
    n = len(a)
    total = zero
    for perm in permutations(range(n)):
        prod = a[0][perm[0]]
        for i in range(1, n):
            prod = prod * a[i][perm[i]]
        total = total + prod if _perm_sign(perm) == 1 else total - prod
    return total


def charpoly(a, zero, one) -> list:
    """Coefficients c_0..c_n (low first) of det(Y*I - A)."""
    n = len(a)
    total = [zero] * (n + 1)
    for perm in permutations(range(n)):
        prod = [one]  # polynomial in Y, ring coefficients
        for i in range(n):
            lin = [zero - a[i][perm[i]], one] if perm[i] == i else [zero - a[i][perm[i]]]
            new = [zero] * (len(prod) + len(lin) - 1)
            for s, x in enumerate(prod):
                for t, y in enumerate(lin):
                    new[s + t] = new[s + t] + x * y
            prod = new
        sign = _perm_sign(perm)
        for k, c in enumerate(prod):
            total[k] = total[k] + c if sign == 1 else total[k] - c
    return total


def inverse(a, zero, one):
    """Gaussian elimination over a field."""
    n = len(a)
    aug = [list(a[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != zero), None)
        if piv is None:
            raise NoSolution("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = one / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != zero:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(r[n:]) for r in aug)
