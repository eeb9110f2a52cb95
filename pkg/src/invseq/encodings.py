"""Encodings between permutations and inversion sequences."""

from typing import Sequence

from .core import check_inversion_sequence, check_permutation, complement, reverse


def theta(p: Sequence[int]) -> tuple:
    """e_i counts the earlier entries larger than p_i."""
    p = check_permutation(p)
    return tuple(sum(1 for j in range(i) if p[j] > p[i]) for i in range(len(p)))


def theta_inv(e: Sequence[int]) -> tuple:
    e = check_inversion_sequence(e)
    n = len(e)
    remaining = list(range(1, n + 1))
    out = [0] * n
    # right to left: p_i is the (e_i + 1)-th largest value still unused
    for i in range(n - 1, -1, -1):
        out[i] = remaining.pop(len(remaining) - 1 - e[i])
    return tuple(out)


def lehmer(p: Sequence[int]) -> tuple:
    p = check_permutation(p)
    n = len(p)
    return tuple(sum(1 for j in range(i + 1, n) if p[j] < p[i]) for i in range(n))


def invcode(p: Sequence[int]) -> tuple:
    return reverse(lehmer(p))


def invcode_inv(e: Sequence[int]) -> tuple:
    return complement(reverse(theta_inv(e)))


def phi(p: Sequence[int]) -> tuple:
    """Right-to-left construction: e_i = p_i - 1 when p_i <= i, otherwise the
    k-th smallest distinct value among e_{i+1..n}, where p_i is the k-th
    largest of p_1..p_i."""
    p = check_permutation(p)
    n = len(p)
    if n == 0:
        return ()
    e = [0] * n
    e[n - 1] = p[n - 1] - 1
    for i in range(n - 2, -1, -1):
        if p[i] <= i + 1:
            e[i] = p[i] - 1
        else:
            k = sum(1 for x in p[: i + 1] if x > p[i])
            e[i] = sorted(set(e[i + 1:]))[k]
    return tuple(e)


def phi_inv(e: Sequence[int]) -> tuple:
    e = check_inversion_sequence(e)
    n = len(e)
    unused = list(range(1, n + 1))
    p = [0] * n
    for i in range(n - 1, -1, -1):
        later = sorted(set(e[i + 1:]))
        if e[i] in later:
            # k-th smallest later value picks the k-th largest unused value
            p[i] = unused[len(unused) - 1 - later.index(e[i])]
        else:
            p[i] = e[i] + 1
        unused.remove(p[i])
    return tuple(p)


def exc(p: Sequence[int]) -> int:
    p = check_permutation(p)
    return sum(1 for i, x in enumerate(p) if x > i + 1)
