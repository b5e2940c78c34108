#!/usr/bin/env python
# encoding: utf-8
"""
*A/B-codes, weighted ℤ-codes, disjoint pattern counting and genericity of patterns*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
import sys
import os
from itertools import groupby, combinations
from qmcode.commonutils.errors import DomainError
from qmcode.commonutils.words import side_tuple


def check_pattern(z):
    """*normalise a pattern to a tuple, raising a `DomainError` unless it is a nonempty tuple of positive integers*"""
    try:
        z = tuple(z)
    except TypeError:
        raise DomainError(f"`{z!r}` is not a tuple of positive integers")
    if not z:
        raise DomainError("a pattern must have at least one entry")
    for n in z:
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise DomainError(
                f"pattern entries must be positive integers, got `{n!r}`")
    return z


def code(w, side):
    """*the A-code (or B-code) of a reduced word*

    The run lengths of equal consecutive letters in the side-tuple of w.

    **Key Arguments:**
        - ``w`` -- a reduced word
        - ``side`` -- `A` or `B`

    **Return:**
        - ``code`` -- tuple of positive integers; `()` for a word with no letters on `side`

    **Usage:**

    ```python
    from qmcode.commonutils.codes import code
    code(w, "A")
    > (1, 2, 1, 2)
    ```
    """
    return tuple(sum(1 for _ in run) for _, run in groupby(side_tuple(w, side)))


def weighted_z_code(w, side):
    """*the weighted ℤ-code of a reduced word*

    For each maximal run of same-sign integer letters in the side-tuple, the absolute value of the run's sum.

    **Key Arguments:**
        - ``w`` -- a reduced word
        - ``side`` -- the side carrying the integer factor

    **Return:**
        - ``code`` -- tuple of positive integers
    """
    if w.config.factor(side).kind != "integer":
        raise DomainError(
            f"weighted codes need an infinite cyclic factor, but factor {side} is {w.config.factor(side).label()}")
    return tuple(abs(sum(run)) for _, run in groupby(side_tuple(w, side), key=lambda x: x > 0))


def _failure_table(z):
    """*the longest-proper-border table of the pattern*"""
    table = [0] * len(z)
    k = 0
    for i in range(1, len(z)):
        while k and z[i] != z[k]:
            k = table[k - 1]
        if z[i] == z[k]:
            k += 1
        table[i] = k
    return table


def count_disjoint(c, z):
    """*the maximal number of pairwise-disjoint occurrences of the pattern z as a consecutive block of the code c*

    Leftmost-greedy matching: scan with a prefix-function matcher and restart from scratch after each match. Greedy is optimal for non-overlapping occurrences of a fixed pattern.

    **Key Arguments:**
        - ``c`` -- the code (tuple of positive integers)
        - ``z`` -- the pattern

    **Return:**
        - ``count`` -- non-negative integer
    """
    z = tuple(z)
    k = len(z)
    if not k or len(c) < k:
        return 0
    table = _failure_table(z)
    count = 0
    matched = 0
    for x in c:
        while matched and x != z[matched]:
            matched = table[matched - 1]
        if x == z[matched]:
            matched += 1
        if matched == k:
            count += 1
            matched = 0
    return count


def max_disjoint_occurrences(c, z):
    """*exhaustive maximum over all sets of pairwise-disjoint occurrences of z in c*

    Exponential in the number of occurrences; the reference for `count_disjoint` on small inputs.
    """
    z = tuple(z)
    k = len(z)
    starts = [i for i in range(len(c) - k + 1) if tuple(c[i:i + k]) == z]
    for size in range(len(starts), 0, -1):
        for chosen in combinations(starts, size):
            if all(b - a >= k for a, b in zip(chosen, chosen[1:])):
                return size
    return 0


def is_generic(z):
    """*True when the reversed pattern occurs nowhere as a block of consecutive entries of z·z*

    **Usage:**

    ```python
    from qmcode.commonutils.codes import is_generic
    is_generic((1, 2, 3))
    > True
    is_generic((1, 2))
    > False
    ```
    """
    z = check_pattern(z)
    return count_disjoint(z + z, z[::-1]) == 0


def format_code(c):
    """*parenthesised, comma-separated form of a code: `(1,2,1,2)`*"""
    return "(" + ",".join(str(n) for n in c) + ")"
