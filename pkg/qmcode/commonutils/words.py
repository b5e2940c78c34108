#!/usr/bin/env python
# encoding: utf-8
"""
*Letters and words in A∗B, reduction to the reduced normal form and the group law on reduced words*

:Author:
    David Young

:Date Created:
    October 18, 2026

A word is any finite product of letters; a reduced word has no identity letters and no two neighbouring letters from the same factor. Every element of A∗B has exactly one reduced word.
"""
from builtins import object
import sys
import os
from collections import namedtuple
from qmcode.commonutils.errors import DomainError, ElementError
from qmcode.commonutils.group_config import check_side

letter = namedtuple("letter", ["side", "elem"])


class word(object):
    """
    *A finite product of letters over a group config, possibly unreduced*

    **Key Arguments:**
        - ``config`` -- the `group_config` the letters live in
        - ``letters`` -- iterable of `letter` (or `(side, elem)` pairs)
    """

    __slots__ = ("config", "letters")

    def __init__(
            self,
            config,
            letters=()):
        self.config = config
        checked = []
        for l in letters:
            side = check_side(l[0])
            config.factor(side).check(l[1])
            checked.append(letter(side, l[1]))
        self.letters = tuple(checked)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other):
        _same_config(self, other)
        w = word(self.config)
        w.letters = self.letters + other.letters
        return w

    def __repr__(self):
        return f"<word of {len(self.letters)} letters>"


class reduced_word(object):
    """
    *A reduced word: the unique normal form of an element of A∗B*

    Build these with `reduce`; the constructor re-checks the reduced-word invariants unless the caller vouches for them.

    **Key Arguments:**
        - ``config`` -- the `group_config`
        - ``letters`` -- the letters
        - ``trusted`` -- skip the invariant check (internal use). Default *False*
    """

    __slots__ = ("config", "letters", "_hash")

    def __init__(
            self,
            config,
            letters=(),
            trusted=False):
        self.config = config
        self.letters = tuple(letters)
        self._hash = None
        if not trusted:
            previous = None
            for l in self.letters:
                f = config.factor(l.side)
                f.check(l.elem)
                if f.is_identity(l.elem):
                    raise DomainError(
                        "a reduced word cannot contain an identity letter")
                if l.side == previous:
                    raise DomainError(
                        "a reduced word cannot contain two neighbouring letters from the same factor")
                previous = l.side

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def is_empty(self):
        return not self.letters

    def first_side(self):
        return self.letters[0].side if self.letters else None

    def last_side(self):
        return self.letters[-1].side if self.letters else None

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, n):
        return power(self, n)

    def __invert__(self):
        return invert(self)

    def __eq__(self, other):
        return isinstance(other, reduced_word) and self.letters == other.letters and self.config == other.config

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.letters)
        return self._hash

    def __repr__(self):
        return f"<reduced word of {len(self.letters)} letters>"


def _same_config(w1, w2):
    if w1.config != w2.config:
        raise DomainError(
            "cannot combine words over different group configs")


def empty_word(config):
    """*the identity of A∗B*"""
    return reduced_word(config, (), trusted=True)


def letter_word(
        config,
        side,
        elem):
    """*the reduced word of a single letter (empty when `elem` is the identity)*"""
    side = check_side(side)
    f = config.factor(side)
    f.check(elem)
    if f.is_identity(elem):
        return empty_word(config)
    return reduced_word(config, (letter(side, elem),), trusted=True)


def reduce(w):
    """*reduce a word to its normal form*

    A single left-to-right pass with a stack: each incoming letter is merged with the top of the stack when both come from the same factor, and identity letters (including merged products) are dropped.

    **Key Arguments:**
        - ``w`` -- a `word` (or `reduced_word`)

    **Return:**
        - ``reduced`` -- the `reduced_word` representing the same element

    **Usage:**

    ```python
    from qmcode.commonutils.words import word, reduce
    reduced = reduce(word(cfg, [("A", 1), ("A", 4)]))
    ```
    """
    config = w.config
    stack = []
    for l in w.letters:
        f = config.factor(l.side)
        if f.is_identity(l.elem):
            continue
        if stack and stack[-1].side == l.side:
            product = f._product(stack[-1].elem, l.elem)
            if f.is_identity(product):
                stack.pop()
            else:
                stack[-1] = letter(l.side, product)
        else:
            stack.append(l)
    return reduced_word(config, stack, trusted=True)


def naive_reduce(w):
    """*reduce by repeatedly applying a single rewrite step until none applies*

    Quadratic; kept as the reference against which `reduce` is checked.
    """
    config = w.config
    letters = list(w.letters)
    changed = True
    while changed:
        changed = False
        for i, l in enumerate(letters):
            if config.factor(l.side).is_identity(l.elem):
                del letters[i]
                changed = True
                break
        if changed:
            continue
        for i in range(len(letters) - 1):
            if letters[i].side == letters[i + 1].side:
                f = config.factor(letters[i].side)
                letters[i:i + 2] = [letter(letters[i].side, f._product(
                    letters[i].elem, letters[i + 1].elem))]
                changed = True
                break
    return reduced_word(config, letters, trusted=True)


def multiply(w1, w2):
    """*the product of two reduced words*

    **Key Arguments:**
        - ``w1`` -- left factor
        - ``w2`` -- right factor

    **Return:**
        - ``product`` -- reduced w1·w2

    Raises a `DomainError` when the words live over different group configs.
    """
    _same_config(w1, w2)
    if not w1.letters:
        return w2
    if not w2.letters:
        return w1
    config = w1.config
    left = list(w1.letters)
    right = w2.letters
    i = 0
    # ONLY THE JUNCTION CAN CANCEL
    while left and i < len(right) and left[-1].side == right[i].side:
        f = config.factor(right[i].side)
        product = f._product(left[-1].elem, right[i].elem)
        i += 1
        if f.is_identity(product):
            left.pop()
            continue
        left[-1] = letter(right[i - 1].side, product)
        break
    return reduced_word(config, left + list(right[i:]), trusted=True)


def invert(w):
    """*the inverse word: reverse the letters and invert each one*"""
    config = w.config
    return reduced_word(config, [letter(l.side, config.factor(l.side)._inverse(l.elem)) for l in reversed(w.letters)], trusted=True)


def power(w, n):
    """*the n-th power of a reduced word*

    When w starts and ends on different sides, w^n (n ≥ 1) is the literal n-fold concatenation; otherwise repeated squaring on reduced products is used. Negative n raises the inverse.

    **Key Arguments:**
        - ``w`` -- the reduced word
        - ``n`` -- integer exponent

    **Return:**
        - ``result`` -- reduced w^n
    """
    if n < 0:
        return power(invert(w), -n)
    if n == 0 or not w.letters:
        return empty_word(w.config)
    if w.first_side() != w.last_side():
        return reduced_word(w.config, w.letters * n, trusted=True)
    result = empty_word(w.config)
    base = w
    while n:
        if n & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        n >>= 1
    return result


def side_tuple(w, side):
    """*the A-tuple (or B-tuple) of w: its letters from one factor, in order*"""
    side = check_side(side)
    return tuple(l.elem for l in w.letters if l.side == side)


def factor_projection(w, side):
    """*the image of w under the projection A∗B → factor on `side` that kills the other factor*"""
    side = check_side(side)
    f = w.config.factor(side)
    result = f.identity
    for elem in side_tuple(w, side):
        result = f._product(result, elem)
    return result
