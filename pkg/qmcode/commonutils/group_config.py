#!/usr/bin/env python
# encoding: utf-8
"""
*The free product A∗B of two factors, with the optional swap isomorphism A → B*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
from builtins import object
import sys
import os
from qmcode.commonutils.errors import ConfigError, DomainError

SIDES = ("A", "B")


def other_side(side):
    """*the side opposite to `side`*"""
    if side == "A":
        return "B"
    if side == "B":
        return "A"
    raise DomainError(f"`{side}` is not a side (expected A or B)")


def check_side(side):
    """*normalise a side name, raising a `DomainError` for anything but A or B*"""
    s = str(side).strip().upper()
    if s not in SIDES:
        raise DomainError(f"`{side}` is not a side (expected A or B)")
    return s


class group_config(object):
    """
    *The two free factors of A∗B and, when the factors are isomorphic, the fixed swap isomorphism*

    **Key Arguments:**
        - ``factorA`` -- the factor A
        - ``factorB`` -- the factor B
        - ``swap`` -- the validated swap isomorphism: None, the sign ±1 for ℤ ≅ ℤ, or a tuple of B-images of the A-elements
        - ``name`` -- optional label (the config file stem)

    **Usage:**

    ```python
    from qmcode.commonutils.factors import cyclic_factor
    from qmcode.commonutils.group_config import group_config
    cfg = group_config(factorA=cyclic_factor(5), factorB=cyclic_factor(2))
    ```

    Free indecomposability of the factors is a caller obligation; it is not (and for table groups cannot cheaply be) verified.
    """

    def __init__(
            self,
            factorA,
            factorB,
            swap=None,
            name=None):
        self.factorA = factorA
        self.factorB = factorB
        self.swap = swap
        self.name = name

        self._swapInverse = None
        if isinstance(swap, tuple):
            inverse = [0] * len(swap)
            for x, y in enumerate(swap):
                inverse[y] = x
            self._swapInverse = tuple(inverse)
        elif swap is not None and swap not in (1, -1):
            raise ConfigError(f"invalid swap isomorphism `{swap!r}`")

    def factor(self, side):
        """*the factor on `side`*"""
        if side == "A":
            return self.factorA
        if side == "B":
            return self.factorB
        raise DomainError(f"`{side}` is not a side (expected A or B)")

    def has_swap(self):
        return self.swap is not None

    def swap_element(self, side, elem):
        """*send an element of the factor on `side` across the swap isomorphism*

        **Return:**
            - ``image`` -- the image element, living in the opposite factor
        """
        if self.swap is None:
            raise DomainError(
                "this group config has no swap isomorphism (add `swap:` to the config)")
        if isinstance(self.swap, int):
            return self.swap * elem
        if side == "A":
            return self.swap[elem]
        return self._swapInverse[elem]

    def integer_sides(self):
        """*the sides whose factor is ℤ*"""
        return [s for s in SIDES if self.factor(s).kind == "integer"]

    def describe(self):
        """*the config-document form*"""
        doc = {"factors": {"A": self.factorA.describe(),
                           "B": self.factorB.describe()}}
        if self.swap is None:
            doc["swap"] = "none"
        elif isinstance(self.swap, int):
            doc["swap"] = "identity" if self.swap == 1 else {1: -1}
        else:
            doc["swap"] = {self.factorA.name(x): self.factorB.name(y)
                           for x, y in enumerate(self.swap)}
        return doc

    def label(self):
        return f"{self.factorA.label()} ∗ {self.factorB.label()}"

    def _key(self):
        return (self.factorA, self.factorB, self.swap)

    def __eq__(self, other):
        if other is self:
            return True
        return isinstance(other, group_config) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<group config {self.label()}>"
