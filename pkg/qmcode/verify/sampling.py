#!/usr/bin/env python
# encoding: utf-8
"""
*Seeded samplers for reduced words*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
import sys
import os
import numpy as np
from qmcode.commonutils.errors import DomainError
from qmcode.commonutils.factors import random_nontrivial_element
from qmcode.commonutils.group_config import other_side
from qmcode.commonutils.words import letter, reduced_word


def sample_word(
        config,
        max_len,
        seed,
        magnitude=9,
        startSide=None):
    """*draw a random reduced word*

    The length is uniform in [1, max_len], the sides alternate from a uniformly chosen (or given) first side and each letter is a uniform nontrivial element of its factor (integer letters uniform in [-magnitude, magnitude] without 0).

    **Key Arguments:**
        - ``config`` -- the group config
        - ``max_len`` -- maximum word length (≥ 1)
        - ``seed`` -- an integer seed, a seed-sequence list or a `numpy.random.Generator`
        - ``magnitude`` -- bound on integer letters. Default *9*
        - ``startSide`` -- force the side of the first letter. Default *None* (random)

    **Return:**
        - ``w`` -- a `reduced_word`

    **Usage:**

    ```python
    from qmcode.verify.sampling import sample_word
    w = sample_word(config=cfg, max_len=12, seed=42)
    ```
    """
    if max_len < 1:
        raise DomainError("max_len must be at least 1")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    length = int(rng.integers(1, max_len + 1))
    side = startSide or ("A" if rng.integers(0, 2) == 0 else "B")
    letters = []
    for _ in range(length):
        letters.append(letter(side, random_nontrivial_element(
            config.factor(side), rng, magnitude)))
        side = other_side(side)
    return reduced_word(config, letters, trusted=True)


def sample_concatenable_pair(
        config,
        max_len,
        rng,
        magnitude=9):
    """*two random reduced words whose concatenation is already reduced*"""
    w1 = sample_word(config, max_len, rng, magnitude)
    w2 = sample_word(config, max_len, rng, magnitude,
                     startSide=other_side(w1.last_side()))
    return w1, w2
