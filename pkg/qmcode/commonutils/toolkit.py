#!/usr/bin/env python
# encoding: utf-8
"""
*Small helpers shared across the package: settings lookups, seeding and exact-rational text forms*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
import sys
import os
from fractions import Fraction
import yaml
import numpy as np
from functools import lru_cache
from qmcode.commonutils.errors import DomainError
from qmcode.commonutils.getpackagepath import getpackagepath


@lru_cache(maxsize=1)
def default_settings():
    """*the packaged `default_settings.yaml`, the fallback for settings missing from a user settings file*"""
    with open(os.path.join(getpackagepath(), "default_settings.yaml"), encoding="utf-8") as stream:
        return yaml.safe_load(stream)


def get_setting(
        settings,
        key):
    """*look up a dotted settings key (e.g. `samplers.max-word-length`), falling back to the package defaults*

    **Key Arguments:**
        - ``settings`` -- the settings dictionary (may be False or None)
        - ``key`` -- dotted key

    **Return:**
        - ``value`` -- the setting
    """
    parts = key.split(".")
    for source in (settings or {}, default_settings()):
        value = source
        for p in parts:
            if not isinstance(value, dict) or p not in value:
                value = None
                break
            value = value[p]
        if value is not None:
            return value
    raise KeyError(f"unknown setting `{key}`")


def resolve_seed(seed=None):
    """*return the campaign seed, drawing fresh entropy when none was given*"""
    if seed is None:
        return int(np.random.SeedSequence().entropy)
    try:
        seed = int(seed)
    except (TypeError, ValueError):
        raise DomainError(f"`{seed}` is not an integer seed")
    if seed < 0:
        raise DomainError("seeds must be non-negative")
    return seed


def trial_rng(seed, i):
    """*the generator for trial i of a campaign; depends only on (seed, i)*"""
    return np.random.default_rng([seed, i])


def fraction_text(x):
    """*serialise a rational exactly: an integer when the denominator is 1, otherwise `p/q`*"""
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(value):
    """*the inverse of `fraction_text`*"""
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"`{value}` is not a rational number")


def decimal_text(x, places=6):
    """*a short decimal rendering of a rational for human-readable output*"""
    x = Fraction(x)
    text = f"{float(x):.{places}f}".rstrip("0").rstrip(".")
    return text if text not in ("-0", "") else "0"
