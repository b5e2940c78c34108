#!/usr/bin/env python
# encoding: utf-8
"""
*The base campaign class which all randomised campaigns inherit*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
from builtins import object
import sys
import os
from qmcode.commonutils.errors import DomainError
from qmcode.commonutils.toolkit import get_setting, resolve_seed, trial_rng
from qmcode.verify.sampling import sample_word


class _base_campaign_(object):
    """
    The base campaign class which all randomised campaigns inherit

    **Key Arguments:**
        - ``log`` -- logger
        - ``config`` -- the group config the campaign samples from
        - ``settings`` -- the settings dictionary. Default *False* (package defaults)
        - ``trials`` -- number of trials. Default *None* (from settings)
        - ``seed`` -- campaign seed. Default *None* (fresh entropy, reported back)
        - ``maxLength`` -- maximum sampled word length. Default *None* (from settings)

    **Usage**

    Subclass, set `trialsKey` to the settings key holding the default trial count and implement `get()`, drawing the randomness of trial `i` from `self._rng(i)` only.
    """
    trialsKey = None

    def __init__(
            self,
            log,
            config,
            settings=False,
            trials=None,
            seed=None,
            maxLength=None
    ):
        self.log = log
        log.debug(f"instansiating a new '{self.__class__.__name__}' object")
        self.settings = settings
        self.config = config
        self.seed = resolve_seed(seed)
        self.trials = int(trials if trials is not None else get_setting(
            settings, self.trialsKey))
        if self.trials < 1:
            log.error("a campaign needs at least one trial")
            raise DomainError("a campaign needs at least one trial")
        self.maxWordLength = int(maxLength or get_setting(
            settings, "samplers.max-word-length"))
        self.magnitude = get_setting(
            settings, "samplers.integer-letter-magnitude")

        return None

    def _rng(self, i):
        """*the generator for trial i*"""
        return trial_rng(self.seed, i)

    def _sample_word(self, rng, startSide=None):
        return sample_word(self.config, self.maxWordLength, rng, self.magnitude, startSide=startSide)

    def get(self):
        raise NotImplementedError
