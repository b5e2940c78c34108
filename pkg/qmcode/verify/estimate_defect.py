#!/usr/bin/env python
# encoding: utf-8
"""
*Sampled defect campaigns: |f(gh) − f(g) − f(h)| against the a-priori bound, and the subadditivity of the counting functions*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
import sys
import os
from fractions import Fraction
from qmcode.commonutils.words import multiply
from qmcode.commonutils.parser import format_word
from qmcode.commonutils.quasimorphisms import evaluate, a_priori_defect, theta
from qmcode.verify._base_campaign_ import _base_campaign_
from qmcode.verify.reports import campaign_report
from qmcode.verify.sampling import sample_concatenable_pair

# |θ(w₁w₂) − θ(w₁) − θ(w₂)| ON REDUCED CONCATENATIONS
THETA_SUBADDITIVITY_BOUND = 2


class estimate_defect(_base_campaign_):
    """
    *Sample pairs (g, h) and record the largest defect expression |f(gh) − f(g) − f(h)|*

    The result is a lower bound on the true defect, checked against the a-priori bound; it never tightens that bound.

    **Key Arguments:**
        - ``log`` -- logger
        - ``q`` -- the quasimorphism
        - ``config`` -- the group config
        - ``settings`` -- the settings dictionary
        - ``trials`` -- number of sampled pairs. Default *None* (`verify-defect.trials`)
        - ``seed`` -- campaign seed
        - ``maxLength`` -- maximum sampled word length

    **Usage:**

    ```python
    from qmcode.verify import estimate_defect
    report = estimate_defect(
        log=log,
        q=q,
        config=cfg,
        settings=settings,
        trials=10000,
        seed=1
    ).get()
    ```
    """
    trialsKey = "verify-defect.trials"

    def __init__(
            self,
            log,
            q,
            config,
            settings=False,
            trials=None,
            seed=None,
            maxLength=None
    ):
        super(estimate_defect, self).__init__(log=log, config=config,
                                              settings=settings, trials=trials, seed=seed, maxLength=maxLength)
        self.q = q.validate(config)

    def get(self):
        """*run the campaign*

        **Return:**
            - ``report`` -- a `campaign_report`
        """
        self.log.debug('starting the ``get`` method')

        q = self.q
        bound = a_priori_defect(q)
        maxObserved = Fraction(0)
        violations = []
        for i in range(self.trials):
            rng = self._rng(i)
            g = self._sample_word(rng)
            h = self._sample_word(rng)
            d = abs(evaluate(q, multiply(g, h)) - evaluate(q, g) - evaluate(q, h))
            if d > maxObserved:
                maxObserved = d
            if d > bound:
                violations.append({"trial": i, "g": format_word(
                    g), "h": format_word(h), "defect": d})

        if violations:
            self.log.error(
                f"{len(violations)} pairs exceed the defect bound {bound} for {q.spec()}")
        self.log.info(
            f"defect campaign for {q.spec()}: {self.trials} pairs, max observed {maxObserved}, bound {bound}")

        report = campaign_report(
            report="defect",
            trials=self.trials,
            max_observed=maxObserved,
            bound=bound,
            violations=violations,
            seed=self.seed,
            extra={"qm": q.spec(), "config": self.config.name or self.config.label(),
                   "max_word_length": self.maxWordLength, "quantity": "|f(gh) - f(g) - f(h)|"}
        )

        self.log.debug('completed the ``get`` method')
        return report


class estimate_theta_subadditivity(_base_campaign_):
    """
    *Sample pairs (w₁, w₂) whose concatenation is reduced and check |θ(w₁w₂) − θ(w₁) − θ(w₂)| ≤ 2 for every counting term of q, for both z and its reversal*

    **Key Arguments:**
        - ``log`` -- logger
        - ``q`` -- the quasimorphism whose counting terms are checked
        - ``config`` -- the group config
        - ``settings`` -- the settings dictionary
        - ``trials`` -- number of sampled pairs. Default *None* (`verify-defect.trials`)
        - ``seed`` -- campaign seed
        - ``maxLength`` -- maximum sampled word length
    """
    trialsKey = "verify-defect.trials"

    def __init__(
            self,
            log,
            q,
            config,
            settings=False,
            trials=None,
            seed=None,
            maxLength=None
    ):
        super(estimate_theta_subadditivity, self).__init__(log=log, config=config,
                                                           settings=settings, trials=trials, seed=seed, maxLength=maxLength)
        self.q = q.validate(config)

    def get(self):
        self.log.debug('starting the ``get`` method')

        counters = []
        for _, p in self.q.counting_terms():
            for z in (p.z, p.z[::-1]):
                if (p.side, z, p.weighted) not in counters:
                    counters.append((p.side, z, p.weighted))

        maxObserved = 0
        violations = []
        for i in range(self.trials):
            rng = self._rng(i)
            w1, w2 = sample_concatenable_pair(
                self.config, self.maxWordLength, rng, self.magnitude)
            joined = multiply(w1, w2)
            for side, z, weighted in counters:
                d = abs(theta(joined, side, z, weighted) -
                        theta(w1, side, z, weighted) - theta(w2, side, z, weighted))
                maxObserved = max(maxObserved, d)
                if d > THETA_SUBADDITIVITY_BOUND:
                    violations.append({"trial": i, "w1": format_word(w1), "w2": format_word(w2),
                                       "counter": f"{'weighted' if weighted else 'code'}:{side}:{z}", "deviation": d})

        self.log.info(
            f"theta subadditivity for {self.q.spec()}: {self.trials} pairs, max observed {maxObserved}")

        report = campaign_report(
            report="theta-subadditivity",
            trials=self.trials,
            max_observed=maxObserved,
            bound=THETA_SUBADDITIVITY_BOUND,
            violations=violations,
            seed=self.seed,
            extra={"qm": self.q.spec(), "config": self.config.name or self.config.label(),
                   "max_word_length": self.maxWordLength, "quantity": "|θ(w1 w2) - θ(w1) - θ(w2)|"}
        )

        self.log.debug('completed the ``get`` method')
        return report
