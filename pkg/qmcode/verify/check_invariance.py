#!/usr/bin/env python
# encoding: utf-8
"""
*Sampled invariance campaigns: how far q moves under single generators of Aut(A∗B)*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
import sys
import os
from fractions import Fraction
from qmcode.commonutils.errors import AutomorphismError
from qmcode.commonutils.automorphisms import available_kinds, random_automorphism
from qmcode.commonutils.parser import format_word
from qmcode.commonutils.quasimorphisms import evaluate, a_priori_defect, exact_invariance_kinds, GENERATOR_KINDS
from qmcode.commonutils.toolkit import get_setting
from qmcode.verify._base_campaign_ import _base_campaign_
from qmcode.verify.reports import campaign_report

# GENERATOR KINDS THAT ARE INNER UP TO A FACTOR AUTOMORPHISM
CONJUGATION_KINDS = {"pconj"}


def invariance_bound(q, config, kinds):
    """*the per-step deviation bound certified for q under the given generator kinds*

    0 when every kind leaves q exactly invariant; 2·D when the only other kinds are conjugation-type (|f(gxg⁻¹) − f(x)| ≤ 2D since f(g⁻¹) = −f(g)); None otherwise.

    **Return:**
        - ``bound`` -- a `Fraction` or None
    """
    exact = exact_invariance_kinds(q, config)
    kinds = set(kinds)
    if kinds <= exact:
        return Fraction(0)
    if kinds <= exact | CONJUGATION_KINDS and "fauto" in exact:
        return 2 * a_priori_defect(q)
    return None


class check_invariance(_base_campaign_):
    """
    *Sample (word, automorphism) pairs and measure |f(g(v)) − f(v)| at every generator step g along the orbit of the word*

    **Key Arguments:**
        - ``log`` -- logger
        - ``q`` -- the quasimorphism
        - ``config`` -- the group config
        - ``kinds`` -- generator kinds to sample (`fauto`, `pconj`, `swap`, `transv`). Default *None* (all kinds the config has)
        - ``settings`` -- the settings dictionary
        - ``trials`` -- number of samples. Default *None* (`verify-invariance.trials`)
        - ``seed`` -- campaign seed
        - ``maxLength`` -- maximum sampled word length
        - ``maxAutLength`` -- maximum number of generators per sampled automorphism. Default *None* (`samplers.max-automorphism-length`)

    **Usage:**

    ```python
    from qmcode.verify import check_invariance
    report = check_invariance(
        log=log,
        q=q,
        config=cfg,
        kinds=["fauto", "transv"],
        trials=1000,
        seed=7
    ).get()
    ```
    """
    trialsKey = "verify-invariance.trials"

    def __init__(
            self,
            log,
            q,
            config,
            kinds=None,
            settings=False,
            trials=None,
            seed=None,
            maxLength=None,
            maxAutLength=None
    ):
        super(check_invariance, self).__init__(log=log, config=config,
                                               settings=settings, trials=trials, seed=seed, maxLength=maxLength)
        self.q = q.validate(config)
        available = available_kinds(config)
        if not kinds:
            kinds = available
        unknown = [k for k in kinds if k not in GENERATOR_KINDS]
        if unknown:
            message = f"unknown generator kind(s): {', '.join(unknown)}"
            log.error(message)
            raise AutomorphismError(message)
        missing = [k for k in kinds if k not in available]
        if missing:
            message = f"generator kind(s) {', '.join(missing)} do not exist for {config.label()}"
            if "swap" in missing:
                message += " (the config has no swap isomorphism)"
            if "transv" in missing:
                message += " (transvections need an infinite cyclic factor)"
            log.error(message)
            raise AutomorphismError(message)
        self.kinds = [k for k in GENERATOR_KINDS if k in kinds]
        self.maxAutLength = int(maxAutLength or get_setting(
            settings, "samplers.max-automorphism-length"))

    def get(self):
        """*run the campaign*

        `max_observed` is the largest deviation of a single generator step g along the orbit of the sampled word, max |f(g(v)) − f(v)|; the bound is certified for these steps. The end-to-end deviation max |f(φ(w)) − f(w)| over whole sampled automorphisms is reported separately as `total_deviation`.

        **Return:**
            - ``report`` -- a `campaign_report`; `bound` is None (nothing certified) when a requested kind is neither exact nor conjugation-type for q
        """
        self.log.debug('starting the ``get`` method')

        q = self.q
        bound = invariance_bound(q, self.config, self.kinds)
        perKind = {k: Fraction(0) for k in self.kinds}
        maxObserved = Fraction(0)
        maxTotal = Fraction(0)
        violations = []

        for i in range(self.trials):
            rng = self._rng(i)
            w = self._sample_word(rng)
            length = int(rng.integers(1, self.maxAutLength + 1))
            phi = random_automorphism(
                self.log, self.config, length, rng, self.kinds, self.magnitude)

            start = evaluate(q, w)
            v, before = w, start
            for step, g in enumerate(phi.gens):
                image = g.apply(v)
                after = evaluate(q, image)
                d = abs(after - before)
                perKind[g.kind] = max(perKind[g.kind], d)
                maxObserved = max(maxObserved, d)
                if bound is not None and d > bound:
                    violations.append({"trial": i, "step": step, "word": format_word(v), "generator": g.spec(),
                                       "before": before, "after": after, "deviation": d})
                v, before = image, after
            maxTotal = max(maxTotal, abs(before - start))

        if violations:
            self.log.error(
                f"{len(violations)} generator steps move {q.spec()} by more than {bound}")
        self.log.info(
            f"invariance campaign for {q.spec()} under {', '.join(self.kinds)}: max step deviation {maxObserved}")

        report = campaign_report(
            report="invariance",
            trials=self.trials,
            max_observed=maxObserved,
            bound=bound,
            violations=violations,
            seed=self.seed,
            extra={
                "qm": q.spec(),
                "config": self.config.name or self.config.label(),
                "kinds": self.kinds,
                "certified": bound is not None,
                "per_kind_max": [{"kind": k, "deviation": perKind[k]} for k in self.kinds],
                "total_deviation": maxTotal,
                "max_word_length": self.maxWordLength,
                "max_automorphism_length": self.maxAutLength,
                "quantity": "|f(g(v)) - f(v)| per generator step (end-to-end in total_deviation)"
            }
        )

        self.log.debug('completed the ``get`` method')
        return report
