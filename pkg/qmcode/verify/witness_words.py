#!/usr/bin/env python
# encoding: utf-8
"""
*Witness words w with f(w^ℓ) = ℓ for code and weighted code quasimorphisms, and the linear-independence probe built on them*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
from builtins import object
import sys
import os
from qmcode.commonutils.errors import WitnessError, DomainError
from qmcode.commonutils.group_config import check_side, other_side
from qmcode.commonutils.codes import code, weighted_z_code, is_generic, check_pattern
from qmcode.commonutils.quasimorphisms import code_qm, weighted_qm, qm_combination, evaluate
from qmcode.commonutils.words import letter, word, reduce, power

MODES = ("code-distinct", "code-isomorphic", "weighted")


def _check_mode(mode):
    if mode not in MODES:
        raise DomainError(
            f"unknown witness mode `{mode}` (expected {', '.join(MODES)})")
    return mode


def mode_qm(z, mode, side):
    """*the quasimorphism a witness mode certifies: f^side_z, f^A_z + f^B_z or the weighted f_z*"""
    if mode == "weighted":
        return weighted_qm(side, z)
    if mode == "code-isomorphic":
        return qm_combination([(1, code_qm("A", z)), (1, code_qm("B", z))])
    return code_qm(side, z)


def first_nontrivial(factor, count):
    """*the first `count` nontrivial elements of a factor in its natural order (1, 2, ... for ℤ)*"""
    if factor.kind == "integer":
        return list(range(1, count + 1))
    return factor.nontrivial_elements()[:count]


def smallest_missing(*tuples):
    """*the smallest positive integer that is an entry of none of the tuples*"""
    used = set()
    for t in tuples:
        used.update(t)
    m = 1
    while m in used:
        m += 1
    return m


class witness_spec(object):
    """
    *The choices a witness word is built from*

    **Key Arguments:**
        - ``z`` -- the generic pattern
        - ``m`` -- positive integer not among the entries of z (used when len(z) is odd)
        - ``mode`` -- `code-distinct`, `code-isomorphic` or `weighted`
        - ``side`` -- the side whose code carries z
        - ``a1``, ``a2`` -- distinct nontrivial elements on `side` (code modes)
        - ``b1``, ``b2`` -- nontrivial elements of the other factor; equal in the distinct and weighted modes, the swap images of a1, a2 in the isomorphic mode
    """

    def __init__(
            self,
            z,
            m,
            mode,
            side="A",
            a1=None,
            a2=None,
            b1=None,
            b2=None):
        self.z = check_pattern(z)
        self.m = m
        self.mode = _check_mode(mode)
        self.side = check_side(side)
        self.a1 = a1
        self.a2 = a2
        self.b1 = b1
        self.b2 = b2 if b2 is not None else b1

    def validate(self, config):
        """*raise a `WitnessError` naming the first failed precondition*"""
        if not is_generic(self.z):
            raise WitnessError(
                f"the pattern {self.z} is not generic (its reversal occurs in z·z)")
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise WitnessError("m must be a positive integer")
        if self.m in self.z:
            raise WitnessError(
                f"m = {self.m} collides with an entry of z = {self.z}")
        f = config.factor(self.side)
        g = config.factor(other_side(self.side))
        if self.mode == "weighted":
            if f.kind != "integer":
                raise WitnessError(
                    f"weighted witnesses need factor {self.side} to be ℤ, but it is {f.label()}")
        else:
            if f.is_finite() and f.order < 3:
                raise WitnessError(
                    f"code witnesses need two distinct nontrivial elements in factor {self.side}, but it is {f.label()}")
            for x in (self.a1, self.a2):
                f.check(x)
                if f.is_identity(x):
                    raise WitnessError("a1 and a2 must be nontrivial")
            if self.a1 == self.a2:
                raise WitnessError("a1 and a2 must be distinct")
        for y in (self.b1, self.b2):
            g.check(y)
            if g.is_identity(y):
                raise WitnessError(
                    "the letters of the other factor must be nontrivial")
        if self.mode == "code-isomorphic":
            if not config.has_swap():
                raise WitnessError(
                    "the isomorphic-factors witness needs a swap isomorphism in the config")
            if self.b1 == self.b2:
                raise WitnessError("b1 and b2 must be distinct")
        return self

    def qm(self):
        """*the quasimorphism this witness is built for*"""
        return mode_qm(self.z, self.mode, self.side)

    def growth(self):
        """*f(w^ℓ) = growth·ℓ*"""
        return 2 if self.mode == "code-isomorphic" else 1

    def expected_code(self):
        return self.z if len(self.z) % 2 == 0 else self.z + (self.m,)


def default_witness_spec(
        config,
        z,
        mode,
        side="A",
        m=None):
    """*fill in the letters a witness leaves free with deterministic choices*

    a1, a2 are the first two nontrivial elements on `side`, b the first nontrivial element of the other factor (its generator when it has one), the isomorphic mode uses b1, b2 = swap(a1), swap(a2), and m defaults to the smallest positive integer missing from z.

    **Key Arguments:**
        - ``config`` -- the group config
        - ``z`` -- the generic pattern
        - ``mode`` -- `code-distinct`, `code-isomorphic` or `weighted`
        - ``side`` -- side carrying the code. Default *A*
        - ``m`` -- optional tail entry

    **Return:**
        - ``spec`` -- a validated `witness_spec`
    """
    z = check_pattern(z)
    mode = _check_mode(mode)
    side = check_side(side)
    if m is None:
        m = smallest_missing(z)
    f = config.factor(side)
    g = config.factor(other_side(side))
    b = g.generator if g.generator is not None else first_nontrivial(g, 1)[0]
    a1 = a2 = b1 = b2 = None
    if mode == "weighted":
        b1 = b2 = b
    else:
        if f.is_finite() and f.order < 3:
            raise WitnessError(
                f"code witnesses need two distinct nontrivial elements in factor {side}, but it is {f.label()}")
        a1, a2 = first_nontrivial(f, 2)
        if mode == "code-isomorphic":
            if not config.has_swap():
                raise WitnessError(
                    "the isomorphic-factors witness needs a swap isomorphism in the config")
            b1 = config.swap_element(side, a1)
            b2 = config.swap_element(side, a2)
        else:
            b1 = b2 = b
    spec = witness_spec(z=z, m=m, mode=mode, side=side,
                        a1=a1, a2=a2, b1=b1, b2=b2)
    return spec.validate(config)


def witness_word(
        spec,
        config):
    """*build the witness word*

    Code modes: w = (a₁b₁)^{n₁}(a₂b₂)^{n₂}(a₁b₁)^{n₃}⋯ with (a₂b₂)^m appended when k = len(z) is odd. Weighted mode: w = n₁ b (−n₂) b n₃ b ⋯ with the signs alternating and (∓m) b appended when k is odd. The word starts and ends on different sides, so w^ℓ is the plain ℓ-fold concatenation.

    **Key Arguments:**
        - ``spec`` -- a `witness_spec`
        - ``config`` -- the group config

    **Return:**
        - ``w`` -- the reduced witness word

    **Usage:**

    ```python
    from qmcode.verify.witness_words import default_witness_spec, witness_word
    spec = default_witness_spec(config=cfg, z=(1, 2, 3), mode="code-distinct")
    w = witness_word(spec, cfg)
    ```
    """
    spec.validate(config)
    side, other = spec.side, other_side(spec.side)
    entries = list(spec.expected_code())
    letters = []
    if spec.mode == "weighted":
        for i, n in enumerate(entries):
            sign = 1 if i % 2 == 0 else -1
            letters += [letter(side, sign * n), letter(other, spec.b1)]
    else:
        for i, n in enumerate(entries):
            # THE TAIL (WHEN PRESENT) ALWAYS USES a2
            if i % 2 == 0 and i < len(spec.z):
                pair = [letter(side, spec.a1), letter(other, spec.b1)]
            else:
                pair = [letter(side, spec.a2), letter(other, spec.b2)]
            letters += pair * n
    w = reduce(word(config, letters))

    found = weighted_z_code(w, side) if spec.mode == "weighted" else code(w, side)
    if found != spec.expected_code():
        raise WitnessError(
            f"the witness has code {found}, expected {spec.expected_code()}")
    return w


def check_witness_growth(
        log,
        spec,
        config,
        powers=50):
    """*verify f(w^ℓ) = growth·ℓ exactly for ℓ = 1..powers*

    **Return:**
        - ``rows`` -- list of (ℓ, value) pairs

    Raises a `WitnessError` at the first power where the value is off.
    """
    log.debug('starting the ``check_witness_growth`` function')
    w = witness_word(spec, config)
    q = spec.qm()
    rows = []
    for l in range(1, powers + 1):
        value = evaluate(q, power(w, l))
        rows.append((l, value))
        if value != spec.growth() * l:
            log.error(f"witness value {value} at ℓ={l}")
            raise WitnessError(
                f"{q.spec()} takes the value {value} on w^{l}, expected {spec.growth() * l}")
    log.debug('completed the ``check_witness_growth`` function')
    return rows


def linear_independence_probe(
        log,
        config,
        patterns,
        fresh=None,
        mode="code-distinct",
        side="A",
        powers=20):
    """*evaluate earlier quasimorphisms on the witness of a fresh pattern*

    The fresh pattern is a 3-tuple of distinct positive integers appearing in none of the given patterns (the three smallest such numbers unless supplied). Every earlier quasimorphism must vanish on all powers of its witness while the fresh one grows like ℓ (2ℓ in the isomorphic mode), so the fresh homogenisation is outside the span of the earlier ones.

    **Key Arguments:**
        - ``log`` -- logger
        - ``config`` -- the group config
        - ``patterns`` -- the earlier patterns z₁…z_r
        - ``fresh`` -- optional fresh pattern. Default *None*
        - ``mode`` -- witness mode. Default *code-distinct*
        - ``side`` -- side carrying the codes. Default *A*
        - ``powers`` -- check ℓ = 1..powers. Default *20*

    **Return:**
        - ``probe`` -- dictionary with `fresh`, `m`, `word` data and a `rows` table of values per power
    """
    log.debug('starting the ``linear_independence_probe`` function')
    patterns = [check_pattern(z) for z in patterns]
    if fresh is None:
        entries = []
        while len(entries) < 3:
            entries.append(smallest_missing(*(patterns + [tuple(entries)])))
        fresh = tuple(entries)
    fresh = check_pattern(fresh)
    if not is_generic(fresh):
        raise WitnessError(f"the fresh pattern {fresh} is not generic")
    clash = [z for z in patterns if set(z) & set(fresh)]
    if clash:
        raise WitnessError(
            f"the fresh pattern {fresh} shares entries with {clash[0]}")

    m = smallest_missing(fresh, *patterns)
    spec = default_witness_spec(config, fresh, mode, side, m)
    w = witness_word(spec, config)
    earlier = [mode_qm(z, mode, spec.side) for z in patterns]
    q = spec.qm()

    rows = []
    for l in range(1, powers + 1):
        wl = power(w, l)
        values = [evaluate(p, wl) for p in earlier]
        value = evaluate(q, wl)
        rows.append({"power": l, "earlier": values, "fresh": value})
        if any(values) or value != spec.growth() * l:
            log.error(f"linear independence fails at ℓ={l}")
            raise WitnessError(
                f"at ℓ={l} the earlier quasimorphisms give {values} and the fresh one {value} (expected zeros and {spec.growth() * l})")

    log.debug('completed the ``linear_independence_probe`` function')
    return {"patterns": patterns, "fresh": fresh, "m": m, "mode": mode, "side": spec.side,
            "word": w, "earlier_qms": [p.spec() for p in earlier], "fresh_qm": q.spec(), "rows": rows}
