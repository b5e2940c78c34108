#!/usr/bin/env python
# encoding: utf-8
"""
*Code quasimorphisms, weighted code quasimorphisms, their rational linear combinations and homogenisation intervals*

:Author:
    David Young

:Date Created:
    October 18, 2026

All certified quantities are `fractions.Fraction`; nothing here touches floating point.
"""
from builtins import object
import sys
import os
from fractions import Fraction
from qmcode.commonutils.errors import QmSpecError, DomainError
from qmcode.commonutils.group_config import check_side
from qmcode.commonutils.codes import code, weighted_z_code, count_disjoint, check_pattern, format_code
from qmcode.commonutils.words import power

# A PRIORI DEFECT OF A SINGLE CODE OR WEIGHTED CODE QUASIMORPHISM
CODE_DEFECT = Fraction(30)
# |f| ON A SINGLE LETTER
CODE_LETTER_BOUND = Fraction(2)

GENERATOR_KINDS = ("fauto", "pconj", "swap", "transv")


class code_qm(object):
    """
    *The code quasimorphism f^side_z(g) = θ_z(g) − θ_z(g⁻¹)*

    **Key Arguments:**
        - ``side`` -- the factor whose code is counted
        - ``z`` -- the pattern (tuple of positive integers)

    **Usage:**

    ```python
    from qmcode.commonutils.quasimorphisms import code_qm, evaluate
    q = code_qm(side="A", z=(1, 2))
    evaluate(q, w)
    ```
    """
    kind = "code"
    weighted = False

    def __init__(
            self,
            side,
            z):
        self.side = check_side(side)
        try:
            self.z = check_pattern(z)
        except DomainError as e:
            raise QmSpecError(e.message)

    def validate(self, config):
        """*raise a `QmSpecError` if this quasimorphism makes no sense over `config`*"""
        return self

    def counting_terms(self):
        """*the flattened (coefficient, basic quasimorphism) pairs*"""
        return [(Fraction(1), self)]

    def spec(self):
        return f"{self.kind}:{self.side}:{format_code(self.z)}"

    def __eq__(self, other):
        return type(other) is type(self) and (self.side, self.z) == (other.side, other.z)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.kind, self.side, self.z))

    def __repr__(self):
        return f"<qm {self.spec()}>"


class weighted_qm(code_qm):
    """
    *The weighted code quasimorphism on a free product with an infinite cyclic factor; counts z inside the weighted ℤ-code*
    """
    kind = "weighted"
    weighted = True

    def validate(self, config):
        if config.factor(self.side).kind != "integer":
            raise QmSpecError(
                f"`{self.spec()}` needs factor {self.side} to be ℤ, but it is {config.factor(self.side).label()}")
        return self


class qm_combination(object):
    """
    *A rational linear combination Σ cᵢ·qᵢ of quasimorphisms*

    **Key Arguments:**
        - ``terms`` -- nonempty list of (coefficient, quasimorphism) pairs; coefficients are converted to `Fraction`
    """
    kind = "combination"

    def __init__(
            self,
            terms):
        terms = [(Fraction(c), q) for c, q in terms]
        if not terms:
            raise QmSpecError("a combination needs at least one term")
        self.terms = terms

    def validate(self, config):
        for _, q in self.terms:
            q.validate(config)
        return self

    def counting_terms(self):
        flat = []
        for c, q in self.terms:
            flat.extend((c * d, p) for d, p in q.counting_terms())
        return flat

    def spec(self):
        parts = []
        for c, q in self.terms:
            text = q.spec() if c == 1 else f"{c}*{q.spec()}"
            if q.kind == "combination":
                text = f"{c}*({q.spec()})"
            if parts and not text.startswith("-"):
                text = "+" + text
            parts.append(text)
        return "".join(parts)

    def __eq__(self, other):
        return isinstance(other, qm_combination) and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(tuple(self.terms))

    def __repr__(self):
        return f"<qm {self.spec()}>"


def theta(
        w,
        side,
        z,
        weighted=False,
        cache=None):
    """*the counting function θ: disjoint occurrences of z in the (weighted) code of w on `side`*

    **Key Arguments:**
        - ``w`` -- reduced word
        - ``side`` -- `A` or `B`
        - ``z`` -- pattern
        - ``weighted`` -- count inside the weighted ℤ-code instead of the plain code. Default *False*
        - ``cache`` -- optional dictionary memoising codes of w within one evaluation

    **Return:**
        - ``count`` -- non-negative integer
    """
    key = (side, weighted)
    if cache is not None and key in cache:
        c = cache[key]
    else:
        c = weighted_z_code(w, side) if weighted else code(w, side)
        if cache is not None:
            cache[key] = c
    return count_disjoint(c, z)


def evaluate(q, w):
    """*evaluate a quasimorphism on a reduced word*

    θ_z(w) − θ_z̄(w) for code and weighted variants (θ_z(w⁻¹) equals θ_z̄(w) because inversion reverses codes) and the weighted sum for combinations.

    **Key Arguments:**
        - ``q`` -- the quasimorphism
        - ``w`` -- reduced word

    **Return:**
        - ``value`` -- `Fraction`
    """
    q.validate(w.config)
    cache = {}
    value = Fraction(0)
    for c, p in q.counting_terms():
        if not c:
            continue
        forward = theta(w, p.side, p.z, p.weighted, cache)
        backward = theta(w, p.side, p.z[::-1], p.weighted, cache)
        value += c * (forward - backward)
    return value


def a_priori_defect(q):
    """*the a-priori defect bound: 30 for code and weighted variants, Σ|cᵢ|·Dᵢ for combinations*"""
    if q.kind == "combination":
        return sum((abs(c) * a_priori_defect(p) for c, p in q.terms), Fraction(0))
    return CODE_DEFECT


def letter_bound(q):
    """*an upper bound for |q| on single letters: 2 per basic quasimorphism, Σ|cᵢ|·Kᵢ for combinations*"""
    if q.kind == "combination":
        return sum((abs(c) * letter_bound(p) for c, p in q.terms), Fraction(0))
    return CODE_LETTER_BOUND


class homogenisation_estimate(object):
    """
    *The certified interval for the homogenisation q̄(w): value ± error_bound with value = q(w^N)/N and error_bound = D/N*

    **Key Arguments:**
        - ``value`` -- q(w^N)/N
        - ``error_bound`` -- D/N
        - ``N`` -- the power used
        - ``defect`` -- the defect bound D
    """

    def __init__(
            self,
            value,
            error_bound,
            N,
            defect):
        self.value = Fraction(value)
        self.error_bound = Fraction(error_bound)
        self.N = N
        self.defect = Fraction(defect)

    def interval(self):
        return (self.value - self.error_bound, self.value + self.error_bound)

    def __eq__(self, other):
        return isinstance(other, homogenisation_estimate) and (self.value, self.error_bound, self.N, self.defect) == (other.value, other.error_bound, other.N, other.defect)

    def __repr__(self):
        return f"<homogenisation {self.value} ± {self.error_bound} (N={self.N})>"


def homogenise(
        log,
        q,
        w,
        N=1000):
    """*certified interval for the homogenisation of q at w*

    **Key Arguments:**
        - ``log`` -- logger
        - ``q`` -- the quasimorphism
        - ``w`` -- reduced word
        - ``N`` -- the power to evaluate at. Default *1000*

    **Return:**
        - ``estimate`` -- a `homogenisation_estimate`; the true q̄(w) lies in `estimate.interval()`

    **Usage:**

    ```python
    from qmcode.commonutils.quasimorphisms import homogenise
    estimate = homogenise(log=log, q=q, w=w, N=3000)
    print(estimate.interval())
    ```
    """
    log.debug('starting the ``homogenise`` function')
    if isinstance(N, bool) or not isinstance(N, int) or N < 1:
        log.error(f"the homogenisation power must be a positive integer, got {N!r}")
        raise DomainError(
            f"the homogenisation power must be a positive integer, got {N!r}")
    defect = a_priori_defect(q)
    value = evaluate(q, power(w, N)) / N
    estimate = homogenisation_estimate(
        value=value, error_bound=defect / N, N=N, defect=defect)
    log.debug('completed the ``homogenise`` function')
    return estimate


def _term_weights(q):
    weights = {}
    for c, p in q.counting_terms():
        key = (p.kind, p.side, p.z)
        weights[key] = weights.get(key, Fraction(0)) + c
    return {k: v for k, v in weights.items() if v}


def is_swap_symmetric(q):
    """*True when exchanging the sides of every counting term leaves the combination unchanged (so q is invariant under the swap)*"""
    weights = _term_weights(q)
    for (kind, side, z), c in weights.items():
        mirrored = (kind, "B" if side == "A" else "A", z)
        if weights.get(mirrored, Fraction(0)) != c:
            return False
    return True


def exact_invariance_kinds(q, config=None):
    """*the generator kinds under which q is exactly invariant (before homogenisation)*

    Code quasimorphisms are invariant under factor automorphisms; weighted code quasimorphisms on ℤ∗B (B not ℤ) also under transvections; combinations under the kinds common to all their terms, plus the swap when the combination is swap-symmetric.

    **Key Arguments:**
        - ``q`` -- the quasimorphism
        - ``config`` -- optional group config; the swap is only reported when the config has one

    **Return:**
        - ``kinds`` -- set of generator kind names
    """
    weights = _term_weights(q)
    if not weights:
        return set(GENERATOR_KINDS)
    kinds = set(GENERATOR_KINDS)
    for kind, side, z in weights:
        if kind == "weighted":
            other = config.factor("B" if side == "A" else "A") if config else None
            # TRANSVECTIONS OF THE OTHER ℤ FACTOR INSERT LETTERS INTO THIS SIDE
            if other is not None and other.kind == "integer":
                kinds &= {"fauto"}
            else:
                kinds &= {"fauto", "transv"}
        else:
            kinds &= {"fauto"}
    if is_swap_symmetric(q) and (config is None or config.has_swap()):
        kinds.add("swap")
    return kinds
