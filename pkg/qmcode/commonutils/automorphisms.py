#!/usr/bin/env python
# encoding: utf-8
"""
*The generators of Aut(A∗B) (factor automorphisms, partial conjugations, the swap and transvections), automorphisms as generator words, and aut-commutators*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
from builtins import object
import sys
import os
import numpy as np
from qmcode.commonutils.errors import AutomorphismError, DomainError
from qmcode.commonutils.group_config import check_side, other_side
from qmcode.commonutils.factors import factor_automorphism, random_factor_automorphism, random_nontrivial_element
from qmcode.commonutils.words import letter, word, reduce, multiply, invert


class _base_generator_(object):
    """
    *The shared behaviour of the four generator kinds: a generator maps each letter to a short word, and the image of a reduced word is the reduced concatenation of the letter images*
    """
    kind = None

    def __init__(self, config):
        self.config = config

    def letter_image(self, l):
        """*the (unreduced) letters the letter `l` is sent to*"""
        raise NotImplementedError

    def apply(self, w):
        """*the image of a reduced word*"""
        if w.config != self.config:
            raise DomainError(
                "the automorphism and the word live over different group configs")
        images = word(self.config)
        letters = []
        for l in w.letters:
            letters.extend(self.letter_image(l))
        images.letters = tuple(letters)
        return reduce(images)

    def inverse(self):
        raise NotImplementedError

    def spec(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(other) is type(self) and self.config == other.config and self.spec() == other.spec()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.spec())

    def __repr__(self):
        return f"<generator {self.spec()}>"


class factor_auto(_base_generator_):
    """
    *A factor automorphism: an automorphism of the factor on `side` acting on that side's letters, the other letters fixed*

    **Key Arguments:**
        - ``config`` -- the group config
        - ``side`` -- `A` or `B`
        - ``fmap`` -- a `factor_automorphism` of the factor on `side`
    """
    kind = "fauto"

    def __init__(
            self,
            config,
            side,
            fmap):
        self.config = config
        self.side = check_side(side)
        if fmap.factor != config.factor(self.side):
            raise AutomorphismError(
                f"the map acts on {fmap.factor.label()}, not on factor {self.side}")
        self.fmap = fmap

    def letter_image(self, l):
        if l.side == self.side:
            return [letter(l.side, self.fmap(l.elem))]
        return [l]

    def inverse(self):
        return factor_auto(self.config, self.side, self.fmap.inverse())

    def spec(self):
        return f"fauto:{self.side}:{self.fmap.spec()}"


class partial_conjugation(_base_generator_):
    """
    *Conjugate every letter of the opposite factor by the element g of the factor on `side`*

    **Key Arguments:**
        - ``config`` -- the group config
        - ``side`` -- the side g lives on
        - ``g`` -- the conjugating element
    """
    kind = "pconj"

    def __init__(
            self,
            config,
            side,
            g):
        self.config = config
        self.side = check_side(side)
        f = config.factor(self.side)
        self.g = f.check(g)
        self.gInverse = f._inverse(g)

    def letter_image(self, l):
        if l.side == self.side:
            return [l]
        return [letter(self.side, self.g), l, letter(self.side, self.gInverse)]

    def inverse(self):
        return partial_conjugation(self.config, self.side, self.gInverse)

    def spec(self):
        return f"pconj:{self.side}:{self.config.factor(self.side).name(self.g)}"


class swap(_base_generator_):
    """
    *The swap automorphism: exchange the two factors through the config's swap isomorphism; an involution*
    """
    kind = "swap"

    def __init__(self, config):
        self.config = config
        if not config.has_swap():
            raise AutomorphismError(
                "the swap needs a swap isomorphism in the group config")

    def letter_image(self, l):
        return [letter(other_side(l.side), self.config.swap_element(l.side, l.elem))]

    def inverse(self):
        return self

    def spec(self):
        return "swap"


class transvection(_base_generator_):
    """
    *A transvection of the infinite cyclic factor on `side`: its generator s goes to s·a (right) or a·s (left) for a nontrivial a in the other factor*

    **Key Arguments:**
        - ``config`` -- the group config
        - ``side`` -- the side carrying ℤ
        - ``direction`` -- `left` or `right`
        - ``a`` -- nontrivial element of the opposite factor

    **Usage:**

    ```python
    from qmcode.commonutils.automorphisms import transvection
    t = transvection(config=cfg, side="A", direction="right", a=1)
    t.apply(w)
    ```
    """
    kind = "transv"

    def __init__(
            self,
            config,
            side,
            direction,
            a):
        self.config = config
        self.side = check_side(side)
        if config.factor(self.side).kind != "integer":
            raise AutomorphismError(
                f"transvections need factor {self.side} to be ℤ, but it is {config.factor(self.side).label()}")
        direction = str(direction).strip().lower()
        if direction not in ("left", "right"):
            raise AutomorphismError(
                f"a transvection direction is `left` or `right`, not `{direction}`")
        self.direction = direction
        other = config.factor(other_side(self.side))
        other.check(a)
        if other.is_identity(a):
            raise AutomorphismError(
                "a transvection needs a nontrivial element of the other factor")
        self.a = a
        self.aInverse = other._inverse(a)

    def letter_image(self, l):
        if l.side != self.side:
            return [l]
        k = l.elem
        o = other_side(self.side)
        if self.direction == "right":
            # s ↦ s·a, s⁻¹ ↦ a⁻¹·s⁻¹
            block = [letter(self.side, 1), letter(o, self.a)] if k > 0 else [
                letter(o, self.aInverse), letter(self.side, -1)]
        else:
            # s ↦ a·s, s⁻¹ ↦ s⁻¹·a⁻¹
            block = [letter(o, self.a), letter(self.side, 1)] if k > 0 else [
                letter(self.side, -1), letter(o, self.aInverse)]
        return block * abs(k)

    def inverse(self):
        return transvection(self.config, self.side, self.direction, self.aInverse)

    def spec(self):
        return f"transv:{self.side}:{self.direction}:{self.config.factor(other_side(self.side)).name(self.a)}"


class automorphism(object):
    """
    *An automorphism of A∗B stored as a word in the generators, applied left to right*

    **Key Arguments:**
        - ``config`` -- the group config
        - ``gens`` -- list of generators (empty for the identity)

    **Usage:**

    ```python
    from qmcode.commonutils.automorphisms import automorphism, swap
    phi = automorphism(config=cfg, gens=[swap(cfg)])
    phi.apply(w)
    ```
    """

    def __init__(
            self,
            config,
            gens=()):
        self.config = config
        self.gens = tuple(gens)
        for g in self.gens:
            if g.config != config:
                raise AutomorphismError(
                    "all generators of an automorphism must share one group config")

    def apply(self, w):
        for g in self.gens:
            w = g.apply(w)
        return w

    def inverse(self):
        return automorphism(self.config, [g.inverse() for g in reversed(self.gens)])

    def then(self, other):
        """*the automorphism that applies self first and then other*"""
        return automorphism(self.config, self.gens + other.gens)

    def kinds(self):
        return [g.kind for g in self.gens]

    def spec(self):
        return " ".join(g.spec() for g in self.gens) if self.gens else "id"

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"<automorphism {self.spec()}>"


def apply_gen(g, w):
    """*apply a single generator to a reduced word*"""
    return g.apply(w)


def apply(phi, w):
    """*apply an automorphism (a generator word, left to right) to a reduced word*"""
    return phi.apply(w)


def aut_commutator(phi, w):
    """*the aut-commutator [φ, w] = φ(w)·w⁻¹*

    **Key Arguments:**
        - ``phi`` -- an `automorphism` (or a single generator)
        - ``w`` -- reduced word

    **Return:**
        - ``commutator`` -- reduced word in [Aut(G), G]
    """
    return multiply(phi.apply(w), invert(w))


def inner_automorphism(config, g):
    """*conjugation x ↦ g·x·g⁻¹ by a reduced word g, written in the generators*

    Conjugation by a single letter e on `side` is the partial conjugation by e of the other side followed by the inner factor automorphism x ↦ e·x·e⁻¹ of `side`; conjugation by l₁⋯lₙ applies the letter conjugations from lₙ back to l₁.

    **Key Arguments:**
        - ``config`` -- the group config
        - ``g`` -- reduced word

    **Return:**
        - ``phi`` -- the inner automorphism as an `automorphism`
    """
    gens = []
    for l in reversed(g.letters):
        f = config.factor(l.side)
        gens.append(partial_conjugation(config, l.side, l.elem))
        gens.append(factor_auto(config, l.side,
                                factor_automorphism.conjugation(f, l.elem)))
    return automorphism(config, gens)


def conjugate(phi, psi):
    """*the automorphism ψ∘φ∘ψ⁻¹ as a generator word*"""
    return psi.inverse().then(phi).then(psi)


def available_kinds(config):
    """*the generator kinds that exist for a group config*"""
    kinds = ["fauto", "pconj"]
    if config.has_swap():
        kinds.append("swap")
    if config.integer_sides():
        kinds.append("transv")
    return kinds


def random_generator(
        config,
        kind,
        rng,
        magnitude=9):
    """*draw one generator of the given kind*

    **Key Arguments:**
        - ``config`` -- the group config
        - ``kind`` -- one of `fauto`, `pconj`, `swap`, `transv`
        - ``rng`` -- a `numpy.random.Generator`
        - ``magnitude`` -- bound on integer elements drawn for ℤ factors. Default *9*
    """
    if kind == "swap":
        return swap(config)
    if kind == "transv":
        side = str(rng.choice(config.integer_sides()))
        other = config.factor(other_side(side))
        return transvection(
            config, side, str(rng.choice(["left", "right"])),
            random_nontrivial_element(other, rng, magnitude))
    side = str(rng.choice(["A", "B"]))
    f = config.factor(side)
    if kind == "fauto":
        return factor_auto(config, side, random_factor_automorphism(f, rng))
    if kind == "pconj":
        return partial_conjugation(config, side, random_nontrivial_element(f, rng, magnitude))
    raise AutomorphismError(f"unknown generator kind `{kind}`")


def random_automorphism(
        log,
        config,
        length,
        seed,
        kinds=None,
        magnitude=9):
    """*a reproducible random generator word*

    Each generator's kind is drawn uniformly from the requested kinds that exist for the config.

    **Key Arguments:**
        - ``log`` -- logger
        - ``config`` -- the group config
        - ``length`` -- number of generators (≥ 1)
        - ``seed`` -- an integer seed, a seed sequence list, or a `numpy.random.Generator`
        - ``kinds`` -- optional list of generator kinds; a requested kind missing from the config is an error. Default *all available kinds*
        - ``magnitude`` -- bound on integer elements. Default *9*

    **Return:**
        - ``phi`` -- an `automorphism` with `length` generators
    """
    log.debug('starting the ``random_automorphism`` function')
    if length < 1:
        raise DomainError("an automorphism sample needs length ≥ 1")
    available = available_kinds(config)
    if kinds is None:
        kinds = available
    else:
        missing = [k for k in kinds if k not in available]
        if missing:
            message = f"generator kind(s) {', '.join(missing)} do not exist for {config.label()}"
            if "swap" in missing:
                message += " (the config has no swap isomorphism)"
            if "transv" in missing:
                message += " (transvections need an infinite cyclic factor)"
            log.error(message)
            raise AutomorphismError(message)
        kinds = list(kinds)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    gens = [random_generator(config, str(rng.choice(kinds)), rng, magnitude)
            for _ in range(length)]
    log.debug('completed the ``random_automorphism`` function')
    return automorphism(config, gens)
