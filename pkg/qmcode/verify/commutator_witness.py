#!/usr/bin/env python
# encoding: utf-8
"""
*Witness words inside [Aut(G), G] for free products of two finite (or non-cyclic) factors, with a checked derivation of their membership*

:Author:
    David Young

:Date Created:
    October 18, 2026

For a factor automorphism f with f(a₁) = a₂ ≠ a₁ put c = a₂a₁⁻¹ = [f, a₁]. With distinct factors the witness is

    w = ∏ᵢ [a, h]·(c h c h⁻¹)^{nᵢ}

and with isomorphic factors (swap s, b = s(a), d = s(c))

    w = ∏ᵢ [a, b]·(c d)^{nᵢ}.

Every factor of these products is an aut-commutator [φ, x] = φ(x)·x⁻¹, recomputed and checked here.
"""
import sys
import os
from qmcode.commonutils.errors import WitnessError
from qmcode.commonutils.factors import factor_automorphism
from qmcode.commonutils.group_config import check_side, other_side
from qmcode.commonutils.codes import code, is_generic, format_code
from qmcode.commonutils.quasimorphisms import code_qm, qm_combination
from qmcode.commonutils.words import letter_word, multiply, invert, power, empty_word
from qmcode.commonutils.automorphisms import automorphism, factor_auto, swap, inner_automorphism, conjugate, aut_commutator
from qmcode.commonutils.parser import format_word
from qmcode.verify.witness_words import first_nontrivial


def _nontrivial_automorphism(factor):
    """*a factor automorphism f and an element a₁ with f(a₁) ≠ a₁, or None*"""
    if factor.kind == "cyclic":
        for u in factor.units():
            if u != 1:
                return factor_automorphism.multiplication(factor, u), 1
        return None
    if factor.kind == "table":
        for g in factor.nontrivial_elements():
            inner = factor_automorphism.conjugation(factor, g)
            for x in factor.nontrivial_elements():
                if inner(x) != x:
                    return inner, x
    return None


def default_commutator_letters(
        config,
        side=None):
    """*deterministic letters for the commutator witness*

    f is multiplication by the smallest unit u ≠ 1 (a₁ = 1, a₂ = u) for cyclic factors, or the first non-central inner automorphism for table groups; a is the smallest nontrivial element with a ≠ c and, when possible, a⁻¹ ≠ c; h is the generator (or first nontrivial element) of the other factor.

    **Key Arguments:**
        - ``config`` -- the group config
        - ``side`` -- side carrying the automorphism. Default *None* (A when it has a suitable automorphism, else B)

    **Return:**
        - ``letters`` -- dictionary with `side`, `fmap`, `a1`, `a2`, `a`, `h`
    """
    sides = [check_side(side)] if side else ["A", "B"]
    for s in sides:
        f = config.factor(s)
        found = _nontrivial_automorphism(f)
        if found is None:
            continue
        fmap, a1 = found
        a2 = fmap(a1)
        c = f._product(a2, f._inverse(a1))
        candidates = [x for x in f.nontrivial_elements() if x != c]
        preferred = [x for x in candidates if f._inverse(x) != c]
        a = (preferred or candidates)[0]
        g = config.factor(other_side(s))
        h = g.generator if g.generator is not None else first_nontrivial(g, 1)[0]
        return {"side": s, "fmap": fmap, "a1": a1, "a2": a2, "a": a, "h": h}
    if len(sides) == 1:
        raise WitnessError(
            f"factor {sides[0]} has no factor automorphism moving one of its elements; try the other side or pass an automorphism")
    raise WitnessError(
        "neither factor has a nontrivial automorphism with f(a1) ≠ a1 (for example ℤ/2 ∗ ℤ/2), so no witness can be built; abelian table groups need an explicit automorphism")


def witness_commutator_word(
        log,
        config,
        nList,
        side=None,
        fmap=None,
        a1=None,
        a2=None,
        a=None,
        h=None):
    """*build the commutator witness, its quasimorphism and the membership derivation*

    **Key Arguments:**
        - ``log`` -- logger
        - ``config`` -- the group config (no infinite cyclic factor)
        - ``nList`` -- at least three distinct positive integers
        - ``side`` -- side carrying the automorphism f. Default *None* (chosen automatically)
        - ``fmap`` -- the `factor_automorphism` f. Default *None* (chosen with the letters)
        - ``a1``, ``a2`` -- elements with f(a₁) = a₂ ≠ a₁; a₂ defaults to f(a₁)
        - ``a`` -- nontrivial element with a ≠ a₂a₁⁻¹
        - ``h`` -- nontrivial element of the other factor (distinct-factors case only)

    **Return:**
        - ``w`` -- the reduced witness word
        - ``q`` -- `code:side:z` (distinct factors) or `code:A:z + code:B:z` (isomorphic factors) with z = code(w, side) generic
        - ``derivation`` -- dictionary with the checked aut-commutator factors and the product formula

    **Usage:**

    ```python
    from qmcode.verify.commutator_witness import witness_commutator_word
    w, q, derivation = witness_commutator_word(log=log, config=cfg, nList=[5, 6, 7])
    ```
    """
    log.debug('starting the ``witness_commutator_word`` function')

    if config.integer_sides():
        message = "the commutator witness is built for factors without ℤ; with an infinite cyclic factor use the weighted witness instead"
        log.error(message)
        raise WitnessError(message)
    nList = list(nList)
    if len(nList) < 3 or len(set(nList)) != len(nList) or any(isinstance(n, bool) or not isinstance(n, int) or n < 1 for n in nList):
        raise WitnessError(
            "n_list must hold at least three distinct positive integers")

    if fmap is None:
        defaults = default_commutator_letters(config, side)
        side = defaults["side"]
        fmap = defaults["fmap"]
        if a1 is None:
            a1 = defaults["a1"]
        if a is None:
            a = defaults["a"]
        if h is None:
            h = defaults["h"]
    else:
        side = check_side(side) if side else ("A" if fmap.factor == config.factor("A") else "B")
        if fmap.factor != config.factor(side):
            raise WitnessError(
                f"the automorphism acts on {fmap.factor.label()}, not on factor {side}")
    other = other_side(side)
    f = config.factor(side)
    g = config.factor(other)
    isomorphic = config.has_swap()

    if a1 is None:
        movers = [x for x in f.nontrivial_elements() if fmap(x) != x]
        if not movers:
            raise WitnessError(
                f"`{fmap.spec()}` fixes every element of factor {side}")
        a1 = movers[0]
    f.check(a1)
    image = fmap(a1)
    if a2 is None:
        a2 = image
    elif a2 != image:
        raise WitnessError(
            f"f(a1) = {f.name(image)}, not the given a2 = {f.name(a2)}")
    if a2 == a1:
        raise WitnessError("f must move a1 (f(a1) = a1)")
    c = f._product(a2, f._inverse(a1))
    if a is None:
        candidates = [x for x in f.nontrivial_elements() if x != c]
        preferred = [x for x in candidates if f._inverse(x) != c]
        a = (preferred or candidates)[0]
    f.check(a)
    if f.is_identity(a) or a == c:
        raise WitnessError(
            "a must be nontrivial and different from a2·a1⁻¹")

    fAut = automorphism(config, [factor_auto(config, side, fmap)])
    aWord = letter_word(config, side, a)
    a1Word = letter_word(config, side, a1)
    cWord = letter_word(config, side, c)

    if isomorphic:
        sAut = automorphism(config, [swap(config)])
        partner = letter_word(config, other, config.swap_element(side, a))
        dWord = letter_word(config, other, config.swap_element(side, c))
        b1Word = letter_word(config, other, config.swap_element(side, a1))
        factors = [
            ("F1", "[ι_a, b] with b = s(a)", inner_automorphism(config, aWord), partner,
             multiply(multiply(aWord, partner), multiply(invert(aWord), invert(partner)))),
            ("F2", "[f, a1] = a2·a1⁻¹", fAut, a1Word, cWord),
            ("F3", "[s f s⁻¹, b1] = b2·b1⁻¹", conjugate(fAut, sAut), b1Word, dWord)
        ]
    else:
        if h is None:
            h = g.generator if g.generator is not None else first_nontrivial(g, 1)[0]
        g.check(h)
        if g.is_identity(h):
            raise WitnessError("h must be a nontrivial element of the other factor")
        hWord = letter_word(config, other, h)
        partner = hWord
        conjugated = multiply(multiply(hWord, cWord), invert(hWord))
        factors = [
            ("F1", "[ι_a, h]", inner_automorphism(config, aWord), hWord,
             multiply(multiply(aWord, hWord), multiply(invert(aWord), invert(hWord)))),
            ("F2", "[f, a1] = a2·a1⁻¹", fAut, a1Word, cWord),
            ("F3", "[ι_h f ι_h⁻¹, h a1 h⁻¹] = h·c·h⁻¹", conjugate(fAut, inner_automorphism(config, hWord)),
             multiply(multiply(hWord, a1Word), invert(hWord)), conjugated)
        ]

    # EVERY FACTOR MUST BE THE AUT-COMMUTATOR IT CLAIMS TO BE
    entries = []
    for name, label, phi, x, expected in factors:
        value = aut_commutator(phi, x)
        if value != expected:
            message = f"{name} = {label} evaluates to {format_word(value)}, expected {format_word(expected)}"
            log.error(message)
            raise WitnessError(message)
        entries.append({"name": name, "commutator": label, "automorphism": phi.spec(),
                        "argument": format_word(x), "result": format_word(value)})

    F1, F2, F3 = (e[4] for e in factors)
    step = multiply(F2, F3)
    w = empty_word(config)
    for n in nList:
        w = multiply(w, multiply(F1, power(step, n)))

    z = code(w, side)
    if not is_generic(z):
        message = f"the code {format_code(z)} of the witness is not generic; choose larger or more distinct n_list values"
        log.error(message)
        raise WitnessError(message)
    if isomorphic:
        q = qm_combination([(1, code_qm("A", z)), (1, code_qm("B", z))])
    else:
        q = code_qm(side, z)

    derivation = {
        "case": "isomorphic factors" if isomorphic else "distinct factors",
        "side": side,
        "automorphism": fmap.spec(),
        "letters": {"a1": f.name(a1), "a2": f.name(a2), "a": f.name(a), "c": f.name(c),
                    ("b" if isomorphic else "h"): format_word(partner)},
        "factors": entries,
        "product": "w = " + " · ".join(f"F1·(F2·F3)^{n}" for n in nList),
        "n_list": nList
    }
    log.info(
        f"commutator witness of length {len(w)} with code {format_code(z)}")
    log.debug('completed the ``witness_commutator_word`` function')
    return w, q, derivation
