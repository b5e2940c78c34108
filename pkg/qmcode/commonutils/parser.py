#!/usr/bin/env python
# encoding: utf-8
"""
*Text in and out: the word grammar, group-config documents, quasimorphism specs and automorphism specs*

:Author:
    David Young

:Date Created:
    October 18, 2026

Word grammar:

```text
word   := term+
term   := atom ['^' signed-int]
atom   := letter | '(' word ')'
letter := ('a' | 'b') ['[' element ']']
```

A bare `a`/`b` is the generator 1 of an integer or cyclic factor; `a[k]` picks element k (or the named element of a table group). The identity prints as `1`.
"""
import sys
import os
import re
from fractions import Fraction
import yaml
from lark import Lark, Transformer
from lark.exceptions import UnexpectedInput, VisitError
from qmcode.commonutils.errors import QmcodeError, WordSyntaxError, SpecSyntaxError, ConfigError, ElementError, QmSpecError, AutomorphismError
from qmcode.commonutils.factors import load_factor, check_isomorphism, factor_automorphism
from qmcode.commonutils.group_config import group_config, check_side
from qmcode.commonutils.words import letter, word
from qmcode.commonutils.quasimorphisms import code_qm, weighted_qm, qm_combination
from qmcode.commonutils import automorphisms as auts
from qmcode.commonutils.getpackagepath import bundled_config_path

WORD_GRAMMAR = r"""
    start: word
         | "1"                 -> identity

    word: term+
    term: atom ("^" SIGNED_INT)?
    ?atom: letter
         | "(" word ")"
    letter: LETTER ("[" ELEM "]")?

    LETTER: /[ab](?![0-9A-Za-z_])/
    ELEM: /[^\[\]\s()^]+/
    SIGNED_INT: /[+-]?[0-9]+/

    %import common.WS
    %ignore WS
"""

QM_GRAMMAR = r"""
    start: first (SIGN term)*
    first: SIGN? term
    term: (COEF "*")? KIND ":" SIDE ":" pattern
    pattern: "(" INT ("," INT)* ")"

    SIGN: "+" | "-"
    COEF: /[0-9]+(\.[0-9]+)?(\/[0-9]+)?/
    KIND: "code" | "weighted"
    SIDE: /[ABab]/
    INT: /[0-9]+/

    %import common.WS
    %ignore WS
"""

_wordParser = Lark(WORD_GRAMMAR, parser="lalr")

# LARGEST NUMBER OF LETTERS A PARSED WORD MAY EXPAND TO BEFORE REDUCTION
MAX_WORD_LETTERS = 1000000
_qmParser = Lark(QM_GRAMMAR, parser="lalr")


def _syntax_message(text, e):
    """*a one-line description of a lark error with its line and column*"""
    line = getattr(e, "line", -1)
    column = getattr(e, "column", -1)
    if line is None or line < 1:
        return f"unexpected end of input in `{text}`"
    return f"unexpected input at line {line}, column {column} of `{text}`"


class _word_builder(Transformer):
    """*turn a word parse tree into a flat list of letters over one group config*"""

    def __init__(self, config, maxLetters=MAX_WORD_LETTERS):
        super(_word_builder, self).__init__()
        self.config = config
        self.maxLetters = maxLetters

    def _check_size(self, n):
        if n > self.maxLetters:
            raise WordSyntaxError(
                f"the word expands to {n} letters, more than the limit of {self.maxLetters}")

    def identity(self, children):
        return []

    def start(self, children):
        return children[0]

    def word(self, children):
        letters = []
        for c in children:
            letters.extend(c)
        self._check_size(len(letters))
        return letters

    def letter(self, children):
        side = "A" if str(children[0]) == "a" else "B"
        f = self.config.factor(side)
        if len(children) == 1:
            if f.generator is None:
                raise WordSyntaxError(
                    f"`{children[0]}` has no distinguished generator on the {f.label()}; name the element as `{children[0]}[x]`")
            return [letter(side, f.generator)]
        return [letter(side, f.element(str(children[1])))]

    def term(self, children):
        letters = children[0]
        if len(children) == 1:
            return letters
        k = int(str(children[1]))
        if len(letters) == 1:
            l = letters[0]
            return [letter(l.side, self.config.factor(l.side).power(l.elem, k))]
        if k < 0:
            letters = [letter(l.side, self.config.factor(l.side).inverse(l.elem))
                       for l in reversed(letters)]
        self._check_size(len(letters) * abs(k))
        return letters * abs(k)


def parse_word(text, config, maxLetters=MAX_WORD_LETTERS):
    """*parse a word in the word grammar*

    **Key Arguments:**
        - ``text`` -- the word, e.g. `a^2 b a b a b a^4 b a b a`
        - ``config`` -- the group config the letters belong to
        - ``maxLetters`` -- largest number of letters the word may expand to before reduction; larger words raise a `WordSyntaxError`. Default *1000000*

    **Return:**
        - ``w`` -- a `word` (not yet reduced)

    **Usage:**

    ```python
    from qmcode.commonutils.parser import parse_word
    from qmcode.commonutils.words import reduce
    w = reduce(parse_word("(a b)^3", cfg))
    ```
    """
    try:
        tree = _wordParser.parse(text)
        letters = _word_builder(config, maxLetters).transform(tree)
    except UnexpectedInput as e:
        raise WordSyntaxError(_syntax_message(text, e))
    except VisitError as e:
        if isinstance(e.orig_exc, QmcodeError):
            raise e.orig_exc
        raise WordSyntaxError(str(e.orig_exc))
    return word(config, letters)


def format_letter(config, l):
    f = config.factor(l.side)
    char = "a" if l.side == "A" else "b"
    if f.kind == "table":
        return f"{char}[{f.name(l.elem)}]"
    if l.elem == 1:
        return char
    return f"{char}^{l.elem}"


def format_word(w):
    """*print a reduced word in the word grammar; the empty word prints as `1`*"""
    if not w.letters:
        return "1"
    return " ".join(format_letter(w.config, l) for l in w.letters)


def parse_pattern(text):
    """*parse a pattern such as `(1,2,3)` or `1,2,3` into a tuple of positive integers*"""
    body = str(text).strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        z = tuple(int(n) for n in body.split(",") if n.strip())
    except ValueError:
        raise SpecSyntaxError(f"`{text}` is not a pattern like (1,2,3)")
    if not z or any(n < 1 for n in z):
        raise SpecSyntaxError(
            f"`{text}` is not a nonempty tuple of positive integers")
    return z


def format_pattern(z):
    return "(" + ",".join(str(n) for n in z) + ")"


class _qm_builder(Transformer):

    def pattern(self, children):
        return tuple(int(str(c)) for c in children)

    def term(self, children):
        coefficient = Fraction(1)
        if len(children) == 4:
            coefficient = Fraction(str(children[0]))
            children = children[1:]
        kind, side, z = str(children[0]), str(children[1]).upper(), children[2]
        q = weighted_qm(side, z) if kind == "weighted" else code_qm(side, z)
        return coefficient, q

    def first(self, children):
        if len(children) == 2:
            c, q = children[1]
            return (-c if str(children[0]) == "-" else c), q
        return children[0]

    def start(self, children):
        terms = [children[0]]
        rest = children[1:]
        for sign, (c, q) in zip(rest[0::2], rest[1::2]):
            terms.append((-c if str(sign) == "-" else c, q))
        return terms


def parse_qm_spec(text):
    """*parse a quasimorphism spec*

    **Key Arguments:**
        - ``text`` -- e.g. `code:A:(1,2,3)`, `weighted:A:(1,2,3)` or `1/2*code:A:(1,2,3)+1/2*code:B:(1,2,3)`

    **Return:**
        - ``q`` -- a `code_qm`, `weighted_qm` or `qm_combination`
    """
    try:
        terms = _qm_builder().transform(_qmParser.parse(text))
    except UnexpectedInput as e:
        raise SpecSyntaxError(
            "quasimorphism spec: " + _syntax_message(text, e))
    except VisitError as e:
        if isinstance(e.orig_exc, QmcodeError):
            raise e.orig_exc
        raise SpecSyntaxError(str(e.orig_exc))
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    return qm_combination(terms)


def parse_factor_automorphism(factor, text):
    """*parse a map-spec (`mul:k`, `conj:g` or `map:x>y,...`) into a `factor_automorphism`*"""
    rule, _, value = str(text).strip().partition(":")
    if not value:
        raise SpecSyntaxError(
            f"`{text}` is not a map-spec (expected mul:k, conj:g or map:x>y,...)")
    if rule == "mul":
        try:
            k = int(value)
        except ValueError:
            raise SpecSyntaxError(f"`{value}` is not an integer multiplier")
        return factor_automorphism.multiplication(factor, k)
    if rule == "conj":
        return factor_automorphism.conjugation(factor, factor.element(value))
    if rule == "map":
        mapping = {}
        for pair in value.split(","):
            source, arrow, target = pair.partition(">")
            if not arrow:
                raise SpecSyntaxError(
                    f"`{pair}` is not a map entry like x>y")
            mapping[factor.element(source)] = factor.element(target)
        return factor_automorphism.from_images(factor, mapping)
    raise SpecSyntaxError(
        f"unknown map-spec rule `{rule}` (expected mul, conj or map)")


def parse_generator(text, config):
    """*parse one generator: `fauto:A:map-spec`, `pconj:A:elem`, `swap` or `transv:A:left:elem`*"""
    token = text.strip()
    kind, _, rest = token.partition(":")
    if kind == "swap" and not rest:
        return auts.swap(config)
    if kind == "fauto":
        side, _, spec = rest.partition(":")
        side = check_side(side)
        return auts.factor_auto(config, side, parse_factor_automorphism(config.factor(side), spec))
    if kind == "pconj":
        side, _, elem = rest.partition(":")
        side = check_side(side)
        if not elem:
            raise SpecSyntaxError(f"`{token}` needs an element: pconj:A:elem")
        return auts.partial_conjugation(config, side, config.factor(side).element(elem))
    if kind == "transv":
        parts = rest.split(":")
        if len(parts) != 3:
            raise SpecSyntaxError(
                f"`{token}` is not a transvection like transv:A:left:elem")
        side = check_side(parts[0])
        other = config.factor("B" if side == "A" else "A")
        return auts.transvection(config, side, parts[1], other.element(parts[2]))
    raise SpecSyntaxError(
        f"unknown generator `{token}` (expected fauto, pconj, swap or transv)")


def parse_automorphism(text, config):
    """*parse a generator word; generators are separated by whitespace or `;` and applied left to right (`id` is the identity)*

    **Usage:**

    ```python
    from qmcode.commonutils.parser import parse_automorphism
    phi = parse_automorphism("fauto:A:mul:2 pconj:B:1", cfg)
    ```
    """
    tokens = [t for t in re.split(r"[\s;]+", str(text).strip()) if t and t != "id"]
    return auts.automorphism(config, [parse_generator(t, config) for t in tokens])


def _parse_swap(
        raw,
        present,
        factorA,
        factorB):
    """*turn the `swap` entry of a config document into a validated isomorphism (or None)*"""
    if not present:
        # DEFAULT TO THE IDENTITY NAME-MAP FOR IDENTICAL FACTORS
        if factorA == factorB:
            raw = "identity"
        else:
            return None
    if raw is None or raw is False or (isinstance(raw, str) and raw.strip().lower() in ("none", "off", "no")):
        return None
    if isinstance(raw, str) and raw.strip().lower() == "identity":
        if factorA.kind == "integer":
            return check_isomorphism(factorA, factorB, {1: 1})
        if not factorA.is_finite() or not factorB.is_finite():
            raise ConfigError("ℤ is only isomorphic to ℤ")
        try:
            mapping = {x: factorB.element(factorA.name(x))
                       for x in factorA.elements()}
        except ElementError as e:
            raise ConfigError(
                f"the identity swap needs B to use A's element names: {e.message}")
        return check_isomorphism(factorA, factorB, mapping)
    if isinstance(raw, dict):
        try:
            if factorA.kind == "integer":
                mapping = {1: int(raw.get(1, raw.get("1", 1)))}
            else:
                mapping = {factorA.element(k): factorB.element(v)
                           for k, v in raw.items()}
        except (ElementError, ValueError) as e:
            raise ConfigError(f"invalid swap map: {e}")
        return check_isomorphism(factorA, factorB, mapping)
    raise ConfigError(
        f"`swap` must be `identity`, `none` or a mapping from A-elements to B-elements, not `{raw!r}`")


def parse_config(
        log,
        text,
        maxOrder=256,
        name=None):
    """*parse a group-config document*

    **Key Arguments:**
        - ``log`` -- logger
        - ``text`` -- the YAML document (`factors: {A: ..., B: ...}` and optional `swap`)
        - ``maxOrder`` -- largest accepted Cayley table. Default *256*
        - ``name`` -- optional label for the config

    **Return:**
        - ``config`` -- the validated `group_config`

    **Usage:**

    ```python
    from qmcode.commonutils.parser import parse_config
    cfg = parse_config(log=log, text=\"\"\"
    factors:
        A: {kind: cyclic, order: 5}
        B: {kind: cyclic, order: 2}
    \"\"\")
    ```
    """
    log.debug('starting the ``parse_config`` function')
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        problem = getattr(e, "problem", None) or str(e)
        log.error(f"config syntax error{where}: {problem}")
        raise ConfigError(f"config syntax error{where}: {problem}")

    if not isinstance(raw, dict) or not isinstance(raw.get("factors"), dict):
        raise ConfigError(
            "a group config needs a `factors` mapping with entries A and B")
    factors = raw["factors"]
    for side in ("A", "B"):
        if side not in factors:
            raise ConfigError(f"the config does not define factor {side}")
    factorA = load_factor(log=log, raw=factors["A"], maxOrder=maxOrder)
    factorB = load_factor(log=log, raw=factors["B"], maxOrder=maxOrder)
    swap = _parse_swap(raw.get("swap"), "swap" in raw, factorA, factorB)

    log.debug('completed the ``parse_config`` function')
    return group_config(factorA=factorA, factorB=factorB, swap=swap, name=name)


def load_config(
        log,
        pathOrName,
        maxOrder=256):
    """*read a group config from a file, or one of the configs bundled in `resources/` by name (e.g. `z5_z2`)*"""
    path = os.path.expanduser(str(pathOrName))
    if not os.path.isfile(path):
        bundled = bundled_config_path(str(pathOrName))
        if not os.path.isfile(bundled):
            log.error(f"cannot find the group config `{pathOrName}`")
            raise ConfigError(f"cannot find the group config `{pathOrName}`")
        path = bundled
    with open(path, "r") as stream:
        text = stream.read()
    name = os.path.splitext(os.path.basename(path))[0]
    return parse_config(log=log, text=text, maxOrder=maxOrder, name=name)
