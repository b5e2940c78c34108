#!/usr/bin/env python
# encoding: utf-8
"""
*Arithmetic for a single free factor: the integers, finite cyclic groups and finite groups given by Cayley tables*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
################# GLOBAL IMPORTS ####################
from builtins import object
import sys
import os
import math
from qmcode.commonutils.errors import ElementError, TableError, ConfigError, AutomorphismError


class _base_factor_(object):
    """
    *The base class shared by the three factor realisations*

    Elements are opaque handles: an `int` for the integers, a residue in `[0, order)` for cyclic groups and a row index for table groups. All factors are immutable after construction.
    """
    kind = None
    identity = 0
    generator = None
    order = None

    def is_element(self, x):
        raise NotImplementedError

    def check(self, x):
        """*raise an `ElementError` if `x` is not a valid element of this factor*"""
        if not self.is_element(x):
            raise ElementError(
                f"`{x!r}` is not a valid element of the {self.label()} factor")
        return x

    def is_identity(self, x):
        return x == self.identity

    def multiply(self, x, y):
        """*the group product x·y (both arguments are validated)*"""
        self.check(x)
        self.check(y)
        return self._product(x, y)

    def inverse(self, x):
        """*the group inverse of x*"""
        self.check(x)
        return self._inverse(x)

    def power(self, x, k):
        """*the k-fold product of x with itself; negative k raises the inverse*

        **Key Arguments:**
            - ``x`` -- the element
            - ``k`` -- an integer exponent

        **Return:**
            - ``result`` -- the element x^k
        """
        self.check(x)
        if k < 0:
            x = self._inverse(x)
            k = -k
        result = self.identity
        base = x
        # SQUARE AND MULTIPLY
        while k:
            if k & 1:
                result = self._product(result, base)
            base = self._product(base, base)
            k >>= 1
        return result

    def elements(self):
        """*iterate over all elements of a finite factor*"""
        raise ElementError(
            f"the {self.label()} factor is infinite and cannot be enumerated")

    def nontrivial_elements(self):
        return [x for x in self.elements() if not self.is_identity(x)]

    def name(self, x):
        """*the printable name of an element*"""
        return str(x)

    def element(self, name):
        """*convert an element name (or integer) into an element handle*"""
        raise NotImplementedError

    def is_finite(self):
        return self.order is not None

    def describe(self):
        """*the config-document form of this factor*"""
        raise NotImplementedError

    def label(self):
        raise NotImplementedError

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, _base_factor_) and self._key() == other._key()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<{self.label()} factor>"


class integer_factor(_base_factor_):
    """
    *The infinite cyclic group ℤ written additively, with arbitrary-precision elements*

    **Usage:**

    ```python
    from qmcode.commonutils.factors import integer_factor
    Z = integer_factor()
    Z.multiply(7, -2)
    > 5
    ```
    """
    kind = "integer"
    identity = 0
    generator = 1
    order = None

    def is_element(self, x):
        return isinstance(x, int) and not isinstance(x, bool)

    def _product(self, x, y):
        return x + y

    def _inverse(self, x):
        return -x

    def power(self, x, k):
        self.check(x)
        return x * k

    def element(self, name):
        try:
            return int(str(name).strip())
        except ValueError:
            raise ElementError(f"`{name}` is not an integer")

    def describe(self):
        return {"kind": "integer"}

    def label(self):
        return "ℤ"

    def _key(self):
        return ("integer",)


class cyclic_factor(_base_factor_):
    """
    *The finite cyclic group ℤ/n written additively; residues are normalised on construction*

    **Key Arguments:**
        - ``order`` -- the order n of the group (n ≥ 2)

    **Usage:**

    ```python
    from qmcode.commonutils.factors import cyclic_factor
    Z5 = cyclic_factor(order=5)
    Z5.multiply(3, 4)
    > 2
    ```
    """
    kind = "cyclic"
    identity = 0
    generator = 1

    def __init__(
            self,
            order):
        if isinstance(order, bool) or not isinstance(order, int) or order < 2:
            raise ConfigError(
                f"a cyclic factor needs an integer order ≥ 2, got `{order!r}`")
        self.order = order

    def is_element(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.order

    def _product(self, x, y):
        return (x + y) % self.order

    def _inverse(self, x):
        return (-x) % self.order

    def power(self, x, k):
        self.check(x)
        return (x * k) % self.order

    def elements(self):
        return iter(range(self.order))

    def element(self, name):
        try:
            return int(str(name).strip()) % self.order
        except ValueError:
            raise ElementError(
                f"`{name}` is not a residue of ℤ/{self.order}")

    def units(self):
        """*iterate over the units of ℤ/n, i.e. the multipliers of the automorphisms*"""
        return (k for k in range(1, self.order) if math.gcd(k, self.order) == 1)

    def describe(self):
        return {"kind": "cyclic", "order": self.order}

    def label(self):
        return f"ℤ/{self.order}"

    def _key(self):
        return ("cyclic", self.order)


class table_factor(_base_factor_):
    """
    *A finite group given by a validated Cayley table; elements are row indices*

    Do not build this directly from untrusted input; use `validate_table` which checks the group axioms first.

    **Key Arguments:**
        - ``names`` -- the element names, in row order
        - ``identity`` -- the index of the identity element
        - ``table`` -- tuple of rows, `table[x][y]` is the index of x·y
    """
    kind = "table"
    generator = None

    def __init__(
            self,
            names,
            identity,
            table):
        self.names = tuple(names)
        self.identity = identity
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.names)
        self._index = {n: i for i, n in enumerate(self.names)}
        self._inverses = tuple(
            next(y for y in range(self.order) if self.table[x][y] == identity)
            for x in range(self.order))

    def is_element(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.order

    def _product(self, x, y):
        return self.table[x][y]

    def _inverse(self, x):
        return self._inverses[x]

    def elements(self):
        return iter(range(self.order))

    def name(self, x):
        return self.names[x]

    def element(self, name):
        name = str(name).strip()
        if name not in self._index:
            raise ElementError(
                f"`{name}` is not an element of the table group {{{', '.join(self.names)}}}")
        return self._index[name]

    def describe(self):
        return {
            "kind": "table",
            "elements": list(self.names),
            "identity": self.names[self.identity],
            "table": [[self.names[v] for v in row] for row in self.table]
        }

    def label(self):
        return f"table group of order {self.order}"

    def _key(self):
        return ("table", self.names, self.identity, self.table)


class factor_automorphism(object):
    """
    *An automorphism of a single factor*

    Three rules are supported: `mul` (x ↦ x^k, for ℤ with k = ±1 and for ℤ/n with k a unit), `conj` (the inner automorphism x ↦ g·x·g⁻¹) and `map` (an explicit bijection of a finite factor, checked exhaustively).

    **Key Arguments:**
        - ``factor`` -- the factor the automorphism acts on
        - ``rule`` -- one of `mul`, `conj` or `map`
        - ``value`` -- the multiplier, the conjugating element or the tuple of images

    **Usage:**

    ```python
    from qmcode.commonutils.factors import cyclic_factor, factor_automorphism
    double = factor_automorphism.multiplication(cyclic_factor(5), 2)
    double(3)
    > 1
    ```
    """

    def __init__(
            self,
            factor,
            rule,
            value):
        self.factor = factor
        self.rule = rule
        self.value = value

    @classmethod
    def multiplication(cls, factor, k):
        if factor.kind == "integer":
            if k not in (1, -1):
                raise AutomorphismError(
                    f"the only automorphisms of ℤ are x ↦ x and x ↦ -x, not x ↦ {k}x")
        elif factor.kind == "cyclic":
            k = k % factor.order
            if math.gcd(k, factor.order) != 1:
                raise AutomorphismError(
                    f"multiplication by {k} is not invertible on ℤ/{factor.order}")
        else:
            raise AutomorphismError(
                "multiplication maps are only defined for integer and cyclic factors; use `conj:` or `map:`")
        return cls(factor, "mul", k)

    @classmethod
    def conjugation(cls, factor, g):
        factor.check(g)
        return cls(factor, "conj", g)

    @classmethod
    def from_images(cls, factor, mapping):
        """*build and validate an explicit automorphism of a finite factor*

        **Key Arguments:**
            - ``factor`` -- a finite factor
            - ``mapping`` -- dictionary from element to image element (every element must appear)
        """
        if not factor.is_finite():
            raise AutomorphismError(
                "explicit maps are only accepted for finite factors; use `mul:1` or `mul:-1` on ℤ")
        images = []
        for x in factor.elements():
            if x not in mapping:
                raise AutomorphismError(
                    f"the map does not say where `{factor.name(x)}` goes")
            images.append(factor.check(mapping[x]))
        if len(set(images)) != factor.order:
            raise AutomorphismError("the map is not a bijection")
        failure = _first_broken_product(factor, factor, images)
        if failure:
            raise AutomorphismError(f"the map is not a homomorphism: {failure}")
        return cls(factor, "map", tuple(images))

    def __call__(self, x):
        f = self.factor
        if self.rule == "mul":
            return f.power(x, self.value)
        if self.rule == "conj":
            return f._product(f._product(self.value, f.check(x)), f._inverse(self.value))
        return self.value[f.check(x)]

    def inverse(self):
        f = self.factor
        if self.rule == "mul":
            if f.kind == "integer":
                return factor_automorphism(f, "mul", self.value)
            return factor_automorphism(f, "mul", pow(self.value, -1, f.order))
        if self.rule == "conj":
            return factor_automorphism(f, "conj", f._inverse(self.value))
        inverse = [0] * f.order
        for x, y in enumerate(self.value):
            inverse[y] = x
        return factor_automorphism(f, "map", tuple(inverse))

    def is_identity(self):
        f = self.factor
        if self.rule == "mul":
            return self.value == 1
        if f.is_finite():
            return all(self(x) == x for x in f.elements())
        # INNER AUTOMORPHISMS OF ℤ ARE TRIVIAL
        return True

    def spec(self):
        """*the textual map-spec of this automorphism (inverse of the parser's map-spec grammar)*"""
        f = self.factor
        if self.rule == "mul":
            return f"mul:{self.value}"
        if self.rule == "conj":
            return f"conj:{f.name(self.value)}"
        return "map:" + ",".join(f"{f.name(x)}>{f.name(y)}" for x, y in enumerate(self.value))

    def __eq__(self, other):
        if not isinstance(other, factor_automorphism) or other.factor != self.factor:
            return False
        if self.factor.is_finite():
            return all(self(x) == other(x) for x in self.factor.elements())
        return self(1) == other(1)

    def __hash__(self):
        return hash((self.factor, self.spec()))

    def __repr__(self):
        return f"<factor automorphism {self.spec()} of {self.factor.label()}>"


def random_factor_automorphism(
        factor,
        rng):
    """*draw an automorphism of a factor from the family the samplers use*

    ±1 for ℤ, a uniformly random unit multiplication for ℤ/n and a uniformly random inner automorphism for table groups (enumerating the full automorphism group of a table group is not attempted).

    **Key Arguments:**
        - ``factor`` -- the factor
        - ``rng`` -- a `numpy.random.Generator`
    """
    if factor.kind == "integer":
        return factor_automorphism(factor, "mul", int(rng.choice([1, -1])))
    if factor.kind == "cyclic":
        while True:
            k = int(rng.integers(1, factor.order))
            if math.gcd(k, factor.order) == 1:
                return factor_automorphism(factor, "mul", k)
    return factor_automorphism(factor, "conj", int(rng.integers(0, factor.order)))


def random_nontrivial_element(
        factor,
        rng,
        magnitude=9):
    """*draw a uniformly random non-identity element*

    **Key Arguments:**
        - ``factor`` -- the factor
        - ``rng`` -- a `numpy.random.Generator`
        - ``magnitude`` -- integer letters are drawn from [-magnitude, magnitude] without 0. Default *9*
    """
    if factor.kind == "integer":
        k = int(rng.integers(1, magnitude + 1))
        return k if rng.integers(0, 2) else -k
    # SHIFT PAST THE IDENTITY
    k = int(rng.integers(0, factor.order - 1))
    return k if k < factor.identity else k + 1


def _first_broken_product(
        source,
        target,
        images):
    """*return a description of the first product the map `images` fails to preserve, or None*"""
    for x in source.elements():
        for y in source.elements():
            lhs = images[source._product(x, y)]
            rhs = target._product(images[x], images[y])
            if lhs != rhs:
                return f"f({source.name(x)}·{source.name(y)}) = {target.name(lhs)} but f({source.name(x)})·f({source.name(y)}) = {target.name(rhs)}"
    return None


def check_isomorphism(
        source,
        target,
        mapping):
    """*validate that an element-name mapping is a group isomorphism between two factors*

    **Key Arguments:**
        - ``source`` -- the factor the mapping starts from
        - ``target`` -- the factor the mapping lands in
        - ``mapping`` -- dictionary from source elements to target elements (for infinite factors a dictionary with the image of the generator)

    **Return:**
        - ``images`` -- tuple of images for finite factors, or the sign ±1 for ℤ

    Raises a `ConfigError` naming a product the mapping fails to preserve.
    """
    if source.kind == "integer" or target.kind == "integer":
        if source.kind != target.kind:
            raise ConfigError("ℤ is only isomorphic to ℤ")
        sign = mapping.get(1, 1)
        if sign not in (1, -1):
            raise ConfigError(
                f"an isomorphism ℤ → ℤ sends 1 to ±1, not {sign}")
        return sign
    if source.order != target.order:
        raise ConfigError(
            f"cannot swap factors of different orders ({source.order} and {target.order})")
    images = []
    for x in source.elements():
        if x not in mapping:
            raise ConfigError(
                f"the swap map does not say where `{source.name(x)}` goes")
        images.append(target.check(mapping[x]))
    if len(set(images)) != target.order:
        raise ConfigError("the swap map is not a bijection")
    failure = _first_broken_product(source, target, images)
    if failure:
        raise ConfigError(f"the swap map is not an isomorphism: {failure}")
    return tuple(images)


def validate_table(
        log,
        raw,
        maxOrder=256):
    """*check a raw Cayley table against the group axioms*

    **Key Arguments:**
        - ``log`` -- logger
        - ``raw`` -- dictionary with `elements` (list of names), `identity` (a name) and `table` (list of rows of names, `table[i][j]` is elements[i]·elements[j])
        - ``maxOrder`` -- refuse tables larger than this (validation is cubic in the order). Default *256*

    **Return:**
        - ``factor`` -- the validated `table_factor`, or None when any axiom fails
        - ``errors`` -- list of violated axioms, each naming a witness

    **Usage:**

    ```python
    from qmcode.commonutils.factors import validate_table
    factor, errors = validate_table(log=log, raw={
        "elements": ["e", "s"], "identity": "e", "table": [["e", "s"], ["s", "e"]]})
    ```
    """
    log.debug('starting the ``validate_table`` function')

    errors = []
    names = [str(n) for n in (raw.get("elements") or [])]
    n = len(names)
    if n == 0:
        return None, ["the table group has no elements"]
    if len(set(names)) != n:
        return None, ["element names are not unique"]
    if n > maxOrder:
        return None, [f"order {n} exceeds the configured maximum table order of {maxOrder}"]
    badNames = [name for name in names if not name or any(
        ch.isspace() or ch in "[]()^" for ch in name)]
    if badNames:
        return None, [f"element names may not contain whitespace, brackets, parentheses or `^`: {', '.join(repr(b) for b in badNames)}"]
    index = {name: i for i, name in enumerate(names)}

    rows = raw.get("table")
    if not isinstance(rows, (list, tuple)) or len(rows) != n or any(not isinstance(r, (list, tuple)) or len(r) != n for r in rows):
        return None, [f"the table must have {n} rows of {n} entries"]

    # CLOSURE
    table = []
    for i, row in enumerate(rows):
        tableRow = []
        for j, entry in enumerate(row):
            entry = str(entry)
            if entry not in index:
                errors.append(
                    f"non-closure: {names[i]}·{names[j]} = {entry} is not an element")
                break
            tableRow.append(index[entry])
        if errors:
            break
        table.append(tableRow)
    if errors:
        log.debug('completed the ``validate_table`` function')
        return None, errors

    # IDENTITY
    identity = raw.get("identity")
    e = index.get(str(identity)) if identity is not None else None
    if e is None:
        errors.append("no identity: the declared identity is missing or not an element")
    else:
        for x in range(n):
            if table[e][x] != x or table[x][e] != x:
                errors.append(
                    f"no identity: {names[e]} does not fix {names[x]} (witness ({names[e]}, {names[x]}))")
                break

    # INVERSES
    if e is not None and not errors:
        for x in range(n):
            if not any(table[x][y] == e and table[y][x] == e for y in range(n)):
                errors.append(
                    f"missing inverse: {names[x]} has no two-sided inverse")
                break

    # ASSOCIATIVITY
    for x in range(n):
        rowX = table[x]
        for y in range(n):
            xy = rowX[y]
            rowY = table[y]
            for z in range(n):
                if table[xy][z] != rowX[rowY[z]]:
                    errors.append(
                        f"non-associative: ({names[x]}·{names[y]})·{names[z]} = {names[table[xy][z]]} but {names[x]}·({names[y]}·{names[z]}) = {names[rowX[rowY[z]]]} (witness ({names[x]}, {names[y]}, {names[z]}))")
                    break
            if len(errors) and errors[-1].startswith("non-associative"):
                break
        if len(errors) and errors[-1].startswith("non-associative"):
            break

    if errors:
        for err in errors:
            log.error(err)
        log.debug('completed the ``validate_table`` function')
        return None, errors

    log.debug('completed the ``validate_table`` function')
    return table_factor(names=names, identity=e, table=table), []


def load_factor(
        log,
        raw,
        maxOrder=256):
    """*build a factor from its config-document form*

    **Key Arguments:**
        - ``log`` -- logger
        - ``raw`` -- dictionary with a `kind` key (`integer`, `cyclic` or `table`) and the kind-specific keys
        - ``maxOrder`` -- largest accepted table order. Default *256*

    **Return:**
        - ``factor`` -- the factor object
    """
    if not isinstance(raw, dict) or "kind" not in raw:
        raise ConfigError("each factor needs a `kind` (integer, cyclic or table)")
    kind = str(raw["kind"]).strip().lower()
    if kind == "integer":
        return integer_factor()
    if kind == "cyclic":
        return cyclic_factor(order=raw.get("order"))
    if kind == "table":
        factor, errors = validate_table(log=log, raw=raw, maxOrder=maxOrder)
        if errors:
            raise TableError(errors)
        return factor
    raise ConfigError(
        f"unknown factor kind `{raw['kind']}` (expected integer, cyclic or table)")
