#!/usr/bin/env python
# encoding: utf-8
"""
*Certified lower bounds for scl_Aut and for word norms from quasimorphism values*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""
import sys
import os
from fractions import Fraction
from qmcode.commonutils.errors import BoundError


def scl_lower_bound(
        estimate,
        defect):
    """*the certified bound scl_Aut(w) ≥ max(|v| − ε, 0) / (2D)*

    The homogenisation error ε is subtracted before dividing, so the bound holds for every value in the estimate's interval.

    **Key Arguments:**
        - ``estimate`` -- a `homogenisation_estimate` (value v, error bound ε)
        - ``defect`` -- the defect bound D > 0 of the Aut-invariant quasimorphism

    **Return:**
        - ``bound`` -- a non-negative `Fraction`

    **Usage:**

    ```python
    from qmcode.verify.bounds import scl_lower_bound
    scl_lower_bound(homogenise(log, q, w, N=3000), 30)
    > Fraction(33, 2000)
    ```
    """
    defect = Fraction(defect)
    if defect <= 0:
        raise BoundError(
            f"the scl bound needs a positive defect, got {defect}; a quasimorphism of defect 0 is a homomorphism")
    margin = abs(estimate.value) - estimate.error_bound
    return max(margin, Fraction(0)) / (2 * defect)


def norm_lower_bound(
        psiValue,
        K,
        defect):
    """*the word-norm bound ‖g‖ ≥ |ψ(g)| / (K + D)*

    **Key Arguments:**
        - ``psiValue`` -- ψ(g)
        - ``K`` -- bound for |ψ| on the generating set (the letter bound for code quasimorphisms)
        - ``defect`` -- the defect bound D

    **Return:**
        - ``bound`` -- a `Fraction`
    """
    K = Fraction(K)
    defect = Fraction(defect)
    if K < 0:
        raise BoundError(f"K must be non-negative, got {K}")
    if defect < 0:
        raise BoundError(f"the defect bound must be non-negative, got {defect}")
    if K + defect == 0:
        raise BoundError("K + D is zero, so no norm bound follows")
    return abs(Fraction(psiValue)) / (K + defect)
