#!/usr/bin/env python
# encoding: utf-8
"""
*Campaign reports and their machine (YAML) and text (tabulate) renderings*

:Author:
    David Young

:Date Created:
    October 18, 2026

Machine documents carry `schema: qmcode-report/1` and a `report` type; every rational is written exactly (an integer or a `p/q` string) so that `load_report` gives back identical values.
"""
from builtins import object
import sys
import os
from fractions import Fraction
import yaml
from tabulate import tabulate
from qmcode.commonutils.errors import DomainError
from qmcode.commonutils.toolkit import fraction_text, parse_fraction, decimal_text

SCHEMA = "qmcode-report/1"

# FIELDS HOLDING EXACT RATIONALS, AT ANY DEPTH OF A REPORT DOCUMENT
RATIONAL_FIELDS = {
    "max_observed", "bound", "value", "error_bound", "lower", "upper",
    "defect", "deviation", "scl_lower_bound", "norm_lower_bound", "letter_bound",
    "expected", "before", "after", "coefficient", "total_deviation"
}


class campaign_report(object):
    """
    *The outcome of a randomised campaign*

    **Key Arguments:**
        - ``report`` -- the campaign type (`defect`, `theta-subadditivity` or `invariance`)
        - ``trials`` -- number of sampled trials
        - ``max_observed`` -- the largest observed deviation
        - ``bound`` -- the bound being certified (None when no bound is certified)
        - ``violations`` -- list of counterexample dictionaries (each reproducible from the seed and its trial index)
        - ``seed`` -- the campaign seed
        - ``extra`` -- additional report fields (quasimorphism, config, per-kind maxima, ...)
    """

    def __init__(
            self,
            report,
            trials,
            max_observed,
            bound,
            violations,
            seed,
            extra=None):
        self.report = report
        self.trials = trials
        self.max_observed = Fraction(max_observed)
        self.bound = None if bound is None else Fraction(bound)
        self.violations = list(violations)
        self.seed = seed
        self.extra = dict(extra or {})
        if self.bound is not None and bool(self.violations) != (self.max_observed > self.bound):
            raise DomainError(
                "inconsistent report: violations must be recorded exactly when the bound is exceeded")

    def certified(self):
        """*True when a bound is asserted and no sample exceeded it*"""
        return self.bound is not None and not self.violations

    def to_document(self):
        doc = {
            "schema": SCHEMA,
            "report": self.report,
            "trials": self.trials,
            "max_observed": self.max_observed,
            "bound": self.bound,
            "violations": self.violations,
            "seed": self.seed
        }
        doc.update(self.extra)
        return _exact(doc)

    @classmethod
    def from_document(cls, doc):
        doc = dict(doc)
        fields = {k: doc.pop(k) for k in (
            "report", "trials", "max_observed", "bound", "violations", "seed")}
        doc.pop("schema", None)
        return cls(extra=doc, **fields)

    def __eq__(self, other):
        return isinstance(other, campaign_report) and self.to_document() == other.to_document()

    def __repr__(self):
        return f"<{self.report} report: max {self.max_observed}, bound {self.bound}, {len(self.violations)} violations>"


def _exact(value, key=None):
    """*recursively convert rationals to their exact text form*"""
    if isinstance(value, dict):
        return {k: _exact(v, k) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_exact(v, key) for v in value]
    if isinstance(value, Fraction) or (key in RATIONAL_FIELDS and isinstance(value, int) and not isinstance(value, bool)):
        return fraction_text(value)
    return value


def _rational(value, key=None):
    """*recursively convert the rational fields of a parsed document back to `Fraction`*"""
    if isinstance(value, dict):
        return {k: _rational(v, k) for k, v in value.items()}
    if isinstance(value, list):
        return [_rational(v, key) for v in value]
    if key in RATIONAL_FIELDS and value is not None and not isinstance(value, bool):
        return parse_fraction(value)
    return value


def dump_document(doc):
    """*serialise a report document as YAML with stable key order*"""
    doc = _exact(doc)
    doc.setdefault("schema", SCHEMA)
    return yaml.safe_dump(doc, sort_keys=False, allow_unicode=True, default_flow_style=False)


def load_report(text):
    """*parse a machine-mode report back into a dictionary with `Fraction` rationals*

    **Key Arguments:**
        - ``text`` -- the YAML document written by the machine mode

    **Return:**
        - ``doc`` -- dictionary; campaign reports can be rebuilt with `campaign_report.from_document`
    """
    doc = yaml.safe_load(text)
    if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
        raise DomainError(f"not a {SCHEMA} document")
    return _rational(doc)


def render_campaign(r):
    """*a human-readable summary of a campaign report, with the certified inequality spelled out*"""
    rows = [
        ["campaign", r.report],
        ["trials", r.trials],
        ["seed", r.seed],
        ["max observed", f"{r.max_observed} ({decimal_text(r.max_observed)})"],
        ["bound", "none certified" if r.bound is None else str(r.bound)],
        ["violations", len(r.violations)]
    ]
    for k in ("qm", "config", "kinds"):
        if k in r.extra:
            v = r.extra[k]
            rows.append([k, ", ".join(v) if isinstance(v, list) else v])
    if "total_deviation" in r.extra:
        rows.append(["max end-to-end |f(φ(w)) - f(w)|", str(r.extra["total_deviation"])])
    lines = [tabulate(rows, tablefmt="simple")]

    perKind = r.extra.get("per_kind_max")
    if perKind:
        lines.append("")
        lines.append(tabulate([[row["kind"], str(row["deviation"])] for row in perKind], headers=[
                     "generator kind", "max step deviation"], tablefmt="simple"))

    if r.violations:
        lines.append("")
        keys = list(r.violations[0].keys())
        lines.append(tabulate([[str(v.get(k)) for k in keys] for v in r.violations[:20]],
                              headers=keys, tablefmt="simple"))
        if len(r.violations) > 20:
            lines.append(f"... {len(r.violations) - 20} more violations")

    lines.append("")
    quantity = r.extra.get("quantity", "deviation")
    if r.bound is None:
        lines.append(
            f"observed max {quantity} = {r.max_observed}; no bound is certified for these generator kinds")
    elif r.violations:
        lines.append(
            f"VIOLATED: max {quantity} = {r.max_observed} > {r.bound}")
    else:
        lines.append(
            f"certified over {r.trials} samples: {quantity} ≤ {r.bound} (observed max {r.max_observed})")
    return "\n".join(lines)


def render_homogenisation(doc):
    """*the homogenisation interval as text, e.g. `f̄(w) ∈ [0.99, 1.01] (N=3000, D≤30)`*"""
    lower = decimal_text(doc["lower"])
    upper = decimal_text(doc["upper"])
    return f"f̄(w) ∈ [{lower}, {upper}] (N={doc['N']}, D≤{doc['defect']})\nexact: [{doc['lower']}, {doc['upper']}]"


def render_document(doc):
    """*a plain two-column table of the top-level scalar fields of a result document*"""
    rows = []
    for k, v in doc.items():
        if isinstance(v, (dict, list)):
            continue
        rows.append([k, str(v)])
    return tabulate(rows, tablefmt="simple")
