"""Structured (JSON) documents for reports, with a lossless inverse.

Numbers stay exact: integers as JSON integers, other rationals as
``"num/den"`` strings, an infinite index as ``"inf"``.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .kummer import KummerReport, ValuationMatrix
from .poly import Poly

__all__ = [
    "WIRE_VERSION",
    "scalar_to_wire",
    "scalar_from_wire",
    "report_to_dict",
    "report_from_dict",
    "dumps",
]

WIRE_VERSION = 1


def scalar_to_wire(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_from_wire(x) -> Fraction:
    return Fraction(x)


def poly_to_wire(f: Poly) -> list:
    return [scalar_to_wire(c) for c in f.coeffs]


def report_to_dict(report: KummerReport, curve: str | None = None, counts=None,
                   oracle_agreement=None) -> dict:
    """Wire form of a report, fields in a fixed order.

    ``counts`` maps ``n`` to a component count; keys become strings.
    """
    doc = {
        "version": WIRE_VERSION,
        "curve": curve,
        "k": report.k,
        "basis": [poly_to_wire(b) for b in report.valuation.basis],
        "matrix": [list(r) for r in report.valuation.matrix],
        "divisors": list(report.divisors),
        "free": report.free,
        "index": "inf" if report.index == math.inf else report.index,
        "exponent": report.exponent,
        "obstruction_primes": "all" if report.obstruction_primes is None else list(report.obstruction_primes),
        "kummer_generic": report.kummer_generic,
        "stabilizing_level": report.stabilizing_level,
        "component_counts": {str(n): c for n, c in sorted((counts or {}).items())},
        "oracle_agreement": oracle_agreement,
    }
    return doc


def report_from_dict(doc: dict) -> KummerReport:
    vm = ValuationMatrix(
        tuple(Poly([scalar_from_wire(c) for c in b]) for b in doc["basis"]),
        tuple(tuple(r) for r in doc["matrix"]),
    )
    primes = doc["obstruction_primes"]
    return KummerReport(
        k=doc["k"],
        divisors=tuple(doc["divisors"]),
        free=doc["free"],
        index=math.inf if doc["index"] == "inf" else doc["index"],
        exponent=doc["exponent"],
        obstruction_primes=None if primes == "all" else tuple(primes),
        kummer_generic=doc["kummer_generic"],
        stabilizing_level=doc["stabilizing_level"],
        valuation=vm,
    )


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)
