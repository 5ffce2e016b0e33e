"""Exact q-Appell polynomials (q-Bernoulli, q-Euler, q-Genocchi, q-Hermite).

Rational functions of q come back as ``QRat`` pairs of coefficient lists
(ascending powers of q, exact ``Fraction`` values); polynomials in x as lists
of ``QRat`` in ascending powers of x.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import _qappell
from ._qappell import Error, PoleError, RangeError

__all__ = [
    "QRat",
    "Error",
    "PoleError",
    "RangeError",
    "families",
    "family_numbers",
    "appell_polynomial",
    "alpha_coefficients",
    "hermite_series_form",
    "classical_limit",
    "polynomial_text",
    "verify",
    "run_cli",
]


@dataclass(frozen=True)
class QRat:
    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]

    @classmethod
    def from_json(cls, obj: dict) -> "QRat":
        return cls(tuple(Fraction(c) for c in obj["num"]), tuple(Fraction(c) for c in obj["den"]))

    def __call__(self, q: Fraction | int) -> Fraction:
        q = Fraction(q)
        num = sum((c * q**i for i, c in enumerate(self.num)), Fraction(0))
        den = sum((c * q**i for i, c in enumerate(self.den)), Fraction(0))
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at q = %s" % q)
        return num / den


def _qrats(text: str) -> list[QRat]:
    return [QRat.from_json(o) for o in json.loads(text)]


def _xpoly(text: str) -> list[QRat]:
    return [QRat.from_json(o) for o in json.loads(text)["coeffs"]]


def families() -> list[str]:
    return _qappell.families()


def family_numbers(family: str, max_n: int, order: int = 24) -> list[QRat]:
    return _qrats(_qappell.family_numbers(family, max_n, order))


def appell_polynomial(family: str, n: int, order: int = 24) -> list[QRat]:
    return _xpoly(_qappell.appell_polynomial(family, n, order))


def alpha_coefficients(family: str, max_n: int, order: int = 24) -> list[QRat]:
    return _qrats(_qappell.alpha_coefficients(family, max_n, order))


def hermite_series_form(n: int) -> list[QRat]:
    return _xpoly(_qappell.hermite_series_form(n))


def classical_limit(family: str, n: int) -> list[Fraction]:
    """Coefficients of the q = 1 polynomial, ascending in x."""
    return [Fraction(c) for c in _qappell.classical_limit(family, n)]


def polynomial_text(family: str, n: int, order: int = 24) -> str:
    return _qappell.polynomial_text(family, n, order)


def verify(scope: str = "all", max_n: int = 12, order: int = 24) -> dict:
    return json.loads(_qappell.verify(scope, max_n, order))


def run_cli(args: list[str]) -> tuple[int, str, str]:
    return _qappell.run_cli(list(args))
