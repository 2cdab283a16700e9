"""
Exact Laurent polynomials in u, v, g (g stands for gamma) with integer coefficients.

A polynomial is a mapping from exponent triples (e_u, e_v, e_g) to nonzero Python
ints. Values are immutable and hashable; zero coefficients are never stored, so two
polynomials are equal iff their term mappings are equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

Exponent = tuple[int, int, int]

VARIABLES = ("u", "v", "g")


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, c in items:
            if len(exp) != 3:
                raise ValueError(f"exponent must be a triple, got {exp!r}")
            exp = (int(exp[0]), int(exp[1]), int(exp[2]))
            acc[exp] = acc.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _from_canonical(cls, terms: dict[Exponent, int]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls._from_canonical({(0, 0, 0): c} if c else {})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._from_canonical(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._from_canonical({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exponent, int] = {}
        for (x1, y1, z1), c1 in b.items():
            for (x2, y2, z2), c2 in a.items():
                e = (x1 + x2, y1 + y2, z1 + z2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._from_canonical({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        return int_pow(self, k)

    def scale(self, c: int) -> LaurentPoly:
        if not c:
            return ZERO
        return LaurentPoly._from_canonical({e: c * x for e, x in self._terms.items()})

    # -- inspection --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in canonical print order: descending lexicographic on (e_u, e_v, e_g)."""
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def degrees(self, var: int) -> set[int]:
        return {e[var] for e in self._terms}

    def evaluate(self, u, v, g) -> Fraction:
        """Substitute nonzero numbers for u, v, g; negative powers are taken exactly."""
        u, v, g = Fraction(u), Fraction(v), Fraction(g)
        total = Fraction(0)
        for (a, b, c), coeff in self._terms.items():
            total += coeff * u**a * v**b * g**c
        return total

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[dict]:
        return [
            {"eu": e[0], "ev": e[1], "eg": e[2], "c": str(c)}
            for e, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> LaurentPoly:
        return cls(((t["eu"], t["ev"], t["eg"]), int(t["c"])) for t in data)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (exp, c) in enumerate(self.sorted_terms()):
            factors = []
            for name, k in zip(VARIABLES, exp):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: accepts e.g. ``"-u^4 + u^2*v^2 + 2*u^2"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        terms: dict[Exponent, int] = {}
        for chunk in re.split(r"(?<!\^)(?=[+-])", s):
            if not chunk:
                continue
            sign = -1 if chunk[0] == "-" else 1
            body = chunk.lstrip("+-")
            coeff, exp = sign, [0, 0, 0]
            for f in body.split("*"):
                fm = re.fullmatch(r"([uvg])(?:\^(-?\d+))?|(\d+)", f)
                if fm is None:
                    raise ValueError(f"cannot parse factor {f!r} in {text!r}")
                if fm.group(3) is not None:
                    coeff *= int(fm.group(3))
                else:
                    exp[VARIABLES.index(fm.group(1))] += int(fm.group(2) or 1)
            key = tuple(exp)
            terms[key] = terms.get(key, 0) + coeff
        return cls(terms)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def monomial(coeff: int, e_u: int = 0, e_v: int = 0, e_g: int = 0) -> LaurentPoly:
    if not coeff:
        return ZERO
    return LaurentPoly._from_canonical({(e_u, e_v, e_g): coeff})


def int_pow(base: LaurentPoly, k: int) -> LaurentPoly:
    if k < 0:
        if not base.is_monomial():
            raise ValueError("negative power of a non-monomial is not a Laurent polynomial")
        ((e, c),) = base.items()
        if c not in (1, -1):
            raise ValueError(f"monomial with coefficient {c} is not invertible over Z")
        return monomial(c ** (-k), e[0] * k, e[1] * k, e[2] * k)
    result = ONE
    sq = base
    while k:
        if k & 1:
            result = result * sq
        k >>= 1
        if k:
            sq = sq * sq
    return result


ZERO = LaurentPoly._from_canonical({})
ONE = LaurentPoly._from_canonical({(0, 0, 0): 1})
U = monomial(1, 1, 0, 0)
V = monomial(1, 0, 1, 0)
G = monomial(1, 0, 0, 1)
