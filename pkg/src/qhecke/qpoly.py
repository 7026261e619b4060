"""Exact Laurent polynomials in the grading variable q.

Sparse exponent-to-coefficient maps with Python's arbitrary-precision
integers; graded dimensions outgrow 64 bits around n = 21, so exactness is
non-negotiable. Values are immutable after construction.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class QLaurent:
    """A Laurent polynomial sum_k c_k q^k with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be integers")
            c = acc.get(exp, 0) + coeff
            if c:
                acc[exp] = c
            else:
                acc.pop(exp, None)
        object.__setattr__(self, "_terms", acc)

    def __setattr__(self, name, value):
        raise AttributeError("QLaurent is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls()

    @classmethod
    def one(cls) -> "QLaurent":
        return cls({0: 1})

    @classmethod
    def q_power(cls, exponent: int, coefficient: int = 1) -> "QLaurent":
        return cls({exponent: coefficient})

    # -- inspection ----------------------------------------------------------

    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def eval_at_one(self) -> int:
        """Sum of coefficients; the ungraded dimension of a graded dimension."""
        return sum(self._terms.values())

    def is_bar_symmetric(self) -> bool:
        """True iff invariant under q -> 1/q."""
        return all(self._terms.get(-k, 0) == c for k, c in self._terms.items())

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other) -> "QLaurent | None":
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, int):
            return QLaurent({0: other})
        return None

    def __add__(self, other) -> "QLaurent":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "QLaurent":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "QLaurent":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "QLaurent":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in o._terms.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return QLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QLaurent":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = QLaurent.one()
        for _ in range(n):
            out = out * self
        return out

    def shifted(self, t: int) -> "QLaurent":
        """Multiplication by q^t."""
        return QLaurent({k + t: c for k, c in self._terms.items()})

    # -- equality and display --------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for k, c in self.terms():
            body = _monomial(abs(c), k)
            pieces.append(("+" if c > 0 else "-", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"QLaurent({self})"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"terms": [[k, str(c)] for k, c in self.terms()]}

    @classmethod
    def from_json(cls, obj: dict) -> "QLaurent":
        return cls({int(k): int(c) for k, c in obj["terms"]})


def _monomial(coeff: int, exp: int) -> str:
    if exp == 0:
        return str(coeff)
    qpart = "q" if exp == 1 else f"q^{exp}"
    return qpart if coeff == 1 else f"{coeff}*{qpart}"
