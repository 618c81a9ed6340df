"""
Exact polynomials in eps_1, ..., eps_n, delta over Q.

Text format: ``e<i>`` is eps_i, ``d`` is delta, e.g. ``"e1^2*d - 3*e2 + 1/2"``.
The parser also accepts parentheses and implicit products such as
``"(e1-e2-2d)(e1-e3-d)"``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

Exponent = tuple[int, ...]


class MultiPoly:
    """Polynomial with ``nvars = n + 1`` variables; the last one is delta."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction | int] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = clean.get(tuple(e), 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def const(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MultiPoly":
        """The i-th variable, 0-based (i = nvars - 1 is delta)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, eps, delta: int) -> "MultiPoly":
        """sum eps[i] * eps_{i+1} + delta * delta."""
        nvars = len(eps) + 1
        terms = {}
        for i, c in enumerate((*eps, delta)):
            if c:
                e = [0] * nvars
                e[i] = 1
                terms[tuple(e)] = c
        return cls(nvars, terms)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, MultiPoly) else other
        if other is NotImplemented:
            return False
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Polynomial degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self) -> int:
        """Cohomological degree (every variable has degree 2); -1 for zero."""
        d = self.total_degree()
        return -1 if d < 0 else 2 * d

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def substitute(self, i: int, value: "MultiPoly") -> "MultiPoly":
        """Replace variable i (0-based) by ``value``."""
        out = MultiPoly(self.nvars)
        cache = {0: MultiPoly.const(self.nvars, 1)}
        for e, c in self.terms.items():
            p = e[i]
            if p not in cache:
                cache[p] = value ** p
            rest = list(e)
            rest[i] = 0
            out = out + MultiPoly(self.nvars, {tuple(rest): c}) * cache[p]
        return out

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Graded lexicographic order, largest monomial first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        n = self.nvars - 1
        names = [f"e{i}" for i in range(1, n + 1)] + ["d"]
        out = ""
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                names[i] if p == 1 else f"{names[i]}^{p}" for i, p in enumerate(e) if p
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if idx == 0:
                out = body if sign == "+" else "-" + body
            else:
                out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(e\d+|d)|(\^)|([-+*()]))")


def parse_poly(text: str, n: int) -> MultiPoly:
    """
    Parse the text format into a polynomial in eps_1..eps_n, delta.

    >>> str(parse_poly("(e1-e2-2d)(e1-e3-d)", 3))
    'e1^2 - e1*e2 - e1*e3 - 3*e1*d + e2*e3 + e2*d + 2*e3*d + 2*d^2'
    """
    nvars = n + 1
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        num, name, caret, op = m.groups()
        tokens.append(("num", Fraction(num)) if num else ("var", name) if name
                      else ("op", caret or op))
        pos = m.end()
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        t = tokens[i]
        i += 1
        return t

    def expr():
        sign = 1
        if peek() in (("op", "+"), ("op", "-")):
            sign = -1 if take()[1] == "-" else 1
        out = term().scale(sign)
        while peek() in (("op", "+"), ("op", "-")):
            s = -1 if take()[1] == "-" else 1
            out = out + term().scale(s)
        return out

    def term():
        out = power()
        while True:
            t = peek()
            if t == ("op", "*"):
                take()
                out = out * power()
            elif t[0] in ("num", "var") or t == ("op", "("):
                out = out * power()
            else:
                return out

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num" or val.denominator != 1:
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(val)
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return MultiPoly.const(nvars, val)
        if kind == "var":
            if val == "d":
                return MultiPoly.var(nvars, n)
            idx = int(val[1:])
            if not 1 <= idx <= n:
                raise ValueError(f"variable {val} out of range for n={n}")
            return MultiPoly.var(nvars, idx - 1)
        if (kind, val) == ("op", "("):
            out = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return out
        raise ValueError(f"unexpected token {val!r}")

    out = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return out
