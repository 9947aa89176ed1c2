"""Rank computations over GF(2), GF(p) and the rationals.

Vectors over GF(2) are Python ints used as bit rows.  Over other fields a
vector is a dict ``{index: coefficient}`` with nonzero coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """A prime field GF(p) or, with ``p=None``, the rationals."""

    p: int | None = 2

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(None)
        if t.startswith("fp:"):
            t = t[3:]
        elif t.startswith("gf"):
            t = t[2:]
        try:
            return cls(int(t))
        except ValueError:
            raise ValueError(f"unrecognized field {text!r}; use fp:<prime> or q") from None

    @property
    def is_binary(self) -> bool:
        return self.p == 2

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


GF2 = Field(2)
QQ = Field(None)


def rank_gf2(rows) -> int:
    """Rank of a family of GF(2) vectors given as int bitmasks."""
    pivots: dict[int, int] = {}
    r = 0
    for v in rows:
        while v:
            top = v.bit_length() - 1
            w = pivots.get(top)
            if w is None:
                pivots[top] = v
                r += 1
                break
            v ^= w
    return r


def rank_mod_p(rows, p: int) -> int:
    """Rank of sparse integer vectors reduced modulo ``p``."""
    pivots: dict[int, dict[int, int]] = {}
    r = 0
    for v in rows:
        v = {k: c % p for k, c in v.items() if c % p}
        while v:
            top = max(v)
            w = pivots.get(top)
            if w is None:
                inv = pow(v[top], -1, p)
                pivots[top] = {k: c * inv % p for k, c in v.items()}
                r += 1
                break
            c = v[top]
            for k, x in w.items():
                y = (v.get(k, 0) - c * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return r


def rank_rational(rows) -> int:
    """Exact rank over the rationals of sparse integer or Fraction vectors."""
    pivots: dict[int, dict[int, Fraction]] = {}
    r = 0
    for v in rows:
        v = {k: Fraction(c) for k, c in v.items() if c}
        while v:
            top = max(v)
            w = pivots.get(top)
            if w is None:
                lead = v[top]
                pivots[top] = {k: c / lead for k, c in v.items()}
                r += 1
                break
            c = v[top]
            for k, x in w.items():
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return r


def rank(rows, field: Field) -> int:
    if field.p == 2:
        return rank_gf2(rows)
    if field.p is None:
        return rank_rational(rows)
    return rank_mod_p(rows, field.p)
