"""Coefficient rings: the integers, the rationals and prime fields.

Elements are plain Python values (``int`` for ZZ and GF(p), ``Fraction``
for QQ) so arithmetic never rounds.  A :class:`Ring` carries the operations
and the canonicalisation rules; it is a small immutable value object.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property

_COEFF_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Ring:
    """One of ZZ, QQ or GF(p).

    ``kind`` is ``"Z"``, ``"Q"`` or ``"Fp"``; ``p`` is the characteristic for
    prime fields and ``None`` otherwise.
    """

    def __init__(self, kind: str, p: int | None = None):
        if kind not in ("Z", "Q", "Fp"):
            raise ValueError(f"unknown ring kind {kind!r}")
        if kind == "Fp":
            if p is None or not _is_prime(int(p)) or p >= 2**31:
                raise ValueError(f"Fp needs a prime p < 2^31, got {p!r}")
            p = int(p)
        elif p is not None:
            raise ValueError(f"ring {kind} takes no modulus")
        self.kind = kind
        self.p = p

    # -- identity ---------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Ring) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return {"Z": "ZZ", "Q": "QQ"}.get(self.kind, f"GF({self.p})")

    def descriptor(self) -> dict:
        d = {"kind": self.kind}
        if self.p is not None:
            d["p"] = self.p
        return d

    @classmethod
    def from_descriptor(cls, d) -> "Ring":
        if isinstance(d, Ring):
            return d
        if isinstance(d, str):
            return cls(d)
        return cls(d["kind"], d.get("p"))

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @cached_property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @cached_property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    # -- conversion -------------------------------------------------------
    def __call__(self, value):
        """Coerce ``value`` (int, Fraction or numeric string) into the ring."""
        if isinstance(value, str):
            m = _COEFF_RE.match(value)
            if not m:
                raise ValueError(f"not a coefficient: {value!r}")
            num, den = int(m.group(1)), m.group(2)
            if den is not None:
                value = Fraction(num, int(den))
            else:
                value = num
        if isinstance(value, bool):
            value = int(value)
        if self.kind == "Z":
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                return value.numerator
            return int(value)
        if self.kind == "Q":
            return Fraction(value)
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    # -- arithmetic -------------------------------------------------------
    def add(self, a, b):
        if self.p is not None:
            return (a + b) % self.p
        return a + b

    def sub(self, a, b):
        if self.p is not None:
            return (a - b) % self.p
        return a - b

    def neg(self, a):
        if self.p is not None:
            return -a % self.p
        return -a

    def mul(self, a, b):
        if self.p is not None:
            return a * b % self.p
        return a * b

    def inv(self, a):
        if self.kind == "Z":
            if a in (1, -1):
                return a
            raise ZeroDivisionError(f"{a} is not a unit in ZZ")
        if self.kind == "Q":
            return 1 / a
        return pow(a, -1, self.p)

    def is_unit(self, a) -> bool:
        if self.kind == "Z":
            return a in (1, -1)
        return a != 0

    def divmod(self, a, b):
        """Euclidean division ``a = q*b + r``; over fields ``r`` is zero."""
        if self.kind == "Z":
            return divmod(a, b)
        return self.mul(a, self.inv(b)), self.zero

    def exact_div(self, a, b):
        """``a / b`` when it exists in the ring, else ``None``."""
        if b == 0:
            return self.zero if a == 0 else None
        q, r = self.divmod(a, b)
        return q if r == 0 else None

    def normal_unit(self, a):
        """Unit ``u`` with ``u*a`` canonical (positive over ZZ, one over fields)."""
        if a == 0:
            return self.one
        if self.kind == "Z":
            return -1 if a < 0 else 1
        return self.inv(a)

    def size(self, a):
        """Euclidean size used for pivot choice."""
        if self.kind == "Z":
            return abs(a)
        return 0 if a == 0 else 1

    def gcdex(self, a, b):
        """Return ``(g, s, t)`` with ``g = s*a + t*b`` a gcd of ``a`` and ``b``."""
        if self.kind != "Z":
            if a != 0:
                return self.one, self.inv(a), self.zero
            if b != 0:
                return self.one, self.zero, self.inv(b)
            return self.zero, self.zero, self.zero
        s0, s1, t0, t1 = 1, 0, 0, 1
        r0, r1 = a, b
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0 < 0:
            r0, s0, t0 = -r0, -s0, -t0
        return r0, s0, t0

    def format(self, a) -> str:
        if self.kind == "Q" and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a))

    def to_json(self, a):
        if self.kind == "Q" and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return int(a)

    def random(self, rng, bound: int = 3):
        """Small random element (possibly zero)."""
        if self.kind == "Q" and rng.random() < 0.25:
            return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
        return self(rng.randint(-bound, bound))


ZZ = Ring("Z")
QQ = Ring("Q")


def GF(p: int) -> Ring:
    return Ring("Fp", p)
