"""Exact multivariate polynomial arithmetic over the prime field F_p.

Monomials are exponent tuples indexed by the ring's variable order; every
variable has degree one.  Polynomials are finite term maps from monomials to
nonzero coefficients in 0..p-1.  Everything is immutable after construction
and all arithmetic is exact.

The term order used everywhere for determinism is degree reverse
lexicographic (degrevlex) with the declared variable order: compare total
degree first, ties broken so that the monomial whose *last* differing
exponent is smaller is the larger one.
"""

from __future__ import annotations

import math
import re

from .errors import (
    ExponentOverflowError,
    ParseError,
    ResourceGuardError,
    RingMismatchError,
)

EXPONENT_LIMIT = 2**31
DEFAULT_MAX_MONOMIALS = 10**7

Mono = tuple  # exponent vector, one nonnegative int per variable


def is_prime(n):
    """Deterministic Miller-Rabin; exact for every n < 3_215_031_751."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7):
        if n == small:
            return True
        if n % small == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


class PolyRing:
    """Descriptor for F_p[x_0, ..., x_n] with the standard grading."""

    __slots__ = ("p", "variables", "_index")

    def __init__(self, p, variables):
        if not isinstance(p, int) or not (2 <= p < EXPONENT_LIMIT) or not is_prime(p):
            raise ParseError(f"characteristic must be a prime in [2, 2^31): got {p!r}")
        variables = tuple(variables)
        if not variables:
            raise ParseError("at least one variable is required")
        for name in variables:
            if not _NAME_RE.match(name):
                raise ParseError(f"invalid variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise ParseError("variable names must be distinct")
        self.p = p
        self.variables = variables
        self._index = {name: i for i, name in enumerate(variables)}

    @property
    def nvars(self):
        return len(self.variables)

    def var_index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None

    def unit_monomial(self):
        return (0,) * self.nvars

    def variable_monomial(self, i):
        m = [0] * self.nvars
        m[i] = 1
        return tuple(m)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.p == other.p
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((self.p, self.variables))

    def __repr__(self):
        return f"PolyRing(p={self.p}, variables={', '.join(self.variables)})"


# ---------------------------------------------------------------------------
# monomial helpers (plain exponent tuples)

def mono_degree(m):
    return sum(m)


def mono_mul(a, b):
    out = tuple(x + y for x, y in zip(a, b))
    for e in out:
        if e >= EXPONENT_LIMIT:
            raise ExponentOverflowError(f"exponent {e} exceeds 2^31")
    return out


def mono_pow(m, k):
    out = tuple(e * k for e in m)
    for e in out:
        if e >= EXPONENT_LIMIT:
            raise ExponentOverflowError(f"exponent {e} exceeds 2^31")
    return out


def mono_divides(a, b):
    """True when a | b, i.e. a's exponents are <= b's componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def drl_key(m):
    """Sort key: ascending order under this key is ascending degrevlex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def mono_sorted(monos, reverse=True):
    """Deterministic order; reverse=True gives largest-first (the default order
    in which generator lists and enumerations are presented)."""
    return sorted(monos, key=drl_key, reverse=reverse)


def mono_str(ring, m):
    if not any(m):
        return "1"
    parts = []
    for name, e in zip(ring.variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def bounded_count(nparts, total, cap=None):
    """Number of exponent vectors with `nparts` entries summing to `total`,
    each entry <= cap when cap is given.  Inclusion-exclusion over the
    entries that exceed the cap; the uncapped case is stars and bars."""
    if total < 0:
        return 0
    if cap is None:
        return math.comb(total + nparts - 1, nparts - 1)
    if cap < 0:
        return 0
    count = 0
    for t in range(nparts + 1):
        rest = total - t * (cap + 1)
        if rest < 0:
            break
        count += (-1) ** t * math.comb(nparts, t) * math.comb(rest + nparts - 1, nparts - 1)
    return count


def monomials_of_degree(ring, d, cap=None, max_monomials=DEFAULT_MAX_MONOMIALS):
    """All monomials of total degree d, largest first in degrevlex.

    `cap` bounds every exponent when given.  Refuses enumerations larger
    than `max_monomials`.
    """
    if d < 0:
        return []
    n = ring.nvars
    expected = bounded_count(n, d, cap)
    if expected > max_monomials:
        raise ResourceGuardError(
            f"enumeration of {expected} monomials exceeds guard {max_monomials}"
        )
    out = []
    mono = [0] * n

    def rec(i, remaining):
        if i == n - 1:
            if cap is None or remaining <= cap:
                mono[i] = remaining
                out.append(tuple(mono))
                mono[i] = 0
            return
        top = remaining if cap is None else min(remaining, cap)
        for e in range(top, -1, -1):
            mono[i] = e
            rec(i + 1, remaining - e)
        mono[i] = 0

    rec(0, d)
    out.sort(key=drl_key, reverse=True)
    return out


# ---------------------------------------------------------------------------

class Polynomial:
    """Element of F_p[x_0..x_n] stored as a term map; zero coefficients are
    never stored, so the zero polynomial has an empty term map."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        p = ring.p
        clean = {}
        n = ring.nvars
        for mono, coeff in terms.items():
            if len(mono) != n:
                raise ParseError(f"monomial {mono} has wrong arity for {ring!r}")
            for e in mono:
                if e < 0 or e >= EXPONENT_LIMIT:
                    raise ExponentOverflowError(f"exponent {e} out of range")
            c = coeff % p
            if c:
                clean[tuple(mono)] = c
        self.ring = ring
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def one(cls, ring):
        return cls(ring, {ring.unit_monomial(): 1})

    @classmethod
    def monomial(cls, ring, mono, coeff=1):
        return cls(ring, {tuple(mono): coeff})

    @classmethod
    def variable(cls, ring, i):
        return cls.monomial(ring, ring.variable_monomial(i))

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        """Single term with coefficient 1 (a pure monomial)."""
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def single_monomial(self):
        if len(self.terms) != 1:
            raise ValueError("not a single-term polynomial")
        return next(iter(self.terms))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def homogeneous_degree(self):
        """The common term degree when homogeneous, else None."""
        if not self.terms:
            return None
        degs = {mono_degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def sorted_terms(self):
        """(monomial, coefficient) pairs, largest monomial first."""
        return [(m, self.terms[m]) for m in mono_sorted(self.terms)]

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        self._check_ring(other)
        p = self.ring.p
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = (terms.get(m, 0) + c) % p
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        out = Polynomial.__new__(Polynomial)
        out.ring = self.ring
        out.terms = terms
        return out

    def __neg__(self):
        p = self.ring.p
        out = Polynomial.__new__(Polynomial)
        out.ring = self.ring
        out.terms = {m: p - c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_ring(other)
        p = self.ring.p
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = (terms.get(m, 0) + c1 * c2) % p
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        out = Polynomial.__new__(Polynomial)
        out.ring = self.ring
        out.terms = terms
        return out

    def __pow__(self, n):
        """Repeated squaring; f**0 is the unit."""
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            n >>= 1
            if base_needed:
                base = base * base
        return result

    def scale(self, c):
        p = self.ring.p
        c %= p
        out = Polynomial.__new__(Polynomial)
        out.ring = self.ring
        out.terms = {m: (c * v) % p for m, v in self.terms.items()} if c else {}
        return out

    def mul_monomial(self, mono):
        out = Polynomial.__new__(Polynomial)
        out.ring = self.ring
        out.terms = {mono_mul(m, mono): c for m, c in self.terms.items()}
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if not any(m):
                parts.append(str(c))
            elif c == 1:
                parts.append(mono_str(self.ring, m))
            else:
                parts.append(f"{c}*{mono_str(self.ring, m)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def frobenius_power(f, e):
    """f^(p^e), computed termwise as sum of c * m^(p^e).

    Over the prime field every coefficient satisfies c^p = c, so raising a
    polynomial to the q-th power (q = p^e) raises each monomial to the q-th
    power and keeps the coefficients.
    """
    if e < 0:
        raise ValueError("e must be nonnegative")
    if e == 0:
        return f
    q = f.ring.p**e
    return Polynomial(f.ring, {mono_pow(m, q): c for m, c in f.terms.items()})


# ---------------------------------------------------------------------------
# text grammar: terms joined by '+' (or '-'), term = optional integer
# coefficient and '*'-separated powers `x^k`; whitespace insignificant.

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^]))"
)


def _tokenize(text):
    text = text.strip()
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {text[pos:pos + 10]!r}")
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group("num"))))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def parse_polynomial(ring, text):
    """Parse the polynomial text grammar; coefficients reduce mod p."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    terms = {}
    i = 0
    n = len(tokens)
    p = ring.p
    sign = 1
    while i < n:
        # optional leading sign for this term
        while i < n and tokens[i] == ("op", "+") or i < n and tokens[i] == ("op", "-"):
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ParseError("trailing sign without a term")
        coeff = 1
        mono = [0] * ring.nvars
        saw_factor = False
        while True:
            kind, val = tokens[i]
            if kind == "num":
                coeff = coeff * val
                i += 1
            elif kind == "name":
                v = ring.var_index(val)
                exp = 1
                i += 1
                if i < n and tokens[i] == ("op", "^"):
                    i += 1
                    if i >= n or tokens[i][0] != "num":
                        raise ParseError(f"expected exponent after {val}^")
                    exp = tokens[i][1]
                    i += 1
                if exp >= EXPONENT_LIMIT:
                    raise ExponentOverflowError(f"exponent {exp} exceeds 2^31")
                mono[v] += exp
            else:
                raise ParseError(f"unexpected {val!r} inside term")
            saw_factor = True
            if i < n and tokens[i] == ("op", "*"):
                i += 1
                continue
            break
        if not saw_factor:
            raise ParseError("empty term")
        m = tuple(mono)
        c = (terms.get(m, 0) + sign * coeff) % p
        if c:
            terms[m] = c
        else:
            terms.pop(m, None)
        sign = 1
        if i < n:
            kind, val = tokens[i]
            if kind != "op" or val not in "+-":
                raise ParseError(f"expected '+' between terms, got {val!r}")
            sign = -1 if val == "-" else 1
            i += 1
            if i >= n:
                raise ParseError("trailing operator")
    return Polynomial(ring, terms)
