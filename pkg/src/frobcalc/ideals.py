"""Ideal-level operations for the two supported ideal classes.

MonomialIdeal carries a canonical minimal generator list (no generator
divides another), so ideal equality is generator-list equality.  CIIdeal
carries homogeneous polynomial generators asserted to form a regular
sequence; for monomial generators the assertion is checked (pairwise
disjoint supports are necessary and sufficient), otherwise it is recorded
as a caller assertion.

Colon ideals are supported exactly where the criteria need them: the
combinatorial colon for monomial ideals, and the closed formula
(f^(q-1)) + I^[q] with f = f_1...f_t for complete intersections.
"""

from __future__ import annotations

from .errors import (
    NonArtinianError,
    ParseError,
    RingMismatchError,
    UnsupportedIdealClassError,
)
from .polyring import (
    DEFAULT_MAX_MONOMIALS,
    Polynomial,
    PolyRing,
    bounded_count,
    frobenius_power,
    mono_degree,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_pow,
    mono_sorted,
    monomials_of_degree,
    parse_polynomial,
)


def _minimalize(monos):
    """Drop every monomial divisible by another; canonical descending order."""
    uniq = set(monos)
    kept = []
    for m in sorted(uniq, key=mono_degree):
        if not any(mono_divides(g, m) for g in kept):
            kept.append(m)
    return tuple(mono_sorted(kept))


class MonomialIdeal:
    """Monomial ideal with its unique minimal generator list."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring, gens):
        self.ring = ring
        n = ring.nvars
        for g in gens:
            if len(g) != n or any(e < 0 for e in g):
                raise ParseError(f"bad monomial {g} for {ring!r}")
        self.gens = _minimalize(tuple(tuple(g) for g in gens))

    @classmethod
    def zero(cls, ring):
        return cls(ring, ())

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def contains_monomial(self, m):
        return any(mono_divides(g, m) for g in self.gens)

    def contains_polynomial(self, f):
        """Membership of a polynomial in a monomial ideal is termwise."""
        if self.ring != f.ring:
            raise RingMismatchError(f"{self.ring!r} vs {f.ring!r}")
        return all(self.contains_monomial(m) for m in f.terms)

    def __add__(self, other):
        self._check_ring(other)
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def intersection(self, other):
        self._check_ring(other)
        if self.is_zero() or other.is_zero():
            return MonomialIdeal.zero(self.ring)
        pairs = [mono_lcm(a, b) for a in self.gens for b in other.gens]
        return MonomialIdeal(self.ring, pairs)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __repr__(self):
        from .polyring import mono_str

        inside = ", ".join(mono_str(self.ring, g) for g in self.gens) or "0"
        return f"MonomialIdeal({inside})"

    def equals_by_membership(self, other):
        """Ideal equality via mutual generator membership (no normal forms)."""
        self._check_ring(other)
        return all(other.contains_monomial(g) for g in self.gens) and all(
            self.contains_monomial(g) for g in other.gens
        )

    # -- staircase ----------------------------------------------------------

    def standard_monomials(self, d, max_monomials=DEFAULT_MAX_MONOMIALS):
        """Degree-d monomials of S not in the ideal, largest first."""
        return [
            m
            for m in monomials_of_degree(self.ring, d, max_monomials=max_monomials)
            if not self.contains_monomial(m)
        ]

    def staircase(self, bound, max_monomials=DEFAULT_MAX_MONOMIALS):
        """Standard monomials for every degree through `bound`: a complete
        k-basis of S/I in degrees 0..bound, as per-degree lists."""
        return [
            self.standard_monomials(d, max_monomials=max_monomials)
            for d in range(bound + 1)
        ]

    def hilbert_function(self, d, max_monomials=DEFAULT_MAX_MONOMIALS):
        """dim_k (S/I)_d."""
        if d < 0:
            return 0
        return len(self.standard_monomials(d, max_monomials=max_monomials))

    def lcm_degree(self):
        if not self.gens:
            return 0
        acc = self.gens[0]
        for g in self.gens[1:]:
            acc = mono_lcm(acc, g)
        return mono_degree(acc)

    def is_artinian(self):
        """S/I is artinian iff every variable has a pure-power generator."""
        covered = [False] * self.ring.nvars
        for g in self.gens:
            support = [i for i, e in enumerate(g) if e]
            if len(support) == 1:
                covered[support[0]] = True
        return all(covered)

    def loewy_length(self, max_monomials=DEFAULT_MAX_MONOMIALS):
        """Least n with every degree-n monomial in the ideal (m^n subset I)."""
        if not self.is_artinian():
            raise NonArtinianError(f"{self!r} is not artinian")
        ceiling = sum(max(g) for g in self.gens) + 1
        for d in range(ceiling + 1):
            if not self.standard_monomials(d, max_monomials=max_monomials):
                return d
        raise AssertionError("unreachable: artinian staircase did not terminate")

    def total_dimension(self, max_monomials=DEFAULT_MAX_MONOMIALS):
        """dim_k S/I for artinian I."""
        ll = self.loewy_length(max_monomials=max_monomials)
        return sum(self.hilbert_function(d, max_monomials=max_monomials) for d in range(ll))

    def bracket(self, q):
        """I^[q]: generated by g^q for each generator g.  Over F_p this
        generates the full bracket power, since q-th powers of generators
        generate the ideal of q-th powers of elements."""
        return MonomialIdeal(self.ring, [mono_pow(g, q) for g in self.gens])


class CIIdeal:
    """Homogeneous ideal generated by an (asserted) regular sequence."""

    __slots__ = ("ring", "gens", "regular_sequence_verified")

    def __init__(self, ring, gens):
        gens = tuple(gens)
        if not gens:
            raise UnsupportedIdealClassError("a complete intersection needs generators")
        if len(gens) > ring.nvars:
            raise UnsupportedIdealClassError(
                f"{len(gens)} generators exceed the {ring.nvars} variables"
            )
        for f in gens:
            if not isinstance(f, Polynomial) or f.ring != ring:
                raise RingMismatchError("generators must be polynomials over the ring")
            if f.homogeneous_degree() is None or f.degree() < 1:
                raise UnsupportedIdealClassError(
                    f"generator {f} must be homogeneous of degree >= 1"
                )
        self.ring = ring
        self.gens = gens
        if all(f.is_monomial() for f in gens):
            supports = [
                {i for i, e in enumerate(f.single_monomial()) if e} for f in gens
            ]
            for a in range(len(supports)):
                for b in range(a + 1, len(supports)):
                    if supports[a] & supports[b]:
                        raise UnsupportedIdealClassError(
                            "monomial generators with overlapping supports are "
                            "not a regular sequence"
                        )
            self.regular_sequence_verified = True
        else:
            # semantic hypothesis recorded, not verified
            self.regular_sequence_verified = False

    @property
    def codimension(self):
        return len(self.gens)

    def degree(self):
        """Sum of generator degrees (the degree of the cut-out subscheme)."""
        return sum(f.degree() for f in self.gens)

    def product(self):
        out = Polynomial.one(self.ring)
        for f in self.gens:
            out = out * f
        return out

    def as_monomial_ideal(self):
        if not all(f.is_monomial() for f in self.gens):
            raise UnsupportedIdealClassError("generators are not all monomials")
        return MonomialIdeal(self.ring, [f.single_monomial() for f in self.gens])

    def hilbert_function(self, d):
        """dim_k (S/I)_d via inclusion-exclusion over the regular sequence."""
        n = self.ring.nvars - 1
        degs = [f.degree() for f in self.gens]
        total = 0
        for mask in range(1 << len(degs)):
            shift = sum(degs[i] for i in range(len(degs)) if mask >> i & 1)
            sign = -1 if bin(mask).count("1") % 2 else 1
            total += sign * bounded_count(n + 1, d - shift)
        return total

    def __repr__(self):
        return f"CIIdeal({', '.join(str(f) for f in self.gens)})"


# ---------------------------------------------------------------------------
# operations

def _validate_q(ring, q):
    if q < 2:
        raise ParseError(f"q must be p^e with e >= 1, got {q}")
    t = q
    e = 0
    while t % ring.p == 0:
        t //= ring.p
        e += 1
    if t != 1 or e < 1:
        raise ParseError(f"{q} is not a positive power of p={ring.p}")
    return e


def bracket_power(ideal, q):
    """I^[q] for either ideal class (q a power of p)."""
    if isinstance(ideal, MonomialIdeal):
        _validate_q(ideal.ring, q)
        return ideal.bracket(q)
    if isinstance(ideal, CIIdeal):
        e = _validate_q(ideal.ring, q)
        return CIIdeal(ideal.ring, [frobenius_power(f, e) for f in ideal.gens])
    raise UnsupportedIdealClassError(f"unsupported ideal class {type(ideal).__name__}")


def monomial_colon(J, I):
    """(J : I) for monomial ideals: intersect (J : g) over generators g of I,
    where (J : g) is generated by the J-generators divided by their gcd
    with g."""
    J._check_ring(I)
    ring = J.ring
    if I.is_zero():
        return MonomialIdeal(ring, [ring.unit_monomial()])
    result = None
    for g in I.gens:
        quotient = MonomialIdeal(ring, [mono_div(j, mono_gcd(j, g)) for j in J.gens])
        result = quotient if result is None else result.intersection(quotient)
    return result


def ci_colon(ideal, q):
    """(I^[q] : I) for a complete intersection, as the explicit generator
    list [f^(q-1), f_1^q, ..., f_t^q] with f = f_1...f_t."""
    if not isinstance(ideal, CIIdeal):
        raise UnsupportedIdealClassError("ci_colon needs a CIIdeal")
    e = _validate_q(ideal.ring, q)
    f = ideal.product()
    return [f ** (q - 1)] + [frobenius_power(g, e) for g in ideal.gens]


def in_bracket_max(f, q):
    """Membership of f in m^[q] = (x_0^q, ..., x_n^q).  A monomial ideal, so
    membership is termwise: every monomial needs some exponent >= q."""
    return all(any(e >= q for e in m) for m in f.terms)


def pushforward_min_generators(I, e, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Minimal number of generators of the e-th Frobenius pushforward of
    S/I as a module over itself: dim_k S/(I + m^[q]) with q = p^e.  Valid
    over the prime field, where the residue field pushes forward to a
    one-dimensional vector space."""
    ring = I.ring
    q = ring.p**e
    mq = MonomialIdeal(ring, [mono_pow(ring.variable_monomial(i), q) for i in range(ring.nvars)])
    total = I + mq
    count = 0
    for d in range((q - 1) * ring.nvars + 1):
        count += total.hilbert_function(d, max_monomials=max_monomials)
    return count


def max_bracket_ideal(ring, q):
    """m^[q] as a monomial ideal."""
    return MonomialIdeal(
        ring, [mono_pow(ring.variable_monomial(i), q) for i in range(ring.nvars)]
    )


# ---------------------------------------------------------------------------
# ideal text grammar:
#   char <p>; vars <x,y,...>; ideal <poly>, <poly>, ...; [class monomial|ci;]

def detect_ideal_class(polys):
    """'monomial' when every generator is a single-term monomial multiple
    (zero generators are ignored)."""
    return "monomial" if all(len(f.terms) <= 1 for f in polys) else "ci"


def build_ideal(ring, polys, ideal_class=None):
    """Assemble an ideal object from parsed generators.

    Auto-detects the class when not given; non-monomial generators force
    the complete-intersection class, whose regular-sequence hypothesis is a
    caller assertion.  Returns (ideal, warnings).
    """
    warnings = []
    detected = detect_ideal_class(polys)
    cls = ideal_class or detected
    if cls == "monomial":
        if detected != "monomial":
            raise UnsupportedIdealClassError("non-monomial generator in a monomial ideal")
        gens = [next(iter(f.terms)) for f in polys if f.terms]
        return MonomialIdeal(ring, gens), warnings
    if cls == "ci":
        if ideal_class is None:
            warnings.append(
                "ideal class auto-detected as a complete intersection; the "
                "regular-sequence hypothesis is asserted, not verified"
            )
        ideal = CIIdeal(ring, list(polys))
        if not ideal.regular_sequence_verified:
            warnings.append("regular-sequence assertion recorded for polynomial generators")
        return ideal, warnings
    raise UnsupportedIdealClassError(f"unknown ideal class {cls!r}")


def parse_ideal_spec(text):
    """Parse `char <p>; vars <x,...>; ideal <poly>, ...; [class ...;]`.

    Returns (ring, ideal, warnings).
    """
    fields = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(None, 1)
        if len(parts) != 2:
            raise ParseError(f"malformed clause {chunk!r}")
        key, value = parts[0].lower(), parts[1].strip()
        if key in fields:
            raise ParseError(f"duplicate clause {key!r}")
        fields[key] = value
    for required in ("char", "vars", "ideal"):
        if required not in fields:
            raise ParseError(f"missing `{required}` clause")
    try:
        p = int(fields["char"])
    except ValueError:
        raise ParseError(f"bad characteristic {fields['char']!r}") from None
    ring = PolyRing(p, [v.strip() for v in fields["vars"].split(",")])
    polys = [parse_polynomial(ring, part) for part in fields["ideal"].split(",")]
    ideal_class = None
    if "class" in fields:
        ideal_class = fields["class"].lower()
        if ideal_class not in ("monomial", "ci"):
            raise ParseError(f"unknown class {ideal_class!r}")
    ideal, warnings = build_ideal(ring, polys, ideal_class)
    return ring, ideal, warnings
