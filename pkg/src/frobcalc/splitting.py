"""Frobenius splitting tests and graded-summand detection.

The central test: with q = p^e, the quotient R = S/I is F-split exactly
when the colon ideal (I^[q] : I) is not contained in m^[q].  More finely,
R(-j) is a direct summand of the e-th Frobenius pushforward of R exactly
when some element s of degree q*j satisfies s*(I^[q]:I) not in m^[q].

Searching monomials s only is complete: m^[q] is a monomial ideal, so a
polynomial s escapes via some term of some product s*c; fixing a single
monomial sigma of s, the products sigma*gamma over terms gamma of c are
pairwise distinct monomials (multiplication by a monomial is injective on
monomials), so no cancellation can occur and sigma alone already escapes.
This collapses the witness search from a vector space to a monomial list.

Every positive verdict carries a witness (s, c) that re-verifies by a
termwise exponent check; every negative verdict records the exhausted
search space.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import (
    NonArtinianError,
    NotFSplitError,
    ResourceGuardError,
    UnsupportedIdealClassError,
    VerificationError,
)
from .ideals import (
    CIIdeal,
    MonomialIdeal,
    bracket_power,
    ci_colon,
    in_bracket_max,
    monomial_colon,
)
from .polyring import (
    DEFAULT_MAX_MONOMIALS,
    Polynomial,
    mono_degree,
    mono_mul,
    mono_sorted,
    mono_str,
    monomials_of_degree,
)

DEFAULT_MAX_Q = 2**16


@dataclass(frozen=True)
class SplitCertificate:
    """Verdict plus re-verifiable evidence for one splitting test.

    For a true verdict, `witness_monomial` (s) times `colon_generator`
    escapes m^[q] through `witness_term`, a product term with every
    exponent < q.  For a false verdict, the exhausted search space is
    recorded (`search_degree`, `search_count`).
    """

    verdict: bool
    q: int
    e: int
    j: int
    kind: str = "colon"  # or "socle" for the residue-field summand test
    witness_monomial: tuple | None = None
    colon_generator: Polynomial | None = None
    witness_term: tuple | None = None
    search_degree: int | None = None
    search_count: int | None = None

    def verify(self, ideal):
        """Recheck the stored evidence from scratch; True when consistent."""
        if not self.verdict:
            return self.search_count is not None and self.search_degree is not None
        if self.kind == "socle":
            return _socle_witness_ok(ideal, self.witness_monomial, self.q)
        if self.witness_monomial is None or self.colon_generator is None:
            return False
        product = self.colon_generator.mul_monomial(self.witness_monomial)
        if in_bracket_max(product, self.q):
            return False
        if self.witness_term is not None:
            if self.witness_term not in product.terms:
                return False
            if any(e >= self.q for e in self.witness_term):
                return False
        return mono_degree(self.witness_monomial) == self.q * self.j

    def payload(self, ring):
        out = {
            "verdict": self.verdict,
            "q": self.q,
            "e": self.e,
            "twist": self.j,
            "kind": self.kind,
        }
        if self.verdict:
            out["witness"] = {
                "s": mono_str(ring, self.witness_monomial),
                "colon_generator": str(self.colon_generator)
                if self.colon_generator is not None
                else None,
                "surviving_term": mono_str(ring, self.witness_term)
                if self.witness_term is not None
                else None,
            }
        else:
            out["search"] = {
                "degree": self.search_degree,
                "candidates": self.search_count,
            }
        return out


def colon_generators(ideal, q):
    """Generators of (I^[q] : I) for the supported ideal classes, in a
    deterministic order, as polynomials."""
    if isinstance(ideal, MonomialIdeal):
        colon = monomial_colon(bracket_power(ideal, q), ideal)
        return [Polynomial.monomial(ideal.ring, g) for g in colon.gens]
    if isinstance(ideal, CIIdeal):
        return ci_colon(ideal, q)
    raise UnsupportedIdealClassError(f"unsupported ideal class {type(ideal).__name__}")


def _surviving_term(candidate, colon_gen_terms, q):
    """First term (largest first) of s*c with all exponents < q, or None.
    `colon_gen_terms` are the monomials of c pre-sorted descending."""
    for term in colon_gen_terms:
        prod = tuple(a + b for a, b in zip(candidate, term))
        if all(x < q for x in prod):
            return prod
    return None


def _prepared_colon_terms(gens, q):
    """Per-generator term lists with hopeless terms pruned (a term with an
    exponent >= q can never escape, whatever s multiplies it)."""
    prepared = []
    for g in gens:
        live = [m for m in mono_sorted(g.terms) if all(e < q for e in m)]
        prepared.append(live)
    return prepared


def _scan_candidates(candidates, prepared, q, threads=1):
    """First (candidate, generator index, surviving term) hit in candidate
    order; parallel scans preserve the sequential answer via ordered
    chunks."""

    def probe(s):
        for gi, terms in enumerate(prepared):
            hit = _surviving_term(s, terms, q)
            if hit is not None:
                return (s, gi, hit)
        return None

    if threads <= 1 or len(candidates) < 64:
        for s in candidates:
            out = probe(s)
            if out is not None:
                return out
        return None
    chunk = 64
    blocks = [candidates[i : i + chunk] for i in range(0, len(candidates), chunk)]

    def probe_block(block):
        for s in block:
            out = probe(s)
            if out is not None:
                return out
        return None

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for result in pool.map(probe_block, blocks):
            if result is not None:
                return result
    return None


def graded_summand_test(
    ideal,
    j,
    e,
    threads=1,
    max_monomials=DEFAULT_MAX_MONOMIALS,
    max_q=DEFAULT_MAX_Q,
):
    """Does R(-j) split off the e-th Frobenius pushforward of R = S/I?

    True iff some monomial s of degree q*j has s*(I^[q]:I) not inside
    m^[q] (monomials suffice; see the module docstring).  Candidates are
    scanned largest-first in degrevlex and the first witness is returned.
    Only exponents < q can appear in a surviving product, so the search
    runs over the capped candidate list.
    """
    ring = ideal.ring
    q = ring.p**e
    if q > max_q:
        raise ResourceGuardError(f"q = {q} exceeds the guard {max_q}")
    if j < 0:
        raise ValueError("twist j must be nonnegative")
    gens = colon_generators(ideal, q)
    prepared = _prepared_colon_terms(gens, q)
    candidates = monomials_of_degree(ring, q * j, cap=q - 1, max_monomials=max_monomials)
    hit = _scan_candidates(candidates, prepared, q, threads=threads)
    if hit is None:
        return SplitCertificate(
            verdict=False,
            q=q,
            e=e,
            j=j,
            search_degree=q * j,
            search_count=len(candidates),
        )
    s, gi, term = hit
    return SplitCertificate(
        verdict=True,
        q=q,
        e=e,
        j=j,
        witness_monomial=s,
        colon_generator=gens[gi],
        witness_term=term,
    )


def is_f_split(ideal, e, threads=1, max_q=DEFAULT_MAX_Q):
    """Splitting test: true iff (I^[q] : I) is not inside m^[q], q = p^e."""
    return graded_summand_test(ideal, 0, e, threads=threads, max_q=max_q)


def _socle_witness_ok(ideal, u, q):
    ring = ideal.ring
    if u is None or ideal.contains_monomial(u) or any(e >= q for e in u):
        return False
    for v in range(ring.nvars):
        xq = [0] * ring.nvars
        xq[v] = q
        if not ideal.contains_monomial(mono_mul(u, tuple(xq))):
            return False
    return True


def k_summand_test(ideal, e, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Is the residue field a direct summand of the e-th pushforward of an
    artinian monomial quotient?

    True iff the annihilator of m^[q] in R escapes m^[q]R, i.e. some
    standard monomial u with all exponents < q satisfies x_v^q * u in I
    for every variable."""
    if not isinstance(ideal, MonomialIdeal):
        raise UnsupportedIdealClassError("k_summand_test needs a monomial ideal")
    if not ideal.is_artinian():
        raise NonArtinianError("k_summand_test needs an artinian quotient")
    ring = ideal.ring
    q = ring.p**e
    ll = ideal.loewy_length(max_monomials=max_monomials)
    checked = 0
    for d in range(ll):
        for u in ideal.standard_monomials(d, max_monomials=max_monomials):
            checked += 1
            if _socle_witness_ok(ideal, u, q):
                return SplitCertificate(
                    verdict=True, q=q, e=e, j=0, kind="socle", witness_monomial=u
                )
    return SplitCertificate(
        verdict=False,
        q=q,
        e=e,
        j=0,
        kind="socle",
        search_degree=ll - 1,
        search_count=checked,
    )


@dataclass
class TwistSpectrum:
    """Graded-summand certificates for the twists R(-j), j = 0..j_max."""

    e: int
    q: int
    nvars: int
    degree: int | None  # sum of generator degrees for a complete intersection
    entries: dict  # j -> SplitCertificate
    band: tuple | None  # (0, n - d) when the hypotheses hold
    hypotheses: dict
    band_consistent: bool | None
    warnings: list = field(default_factory=list)

    def payload(self, ring):
        return {
            "e": self.e,
            "q": self.q,
            "degree": self.degree,
            "entries": {str(j): cert.payload(ring) for j, cert in sorted(self.entries.items())},
            "band": list(self.band) if self.band is not None else None,
            "hypotheses": self.hypotheses,
            "band_consistent": self.band_consistent,
            "warnings": self.warnings,
        }


def twist_spectrum(ideal, e, j_max=None, threads=1, max_q=DEFAULT_MAX_Q):
    """Run graded_summand_test for j = 0..j_max on a complete intersection.

    When the hypotheses hold (degree d <= n where n+1 = #variables, q > n-d,
    and the j = 0 test passes), the theory predicts summands exactly for
    0 <= j <= n-d; the report checks the computed entries against that band.
    Outside the hypotheses the computed values are reported without any
    band assertion.
    """
    if not isinstance(ideal, CIIdeal):
        raise UnsupportedIdealClassError("twist_spectrum needs a complete intersection")
    ring = ideal.ring
    n = ring.nvars - 1
    d = ideal.degree()
    q = ring.p**e
    if j_max is None:
        j_max = max(n - d, 0) + 1
    warnings = []
    if q <= n - d:
        warnings.append(
            f"q = {q} <= n - d = {n - d}: the band prediction needs q > n - d"
        )
    entries = {}
    for j in range(j_max + 1):
        entries[j] = graded_summand_test(ideal, j, e, threads=threads, max_q=max_q)
    hypotheses = {
        "degree_at_most_n": d <= n,
        "q_exceeds_band": q > n - d,
        "f_split": entries[0].verdict,
    }
    band = None
    band_consistent = None
    if all(hypotheses.values()):
        band = (0, n - d)
        band_consistent = all(
            cert.verdict == (band[0] <= j <= band[1]) for j, cert in entries.items()
        )
    return TwistSpectrum(
        e=e,
        q=q,
        nvars=ring.nvars,
        degree=d,
        entries=entries,
        band=band,
        hypotheses=hypotheses,
        band_consistent=band_consistent,
        warnings=warnings,
    )


@dataclass
class WitnessChain:
    """A divisibility-maximal escape monomial g and its degree-jq factors.

    g satisfies g*f^(q-1) not in m^[q] while x_v*g*f^(q-1) lands in m^[q]
    for every variable; maximality forces the single surviving term of
    g*f^(q-1) to be (x_0...x_n)^(q-1), which pins deg(g) to
    (n+1)(q-1) - d(q-1).  Any divisor s_j of g of degree j*q then also
    escapes, certifying the twist R(-j)."""

    e: int
    q: int
    g: tuple
    degree: int
    expected_degree: int
    factors: list  # (j, s_j monomial, SplitCertificate)

    def payload(self, ring):
        return {
            "e": self.e,
            "q": self.q,
            "g": mono_str(ring, self.g),
            "degree": self.degree,
            "expected_degree": self.expected_degree,
            "factors": [
                {"twist": j, "s": mono_str(ring, s), "certificate": cert.payload(ring)}
                for j, s, cert in self.factors
            ],
        }


def witness_from_proof(ideal, e, max_q=DEFAULT_MAX_Q):
    """Grow a maximal escape monomial for an F-split complete intersection
    and extract one re-verified factor per twist in the band."""
    if not isinstance(ideal, CIIdeal):
        raise UnsupportedIdealClassError("witness_from_proof needs a complete intersection")
    ring = ideal.ring
    q = ring.p**e
    if q > max_q:
        raise ResourceGuardError(f"q = {q} exceeds the guard {max_q}")
    n = ring.nvars - 1
    d = ideal.degree()
    fq1 = ideal.product() ** (q - 1)
    live = [m for m in mono_sorted(fq1.terms) if all(x < q for x in m)]
    if not live:
        raise NotFSplitError("no escape monomial exists: the quotient is not F-split")

    g = ring.unit_monomial()
    grew = True
    while grew:
        grew = False
        for v in range(ring.nvars):
            candidate = mono_mul(g, ring.variable_monomial(v))
            if _surviving_term(candidate, live, q) is not None:
                g = candidate
                grew = True
                break
    expected = (n + 1) * (q - 1) - d * (q - 1)
    if mono_degree(g) != expected:
        raise VerificationError(
            f"maximal escape monomial has degree {mono_degree(g)}, expected {expected}"
        )

    factors = []
    top = max(n - d, 0)
    for j in range(top + 1):
        target = j * q
        if target > mono_degree(g):
            break
        s = _divisor_of_degree(g, target)
        term = _surviving_term(s, live, q)
        if term is None:
            raise VerificationError(f"extracted factor of degree {target} does not escape")
        cert = SplitCertificate(
            verdict=True,
            q=q,
            e=e,
            j=j,
            witness_monomial=s,
            colon_generator=fq1,
            witness_term=term,
        )
        factors.append((j, s, cert))
    return WitnessChain(
        e=e,
        q=q,
        g=g,
        degree=mono_degree(g),
        expected_degree=expected,
        factors=factors,
    )


def _divisor_of_degree(g, target):
    """Deterministic divisor of g of the requested degree: take exponents
    from the first variables on."""
    s = [0] * len(g)
    remaining = target
    for v, e in enumerate(g):
        take = min(e, remaining)
        s[v] = take
        remaining -= take
        if not remaining:
            break
    if remaining:
        raise ValueError(f"g has degree < {target}")
    return tuple(s)
