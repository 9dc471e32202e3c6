"""Frobenius pushforwards as explicit graded modules.

The e-th pushforward of R = S/I has the same underlying k-space as R but
r acts as multiplication by r^q (q = p^e), and the grading takes values in
(1/q)Z: a basis monomial u sits in degree deg(u)/q.  Degrees are exact
`fractions.Fraction` values, never floats.

Over the prime field the action of a polynomial r = sum c_w w on the
pushforward is sum c_w (w^q * u), so the action tables of the variables
determine everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonArtinianError, VerificationError
from .ideals import MonomialIdeal
from .polyring import (
    DEFAULT_MAX_MONOMIALS,
    PolyRing,
    bounded_count,
    drl_key,
    mono_degree,
    mono_mul,
    mono_pow,
    mono_str,
    monomials_of_degree,
)


class FrobeniusModule:
    """The e-th Frobenius pushforward of an artinian monomial quotient,
    with its twisted action tabulated on the staircase basis."""

    __slots__ = ("ideal", "e", "q", "basis", "index", "var_action")

    def __init__(self, ideal, e, max_monomials=DEFAULT_MAX_MONOMIALS):
        if not ideal.is_artinian():
            raise NonArtinianError(
                "pushforward modules are tabulated for artinian quotients"
            )
        ring = ideal.ring
        self.ideal = ideal
        self.e = e
        self.q = ring.p**e
        ll = ideal.loewy_length(max_monomials=max_monomials)
        basis = []
        for d in range(ll):
            basis.extend(ideal.standard_monomials(d, max_monomials=max_monomials))
        basis.sort(key=drl_key)  # least element first: the greedy scan order
        self.basis = tuple(basis)
        self.index = {u: i for i, u in enumerate(basis)}
        self.var_action = []
        for v in range(ring.nvars):
            xq = mono_pow(ring.variable_monomial(v), self.q)
            row = []
            for u in basis:
                target = mono_mul(xq, u)
                row.append(-1 if ideal.contains_monomial(target) else self.index[target])
            self.var_action.append(row)

    @property
    def ring(self):
        return self.ideal.ring

    def dimension(self):
        return len(self.basis)

    def degree_of(self, i):
        """Fractional degree of the i-th basis element."""
        return Fraction(mono_degree(self.basis[i]), self.q)

    def act_variable(self, v, i):
        """Index of x_v acting on basis element i, or -1 when it dies."""
        return self.var_action[v][i]

    def act_monomial(self, w, i):
        """w acting on basis element i (w a monomial of S), or -1."""
        for v, exp in enumerate(w):
            for _ in range(exp):
                i = self.var_action[v][i]
                if i < 0:
                    return -1
        return i

    def cyclic_orbit(self, i):
        """Indices of the cyclic submodule generated by basis element i:
        all nonzero monomial actions w . u = w^q u."""
        seen = {i}
        frontier = [i]
        while frontier:
            nxt = []
            for t in frontier:
                for v in range(self.ring.nvars):
                    s = self.var_action[v][t]
                    if s >= 0 and s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return sorted(seen)


def pushforward_module(I, e, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Tabulate the e-th Frobenius pushforward of S/I (artinian monomial)."""
    return FrobeniusModule(I, e, max_monomials=max_monomials)


@dataclass
class CyclicPiece:
    generator: tuple
    basis: tuple  # monomials
    annihilator: MonomialIdeal
    relative_hilbert: tuple  # dims by degree offset from the generator
    degree_offset: Fraction

    def payload(self, ring):
        return {
            "generator": mono_str(ring, self.generator),
            "dimension": len(self.basis),
            "basis": [mono_str(ring, u) for u in self.basis],
            "annihilator": [mono_str(ring, g) for g in self.annihilator.gens],
            "relative_hilbert": list(self.relative_hilbert),
            "degree_offset": {
                "num": self.degree_offset.numerator,
                "den": self.degree_offset.denominator,
            },
        }


@dataclass
class CyclicDecomposition:
    """Greedy cyclic decomposition of a pushforward module.

    Pieces are generated by the least (degrevlex) basis monomial not yet
    covered; directness holds when the piece bases are pairwise disjoint
    and partition the full basis.  Pieces are grouped into isomorphism
    classes by annihilator ideal plus shift-normalized Hilbert function,
    which identifies cyclic modules over these quotients."""

    module_dimension: int
    pieces: list
    direct: bool
    overlaps: list
    iso_classes: list  # (annihilator gens, relative hilbert, multiplicity)

    def payload(self, ring):
        return {
            "module_dimension": self.module_dimension,
            "direct": self.direct,
            "pieces": [piece.payload(ring) for piece in self.pieces],
            "overlaps": self.overlaps,
            "iso_classes": [
                {
                    "annihilator": [mono_str(ring, g) for g in ann],
                    "relative_hilbert": list(hf),
                    "multiplicity": mult,
                }
                for ann, hf, mult in self.iso_classes
            ],
        }


def _annihilator_of_generator(module, u):
    """Monomial ideal of elements acting as zero on the cyclic generator u:
    all w with w^q * u inside I.  Upward closed, so minimal elements are
    found by a degree-by-degree scan (every monomial of degree >= the Loewy
    length already lies in I, hence annihilates)."""
    ideal = module.ideal
    ring = ideal.ring
    q = module.q
    gens = []
    ceiling = sum(max(g) for g in ideal.gens) + 1

    def annihilates(w):
        return ideal.contains_monomial(mono_mul(mono_pow(w, q), u))

    for d in range(ceiling + 1):
        layer = monomials_of_degree(ring, d)
        new = [
            w
            for w in layer
            if annihilates(w) and not any(_divides(g, w) for g in gens)
        ]
        gens.extend(new)
        if all(annihilates(w) for w in layer):
            remaining_covered = all(
                any(_divides(g, w) for g in gens) for w in layer
            )
            if remaining_covered:
                break
    return MonomialIdeal(ring, gens)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def cyclic_decompose(module):
    """Greedy cyclic decomposition; overlap between pieces is reported, not
    fatal (directness simply fails)."""
    ring = module.ring
    covered = set()
    pieces = []
    overlaps = []
    direct = True
    for i, u in enumerate(module.basis):
        if i in covered:
            continue
        orbit = module.cyclic_orbit(i)
        clash = sorted(set(orbit) & covered)
        if clash:
            direct = False
            overlaps.append(
                {
                    "generator": mono_str(ring, u),
                    "overlap": [mono_str(ring, module.basis[t]) for t in clash],
                }
            )
        covered.update(orbit)
        basis = tuple(module.basis[t] for t in orbit)
        ann = _annihilator_of_generator(module, u)
        gen_degree = mono_degree(u)
        rel = {}
        for w in basis:
            offset = (mono_degree(w) - gen_degree) // module.q
            rel[offset] = rel.get(offset, 0) + 1
        hilbert = tuple(rel.get(t, 0) for t in range(max(rel) + 1))
        pieces.append(
            CyclicPiece(
                generator=u,
                basis=basis,
                annihilator=ann,
                relative_hilbert=hilbert,
                degree_offset=Fraction(gen_degree, module.q),
            )
        )
    if direct and sum(len(piece.basis) for piece in pieces) != module.dimension():
        direct = False
    classes = {}
    for piece in pieces:
        key = (piece.annihilator.gens, piece.relative_hilbert)
        classes[key] = classes.get(key, 0) + 1
    iso = [(ann, hf, mult) for (ann, hf), mult in sorted(classes.items())]
    return CyclicDecomposition(
        module_dimension=module.dimension(),
        pieces=pieces,
        direct=direct,
        overlaps=overlaps,
        iso_classes=iso,
    )


# ---------------------------------------------------------------------------
# pushforwards of line bundles on projective n-space

def alpha(n, p, i, l):
    """Multiplicity of the twist -i in the Frobenius pushforward of O(l) on
    projective n-space: the number of monomials in n+1 variables of total
    degree l + i*p with every exponent at most p-1 (zero when l + i*p < 0).

    Computed by inclusion-exclusion over the variables whose exponent would
    exceed p-1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    degree = l + i * p
    if degree < 0:
        return 0
    return bounded_count(n + 1, degree, p - 1)


def alpha_by_enumeration(n, p, i, l, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Brute-force companion to `alpha`: enumerate and count."""
    degree = l + i * p
    if degree < 0:
        return 0
    ring = PolyRing(p, [f"t{k}" for k in range(n + 1)])
    return len(monomials_of_degree(ring, degree, cap=p - 1, max_monomials=max_monomials))


@dataclass
class TwistMultiset:
    """Pushforward of O(l) on P^n: twists with multiplicities."""

    n: int
    p: int
    e: int
    l: int
    twists: dict  # twist (<= 0 ... may include positive for l > 0) -> multiplicity
    generates: bool  # all of 0, -1, ..., -n occur

    def total_rank(self):
        return sum(self.twists.values())

    def payload(self):
        return {
            "n": self.n,
            "p": self.p,
            "e": self.e,
            "l": self.l,
            "twists": {str(t): m for t, m in sorted(self.twists.items(), reverse=True)},
            "total_rank": self.total_rank(),
            "generates": self.generates,
        }


def pn_pushforward(n, p, e, l=0):
    """Iterate the one-step decomposition of Frobenius pushforwards of line
    bundles on projective n-space e times, starting from O(l).

    Reports whether every twist 0..-n occurs, the criterion for the
    pushforward to generate everything built from those twists."""
    if e < 1:
        raise ValueError("e must be at least 1")
    current = {l: 1}
    for _ in range(e):
        nxt = {}
        for twist, mult in current.items():
            i = -(twist // p)  # least i with twist + i*p >= 0 (floor-division ceil)
            while True:
                degree = twist + i * p
                if degree > (n + 1) * (p - 1):
                    break
                a = alpha(n, p, i, twist)
                if a:
                    nxt[-i] = nxt.get(-i, 0) + mult * a
                i += 1
        current = nxt
    generates = all(-t in current for t in range(0, n + 1))
    return TwistMultiset(n=n, p=p, e=e, l=l, twists=current, generates=generates)


# ---------------------------------------------------------------------------
# strand modules and the Veronese decomposition for k[x, y]

@dataclass
class StrandModule:
    """G_j: the span of monomials of k[x,y] with total degree congruent to
    j mod ell, as a module over the index-ell Veronese subring.

    Grading convention: the piece of S-degree ell*t + j sits in internal
    degree t (i.e. internal degree = (S-degree - j)/ell), so
    dim (G_j)_t = ell*t + j + 1."""

    ell: int
    j: int

    def hilbert(self, t):
        return self.ell * t + self.j + 1 if t >= 0 else 0

    def hilbert_series(self, through):
        return [self.hilbert(t) for t in range(through + 1)]

    def basis_layer(self, t):
        """Monomials (xdeg, ydeg) of S-degree ell*t + j, x-power descending."""
        d = self.ell * t + self.j
        return [(d - k, k) for k in range(d + 1)]

    def payload(self, through=8):
        return {
            "ell": self.ell,
            "class": self.j,
            "grading": "internal degree t holds the S-degree ell*t + class piece",
            "hilbert_series": self.hilbert_series(through),
        }


def strand_module(ell, j):
    if not (0 <= j <= ell - 1):
        raise ValueError("need 0 <= j <= ell-1")
    return StrandModule(ell=ell, j=j)


@dataclass
class ConicDecomposition:
    """Decomposition of the e-th pushforward of the index-ell Veronese
    subring of k[x,y] into strand modules G_j.

    Pieces come from the exact partition of the monomial basis by exponent
    residues mod q and then by degree residue mod ell; each piece is a
    genuine submodule isomorphic to a G_j.  The Hilbert-series identity
    sum_j mult(j) * HS(G_j) = HS(F^e_* R) is verified degreewise through
    the stated bound (shifts accounted), and the ambiguity of a pure
    Hilbert-series solve is reported in `hs_solve_unique`."""

    ell: int
    p: int
    e: int
    q: int
    multiplicities: dict  # j -> count
    pieces: list  # (u, v, j, start S-degree)
    hs_verified: bool
    hs_bound: int  # S-degree bound of the verification
    hs_residual: list | None
    hs_solve_unique: bool
    ambiguity_notes: list
    has_free_summand: bool

    def payload(self):
        return {
            "ell": self.ell,
            "p": self.p,
            "e": self.e,
            "q": self.q,
            "multiplicities": {str(j): m for j, m in sorted(self.multiplicities.items())},
            "pieces": [
                {"residues": [u, v], "class": j, "start_degree": start}
                for u, v, j, start in self.pieces
            ],
            "hilbert_series_verified": self.hs_verified,
            "hilbert_series_bound": self.hs_bound,
            "hilbert_series_residual": self.hs_residual,
            "hilbert_solve_unique": self.hs_solve_unique,
            "ambiguity_notes": self.ambiguity_notes,
            "has_free_summand": self.has_free_summand,
        }


def veronese_decompose(ell, p, e, degree_bound=12):
    """Decompose the e-th Frobenius pushforward of the index-ell Veronese
    subring of k[x, y] into strand modules.

    Partition: a basis monomial x^a y^b (with ell | a+b) belongs to the
    class (a mod q, b mod q); writing a = q*alpha + u, b = q*beta + v, the
    map x^a y^b -> x^alpha y^beta identifies the subspace with fixed
    alpha+beta mod ell with the strand module G_j, compatibly with the
    twisted action.  Each admissible triple (u, v, j) contributes one
    summand."""
    if ell < 1 or e < 1:
        raise ValueError("need ell >= 1 and e >= 1")
    q = p**e
    pieces = []
    mult = {}
    for u in range(q):
        for v in range(q):
            for j in range(ell):
                if (q * j + u + v) % ell == 0:
                    # S-degree of the piece's bottom basis element
                    start = q * j + u + v
                    pieces.append((u, v, j, start))
                    mult[j] = mult.get(j, 0) + 1
    # Hilbert-series verification through an S-degree bound: reconstruct
    # the dimension of every fractional degree layer from the pieces.
    bound = max(degree_bound * ell * q, 4 * ell * q)
    recon = [0] * (bound + 1)
    for u, v, j, start in pieces:
        s = 0
        while True:
            deg = start + q * ell * s
            if deg > bound:
                break
            recon[deg] += ell * s + j + 1
            s += 1
    residual = []
    for deg in range(bound + 1):
        actual = deg + 1 if deg % ell == 0 else 0
        if recon[deg] != actual:
            residual.append({"degree": deg, "reconstructed": recon[deg], "actual": actual})
    verified = not residual
    if not verified:
        raise VerificationError(
            f"Hilbert-series matching failed at {len(residual)} degrees; "
            f"first residuals: {residual[:3]}"
        )

    # Ambiguity of a numeric Hilbert-series solve: within one start-degree
    # group, any multiset of classes with the same (count, sum of j+1) has
    # an identical Hilbert function.
    groups = {}
    for u, v, j, start in pieces:
        groups.setdefault(start, []).append(j)
    unique = True
    notes = []
    for start, js in sorted(groups.items()):
        count = len(js)
        total = sum(j + 1 for j in js)
        alternatives = _class_multisets(count, total, ell)
        if len(alternatives) > 1:
            unique = False
            notes.append(
                f"start degree {start}: {len(alternatives)} class multisets share "
                f"the Hilbert profile (count {count}, weight {total})"
            )
    return ConicDecomposition(
        ell=ell,
        p=p,
        e=e,
        q=q,
        multiplicities=mult,
        pieces=pieces,
        hs_verified=verified,
        hs_bound=bound,
        hs_residual=None,
        hs_solve_unique=unique,
        ambiguity_notes=notes,
        has_free_summand=mult.get(0, 0) >= 1,
    )


def _class_multisets(count, total, ell):
    """Multisets of `count` classes in 0..ell-1 whose (j+1)-weights sum to
    `total`; used only to probe Hilbert-solve uniqueness."""
    out = []

    def rec(remaining, minimum, acc, budget):
        if remaining == 0:
            if budget == 0:
                out.append(tuple(acc))
            return
        for j in range(minimum, ell):
            w = j + 1
            if w > budget - (remaining - 1):
                break
            acc.append(j)
            rec(remaining - 1, j, acc, budget - w)
            acc.pop()

    rec(count, 0, [], total)
    return out


# ---------------------------------------------------------------------------
# the complete-intersection filtration of the first pushforward

@dataclass
class FiltrationStep:
    exponents: tuple
    generator: tuple  # the product monomial f^a
    shift: int
    dims: list
    expected: list
    matches: bool

    def payload(self, ring):
        return {
            "exponents": list(self.exponents),
            "generator": mono_str(ring, self.generator),
            "shift": self.shift,
            "subquotient_dims": self.dims,
            "expected_dims": self.expected,
            "matches": self.matches,
        }


@dataclass
class FiltrationReport:
    """Chain of submodules of R' = S/(f_1^p, ..., f_c^p) generated by the
    products f^a, a in {0..p-1}^c in lexicographic order; each subquotient
    should have the Hilbert series of the pushforward of R = S/(f_1..f_c)
    after rescaling degrees by p and shifting by deg f^a.  Hilbert-series
    equality is a necessary, not sufficient, isomorphism check and the
    report says so."""

    p: int
    c: int
    steps: list
    degree_bound: int
    complete: bool  # True when the band covers the whole (artinian) module
    all_match: bool

    def payload(self, ring):
        return {
            "p": self.p,
            "codimension": self.c,
            "step_count": len(self.steps),
            "expected_step_count": self.p**self.c,
            "degree_bound": self.degree_bound,
            "complete": self.complete,
            "all_match": self.all_match,
            "comparison": "Hilbert series equality (necessary, not sufficient)",
            "steps": [s.payload(ring) for s in self.steps],
        }


def ci_filtration_check(ring, f_monos, degree_bound=None, max_monomials=DEFAULT_MAX_MONOMIALS):
    """Verify the p^c-step filtration of R' = S/(f^p) with pushforward-sized
    subquotients, for a monomial regular sequence f_1..f_c inside m^2."""
    p = ring.p
    f_monos = [tuple(m) for m in f_monos]
    c = len(f_monos)
    if c == 0 or c > ring.nvars:
        raise ValueError("need 1 <= c <= #variables monomials")
    supports = [{i for i, e in enumerate(m) if e} for m in f_monos]
    for a in range(c):
        if mono_degree(f_monos[a]) < 2:
            raise ValueError("each f_i must lie in m^2 (degree >= 2)")
        for b in range(a + 1, c):
            if supports[a] & supports[b]:
                raise ValueError("supports must be pairwise disjoint (regular sequence)")

    big = MonomialIdeal(ring, [mono_pow(m, p) for m in f_monos])  # (f_i^p)
    small = MonomialIdeal(ring, f_monos)  # (f_1..f_c)
    if degree_bound is None:
        if big.is_artinian():
            degree_bound = big.loewy_length(max_monomials=max_monomials) - 1
            complete = True
        else:
            degree_bound = p * sum(mono_degree(m) for m in f_monos) + 2
            complete = False
    else:
        complete = big.is_artinian() and degree_bound >= big.loewy_length(max_monomials=max_monomials) - 1

    exponent_tuples = _lex_tuples(c, p)
    # basis counts of the submodule generated by the tail of the chain
    def tail_dims(start):
        gens = []
        for a in exponent_tuples[start:]:
            g = ring.unit_monomial()
            for m, k in zip(f_monos, a):
                g = mono_mul(g, mono_pow(m, k))
            gens.append(g)
        dims = []
        for d in range(degree_bound + 1):
            count = 0
            for w in big.standard_monomials(d, max_monomials=max_monomials):
                if any(_divides(g, w) for g in gens):
                    count += 1
            dims.append(count)
        return dims

    layer_dims = [tail_dims(t) for t in range(len(exponent_tuples))]
    layer_dims.append([0] * (degree_bound + 1))

    steps = []
    all_match = True
    for t, a in enumerate(exponent_tuples):
        g = ring.unit_monomial()
        for m, k in zip(f_monos, a):
            g = mono_mul(g, mono_pow(m, k))
        shift = mono_degree(g)
        dims = [x - y for x, y in zip(layer_dims[t], layer_dims[t + 1])]
        expected = [
            small.hilbert_function(d - shift, max_monomials=max_monomials)
            if d - shift >= 0
            else 0
            for d in range(degree_bound + 1)
        ]
        ok = dims == expected
        all_match = all_match and ok
        steps.append(
            FiltrationStep(
                exponents=a,
                generator=g,
                shift=shift,
                dims=dims,
                expected=expected,
                matches=ok,
            )
        )
    return FiltrationReport(
        p=p,
        c=c,
        steps=steps,
        degree_bound=degree_bound,
        complete=complete,
        all_match=all_match,
    )


def _lex_tuples(c, p):
    """{0..p-1}^c in ascending lexicographic order."""
    out = [()]
    for _ in range(c):
        out = [t + (k,) for t in out for k in range(p)]
    return sorted(out)
