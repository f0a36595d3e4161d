"""Eigen-decomposition of weight spaces and computational irreducibility evidence.

Over the fraction field, the degree-l weight space of n strands splits as the
direct sum of F^(k)-images of highest-weight spaces of degree l-k; on the
k-th summand the operator E F^(1) acts by the scalar [k+1]_q mu_{1,k} with

    mu_{t,k}(n, l) = prod_{j=1..t} (s^n q^{-2l+k-t+j} - s^{-n} q^{2l-k+t-j}),

all eigenvalues distinct, which pins the decomposition down uniquely.  The
components are solved for top-down:

    w_t = ( E^t v - sum_{i>=1} mu_{t,i}(n, l-t) F^(i) w_{t+i} ) / mu_{t,0}(n, l-t).

The splitting maps of one strand up,

    alpha_k(w) = sum_{j=0..k} c_{k,j} F^(k-j) (v_j (x) w),
    c_{k,0} = 1,
    c_{k,j+1} = (s^{-n-1} q^{2l-k+j-1} - s^{n+1} q^{-2l+k-j+1})
                / (s^n q^{-2(l-k)}) * c_{k,j},

land in the degree-l highest-weight space of n+1 strands, and psi (project
onto leading-slot-1 tensors, strip that slot) satisfies
psi(alpha_k w) = lambda_k F^(k-1) w with

    lambda_k = s^{-2n-k} q^{4l-k-3} - s^{-k} q^{k-1}.

Irreducibility at an exact rational point (q0, s0) is certified by a
commutant of dimension 1: the kernel of X -> (X rho(sigma_i) - rho(sigma_i) X)
always contains the identity, so a mod-p rank bound that caps the kernel at
one dimension is an exact certificate; anything larger falls back to exact
rational elimination.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd

from .braid import BraidWord, apply_word
from .hwspace import hw_basis, rho_matrix
from .linalg import fraction_kernel_dimension, modp_rank
from .report import CheckReport
from .ring import LaurentPoly, RatFunc, qint, specialize
from .verma import E, F, TensorVec, act_tensor, weight_basis


class GuardedSpecializationError(ValueError):
    """The requested substitution point lies on a guard locus."""

    def __init__(self, factor_name, value):
        super().__init__("guard factor %s vanishes at the requested point"
                         % factor_name)
        self.factor_name = factor_name
        self.value = value


def mu(t, k, n, l):
    """The eigenvalue product mu_{t,k} for n strands at ambient degree l."""
    if t < 0:
        raise ValueError("mu needs t >= 0")
    acc = LaurentPoly.one()
    for j in range(1, t + 1):
        acc = acc * LaurentPoly({(-2 * l + k - t + j, n): 1,
                                 (2 * l - k + t - j, -n): -1})
    return acc


@dataclass(frozen=True)
class HWDecomposition:
    """Components (w_0, ..., w_l) with v = sum_t F^(t) w_t.

    ``cleared`` holds the same data with denominators pulled out, as pairs
    (numerator TensorVec over the polynomial ring, denominator polynomial);
    when present, reconstruction runs entirely inside the ring with a single
    division at the end.
    """

    n: int
    l: int
    components: tuple
    cleared: tuple = field(default=None, repr=False, compare=False)

    def reconstruct(self):
        if self.cleared is None:
            total = TensorVec.zero(self.n)
            for t, w in enumerate(self.components):
                if not w.is_zero():
                    total = total + (act_tensor(F(t), w) if t else w)
            return total
        # every denominator D_t divides D_0 = prod of all pivots
        common = self.cleared[0][1]
        total = TensorVec.zero(self.n)
        for t, (num_vec, den) in enumerate(self.cleared):
            if num_vec.is_zero():
                continue
            scale = common.divexact(den)
            total = total + scale * (act_tensor(F(t), num_vec) if t else num_vec)
        return total.map_coeffs(lambda c: RatFunc(c, common))

    def to_json(self):
        return {"n": self.n, "l": self.l,
                "components": [w.to_json() for w in self.components]}


def decompose(vec):
    """Split a homogeneous vector into its highest-weight components.

    The triangular system is solved top-down with denominators kept
    symbolic: the t-th cleared numerator is

        u_t = P_t E^t v - sum_{i >= 1} mu_{t,i}(n, l-t) g_{t,i} F^(i) u_{t+i},

    with P_t the product of the pivots mu_{r,0}(n, l-r) for r > t and
    g_{t,i} the partial pivot product between t and t+i, so everything
    stays in the polynomial ring until the final division by
    D_t = mu_{t,0}(n, l-t) P_t.
    """
    n = vec.n
    l = vec.weight()
    if l is None:
        raise ValueError("cannot decompose the zero vector (degree unknown)")
    integral = vec.domain == "poly"
    if not integral:
        return _decompose_ratfunc(vec)
    e_powers = [vec]
    for _ in range(l):
        e_powers.append(act_tensor(E, e_powers[-1]))
    pivots = [mu(t, 0, n, l - t) for t in range(l + 1)]
    for t, p in enumerate(pivots):
        if p.is_zero():
            raise ZeroDivisionError("degenerate eigenvalue pivot at t=%d" % t)
    suffix = [LaurentPoly.one()] * (l + 2)   # suffix[t] = prod_{r > t} pivots[r]
    for t in range(l - 1, -1, -1):
        suffix[t] = suffix[t + 1] * pivots[t + 1]
    nums = [None] * (l + 1)
    for t in range(l, -1, -1):
        acc = suffix[t] * e_powers[t]
        gap = LaurentPoly.one()              # prod of pivots strictly between
        for i in range(1, l - t + 1):
            if i > 1:
                gap = gap * pivots[t + i - 1]
            if not nums[t + i].is_zero():
                coeff = mu(t, i, n, l - t) * gap
                acc = acc - coeff * act_tensor(F(i), nums[t + i])
        nums[t] = acc
    cleared = tuple((nums[t], pivots[t] * suffix[t]) for t in range(l + 1))
    components = tuple(
        num.map_coeffs(lambda c, d=den: RatFunc(c, d))
        for num, den in cleared)
    return HWDecomposition(n, l, components, cleared)


def _decompose_ratfunc(vec):
    """Fallback for vectors that already carry fraction-field coefficients."""
    n = vec.n
    l = vec.weight()
    e_powers = [vec]
    for _ in range(l):
        e_powers.append(act_tensor(E, e_powers[-1]))
    components = [None] * (l + 1)
    for t in range(l, -1, -1):
        acc = e_powers[t]
        for i in range(1, l - t + 1):
            if not components[t + i].is_zero():
                acc = acc - mu(t, i, n, l - t) * act_tensor(F(i), components[t + i])
        pivot = mu(t, 0, n, l - t)
        if pivot.is_zero():
            raise ZeroDivisionError("degenerate eigenvalue pivot at t=%d" % t)
        components[t] = acc.map_coeffs(
            lambda c: c / pivot if isinstance(c, RatFunc) else RatFunc(c, pivot))
    return HWDecomposition(n, l, tuple(components))


def ef1_eigencheck(n, l):
    """E F^(1) acts on the k-th summand by [k+1]_q mu_{1,k}, all distinct."""
    reports = []
    eigenvalues = []
    for k in range(l + 1):
        expected = qint(k + 1) * mu(1, k, n, l)
        eigenvalues.append(expected)
        ok = True
        for el in hw_basis(n, l - k):
            v = act_tensor(F(k), el.vector) if k else el.vector
            image = act_tensor(E, act_tensor(F(1), v))
            if image != expected * v:
                ok = False
        reports.append(CheckReport("ef1-eigenvalue", {"n": n, "l": l, "k": k}, ok))
    distinct = all(not (eigenvalues[a] - eigenvalues[b]).is_zero()
                   for a in range(l + 1) for b in range(a + 1, l + 1))
    reports.append(CheckReport("ef1-distinct", {"n": n, "l": l}, distinct))
    return reports


# -- strand-extension splitting --------------------------------------------------


def c_coeff(k, j, n, l):
    """Recursion coefficient c_{k,j}; the divisor is a monomial, so this is exact."""
    acc = LaurentPoly.one()
    for jj in range(j):
        num = LaurentPoly({(2 * l - k + jj - 1, -n - 1): 1,
                           (-2 * l + k - jj + 1, n + 1): -1})
        acc = acc * num.shifted(2 * (l - k), -n)    # divide by s^n q^{-2(l-k)}
    return acc


def lambda_const(k, n, l):
    return LaurentPoly({(4 * l - k - 3, -2 * n - k): 1, (k - 1, -k): -1})


def alpha_map(k, w):
    """The k-th splitting map into one more strand; output is highest weight."""
    n = w.n
    lk = w.weight()
    if lk is None:
        return TensorVec.zero(n + 1)
    l = lk + k
    if not 1 <= k <= l:
        raise ValueError("alpha_map needs 1 <= k <= l")
    result = TensorVec.zero(n + 1)
    for j in range(k + 1):
        c = c_coeff(k, j, n, l)
        extended = TensorVec(n + 1, {(j,) + idx: coeff
                                     for idx, coeff in w.coeffs.items()})
        result = result + c * (act_tensor(F(k - j), extended) if k > j
                               else extended)
    return result


def psi_map(vec):
    """Quotient map of a highest-weight vector one strand down.

    Keeps the pure tensors whose leading slot is exactly 1 and strips that
    slot; the embedded lower-strand highest-weight space (leading slot 0,
    second slot part of a longer zero prefix) is exactly the kernel.
    """
    out = {}
    for idx, coeff in vec.coeffs.items():
        if idx[0] == 1:
            out[idx[1:]] = coeff
    return TensorVec(vec.n - 1, out)


def alpha_full(vec):
    """The direct-sum splitting map on a full weight space of degree l-1."""
    dec = decompose(vec)
    n, lm1 = dec.n, dec.l
    result = TensorVec.zero(n + 1)
    for t, w in enumerate(dec.components):
        if w.is_zero():
            continue
        k = t + 1
        lam = lambda_const(k, n, lm1 + 1)
        result = result + alpha_map(k, w).map_coeffs(lambda c: _frac(c) / lam)
    return result


def _frac(coeff):
    return coeff if isinstance(coeff, RatFunc) else RatFunc(coeff)


def shifted_generator(i):
    """Generator index under the strand inclusion that prepends a strand.

    The inclusion of the n-strand group into the (n+1)-strand group used by
    the splitting maps sends the i-th generator to the (i+1)-st; keeping the
    shift in one place stops the equivariance checks from drifting.
    """
    return i + 1


def check_splitting(n, l):
    """psi alpha = id on the degree-(l-1) space, plus shifted equivariance.

    Equivariance is checked generator by generator on every pure tensor,
    through the strand-inclusion index shift.
    """
    reports = []
    basis = weight_basis(n, l - 1)
    ok = True
    for idx in basis:
        v = TensorVec.pure(idx)
        if psi_map(alpha_full(v)) != v:
            ok = False
    reports.append(CheckReport("splitting-section", {"n": n, "l": l}, ok))
    for i in range(1, n):
        ok = True
        for idx in basis:
            v = TensorVec.pure(idx)
            lhs = alpha_full(apply_word(BraidWord(n, (i,)), v))
            rhs = apply_word(BraidWord(n + 1, (shifted_generator(i),)),
                             alpha_full(v))
            if lhs != rhs:
                ok = False
        reports.append(CheckReport("splitting-equivariance",
                                   {"n": n, "l": l, "i": i}, ok))
    dims_ok = comb(n + l - 1, l) == sum(comb(n + l - k - 2, l - k)
                                        for k in range(l + 1))
    reports.append(CheckReport("splitting-dimensions", {"n": n, "l": l}, dims_ok))
    return reports


# -- full twist -------------------------------------------------------------------


def full_twist_word(n):
    return BraidWord(n, tuple(range(1, n)) * n)


def full_twist_scalar(n, l):
    """Scalar by which the central full twist acts on the degree-l representation.

    A non-scalar result signals an internal inconsistency and raises.
    """
    m = rho_matrix(n, l, full_twist_word(n))
    d = m.size
    scalar = m.entries[0][0]
    for r in range(d):
        for c in range(d):
            expected = scalar if r == c else LaurentPoly.zero()
            if m.entries[r][c] != expected:
                raise ArithmeticError(
                    "full twist is not scalar at (%d, %d) for n=%d l=%d"
                    % (r, c, n, l))
    return scalar


# -- irreducibility ---------------------------------------------------------------


_CERT_PRIME = (1 << 61) - 1


def guard_factors(n, l):
    """Named polynomials that must not vanish at a substitution point."""
    q = LaurentPoly.monomial(1, 0)
    s = LaurentPoly.monomial(0, 1)
    factors = [
        ("q0", q),
        ("s0", s),
        ("q0^2-1", q * q - 1),
        ("s0^2-1", s * s - 1),
    ]
    for k in range(l + 1):
        factors.append(("mu[1,%d;%d,%d]" % (k, n, l), mu(1, k, n, l)))
    for k in range(1, l + 1):
        factors.append(("lambda[%d;%d,%d]" % (k, n, l), lambda_const(k, n, l)))
    return factors


def validate_specialization(n, l, q0, s0):
    q0, s0 = Fraction(q0), Fraction(s0)
    if q0 == 0 or s0 == 0:
        raise GuardedSpecializationError("q0" if q0 == 0 else "s0", 0)
    for name, poly in guard_factors(n, l):
        value = specialize(poly, q0, s0)
        if value == 0:
            raise GuardedSpecializationError(name, value)
    return q0, s0


def _specialized_generators(n, l, q0, s0):
    mats = []
    for i in range(1, n):
        rep = rho_matrix(n, l, [i])
        mats.append([[specialize(entry, q0, s0) for entry in row]
                     for row in rep.entries])
    return mats


def _integerize(mat):
    denom = 1
    for row in mat:
        for x in row:
            denom = denom * x.denominator // gcd(denom, x.denominator)
    return [[int(x * denom) for x in row] for row in mat]


def matrix_commutant_dimension(mats, seed=0):
    """Exact dimension of the joint commutant of square rational matrices.

    Fast path: find an algebra element that is nonderogatory mod a large
    prime; its centralizer there is spanned by its powers, so the commutant
    dimension mod p comes from a small elimination.  Since the rational
    kernel dimension is at most the mod-p one and at least 1 (the identity
    commutes), a mod-p answer of 1 is exact.  Otherwise fall back to exact
    rational elimination on the full Sylvester system.
    """
    d = len(mats[0])
    if d == 1:
        return 1
    imats = [_integerize(m) for m in mats]
    fast = _commutant_dim_modp(imats, seed)
    if fast == 1:
        return 1
    rows = []
    for a in imats:
        for r in range(d):
            for c in range(d):
                # (X A - A X)[r, c] = sum_k X[r,k] A[k,c] - A[r,k] X[k,c]
                row = [Fraction(0)] * (d * d)
                for k in range(d):
                    row[r * d + k] += a[k][c]
                    row[k * d + c] -= a[r][k]
                rows.append(row)
    return fraction_kernel_dimension(rows, d * d)


def _commutant_dim_modp(imats, seed):
    p = _CERT_PRIME
    d = len(imats[0])
    pm = [[[x % p for x in row] for row in m] for m in imats]
    b = _nonderogatory_element(pm, p, seed)
    if b is None:
        return None
    powers = [_id_modp(d)]
    for _ in range(d - 1):
        powers.append(_mat_mul_modp(powers[-1], b, p))
    rows = []
    for a in pm:
        comms = [_mat_sub_modp(_mat_mul_modp(bk, a, p), _mat_mul_modp(a, bk, p), p)
                 for bk in powers]
        for r in range(d):
            for c in range(d):
                rows.append([comms[k][r][c] for k in range(d)])
    rank = modp_rank(rows, d, p)
    return d - rank


def _id_modp(d):
    return [[1 if r == c else 0 for c in range(d)] for r in range(d)]


def _mat_mul_modp(a, b, p):
    d = len(a)
    out = []
    for r in range(d):
        row = []
        ar = a[r]
        for c in range(d):
            acc = 0
            for k in range(d):
                acc += ar[k] * b[k][c]
            row.append(acc % p)
        out.append(row)
    return out


def _mat_sub_modp(a, b, p):
    return [[(x - y) % p for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _charpoly_modp(a, p):
    """Faddeev-LeVerrier characteristic polynomial coefficients mod p."""
    d = len(a)
    coeffs = [1]
    m = _id_modp(d)
    for k in range(1, d + 1):
        am = _mat_mul_modp(a, m, p)
        tr = sum(am[i][i] for i in range(d)) % p
        ck = (-tr * pow(k, p - 2, p)) % p
        coeffs.append(ck)
        m = [[(am[r][c] + (ck if r == c else 0)) % p for c in range(d)]
             for r in range(d)]
    return coeffs  # x^d + c1 x^{d-1} + ... + cd


def _poly_rem_modp(f, g, p):
    """Remainder of coefficient lists (descending powers) mod p; g nonzero."""
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[0], p - 2, p)
    while len(f) - 1 >= dg:
        if f[0]:
            factor = (f[0] * inv) % p
            for i in range(1, len(g)):
                f[i] = (f[i] - factor * g[i]) % p
        f.pop(0)
    i = 0
    while i < len(f) and f[i] == 0:
        i += 1
    return f[i:]


def _poly_gcd_degree_modp(f, g, p):
    """Degree of gcd of two coefficient lists (descending powers) mod p."""
    def norm(h):
        i = 0
        while i < len(h) and h[i] == 0:
            i += 1
        return h[i:]

    f, g = norm(f), norm(g)
    while g:
        f, g = g, _poly_rem_modp(f, g, p)
    return len(f) - 1 if f else -1


def _nonderogatory_element(pm, p, seed):
    """An algebra element with squarefree characteristic polynomial mod p."""
    d = len(pm[0])
    rng = random.Random(seed)
    candidates = [pm[0]]
    if len(pm) > 1:
        combo = _id_modp(d)
        combo = [[sum((k + 1) * pm[k][r][c] for k in range(len(pm))) % p
                  for c in range(d)] for r in range(d)]
        candidates.append(combo)
        prod = pm[0]
        for m in pm[1:]:
            prod = _mat_mul_modp(prod, m, p)
        candidates.append(prod)

    def random_candidate():
        acc = [[0] * d for _ in range(d)]
        for m in pm:
            r1 = rng.randrange(1, 1 << 20)
            acc = [[(acc[r][c] + r1 * m[r][c]) % p for c in range(d)]
                   for r in range(d)]
        a, b = rng.randrange(len(pm)), rng.randrange(len(pm))
        prod = _mat_mul_modp(pm[a], pm[b], p)
        r2 = rng.randrange(1, 1 << 20)
        return [[(acc[r][c] + r2 * prod[r][c]) % p for c in range(d)]
                for r in range(d)]

    for _ in range(8):
        for cand in candidates:
            f = _charpoly_modp(cand, p)
            deriv = [(c * (d - i)) % p for i, c in enumerate(f[:-1])]
            if _poly_gcd_degree_modp(f, deriv, p) <= 0:
                return cand
        candidates = [random_candidate()]
    return None


def commutant_dimension(n, l, q0, s0, seed=0):
    """Dimension of the commutant of the degree-l representation at (q0, s0).

    Dimension 1 certifies irreducibility at the point and hence generic
    irreducibility over the fraction field.
    """
    q0, s0 = validate_specialization(n, l, q0, s0)
    if comb(n + l - 2, l) == 1:
        return 1
    mats = _specialized_generators(n, l, q0, s0)
    return matrix_commutant_dimension(mats, seed=seed)


def random_specialization(n, l, seed=0):
    """Deterministically seeded substitution point clear of the guard loci."""
    rng = random.Random(seed)
    while True:
        q0 = Fraction(rng.randint(2, 40), rng.randint(1, 7))
        s0 = Fraction(rng.randint(2, 40), rng.randint(1, 7))
        try:
            return validate_specialization(n, l, q0, s0)
        except GuardedSpecializationError:
            continue
