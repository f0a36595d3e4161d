"""The Lawrence-Krammer-Bigelow representation and the Burau representations.

The LKB space for n strands is free over Z[t^{+-1}, Q^{+-1}] on basis
elements F_{i,j}, 1 <= i < j <= n (Q is the customary curly q of the
two-parameter ring; it is kept in a type of its own so that it can never be
confused with the quantum parameter q of the Verma side).  The generator
inverses act by

    sigma_i^{-1}. F_{j,k}   = F_{j,k}                                 (j,k disjoint from i,i+1)
    sigma_i^{-1}. F_{i+1,j} = F_{i,j}
    sigma_i^{-1}. F_{j,i+1} = F_{j,i}
    sigma_i^{-1}. F_{i,j}   = Q^{-1} F_{i+1,j} + (1-Q^{-1}) F_{i,j}
                              + t^{-1}(Q^{-1}-Q^{-2}) F_{i,i+1}
    sigma_i^{-1}. F_{i,i+1} = -t^{-1} Q^{-2} F_{i,i+1}
    sigma_i^{-1}. F_{j,i}   = Q^{-1} F_{j,i+1} + (1-Q^{-1}) F_{j,i}
                              - (Q^{-1}-Q^{-2}) F_{i,i+1}

The bridge to the highest-weight side is the parameter identification
theta: Q -> s^2, t -> -q^{-2} together with the basis rescaling
F_{i,j} -> s^{i+j} w_{i,j}; because theta twists the scalars, the verified
matrix identity (with columns-as-images conventions on both sides) is

    rho_{n,2}(sigma_i) = D . theta(sigma_i^{-1} on LKB) . D^{-1},
    D = diag(s^{i+j}).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import mat_diff_witness, mat_mul, mat_identity, poly_matrix_inverse
from .report import CheckReport
from .ring import LaurentPoly
from .hwspace import hw_basis, pair_label, rho_matrix


class LKBPoly(LaurentPoly):
    """Laurent polynomial in the LKB parameters; exponents are (e_t, e_Q)."""

    __slots__ = ()
    variables = ("t", "Q")


def _t(e):
    return LKBPoly.monomial(e, 0)


def _Q(e):
    return LKBPoly.monomial(0, e)


@lru_cache(maxsize=None)
def pair_basis(n):
    """Ordered pairs (i, j), 1 <= i < j <= n, lexicographically ascending."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


@dataclass(frozen=True)
class LKBMatrix:
    n: int
    basis: tuple
    entries: tuple    # rows over LKBPoly

    @property
    def size(self):
        return len(self.basis)

    def row_lists(self):
        return [list(row) for row in self.entries]

    def to_json(self):
        return {
            "vars": list(LKBPoly.variables),
            "basis": ["F(%d,%d)" % p for p in self.basis],
            "rows": [[p.to_json() for p in row] for row in self.entries],
        }


def _matrix_from_columns(n, columns):
    basis = pair_basis(n)
    pos = {p: r for r, p in enumerate(basis)}
    d = len(basis)
    entries = [[LKBPoly.zero()] * d for _ in range(d)]
    for c, col in enumerate(columns):
        for pair, coeff in col:
            entries[pos[pair]][c] = entries[pos[pair]][c] + coeff
    return LKBMatrix(n, basis, tuple(tuple(row) for row in entries))


def lkb_sigma_inverse(n, i):
    """Matrix of the i-th inverse generator on the pair basis, columns = images."""
    if not 1 <= i <= n - 1:
        raise ValueError("generator index %d out of range for n=%d" % (i, n))
    one = LKBPoly.one()
    mix = one - _Q(-1)                          # 1 - Q^-1
    hook = _Q(-1) - _Q(-2)                      # Q^-1 - Q^-2
    columns = []
    for (a, b) in pair_basis(n):
        if a == i and b == i + 1:
            col = [((i, i + 1), -(_t(-1) * _Q(-2)))]
        elif a == i + 1:
            col = [((i, b), one)]
        elif b == i + 1:
            col = [((a, i), one)]
        elif a == i:
            col = [((i + 1, b), _Q(-1)), ((i, b), mix),
                   ((i, i + 1), _t(-1) * hook)]
        elif b == i:
            col = [((a, i + 1), _Q(-1)), ((a, i), mix),
                   ((i, i + 1), -hook)]
        else:
            col = [((a, b), one)]
        columns.append(col)
    return _matrix_from_columns(n, columns)


@lru_cache(maxsize=None)
def lkb_sigma(n, i):
    """Exact matrix inverse of lkb_sigma_inverse; integrality is asserted."""
    inv = lkb_sigma_inverse(n, i)
    entries = poly_matrix_inverse(inv.row_lists())
    return LKBMatrix(n, inv.basis, tuple(tuple(row) for row in entries))


def theta(p):
    """Parameter identification into the Verma-side ring: Q -> s^2, t -> -q^{-2}."""
    if not isinstance(p, LKBPoly):
        raise TypeError("theta is defined on the LKB parameter ring")
    out = {}
    for (et, eq_), coeff in p.terms.items():
        sign = -coeff if et % 2 else coeff
        key = (-2 * et, 2 * eq_)
        acc = out.get(key, 0) + sign
        if acc:
            out[key] = acc
        elif key in out:
            del out[key]
    return LaurentPoly(out)


def theta_wrong_sign(p):
    """Negative control: same exponents but t -> +q^{-2}."""
    if not isinstance(p, LKBPoly):
        raise TypeError("theta is defined on the LKB parameter ring")
    return LaurentPoly({(-2 * et, 2 * eq_): c for (et, eq_), c in p.terms.items()})


def fork_iso_check(n, theta_map=theta):
    """Verify the degree-2 highest-weight action matches the LKB action.

    For every generator the transported matrix D theta(L) D^{-1} (with
    L the inverse-generator LKB matrix and D = diag(s^{i+j})) must equal the
    computed representation matrix, after aligning the two basis orders.
    """
    reports = []
    basis_pairs = pair_basis(n)
    hw = hw_basis(n, 2)
    hw_pos = {el.label: r for r, el in enumerate(hw)}
    perm = [hw_pos[pair_label(a, b, n)] for (a, b) in basis_pairs]
    for i in range(1, n):
        lkb = lkb_sigma_inverse(n, i)
        rho = rho_matrix(n, 2, [i])
        d = len(basis_pairs)
        transported = [[None] * d for _ in range(d)]
        for r in range(d):
            dr = sum(basis_pairs[r])
            for c in range(d):
                dc = sum(basis_pairs[c])
                coeff = theta_map(lkb.entries[r][c])
                transported[r][c] = coeff * LaurentPoly.monomial(0, dr - dc)
        aligned = [[rho.entries[perm[r]][perm[c]] for c in range(d)]
                   for r in range(d)]
        witness = mat_diff_witness(transported, aligned)
        reports.append(CheckReport(
            check="fork-isomorphism", params={"n": n, "i": i},
            passed=witness is None,
            witness=None if witness is None else
            [witness[0], witness[1], str(witness[2])]))
    return reports


def check_lkb_braid_relations(n):
    """Braid relations and far commutation for the LKB inverse generators."""
    reports = []
    mats = {i: lkb_sigma_inverse(n, i).row_lists() for i in range(1, n)}
    for i in range(1, n - 1):
        lhs = mat_mul(mat_mul(mats[i], mats[i + 1]), mats[i])
        rhs = mat_mul(mat_mul(mats[i + 1], mats[i]), mats[i + 1])
        witness = mat_diff_witness(lhs, rhs)
        reports.append(CheckReport("lkb-braid-adjacent", {"n": n, "i": i},
                                   witness is None))
    for i in range(1, n):
        for j in range(i + 2, n):
            witness = mat_diff_witness(mat_mul(mats[i], mats[j]),
                                       mat_mul(mats[j], mats[i]))
            reports.append(CheckReport("lkb-braid-commute",
                                       {"n": n, "i": i, "j": j}, witness is None))
    for i in range(1, n):
        prod = mat_mul(lkb_sigma(n, i).row_lists(), mats[i])
        ok = mat_diff_witness(prod, mat_identity(len(prod), LKBPoly.one())) is None
        reports.append(CheckReport("lkb-inverse-pair", {"n": n, "i": i}, ok))
    return reports


# -- Burau ----------------------------------------------------------------------


def burau_matrices(n, reduced=True):
    """Generator matrices of the Burau representation with t = s^{-2}.

    Unreduced: n x n matrices on the rescaled one-column basis d_j, realizing

        sigma_i . d_i = (1 - t) d_i + d_{i+1},   sigma_i . d_{i+1} = t d_i,

    with all other basis vectors fixed.  Reduced: (n-1) x (n-1) matrices on
    u_j = t^{-j} d_j - t^{-n} d_n, the kernel basis of the evaluation
    d_j -> t^j; their action is derived from the unreduced one.
    """
    if n < 2:
        raise ValueError("Burau needs n >= 2")
    t = LaurentPoly.monomial(0, -2)
    one = LaurentPoly.one()
    zero = LaurentPoly.zero()
    unreduced = []
    for i in range(1, n):
        mat = [[one if r == c else zero for c in range(n)] for r in range(n)]
        mat[i - 1][i - 1] = one - t
        mat[i][i - 1] = one
        mat[i - 1][i] = t
        mat[i][i] = zero
        unreduced.append(mat)
    if not reduced:
        return unreduced

    def u_in_d(j):
        vec = [zero] * n
        vec[j - 1] = LaurentPoly.monomial(0, 2 * j)       # t^{-j}
        vec[n - 1] = vec[n - 1] - LaurentPoly.monomial(0, 2 * n)
        return vec

    u_vectors = [u_in_d(j) for j in range(1, n)]
    out = []
    for mat in unreduced:
        cols = []
        for j in range(1, n):
            image = [sum((mat[r][k] * u_vectors[j - 1][k] for k in range(n)),
                         zero) for r in range(n)]
            # image lies in the span of the u_j; coordinates read off the
            # d_1..d_{n-1} slots, then the d_n slot must balance exactly
            coords = [image[r] * LaurentPoly.monomial(0, -2 * (r + 1))
                      for r in range(n - 1)]
            check = [zero] * n
            for k, c in enumerate(coords):
                for r in range(n):
                    check[r] = check[r] + c * u_vectors[k][r]
            if any((check[r] - image[r]) for r in range(n)):
                raise ArithmeticError("reduced Burau image left the kernel basis")
            cols.append(coords)
        out.append([[cols[c][r] for c in range(n - 1)] for r in range(n - 1)])
    return out


def check_burau(n):
    """The degree-1 representation is reduced Burau after u_j = s^j w_j.

    hw_basis order at degree 1 is w_{n-1}, ..., w_1, so entries are compared
    through the index reversal and the monomial rescaling.
    """
    reports = []
    reduced = burau_matrices(n, reduced=True)
    hw = hw_basis(n, 1)
    # hw element r corresponds to w_{n-1-r}; invert that placement
    pos = {n - 1 - r: r for r in range(n - 1)}
    for i in range(1, n):
        rho = rho_matrix(n, 1, [i])
        ok = True
        witness = None
        for a in range(1, n):
            for b in range(1, n):
                lhs = reduced[i - 1][a - 1][b - 1]
                rhs = rho.entries[pos[a]][pos[b]] * LaurentPoly.monomial(0, b - a)
                if lhs != rhs:
                    ok = False
                    witness = [a, b, str(lhs - rhs)]
        reports.append(CheckReport("burau-degree-one", {"n": n, "i": i},
                                   ok, witness))
    unred = burau_matrices(n, reduced=False)
    t_powers = [LaurentPoly.monomial(0, -2 * j) for j in range(1, n + 1)]
    quot_ok = True
    for i, mat in enumerate(unred, start=1):
        for c in range(n):
            total = sum((mat[r][c] * t_powers[r] for r in range(n)),
                        LaurentPoly.zero())
            if total != t_powers[c]:
                quot_ok = False
    reports.append(CheckReport("burau-quotient-map", {"n": n}, quot_ok))
    return reports
