"""Braid group action on tensor powers of the generic Verma module.

The braiding operator on V (x) V acts on pure tensors by

    R.(v_i (x) v_j) = s^{-(i+j)} sum_{m=0}^{i} q^{2(i-m)(j+m)} q^{m(m-1)/2}
                      qbinom(m+j, j) prod_{k<m} (s q^{-k-j} - s^{-1} q^{k+j})
                      v_{j+m} (x) v_{i-m}

and the generator sigma_i of B_n is R applied in tensor slots (i, i+1).
R preserves each total-degree block of V (x) V; its inverse is computed
blockwise by an exact solve and is asserted (not assumed) to stay integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import mat_diff_witness, mat_mul, poly_matrix_inverse
from .report import CheckReport
from .ring import LaurentPoly, qbinom
from .verma import E, F, K, TensorVec, act_tensor, weight_basis


@dataclass(frozen=True)
class BraidWord:
    """Word in the braid group B_n; letter k > 0 means sigma_k, k < 0 its inverse."""

    n: int
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 2:
            raise ValueError("braid words need at least 2 strands")
        for k in self.letters:
            if k == 0 or abs(k) > self.n - 1:
                raise ValueError("letter %d out of range for B_%d" % (k, self.n))

    @classmethod
    def parse(cls, n, text):
        """Parse whitespace- or comma-separated signed generator indices."""
        body = text.replace(",", " ").split()
        return cls(n, tuple(int(tok) for tok in body))

    def inverse(self):
        return BraidWord(self.n, tuple(-k for k in reversed(self.letters)))

    def __str__(self):
        return " ".join(str(k) for k in self.letters)


@lru_cache(maxsize=None)
def rmatrix_pair(i, j):
    """R applied to the pure tensor v_i (x) v_j (two factors)."""
    if i < 0 or j < 0:
        raise ValueError("basis indices must be nonnegative")
    result = TensorVec.zero(2)
    for m in range(i + 1):
        coeff = LaurentPoly.monomial(
            2 * (i - m) * (j + m) + m * (m - 1) // 2, -(i + j))
        coeff = coeff * qbinom(m + j, j)
        for k in range(m):
            coeff = coeff * LaurentPoly({(-k - j, 1): 1, (k + j, -1): -1})
        result = result + TensorVec.pure((j + m, i - m), coeff)
    return result


def rmatrix_pair_perturbed(i, j):
    """Negative control: drop the top summand of R.(v_i (x) v_j) when i > 0."""
    full = rmatrix_pair(i, j)
    if i == 0:
        return full
    return full - TensorVec.pure((j + i, 0), full.coeff((j + i, 0)))


@lru_cache(maxsize=None)
def _rblock(d, perturb=False):
    """Matrix of R on the degree-d block of V (x) V, columns = images."""
    basis = weight_basis(2, d)
    pos = {idx: c for c, idx in enumerate(basis)}
    pair = rmatrix_pair_perturbed if perturb else rmatrix_pair
    cols = [pair(i, j) for (i, j) in basis]
    return [[cols[c].coeff(basis[r]) for c in range(len(basis))]
            for r in range(len(basis))]


@lru_cache(maxsize=None)
def _rblock_inverse(d):
    """Blockwise inverse of R; entries verified to stay in the Laurent ring."""
    return poly_matrix_inverse(_rblock(d))


def rmatrix_pair_inverse(i, j):
    """R^{-1} applied to v_i (x) v_j, from the cached exact block inverse."""
    if i < 0 or j < 0:
        raise ValueError("basis indices must be nonnegative")
    d = i + j
    basis = weight_basis(2, d)
    col = basis.index((i, j))
    inv = _rblock_inverse(d)
    return TensorVec(2, {basis[r]: inv[r][col] for r in range(len(basis))})


def apply_letter(vec, k, perturb=False):
    """Apply sigma_k (k > 0) or its inverse (k < 0) to a tensor vector."""
    n = vec.n
    i = abs(k) - 1  # 0-based slot of the braided pair
    if not 0 <= i < n - 1:
        raise ValueError("generator %d out of range for %d strands" % (k, n))
    if k > 0:
        pair = rmatrix_pair_perturbed if perturb else rmatrix_pair
    else:
        pair = rmatrix_pair_inverse
    result = TensorVec.zero(n)
    for idx, coeff in vec.coeffs.items():
        local = pair(idx[i], idx[i + 1])
        for (a, b), c in local.coeffs.items():
            full = idx[:i] + (a, b) + idx[i + 2:]
            result = result + TensorVec.pure(full, coeff * c)
    return result


def apply_word(word, vec, perturb=False):
    """Apply a braid word letter by letter, first letter first."""
    if word.n != vec.n:
        raise ValueError("word on %d strands applied to %d-strand vector"
                         % (word.n, vec.n))
    for k in word.letters:
        vec = apply_letter(vec, k, perturb=perturb)
    return vec


def sigma_matrix(n, l, k, perturb=False):
    """Matrix of sigma_k (or its inverse) on the degree-l weight space of n strands."""
    basis = weight_basis(n, l)
    cols = [apply_letter(TensorVec.pure(idx), k, perturb=perturb) for idx in basis]
    return [[cols[c].coeff(basis[r]) for c in range(len(basis))]
            for r in range(len(basis))]


def operator_matrix(gen, n, l):
    """Matrix of an algebra generator from the degree-l into its target block."""
    basis = weight_basis(n, l)
    if gen.kind in ("K", "Kinv"):
        target = basis
    elif gen.kind == "E":
        if l == 0:
            return [], basis
        target = weight_basis(n, l - 1)
    else:
        target = weight_basis(n, l + gen.power)
    cols = [act_tensor(gen, TensorVec.pure(idx)) for idx in basis]
    mat = [[cols[c].coeff(target[r]) for c in range(len(basis))]
           for r in range(len(target))]
    return mat, target


# -- structural checks ---------------------------------------------------------


def check_braid_relations(n, l, perturb=False):
    """Exact matrix checks of the defining braid relations on V_{n,l}."""
    reports = []
    mats = {i: sigma_matrix(n, l, i, perturb=perturb) for i in range(1, n)}
    for i in range(1, n - 1):
        lhs = mat_mul(mat_mul(mats[i], mats[i + 1]), mats[i])
        rhs = mat_mul(mat_mul(mats[i + 1], mats[i]), mats[i + 1])
        witness = mat_diff_witness(lhs, rhs)
        reports.append(CheckReport(
            check="braid-adjacent",
            params={"n": n, "l": l, "i": i},
            passed=witness is None,
            witness=_format_witness(witness)))
    for i in range(1, n):
        for j in range(i + 2, n):
            lhs = mat_mul(mats[i], mats[j])
            rhs = mat_mul(mats[j], mats[i])
            witness = mat_diff_witness(lhs, rhs)
            reports.append(CheckReport(
                check="braid-commute",
                params={"n": n, "l": l, "i": i, "j": j},
                passed=witness is None,
                witness=_format_witness(witness)))
    return reports


def check_yang_baxter(l, perturb=False):
    """(R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R) on the degree-l block of V^3."""
    r1 = sigma_matrix(3, l, 1, perturb=perturb)
    r2 = sigma_matrix(3, l, 2, perturb=perturb)
    lhs = mat_mul(mat_mul(r1, r2), r1)
    rhs = mat_mul(mat_mul(r2, r1), r2)
    witness = mat_diff_witness(lhs, rhs)
    return [CheckReport(check="yang-baxter", params={"l": l},
                        passed=witness is None,
                        witness=_format_witness(witness))]


def check_equivariance(n, l):
    """The braid action commutes with K, E and F^(1) on V_{n,l}."""
    reports = []
    gens = {"K": K, "E": E, "F1": F(1)}
    for name, gen in gens.items():
        op, _ = operator_matrix(gen, n, l)
        for i in range(1, n):
            sig_src = sigma_matrix(n, l, i)
            if name == "K":
                sig_tgt = sig_src
            elif name == "E":
                if l == 0:
                    reports.append(CheckReport(
                        check="equivariance", params={"n": n, "l": l, "i": i, "x": name}))
                    continue
                sig_tgt = sigma_matrix(n, l - 1, i)
            else:
                sig_tgt = sigma_matrix(n, l + 1, i)
            lhs = mat_mul(sig_tgt, op)
            rhs = mat_mul(op, sig_src)
            witness = mat_diff_witness(lhs, rhs)
            reports.append(CheckReport(
                check="equivariance",
                params={"n": n, "l": l, "i": i, "x": name},
                passed=witness is None,
                witness=_format_witness(witness)))
    return reports


def _format_witness(witness):
    if witness is None:
        return None
    r, c, diff = witness
    return [r, c, str(diff)]
