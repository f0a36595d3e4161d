"""The integral quantum-sl2 action on a generic Verma module and its tensor powers.

The module V is free on basis vectors v_0, v_1, ... over Z[q^{+-1}, s^{+-1}],
where s plays the role of the exponentiated generic highest weight.  The
algebra generators are K, K^{-1}, the raising operator E and the divided
powers F^{(m)} of the lowering operator; their single-factor action is

    K.v_j     = s q^{-2j} v_j
    E.v_j     = v_{j-1}          (E.v_0 = 0)
    F^(m).v_j = qbinom(m+j, j) * prod_{k<m} (s q^{-k-j} - s^{-1} q^{k+j}) v_{j+m}

Tensor powers carry the action through the iterated coproduct

    Delta(K) = K (x) K,   Delta(E) = E (x) K + 1 (x) E,
    Delta(F^(m)) = sum_j q^{-j(m-j)} K^{j-m} F^(j) (x) F^(m-j),

which for an n-fold product expands over compositions (m_1, ..., m_n) of m:
factor i receives K^{-t_i} F^(m_i) with t_i the sum of the m_r to its right,
weighted by q^{- sum_i m_i t_i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .ring import LaurentPoly, RatFunc, qbinom


@dataclass(frozen=True)
class AlgebraGen:
    """One of the generators K, K^{-1}, E or a divided power F^(m)."""

    kind: str          # "K", "Kinv", "E" or "F"
    power: int = 0     # divided-power order, >= 1 when kind == "F"

    def __post_init__(self):
        if self.kind not in ("K", "Kinv", "E", "F"):
            raise ValueError("unknown generator kind %r" % self.kind)
        if self.kind == "F" and self.power < 1:
            raise ValueError("divided power F^(m) needs m >= 1")


K = AlgebraGen("K")
KINV = AlgebraGen("Kinv")
E = AlgebraGen("E")


def F(m):
    return AlgebraGen("F", m)


class TensorVec:
    """Finite linear combination of pure tensors v_{a_1} (x) ... (x) v_{a_n}.

    Keys are length-n tuples of nonnegative ints; coefficients live in the
    Laurent ring or its fraction field (the two may be mixed transiently,
    e.g. while assembling a decomposition).  Zero coefficients are never
    stored.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        cleaned = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for idx, coeff in items:
                idx = tuple(idx)
                if len(idx) != n:
                    raise ValueError("index %r has wrong length for n=%d" % (idx, n))
                if isinstance(coeff, int):
                    coeff = LaurentPoly.constant(coeff)
                if coeff.is_zero():
                    continue
                if idx in cleaned:
                    acc = cleaned[idx] + coeff
                    if acc.is_zero():
                        del cleaned[idx]
                    else:
                        cleaned[idx] = acc
                else:
                    cleaned[idx] = coeff
        self.coeffs = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def pure(cls, idx, coeff=1):
        return cls(len(idx), {tuple(idx): coeff})

    # -- predicates / structure ---------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def domain(self):
        """'poly' when all coefficients are integral, else 'ratfunc'."""
        for c in self.coeffs.values():
            if isinstance(c, RatFunc):
                return "ratfunc"
        return "poly"

    def weight(self):
        """Common total degree of all terms; None for the zero vector."""
        totals = {sum(idx) for idx in self.coeffs}
        if not totals:
            return None
        if len(totals) > 1:
            raise ValueError("vector is not weight-homogeneous: %s" % sorted(totals))
        return totals.pop()

    def coeff(self, idx):
        c = self.coeffs.get(tuple(idx))
        if c is None:
            return LaurentPoly.zero()
        return c

    def sorted_terms(self):
        return sorted(self.coeffs.items())

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, TensorVec) or other.n != self.n:
            raise ValueError("tensor size mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for idx, coeff in other.coeffs.items():
            if idx in out:
                acc = out[idx] + coeff
                if acc.is_zero():
                    del out[idx]
                else:
                    out[idx] = acc
            else:
                out[idx] = coeff
        result = TensorVec.__new__(TensorVec)
        result.n, result.coeffs = self.n, out
        return result

    def __neg__(self):
        result = TensorVec.__new__(TensorVec)
        result.n = self.n
        result.coeffs = {idx: -c for idx, c in self.coeffs.items()}
        return result

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, int):
            scalar = LaurentPoly.constant(scalar)
        if scalar.is_zero():
            return TensorVec.zero(self.n)
        out = {}
        for idx, coeff in self.coeffs.items():
            c = coeff * scalar
            if not c.is_zero():
                out[idx] = c
        result = TensorVec.__new__(TensorVec)
        result.n, result.coeffs = self.n, out
        return result

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorVec) or other.n != self.n:
            return NotImplemented
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(c == other.coeffs[idx] for idx, c in self.coeffs.items())

    __hash__ = None

    def map_coeffs(self, fn):
        return TensorVec(self.n, {idx: fn(c) for idx, c in self.coeffs.items()})

    def as_integral(self):
        """Convert RatFunc coefficients back to polynomials (must be exact)."""
        def to_poly(c):
            return c.to_poly() if isinstance(c, RatFunc) else c
        return self.map_coeffs(to_poly)

    # -- presentation -------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for idx, coeff in self.sorted_terms():
            parts.append("(%s)*v%s" % (coeff, list(idx)))
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return {
            "n": self.n,
            "terms": [{"idx": list(idx), "coeff": c.to_json()}
                      for idx, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        coeffs = {}
        for term in data["terms"]:
            raw = term["coeff"]
            if "num" in raw:
                coeffs[tuple(term["idx"])] = RatFunc.from_json(raw)
            else:
                coeffs[tuple(term["idx"])] = LaurentPoly.from_json(raw)
        return cls(data["n"], coeffs)


# -- weight-space enumeration -------------------------------------------------


@lru_cache(maxsize=None)
def weight_basis(n, l):
    """All compositions of l into n nonnegative parts, lex ascending."""
    if n < 1 or l < 0:
        raise ValueError("weight_basis needs n >= 1 and l >= 0")
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for first in range(remaining + 1):
            rec(prefix + (first,), remaining - first, slots - 1)

    rec((), l, n)
    assert len(out) == comb(n + l - 1, l)
    return tuple(out)


# -- single-factor action -------------------------------------------------------


def k_eigenvalue(j, n=1):
    """Eigenvalue of K on an n-factor tensor of total degree j: s^n q^{-2j}."""
    return LaurentPoly.monomial(-2 * j, n)


@lru_cache(maxsize=None)
def f_single_coeff(m, j):
    """Coefficient of v_{j+m} in F^(m).v_j."""
    acc = qbinom(m + j, j)
    for k in range(m):
        acc = acc * LaurentPoly({(-k - j, 1): 1, (k + j, -1): -1})
    return acc


def act_single(gen, j):
    """Action of a generator on the single basis vector v_j."""
    if j < 0:
        raise ValueError("basis index must be nonnegative")
    if gen.kind == "K":
        return TensorVec.pure((j,), k_eigenvalue(j))
    if gen.kind == "Kinv":
        return TensorVec.pure((j,), LaurentPoly.monomial(2 * j, -1))
    if gen.kind == "E":
        if j == 0:
            return TensorVec.zero(1)
        return TensorVec.pure((j - 1,))
    return TensorVec.pure((j + gen.power,), f_single_coeff(gen.power, j))


# -- tensor action ------------------------------------------------------------


@lru_cache(maxsize=None)
def _compositions(total, parts):
    if parts == 1:
        return ((total,),)
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def _act_k(vec, sign):
    out = {}
    for idx, coeff in vec.coeffs.items():
        out[idx] = coeff * LaurentPoly.monomial(-2 * sign * sum(idx), sign * vec.n)
    return TensorVec(vec.n, out)


def _act_e(vec):
    n = vec.n
    result = TensorVec.zero(n)
    for idx, coeff in vec.coeffs.items():
        for i in range(n):
            if idx[i] == 0:
                continue
            # K-eigenvalues of the factors to the right of position i
            right = sum(idx[i + 1:])
            mono = LaurentPoly.monomial(-2 * right, n - 1 - i)
            new_idx = idx[:i] + (idx[i] - 1,) + idx[i + 1:]
            result = result + TensorVec.pure(new_idx, coeff * mono)
    return result


def _act_f(vec, m):
    n = vec.n
    result = TensorVec.zero(n)
    for idx, coeff in vec.coeffs.items():
        for parts in _compositions(m, n):
            new_idx = tuple(a + p for a, p in zip(idx, parts))
            tail = m
            q_twist = 0
            factor = LaurentPoly.one()
            for i in range(n):
                tail -= parts[i]
                q_twist -= parts[i] * tail
                if parts[i]:
                    factor = factor * f_single_coeff(parts[i], idx[i])
                if tail:
                    # K^{-tail} eigenvalue at v_{idx[i] + parts[i]}
                    factor = factor * LaurentPoly.monomial(
                        2 * tail * (idx[i] + parts[i]), -tail)
            if q_twist:
                factor = factor.shifted(q_twist, 0)
            if not factor.is_zero():
                result = result + TensorVec.pure(new_idx, coeff * factor)
    return result


def act_tensor(gen, vec):
    """Apply a generator to a tensor vector through the n-fold coproduct."""
    if gen.kind == "K":
        return _act_k(vec, 1)
    if gen.kind == "Kinv":
        return _act_k(vec, -1)
    if gen.kind == "E":
        return _act_e(vec)
    return _act_f(vec, gen.power)


def act_e_power(vec, t):
    for _ in range(t):
        vec = _act_e(vec)
    return vec
