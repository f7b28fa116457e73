"""Delta operators on symmetric functions and the identity families built on them.

Everything here works with exact coefficients in the field Q(q,t) (or its q-only
subfield) and Schur-basis symmetric functions from :mod:`deltaq.symfunc`.

The central objects:

* ``delta_prime_t0`` / ``delta_full`` -- eigenoperator sums over the modified
  Hall-Littlewood / Macdonald expansions of ``e_n``.
* ``lhs_nu`` and ``rhs_nu`` -- the two closed expansions of the same operator
  image, one through the eigenvalue route, one through length-graded
  Hall-Littlewood sums.
* the hook-indexed family (``lhs_hook_closed``, ``rhs_hook``, ``remmel_coeff``,
  ``remmel_sum``) plus the scalar q-binomial identities (``prop31`` .. ``prop33b``)
  that link them.
* ``shifted_cauchy`` -- length-graded Hall-Littlewood expansions of the kernel
  ``h_n[X(1-q^i)]/(1-q^i)``.
* ``span_dimension_report`` -- exact rank of the span of plain-Delta images.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import hall_littlewood as hl
from . import qfield
from . import symfunc as sf
from .partition import Partition, partitions_of
from .qfield import Coef, ONE, ZERO, q, qbinom, qpoch, qpoch_at
from .symfunc import SymFunc


def _as_partition(nu) -> Partition:
    if isinstance(nu, Partition):
        return nu
    if isinstance(nu, int):
        return Partition((nu,)) if nu else Partition(())
    return Partition(tuple(nu))


# -- hook parameter bundle ------------------------------------------------------

@dataclass(frozen=True)
class HookParams:
    """Parameters (k, m, n) describing the hook nu = (m-k, 1^k) inside degree n.

    Requires 0 <= k, k + 1 <= m (so the hook has a positive first part) and
    m < n (the hook is strictly smaller than the operand degree).
    """

    k: int
    m: int
    n: int

    def __post_init__(self):
        if not (0 <= self.k and self.k + 1 <= self.m and self.m < self.n):
            raise ValueError(
                f"need 0 <= k, k+1 <= m, m < n; got k={self.k}, m={self.m}, n={self.n}"
            )

    @property
    def nu(self) -> Partition:
        return Partition((self.m - self.k,) + (1,) * self.k)


# -- Delta operators ------------------------------------------------------------

def delta_prime_t0(f: SymFunc, n: int) -> SymFunc:
    """Image of e_n under the primed Delta operator for f, with t set to 0.

    Expands e_n over the t=0 modified Macdonald functions and multiplies each
    by the eigenvalue of f at the alphabet q + q^2 + ... + q^(l-1), where l is
    the length of the indexing partition.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    total = sf.zero()
    for mu in partitions_of(n):
        wts = hl.t0_specializations(mu)
        eig = sf.apply_transform(f, sf.eval_geometric_shifted(len(mu)))
        if eig == ZERO:
            continue
        coeff = eig * (ONE - q) * wts.pi_prime * wts.b / wts.w
        total = total + hl.modified_macdonald_t0(mu).scale(coeff)
    return total


def delta_full(f: SymFunc, n: int, prime: bool = True) -> SymFunc:
    """Image of e_n under the (primed or plain) Delta operator for f over Q(q,t).

    Expands e_n over the two-parameter modified Macdonald functions; the
    eigenvalue of f is its evaluation at the cell alphabet
    sum q^(col) t^(row), minus 1 for the primed variant.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    total = sf.zero()
    one = qfield.ONE
    for mu in partitions_of(n):
        wts = hl.macdonald_weights(mu)
        cells = tuple(mu.cells())

        def pk_image(k, _cells=cells):
            val = ZERO
            for (i, j) in _cells:
                val = val + q ** (k * j) * qfield.t ** (k * i)
            return val - one if prime else val

        eig = sf.apply_transform(f, sf.AlphabetTransform("evaluate", pk_image))
        if eig == ZERO:
            continue
        coeff = eig * (ONE - q) * (ONE - qfield.t) * wts.pi_prime * wts.b / wts.w
        total = total + hl.modified_macdonald_full(mu).scale(coeff)
    return total


def lhs_nu(nu, n: int) -> SymFunc:
    """omega of the primed-Delta image of e_n for s_nu at t=0, restricted to X(1-q)."""
    nu = _as_partition(nu)
    image = delta_prime_t0(sf.s(nu), n)
    return sf.apply_transform(sf.omega(image), sf.scale_one_minus_qpow(1))


# -- hook-indexed closed forms ---------------------------------------------------

def lhs_hook_closed(params: HookParams) -> SymFunc:
    """Closed Hall-Littlewood expansion of lhs_nu for hook nu = (m-k, 1^k)."""
    k, m, n = params.k, params.m, params.n
    pref = q ** (m + comb(k + 1, 2))
    total = sf.zero()
    for mu in partitions_of(n):
        ell = len(mu)
        c = qbinom(m - 1, k) * qbinom(m + ell - (k + 2), m)
        if c == ZERO:
            continue
        c = c * qpoch(ell) * q ** (-mu.nstat())
        total = total + hl.hl_P(mu, inverse_q=True).scale(pref * c)
    return total


def rhs_hook(params: HookParams) -> SymFunc:
    """Length-graded Hall-Littlewood expansion of the same hook image."""
    k, m, n = params.k, params.m, params.n
    total = sf.zero()
    for j in range(k + 2, m + 2):
        c = (
            q ** (m + comb(k + 2, 2) - (k + 2) * j + 1)
            * qbinom(j - 2, k)
            * qbinom(m - 1, j - 2)
            * qpoch(j)
        )
        if c == ZERO:
            continue
        grade = sf.zero()
        for mu in partitions_of(n, length=j):
            grade = grade + hl.hl_P(mu).scale(q ** mu.nstat())
        total = total + grade.scale(c)
    return total


def remmel_coeff(s: int, params: HookParams) -> Coef:
    """Coefficient of the kernel h_n[X(1-q^s)]/(1-q^s) in the hook image."""
    k, m = params.k, params.m
    if not (1 <= s <= m + 1):
        return ZERO
    sign = -ONE if (m + 1 - s) % 2 else ONE
    expo = comb(m + 1 - s, 2) - (k + 1) * m + comb(k + 1, 2)
    return (
        sign
        * q**expo
        * qbinom(m - 1, k)
        * qbinom(k + 2, m + 1 - s)
        * (ONE - q**s)
    )


def hook_kernel(n: int, u) -> SymFunc:
    """h_n[X(1-u)]/(1-u) = sum_r (-u)^r s_(n-r,1^r); support is exactly the hooks."""
    u = qfield.coef(u)
    return sf.hn_times_one_minus_u(n, u).scale(ONE / (ONE - u))


def remmel_sum(params: HookParams) -> SymFunc:
    """Kernel expansion sum_s remmel_coeff(s) * h_n[X(1-q^s)]/(1-q^s)."""
    total = sf.zero()
    for s in range(1, params.m + 2):
        c = remmel_coeff(s, params)
        if c == ZERO:
            continue
        total = total + hook_kernel(params.n, q**s).scale(c)
    return total


# -- scalar q-binomial identities -------------------------------------------------

def prop31(k: int, m: int, ell: int) -> tuple[Coef, Coef]:
    """Alternating-sum evaluation (valid for k+2 <= ell <= m+1); returns (lhs, rhs)."""
    lhs = ZERO
    for i in range(0, min(k + 2, m + 1 - ell) + 1):
        sign = -ONE if i % 2 else ONE
        lhs = lhs + sign * q ** comb(i, 2) * qbinom(k + 2, i) * qbinom(m + 1 - i, ell)
    rhs = q ** ((k + 2) * (m + 1 - ell)) * qbinom(m - k - 1, ell - 2 - k)
    return lhs, rhs


def cor32(k: int, m: int, ell: int) -> tuple[Coef, Coef]:
    """Companion alternating-sum evaluation; returns (lhs, rhs)."""
    lhs = ZERO
    for i in range(0, min(k + 2, m) + 1):
        sign = -ONE if i % 2 else ONE
        lhs = lhs + sign * q ** comb(i, 2) * qbinom(k + 2, i) * qbinom(m + ell - i, ell)
    rhs = q ** ((k + 2) * m) * qbinom(m + ell - (k + 2), ell - (k + 2))
    return lhs, rhs


def prop33a(params: HookParams, j: int) -> tuple[Coef, Coef]:
    """Pochhammer moment of the kernel coefficients against (q^(s-j+1);q)_(j-1).

    Returns (lhs, rhs); the rhs is the length-j coefficient of rhs_hook.
    """
    k, m = params.k, params.m
    lhs = ZERO
    for s in range(1, m + 2):
        lhs = lhs + remmel_coeff(s, params) * qpoch_at(s - j + 1, j - 1)
    rhs = (
        q ** (m + comb(k + 2, 2) - (k + 2) * j + 1)
        * qbinom(j - 2, k)
        * qbinom(m - 1, j - 2)
        * qpoch(j)
    )
    return lhs, rhs


def prop33b(params: HookParams, ell: int) -> tuple[Coef, Coef]:
    """Pochhammer moment of the kernel coefficients against (q^(s+1);q)_(ell-1).

    Returns (lhs, rhs); the rhs is the length-ell coefficient of lhs_hook_closed.
    """
    k, m = params.k, params.m
    lhs = ZERO
    for s in range(1, m + 2):
        lhs = lhs + remmel_coeff(s, params) * qpoch_at(s + 1, ell - 1)
    rhs = (
        q ** (m + comb(k + 1, 2))
        * qbinom(m - 1, k)
        * qbinom(m + ell - (k + 2), m)
        * qpoch(ell)
    )
    return lhs, rhs


# -- shifted Cauchy kernels --------------------------------------------------------

def shifted_cauchy(n: int, i: int, variant: str = "direct") -> SymFunc:
    """Length-graded Hall-Littlewood expansion of h_n[X(1-q^i)]/(1-q^i).

    variant "direct":  sum_mu q^(n(mu))  (q^(i-l+1);q)_(l-1) P_mu[X;q]
    variant "inverse": sum_mu q^(-n(mu)) (q^(i+1);q)_(l-1)   P_mu[X;1/q]
    """
    if variant not in ("direct", "inverse"):
        raise ValueError(f"unknown variant {variant!r}")
    total = sf.zero()
    for mu in partitions_of(n):
        ell = len(mu)
        if variant == "direct":
            c = q ** mu.nstat() * qpoch_at(i - ell + 1, ell - 1)
            base = hl.hl_P(mu)
        else:
            c = q ** (-mu.nstat()) * qpoch_at(i + 1, ell - 1)
            base = hl.hl_P(mu, inverse_q=True)
        if c == ZERO:
            continue
        total = total + base.scale(c)
    return total


def shifted_cauchy_target(n: int, i: int) -> SymFunc:
    """The kernel h_n[X(1-q^i)]/(1-q^i) both variants must reproduce."""
    return hook_kernel(n, q**i)


def ghry_sides(n: int, k: int) -> tuple[SymFunc, SymFunc]:
    """Two expansions of the same length-k Hall-Littlewood aggregate.

    left:  sum_mu q^(-n(mu)) [l(mu)-1 choose k-1]_q (q;q)_(l(mu)) P_mu[X;1/q]
    right: q^(-k(k-1)) (q;q)_k sum_{l(mu)=k} q^(n(mu)) P_mu[X;q]
    """
    left = sf.zero()
    for mu in partitions_of(n):
        ell = len(mu)
        c = qbinom(ell - 1, k - 1)
        if c == ZERO:
            continue
        c = c * q ** (-mu.nstat()) * qpoch(ell)
        left = left + hl.hl_P(mu, inverse_q=True).scale(c)
    right = sf.zero()
    for mu in partitions_of(n, length=k):
        right = right + hl.hl_P(mu).scale(q ** mu.nstat())
    right = right.scale(q ** (-k * (k - 1)) * qpoch(k))
    return left, right


# -- general-nu expansions ----------------------------------------------------------

def lhs_expansion_thm41(nu, n: int) -> SymFunc:
    """Eigenvalue-weighted inverse-q Hall-Littlewood expansion of lhs_nu.

    q^|nu| * sum_mu s_nu[1 + q + ... + q^(l(mu)-2)] q^(-n(mu)) (q;q)_(l(mu)) P_mu[X;1/q].
    """
    nu = _as_partition(nu)
    snu = sf.s(nu)
    total = sf.zero()
    for mu in partitions_of(n):
        ell = len(mu)
        eig = sf.apply_transform(snu, sf.eval_geometric(ell - 1))
        if eig == ZERO:
            continue
        c = eig * q ** (-mu.nstat()) * qpoch(ell)
        total = total + hl.hl_P(mu, inverse_q=True).scale(c)
    return total.scale(q ** nu.size)


def schur_principal_eval(nu, j: int) -> tuple[Coef, Coef]:
    """Principal evaluation s_nu[1 + q + ... + q^(j-2)] two ways; returns (direct, graded).

    direct: evaluate p_k -> (1 - q^(k(j-1)))/(1 - q^k) on the power-sum expansion.
    graded: sum over lengths k of the charge-graded length-k content of s_nu,
            each paired with the Pochhammer (q^(j-k);q)_k.
    """
    nu = _as_partition(nu)
    direct = sf.apply_transform(sf.s(nu), sf.eval_geometric(j - 1))
    graded = ZERO
    for k in range(len(nu), nu.size + 1):
        inner = ZERO
        for rho in partitions_of(nu.size, length=k):
            c = hl.kostka_foulkes(nu, rho)
            if c == ZERO:
                continue
            denom = ONE
            for mult in rho.multiplicities().values():
                denom = denom * qpoch(mult)
            inner = inner + c * q ** rho.nstat() / denom
        graded = graded + inner * qpoch_at(j - k, k)
    return direct, graded


def rhs_nu(nu, n: int) -> SymFunc:
    """Length-graded direct-q Hall-Littlewood expansion matching lhs_nu.

    q^|nu| * sum_k (q;q)_k [charge-graded length-k content of s_nu]
           * q^(-k(k+1)) (q;q)_(k+1) sum_{l(mu)=k+1} q^(n(mu)) P_mu[X;q].
    """
    nu = _as_partition(nu)
    total = sf.zero()
    for k in range(len(nu), nu.size + 1):
        inner = ZERO
        for rho in partitions_of(nu.size, length=k):
            c = hl.kostka_foulkes(nu, rho)
            if c == ZERO:
                continue
            denom = ONE
            for mult in rho.multiplicities().values():
                denom = denom * qpoch(mult)
            inner = inner + c * q ** rho.nstat() / denom
        if inner == ZERO:
            continue
        grade = sf.zero()
        for mu in partitions_of(n, length=k + 1):
            grade = grade + hl.hl_P(mu).scale(q ** mu.nstat())
        coeff = qpoch(k) * inner * q ** (-k * (k + 1)) * qpoch(k + 1)
        total = total + grade.scale(coeff)
    return total.scale(q ** nu.size)


# -- span of plain-Delta images ------------------------------------------------------

@dataclass(frozen=True)
class SpanReport:
    """Exact rank of span{ Delta_{s_nu} e_n : 1 <= |nu| <= nu_size_max }."""

    n: int
    nu_count: int
    rank: int
    dim: int  # number of partitions of n, the ambient dimension


def span_dimension_report(n: int, nu_size_max: int | None = None) -> SpanReport:
    """Gaussian-eliminate the plain-Delta images of e_n over Q(q,t).

    Stops feeding new images once the span is already full, so nu_count then
    reports how many images were examined, not the whole sweep size.
    """
    if nu_size_max is None:
        nu_size_max = n
    basis = list(partitions_of(n))
    index = {lam: i for i, lam in enumerate(basis)}
    pivots: dict[int, list[Coef]] = {}
    count = 0
    for size in range(1, nu_size_max + 1):
        if len(pivots) == len(basis):
            break
        for nu in partitions_of(size):
            if len(pivots) == len(basis):
                break
            count += 1
            image = delta_full(sf.s(nu), n, prime=False)
            vec = [ZERO] * len(basis)
            for lam, c in image.terms.items():
                vec[index[lam]] = c
            for col in range(len(basis)):
                if vec[col] == ZERO:
                    continue
                if col in pivots:
                    ratio = vec[col]
                    row = pivots[col]
                    for jj in range(col, len(basis)):
                        vec[jj] = vec[jj] - ratio * row[jj]
                else:
                    inv = ONE / vec[col]
                    pivots[col] = [v * inv for v in vec]
                    break
    return SpanReport(n=n, nu_count=count, rank=len(pivots), dim=len(basis))
