"""Hall-Littlewood P and Q, transformed Hall-Littlewood H, and modified Macdonald bases.

Kostka-Foulkes polynomials come from the charge statistic on semistandard
tableaux.  P expands through the unitriangular inverse of the Kostka-Foulkes
matrix against the Schur basis.  The two-parameter modified Macdonald
functions come from the inv/maj filling formula; their one-parameter
specialization used throughout the Delta-operator pipeline is the cocharge
variant built from Kostka-Foulkes at 1/q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy.utilities.iterables import multiset_permutations

from . import qfield, symfunc
from .partition import Partition, partitions_of
from .qfield import Coef, q, t, qpoch
from .symfunc import SymFunc
from .tableaux import charge, reading_word, ssyt

MACDONALD_FULL_LIMIT = 6


@lru_cache(maxsize=None)
def kostka_foulkes(lam: Partition, mu: Partition) -> Coef:
    """K_(lam,mu)(q) = sum of q^charge over SSYT of shape lam, content mu."""
    lam, mu = Partition(lam), Partition(mu)
    total = qfield.ZERO
    for tab in ssyt(lam, mu):
        total += q ** charge(reading_word(tab))
    return total


def kf_table(n: int) -> dict[tuple[Partition, Partition], Coef]:
    """All Kostka-Foulkes polynomials in degree n (zeros included)."""
    parts = partitions_of(n)
    return {(lam, mu): kostka_foulkes(lam, mu) for lam in parts for mu in parts}


@lru_cache(maxsize=None)
def _p_table(n: int) -> dict[Partition, SymFunc]:
    """Schur expansions of P_mu for mu |- n.

    s_nu = sum_rho K_(nu,rho)(q) P_rho with the Kostka-Foulkes matrix
    unitriangular in lex-descending order, so back substitution inverts it.
    """
    order = partitions_of(n)
    out: dict[Partition, SymFunc] = {}
    for j in range(len(order) - 1, -1, -1):
        mu = order[j]
        f = symfunc.s(mu)
        for k in range(j + 1, len(order)):
            c = kostka_foulkes(mu, order[k])
            if c:
                f = f - out[order[k]].scale(c)
        out[mu] = f
    return out


@lru_cache(maxsize=None)
def _p_table_invq(n: int) -> dict[Partition, SymFunc]:
    return {
        mu: symfunc.subs_coeffs(f, q_image=qfield.ONE / q)
        for mu, f in _p_table(n).items()
    }


def hl_P(mu, inverse_q: bool = False) -> SymFunc:
    """Hall-Littlewood P_mu in the Schur basis; with inverse_q, P_mu at q -> 1/q."""
    mu = Partition(mu)
    table = _p_table_invq(mu.size) if inverse_q else _p_table(mu.size)
    return table[mu]


def b_factor(mu) -> Coef:
    """prod_i (q;q)_(m_i(mu)), the P-to-Q normalization."""
    out = qfield.ONE
    for mult in Partition(mu).multiplicities().values():
        out *= qpoch(mult)
    return out


def hl_Q(mu, inverse_q: bool = False) -> SymFunc:
    """Q_mu = b_mu(q) P_mu; with inverse_q, everything at q -> 1/q."""
    mu = Partition(mu)
    if inverse_q:
        return hl_P(mu, inverse_q=True).scale(
            qfield.subs(b_factor(mu), q_image=qfield.ONE / q)
        )
    return hl_P(mu).scale(b_factor(mu))


@lru_cache(maxsize=None)
def transformed_H(rho) -> SymFunc:
    """Transformed Hall-Littlewood H_rho = Q_rho[X/(1-q)]."""
    return symfunc.apply_transform(hl_Q(Partition(rho)), symfunc.scale_inv_one_minus_q())


@lru_cache(maxsize=None)
def modified_macdonald_t0(mu) -> SymFunc:
    """One-parameter modified Macdonald function used by the t=0 Delta pipeline.

    Schur coefficients are q^nstat(mu) * K_(lam,mu)(1/q), the cocharge
    Kostka-Foulkes polynomials.
    """
    mu = Partition(mu)
    shift = q ** mu.nstat()
    terms = {}
    for lam in partitions_of(mu.size):
        kf = kostka_foulkes(lam, mu)
        if kf:
            terms[lam] = shift * qfield.subs(kf, q_image=qfield.ONE / q)
    return SymFunc(terms)


# -- specialized weights -------------------------------------------------------

@dataclass(frozen=True)
class T0Weights:
    """The scalar weights of the t=0 expansion of e_n over the modified basis."""

    b: Coef
    pi_prime: Coef
    w: Coef


def t0_specializations(mu) -> T0Weights:
    mu = Partition(mu)
    length = len(mu)
    b = sum((q**i for i in range(length)), qfield.ZERO)
    pi_prime = qpoch(length - 1)
    mult_exp = sum(m * (m + 1) // 2 for m in mu.multiplicities().values())
    w = (
        (-1) ** (mu.size - length)
        * q ** (2 * mu.nstat() + mu.size - mult_exp)
        * b_factor(mu)
    )
    return T0Weights(b=b, pi_prime=pi_prime, w=w)


def w_t0_cell_product(mu) -> Coef:
    """Cell-product form of the t=0 w-weight, for cross-checking the closed form."""
    out = qfield.ONE
    for cell in Partition(mu).cell_stats():
        out *= q**cell.leg
        if cell.arm == 0:
            out *= qfield.ONE - q ** (cell.leg + 1)
        else:
            out *= -(q ** (cell.leg + 1))
    return out


@dataclass(frozen=True)
class MacdonaldWeights:
    """Two-parameter weights of the expansion of e_n over the modified basis."""

    b: Coef
    pi_prime: Coef
    w: Coef


def macdonald_weights(mu) -> MacdonaldWeights:
    mu = Partition(mu)
    b = qfield.ZERO
    pi_prime = qfield.ONE
    for i, j in mu.cells():
        b += q**j * t**i
        if (i, j) != (0, 0):
            pi_prime *= qfield.ONE - q**j * t**i
    w = qfield.ONE
    for cell in mu.cell_stats():
        w *= (q**cell.arm - t ** (cell.leg + 1)) * (t**cell.leg - q ** (cell.arm + 1))
    return MacdonaldWeights(b=b, pi_prime=pi_prime, w=w)


# -- two-parameter modified Macdonald via fillings -------------------------------

@lru_cache(maxsize=None)
def _shape_geometry(mu: Partition):
    """Reading-order cells with the attack pairs and descent data of the shape.

    Rows are indexed French style, bottom row 0 the longest.  Reading order is
    top row first, left to right.  Cell u in row i attacks same-row cells to
    its right and cells strictly left of it in the row below.
    """
    parts = tuple(mu)
    conj = mu.conjugate()
    length = len(parts)
    cells = [(i, j) for i in range(length - 1, -1, -1) for j in range(parts[i])]
    pos = {c: idx for idx, c in enumerate(cells)}
    attack: list[tuple[int, int]] = []
    descent: list[tuple[int, int, int, int]] = []  # (pos_u, pos_south, leg+1, arm)
    for i, j in cells:
        for j2 in range(j + 1, parts[i]):
            attack.append((pos[(i, j)], pos[(i, j2)]))
        if i > 0:
            for j2 in range(j):
                attack.append((pos[(i, j)], pos[(i - 1, j2)]))
            leg = conj[j] - 1 - i
            arm = parts[i] - 1 - j
            descent.append((pos[(i, j)], pos[(i - 1, j)], leg + 1, arm))
    return tuple(attack), tuple(descent)


def _filling_stats(values, attack, descent) -> tuple[int, int]:
    inv = 0
    for a, b in attack:
        if values[a] > values[b]:
            inv += 1
    maj = 0
    for u, south, wt, arm in descent:
        if values[u] > values[south]:
            maj += wt
            inv -= arm
    return inv, maj


@lru_cache(maxsize=None)
def modified_macdonald_full(mu, limit: int = MACDONALD_FULL_LIMIT) -> SymFunc:
    """Two-parameter modified Macdonald function by the inv/maj filling formula.

    Monomial coefficients aggregate over all fillings with partition content;
    symmetry of the result makes those determine the whole function.
    """
    mu = Partition(mu)
    n = mu.size
    if n > limit:
        raise ValueError(f"filling enumeration limited to size {limit}, got {n}")
    attack, descent = _shape_geometry(mu)
    mono: dict[Partition, Coef] = {}
    for lam in partitions_of(n):
        multiset = [v + 1 for v, count in enumerate(lam) for _ in range(count)]
        agg: dict[tuple[int, int], int] = {}
        for values in multiset_permutations(multiset):
            key = _filling_stats(values, attack, descent)
            agg[key] = agg.get(key, 0) + 1
        total = qfield.ZERO
        for (inv, maj), count in agg.items():
            total += count * q**inv * t**maj
        mono[lam] = total
    return symfunc.sym("m", mono)
