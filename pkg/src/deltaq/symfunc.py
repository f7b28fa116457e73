"""Symmetric functions over Q(q,t).

Internally everything is stored in the Schur basis as a sparse map
{Partition: Coef}, one homogeneous degree per function.  The classical bases
m, e, h, p, s convert in and out through two cached matrix families: power
sums via Murnaghan-Nakayama characters, monomials via Kostka numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from . import qfield
from .partition import Partition, parse_partition, partitions_of
from .tableaux import kostka_number

Coef = qfield.Coef

BASES = ("m", "e", "h", "p", "s")

DEGREE_LIMIT = 10


class DegreeLimitError(ValueError):
    """Product degree exceeded the working-degree guard."""


def set_degree_limit(n: int) -> None:
    global DEGREE_LIMIT
    DEGREE_LIMIT = n


# -- symmetric group characters ----------------------------------------------

def _beta_numbers(lam: Partition) -> tuple[int, ...]:
    length = len(lam)
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _partition_from_beta(beta: tuple[int, ...]) -> Partition:
    length = len(beta)
    return Partition(p for i, b in enumerate(beta) if (p := b - (length - 1 - i)) > 0)


@lru_cache(maxsize=None)
def character(lam: Partition, rho: Partition) -> int:
    """Irreducible character chi^lam on the class rho, by border-strip recursion.

    Border strips of size r correspond to beta numbers b with b - r >= 0 not
    already a beta number; the sign is (-1)^(number of beta numbers jumped).
    """
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError("character needs |lam| = |rho|")
    if not rho:
        return 1
    r = rho[0]
    rest = Partition(rho[1:])
    beta = set(_beta_numbers(lam))
    total = 0
    for b in beta:
        c = b - r
        if c >= 0 and c not in beta:
            height = sum(1 for x in beta if c < x < b)
            new_beta = tuple(sorted((beta - {b}) | {c}, reverse=True))
            total += (-1) ** height * character(_partition_from_beta(new_beta), rest)
    return total


@lru_cache(maxsize=None)
def zee(rho: Partition) -> int:
    """Centralizer order prod_i i^(m_i) m_i!."""
    out = 1
    for part, mult in Partition(rho).multiplicities().items():
        out *= part**mult * factorial(mult)
    return out


# -- the SymFunc container ----------------------------------------------------

class SymFunc:
    """Homogeneous symmetric function, Schur-basis sparse map."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data: dict[Partition, Coef] = {}
        degree = None
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            c = qfield.coef(c)
            if not c:
                continue
            if degree is None:
                degree = lam.size
            elif lam.size != degree:
                raise ValueError("mixed degrees in one symmetric function")
            data[lam] = c
        self.terms = data

    def degree(self) -> int | None:
        return next(iter(self.terms)).size if self.terms else None

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, lam) -> Coef:
        return self.terms.get(Partition(lam), qfield.ZERO)

    def support(self) -> list[Partition]:
        return sorted(self.terms, reverse=True)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __add__(self, other: "SymFunc") -> "SymFunc":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            val = out.get(lam, qfield.ZERO) + c
            if val:
                out[lam] = val
            else:
                out.pop(lam, None)
        return SymFunc(out)

    def __neg__(self) -> "SymFunc":
        return SymFunc({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def scale(self, c) -> "SymFunc":
        c = qfield.coef(c)
        return SymFunc({lam: c * v for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return render(self)


def zero() -> SymFunc:
    return SymFunc()


def one() -> SymFunc:
    return SymFunc({Partition(): qfield.ONE})


def _as_partition(x) -> Partition:
    if isinstance(x, int):
        return Partition(() if x == 0 else (x,))
    return Partition(x)


# -- basis conversion machinery ------------------------------------------------

def _merge(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def _power_to_schur(rho: Partition) -> dict[Partition, Coef]:
    """p_rho = sum_lam chi^lam(rho) s_lam."""
    out = {}
    for lam in partitions_of(Partition(rho).size):
        chi = character(lam, rho)
        if chi:
            out[lam] = qfield.coef(chi)
    return out


@lru_cache(maxsize=None)
def _schur_to_power(lam: Partition) -> dict[Partition, Coef]:
    """s_lam = sum_rho chi^lam(rho)/z_rho p_rho."""
    out = {}
    for rho in partitions_of(Partition(lam).size):
        chi = character(lam, rho)
        if chi:
            out[rho] = qfield.coef(Fraction(chi, zee(rho)))
    return out


@lru_cache(maxsize=None)
def _h_single_to_power(n: int) -> dict[Partition, Coef]:
    return {rho: qfield.coef(Fraction(1, zee(rho))) for rho in partitions_of(n)}


@lru_cache(maxsize=None)
def _e_single_to_power(n: int) -> dict[Partition, Coef]:
    return {
        rho: qfield.coef(Fraction((-1) ** (n - len(rho)), zee(rho)))
        for rho in partitions_of(n)
    }


def _convolve_powers(parts, single: Callable[[int], dict]) -> dict[Partition, Coef]:
    out = {Partition(): qfield.ONE}
    for part in parts:
        nxt: dict[Partition, Coef] = {}
        for rho, c in out.items():
            for sigma, d in single(part).items():
                key = _merge(rho, sigma)
                nxt[key] = nxt.get(key, qfield.ZERO) + c * d
        out = nxt
    return out


@lru_cache(maxsize=None)
def _h_lambda_to_schur(lam: Partition) -> dict[Partition, Coef]:
    out: dict[Partition, Coef] = {}
    for rho, c in _convolve_powers(Partition(lam), _h_single_to_power).items():
        for mu, chi in _power_to_schur(rho).items():
            val = out.get(mu, qfield.ZERO) + c * chi
            if val:
                out[mu] = val
            else:
                out.pop(mu, None)
    return out


@lru_cache(maxsize=None)
def _inverse_kostka(n: int) -> dict[Partition, dict[Partition, int]]:
    """Schur expansions of the monomial basis: m_mu = sum_lam c[mu][lam] s_lam.

    The Kostka matrix is unitriangular for the lex-descending order (which
    refines dominance), so back substitution suffices.
    """
    order = partitions_of(n)
    out: dict[Partition, dict[Partition, int]] = {}
    for j in range(len(order) - 1, -1, -1):
        mu = order[j]
        expansion = {mu: 1}
        for k in range(j + 1, len(order)):
            kn = kostka_number(mu, order[k])
            if kn:
                for lam, c in out[order[k]].items():
                    val = expansion.get(lam, 0) - kn * c
                    if val:
                        expansion[lam] = val
                    else:
                        expansion.pop(lam, None)
        out[mu] = expansion
    return out


@lru_cache(maxsize=None)
def _basis_elem_to_schur(basis: str, lam: Partition) -> dict[Partition, Coef]:
    lam = Partition(lam)
    if basis == "s":
        return {lam: qfield.ONE}
    if basis == "p":
        return _power_to_schur(lam)
    if basis == "h":
        return _h_lambda_to_schur(lam)
    if basis == "e":
        return {mu.conjugate(): c for mu, c in _h_lambda_to_schur(lam).items()}
    if basis == "m":
        return {mu: qfield.coef(c) for mu, c in _inverse_kostka(lam.size)[lam].items()}
    raise ValueError(f"unknown basis {basis!r}")


def sym(basis: str, terms) -> SymFunc:
    """Build a SymFunc from an expansion in any of the bases m, e, h, p, s."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    out: dict[Partition, Coef] = {}
    for lam, c in dict(terms).items():
        c = qfield.coef(c)
        if not c:
            continue
        for mu, base_c in _basis_elem_to_schur(basis, _as_partition(lam)).items():
            val = out.get(mu, qfield.ZERO) + c * base_c
            if val:
                out[mu] = val
            else:
                out.pop(mu, None)
    return SymFunc(out)


def s(lam) -> SymFunc:
    return sym("s", {_as_partition(lam): 1})


def e(lam) -> SymFunc:
    return sym("e", {_as_partition(lam): 1})


def h(lam) -> SymFunc:
    return sym("h", {_as_partition(lam): 1})


def p(lam) -> SymFunc:
    return sym("p", {_as_partition(lam): 1})


def m(lam) -> SymFunc:
    return sym("m", {_as_partition(lam): 1})


def _from_power(power_terms: dict[Partition, Coef]) -> SymFunc:
    out: dict[Partition, Coef] = {}
    for rho, c in power_terms.items():
        if not c:
            continue
        for lam, chi in _power_to_schur(rho).items():
            val = out.get(lam, qfield.ZERO) + c * chi
            if val:
                out[lam] = val
            else:
                out.pop(lam, None)
    return SymFunc(out)


def basis_convert(f: SymFunc, basis: str) -> dict[Partition, Coef]:
    """Expansion of f in the target basis, as {Partition: Coef} with zeros dropped."""
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    if basis == "s":
        return dict(f.terms)
    if f.is_zero():
        return {}
    if basis == "p":
        out: dict[Partition, Coef] = {}
        for lam, c in f.terms.items():
            for rho, w in _schur_to_power(lam).items():
                val = out.get(rho, qfield.ZERO) + c * w
                if val:
                    out[rho] = val
                else:
                    out.pop(rho, None)
        return out
    if basis == "m":
        out = {}
        for lam, c in f.terms.items():
            for mu in partitions_of(lam.size):
                kn = kostka_number(lam, mu)
                if kn:
                    val = out.get(mu, qfield.ZERO) + c * kn
                    if val:
                        out[mu] = val
                    else:
                        out.pop(mu, None)
        return out
    if basis == "e":
        return basis_convert(omega(f), "h")
    # basis == "h": unitriangular solve against the Kostka matrix
    order = partitions_of(f.degree())
    coeffs: dict[Partition, Coef] = {}
    for i in range(len(order) - 1, -1, -1):
        lam = order[i]
        val = f.terms.get(lam, qfield.ZERO)
        for j in range(i + 1, len(order)):
            c_j = coeffs.get(order[j])
            if c_j is not None:
                kn = kostka_number(lam, order[j])
                if kn:
                    val -= kn * c_j
        if val:
            coeffs[lam] = val
    return coeffs


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product via the power-sum basis, guarded by the working-degree limit."""
    if f.is_zero() or g.is_zero():
        return SymFunc()
    total = f.degree() + g.degree()
    if total > DEGREE_LIMIT:
        raise DegreeLimitError(
            f"product degree {total} exceeds working-degree limit {DEGREE_LIMIT}"
        )
    fp = basis_convert(f, "p")
    gp = basis_convert(g, "p")
    prod: dict[Partition, Coef] = {}
    for rho, c in fp.items():
        for sigma, d in gp.items():
            key = _merge(rho, sigma)
            prod[key] = prod.get(key, qfield.ZERO) + c * d
    return _from_power(prod)


def omega(f: SymFunc) -> SymFunc:
    """Standard involution: s_lam -> s_(lam') ."""
    return SymFunc({lam.conjugate(): c for lam, c in f.terms.items()})


def subs_coeffs(f: SymFunc, q_image=None, t_image=None) -> SymFunc:
    """Apply a q/t substitution to every coefficient."""
    return SymFunc(
        {lam: qfield.subs(c, q_image=q_image, t_image=t_image) for lam, c in f.terms.items()}
    )


def hall_inner(f: SymFunc, g: SymFunc) -> Coef:
    """Hall inner product; Schur functions are orthonormal."""
    if f.is_zero() or g.is_zero() or f.degree() != g.degree():
        return qfield.ZERO
    total = qfield.ZERO
    for lam, c in f.terms.items():
        d = g.terms.get(lam)
        if d is not None:
            total += c * d
    return total


def is_hook_only(f: SymFunc) -> bool:
    return all(lam.is_hook() for lam in f.terms)


# -- alphabet transforms -------------------------------------------------------

@dataclass(frozen=True)
class AlphabetTransform:
    """Linear substitution on power sums.

    kind "scale": p_k -> pk_image(k) * p_k, result stays a SymFunc.
    kind "evaluate": p_k -> pk_image(k) as a scalar, result is a Coef.
    """

    kind: str
    pk_image: Callable[[int], Coef]
    label: str = ""

    def __post_init__(self):
        if self.kind not in ("scale", "evaluate"):
            raise ValueError(f"unknown transform kind {self.kind!r}")


def apply_transform(f: SymFunc, transform: AlphabetTransform):
    fp = basis_convert(f, "p")
    if transform.kind == "scale":
        out: dict[Partition, Coef] = {}
        for rho, c in fp.items():
            acc = c
            for part in rho:
                acc = acc * transform.pk_image(part)
            if acc:
                out[rho] = acc
        return _from_power(out)
    total = qfield.ZERO
    for rho, c in fp.items():
        acc = c
        for part in rho:
            acc = acc * transform.pk_image(part)
        total += acc
    return total


def scale_one_minus_qpow(i: int) -> AlphabetTransform:
    """X -> X(1 - q^i):  p_k -> (1 - q^(ik)) p_k."""
    return AlphabetTransform(
        "scale", lambda k: qfield.ONE - qfield.q ** (i * k), label=f"X(1-q^{i})"
    )


def scale_inv_one_minus_q() -> AlphabetTransform:
    """X -> X/(1 - q):  p_k -> p_k / (1 - q^k)."""
    return AlphabetTransform(
        "scale", lambda k: qfield.ONE / (qfield.ONE - qfield.q**k), label="X/(1-q)"
    )


def eval_geometric(num_letters: int) -> AlphabetTransform:
    """Evaluate at 1 + q + ... + q^(num_letters - 1)."""
    return AlphabetTransform(
        "evaluate",
        lambda k: sum(
            (qfield.q ** (i * k) for i in range(num_letters)), qfield.ZERO
        ),
        label=f"[{num_letters}]_q",
    )


def eval_geometric_shifted(num_letters: int) -> AlphabetTransform:
    """Evaluate at q + q^2 + ... + q^(num_letters - 1) (the geometric alphabet minus 1)."""
    return AlphabetTransform(
        "evaluate",
        lambda k: sum(
            (qfield.q ** (i * k) for i in range(1, num_letters)), qfield.ZERO
        ),
        label=f"[{num_letters}]_q - 1",
    )


def eval_one_minus_qpow(i: int) -> AlphabetTransform:
    """Evaluate at the formal alphabet 1 - q^i:  p_k -> 1 - q^(ik)."""
    return AlphabetTransform(
        "evaluate", lambda k: qfield.ONE - qfield.q ** (i * k), label=f"1-q^{i}"
    )


def hn_times_one_minus_u(n: int, u: Coef) -> SymFunc:
    """(1-u) * sum_{r=0}^{n-1} (-u)^r s_(n-r, 1^r), the hook expansion of h_n[X(1-u)]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    u = qfield.coef(u)
    terms = {}
    sign_pow = qfield.ONE
    for r in range(n):
        hook = Partition((n - r,) + (1,) * r)
        terms[hook] = (qfield.ONE - u) * sign_pow
        sign_pow = sign_pow * (-u)
    return SymFunc(terms)


# -- rendering and parsing -----------------------------------------------------

def render(f: SymFunc, basis: str = "s") -> str:
    """Canonical string such as 's[3,1]*(q + 1) + s[2,2]*(-q^2)'."""
    expansion = basis_convert(f, basis)
    if not expansion:
        return "0"
    pieces = [
        f"{basis}{lam.render()}*({qfield.render(expansion[lam])})"
        for lam in sorted(expansion, reverse=True)
    ]
    return " + ".join(pieces)


_TERM_RE = re.compile(r"([mehps])\s*(\[[^\]]*\])\s*\*\s*\((.*)\)", re.S)


def parse_symfunc(text: str) -> SymFunc:
    """Parse the grammar emitted by render(); mixed bases are allowed."""
    text = text.strip()
    if text == "0":
        return SymFunc()
    pieces = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            pieces.append("".join(current))
            current = []
        else:
            current.append(ch)
    pieces.append("".join(current))
    total = SymFunc()
    for piece in pieces:
        match = _TERM_RE.fullmatch(piece.strip())
        if not match:
            raise ValueError(f"cannot parse term {piece.strip()!r}")
        basis, lam_text, coef_text = match.groups()
        total = total + sym(
            basis, {parse_partition(lam_text): qfield.parse(coef_text)}
        )
    return total
