"""Exact arithmetic in Q(q,t), plus q-Pochhammer and q-binomial primitives.

Coefficients throughout the package are elements of the fraction field of
ZZ[q,t] with graded-lex monomial order.  sympy keeps every element in the
canonical form this package relies on: numerator and denominator coprime,
integer coefficients with no common content, denominator leading coefficient
positive.  Equality of coefficients is therefore plain ``==``.
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.fields import field as _make_field
from sympy.polys.orderings import grlex

FIELD, q, t = _make_field("q,t", ZZ, grlex)

#: element type of Q(q,t); used in annotations
Coef = type(q)

ZERO = FIELD.zero
ONE = FIELD.one


class PoleError(ZeroDivisionError):
    """Substitution made a denominator vanish identically."""


def coef(value) -> Coef:
    """Coerce an int, Fraction, or field element into Q(q,t)."""
    if isinstance(value, Coef):
        return value
    if isinstance(value, int):
        return FIELD(value)
    if isinstance(value, Fraction):
        return FIELD(value.numerator) / FIELD(value.denominator)
    raise TypeError(f"cannot coerce {type(value).__name__} into Q(q,t)")


def qpow(e: int) -> Coef:
    """q**e for any integer e, negative exponents included."""
    return q**e


@lru_cache(maxsize=None)
def qpoch_at(s: int, m: int) -> Coef:
    """(q^s; q)_m = prod_{j=0}^{m-1} (1 - q^(s+j)).  m < 0 is rejected."""
    if m < 0:
        raise ValueError("Pochhammer length must be nonnegative")
    if m == 0:
        return ONE
    return qpoch_at(s, m - 1) * (ONE - q ** (s + m - 1))


def qpoch(m: int) -> Coef:
    """(q; q)_m."""
    return qpoch_at(1, m)


@lru_cache(maxsize=None)
def qbinom(a: int, b: int) -> Coef:
    """Gaussian binomial [a, b]_q; zero outside 0 <= b <= a.

    Always a polynomial in q (the field normalization cancels the
    Pochhammer denominator exactly).
    """
    if b < 0 or b > a:
        return ZERO
    return qpoch(a) / (qpoch(b) * qpoch(a - b))


def qbinom_hook(n: int, shape) -> Coef:
    """Cell product prod_{x in shape} (1 - q^(n - content(x))) / (1 - q^(hook(x))).

    ``shape`` is any weakly decreasing tuple of positive parts.
    """
    from .partition import Partition

    lam = Partition(shape)
    out = ONE
    for cell in lam.cell_stats():
        den = ONE - q**cell.hook
        if not den:
            raise ZeroDivisionError(f"zero hook factor for n={n}, shape={lam}")
        out *= (ONE - q ** (n - cell.content)) / den
    return out


def _eval_poly(poly, q_val: Coef, t_val: Coef) -> Coef:
    powers_q: dict[int, Coef] = {}
    powers_t: dict[int, Coef] = {}
    total = ZERO
    for (eq_, et_), c in poly.terms():
        pq = powers_q.get(eq_)
        if pq is None:
            pq = powers_q[eq_] = ONE if eq_ == 0 else q_val**eq_
        pt = powers_t.get(et_)
        if pt is None:
            pt = powers_t[et_] = ONE if et_ == 0 else t_val**et_
        total += int(c) * pq * pt
    return total


def subs(f: Coef, q_image=None, t_image=None) -> Coef:
    """Substitute field elements (or ints) for q and/or t in f.

    Raises PoleError when the denominator of f vanishes identically under
    the substitution.
    """
    q_val = q if q_image is None else coef(q_image)
    t_val = t if t_image is None else coef(t_image)
    den = _eval_poly(f.denom, q_val, t_val)
    if not den:
        raise PoleError(f"substitution hits a pole of {render(f)}")
    return _eval_poly(f.numer, q_val, t_val) / den


def neg_shift_poch_identity_check(n: int, m: int) -> bool:
    """Check (q^-n; q)_m = q^(m(m-2n-1)/2) (-1)^m (q^(n-m+1); q)_m exactly."""
    lhs = qpoch_at(-n, m)
    rhs = q ** (m * (m - 2 * n - 1) // 2) * (-1) ** m * qpoch_at(n - m + 1, m)
    return lhs == rhs


# -- rendering and parsing ---------------------------------------------------

def _monomial_str(eq_: int, et_: int, c: int) -> str:
    factors = []
    if abs(c) != 1 or (eq_ == 0 and et_ == 0):
        factors.append(str(abs(c)))
    if eq_:
        factors.append("q" if eq_ == 1 else f"q^{eq_}")
    if et_:
        factors.append("t" if et_ == 1 else f"t^{et_}")
    return "*".join(factors)


def _poly_str(poly) -> str:
    terms = poly.terms()
    if not terms:
        return "0"
    pieces = []
    for (eq_, et_), c in terms:
        c = int(c)
        text = _monomial_str(eq_, et_, c)
        if not pieces:
            pieces.append(text if c > 0 else f"-{text}")
        else:
            pieces.append(f" + {text}" if c > 0 else f" - {text}")
    return "".join(pieces)


def _is_bare_term(poly) -> bool:
    terms = poly.terms()
    return len(terms) == 1 and int(terms[0][1]) > 0


def render(f: Coef) -> str:
    """Canonical string form, e.g. '(q^3 - q^2 + 1)/(q - 1)'."""
    num = _poly_str(f.numer)
    if f.denom == FIELD.ring.one:
        return num
    if not _is_bare_term(f.numer):
        num = f"({num})"
    den = _poly_str(f.denom)
    if not _is_bare_term(f.denom):
        den = f"({den})"
    return f"{num}/{den}"


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def _eval_node(node) -> Coef:
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, int):
            return FIELD(node.value)
        raise ValueError(f"non-integer literal {node.value!r}")
    if isinstance(node, ast.Name):
        if node.id == "q":
            return q
        if node.id == "t":
            return t
        raise ValueError(f"unknown symbol {node.id!r}")
    if isinstance(node, ast.UnaryOp):
        val = _eval_node(node.operand)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
        raise ValueError("unsupported unary operator")
    if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
        left = _eval_node(node.left)
        right = _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right:
                raise PoleError("division by zero in coefficient expression")
            return left / right
        # Pow: exponent must reduce to an integer constant
        terms = right.numer.terms()
        if right.denom == FIELD.ring.one and (not terms or terms[0][0] == (0, 0)):
            exp = int(terms[0][1]) if terms else 0
            return left**exp
        raise ValueError("exponent must be an integer")
    raise ValueError(f"unsupported syntax in coefficient expression: {ast.dump(node)}")


def parse(text: str) -> Coef:
    """Parse the grammar emitted by render(): +, -, *, /, ^ over q, t, integers."""
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse coefficient {text!r}") from exc
    return _eval_node(tree)
