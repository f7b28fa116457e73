"""Identity registry, suite runner, and JSONL reporting.

Every checkable identity in the package is registered here under a stable id.
A checker receives a plain parameter dict, computes both sides exactly, and
returns an :class:`IdentityReport` whose renders round-trip through the
``symfunc`` grammar (scalar identities are wrapped as degree-0 expansions
``s[]*(coef)`` for that reason).

``run_suite`` drives whole families with their default parameter sweeps;
the CLI wraps it.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, asdict
from typing import Callable, Iterable, Iterator

from . import delta_ops as do
from . import hall_littlewood as hl
from . import parking as pk
from . import qfield
from . import symfunc as sf
from .partition import Partition, partitions_of
from .qfield import ZERO, q, t
from .symfunc import SymFunc


# -- reports -----------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    params: dict
    status: str  # "equal" | "mismatch" | "skipped"
    lhs_render: str
    rhs_render: str
    witness: str
    elapsed_ms: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _sym_witness(lhs: SymFunc, rhs: SymFunc) -> str:
    """First Schur component (in render order) where the two sides differ."""
    for lam in sorted(set(lhs.terms) | set(rhs.terms), reverse=True):
        a = lhs.terms.get(lam, ZERO)
        b = rhs.terms.get(lam, ZERO)
        if a != b:
            return (
                f"first differing component s{lam.render()}: "
                f"lhs ({qfield.render(a)}) vs rhs ({qfield.render(b)})"
            )
    return ""


def _scalar_sym(c) -> SymFunc:
    return sf.one().scale(qfield.coef(c))


def _finish(identity_id: str, params: dict, lhs: SymFunc, rhs: SymFunc,
            started: float, extra_witness: str = "") -> IdentityReport:
    status = "equal" if lhs == rhs else "mismatch"
    witness = "" if status == "equal" else _sym_witness(lhs, rhs)
    if extra_witness:
        status = "mismatch"
        witness = (witness + "; " if witness else "") + extra_witness
    return IdentityReport(
        identity_id=identity_id,
        params=params,
        status=status,
        lhs_render=sf.render(lhs),
        rhs_render=sf.render(rhs),
        witness=witness,
        elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
    )


def _skip(identity_id: str, params: dict, reason: str, started: float) -> IdentityReport:
    return IdentityReport(
        identity_id=identity_id,
        params=params,
        status="skipped",
        lhs_render="",
        rhs_render="",
        witness=reason,
        elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
    )


# -- individual checkers --------------------------------------------------------------

def _hook_params(params: dict) -> do.HookParams:
    return do.HookParams(k=int(params["k"]), m=int(params["m"]), n=int(params["n"]))


def check_prop31(params: dict) -> IdentityReport:
    started = time.perf_counter()
    k, m, ell = int(params["k"]), int(params["m"]), int(params["ell"])
    if not (k + 2 <= ell <= m + 1):
        return _skip("prop31", params, f"hypothesis k+2 <= ell <= m+1 fails", started)
    lhs, rhs = do.prop31(k, m, ell)
    return _finish("prop31", params, _scalar_sym(lhs), _scalar_sym(rhs), started)


def check_cor32(params: dict) -> IdentityReport:
    started = time.perf_counter()
    k, m, ell = int(params["k"]), int(params["m"]), int(params["ell"])
    if ell < k + 2:
        return _skip("cor32", params, "hypothesis ell >= k+2 fails", started)
    lhs, rhs = do.cor32(k, m, ell)
    return _finish("cor32", params, _scalar_sym(lhs), _scalar_sym(rhs), started)


def check_prop33a(params: dict) -> IdentityReport:
    started = time.perf_counter()
    hp = _hook_params(params)
    j = int(params["j"])
    lhs, rhs = do.prop33a(hp, j)
    return _finish("prop33a", params, _scalar_sym(lhs), _scalar_sym(rhs), started)


def check_prop33b(params: dict) -> IdentityReport:
    started = time.perf_counter()
    hp = _hook_params(params)
    ell = int(params["ell"])
    lhs, rhs = do.prop33b(hp, ell)
    return _finish("prop33b", params, _scalar_sym(lhs), _scalar_sym(rhs), started)


def check_prop33(params: dict) -> IdentityReport:
    """Dispatch to part ``a`` or ``b`` of the kernel-coefficient moment identity.

    Both parts share the hook parameters k, m, n; the product bound may be
    passed as ``ell`` for either part (part a also accepts its native ``j``).
    """
    part = str(params.get("part", "")).lower()
    if part == "a":
        sub = dict(params)
        if "j" not in sub:
            sub["j"] = sub["ell"]
        return check_prop33a(sub)
    if part == "b":
        return check_prop33b(params)
    raise ValueError(f"part must be 'a' or 'b', got {params.get('part')!r}")


def check_eq17(params: dict) -> IdentityReport:
    report = check_prop33b(params)
    return IdentityReport(**{**asdict(report), "identity_id": "eq17"})


def check_eq13_system(params: dict) -> IdentityReport:
    """Full j-sweep of the kernel-coefficient moments for one hook parameter pair."""
    started = time.perf_counter()
    hp = _hook_params(params)
    bad = []
    for j in range(1, hp.n + 1):
        lhs, rhs = do.prop33a(hp, j)
        if lhs != rhs:
            bad.append(j)
    status = "equal" if not bad else "mismatch"
    return IdentityReport(
        identity_id="eq13_system",
        params=params,
        status=status,
        lhs_render=f"moments j=1..{hp.n}",
        rhs_render=f"length-graded coefficients j=1..{hp.n}",
        witness="" if not bad else f"failing j values: {bad}",
        elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
    )


def check_eq10(params: dict) -> IdentityReport:
    started = time.perf_counter()
    hp = _hook_params(params)
    lhs = do.lhs_hook_closed(hp)
    rhs = do.rhs_hook(hp)
    kernel = do.remmel_sum(hp)
    extra = ""
    if kernel != lhs:
        extra = "kernel-route expansion disagrees: " + (_sym_witness(kernel, lhs) or "?")
    return _finish("eq10", params, lhs, rhs, started, extra_witness=extra)


def check_eq12(params: dict) -> IdentityReport:
    started = time.perf_counter()
    n, i = int(params["n"]), int(params["i"])
    lhs = do.shifted_cauchy(n, i, "direct")
    rhs = do.shifted_cauchy_target(n, i)
    return _finish("eq12", params, lhs, rhs, started)


def check_eq16(params: dict) -> IdentityReport:
    started = time.perf_counter()
    n, i = int(params["n"]), int(params["i"])
    lhs = do.shifted_cauchy(n, i, "inverse")
    rhs = do.shifted_cauchy_target(n, i)
    return _finish("eq16", params, lhs, rhs, started)


def check_thm41(params: dict) -> IdentityReport:
    started = time.perf_counter()
    nu = Partition(tuple(params["nu"]))
    n = int(params["n"])
    lhs = do.lhs_expansion_thm41(nu, n)
    rhs = do.lhs_nu(nu, n)
    return _finish("thm41", params, lhs, rhs, started)


def check_cor42(params: dict) -> IdentityReport:
    started = time.perf_counter()
    hp = _hook_params(params)
    lhs = do.lhs_nu(hp.nu, hp.n)
    rhs = do.lhs_hook_closed(hp)
    return _finish("cor42", params, lhs, rhs, started)


def check_thm43(params: dict) -> IdentityReport:
    started = time.perf_counter()
    nu = Partition(tuple(params["nu"]))
    j = int(params["j"])
    direct, graded = do.schur_principal_eval(nu, j)
    return _finish("thm43", params, _scalar_sym(direct), _scalar_sym(graded), started)


def check_thm44(params: dict) -> IdentityReport:
    started = time.perf_counter()
    nu = Partition(tuple(params["nu"]))
    n = int(params["n"])
    lhs = do.lhs_nu(nu, n)
    rhs = do.rhs_nu(nu, n)
    extra = ""
    if not sf.is_hook_only(lhs) or not sf.is_hook_only(rhs):
        extra = "support leaves the hooks"
    return _finish("thm44", params, lhs, rhs, started, extra_witness=extra)


def check_ghry23(params: dict) -> IdentityReport:
    started = time.perf_counter()
    n, k = int(params["n"]), int(params["k"])
    lhs, rhs = do.ghry_sides(n, k)
    extra = ""
    if not sf.is_hook_only(lhs) or not sf.is_hook_only(rhs):
        extra = "support leaves the hooks"
    return _finish("ghry23", params, lhs, rhs, started, extra_witness=extra)


def check_hook_support(params: dict) -> IdentityReport:
    """h_n[X(1-q^u)] via power-sum scaling vs the closed hook-indexed expansion."""
    started = time.perf_counter()
    n, u = int(params["n"]), int(params["u"])
    lhs = sf.apply_transform(sf.h(n), sf.scale_one_minus_qpow(u))
    rhs = sf.hn_times_one_minus_u(n, q**u)
    extra = ""
    if not sf.is_hook_only(lhs):
        extra = "support leaves the hooks"
    return _finish("hook_support", params, lhs, rhs, started, extra_witness=extra)


def _e_km1(k: int) -> SymFunc:
    return sf.one() if k == 1 else sf.e(k - 1)


def check_deltaconj_t0(params: dict) -> IdentityReport:
    started = time.perf_counter()
    n, k = int(params["n"]), int(params["k"])
    lhs = pk.delta_side_combinatorial(n, k, t_zero=True)
    rhs = do.delta_prime_t0(_e_km1(k), n)
    return _finish("deltaconj_t0", params, lhs, rhs, started)


def check_deltaconj_q0(params: dict) -> IdentityReport:
    """q=0 of the rise-product parking sum vs the t=0 operator image renamed q->t."""
    started = time.perf_counter()
    n, k = int(params["n"]), int(params["k"])
    lhs = sf.subs_coeffs(pk.delta_side_combinatorial(n, k), ZERO, None)
    rhs = sf.subs_coeffs(do.delta_prime_t0(_e_km1(k), n), t, None)
    return _finish("deltaconj_q0", params, lhs, rhs, started)


def check_wmu_consistency(params: dict) -> IdentityReport:
    started = time.perf_counter()
    mu = Partition(tuple(params["mu"]))
    lhs = hl.t0_specializations(mu).w
    rhs = hl.w_t0_cell_product(mu)
    return _finish("wmu_consistency", params, _scalar_sym(lhs), _scalar_sym(rhs), started)


def check_span_dim(params: dict) -> IdentityReport:
    """Rank of the plain-Delta image span must exceed n."""
    started = time.perf_counter()
    n = int(params["n"])
    report = do.span_dimension_report(n, params.get("nu_size_max"))
    status = "equal" if report.rank > n else "mismatch"
    return IdentityReport(
        identity_id="span_dim",
        params=params,
        status=status,
        lhs_render=f"rank {report.rank} from {report.nu_count} images",
        rhs_render=f"required > {n}; ambient dimension p({n}) = {report.dim}",
        witness="" if status == "equal" else f"rank {report.rank} <= n = {n}",
        elapsed_ms=round((time.perf_counter() - started) * 1000.0, 3),
    )


# -- registry and default sweeps --------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    identity_id: str
    description: str
    check: Callable[[dict], IdentityReport]
    default_cases: Callable[[int | None], Iterator[dict]]


def _cases_prop31(nmax):
    top = (nmax or 11) - 1
    for m in range(1, top + 1):
        for k in range(0, m):
            for ell in range(k + 2, m + 2):
                yield {"k": k, "m": m, "ell": ell}


def _cases_cor32(nmax):
    top = nmax or 8
    for m in range(1, top + 1):
        for k in range(0, top + 1):
            for ell in range(k + 2, 11):
                yield {"k": k, "m": m, "ell": ell}


def _cases_prop33a(nmax):
    n = nmax or 12
    for m in range(1, n):
        for k in range(0, m):
            for j in range(k + 2, m + 2):
                yield {"k": k, "m": m, "n": n, "j": j}


def _cases_prop33b(nmax):
    n = nmax or 12
    for m in range(1, n):
        for k in range(0, m):
            for ell in range(k + 2, m + 2):
                yield {"k": k, "m": m, "n": n, "ell": ell}


def _cases_eq17(nmax):
    n = nmax or 12
    for m in range(1, n):
        for k in range(0, m):
            for ell in range(1, n + 1):
                yield {"k": k, "m": m, "n": n, "ell": ell}


def _cases_eq13_system(nmax):
    n = nmax or 12
    for m in range(1, n):
        for k in range(0, m):
            yield {"k": k, "m": m, "n": n}


def _cases_eq10(nmax):
    for n in range(2, (nmax or 6) + 1):
        for m in range(2, n):
            for k in range(1, m):
                yield {"k": k, "m": m, "n": n}


def _cases_eq12(nmax):
    for n in range(1, (nmax or 7) + 1):
        for i in range(1, n + 1):
            yield {"n": n, "i": i}


def _cases_thm41(nmax):
    for n in range(2, (nmax or 5) + 1):
        for size in range(1, n):
            for nu in partitions_of(size):
                yield {"nu": list(nu), "n": n}


def _cases_cor42(nmax):
    for n in range(2, (nmax or 5) + 1):
        for m in range(1, n):
            for k in range(0, m):
                yield {"k": k, "m": m, "n": n}


def _cases_thm43(nmax):
    for size in range(1, (nmax or 6) + 1):
        for nu in partitions_of(size):
            for j in range(1, 9):
                yield {"nu": list(nu), "j": j}


def _cases_thm44(nmax):
    for n in range(1, (nmax or 5) + 1):
        for size in range(1, n + 1):
            for nu in partitions_of(size):
                yield {"nu": list(nu), "n": n}


def _cases_ghry23(nmax):
    for n in range(1, (nmax or 6) + 1):
        for k in range(1, n + 1):
            yield {"n": n, "k": k}


def _cases_hook_support(nmax):
    for n in range(1, (nmax or 8) + 1):
        for u in (1, 2, 3):
            yield {"n": n, "u": u}


def _cases_deltaconj_t0(nmax):
    for n in range(1, (nmax or 6) + 1):
        for k in range(1, n + 1):
            yield {"n": n, "k": k}


def _cases_deltaconj_q0(nmax):
    for n in range(1, (nmax or 5) + 1):
        for k in range(1, n + 1):
            yield {"n": n, "k": k}


def _cases_wmu(nmax):
    for n in range(1, (nmax or 6) + 1):
        for mu in partitions_of(n):
            yield {"mu": list(mu)}


def _cases_span(nmax):
    for n in (4, 5) if nmax is None else range(1, nmax + 1):
        yield {"n": n}


REGISTRY: dict[str, IdentityCheck] = {
    c.identity_id: c
    for c in (
        IdentityCheck(
            "prop31",
            "alternating q-binomial sum collapses to a single product",
            check_prop31, _cases_prop31,
        ),
        IdentityCheck(
            "cor32",
            "companion alternating q-binomial sum collapses to a single product",
            check_cor32, _cases_cor32,
        ),
        IdentityCheck(
            "prop33a",
            "kernel-coefficient moments against shifted Pochhammers, direct grading",
            check_prop33a, _cases_prop33a,
        ),
        IdentityCheck(
            "prop33b",
            "kernel-coefficient moments against shifted Pochhammers, inverse grading",
            check_prop33b, _cases_prop33b,
        ),
        IdentityCheck(
            "eq10",
            "hook image: closed inverse-q expansion equals length-graded expansion "
            "and the kernel route",
            check_eq10, _cases_eq10,
        ),
        IdentityCheck(
            "eq12",
            "direct length-graded expansion of h_n[X(1-q^i)]/(1-q^i)",
            check_eq12, _cases_eq12,
        ),
        IdentityCheck(
            "eq16",
            "inverse length-graded expansion of h_n[X(1-q^i)]/(1-q^i)",
            check_eq16, _cases_eq12,
        ),
        IdentityCheck(
            "eq13_system",
            "full moment system (all j) for one hook parameter pair",
            check_eq13_system, _cases_eq13_system,
        ),
        IdentityCheck(
            "eq17",
            "inverse-grading moments swept over every length, including out-of-range",
            check_eq17, _cases_eq17,
        ),
        IdentityCheck(
            "thm41",
            "eigenvalue-weighted inverse-q expansion equals the operator image",
            check_thm41, _cases_thm41,
        ),
        IdentityCheck(
            "cor42",
            "hook case of the operator image equals the closed expansion",
            check_cor42, _cases_cor42,
        ),
        IdentityCheck(
            "thm43",
            "principal Schur evaluation equals its charge-graded double sum",
            check_thm43, _cases_thm43,
        ),
        IdentityCheck(
            "thm44",
            "operator image equals the direct-q length-graded expansion",
            check_thm44, _cases_thm44,
        ),
        IdentityCheck(
            "ghry23",
            "two expansions of the length-k Hall-Littlewood aggregate, hook support",
            check_ghry23, _cases_ghry23,
        ),
        IdentityCheck(
            "hook_support",
            "h_n[X(1-q^u)] is supported on hooks with alternating coefficients",
            check_hook_support, _cases_hook_support,
        ),
        IdentityCheck(
            "deltaconj_t0",
            "rise-product parking sum at t=0 equals the primed operator image",
            check_deltaconj_t0, _cases_deltaconj_t0,
        ),
        IdentityCheck(
            "deltaconj_q0",
            "rise-product parking sum at q=0 equals the renamed t=0 operator image",
            check_deltaconj_q0, _cases_deltaconj_q0,
        ),
        IdentityCheck(
            "wmu_consistency",
            "closed t=0 normalization factor equals its cell-product form",
            check_wmu_consistency, _cases_wmu,
        ),
        IdentityCheck(
            "span_dim",
            "plain-Delta images span more than n dimensions",
            check_span_dim, _cases_span,
        ),
    )
}


SUITES: dict[str, tuple[str, ...]] = {
    "qbinom": ("prop31", "cor32", "prop33a", "prop33b"),
    "hook": ("eq10", "eq13_system", "eq17", "cor42", "hook_support"),
    "kernels": ("eq12", "eq16", "ghry23"),
    "nu": ("thm41", "thm43", "thm44"),
    "t0-delta": ("deltaconj_t0",),
    "q0-delta": ("deltaconj_q0",),
    "consistency": ("wmu_consistency",),
    "span": ("span_dim",),
}
SUITES["all"] = tuple(i for name in
                      ("qbinom", "hook", "kernels", "nu", "t0-delta",
                       "q0-delta", "consistency", "span")
                      for i in SUITES[name])


@dataclass(frozen=True)
class SuiteConfig:
    """What to verify: a whole suite or one identity, with optional overrides."""

    suite: str | None = "all"
    identity_id: str | None = None
    params: dict | None = None
    nmax: int | None = None
    out_path: str | None = None


def run_one(identity_id: str, params: dict) -> IdentityReport:
    started = time.perf_counter()
    entry = REGISTRY.get(identity_id)
    if entry is None:
        raise KeyError(f"unknown identity id {identity_id!r}")
    try:
        return entry.check(params)
    except ValueError as exc:
        return _skip(identity_id, params, f"invalid parameters: {exc}", started)


def run_suite(config: SuiteConfig) -> list[IdentityReport]:
    if config.identity_id is not None:
        ids: Iterable[str] = (config.identity_id,)
    else:
        suite = config.suite or "all"
        if suite not in SUITES:
            raise KeyError(f"unknown suite {suite!r}")
        ids = SUITES[suite]
    reports: list[IdentityReport] = []
    for identity_id in ids:
        entry = REGISTRY[identity_id]
        if config.params is not None:
            reports.append(run_one(identity_id, config.params))
        else:
            for params in entry.default_cases(config.nmax):
                reports.append(run_one(identity_id, params))
    if config.out_path:
        write_jsonl(reports, config.out_path)
    return reports


def write_jsonl(reports: list[IdentityReport], path: str) -> None:
    with open(path, "w") as fh:
        for report in reports:
            fh.write(report.to_json() + "\n")


def summarize(reports: list[IdentityReport]) -> dict[str, int]:
    counts = {"equal": 0, "mismatch": 0, "skipped": 0}
    for report in reports:
        counts[report.status] = counts.get(report.status, 0) + 1
    return counts
