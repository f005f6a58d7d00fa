"""Machine checks of the dissection and binomial-congruence identities.

Each case pairs two series recipes with a mode: exact coefficientwise
equality, or congruence modulo a fixed m.  Checks run to a configurable
truncation order and report the first mismatching exponent on failure.
Evaluation failures (for example a recipe that inverts a non-unit) are
reported in the result rather than raised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import EXACT, Zmod
from .expr import Recipe, eta_series, jacobi_series, qshift, theta_series, evaluate

__all__ = [
    "IdentityCase",
    "IdentityReport",
    "verify_identity",
    "builtin_identities",
    "identity_registry",
]

DEFAULT_ORDER = 500


@dataclass(frozen=True)
class IdentityCase:
    key: str
    lhs: Recipe
    rhs: Recipe
    modulus: int | None = None  # None: exact equality
    default_order: int = DEFAULT_ORDER

    @property
    def mode(self) -> str:
        return "exact" if self.modulus is None else f"mod {self.modulus}"


@dataclass(frozen=True)
class IdentityReport:
    key: str
    mode: str
    order: int
    ok: bool
    mismatch: tuple[int, int, int] | None = None  # exponent, lhs, rhs
    error: str | None = None

    @property
    def status(self) -> str:
        return "PASS" if self.ok else "FAIL"

    def describe(self) -> str:
        if self.ok:
            return ""
        if self.error is not None:
            return f"evaluation error: {self.error}"
        n, lhs, rhs = self.mismatch
        return f"q^{n}: {lhs} != {rhs}"


def verify_identity(case: IdentityCase, order: int | None = None) -> IdentityReport:
    """Evaluate both sides of a case to the given order and compare."""
    order = case.default_order if order is None else order
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    ring = EXACT if case.modulus is None else Zmod(case.modulus)
    try:
        lhs = evaluate(case.lhs, ring, order)
        rhs = evaluate(case.rhs, ring, order)
    except ValueError as exc:
        return IdentityReport(case.key, case.mode, order, ok=False, error=str(exc))
    for n, (x, y) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if x != y:
            return IdentityReport(case.key, case.mode, order, ok=False, mismatch=(n, x, y))
    return IdentityReport(case.key, case.mode, order, ok=True)


def _binomial_cases() -> list[IdentityCase]:
    # f1^(p^k) == f_p^(p^(k-1))  (mod p^k), the workhorse reduction.
    cases = []
    for p in (2, 3):
        for k in range(1, 6):
            cases.append(
                IdentityCase(
                    key=f"B1-p{p}-k{k}",
                    lhs=eta_series(((1, p**k),)),
                    rhs=eta_series(((p, p ** (k - 1)),)),
                    modulus=p**k,
                )
            )
    return cases


def _dissection_cases() -> list[IdentityCase]:
    f = eta_series
    cases = [
        # 2-dissection of f1^2.
        IdentityCase(
            key="D1",
            lhs=f("f1^2"),
            rhs=f("f2 * f8^5 * f4^-2 * f16^-2") - 2 * qshift(f("f2 * f16^2 * f8^-1"), 1),
        ),
        # Its square, divided through by f2^2; used by the odd-part replays.
        IdentityCase(
            key="D1SQ",
            lhs=f("f1^4 * f2^-2"),
            rhs=f("f8^10 * f4^-4 * f16^-4")
            - 4 * qshift(f("f8^4 * f4^-2"), 1)
            + 4 * qshift(f("f16^4 * f8^-2"), 2),
        ),
        # 3-dissections via the cubic theta components.
        IdentityCase(
            key="D2",
            lhs=f("f1^3"),
            rhs=theta_series("h", 3) - 3 * qshift(theta_series("m", 3), 1),
        ),
        IdentityCase(
            key="D3",
            lhs=f("f1^2 * f2^-1"),
            rhs=theta_series("d", 3) - 2 * qshift(theta_series("g", 3), 1),
        ),
        IdentityCase(
            key="D4",
            lhs=f("f1^-3"),
            rhs=theta_series("a", 3)
            + 3 * qshift(theta_series("b", 3), 1)
            + 9 * qshift(theta_series("c", 3), 2),
        ),
        IdentityCase(key="JACOBI", lhs=f("f1^3"), rhs=jacobi_series()),
        # The collapse used against the odd-part 3n+2 extraction.  The two
        # sides agree mod 2 only (first exact mismatch is at q^1: -2 vs 4),
        # which is all the surrounding congruence consumes: the series is
        # multiplied by 2^(j+1) and read modulo 2^(j+2).
        IdentityCase(
            key="R13",
            lhs=f("f3^4 * f2 * f12 * f4^-1 * f6^-1") + f("f1^2 * f6^8 * f2^-2 * f3^-2 * f12^-2"),
            rhs=2 * f("f3^6 * f1^-2"),
            modulus=2,
        ),
    ]
    return cases


def builtin_identities() -> tuple[IdentityCase, ...]:
    """The complete registry, in stable key order."""
    cases = _binomial_cases() + _dissection_cases()
    return tuple(sorted(cases, key=lambda c: c.key))


def identity_registry() -> dict[str, IdentityCase]:
    return {case.key: case for case in builtin_identities()}
