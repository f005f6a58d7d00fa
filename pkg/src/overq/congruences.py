"""Congruence families for overpartition tuples, and replays of the
coefficient tables and dissection steps that prove them.

Every divisibility claim is encoded as data: a parameterized arithmetic
progression A*n + B, a modulus expression, a parameter domain, and an
expected residue (zero unless stated otherwise).  ``check_family`` scans a
parameter grid over Z/mZ and reports witnesses for every violated
coefficient.  Families carry a status: ``theorem`` families must pass,
``conjecture`` families are scanned and reported but never fail a run.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .series import EXACT, Series, Zmod, one
from .eta import EtaQuotient, expand_eta_quotient
from .expr import (
    DissectRecipe,
    GfRecipe,
    Recipe,
    eta_series,
    evaluate,
    qshift,
)

__all__ = [
    "RunConfig",
    "CongruenceFamily",
    "Witness",
    "FamilyReport",
    "SeriesProvider",
    "builtin_families",
    "family_registry",
    "default_grid",
    "check_family",
    "run_families",
    "BinomialTable",
    "binomial_table",
    "TableReport",
    "replay_binomial_tables",
    "DissectionStep",
    "builtin_steps",
    "step_registry",
    "StepReport",
    "verify_dissection_step",
]

# Hard cap on series length; progressions needing more are configuration errors.
MAX_WORKING_ORDER = 2_000_000


@dataclass(frozen=True)
class RunConfig:
    """Grid and output configuration for batch verification runs."""

    order: int = 500
    n_max: int = 200
    t_max: int = 64
    i_max: int = 3
    j_max: int = 3
    alpha_max: int = 2
    r_values: tuple[int, ...] = (1, 3, 5, 7, 9, 11, 13, 15)
    k_values: tuple[int, ...] = (1, 5, 7, 11, 13)
    l_values: tuple[int, ...] = (5, 7, 11, 13)
    include_conjectures: bool = False
    primes_only: bool = False
    seed: int = 0
    jobs: int = 1


@dataclass(frozen=True)
class Witness:
    """A violated coefficient: value != expected (mod modulus)."""

    params: tuple[tuple[str, int], ...]
    n: int
    value: int
    modulus: int
    expected: int

    def params_text(self) -> str:
        return ";".join(f"{name}={value}" for name, value in self.params)


@dataclass(frozen=True)
class FamilyReport:
    key: str
    family_status: str  # theorem | conjecture
    params_tried: int
    coeffs_checked: int
    failures: int
    witnesses: tuple[Witness, ...]  # capped sample; failures counts all

    @property
    def ok(self) -> bool:
        return self.failures == 0

    @property
    def verdict(self) -> str:
        word = "pass" if self.ok else "fail"
        return word if self.family_status == "theorem" else f"conjecture-{word}"

    @property
    def blocking(self) -> bool:
        """True when this result should fail a verification run."""
        return self.family_status == "theorem" and not self.ok


@dataclass(frozen=True, eq=False)
class CongruenceFamily:
    """A parameterized claim: coefficient at A*n+B of the family GF is
    congruent to an expected residue mod m, for all parameters in a domain."""

    key: str
    kind: str  # "overpartition" | "opt"
    status: str  # "theorem" | "conjecture"
    statement: str
    params: tuple[tuple[str, str], ...]  # (name, grid hint) pairs
    progression_text: str
    modulus_text: str
    domain_text: str
    gf_param: Callable[[Mapping[str, int]], int]
    progression: Callable[[Mapping[str, int]], tuple[int, int]]
    modulus: Callable[[Mapping[str, int]], int]
    domain: Callable[[Mapping[str, int]], bool]
    expected: Callable[[Mapping[str, int], int], int] | None = None
    tags: tuple[str, ...] = ()

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.params)

    def describe(self) -> dict:
        """Registry metadata, used verbatim in machine-readable reports."""
        return {
            "key": self.key,
            "kind": self.kind,
            "status": self.status,
            "statement": self.statement,
            "progression": self.progression_text,
            "modulus": self.modulus_text,
            "domain": self.domain_text,
            "params": list(self.param_names),
        }


def _is_triangular(n: int) -> bool:
    # n = k(k+1)/2 iff 8n+1 is a perfect square; exact integer test.
    root = math.isqrt(8 * n + 1)
    return root * root == 8 * n + 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


_GF_BASE = {
    "overpartition": EtaQuotient(((2, 1), (1, -2))),
    "opt": EtaQuotient(((2, 3), (1, -2), (4, -1))),
}


class SeriesProvider:
    """Cache of counting generating functions over modular rings.

    Within a bucket (kind, modulus) the GF at parameter p is the p-th power
    of a fixed base quotient, so a new parameter is reached from the nearest
    cached one by a single pow of the base -- ascending grids cost one
    multiplication per step.  All methods are thread-safe.
    """

    def __init__(self) -> None:
        self._buckets: dict[tuple[str, int], dict] = {}
        self._lock = threading.Lock()

    def reserve(self, kind: str, modulus: int, order: int) -> None:
        """Pre-size a bucket so later lower-order requests reuse its series."""
        with self._lock:
            self._bucket(kind, modulus, order)

    def _bucket(self, kind: str, modulus: int, order: int) -> dict:
        if kind not in _GF_BASE:
            raise ValueError(f"unknown generating function kind {kind!r}")
        if order > MAX_WORKING_ORDER:
            raise ValueError(f"working order {order} exceeds budget {MAX_WORKING_ORDER}")
        key = (kind, modulus)
        bucket = self._buckets.get(key)
        if bucket is None or bucket["order"] < order:
            ring = Zmod(modulus)
            bucket = {
                "order": order,
                "base": expand_eta_quotient(_GF_BASE[kind], ring, order),
                "powers": {0: one(ring, order)},
            }
            self._buckets[key] = bucket
        return bucket

    def gf(self, kind: str, param: int, modulus: int, order: int) -> Series:
        """The family GF for a tuple parameter, over Z/modulus, to the order."""
        if param < 0:
            raise ValueError(f"tuple parameter must be >= 0, got {param}")
        with self._lock:
            bucket = self._bucket(kind, modulus, order)
            powers = bucket["powers"]
            series = powers.get(param)
            if series is None:
                nearest = max(p for p in powers if p <= param)
                series = powers[nearest] * bucket["base"] ** (param - nearest)
                powers[param] = series
        return series if series.order == order else series.truncate(order)

    @staticmethod
    @lru_cache(maxsize=64)
    def gf_exact(kind: str, param: int, order: int) -> Series:
        """Exact-ring GF, for homomorphism cross-checks."""
        base = _GF_BASE[kind]
        scaled = EtaQuotient(tuple((s, e * param) for s, e in base.factors))
        return expand_eta_quotient(scaled, EXACT, order)


def _pbar_family(
    key: str,
    statement: str,
    params: tuple[tuple[str, str], ...],
    progression_text: str,
    modulus_text: str,
    domain_text: str,
    progression,
    modulus,
    domain=lambda p: True,
    expected=None,
    status: str = "theorem",
    tags: tuple[str, ...] = (),
) -> CongruenceFamily:
    return CongruenceFamily(
        key=key,
        kind="overpartition",
        status=status,
        statement=statement,
        params=params,
        progression_text=progression_text,
        modulus_text=modulus_text,
        domain_text=domain_text,
        gf_param=lambda p: p["t"],
        progression=progression,
        modulus=modulus,
        domain=domain,
        expected=expected,
        tags=tags,
    )


def _opt_family(
    key: str,
    statement: str,
    params: tuple[tuple[str, str], ...],
    progression_text: str,
    modulus_text: str,
    domain_text: str,
    gf_param,
    progression,
    modulus,
    domain,
    status: str = "theorem",
) -> CongruenceFamily:
    return CongruenceFamily(
        key=key,
        kind="opt",
        status=status,
        statement=statement,
        params=params,
        progression_text=progression_text,
        modulus_text=modulus_text,
        domain_text=domain_text,
        gf_param=gf_param,
        progression=progression,
        modulus=modulus,
        domain=domain,
    )


def builtin_families() -> tuple[CongruenceFamily, ...]:
    """The complete keyed registry, in stable key order."""
    fams: list[CongruenceFamily] = []

    # --- overpartition tuples: fixed progressions -------------------------
    fams.append(
        _pbar_family(
            "pbar-n-mod2",
            "pbar_t(n) == 0 (mod 2) for all n >= 1 and t >= 0",
            (("t", "t"),),
            "n+1",
            "2",
            "t >= 0",
            progression=lambda p: (1, 1),
            modulus=lambda p: 2,
        )
    )
    for a_n, b_n, m, tag in (
        (8, 1, 2, True),
        (8, 2, 4, True),
        (8, 3, 8, True),
        (8, 4, 2, True),
        (8, 5, 8, True),
        (8, 6, 8, True),
        (8, 7, 32, True),
        (16, 10, 8, False),
        (4, 3, 8, False),
        (16, 14, 16, False),
    ):
        fams.append(
            _pbar_family(
                f"pbar-{a_n}n+{b_n}-mod{m}",
                f"pbar_t({a_n}n+{b_n}) == 0 (mod {m}) for all t >= 0",
                (("t", "t"),),
                f"{a_n}n+{b_n}",
                str(m),
                "t >= 0",
                progression=lambda p, A=a_n, B=b_n: (A, B),
                modulus=lambda p, M=m: M,
                tags=("prime-scan",) if tag else (),
            )
        )
    # Sharper moduli on restricted residues of t.
    for a_n, b_n, m in ((4, 3, 16), (8, 6, 16)):
        fams.append(
            _pbar_family(
                f"pbar-{a_n}n+{b_n}-mod{m}",
                f"pbar_t({a_n}n+{b_n}) == 0 (mod {m}) when t is not 1 mod 4",
                (("t", "t"),),
                f"{a_n}n+{b_n}",
                str(m),
                "t % 4 in {0, 2, 3}",
                progression=lambda p, A=a_n, B=b_n: (A, B),
                modulus=lambda p, M=m: M,
                domain=lambda p: p["t"] % 4 != 1,
            )
        )

    # --- overpartition tuples: power-scaled progressions ------------------
    fams.append(
        _pbar_family(
            "pbar-2^{2a+2}n+2^{2a+1}-mod4",
            "pbar_t(2^(2a+2) n + 2^(2a+1)) == 0 (mod 4) for all t, a >= 0",
            (("t", "t"), ("a", "alpha")),
            "2^(2a+2) n + 2^(2a+1)",
            "4",
            "t >= 0, a >= 0",
            progression=lambda p: (2 ** (2 * p["a"] + 2), 2 ** (2 * p["a"] + 1)),
            modulus=lambda p: 4,
        )
    )
    fams.append(
        _pbar_family(
            "pbar-2^{2a+2}n+3*2^{2a}-mod4",
            "pbar_t(2^(2a+2) n + 3*2^(2a)) == 0 (mod 4) for all t, a >= 0",
            (("t", "t"), ("a", "alpha")),
            "2^(2a+2) n + 3*2^(2a)",
            "4",
            "t >= 0, a >= 0",
            progression=lambda p: (2 ** (2 * p["a"] + 2), 3 * 2 ** (2 * p["a"])),
            modulus=lambda p: 4,
        )
    )
    fams.append(
        _pbar_family(
            "pbar-2^{2a+3}n+5*2^{2a}-mod4",
            "pbar_t(2^(2a+3) n + 5*2^(2a)) == 0 (mod 4) for all t, a >= 0",
            (("t", "t"), ("a", "alpha")),
            "2^(2a+3) n + 5*2^(2a)",
            "4",
            "t >= 0, a >= 0",
            progression=lambda p: (2 ** (2 * p["a"] + 3), 5 * 2 ** (2 * p["a"])),
            modulus=lambda p: 4,
        )
    )
    fams.append(
        _pbar_family(
            "pbar-2^{2a+3}n+2^{2a}-mod4-tri",
            "pbar_t(2^(2a+3) n + 2^(2a)) == 2 (mod 4) when t is odd and n is "
            "triangular, else == 0 (mod 4)",
            (("t", "t"), ("a", "alpha")),
            "2^(2a+3) n + 2^(2a)",
            "4",
            "t >= 0, a >= 0",
            progression=lambda p: (2 ** (2 * p["a"] + 3), 2 ** (2 * p["a"])),
            modulus=lambda p: 4,
            expected=lambda p, n: 2 if (p["t"] % 2 == 1 and _is_triangular(n)) else 0,
        )
    )

    # --- odd-part tuples: proved families ----------------------------------
    fams.append(
        _opt_family(
            "opt-8n+7-mod-2^{i+4}",
            "opt_{2^i * r}(8n+7) == 0 (mod 2^(i+4)) for i >= 1 and odd r",
            (("i", "i"), ("r", "r")),
            "8n+7",
            "2^(i+4)",
            "i >= 1, r odd",
            gf_param=lambda p: 2 ** p["i"] * p["r"],
            progression=lambda p: (8, 7),
            modulus=lambda p: 2 ** (p["i"] + 4),
            domain=lambda p: p["i"] >= 1 and p["r"] % 2 == 1,
        )
    )
    fams.append(
        _opt_family(
            "opt-3n+2-mod-3^{i+1}2^{j+2}",
            "opt_{3^i * 2^j * k}(3n+2) == 0 (mod 3^(i+1) * 2^(j+2)) for "
            "i, j >= 1 and k coprime to 6",
            (("i", "i"), ("j", "j"), ("k", "k6")),
            "3n+2",
            "3^(i+1) * 2^(j+2)",
            "i >= 1, j >= 1, gcd(k, 6) = 1",
            gf_param=lambda p: 3 ** p["i"] * 2 ** p["j"] * p["k"],
            progression=lambda p: (3, 2),
            modulus=lambda p: 3 ** (p["i"] + 1) * 2 ** (p["j"] + 2),
            domain=lambda p: p["i"] >= 1 and p["j"] >= 1 and math.gcd(p["k"], 6) == 1,
        )
    )
    fams.append(
        _opt_family(
            "opt-3n+1-mod-3^i2^{j+1}",
            "opt_{3^i * 2^j * k}(3n+1) == 0 (mod 3^i * 2^(j+1)) for "
            "i, j >= 1 and k coprime to 6",
            (("i", "i"), ("j", "j"), ("k", "k6")),
            "3n+1",
            "3^i * 2^(j+1)",
            "i >= 1, j >= 1, gcd(k, 6) = 1",
            gf_param=lambda p: 3 ** p["i"] * 2 ** p["j"] * p["k"],
            progression=lambda p: (3, 1),
            modulus=lambda p: 3 ** p["i"] * 2 ** (p["j"] + 1),
            domain=lambda p: p["i"] >= 1 and p["j"] >= 1 and math.gcd(p["k"], 6) == 1,
        )
    )
    # The odd multiplier l is read strictly: odd, not divisible by 3, l != 1.
    # A second, wider reading that admits l = 1 is registered separately below
    # as a conjecture so both interpretations stay scannable.
    for b_n, mod_text, mod_fn, key, wide in (
        (2, "3^(i+1) * 2", lambda p: 3 ** (p["i"] + 1) * 2, "opt-3n+2-mod-3^{i+1}2", False),
        (1, "3^i * 2", lambda p: 3 ** p["i"] * 2, "opt-3n+1-mod-3^i2", False),
        (2, "3^(i+1) * 2", lambda p: 3 ** (p["i"] + 1) * 2, "opt-3n+2-mod-3^{i+1}2-l1", True),
        (1, "3^i * 2", lambda p: 3 ** p["i"] * 2, "opt-3n+1-mod-3^i2-l1", True),
    ):
        domain_text = "i >= 1, l odd, 3 does not divide l" + (
            " (wide reading: l = 1 allowed)" if wide else ", l != 1"
        )
        fams.append(
            _opt_family(
                key,
                f"opt_{{3^i * l}}(3n+{b_n}) == 0 (mod {mod_text}) for i >= 1, {domain_text}",
                (("i", "i"), ("l", "lodd1" if wide else "lodd")),
                f"3n+{b_n}",
                mod_text,
                domain_text,
                gf_param=lambda p: 3 ** p["i"] * p["l"],
                progression=lambda p, B=b_n: (3, B),
                modulus=mod_fn,
                domain=(
                    (lambda p: p["i"] >= 1 and p["l"] % 2 == 1 and p["l"] % 3 != 0)
                    if wide
                    else (
                        lambda p: p["i"] >= 1
                        and p["l"] % 2 == 1
                        and p["l"] % 3 != 0
                        and p["l"] != 1
                    )
                ),
                status="conjecture" if wide else "theorem",
            )
        )

    # --- odd-part tuples: open conjectured progressions -------------------
    for b_n, key_mod, exp_text, exp_fn in (
        (2, "2^{2i+1}", "2^(2i+1)", lambda p: 2 ** (2 * p["i"] + 1)),
        (4, "2^{2i+4}", "2^(2i+4)", lambda p: 2 ** (2 * p["i"] + 4)),
        (6, "2^{2i+3}", "2^(2i+3)", lambda p: 2 ** (2 * p["i"] + 3)),
    ):
        fams.append(
            _opt_family(
                f"opt-8n+{b_n}-mod-{key_mod}",
                f"opt_{{2^i * r}}(8n+{b_n}) == 0 (mod {exp_text}) for i >= 1 and odd r",
                (("i", "i"), ("r", "r")),
                f"8n+{b_n}",
                exp_text,
                "i >= 1, r odd",
                gf_param=lambda p: 2 ** p["i"] * p["r"],
                progression=lambda p, B=b_n: (8, B),
                modulus=exp_fn,
                domain=lambda p: p["i"] >= 1 and p["r"] % 2 == 1,
                status="conjecture",
            )
        )

    return tuple(sorted(fams, key=lambda f: f.key))


def family_registry() -> dict[str, CongruenceFamily]:
    return {family.key: family for family in builtin_families()}


def _grid_values(hint: str, config: RunConfig) -> Sequence[int]:
    if hint == "t":
        return range(0, config.t_max + 1)
    if hint == "alpha":
        return range(0, config.alpha_max + 1)
    if hint == "i":
        return range(1, config.i_max + 1)
    if hint == "j":
        return range(1, config.j_max + 1)
    if hint == "r":
        return config.r_values
    if hint == "k6":
        return config.k_values
    if hint == "lodd":
        return config.l_values
    if hint == "lodd1":
        return (1,) + tuple(v for v in config.l_values if v != 1)
    raise ValueError(f"unknown grid hint {hint!r}")


def default_grid(family: CongruenceFamily, config: RunConfig) -> list[dict[str, int]]:
    """The grid of parameter points a run scans for one family.

    Points violating the family's domain constraints are filtered out here;
    ``check_family`` treats an out-of-domain point as a caller error.
    """
    axes = []
    for name, hint in family.params:
        values = _grid_values(hint, config)
        if (
            name == "t"
            and config.primes_only
            and "prime-scan" in family.tags
        ):
            values = [v for v in values if _is_prime(v)]
        axes.append([(name, v) for v in values])
    return [dict(point) for point in product(*axes) if family.domain(dict(point))]


def check_family(
    family: CongruenceFamily,
    grid: Iterable[Mapping[str, int]],
    n_max: int,
    *,
    provider: SeriesProvider | None = None,
    exact_check: bool = False,
    witness_cap: int = 10,
) -> FamilyReport:
    """Scan a parameter grid, asserting the expected residue for n = 0..n_max.

    The coefficient at A*n+B is read off dissect(gf, A, B mod A) at index
    n + B div A, so progressions with B >= A need no special casing.  With
    ``exact_check`` every modular coefficient is also compared against the
    exact-ring computation reduced mod m (slow; meant for small grids).
    """
    provider = provider or SeriesProvider()
    params_tried = 0
    coeffs_checked = 0
    failures = 0
    witnesses: list[Witness] = []
    for params in grid:
        if not family.domain(params):
            raise ValueError(
                f"parameters {dict(params)} are outside the domain of {family.key}"
            )
        params_tried += 1
        step, offset = family.progression(params)
        modulus = family.modulus(params)
        gf_param = family.gf_param(params)
        order = step * n_max + offset + 1
        series = provider.gf(family.kind, gf_param, modulus, order)
        piece = series.dissect(step, offset % step)
        index0 = offset // step
        exact = provider.gf_exact(family.kind, gf_param, order) if exact_check else None
        for n in range(n_max + 1):
            value = piece.coeff(n + index0)
            expected = 0 if family.expected is None else family.expected(params, n) % modulus
            coeffs_checked += 1
            if exact is not None and exact.coeff(step * n + offset) % modulus != value:
                raise RuntimeError(
                    f"modular/exact disagreement in {family.key} at "
                    f"params={params}, n={n}"
                )
            if value != expected:
                failures += 1
                if len(witnesses) < witness_cap:
                    witnesses.append(
                        Witness(
                            params=tuple(sorted(params.items())),
                            n=n,
                            value=value,
                            modulus=modulus,
                            expected=expected,
                        )
                    )
    return FamilyReport(
        key=family.key,
        family_status=family.status,
        params_tried=params_tried,
        coeffs_checked=coeffs_checked,
        failures=failures,
        witnesses=tuple(witnesses),
    )


def run_families(
    families: Sequence[CongruenceFamily],
    config: RunConfig,
    *,
    provider: SeriesProvider | None = None,
    warn: Callable[[str], None] | None = None,
) -> list[FamilyReport]:
    """Check many families against their default grids, sharing one provider.

    Buckets are pre-sized to the largest order any selected family needs, so
    interleaved families reuse cached powers instead of rebuilding.
    """
    provider = provider or SeriesProvider()
    needed: dict[tuple[str, int], int] = {}
    for family in families:
        for params in default_grid(family, config):
            step, offset = family.progression(params)
            modulus = family.modulus(params)
            order = step * config.n_max + offset + 1
            bucket = (family.kind, modulus)
            needed[bucket] = max(needed.get(bucket, 0), order)
            if order > config.order and warn is not None:
                warn(
                    f"{family.key}: raising working order to {order} "
                    f"(configured order {config.order} cannot reach "
                    f"{step}*{config.n_max}+{offset})"
                )
                warn = None  # one warning per run is enough
    for (kind, modulus), order in sorted(needed.items()):
        provider.reserve(kind, modulus, order)
    return [
        check_family(family, default_grid(family, config), config.n_max, provider=provider)
        for family in families
    ]


# --- binomial coefficient tables -------------------------------------------

# Residues of C(7t, r) * (-2)^r mod 16 for r = 1..3, by t mod 8.
_MOD16_ROWS: tuple[tuple[int, int, int, int], ...] = (
    (0, 0, 0, 0),
    (1, 2, 4, 8),
    (2, 4, 12, 0),
    (3, 6, 8, 0),
    (4, 8, 8, 0),
    (5, 10, 12, 8),
    (6, 12, 4, 0),
    (7, 14, 0, 0),
)

# Residues of C(15t, r) * (-2)^r mod 32 for r = 1..4, by t mod 16.
_MOD32_ROWS: tuple[tuple[int, int, int, int, int], ...] = (
    (0, 0, 0, 0, 0),
    (1, 2, 4, 8, 16),
    (2, 4, 12, 0, 16),
    (3, 6, 24, 16, 16),
    (4, 8, 8, 0, 16),
    (5, 10, 28, 24, 0),
    (6, 12, 20, 0, 0),
    (7, 14, 16, 0, 0),
    (8, 16, 16, 0, 0),
    (9, 18, 20, 8, 16),
    (10, 20, 28, 0, 16),
    (11, 22, 8, 16, 16),
    (12, 24, 24, 0, 16),
    (13, 26, 12, 24, 0),
    (14, 28, 4, 0, 0),
    (15, 30, 0, 0, 0),
)


@dataclass(frozen=True)
class BinomialTable:
    width: int  # 16 | 32
    rows: tuple[tuple[int, ...], ...]

    @property
    def strength(self) -> int:
        """The s in C(s*t, r) * (-2)^r that the rows tabulate."""
        return 7 if self.width == 16 else 15


def binomial_table(width: int) -> BinomialTable:
    if width == 16:
        return BinomialTable(16, _MOD16_ROWS)
    if width == 32:
        return BinomialTable(32, _MOD32_ROWS)
    raise ValueError(f"width must be 16 or 32, got {width}")


@dataclass(frozen=True)
class TableReport:
    width: int
    rows_checked: int
    entries_checked: int
    mismatches: tuple[tuple[int, int, int, int, int], ...]  # (residue, t, r, got, want)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def replay_binomial_tables(width: int) -> TableReport:
    """Recompute every tabulated residue exactly and compare.

    Each row i lists C(s*t, r) * (-2)^r mod width for r = 1.., where the
    value depends on t only through i = t mod (number of rows); both t = i
    and t = i + rowcount are recomputed to witness that periodicity.
    """
    table = binomial_table(width)
    rowcount = len(table.rows)
    mismatches = []
    entries = 0
    for row in table.rows:
        residue, *expected = row
        for t in (residue, residue + rowcount):
            for r, want in enumerate(expected, start=1):
                got = (math.comb(table.strength * t, r) * (-2) ** r) % width
                entries += 1
                if got != want:
                    mismatches.append((residue, t, r, got, want))
    return TableReport(width, rowcount, entries, tuple(mismatches))


# --- dissection-step replays -------------------------------------------------


@dataclass(frozen=True, eq=False)
class DissectionStep:
    """A congruence-level series rewrite: LHS == RHS (mod modulus) as series."""

    key: str
    param_names: tuple[str, ...]
    description: str
    modulus: Callable[[Mapping[str, int]], int]
    lhs: Callable[[Mapping[str, int]], Recipe]
    rhs: Callable[[Mapping[str, int]], Recipe]
    domain: Callable[[Mapping[str, int]], bool]
    default_params: tuple[tuple[tuple[str, int], ...], ...]


@dataclass(frozen=True)
class StepReport:
    key: str
    params: tuple[tuple[str, int], ...]
    modulus: int
    order: int
    ok: bool
    mismatch: tuple[int, int, int] | None = None
    error: str | None = None

    @property
    def status(self) -> str:
        return "PASS" if self.ok else "FAIL"

    def params_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params)


def _gf_reduced(t: int) -> Recipe:
    # f1^{2t} / f2^t: the overpartition GF after one even-power reduction.
    return eta_series(((1, 2 * t), (2, -t)))


def _expansion_rhs(t: int, width: int) -> Recipe:
    """The tabulated 2-adic expansion of the overpartition GF mod 16 or 32."""
    table = binomial_table(width)
    s5 = 5 * table.strength  # f8 exponent step: 35 or 75
    s2 = 2 * table.strength  # f4/f16 exponent step: 14 or 30
    row = table.rows[t % len(table.rows)][1:]
    terms: list[Recipe] = [eta_series(((8, s5 * t), (4, -s2 * t), (16, -s2 * t)))]
    for r, coeff in enumerate(row, start=1):
        if coeff % width == 0:
            continue
        term = eta_series(
            ((8, s5 * t - 6 * r), (4, -(s2 * t - 2 * r)), (16, -(s2 * t - 4 * r)))
        )
        terms.append(qshift(coeff * term, r))
    total = terms[0]
    for term in terms[1:]:
        total = total + term
    return total


def _odd_divided_by_3(value: int) -> int:
    if value % 3:
        raise ValueError(f"expected a multiple of 3, got {value}")
    return value // 3


def builtin_steps() -> tuple[DissectionStep, ...]:
    steps: list[DissectionStep] = []

    steps.append(
        DissectionStep(
            key="M1",
            param_names=("t",),
            description="pbar GF == f1^{2t}/f2^t (mod 4)",
            modulus=lambda p: 4,
            lhs=lambda p: GfRecipe("overpartition", p["t"]),
            rhs=lambda p: _gf_reduced(p["t"]),
            domain=lambda p: p["t"] >= 0,
            default_params=tuple((("t", t),) for t in range(0, 7)),
        )
    )
    steps.append(
        DissectionStep(
            key="G4-even",
            param_names=("t",),
            description="f1^{2t}/f2^t == 1 (mod 4) for even t",
            modulus=lambda p: 4,
            lhs=lambda p: _gf_reduced(p["t"]),
            rhs=lambda p: eta_series("1"),
            domain=lambda p: p["t"] >= 0 and p["t"] % 2 == 0,
            default_params=tuple((("t", t),) for t in (0, 2, 4, 6)),
        )
    )
    steps.append(
        DissectionStep(
            key="G4-odd",
            param_names=("t",),
            description="f1^{2t}/f2^t == f8^t/f4^{2t} + 2q f8^3 (mod 4) for odd t",
            modulus=lambda p: 4,
            lhs=lambda p: _gf_reduced(p["t"]),
            rhs=lambda p: eta_series(((8, p["t"]), (4, -2 * p["t"])))
            + 2 * qshift(eta_series("f8^3"), 1),
            domain=lambda p: p["t"] >= 1 and p["t"] % 2 == 1,
            default_params=tuple((("t", t),) for t in (1, 3, 5, 7)),
        )
    )
    steps.append(
        DissectionStep(
            key="G16",
            param_names=("t",),
            description="pbar GF == tabulated four-term f4/f8/f16 expansion (mod 16)",
            modulus=lambda p: 16,
            lhs=lambda p: GfRecipe("overpartition", p["t"]),
            rhs=lambda p: _expansion_rhs(p["t"], 16),
            domain=lambda p: p["t"] >= 0,
            default_params=tuple((("t", t),) for t in range(0, 9)),
        )
    )
    steps.append(
        DissectionStep(
            key="G32",
            param_names=("t",),
            description="pbar GF == tabulated five-term f4/f8/f16 expansion (mod 32)",
            modulus=lambda p: 32,
            lhs=lambda p: GfRecipe("overpartition", p["t"]),
            rhs=lambda p: _expansion_rhs(p["t"], 32),
            domain=lambda p: p["t"] >= 0,
            default_params=tuple((("t", t),) for t in range(0, 17)),
        )
    )
    steps.append(
        DissectionStep(
            key="opt-2n+1-i1",
            param_names=("r",),
            description="odd-part pair GF at 2n+1 == -28r f1^{4r}f4^{2r+2}/f2^{6r-2}"
            " - 16k' q f4^9 (mod 32)",
            modulus=lambda p: 32,
            lhs=lambda p: DissectRecipe(2, 1, GfRecipe("opt", 2 * p["r"])),
            rhs=lambda p: (-28 * p["r"])
            * eta_series(((1, 4 * p["r"]), (4, 2 * p["r"] + 2), (2, -(6 * p["r"] - 2))))
            + (-16 * _odd_divided_by_3(7 * p["r"] * (14 * p["r"] - 1) * (7 * p["r"] - 1)))
            * qshift(eta_series("f4^9"), 1),
            domain=lambda p: p["r"] >= 1 and p["r"] % 2 == 1,
            default_params=tuple((("r", r),) for r in (1, 3, 5)),
        )
    )
    steps.append(
        DissectionStep(
            key="opt-2n+1",
            param_names=("i", "r"),
            description="odd-part tuple GF at 2n+1 == -2^{i+1} 7r f2^2 f4^2"
            " - 2^{i+3} m q f4^9 (mod 2^{i+4}), i >= 2",
            modulus=lambda p: 2 ** (p["i"] + 4),
            lhs=lambda p: DissectRecipe(2, 1, GfRecipe("opt", 2 ** p["i"] * p["r"])),
            rhs=lambda p: (-(2 ** (p["i"] + 1)) * 7 * p["r"]) * eta_series("f2^2 * f4^2")
            + (
                -(2 ** (p["i"] + 3))
                * _odd_divided_by_3(
                    7
                    * p["r"]
                    * (2 ** p["i"] * 7 * p["r"] - 1)
                    * (2 ** (p["i"] - 1) * 7 * p["r"] - 1)
                )
            )
            * qshift(eta_series("f4^9"), 1),
            domain=lambda p: p["i"] >= 2 and p["r"] >= 1 and p["r"] % 2 == 1,
            default_params=((("i", 2), ("r", 1)), (("i", 3), ("r", 1)), (("i", 2), ("r", 3))),
        )
    )
    steps.append(
        DissectionStep(
            key="opt-4n+3-i1",
            param_names=("r",),
            description="odd-part pair GF at 4n+3 == 16k f2 f4^4 - 16k' f2^9 (mod 32)",
            modulus=lambda p: 32,
            lhs=lambda p: DissectRecipe(4, 3, GfRecipe("opt", 2 * p["r"])),
            rhs=lambda p: (16 * 7 * p["r"]) * eta_series("f2 * f4^4")
            + (-16 * _odd_divided_by_3(7 * p["r"] * (14 * p["r"] - 1) * (7 * p["r"] - 1)))
            * eta_series("f2^9"),
            domain=lambda p: p["r"] >= 1 and p["r"] % 2 == 1,
            default_params=tuple((("r", r),) for r in (1, 3)),
        )
    )
    return tuple(sorted(steps, key=lambda s: s.key))


def step_registry() -> dict[str, DissectionStep]:
    return {step.key: step for step in builtin_steps()}


def verify_dissection_step(
    step_key: str, params: Mapping[str, int], order: int
) -> StepReport:
    """Evaluate both sides of a registered step mod its modulus and compare."""
    registry = step_registry()
    if step_key not in registry:
        raise KeyError(f"unknown dissection step {step_key!r}")
    step = registry[step_key]
    missing = [name for name in step.param_names if name not in params]
    if missing:
        raise ValueError(f"step {step_key} needs parameters {missing}")
    if not step.domain(params):
        raise ValueError(f"parameters {dict(params)} outside the domain of {step_key}")
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if order > MAX_WORKING_ORDER // 8:
        # dissection sides evaluate their inner series at a multiple of `order`
        raise ValueError(f"order {order} exceeds the step working budget")
    modulus = step.modulus(params)
    ring = Zmod(modulus)
    key_params = tuple((name, params[name]) for name in step.param_names)
    try:
        lhs = evaluate(step.lhs(params), ring, order)
        rhs = evaluate(step.rhs(params), ring, order)
    except ValueError as exc:
        return StepReport(step_key, key_params, modulus, order, ok=False, error=str(exc))
    limit = min(lhs.order, rhs.order)
    for n in range(limit):
        if lhs.coeffs[n] != rhs.coeffs[n]:
            return StepReport(
                step_key,
                key_params,
                modulus,
                order,
                ok=False,
                mismatch=(n, lhs.coeffs[n], rhs.coeffs[n]),
            )
    return StepReport(step_key, key_params, modulus, order, ok=True)
