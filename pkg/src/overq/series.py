"""Dense truncated power series in q over exact or modular integer coefficients.

A :class:`Series` stores the coefficients c_0 .. c_{N-1} of a formal power
series known modulo q^N.  Binary operations truncate to the shorter operand;
nothing ever extends a series, so unknown coefficients cannot leak into a
result.  Coefficients live either in the exact integers (arbitrary precision)
or in Z/mZ with canonical representatives 0 <= c < m.

Values are immutable after construction and every operation is a pure
function, so series can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["Ring", "EXACT", "Zmod", "Series", "make_series", "one"]

# Below this order the plain double loop beats the packing overhead of the
# big-integer kernel.
_PACKED_CUTOFF = 32


@dataclass(frozen=True)
class Ring:
    """Coefficient domain: exact integers (``modulus=None``) or Z/mZ."""

    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def is_modular(self) -> bool:
        return self.modulus is not None

    def canon(self, value: int) -> int:
        """Canonical representative: the integer itself, or its residue in [0, m)."""
        m = self.modulus
        return value if m is None else value % m

    def unit_inverse(self, value: int) -> int:
        """Multiplicative inverse of a unit (exact: only +1/-1 qualify)."""
        if self.modulus is None:
            if value in (1, -1):
                return value
            raise ValueError(f"{value} is not a unit over the exact integers")
        try:
            return pow(value, -1, self.modulus)
        except ValueError:
            raise ValueError(f"{value} is not a unit mod {self.modulus}") from None

    def __str__(self) -> str:
        return "exact" if self.modulus is None else f"mod {self.modulus}"


EXACT = Ring()


def Zmod(modulus: int) -> Ring:
    """The ring of integers modulo ``modulus`` (>= 2)."""
    return Ring(modulus)


def _convolve_schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Reference truncated Cauchy product.

    Every faster kernel must reproduce this output exactly; tests compare
    against it on randomized inputs.
    """
    out = [0] * n
    for i in range(min(len(a), n)):
        ai = a[i]
        if ai:
            for j in range(min(len(b), n - i)):
                out[i + j] += ai * b[j]
    return out


def _pack(vals: Sequence[int], width: int) -> int:
    """Evaluate sum(vals[i] * 2^(8*width*i)) as one big integer."""
    packed = int.from_bytes(
        b"".join((v if v > 0 else 0).to_bytes(width, "little") for v in vals),
        "little",
    )
    if any(v < 0 for v in vals):
        packed -= int.from_bytes(
            b"".join((-v if v < 0 else 0).to_bytes(width, "little") for v in vals),
            "little",
        )
    return packed


def _convolve_packed(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Truncated Cauchy product via Kronecker substitution.

    Both polynomials are evaluated at 2^(8*width) and multiplied as Python
    integers; the product's base-2^(8*width) digits are the convolution.
    ``width`` is chosen so every product coefficient fits a signed digit,
    and adding half the base to each digit makes the split borrow-free.
    """
    a = list(a[:n])
    b = list(b[:n])
    abound = max(map(abs, a))
    bbound = max(map(abs, b))
    if abound == 0 or bbound == 0:
        return [0] * n
    cbound = min(len(a), len(b)) * abound * bbound
    width = cbound.bit_length() // 8 + 1  # guarantees |c_k| < 2^(8*width - 1)
    half = 1 << (8 * width - 1)
    length = len(a) + len(b) - 1
    offset = int.from_bytes(half.to_bytes(width, "little") * length, "little")
    data = (_pack(a, width) * _pack(b, width) + offset).to_bytes(length * width, "little")
    return [
        int.from_bytes(data[k * width : (k + 1) * width], "little") - half
        for k in range(n)
    ]


def _convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    if n <= _PACKED_CUTOFF:
        return _convolve_schoolbook(a, b, n)
    return _convolve_packed(a, b, n)


class Series:
    """Immutable dense truncated power series over a :class:`Ring`."""

    __slots__ = ("ring", "_coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable[int]):
        cs = tuple(ring.canon(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs truncation order >= 1")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Series values are immutable")

    # -- inspection ---------------------------------------------------------

    @property
    def order(self) -> int:
        """Truncation order N: coefficients are known for exponents < N."""
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def coeff(self, n: int) -> int:
        """Coefficient of q^n; raises IndexError past the truncation order."""
        if not 0 <= n < len(self._coeffs):
            raise IndexError(f"coefficient q^{n} is beyond truncation order {self.order}")
        return self._coeffs[n]

    def __getitem__(self, n: int) -> int:
        return self.coeff(n)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self._coeffs))

    def to_text(self) -> str:
        """Canonical textual form: "c0 + c1*q + c2*q^2 + ... (<ring>; O(q^N))"."""
        parts = [str(self._coeffs[0])]
        for k in range(1, len(self._coeffs)):
            c = self._coeffs[k]
            term = "q" if k == 1 else f"q^{k}"
            parts.append(f"{'-' if c < 0 else '+'} {abs(c)}*{term}")
        return f"{' '.join(parts)} ({self.ring}; O(q^{self.order}))"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"<Series {self.ring} O(q^{self.order}): [{head}{tail}]>"

    # -- arithmetic ---------------------------------------------------------

    def _same_ring(self, other: "Series") -> Ring:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        return self.ring

    def __add__(self, other: "Series") -> "Series":
        ring = self._same_ring(other)
        n = min(self.order, other.order)
        return Series(ring, (x + y for x, y in zip(self._coeffs, other._coeffs)))

    def __sub__(self, other: "Series") -> "Series":
        ring = self._same_ring(other)
        return Series(ring, (x - y for x, y in zip(self._coeffs, other._coeffs)))

    def __neg__(self) -> "Series":
        return Series(self.ring, (-x for x in self._coeffs))

    def scale(self, scalar: int) -> "Series":
        """Multiply every coefficient by an integer scalar."""
        return Series(self.ring, (scalar * x for x in self._coeffs))

    def __mul__(self, other: "Series") -> "Series":
        ring = self._same_ring(other)
        n = min(self.order, other.order)
        return Series(ring, _convolve(self._coeffs, other._coeffs, n))

    def invert(self) -> "Series":
        """Multiplicative inverse to the truncation order.

        Requires a unit constant term.  Uses Newton doubling: if a*b = 1 +
        e*q^k then b' = b*(2 - a*b) satisfies a*b' = 1 - e^2*q^2k, so the
        correct prefix doubles each step.
        """
        ring = self.ring
        inv0 = ring.unit_inverse(self._coeffs[0])
        n = self.order
        a = self._coeffs
        b = [ring.canon(inv0)]
        k = 1
        while k < n:
            k = min(2 * k, n)
            ab = _convolve(a[:k], b, k)
            corr = [ring.canon(-x) for x in ab]
            corr[0] = ring.canon(2 - ab[0])
            b = [ring.canon(x) for x in _convolve(b, corr, k)]
        return Series(ring, b)

    def __pow__(self, exponent: int) -> "Series":
        """Integer power by binary exponentiation; negative powers invert first."""
        if exponent == 0:
            return one(self.ring, self.order)
        base = self if exponent > 0 else self.invert()
        e = abs(exponent)
        result: Series | None = None
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        assert result is not None
        return result

    # -- reindexing ---------------------------------------------------------

    def substitute_power(self, k: int) -> "Series":
        """Substitute q -> q^k; the truncation order is preserved."""
        if k < 1:
            raise ValueError(f"substitution step must be >= 1, got {k}")
        if k == 1:
            return self
        n = self.order
        out = [0] * n
        for j in range(0, (n - 1) // k + 1):
            out[j * k] = self._coeffs[j]
        return Series(self.ring, out)

    def dissect(self, m: int, r: int) -> "Series":
        """Extract the coefficients at exponents congruent to r mod m.

        Result coefficient j is c_{m*j + r}; the result order is
        ceil((order - r) / m).
        """
        if m < 1:
            raise ValueError(f"dissection modulus must be >= 1, got {m}")
        if not 0 <= r < m:
            raise ValueError(f"residue must satisfy 0 <= r < m, got r={r}, m={m}")
        out = self._coeffs[r::m]
        if not out:
            raise ValueError(f"dissection residue {r} is beyond truncation order {self.order}")
        return Series(self.ring, out)

    def shift(self, j: int) -> "Series":
        """Multiply by q^j: j zeros are prepended, the tail is truncated."""
        if j < 0:
            raise ValueError(f"shift must be >= 0, got {j}")
        if j == 0:
            return self
        n = self.order
        return Series(self.ring, (0,) * min(j, n) + self._coeffs[: max(n - j, 0)])

    def truncate(self, order: int) -> "Series":
        """Forget coefficients at q^order and beyond."""
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to order {order}")
        if order == self.order:
            return self
        return Series(self.ring, self._coeffs[:order])

    def reduce_ring(self, modulus: int) -> "Series":
        """Map an exact series into Z/mZ coefficientwise."""
        if self.ring.is_modular:
            raise ValueError("series is already modular; reduce from the exact ring")
        return Series(Zmod(modulus), self._coeffs)


def make_series(ring: Ring, coeffs: Iterable[int], order: int) -> Series:
    """Build a canonical series from at most ``order`` coefficients, zero-padded."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    cs = list(coeffs)
    if len(cs) > order:
        raise ValueError(f"{len(cs)} coefficients exceed truncation order {order}")
    cs.extend([0] * (order - len(cs)))
    return Series(ring, cs)


def one(ring: Ring, order: int) -> Series:
    """The constant series 1."""
    return make_series(ring, [1], order)


def _invert_recurrence(s: Series) -> Series:
    """Reference inversion by the constant-term-unit recurrence (O(N^2)).

    Kept as an independent check on the Newton path.
    """
    ring = s.ring
    inv0 = ring.unit_inverse(s.coeffs[0])
    a = s.coeffs
    b = [ring.canon(inv0)]
    for n in range(1, s.order):
        acc = 0
        for i in range(1, n + 1):
            acc += a[i] * b[n - i]
        b.append(ring.canon(-inv0 * acc))
    return Series(ring, b)
