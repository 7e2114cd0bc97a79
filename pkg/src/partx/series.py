"""Truncated formal power series with exact coefficients.

Coefficients live in the integers (``modulus=None``) or in the integers
mod m.  A series of truncation degree N stores coefficients for x^0..x^N;
every operation is exact through degree N and drops anything above it.
Multiplication is schoolbook, inversion uses the standard recurrence
b_0 = 1/a_0, b_i = -(1/a_0) * sum_{j=1..i} a_j b_{i-j}.

The named constructors build the partition generating series: the Euler
product prod_{n>=1} (1 - x^n), its inverse (whose coefficients are P(m)),
the occurrence-count series for a fixed part k (coefficients Q_k(m)), and
the shifted two-index expansion of x * (Euler product)^4.
"""

from __future__ import annotations

from typing import Iterable

SERIES_HEADER = "#series v1"


class PowerSeries:
    """Immutable truncated series over Z or Z/m."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Iterable[int], modulus: int | None = None):
        if modulus is not None and modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        if modulus is not None:
            coeffs = tuple(c % modulus for c in coeffs)
        self.coeffs = coeffs
        self.modulus = modulus

    @classmethod
    def _make(cls, coeffs, modulus) -> "PowerSeries":
        # Internal: coefficients are already reduced.
        s = object.__new__(cls)
        s.coeffs = tuple(coeffs)
        s.modulus = modulus
        return s

    @classmethod
    def zero(cls, trunc: int, modulus: int | None = None) -> "PowerSeries":
        return cls([0] * (trunc + 1), modulus)

    @classmethod
    def one(cls, trunc: int, modulus: int | None = None) -> "PowerSeries":
        return cls([1] + [0] * trunc, modulus)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ring_name(self) -> str:
        return "Z" if self.modulus is None else f"Zmod:{self.modulus}"

    def __getitem__(self, degree: int) -> int:
        return self.coeffs[degree]

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.modulus))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if len(self.coeffs) > 6 else ""
        return f"PowerSeries([{head}{tail}], trunc={self.trunc}, ring={self.ring_name})"

    def _check_compat(self, other: "PowerSeries") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"ring mismatch: {self.ring_name} vs {other.ring_name}"
            )
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError(
                f"truncation mismatch: {self.trunc} vs {other.trunc}"
            )

    def _reduce(self, values) -> "PowerSeries":
        if self.modulus is not None:
            values = [v % self.modulus for v in values]
        return PowerSeries._make(values, self.modulus)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_compat(other)
        return self._reduce([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_compat(other)
        return self._reduce([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self._reduce([-a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_compat(other)
        a, b = self.coeffs, other.coeffs
        size = len(a)
        out = [0] * size
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(size - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return self._reduce(out)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = PowerSeries.one(self.trunc, self.modulus)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse through the truncation degree."""
        a = self.coeffs
        a0 = a[0]
        m = self.modulus
        if m is None:
            if a0 not in (1, -1):
                raise ValueError(
                    f"constant term {a0} is not a unit over the integers"
                )
            inv0 = a0
        else:
            try:
                inv0 = pow(a0, -1, m)
            except ValueError:
                raise ValueError(
                    f"constant term {a0} is not invertible mod {m}"
                ) from None
        size = len(a)
        b = [0] * size
        b[0] = inv0 % m if m is not None else inv0
        for i in range(1, size):
            acc = 0
            for j in range(1, i + 1):
                aj = a[j]
                if aj:
                    acc += aj * b[i - j]
            v = -inv0 * acc
            b[i] = v % m if m is not None else v
        return PowerSeries._make(b, m)

    def shifted(self, degree: int) -> "PowerSeries":
        """Multiply by x**degree, keeping the same truncation."""
        if degree < 0:
            raise ValueError(f"shift degree must be nonnegative, got {degree}")
        size = len(self.coeffs)
        out = [0] * size
        for i in range(size - degree):
            out[i + degree] = self.coeffs[i]
        return PowerSeries._make(out, self.modulus)

    def reduce_mod(self, modulus: int) -> "PowerSeries":
        """Map the coefficients into Z/modulus (the ring homomorphism)."""
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        if self.modulus is not None and self.modulus % modulus != 0:
            raise ValueError(
                f"cannot reduce {self.ring_name} coefficients mod {modulus}"
            )
        return PowerSeries._make([c % modulus for c in self.coeffs], modulus)


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common truncation degree."""
    return a * b


def inverse(a: PowerSeries) -> PowerSeries:
    return a.inverse()


def euler_product(trunc: int, modulus: int | None = None) -> PowerSeries:
    """prod_{n>=1} (1 - x^n) through degree ``trunc``.

    Factors with n > trunc cannot touch degrees <= trunc, so the product
    is finite; the surviving coefficients follow the pentagonal pattern.
    """
    if trunc < 0:
        raise ValueError(f"trunc must be nonnegative, got {trunc}")
    c = [0] * (trunc + 1)
    c[0] = 1
    for n in range(1, trunc + 1):
        for d in range(trunc, n - 1, -1):  # descending keeps the old c[d-n]
            c[d] -= c[d - n]
    if modulus is not None:
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        c = [v % modulus for v in c]
    return PowerSeries._make(c, modulus)


def euler_inverse_product(trunc: int, modulus: int | None = None) -> PowerSeries:
    """prod_{n>=1} 1/(1 - x^n): coefficient of x^m is P(m)."""
    if trunc < 1:
        raise ValueError(f"trunc must be >= 1, got {trunc}")
    return euler_product(trunc, modulus).inverse()


def euler_product_pow(power: int, trunc: int, modulus: int | None = None) -> PowerSeries:
    """[prod_{n>=1} (1 - x^n)] ** power through degree ``trunc``."""
    if power < 1:
        raise ValueError(f"power must be >= 1, got {power}")
    return euler_product(trunc, modulus) ** power


def qk_generating_function(k: int, trunc: int, modulus: int | None = None) -> PowerSeries:
    """Series whose coefficient of x^m is Q_k(m).

    Built as (x^k + x^{2k} + x^{3k} + ...) * prod 1/(1 - x^n), i.e.
    x^k/(1 - x^k) times the partition-count series.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got k={k}")
    if trunc < k:
        raise ValueError(f"trunc must be >= k, got trunc={trunc} < k={k}")
    tail = [0] * (trunc + 1)
    for d in range(k, trunc + 1, k):
        tail[d] = 1
    geometric = PowerSeries(tail, modulus)
    return geometric * euler_inverse_product(trunc, modulus)


def double_sum_expansion(trunc: int) -> PowerSeries:
    """Two-index expansion of x * [prod (1 - x^n)]^4 over the integers.

    Accumulates (-1)^(mu+nu) * (2*mu + 1) * x^e over all mu >= 0 and all
    integers nu, where e = 1 + mu(mu+1)/2 + nu(3nu+1)/2, keeping e <= trunc.
    nu runs 0, +1, -1, +2, -2, ...; the order is fixed for reproducibility
    though integer addition makes it immaterial.
    """
    if trunc < 1:
        raise ValueError(f"trunc must be >= 1, got {trunc}")
    coeffs = [0] * (trunc + 1)
    mu = 0
    while True:
        base = 1 + mu * (mu + 1) // 2
        if base > trunc:
            break
        weight = (2 * mu + 1) if mu % 2 == 0 else -(2 * mu + 1)
        coeffs[base] += weight  # nu = 0
        t = 1
        while True:
            e_neg = base + t * (3 * t - 1) // 2  # nu = -t
            if e_neg > trunc:
                break
            sign = -1 if t & 1 else 1
            e_pos = base + t * (3 * t + 1) // 2  # nu = +t
            if e_pos <= trunc:
                coeffs[e_pos] += weight * sign
            coeffs[e_neg] += weight * sign
            t += 1
        mu += 1
    return PowerSeries._make(coeffs, None)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def freshman_dream_check(m: int, trunc: int) -> bool:
    """True iff (1 - x^m) / (1 - x)^m == 1 through ``trunc`` in Z/m.

    Holds for every prime m (all inner binomial coefficients of (1 - x)^m
    vanish mod m); non-prime m is rejected.
    """
    if trunc < 1:
        raise ValueError(f"trunc must be >= 1, got {trunc}")
    if not _is_prime(m):
        raise ValueError(f"m must be prime, got {m}")
    one_minus_x = PowerSeries([1, -1] + [0] * (trunc - 1), m)
    numer = [1] + [0] * trunc
    if m <= trunc:
        numer[m] = -1
    lhs = PowerSeries(numer, m) * (one_minus_x ** m).inverse()
    return lhs == PowerSeries.one(trunc, m)


def format_series(series: PowerSeries) -> str:
    """Render in the series v1 dump format: header plus one degree,coefficient per line."""
    lines = [f"{SERIES_HEADER} ring={series.ring_name} trunc={series.trunc}"]
    lines.extend(f"{d},{c}" for d, c in enumerate(series.coeffs))
    return "\n".join(lines) + "\n"
