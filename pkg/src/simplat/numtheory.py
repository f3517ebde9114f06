"""Exact integer number theory: factorization, dilation plans, binomials
with negative upper argument, p-adic valuations, base-p carry counts,
binomial congruence checks, and CRT combination.

Everything is arbitrary-precision int; logarithms are computed by repeated
multiplication, never by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd, isqrt

from .errors import InputError

FACTORIZE_BOUND = 10 ** 12


def _check_int(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"{name} must be an integer, got {value!r}")
    return value


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (desk-scale inputs)."""
    _check_int(n, "n")
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


def _check_prime(p, name: str = "p") -> int:
    _check_int(p, name)
    if not is_prime(p):
        raise InputError(f"{name} must be prime, got {p}")
    return p


def floor_log(base: int, x: int) -> int:
    """Largest e >= 0 with base**e <= x, by exact multiplication."""
    _check_int(base, "base")
    _check_int(x, "x")
    if base < 2:
        raise InputError(f"base must be >= 2, got {base}")
    if x < 1:
        raise InputError(f"x must be >= 1, got {x}")
    e = 0
    power = base
    while power <= x:
        e += 1
        power *= base
    return e


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((p, exponent), ...) with ascending primes."""

    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        n = 1
        for p, a in self.factors:
            n *= p ** a
        return n

    def as_dict(self) -> dict:
        return {"factors": [[p, a] for p, a in self.factors], "value": self.value}


def factorize(n: int) -> Factorization:
    """Trial-division factorization of n (2 <= n <= 10^12)."""
    _check_int(n, "n")
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    if n > FACTORIZE_BOUND:
        raise InputError(f"n exceeds the supported bound {FACTORIZE_BOUND}")
    factors = []
    rest = n
    a = 0
    while rest % 2 == 0:
        rest //= 2
        a += 1
    if a:
        factors.append((2, a))
    f = 3
    while f * f <= rest:
        if rest % f == 0:
            a = 0
            while rest % f == 0:
                rest //= f
                a += 1
            factors.append((f, a))
        f += 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(tuple(factors))


@dataclass(frozen=True)
class PrimeTerm:
    """Per-prime ingredients of a dilation plan."""

    prime: int
    modulus_exponent: int   # exponent of this prime in the target modulus
    log_floor: int          # floor(log_prime(dim))
    dilation_exponent: int  # modulus_exponent + log_floor

    def as_dict(self) -> dict:
        return {"prime": self.prime,
                "modulus_exponent": self.modulus_exponent,
                "log_floor": self.log_floor,
                "dilation_exponent": self.dilation_exponent}


@dataclass(frozen=True)
class DilationPlan:
    """The dilation factor guaranteeing count ≡ χ (mod modulus) in Z^dim:
    t = prod(p ** (a_p + floor(log_p dim))) over the primes p^a_p of the
    modulus."""

    dim: int
    modulus: int
    terms: tuple[PrimeTerm, ...]
    dilation: int

    def as_dict(self) -> dict:
        return {"dim": self.dim, "modulus": self.modulus,
                "terms": [t.as_dict() for t in self.terms],
                "dilation": self.dilation}


def dilation_plan(dim: int, modulus: int) -> DilationPlan:
    """Build the per-prime dilation plan for a given ambient dimension and
    target modulus."""
    _check_int(dim, "dim")
    if dim < 1:
        raise InputError(f"dim must be >= 1, got {dim}")
    fact = factorize(modulus)
    terms = []
    t = 1
    for p, a in fact.factors:
        l = floor_log(p, dim)
        beta = a + l
        terms.append(PrimeTerm(prime=p, modulus_exponent=a,
                               log_floor=l, dilation_exponent=beta))
        t *= p ** beta
    return DilationPlan(dim=dim, modulus=modulus, terms=tuple(terms), dilation=t)


def binomial(a: int, b: int) -> int:
    """C(a, b) for any integer a and b >= 0, via the falling factorial
    a(a-1)...(a-b+1)/b! (reflection identity for negative a)."""
    _check_int(a, "a")
    _check_int(b, "b")
    if b < 0:
        raise InputError(f"b must be >= 0, got {b}")
    if a >= 0:
        return comb(a, b)
    return (-1) ** b * comb(b - a - 1, b)


def padic_valuation(m: int, p: int) -> int:
    """Exponent of the prime p in m (m != 0)."""
    _check_int(m, "m")
    _check_prime(p)
    if m == 0:
        raise InputError("p-adic valuation of 0 is undefined")
    m = abs(m)
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def kummer_carries(a: int, b: int, p: int) -> int:
    """Number of carries when adding a and b in base p; equals the p-adic
    valuation of C(a+b, a)."""
    _check_int(a, "a")
    _check_int(b, "b")
    _check_prime(p)
    if a < 0 or b < 0:
        raise InputError("a and b must be >= 0")
    carries = 0
    carry = 0
    while a or b or carry:
        s = a % p + b % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def congruence_shift_check(m: int, p: int, k: int, d: int) -> bool:
    """Whether (m + p^k)/p^v ≡ m/p^v (mod p^(k-l)) where v is the p-adic
    valuation of m and l = floor(log_p d); requires 1 <= m <= d and k > l."""
    _check_int(m, "m")
    _check_prime(p)
    _check_int(k, "k")
    _check_int(d, "d")
    if not 1 <= m <= d:
        raise InputError(f"m must satisfy 1 <= m <= d, got m={m}, d={d}")
    l = floor_log(p, d)
    if k <= l:
        raise InputError(f"k must exceed floor(log_{p}({d})) = {l}, got {k}")
    v = padic_valuation(m, p)
    scale = p ** v
    lhs = (m + p ** k) // scale
    rhs = m // scale
    return (lhs - rhs) % p ** (k - l) == 0


@dataclass(frozen=True)
class CongruenceCheck:
    offset: int      # i in C(t + d - i, d)
    upper: int       # t + d - i
    value: int
    residue: int
    expected: int
    passed: bool

    def as_dict(self) -> dict:
        return {"offset": self.offset, "upper": self.upper, "value": self.value,
                "residue": self.residue, "expected": self.expected,
                "passed": self.passed}


@dataclass(frozen=True)
class BinomialCongruenceReport:
    """C(t+d, d) ≡ 1 and C(t+d-i, d) ≡ 0 (mod p^(k-l)) for t = p^k,
    i = 1..d, l = floor(log_p d)."""

    d: int
    p: int
    k: int
    log_floor: int
    modulus: int
    checks: tuple[CongruenceCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {"d": self.d, "p": self.p, "k": self.k,
                "log_floor": self.log_floor, "modulus": self.modulus,
                "passed": self.passed,
                "checks": [c.as_dict() for c in self.checks]}


def verify_binomial_congruences(d: int, p: int, k: int) -> BinomialCongruenceReport:
    """Check the binomial congruences behind the dilation plan for one prime
    power: each check compares C(p^k + d - i, d) mod p^(k-l) against 1 for
    i=0 and 0 for i=1..d."""
    _check_int(d, "d")
    _check_prime(p)
    _check_int(k, "k")
    if d < 1:
        raise InputError(f"d must be >= 1, got {d}")
    l = floor_log(p, d)
    if k <= l:
        raise InputError(f"k must exceed floor(log_{p}({d})) = {l}, got {k}")
    t = p ** k
    modulus = p ** (k - l)
    checks = []
    for i in range(d + 1):
        value = binomial(t + d - i, d)
        residue = value % modulus
        expected = 1 if i == 0 else 0
        checks.append(CongruenceCheck(offset=i, upper=t + d - i, value=value,
                                      residue=residue, expected=expected,
                                      passed=residue == expected))
    return BinomialCongruenceReport(d=d, p=p, k=k, log_floor=l,
                                    modulus=modulus, checks=tuple(checks))


def crt_combine(residues) -> tuple[int, int]:
    """Combine ((r_i, m_i), ...) with pairwise coprime moduli into the
    unique (r, prod m_i) with r ≡ r_i (mod m_i) for every i."""
    pairs = list(residues)
    if not pairs:
        raise InputError("need at least one (residue, modulus) pair")
    r_acc, m_acc = 0, 1
    for r, m in pairs:
        _check_int(r, "residue")
        _check_int(m, "modulus")
        if m < 1:
            raise InputError(f"modulus must be >= 1, got {m}")
        if not 0 <= r < m:
            raise InputError(f"residue {r} out of range for modulus {m}")
        if gcd(m_acc, m) != 1:
            raise InputError(f"moduli are not pairwise coprime: gcd({m_acc}, {m}) > 1")
        if m > 1:
            inv = pow(m_acc % m, -1, m)
            step = (r - r_acc) % m
            r_acc = r_acc + m_acc * ((step * inv) % m)
        m_acc *= m
    return r_acc % m_acc, m_acc
