"""Congruences modulo prime powers: Bernoulli/Euler numbers, harmonic sums, checkers.

Bernoulli and Euler numbers are computed exactly and reduced afterwards.
Rational coefficients such as 896/3 or 7/2 are read p-adically, i.e. the
denominator is replaced by its modular inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_arith import NotInvertibleError, binomial, is_prime, mod_inverse, reduce_mod, sieve_primes
from .report import ClaimReport, OracleMismatch
from .sequences import s_term, t_sequence

__all__ = [
    "PrimePowerRing",
    "bernoulli",
    "bernoulli_numbers",
    "bernoulli_mod",
    "euler_number",
    "euler_numbers",
    "harmonic_mod",
    "legendre_symbol",
    "check_sp_congruence",
    "check_s_weighted_sum",
    "check_t_prime_residue",
    "sum_205",
    "check_205_supercongruences",
    "sum_28k_mod",
    "check_28k_supercongruences",
]


@dataclass(frozen=True)
class PrimePowerRing:
    p: int
    exponent: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.exponent < 1:
            raise ValueError("exponent must be positive")

    @property
    def modulus(self) -> int:
        return self.p**self.exponent

    def reduce(self, x) -> int:
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise NotInvertibleError(f"denominator of {x} is divisible by {self.p}")
        return reduce_mod(x, self.modulus)

    def inverse(self, a: int) -> int:
        return mod_inverse(a, self.modulus)


_bernoulli: list[Fraction] = [Fraction(1)]
_euler: list[int] = [1]


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """``B_0 .. B_n_max`` with ``B_1 = -1/2``, from ``sum_{j<=m} C(m+1, j) B_j = 0``."""
    while len(_bernoulli) <= n_max:
        m = len(_bernoulli)
        s = sum((binomial(m + 1, j) * b for j, b in enumerate(_bernoulli)), Fraction(0))
        _bernoulli.append(-s / (m + 1))
    return _bernoulli[: n_max + 1]


def bernoulli(n: int) -> Fraction:
    return bernoulli_numbers(n)[n]


def bernoulli_mod(index: int, ring: PrimePowerRing) -> int:
    """``B_index`` in ``Z/p^e``; fails when ``p`` divides the denominator."""
    return ring.reduce(bernoulli(index))


def euler_numbers(n_max: int) -> list[int]:
    """``E_0 .. E_n_max`` (odd indices zero) from ``sum_k C(2n, 2k) E_{2k} = 0``."""
    while len(_euler) <= n_max:
        i = len(_euler)
        if i % 2:
            _euler.append(0)
            continue
        _euler.append(-sum(binomial(i, j) * _euler[j] for j in range(0, i, 2)))
    return _euler[: n_max + 1]


def euler_number(n: int) -> int:
    return euler_numbers(n)[n]


def harmonic_mod(p: int, ring: PrimePowerRing) -> int:
    """``H_{p-1} = sum_{k<p} 1/k`` in the ring, by exact summation and by modular inverses."""
    if ring.p != p:
        raise ValueError("ring characteristic must match p")
    exact = ring.reduce(sum((Fraction(1, k) for k in range(1, p)), Fraction(0)))
    m = ring.modulus
    modular = sum(mod_inverse(k, m) for k in range(1, p)) % m if m > 1 else 0
    if exact != modular:
        raise OracleMismatch(f"harmonic sum mod {m}: {exact} vs {modular}")
    return exact


def legendre_symbol(a: int, p: int) -> int:
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _odd_primes(p_max: int, lo: int = 3) -> list[int]:
    return [p for p in sieve_primes(p_max) if p >= lo]


def check_sp_congruence(p_max: int) -> ClaimReport:
    """``S_p = 15 - 30p + 60p^2 (mod p^3)`` for every odd prime ``p <= p_max`` (proven)."""
    report = ClaimReport("sp-mod-p3", {"p_max": p_max}, proven=True)
    for p in _odd_primes(p_max):
        report.checked += 1
        m = p**3
        lhs = s_term(p) % m
        rhs = (15 - 30 * p + 60 * p * p) % m
        if lhs != rhs:
            report.add((p,), f"S_p mod p^3 = {lhs}, expected {rhs}")
    return report


def check_s_weighted_sum(p_max: int) -> ClaimReport:
    """Conjectured: ``sum_{k=1}^{p-1} S_k / 108^k`` is 0 mod p if ``p = +-1 (12)``, -1 if ``p = +-5 (12)``."""
    report = ClaimReport("conj1.1ii", {"p_max": p_max}, proven=False)
    primes = _odd_primes(p_max, lo=5)
    if not primes:
        return report
    s = [0] + [s_term(k) for k in range(1, primes[-1])]
    for p in primes:
        report.checked += 1
        inv = mod_inverse(108, p)
        modular = sum(s[k] * pow(inv, k, p) for k in range(1, p)) % p
        exact = reduce_mod(sum((Fraction(s[k], 108**k) for k in range(1, p)), Fraction(0)), p)
        if modular != exact:
            raise OracleMismatch(f"weighted S-sum mod {p}: {modular} vs {exact}")
        expected = 0 if p % 12 in (1, 11) else p - 1
        if modular != expected:
            report.add((p,), f"sum = {modular} mod {p}, expected {expected}")
    return report


def check_t_prime_residue(p_max: int) -> ClaimReport:
    """Conjectured: ``T_p = -2 (mod p)`` for every prime ``p <= p_max``."""
    report = ClaimReport("conj1.2", {"p_max": p_max}, proven=False)
    primes = sieve_primes(p_max)
    if not primes:
        return report
    table = t_sequence(primes[-1])
    for p in primes:
        report.checked += 1
        t = Fraction(table[p])
        if t.denominator != 1:
            report.add((p,), f"T_p = {t} is not an integer")
        elif t.numerator % p != (-2) % p:
            report.add((p,), f"T_p mod p = {t.numerator % p}")
    for note in table.findings:
        report.notes.append(note)
    return report


def _205_term(k: int) -> int:
    return (205 * k * k + 160 * k + 32) * (-1) ** k * binomial(2 * k, k) ** 5


def sum_205(upper: int, modulus: int | None = None) -> int:
    """``sum_{k=0}^{upper} (205k^2+160k+32) (-1)^k C(2k,k)^5``, exactly or reduced."""
    if modulus is None:
        return sum(_205_term(k) for k in range(upper + 1))
    acc = 0
    for k in range(upper + 1):
        acc = (acc + (205 * k * k + 160 * k + 32) * (-1) ** k * pow(binomial(2 * k, k) % modulus, 5, modulus)) % modulus
    return acc


def _both_routes(exact, modular, modulus, label):
    r = exact % modulus if isinstance(exact, int) else reduce_mod(exact, modulus)
    if r != modular:
        raise OracleMismatch(f"{label}: exact route {r}, modular route {modular}")
    return r


def congruence_205_half(p: int) -> tuple[int, int]:
    """(LHS, RHS) of the half-range ``205k^2`` congruence modulo ``p^6`` (``p != 3``)."""
    if p == 3 or p == 2 or not is_prime(p):
        raise ValueError("requires an odd prime other than 3")
    ring = PrimePowerRing(p, 6)
    m = ring.modulus
    lhs = _both_routes(sum_205((p - 1) // 2), sum_205((p - 1) // 2, m), m, f"205-half p={p}")
    rhs = (32 * p * p + 896 * ring.inverse(3) * p**5 * bernoulli_mod(p - 3, ring)) % m
    return lhs, rhs


def congruence_205_full(p: int) -> tuple[int, int]:
    """(LHS, RHS) of the full-range ``205k^2`` congruence modulo ``p^7`` (``p != 5``)."""
    if p == 5 or p == 2 or not is_prime(p):
        raise ValueError("requires an odd prime other than 5")
    ring = PrimePowerRing(p, 7)
    m = ring.modulus
    lhs = _both_routes(sum_205(p - 1), sum_205(p - 1, m), m, f"205-full p={p}")
    rhs = (32 * p * p + 64 * p**3 * harmonic_mod(p, ring)) % m
    return lhs, rhs


def check_205_supercongruences(p_max: int) -> ClaimReport:
    report = ClaimReport("conj1.3ii", {"p_max": p_max}, proven=False)
    for p in _odd_primes(p_max):
        for label, fn, excluded in (("half", congruence_205_half, 3), ("full", congruence_205_full, 5)):
            if p == excluded:
                continue
            report.checked += 1
            lhs, rhs = fn(p)
            if lhs != rhs:
                report.add((p, label), f"lhs {lhs} != rhs {rhs}")
    return report


def _28k_term(k: int) -> Fraction:
    return Fraction((28 * k * k + 18 * k + 3) * binomial(2 * k, k) ** 4 * binomial(3 * k, k), (-64) ** k)


def sum_28k_mod(upper: int, modulus: int) -> int:
    """``sum_{k=0}^{upper} (28k^2+18k+3) C(2k,k)^4 C(3k,k) / (-64)^k`` in ``Z/modulus``."""
    inv = mod_inverse(-64, modulus)
    acc, w = 0, 1
    for k in range(upper + 1):
        acc = (acc + (28 * k * k + 18 * k + 3) * binomial(2 * k, k) ** 4 * binomial(3 * k, k) * w) % modulus
        w = w * inv % modulus
    return acc


def congruence_28k_full(p: int) -> tuple[int, int]:
    """(LHS, RHS) modulo ``p^6`` with RHS ``3p^2 - (7/2) p^5 B_{p-3}``."""
    ring = PrimePowerRing(p, 6)
    m = ring.modulus
    exact = sum((_28k_term(k) for k in range(p)), Fraction(0))
    lhs = _both_routes(exact, sum_28k_mod(p - 1, m), m, f"28k-full p={p}")
    rhs = (3 * p * p - 7 * ring.inverse(2) * p**5 * bernoulli_mod(p - 3, ring)) % m
    return lhs, rhs


def congruence_28k_half(p: int) -> tuple[int, int]:
    """(LHS, RHS) modulo ``p^5`` with RHS ``3p^2 + 6 (-1/p) p^4 E_{p-3}``."""
    ring = PrimePowerRing(p, 5)
    m = ring.modulus
    h = (p - 1) // 2
    exact = sum((_28k_term(k) for k in range(h + 1)), Fraction(0))
    lhs = _both_routes(exact, sum_28k_mod(h, m), m, f"28k-half p={p}")
    rhs = (3 * p * p + 6 * legendre_symbol(-1, p) * p**4 * euler_number(p - 3)) % m
    return lhs, rhs


def check_28k_supercongruences(p_max: int) -> ClaimReport:
    report = ClaimReport("conj1.4i", {"p_max": p_max}, proven=False)
    for p in _odd_primes(p_max):
        for label, fn in (("full", congruence_28k_full), ("half", congruence_28k_half)):
            report.checked += 1
            lhs, rhs = fn(p)
            if lhs != rhs:
                report.add((p, label), f"lhs {lhs} != rhs {rhs}")
    return report
