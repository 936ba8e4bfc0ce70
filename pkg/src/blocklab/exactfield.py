"""Exact linear algebra over GF(2), GF(2^m) and GF(l), plus cyclotomic integers.

Everything here is exact: GF(2) matrices are bit-packed ints, GF(2^m) elements
are ints (polynomial coefficient bits modulo a fixed irreducible polynomial),
character values are integer multiplicity vectors over roots of unity, and the
mod-l workspace uses numpy int64 arrays with explicit moduli.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np


# ---------------------------------------------------------------------------
# polynomials over GF(2), encoded as ints (bit i = coefficient of x^i)
# ---------------------------------------------------------------------------

def pol2_deg(f: int) -> int:
    return f.bit_length() - 1


def pol2_mul(f: int, g: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    out = 0
    while g:
        if g & 1:
            out ^= f
        f <<= 1
        g >>= 1
    return out


def pol2_divmod(f: int, g: int) -> tuple[int, int]:
    if g == 0:
        raise ZeroDivisionError("division by zero polynomial")
    dg = pol2_deg(g)
    q = 0
    while f.bit_length() - 1 >= dg and f:
        shift = f.bit_length() - 1 - dg
        q ^= 1 << shift
        f ^= g << shift
    return q, f


def pol2_mod(f: int, g: int) -> int:
    return pol2_divmod(f, g)[1]


def pol2_gcd(f: int, g: int) -> int:
    while g:
        f, g = g, pol2_mod(f, g)
    return f


def pol2_mulmod(f: int, g: int, mod: int) -> int:
    return pol2_mod(pol2_mul(f, g), mod)


def pol2_powmod(f: int, e: int, mod: int) -> int:
    out = 1
    f = pol2_mod(f, mod)
    while e:
        if e & 1:
            out = pol2_mulmod(out, f, mod)
        f = pol2_mulmod(f, f, mod)
        e >>= 1
    return out


def pol2_is_irreducible(f: int) -> bool:
    """Rabin test: x^(2^m) = x mod f and gcd(x^(2^(m/p)) - x, f) = 1."""
    m = pol2_deg(f)
    if m <= 0:
        return False
    x = 2
    if pol2_powmod(x, 1 << m, f) != pol2_mod(x, f):
        return False
    for p in sorted(set(factorize(m))):
        h = pol2_powmod(x, 1 << (m // p), f) ^ pol2_mod(x, f)
        if pol2_gcd(h, f) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def lowest_irreducible(m: int) -> int:
    """Lexicographically least irreducible of degree m with nonzero constant term."""
    for f in range((1 << m) + 1, 1 << (m + 1), 2):
        if pol2_is_irreducible(f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {m}")


def pol2_element_order(f: int) -> int:
    """Multiplicative order of x modulo the irreducible polynomial f."""
    m = pol2_deg(f)
    n = (1 << m) - 1
    order = n
    for p in sorted(set(factorize(n))):
        while order % p == 0 and pol2_powmod(2, order // p, f) == 1:
            order //= p
    return order


@lru_cache(maxsize=None)
def lowest_primitive(m: int) -> int:
    """Lexicographically least degree-m irreducible whose root generates GF(2^m)*."""
    for f in range((1 << m) + 1, 1 << (m + 1), 2):
        if pol2_is_irreducible(f) and pol2_element_order(f) == (1 << m) - 1:
            return f
    raise ValueError(f"no primitive polynomial of degree {m}")


# ---------------------------------------------------------------------------
# small integer number theory (no external deps needed at this scale)
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[int]:
    """Prime factors with multiplicity, by trial division (inputs here are small)."""
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError("not a unit")
    t = 1
    x = a % n
    while x != 1:
        x = x * a % n
        t += 1
        if t > n:
            raise RuntimeError("order computation ran away")
    return t


def odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


def two_valuation(n: int) -> int:
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


# ---------------------------------------------------------------------------
# bit-packed matrices over GF(2)
# ---------------------------------------------------------------------------

class BitMatrix:
    """Dense matrix over GF(2); each row is an int, bit j = entry in column j."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        self.rows = tuple(int(r) for r in rows)
        self.ncols = ncols

    # -- constructors -------------------------------------------------------
    @staticmethod
    def identity(n: int) -> "BitMatrix":
        return BitMatrix([1 << i for i in range(n)], n)

    @staticmethod
    def zero(n: int, m: int | None = None) -> "BitMatrix":
        return BitMatrix([0] * n, m if m is not None else n)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "BitMatrix":
        ncols = len(rows[0]) if rows else 0
        return BitMatrix([sum((int(v) & 1) << j for j, v in enumerate(r)) for r in rows], ncols)

    @staticmethod
    def companion(f: int) -> "BitMatrix":
        """Companion matrix of a monic f in GF(2)[x]; maps e_i -> e_{i+1}.

        Row convention: row i holds the image of basis vector e_i under the
        map "multiply by x" on GF(2)[x]/(f), acting on row vectors v -> v*M.
        """
        n = pol2_deg(f)
        rows = [1 << (i + 1) for i in range(n - 1)]
        rows.append(f ^ (1 << n))  # x^n = f - x^n (mod 2 the low bits of f)
        return BitMatrix(rows, n)

    @staticmethod
    def block_diag(*blocks: "BitMatrix") -> "BitMatrix":
        rows: list[int] = []
        off = 0
        total = sum(b.ncols for b in blocks)
        for b in blocks:
            rows.extend(r << off for r in b.rows)
            off += b.ncols
        return BitMatrix(rows, total)

    @staticmethod
    def block_permutation(block_sizes: Sequence[int], cycle_to: Sequence[int]) -> "BitMatrix":
        """Permutation matrix sending block i (as a set of coordinates) to block cycle_to[i].

        All blocks must have equal size; acts on row vectors.
        """
        k = block_sizes[0]
        assert all(s == k for s in block_sizes)
        n = k * len(block_sizes)
        rows = [0] * n
        for i, tgt in enumerate(cycle_to):
            for j in range(k):
                rows[i * k + j] = 1 << (tgt * k + j)
        return BitMatrix(rows, n)

    # -- basics --------------------------------------------------------------
    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, BitMatrix) and self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def row_vector(self, v: int) -> int:
        """Image of the bitmask row-vector v under this matrix (v * M)."""
        out = 0
        r = v
        i = 0
        while r:
            if r & 1:
                out ^= self.rows[i]
            r >>= 1
            i += 1
        return out

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        assert self.ncols == other.nrows
        return BitMatrix([other.row_vector(r) for r in self.rows], other.ncols)

    def __mul__(self, other: "BitMatrix") -> "BitMatrix":
        return self.mul(other)

    def add(self, other: "BitMatrix") -> "BitMatrix":
        assert self.ncols == other.ncols and self.nrows == other.nrows
        return BitMatrix([a ^ b for a, b in zip(self.rows, other.rows)], self.ncols)

    def pow(self, e: int) -> "BitMatrix":
        assert self.nrows == self.ncols
        out = BitMatrix.identity(self.nrows)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                j = (r & -r).bit_length() - 1
                cols[j] |= 1 << i
                r &= r - 1
        return BitMatrix(cols, self.nrows)

    def inverse(self) -> "BitMatrix":
        n = self.nrows
        assert n == self.ncols
        work = list(self.rows)
        aug = [1 << i for i in range(n)]
        row = 0
        for col in range(n):
            piv = next((r for r in range(row, n) if (work[r] >> col) & 1), None)
            if piv is None:
                raise ValueError("matrix is singular over GF(2)")
            work[row], work[piv] = work[piv], work[row]
            aug[row], aug[piv] = aug[piv], aug[row]
            for r in range(n):
                if r != row and (work[r] >> col) & 1:
                    work[r] ^= work[row]
                    aug[r] ^= aug[row]
            row += 1
        return BitMatrix(aug, n)

    def is_identity(self) -> bool:
        return self == BitMatrix.identity(self.nrows)

    def order(self, cap: int = 1 << 20) -> int:
        """Multiplicative order; requires invertibility."""
        m = self
        k = 1
        ident = BitMatrix.identity(self.nrows)
        while m != ident:
            m = m * self
            k += 1
            if k > cap:
                raise RuntimeError("order exceeds cap")
        return k

    def charpoly(self) -> int:
        """Characteristic polynomial over GF(2) via relative annihilators of a spin basis.

        Standard cyclic-chain method: spin v, vM, vM^2, ... modulo the span of
        earlier chains; the relative annihilators multiply to det(xI - M).
        """
        n = self.nrows
        assert n == self.ncols
        basis: dict[int, int] = {}  # pivot bit -> echelon vector (span of finished chains)
        charpoly = 1
        for start in range(n):
            probe = 1 << start
            red = probe
            for p in sorted(basis, reverse=True):
                if (red >> p) & 1:
                    red ^= basis[p]
            if red == 0:
                continue
            chain_red: list[int] = []   # echelonized chain images mod outer span
            chain_expr: list[int] = []  # expression of each echelon vector over v*M^i
            piv_of: list[int] = []
            cur = probe
            while True:
                red = cur
                for p in sorted(basis, reverse=True):
                    if (red >> p) & 1:
                        red ^= basis[p]
                expr = 1 << len(chain_red)
                for idx, (cr, pv) in enumerate(zip(chain_red, piv_of)):
                    if (red >> pv) & 1:
                        red ^= cr
                        expr ^= chain_expr[idx]
                if red == 0:
                    # cur = v*M^k depends on earlier chain vectors: annihilator poly
                    poly = expr  # bit k plus the lower-order combination
                    charpoly = pol2_mul(charpoly, poly)
                    for cr in chain_red:
                        basis[cr.bit_length() - 1] = cr
                    break
                chain_red.append(red)
                chain_expr.append(expr)
                piv_of.append(red.bit_length() - 1)
                cur = self.row_vector(cur)
        return charpoly


def rref_gf2(mat: BitMatrix) -> tuple[BitMatrix, int, list[int]]:
    """Reduced row echelon form over GF(2); returns (rref, rank, pivot columns)."""
    work = list(mat.rows)
    n = len(work)
    pivots: list[int] = []
    row = 0
    for col in range(mat.ncols):
        piv = next((r for r in range(row, n) if (work[r] >> col) & 1), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        for r in range(n):
            if r != row and (work[r] >> col) & 1:
                work[r] ^= work[row]
        pivots.append(col)
        row += 1
        if row == n:
            break
    return BitMatrix(work, mat.ncols), len(pivots), pivots


def kernel_gf2(mat: BitMatrix) -> BitMatrix:
    """Basis of the right kernel {v : v * M^T = 0}, i.e. of {v : M v = 0} for columns v.

    Kernel vectors are returned as rows of a BitMatrix with mat.ncols columns.
    Computed from the RREF of mat: free columns parameterize the kernel.
    """
    red, rank, pivots = rref_gf2(mat)
    n = mat.ncols
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    rows = []
    for fc in free:
        v = 1 << fc
        for r_idx, pc in enumerate(pivots):
            if (red.rows[r_idx] >> fc) & 1:
                v |= 1 << pc
        rows.append(v)
    return BitMatrix(rows, n)


def fixed_space_dim(g: BitMatrix) -> int:
    """dim of {v : v g = v} over GF(2)."""
    n = g.nrows
    m = g.add(BitMatrix.identity(n))
    # row vectors v with v*(g - 1) = 0: kernel of transpose
    return n - rref_gf2(m)[1]


# ---------------------------------------------------------------------------
# GF(2^m)
# ---------------------------------------------------------------------------

class ExtField:
    """GF(2^m) with the fixed lowest-lexicographic irreducible modulus.

    Elements are ints in [0, 2^m); bit i is the coefficient of x^i.
    """

    _instances: dict[int, "ExtField"] = {}

    def __new__(cls, m: int):
        if m not in cls._instances:
            inst = super().__new__(cls)
            inst._init(m)
            cls._instances[m] = inst
        return cls._instances[m]

    def _init(self, m: int) -> None:
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        self.m = m
        self.modulus = lowest_irreducible(m)
        self.order = (1 << m) - 1
        self._log: np.ndarray | None = None
        self._exp: np.ndarray | None = None
        self._generator: int | None = None

    def mul(self, a: int, b: int) -> int:
        return pol2_mod(pol2_mul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return pol2_powmod(a, e % self.order, self.modulus)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError
        return self.pow(a, self.order - 1)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        order = self.order
        for p in sorted(set(factorize(self.order))):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    @property
    def generator(self) -> int:
        """Least element (as int) generating the multiplicative group."""
        if self._generator is None:
            for a in range(2, 1 << self.m):
                if self.element_order(a) == self.order:
                    self._generator = a
                    break
            else:
                raise RuntimeError("no generator found")
        return self._generator

    def element_of_order(self, d: int) -> int:
        if d == 1:
            return 1
        if self.order % d != 0:
            raise ValueError(f"{d} does not divide 2^{self.m}-1 = {self.order}")
        return self.pow(self.generator, self.order // d)

    # -- vectorized arithmetic via log/exp tables ---------------------------
    def _ensure_tables(self) -> None:
        if self._log is not None:
            return
        q = 1 << self.m
        exp = np.zeros(2 * q, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        g = self.generator
        v = 1
        for i in range(self.order):
            exp[i] = v
            log[v] = i
            v = self.mul(v, g)
        exp[self.order:2 * self.order] = exp[:self.order]
        self._exp, self._log = exp, log

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of arrays of field elements (0 allowed)."""
        self._ensure_tables()
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)


def extfield_element_of_order(m: int, d: int) -> int:
    """Element of GF(2^m) of multiplicative order exactly d (d | 2^m - 1)."""
    return ExtField(m).element_of_order(d)


# ---------------------------------------------------------------------------
# cyclotomic integers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial over Z."""
    if n == 1:
        return (-1, 1)
    # x^n - 1 divided by all lower cyclotomics of divisors
    poly = [0] * (n + 1)
    poly[0] = -1
    poly[n] = 1
    for d in range(1, n):
        if n % d == 0:
            phi_d = cyclotomic_polynomial(d)
            poly = _polydiv_exact(poly, list(phi_d))
    return tuple(poly)


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    num = num[:]
    dd = len(den) - 1
    lead = den[dd]
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        assert r == 0
        out[i - dd] = q
        for j, dj in enumerate(den):
            num[i - dd + j] -= q * dj
    assert all(v == 0 for v in num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def _power_basis_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row j = coefficients of zeta_n^j in the power basis 1, zeta, ..., zeta^(phi-1)."""
    phi = len(cyclotomic_polynomial(n)) - 1
    rows: list[tuple[int, ...]] = []
    cur = [0] * phi
    cur[0] = 1
    phi_poly = cyclotomic_polynomial(n)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by zeta: shift, reduce by Phi_n
        nxt = [0] + cur[:-1]
        carry = cur[-1]
        if carry:
            for i in range(phi):
                nxt[i] -= carry * phi_poly[i]
        cur = nxt
    return tuple(rows)


class Cyclo:
    """Cyclotomic integer sum(mults[d] * zeta_n^d); exact integer arithmetic.

    Stored in the redundant length-n multiplicity form (natural for character
    values, whose multiplicities are eigenvalue counts); comparisons and
    integrality questions go through the power-basis reduction mod Phi_n.
    """

    __slots__ = ("n", "mults")

    def __init__(self, n: int, mults: Sequence[int]):
        if len(mults) != n:
            raise ValueError("multiplicity vector must have length n")
        self.n = n
        self.mults = tuple(int(v) for v in mults)

    @staticmethod
    def integer(v: int, n: int = 1) -> "Cyclo":
        m = [0] * n
        m[0] = v
        return Cyclo(n, m)

    @staticmethod
    def root_of_unity(n: int, d: int = 1) -> "Cyclo":
        m = [0] * n
        m[d % n] = 1
        return Cyclo(n, m)

    def lift_to(self, big_n: int) -> "Cyclo":
        if big_n == self.n:
            return self
        if big_n % self.n != 0:
            raise ValueError("conductor must divide target")
        step = big_n // self.n
        m = [0] * big_n
        for d, v in enumerate(self.mults):
            m[d * step] += v
        return Cyclo(big_n, m)

    def _common(self, other: "Cyclo") -> tuple["Cyclo", "Cyclo"]:
        n = self.n * other.n // gcd(self.n, other.n)
        return self.lift_to(n), other.lift_to(n)

    def __add__(self, other: "Cyclo") -> "Cyclo":
        a, b = self._common(other)
        return Cyclo(a.n, [x + y for x, y in zip(a.mults, b.mults)])

    def __sub__(self, other: "Cyclo") -> "Cyclo":
        a, b = self._common(other)
        return Cyclo(a.n, [x - y for x, y in zip(a.mults, b.mults)])

    def __mul__(self, other: "Cyclo") -> "Cyclo":
        a, b = self._common(other)
        n = a.n
        out = [0] * n
        for d, v in enumerate(a.mults):
            if v:
                for e, w in enumerate(b.mults):
                    if w:
                        out[(d + e) % n] += v * w
        return Cyclo(n, out)

    def scale(self, c: int) -> "Cyclo":
        return Cyclo(self.n, [c * v for v in self.mults])

    def conjugate(self) -> "Cyclo":
        """Complex conjugate: zeta^d -> zeta^(-d) (multiplicity vector reversed)."""
        m = [0] * self.n
        for d, v in enumerate(self.mults):
            m[(-d) % self.n] = v
        return Cyclo(self.n, m)

    def power_basis(self) -> tuple[int, ...]:
        tab = _power_basis_table(self.n)
        phi = len(tab[0])
        out = [0] * phi
        for d, v in enumerate(self.mults):
            if v:
                row = tab[d]
                for i in range(phi):
                    out[i] += v * row[i]
        return tuple(out)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.power_basis())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cyclo):
            return NotImplemented
        a, b = self._common(other)
        return a.power_basis() == b.power_basis()

    def as_integer(self) -> int | None:
        pb = self.power_basis()
        if any(v != 0 for v in pb[1:]):
            return None
        return pb[0]

    def divide_exact_by_int(self, c: int) -> "Cyclo | None":
        """Return self / c if that is still a cyclotomic integer, else None."""
        pb = self.power_basis()
        if any(v % c for v in pb):
            return None
        phi = len(pb)
        m = [0] * self.n
        for i in range(phi):
            m[i] = pb[i] // c
        return Cyclo(self.n, m)

    def reduce_mod2(self, field: ExtField, group_conductor: int | None = None) -> int:
        """Image in GF(2^m) under a maximal ideal over 2: zeta_{2^a} -> 1, odd part -> beta.

        beta is derived from the canonical generator of GF(2^m)* via the reference
        conductor (group_conductor, default this value's own conductor), so that all
        reductions within one group's computation come from one ring homomorphism.
        """
        ref = group_conductor if group_conductor is not None else self.n
        if ref % self.n != 0:
            # widen the reference conductor deterministically
            ref = ref * self.n // gcd(ref, self.n)
        ref_odd = odd_part(ref)
        if ref_odd > 1 and field.order % ref_odd != 0:
            raise ValueError(f"GF(2^{field.m}) has no elements of order {ref_odd}")
        base = field.element_of_order(ref_odd) if ref_odd > 1 else 1
        step = ref // self.n
        acc = 0
        for d, v in enumerate(self.mults):
            if v & 1:
                acc ^= field.pow(base, (d * step) % ref_odd) if ref_odd > 1 else 1
        return acc

    def __repr__(self) -> str:
        return f"Cyclo(n={self.n}, {self.mults})"


def reduce_cyclotomic_mod2(x: Cyclo, m: int, group_conductor: int | None = None) -> int:
    return x.reduce_mod2(ExtField(m), group_conductor)


# ---------------------------------------------------------------------------
# mod-l workspace (Dixon's algorithm lives on top of this)
# ---------------------------------------------------------------------------

@dataclass
class PrimeField:
    """Arithmetic helpers modulo an odd prime small enough for int64 products."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p > 3_000_000_000:
            raise ValueError("modulus too large for int64-safe products")

    def inv(self, a: int) -> int:
        return pow(int(a), -1, self.p)

    # -- dense numpy linear algebra -----------------------------------------
    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a.astype(np.int64) @ b.astype(np.int64)) % self.p

    def rref(self, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
        a = mat.astype(np.int64) % self.p
        nr, nc = a.shape
        pivots: list[int] = []
        row = 0
        for col in range(nc):
            if row == nr:
                break
            piv = row + int(np.argmax(a[row:, col] != 0))
            if a[piv, col] == 0:
                continue
            if piv != row:
                a[[row, piv]] = a[[piv, row]]
            a[row] = a[row] * self.inv(a[row, col]) % self.p
            mask = a[:, col].copy()
            mask[row] = 0
            a = (a - np.outer(mask, a[row])) % self.p
            pivots.append(col)
            row += 1
        return a, pivots

    def nullspace(self, mat: np.ndarray) -> np.ndarray:
        """Rows span {v : mat @ v = 0}."""
        red, pivots = self.rref(mat)
        nc = mat.shape[1]
        pivset = set(pivots)
        free = [c for c in range(nc) if c not in pivset]
        basis = np.zeros((len(free), nc), dtype=np.int64)
        for k, fc in enumerate(free):
            basis[k, fc] = 1
            for r, pc in enumerate(pivots):
                basis[k, pc] = (-red[r, fc]) % self.p
        return basis

    def solve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Solve a @ x = b for square nonsingular a; b may be a matrix."""
        n = a.shape[0]
        bb = b.reshape(n, -1)
        aug = np.concatenate([a % self.p, bb % self.p], axis=1)
        red, pivots = self.rref(aug)
        if pivots[: n] != list(range(n)):
            raise ValueError("singular system")
        x = red[:n, n:]
        return x.reshape(b.shape) if b.ndim > 1 else x.ravel()

    # -- polynomials over GF(p), coefficient arrays low->high ----------------
    def polmulmod(self, f: np.ndarray, g: np.ndarray, mod: np.ndarray) -> np.ndarray:
        prod = np.convolve(f.astype(np.int64), g.astype(np.int64)) % self.p
        return self.polmod(prod, mod)

    def polmod(self, f: np.ndarray, mod: np.ndarray) -> np.ndarray:
        f = f.astype(np.int64) % self.p
        dm = len(mod) - 1
        lead_inv = self.inv(mod[-1])
        f = f.copy()
        for i in range(len(f) - 1, dm - 1, -1):
            c = f[i]
            if c == 0:
                continue
            q = c * lead_inv % self.p
            f[i - dm: i + 1] = (f[i - dm: i + 1] - q * np.asarray(mod, dtype=np.int64)) % self.p
            f[i] = 0
        return np.trim_zeros(f[:max(dm, 1)], "b") if dm > 0 else np.array([0], dtype=np.int64)

    def polgcd(self, f: np.ndarray, g: np.ndarray) -> np.ndarray:
        f = np.trim_zeros(f % self.p, "b")
        g = np.trim_zeros(g % self.p, "b")
        while len(g):
            f, g = g, self._polrem(f, g)
        if len(f) == 0:
            return f
        return f * self.inv(f[-1]) % self.p

    def _polrem(self, f: np.ndarray, g: np.ndarray) -> np.ndarray:
        f = f.astype(np.int64).copy() % self.p
        dg = len(g) - 1
        lead_inv = self.inv(g[-1])
        while len(f) - 1 >= dg and len(f):
            c = f[-1] * lead_inv % self.p
            f[len(f) - 1 - dg:] = (f[len(f) - 1 - dg:] - c * g) % self.p
            f = np.trim_zeros(f, "b")
        return f

    def polpowmod(self, f: np.ndarray, e: int, mod: np.ndarray) -> np.ndarray:
        out = np.array([1], dtype=np.int64)
        f = self.polmod(f, mod)
        while e:
            if e & 1:
                out = self.polmulmod(out, f, mod)
            f = self.polmulmod(f, f, mod)
            e >>= 1
        return out

    def poly_roots(self, f: np.ndarray) -> list[int]:
        """All roots in GF(p) of f (not necessarily squarefree), deterministic order."""
        f = np.trim_zeros(np.asarray(f, dtype=np.int64) % self.p, "b")
        if len(f) <= 1:
            return []
        # strip x-power: root 0
        roots = []
        z = 0
        while f[0] == 0:
            z = 1
            f = f[1:]
        if z:
            roots.append(0)
        if len(f) > 1 and self.p <= 4096:
            xs = np.arange(self.p, dtype=np.int64)
            vals = np.zeros(self.p, dtype=np.int64)
            for c in f[::-1]:
                vals = (vals * xs + int(c)) % self.p
            roots.extend(int(x) for x in xs[vals == 0])
            return sorted(set(roots))
        # gcd with x^p - x isolates the distinct linear factors
        xp = self.polpowmod(np.array([0, 1], dtype=np.int64), self.p, f)
        lin = self.polgcd(self._polsub(xp, np.array([0, 1], dtype=np.int64)), f)
        roots.extend(self._split_linear(lin))
        return sorted(set(roots))

    def _polsub(self, f: np.ndarray, g: np.ndarray) -> np.ndarray:
        n = max(len(f), len(g))
        out = np.zeros(n, dtype=np.int64)
        out[: len(f)] += f
        out[: len(g)] -= g
        return np.trim_zeros(out % self.p, "b")

    def _split_linear(self, f: np.ndarray) -> list[int]:
        """Roots of a squarefree product of linear factors, Cantor-Zassenhaus style."""
        f = np.trim_zeros(f % self.p, "b")
        if len(f) <= 1:
            return []
        if len(f) == 2:
            return [int((-f[0] * self.inv(f[1])) % self.p)]
        e = (self.p - 1) // 2
        a = 0
        while True:
            a += 1
            shifted = self.polpowmod(np.array([a, 1], dtype=np.int64), e, f)
            g = self.polgcd(self._polsub(shifted, np.array([1], dtype=np.int64)), f)
            if 0 < len(g) - 1 < len(f) - 1:
                rest = self._polquo(f, g)
                return self._split_linear(g) + self._split_linear(rest)
            if a > 10000:
                raise RuntimeError("root splitting failed to converge")

    def _polquo(self, f: np.ndarray, g: np.ndarray) -> np.ndarray:
        f = f.astype(np.int64).copy() % self.p
        dg = len(g) - 1
        lead_inv = self.inv(g[-1])
        q = np.zeros(len(f) - dg, dtype=np.int64)
        for i in range(len(f) - 1, dg - 1, -1):
            c = f[i]
            if c == 0:
                continue
            cq = c * lead_inv % self.p
            q[i - dg] = cq
            f[i - dg: i + 1] = (f[i - dg: i + 1] - cq * g) % self.p
        return q

    def minpoly(self, mat: np.ndarray) -> np.ndarray:
        """Minimal polynomial of a square matrix over GF(p), via Krylov chains."""
        n = mat.shape[0]
        mat64 = mat.astype(np.int64) % self.p
        mp = np.array([1], dtype=np.int64)
        basis_rows = np.zeros((0, n), dtype=np.int64)
        for start in range(n):
            v = np.zeros(n, dtype=np.int64)
            v[start] = 1
            if basis_rows.shape[0]:
                red, piv = self.rref(np.vstack([basis_rows, v]))
                if len(piv) == basis_rows.shape[0]:
                    continue
            ann = self._vector_annihilator(mat64, v)
            g = self.polgcd(mp, ann)
            mp = np.convolve(mp, self._polquo(ann, g)) % self.p
            if len(mp) - 1 == n:
                break
            rows = [v]
            w = v
            for _ in range(len(ann) - 1):
                w = (w @ mat64) % self.p
                rows.append(w)
            cand = np.vstack([basis_rows] + rows) if basis_rows.shape[0] else np.vstack(rows)
            red, piv = self.rref(cand)
            basis_rows = red[: len(piv)]
        return mp

    def _vector_annihilator(self, mat64: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Least monic f with v @ f(mat) = 0 (acting on row vectors)."""
        n = mat64.shape[0]
        chain = [v % self.p]
        for _ in range(n):
            chain.append((chain[-1] @ mat64) % self.p)
            a = np.vstack(chain[:-1]).T % self.p
            b = chain[-1] % self.p
            try:
                coeffs = self._solve_ls(a, b)
            except ValueError:
                continue
            deg = len(chain) - 1
            f = np.zeros(deg + 1, dtype=np.int64)
            f[deg] = 1
            f[:deg] = (-coeffs) % self.p
            return f
        raise RuntimeError("annihilator not found")

    def _solve_ls(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Solve a @ x = b when consistent, else raise (a may be non-square)."""
        nr, nc = a.shape
        aug = np.concatenate([a, b.reshape(-1, 1)], axis=1) % self.p
        red, piv = self.rref(aug)
        if nc in piv:
            raise ValueError("inconsistent")
        x = np.zeros(nc, dtype=np.int64)
        for r, pc in enumerate(piv):
            x[pc] = red[r, nc]
        if ((a @ x - b) % self.p).any():
            raise ValueError("inconsistent")
        return x

    def sqrt(self, a: int) -> int:
        """Tonelli-Shanks square root mod p."""
        a %= self.p
        if a == 0:
            return 0
        if pow(a, (self.p - 1) // 2, self.p) != 1:
            raise ValueError("not a quadratic residue")
        if self.p % 4 == 3:
            return pow(a, (self.p + 1) // 4, self.p)
        q, s = self.p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (self.p - 1) // 2, self.p) != self.p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, self.p), pow(a, q, self.p), pow(a, (q + 1) // 2, self.p)
        while t != 1:
            i, tt = 0, t
            while tt != 1:
                tt = tt * tt % self.p
                i += 1
            b = pow(c, 1 << (m - i - 1), self.p)
            m, c, t, r = i, b * b % self.p, t * b * b % self.p, r * b % self.p
        return r

    def primitive_root(self) -> int:
        fac = sorted(set(factorize(self.p - 1)))
        g = 2
        while True:
            if all(pow(g, (self.p - 1) // q, self.p) != 1 for q in fac):
                return g
            g += 1


def eigenspace_mod_l(mat: np.ndarray, p: int, lam: int) -> np.ndarray:
    """Basis (rows) of ker(mat - lam*I) over GF(p)."""
    F = PrimeField(p)
    n = mat.shape[0]
    shifted = (mat.astype(np.int64) - lam * np.eye(n, dtype=np.int64)) % p
    return F.nullspace(shifted)


def dixon_prime(group_order: int, exponent: int, max_class_size: int) -> int:
    """Smallest prime l = 1 mod exponent above every integer the tables lift."""
    bound = max(2 * isqrt(group_order) + 1, 2 * max_class_size + 1, 7)
    l = exponent * (bound // exponent + 1) + 1
    while not is_prime(l):
        l += exponent
    return l
