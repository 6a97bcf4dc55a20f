"""Exact sparse polynomials, Schur polynomials and Schur-basis elimination.

This is the slow-but-obviously-correct layer: characters are written out as
integer polynomials in ``n`` variables and every decomposition is done by
subtracting Schur polynomials. :mod:`grassembed.lr` is checked against it.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import NonSymmetricError, ZeroRepresentationError
from .partitions import Partition, sort_key

Exponent = tuple[int, ...]


class SparsePolynomial:
    """Polynomial in ``n`` variables with arbitrary-precision integer coefficients.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, int] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = clean.get(e, 0) + c
            if c:
                clean[e] = c
            else:
                clean.pop(e, None)
        self.n = n
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponent, int]) -> "SparsePolynomial":
        # trusted constructor: caller guarantees no zeros and correct lengths
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, n: int, c: int) -> "SparsePolynomial":
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, n: int, a: int) -> "SparsePolynomial":
        """The coordinate x_{a+1} (``a`` is 0-based)."""
        e = [0] * n
        e[a] = 1
        return cls._raw(n, {tuple(e): 1})

    def __repr__(self):
        if not self.terms:
            return f"SparsePolynomial({self.n}, 0)"
        body = " + ".join(f"{c}*x^{list(e)}" for e, c in sorted(self.terms.items(), reverse=True))
        return f"SparsePolynomial({self.n}, {body})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(self.n, other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # mutable-looking container; keep it out of sets

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _check(self, other: "SparsePolynomial"):
        if self.n != other.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(self.n, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return SparsePolynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = SparsePolynomial.constant(self.n, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "SparsePolynomial":
        if not c:
            return SparsePolynomial._raw(self.n, {})
        return SparsePolynomial._raw(self.n, {e: c * v for e, v in self.terms.items()})

    def exact_half(self) -> "SparsePolynomial":
        """Divide every coefficient by 2, refusing if any is odd."""
        odd = [e for e, c in self.terms.items() if c % 2]
        if odd:
            raise ArithmeticError(f"halving is not exact at exponent {min(odd)}")
        return SparsePolynomial._raw(self.n, {e: c // 2 for e, c in self.terms.items()})

    def coefficient(self, e: Exponent) -> int:
        return self.terms.get(tuple(e), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def evaluate(self, point: Iterable[int]) -> int:
        point = tuple(point)
        if len(point) != self.n:
            raise ValueError("point has wrong dimension")
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= x ** k
            total += t
        return total

    def permute(self, perm: Iterable[int]) -> "SparsePolynomial":
        """Substitute x_a -> x_{perm[a]}."""
        perm = tuple(perm)
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.n
            for a, k in enumerate(e):
                f[perm[a]] = k
            out[tuple(f)] = c
        return SparsePolynomial._raw(self.n, out)

    def is_symmetric(self) -> bool:
        if self.n < 2:
            return True
        # S_n is generated by a transposition and an n-cycle
        swap = (1, 0) + tuple(range(2, self.n))
        cycle = tuple(range(1, self.n)) + (0,)
        return self.permute(swap) == self and self.permute(cycle) == self


def multiply(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    """Exact product; exponent vectors are packed into single integers for speed."""
    f._check(g)
    n = f.n
    if not f.terms or not g.terms:
        return SparsePolynomial._raw(n, {})
    if n == 0:
        return SparsePolynomial.constant(0, f.terms[()] * g.terms[()])
    base = max(max(map(max, f.terms)), 0) + max(max(map(max, g.terms)), 0) + 1
    shifts = [base ** a for a in range(n)]

    def pack(e):
        return sum(k * s for k, s in zip(e, shifts))

    fp = [(pack(e), c) for e, c in f.terms.items()]
    gp = [(pack(e), c) for e, c in g.terms.items()]
    acc: dict[int, int] = defaultdict(int)
    for ke, ce in fp:
        for kg, cg in gp:
            acc[ke + kg] += ce * cg
    out = {}
    for key, c in acc.items():
        if c:
            e = []
            for _ in range(n):
                key, r = divmod(key, base)
                e.append(r)
            out[tuple(e)] = c
    return SparsePolynomial._raw(n, out)


def adams2(f: SparsePolynomial) -> SparsePolynomial:
    """x_a -> x_a**2 in every variable."""
    return SparsePolynomial._raw(f.n, {tuple(2 * k for k in e): c for e, c in f.terms.items()})


@lru_cache(maxsize=None)
def _schur_terms(parts: tuple[int, ...], n: int) -> tuple[tuple[Exponent, int], ...]:
    # Branching over the last variable: an SSYT in letters 1..n restricts to an
    # SSYT in 1..n-1 of a shape mu interlacing lambda, and the n's form the
    # horizontal strip lambda/mu.
    if len(parts) > n:
        return ()
    if n == 0 or not parts:
        return (((0,) * n, 1),)
    if n == 1:
        return (((parts[0],), 1),)
    size = sum(parts)
    acc: dict[Exponent, int] = defaultdict(int)
    padded = parts + (0,) * (n - len(parts))
    for mu in _interlacing(padded):
        mu_trim = tuple(x for x in mu if x)
        if len(mu_trim) > n - 1:
            continue
        tail = size - sum(mu)
        for e, c in _schur_terms(mu_trim, n - 1):
            acc[e + (tail,)] += c
    return tuple(acc.items())


def _interlacing(lam: tuple[int, ...]):
    """All mu of length len(lam)-1 with lam[a] >= mu[a] >= lam[a+1]."""
    ranges = [range(lam[a + 1], lam[a] + 1) for a in range(len(lam) - 1)]

    def rec(a):
        if a == len(ranges):
            yield ()
            return
        for x in ranges[a]:
            for rest in rec(a + 1):
                yield (x,) + rest

    return rec(0)


def schur_polynomial(lam: Partition | Iterable[int], n: int) -> SparsePolynomial:
    """s_lambda(x_1..x_n) as the generating function of semistandard tableaux."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if n < 1:
        raise ValueError("n must be positive")
    if len(lam) > n:
        raise ZeroRepresentationError(lam.parts, n)
    return SparsePolynomial._raw(n, dict(_schur_terms(lam.parts, n)))


class SchurExpansion:
    """Integer combination of Schur functions, keyed by partition.

    ``n == 0`` means no row bound (an untruncated LR product).
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Partition, int] | Iterable[tuple[Partition, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Partition, int] = {}
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if n and len(lam) > n:
                raise ValueError(f"{lam} has more than n={n} rows")
            c = clean.get(lam, 0) + c
            if c:
                clean[lam] = c
            else:
                clean.pop(lam, None)
        self.n = n
        self.coeffs = clean

    def __repr__(self):
        body = ", ".join(f"{lam}: {c}" for lam, c in self.items())
        return f"SchurExpansion(n={self.n}, {{{body}}})"

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    __hash__ = None

    def __len__(self):
        return len(self.coeffs)

    def __contains__(self, lam):
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        return lam in self.coeffs

    def __getitem__(self, lam) -> int:
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        return self.coeffs.get(lam, 0)

    def items(self) -> list[tuple[Partition, int]]:
        """Terms in ``compare`` order."""
        return sorted(self.coeffs.items(), key=lambda kv: sort_key(kv[0]))

    def partitions(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        return SchurExpansion(self.n, list(self.coeffs.items()) + list(other.coeffs.items()))

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        return SchurExpansion(self.n, list(self.coeffs.items()) + [(k, -v) for k, v in other.coeffs.items()])

    def truncate(self, n: int) -> "SchurExpansion":
        return SchurExpansion(n, [(lam, c) for lam, c in self.coeffs.items() if len(lam) <= n])

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.coeffs.values())

    def to_polynomial(self, n: int | None = None) -> SparsePolynomial:
        n = n or self.n
        total = SparsePolynomial.constant(n, 0)
        for lam, c in self.items():
            total = total + schur_polynomial(lam, n).scale(c)
        return total

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"lambda": lam.to_json(), "mult": c} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SchurExpansion":
        return cls(data["n"], [(Partition(t["lambda"]), t["mult"]) for t in data["terms"]])


def schur_decompose(f: SparsePolynomial) -> SchurExpansion:
    """Write a symmetric polynomial in the Schur basis by leading-term elimination.

    The leading term is the largest exponent in (degree, lexicographic) order;
    for a symmetric residue it is weakly decreasing, and subtracting the
    matching Schur polynomial strictly lowers it. A leading exponent that is
    not weakly decreasing proves the input was not symmetric.
    """
    n = f.n
    residue = dict(f.terms)
    out: dict[Partition, int] = {}
    while residue:
        lead = max(residue, key=lambda e: (sum(e), e))
        if any(lead[a] < lead[a + 1] for a in range(n - 1)):
            raise NonSymmetricError(
                f"residue has leading exponent {list(lead)} which is not weakly decreasing"
            )
        c = residue[lead]
        lam = Partition(lead)
        out[lam] = c
        for e, k in _schur_terms(lam.parts, n):
            v = residue.get(e, 0) - c * k
            if v:
                residue[e] = v
            else:
                residue.pop(e, None)
    return SchurExpansion(n, out)
