"""Littlewood-Richardson coefficients, tensor products and the S^2 / Lambda^2 split."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

from .dims import dim_gl
from .errors import InconsistencyError, ZeroRepresentationError
from .partitions import Partition
from .symfunc import SchurExpansion, adams2, multiply, schur_decompose, schur_polynomial


def _as_partition(p) -> Partition:
    return p if isinstance(p, Partition) else Partition(p)


@dataclass(frozen=True)
class LRQuery:
    lam: Partition
    mu: Partition
    n: int = 0  # 0 = no row bound

    def __post_init__(self):
        object.__setattr__(self, "lam", _as_partition(self.lam))
        object.__setattr__(self, "mu", _as_partition(self.mu))
        if self.n < 0:
            raise ValueError("n must be >= 0")


def _lattice_strips(shape: list[int], size: int, prev: list[int]) -> Iterator[tuple[list[int], list[int]]]:
    """Horizontal strips of ``size`` boxes added to ``shape`` for one letter.

    ``prev`` holds, per row, how many copies of the previous letter sit in that
    row (``None`` for the first letter). Yields (new_shape, per-row counts).
    The Yamanouchi condition for the reverse row reading word is enforced row
    by row: #a in rows <= r must not exceed #(a-1) in rows <= r-1.
    """
    rows = len(shape) + 1
    base = shape + [0]
    counts = [0] * rows

    def rec(r, remaining, placed_so_far, prev_before):
        if r == rows:
            if remaining == 0:
                new = [base[a] + counts[a] for a in range(rows)]
                while new and new[-1] == 0:
                    new.pop()
                yield new, list(counts)
            return
        cap = remaining
        if r > 0:
            # horizontal strip: new row r cannot overhang old row r-1
            cap = min(cap, base[r - 1] - base[r])
        if prev is not None:
            cap = min(cap, prev_before - placed_so_far)
        nxt_prev = prev_before + (prev[r] if prev is not None and r < len(prev) else 0)
        for c in range(cap, -1, -1):
            counts[r] = c
            yield from rec(r + 1, remaining - c, placed_so_far + c, nxt_prev)
        counts[r] = 0

    yield from rec(0, size, 0, 0)


def lr_coefficients(q: LRQuery | Partition, mu=None, n: int = 0) -> SchurExpansion:
    """c^nu_{lam,mu} by counting LR tableaux of shape nu/lam and content mu.

    Accepts either an :class:`LRQuery` or ``(lam, mu, n)``. Rows beyond ``n`` are
    dropped after enumeration when ``n > 0``.
    """
    if not isinstance(q, LRQuery):
        q = LRQuery(q, mu, n)
    lam, mu = q.lam, q.mu
    acc: dict[tuple[int, ...], int] = defaultdict(int)

    def rec(letter, shape, prev):
        if letter == len(mu):
            acc[tuple(shape)] += 1
            return
        for new_shape, counts in _lattice_strips(shape, mu.parts[letter], prev):
            rec(letter + 1, new_shape, counts)

    rec(0, list(lam.parts), None)
    out = SchurExpansion(0, [(Partition(nu), c) for nu, c in acc.items()])
    return out.truncate(q.n) if q.n else out


def tensor_decompose(lam, mu, n: int) -> SchurExpansion:
    """V_n(lam) (x) V_n(mu) as a sum of U(n) irreducibles."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    if n < 1:
        raise ValueError("n must be positive")
    for p in (lam, mu):
        if len(p) > n:
            raise ZeroRepresentationError(p.parts, n)
    return lr_coefficients(LRQuery(lam, mu, n))


def tensor_decompose_bruteforce(lam, mu, n: int) -> SchurExpansion:
    """Same answer as :func:`tensor_decompose`, via characters."""
    return schur_decompose(multiply(schur_polynomial(lam, n), schur_polynomial(mu, n)))


@dataclass(frozen=True)
class SquareSplit:
    sym: SchurExpansion
    alt: SchurExpansion

    def full(self) -> SchurExpansion:
        return self.sym + self.alt

    def parity_of(self, nu) -> str | None:
        nu = _as_partition(nu)
        in_sym, in_alt = nu in self.sym, nu in self.alt
        if in_sym and in_alt:
            return "both"
        return "sym" if in_sym else "alt" if in_alt else None

    def to_json(self) -> dict:
        return {
            "n": self.sym.n,
            "sym": self.sym.to_json()["terms"],
            "alt": self.alt.to_json()["terms"],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SquareSplit":
        n = data["n"]
        return cls(
            SchurExpansion.from_json({"n": n, "terms": data["sym"]}),
            SchurExpansion.from_json({"n": n, "terms": data["alt"]}),
        )


def square_split(lam, n: int) -> SquareSplit:
    """Split V(lam)^{(x)2} into S^2 and Lambda^2 using (s^2 +- psi^2 s) / 2."""
    lam = _as_partition(lam)
    s = schur_polynomial(lam, n)
    sq = multiply(s, s)
    psi = adams2(s)
    try:
        sym_poly = (sq + psi).exact_half()
        alt_poly = (sq - psi).exact_half()
    except ArithmeticError as exc:
        raise InconsistencyError(f"square_split({lam}, n={n}): {exc}") from exc
    sym = schur_decompose(sym_poly)
    alt = schur_decompose(alt_poly)
    for name, part in (("sym", sym), ("alt", alt)):
        bad = [(nu, c) for nu, c in part.items() if c < 0]
        if bad:
            raise InconsistencyError(f"square_split({lam}, n={n}): negative multiplicity in {name}: {bad}")
    d = dim_gl(lam, n)
    dsym = sum(c * dim_gl(nu, n) for nu, c in sym.items())
    dalt = sum(c * dim_gl(nu, n) for nu, c in alt.items())
    if dsym != d * (d + 1) // 2 or dalt != d * (d - 1) // 2:
        raise InconsistencyError(
            f"square_split({lam}, n={n}): dims {dsym}+{dalt} do not match d(d+-1)/2 for d={d}"
        )
    return SquareSplit(sym, alt)


def su_label(lam, n: int) -> tuple[int, ...]:
    """Fundamental-weight coordinates (k_1..k_{n-1}): k_i = lam_i - lam_{i+1}."""
    w = _as_partition(lam).padded(n)
    return tuple(w[a] - w[a + 1] for a in range(n - 1))


def from_su_label(ks: Iterable[int]) -> Partition:
    """Inverse of :func:`su_label` with the last row normalised to zero."""
    ks = tuple(ks)
    return Partition(sum(ks[a:]) for a in range(len(ks)))
