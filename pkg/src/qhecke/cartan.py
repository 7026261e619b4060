"""Cartan datum of affine type C: matrix, pairings, bilinear form, Weyl action.

Everything is exact: weights carry ``fractions.Fraction`` coordinates and all
operations are pure functions over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _check_rank(ell: int) -> None:
    if not isinstance(ell, int) or ell < 2:
        raise ValueError(f"rank parameter must be an integer >= 2, got {ell!r}")


def symmetrizer(ell: int) -> tuple[int, ...]:
    """The symmetrizing integers (d_0, ..., d_ell) = (2, 1, ..., 1, 2)."""
    _check_rank(ell)
    return (2,) + (1,) * (ell - 1) + (2,)


def cartan_matrix(ell: int) -> tuple[tuple[int, ...], ...]:
    """The (ell+1) x (ell+1) generalized Cartan matrix of affine type C."""
    _check_rank(ell)
    n = ell + 1
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
        if i > 0:
            rows[i][i - 1] = -1
        if i < ell:
            rows[i][i + 1] = -1
    rows[1][0] = -2
    rows[ell - 1][ell] = -2
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class Weight:
    """A weight c0*L0 + sum_i alpha[i]*a_i.

    L0 is the level-one dominant generator and a_0..a_ell the simple roots;
    every weight this engine touches lives in this sublattice, so the pair
    (c0, alpha) determines it uniquely.
    """

    c0: int
    alpha: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(Fraction(x) for x in self.alpha))

    def __add__(self, other: "Weight") -> "Weight":
        self._check_compatible(other)
        return Weight(self.c0 + other.c0,
                      tuple(a + b for a, b in zip(self.alpha, other.alpha)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_compatible(other)
        return Weight(self.c0 - other.c0,
                      tuple(a - b for a, b in zip(self.alpha, other.alpha)))

    def __neg__(self) -> "Weight":
        return Weight(-self.c0, tuple(-a for a in self.alpha))

    def scaled(self, c) -> "Weight":
        c = Fraction(c)
        c0 = c * self.c0
        if c0.denominator != 1:
            raise ValueError("scaling would make the level non-integral")
        return Weight(int(c0), tuple(c * a for a in self.alpha))

    def _check_compatible(self, other: "Weight") -> None:
        if len(self.alpha) != len(other.alpha):
            raise ValueError("weights belong to different ranks")

    @property
    def level(self) -> int:
        return self.c0

    def text(self) -> str:
        """Human-readable form, e.g. ``L0 - 2*a0 - 3*a1``."""
        parts: list[tuple[int, str]] = []
        if self.c0:
            parts.append((1 if self.c0 > 0 else -1, _mono(abs(Fraction(self.c0)), "L0")))
        for j, c in enumerate(self.alpha):
            if c:
                parts.append((1 if c > 0 else -1, _mono(abs(c), f"a{j}")))
        if not parts:
            return "0"
        sign, body = parts[0]
        out = ("-" if sign < 0 else "") + body
        for sign, body in parts[1:]:
            out += (" + " if sign > 0 else " - ") + body
        return out

    def to_json(self) -> dict:
        return {"c0": self.c0, "alpha": [str(a) for a in self.alpha]}

    @classmethod
    def from_json(cls, obj: dict) -> "Weight":
        return cls(int(obj["c0"]), tuple(Fraction(s) for s in obj["alpha"]))

    def __repr__(self) -> str:
        return f"Weight({self.text()})"


def _mono(coeff: Fraction, symbol: str) -> str:
    return symbol if coeff == 1 else f"{coeff}*{symbol}"


@dataclass(frozen=True)
class RootSum:
    """A nonnegative integer combination sum_i k[i]*a_i of simple roots."""

    k: tuple[int, ...]

    def __post_init__(self):
        k = tuple(int(x) for x in self.k)
        if any(x < 0 for x in k):
            raise ValueError(f"root sum entries must be nonnegative, got {k}")
        object.__setattr__(self, "k", k)

    @property
    def height(self) -> int:
        return sum(self.k)

    def __len__(self) -> int:
        return len(self.k)

    def __getitem__(self, i: int) -> int:
        return self.k[i]

    def __iter__(self):
        return iter(self.k)

    def __add__(self, other: "RootSum") -> "RootSum":
        return RootSum(tuple(a + b for a, b in zip(self.k, other.k)))

    def __sub__(self, other: "RootSum") -> "RootSum":
        diff = tuple(a - b for a, b in zip(self.k, other.k))
        if any(x < 0 for x in diff):
            raise ValueError(f"difference leaves the positive cone: {diff}")
        return RootSum(diff)

    def scaled(self, c: int) -> "RootSum":
        return RootSum(tuple(c * x for x in self.k))

    def to_json(self) -> list[int]:
        return list(self.k)

    def __repr__(self) -> str:
        return f"RootSum{self.k}"


class CartanDatum:
    """The affine type C Cartan datum of rank parameter ell >= 2.

    Rank parameter 1 degenerates to a different affine series and is rejected.
    """

    def __init__(self, ell: int):
        _check_rank(ell)
        self.ell = ell
        self.index_set = tuple(range(ell + 1))
        self.a = cartan_matrix(ell)
        self.d = symmetrizer(ell)

    # -- distinguished elements -------------------------------------------

    def zero_weight(self) -> Weight:
        return Weight(0, (Fraction(0),) * (self.ell + 1))

    @property
    def lambda0(self) -> Weight:
        return Weight(1, (Fraction(0),) * (self.ell + 1))

    def alpha(self, i: int) -> Weight:
        self._check_index(i)
        coeffs = [Fraction(0)] * (self.ell + 1)
        coeffs[i] = Fraction(1)
        return Weight(0, tuple(coeffs))

    @property
    def delta(self) -> Weight:
        return self.root_weight(self.delta_root)

    @property
    def delta_root(self) -> RootSum:
        return RootSum((1,) + (2,) * (self.ell - 1) + (1,))

    def varpi(self, i: int) -> Weight:
        """The level-zero elements indexing dominant maximal weights.

        varpi_0 = 0; for i > 0 the a_j coefficient is j for j < i, i for
        i <= j <= ell-1, and i/2 at j = ell.
        """
        self._check_index(i)
        if i == 0:
            return self.zero_weight()
        coeffs = [Fraction(0)] * (self.ell + 1)
        for j in range(1, i):
            coeffs[j] = Fraction(j)
        for j in range(i, self.ell):
            coeffs[j] = Fraction(i)
        coeffs[self.ell] = Fraction(i, 2)
        return Weight(0, tuple(coeffs))

    def root_weight(self, beta: RootSum) -> Weight:
        """beta viewed as a Weight (level zero)."""
        self._check_rootsum(beta)
        return Weight(0, tuple(Fraction(x) for x in beta))

    def deficit(self, weight: Weight) -> RootSum | None:
        """The RootSum beta with weight = L0 - beta, or None if ill-formed.

        Returns None unless the level is 1 and all -alpha coefficients are
        nonnegative integers.
        """
        if weight.c0 != 1:
            return None
        entries = []
        for c in weight.alpha:
            if c.denominator != 1 or c > 0:
                return None
            entries.append(-int(c))
        return RootSum(tuple(entries))

    # -- pairings and bilinear form ---------------------------------------

    def pairing(self, i: int, weight: Weight) -> Fraction:
        """<h_i, weight> for the i-th simple coroot."""
        self._check_index(i)
        val = Fraction(weight.c0) if i == 0 else Fraction(0)
        for j, c in enumerate(weight.alpha):
            if c:
                val += c * self.a[i][j]
        return val

    def bilinear_root_weight(self, i: int, weight: Weight) -> Fraction:
        """(a_i | weight) = d_i * <h_i, weight>."""
        return self.d[i] * self.pairing(i, weight)

    def bilinear_roots(self, b1: RootSum, b2: RootSum) -> int:
        """(beta1 | beta2) extended bilinearly via (a_i|a_j) = d_i * a[i][j]."""
        self._check_rootsum(b1)
        self._check_rootsum(b2)
        total = 0
        for i, ki in enumerate(b1):
            if ki:
                for j, kj in enumerate(b2):
                    if kj and self.a[i][j]:
                        total += ki * kj * self.d[i] * self.a[i][j]
        return total

    def reflect(self, i: int, weight: Weight) -> Weight:
        """Simple reflection r_i(weight) = weight - <h_i, weight> a_i."""
        p = self.pairing(i, weight)
        if not p:
            return weight
        coeffs = list(weight.alpha)
        coeffs[i] -= p
        return Weight(weight.c0, tuple(coeffs))

    def defect(self, beta: RootSum) -> int:
        """(beta | L0) - (beta | beta)/2.

        Integral for every integer root sum: (a_i|a_i) = 2*d_i makes
        (beta|beta) even.
        """
        self._check_rootsum(beta)
        bw = 2 * beta[0]  # (beta | L0) = k_0 * d_0 * <h_0, L0>
        bb = self.bilinear_roots(beta, beta)
        val = Fraction(bw) - Fraction(bb, 2)
        assert val.denominator == 1, f"non-integral defect {val} at beta={beta}"
        return int(val)

    def defect_step_identity_check(self, beta: RootSum, i: int) -> bool:
        """Self-test of def(b - a_i) + (L0 - b | a_i) = def(b) - d_i."""
        self._check_index(i)
        if beta[i] < 1:
            raise ValueError(f"beta has no a_{i} component to remove")
        down = list(beta.k)
        down[i] -= 1
        lhs = self.defect(RootSum(tuple(down)))
        lhs += self.bilinear_root_weight(i, self.lambda0 - self.root_weight(beta))
        rhs = self.defect(beta) - self.d[i]
        return lhs == rhs

    # -- validation ---------------------------------------------------------

    def _check_index(self, i: int) -> None:
        if not 0 <= i <= self.ell:
            raise IndexError(f"index {i} out of range 0..{self.ell}")

    def _check_rootsum(self, beta: RootSum) -> None:
        if len(beta) != self.ell + 1:
            raise ValueError(
                f"root sum has {len(beta)} entries, expected {self.ell + 1}")

    def __repr__(self) -> str:
        return f"CartanDatum(ell={self.ell})"
