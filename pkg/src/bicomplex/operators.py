"""T-linear operators T^n -> T^m as bicomplex matrices.

An operator splits entrywise into two complex matrices (M1, M2) acting on
the component vectors of the argument, so application, composition,
determinants, and inversion reduce to componentwise complex linear algebra.
Two operator norms are exposed side by side:

    sup_norm  = max(s1, s2) / sqrt(2)        (scaled unit-ball supremum)
    idem_norm = sqrt((s1^2 + s2^2) / 2)      (aggregate of component norms)

where s1, s2 are the largest singular values of M1, M2.  They differ in
general and satisfy sup_norm <= idem_norm <= sqrt(2) * sup_norm, so both are
reported rather than silently preferring one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _arrays
from ._arrays import SQRT2, hat_merge, hat_split, real_block_matrix
from .errors import DimensionMismatch, NotSquare, SingularOperator
from .scalar import Bicomplex, DEFAULT_SINGULAR_TOL
from .tmodule import TVector

#: Hat components whose condition number exceeds this are rejected by
#: solve/invert; proximity to the null cone is the dominant numerical hazard.
CONDITION_LIMIT = 1e12


@dataclass(frozen=True)
class NormReport:
    """Both operator norms plus the component singular values they come from."""

    sup_norm: float
    idem_norm: float
    s1: float
    s2: float

    def to_json(self) -> dict:
        return {
            "sup_norm": self.sup_norm,
            "idem_norm": self.idem_norm,
            "s1": self.s1,
            "s2": self.s2,
        }


@dataclass(frozen=True)
class ComplexMatrixPair:
    """The two complex hat-component matrices of an operator."""

    M1: np.ndarray
    M2: np.ndarray

    def __post_init__(self):
        for name in ("M1", "M2"):
            arr = np.array(getattr(self, name), dtype=np.complex128, copy=True)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.M1.shape != self.M2.shape or self.M1.ndim != 2:
            raise DimensionMismatch("component matrices must be 2-d with equal shapes")

    def merge(self) -> "TMatrix":
        return TMatrix(hat_merge(self.M1, self.M2))


class TMatrix:
    """An m-by-n matrix of bicomplex entries, stored as an (m, n, 4) array."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        self._coeffs = _arrays.freeze(_arrays.as_coeffs(coeffs, 3, "matrix"))
        if self._coeffs.shape[0] < 1 or self._coeffs.shape[1] < 1:
            raise ValueError("matrix dimensions must be at least 1x1")

    # construction ---------------------------------------------------------

    @classmethod
    def from_rows(cls, rows) -> "TMatrix":
        data = [[Bicomplex.coerce(v).coeffs for v in row] for row in rows]
        return cls(np.array(data, dtype=np.float64))

    @classmethod
    def from_hat(cls, M1, M2) -> "TMatrix":
        return ComplexMatrixPair(np.asarray(M1), np.asarray(M2)).merge()

    @classmethod
    def identity(cls, n: int) -> "TMatrix":
        coeffs = np.zeros((n, n, 4))
        coeffs[np.arange(n), np.arange(n), 0] = 1.0
        return cls(coeffs)

    @classmethod
    def zeros(cls, m: int, n: int) -> "TMatrix":
        return cls(np.zeros((m, n, 4)))

    @classmethod
    def scalar(cls, n: int, w) -> "TMatrix":
        """The multiplication operator x -> w*x on T^n."""
        w = Bicomplex.coerce(w)
        coeffs = np.zeros((n, n, 4))
        coeffs[np.arange(n), np.arange(n), :] = w.coeffs
        return cls(coeffs)

    # views ----------------------------------------------------------------

    @property
    def m(self) -> int:
        return self._coeffs.shape[0]

    @property
    def n(self) -> int:
        return self._coeffs.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    def __getitem__(self, key: tuple[int, int]) -> Bicomplex:
        i, k = key
        return Bicomplex(*self._coeffs[i, k])

    def split(self) -> ComplexMatrixPair:
        h1, h2 = hat_split(self._coeffs)
        return ComplexMatrixPair(h1, h2)

    def __eq__(self, other) -> bool:
        return isinstance(other, TMatrix) and np.array_equal(self._coeffs, other._coeffs)

    __hash__ = None

    def __repr__(self) -> str:
        return f"TMatrix(m={self.m}, n={self.n})"

    # algebra ----------------------------------------------------------------

    def __add__(self, other: "TMatrix") -> "TMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"matrix shapes differ: {self.shape} vs {other.shape}")
        return TMatrix(self._coeffs + other._coeffs)

    def __sub__(self, other: "TMatrix") -> "TMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"matrix shapes differ: {self.shape} vs {other.shape}")
        return TMatrix(self._coeffs - other._coeffs)

    def __neg__(self) -> "TMatrix":
        return TMatrix(-self._coeffs)

    def scale(self, w) -> "TMatrix":
        w = Bicomplex.coerce(w)
        wrow = np.array(w.coeffs, dtype=np.float64)
        return TMatrix(_arrays.mul4(wrow, self._coeffs))

    def __rmul__(self, w) -> "TMatrix":
        if isinstance(w, (Bicomplex, int, float, complex)):
            return self.scale(w)
        return NotImplemented

    def apply(self, x: TVector) -> TVector:
        """Matrix-vector product over the ring; acts componentwise on the
        hat coordinates."""
        if x.n != self.n:
            raise DimensionMismatch(f"operator takes dimension {self.n}, got {x.n}")
        pair = self.split()
        xp = x.split()
        return TVector.from_split(pair.M1 @ xp.v1, pair.M2 @ xp.v2)

    __call__ = apply

    def compose(self, other: "TMatrix") -> "TMatrix":
        """Composition self after other; hat components multiply componentwise."""
        if self.n != other.m:
            raise DimensionMismatch(f"inner dimensions differ: {self.n} vs {other.m}")
        a = self.split()
        b = other.split()
        return TMatrix.from_hat(a.M1 @ b.M1, a.M2 @ b.M2)

    __matmul__ = compose

    # norms --------------------------------------------------------------------

    def component_singular_values(self) -> tuple[np.ndarray, np.ndarray]:
        pair = self.split()
        return (
            np.linalg.svd(pair.M1, compute_uv=False),
            np.linalg.svd(pair.M2, compute_uv=False),
        )

    def norms(self) -> NormReport:
        """Both operator norms from the largest component singular values."""
        sv1, sv2 = self.component_singular_values()
        s1 = float(sv1[0])
        s2 = float(sv2[0])
        return NormReport(
            sup_norm=max(s1, s2) / SQRT2,
            idem_norm=float(np.sqrt((s1 * s1 + s2 * s2) / 2.0)),
            s1=s1,
            s2=s2,
        )

    def bound_constant(self) -> float:
        """The least M with |Tx| <= sqrt(2) * M * |x| for every x; coincides
        with sup_norm since sup |Tx| / |x| = max(s1, s2)."""
        return self.norms().sup_norm

    # inversion ------------------------------------------------------------------

    def det(self) -> Bicomplex:
        """Determinant assembled from the component determinants; the operator
        is invertible over the ring exactly when this scalar is nonsingular."""
        if self.m != self.n:
            raise NotSquare(f"determinant needs a square matrix, got {self.m}x{self.n}")
        pair = self.split()
        return Bicomplex.from_idempotent(
            complex(np.linalg.det(pair.M1)), complex(np.linalg.det(pair.M2))
        )

    def _invertibility_guard(self, tol: float):
        if self.m != self.n:
            raise NotSquare(f"inversion needs a square matrix, got {self.m}x{self.n}")
        sv1, sv2 = self.component_singular_values()
        smallest = (float(sv1[-1]), float(sv2[-1]))
        condition = tuple(
            float("inf") if lo == 0.0 else float(hi / lo)
            for hi, lo in ((sv1[0], sv1[-1]), (sv2[0], sv2[-1]))
        )
        det_report = self.det().classify(tol)
        bad = set(det_report.vanishing_components)
        for k, cond in enumerate(condition, start=1):
            if cond > CONDITION_LIMIT:
                bad.add(k)
        if bad:
            raise SingularOperator(sorted(bad), smallest, condition)

    def solve(self, b: TVector, tol: float = DEFAULT_SINGULAR_TOL) -> TVector:
        """Solve T x = b by solving the two complex component systems."""
        if b.n != self.m:
            raise DimensionMismatch(f"right-hand side dimension {b.n} != {self.m}")
        self._invertibility_guard(tol)
        pair = self.split()
        bp = b.split()
        u1 = np.linalg.solve(pair.M1, bp.v1)
        u2 = np.linalg.solve(pair.M2, bp.v2)
        return TVector.from_split(u1, u2)

    def invert(self, tol: float = DEFAULT_SINGULAR_TOL) -> "TMatrix":
        """The inverse operator, with hat components M1^-1, M2^-1."""
        self._invertibility_guard(tol)
        pair = self.split()
        return TMatrix.from_hat(np.linalg.inv(pair.M1), np.linalg.inv(pair.M2))

    # file form --------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "entries": self._coeffs.reshape(self.m * self.n, 4).tolist(),
        }

    @classmethod
    def from_json(cls, data) -> "TMatrix":
        m, n = int(data["m"]), int(data["n"])
        entries = np.array(data["entries"], dtype=np.float64)
        if entries.shape != (m * n, 4):
            raise ValueError(f"expected {m * n} entries of 4 reals, got shape {entries.shape}")
        return cls(entries.reshape(m, n, 4))


def sampled_sup_norm(T: TMatrix, samples: int = 4096, seed: int = 0, refine_steps: int = 0) -> float:
    """Estimate sup over the unit sphere of |Tx| / sqrt(2) by random sampling.

    Works through the real block form of the operator, never through the hat
    decomposition, so it is an independent evaluation path for the closed-form
    norm.  Directions are drawn uniformly on the coefficient sphere; the best
    candidate is optionally sharpened by power iteration on R^T R.  Every
    evaluation is a genuine unit-vector ratio, so the estimate can only
    approach the true supremum from below.
    """
    R = real_block_matrix(T.coeffs)
    dim = R.shape[1]
    rng = np.random.default_rng(seed)
    best = 0.0
    best_x = None
    remaining = int(samples)
    while remaining > 0:
        batch = min(remaining, 200_000)
        X = rng.standard_normal((batch, dim))
        lengths = np.linalg.norm(X, axis=1)
        lengths[lengths == 0.0] = 1.0
        X /= lengths[:, None]
        values = np.linalg.norm(X @ R.T, axis=1)
        k = int(np.argmax(values))
        if values[k] > best:
            best = float(values[k])
            best_x = X[k].copy()
        remaining -= batch
    if refine_steps > 0 and best_x is not None:
        x = best_x
        for _ in range(refine_steps):
            y = R @ x
            z = R.T @ y
            length = np.linalg.norm(z)
            if length == 0.0:
                break
            x = z / length
            best = max(best, float(np.linalg.norm(R @ x)))
    return best / SQRT2
