"""Randomized, seeded property suites over the scalar, module, operator, and
functional layers.

Each check draws its inputs from a stream derived from (seed, check id),
evaluates a violation measure through the same kernels the library uses, and
reports the worst value together with a witness, the inputs that produced
it.  Replaying a witness re-evaluates the identical code path, so reports
are reproducible bit for bit given the seed (timing aside).

No check asserts more than the finite-dimensional truth of the statement it
exercises: quantities that are only measured (never guaranteed) live in the
functionals module, not here.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._arrays import SQRT2, hat_merge, hat_split, mul4, norm4, vec_norm4
from .errors import UnknownCheckId
from .functionals import TFunctional, hahn_banach_extend, lift_real
from .operators import TMatrix
from .scalar import Bicomplex
from .tmodule import TVector

CHECK_IDS = (
    "ring-axioms",
    "submult",
    "norm-identity",
    "scalar-homogeneity",
    "translation-invariance",
    "homeomorphism-Ta",
    "homeomorphism-Mlambda",
    "ubp",
    "continuity-bounded",
    "limit-operator",
    "bxy-complete",
    "open-mapping",
    "closed-graph",
    "two-metric",
    "total-family",
    "hahn-banach",
    "norm-sandwich",
    "compose-norm",
)

_DEFAULT_TRIALS = {
    "ring-axioms": 100_000,
    "submult": 1_000_000,
    "norm-identity": 1_000_000,
    "scalar-homogeneity": 100_000,
    "translation-invariance": 50_000,
    "homeomorphism-Ta": 50_000,
    "homeomorphism-Mlambda": 20_000,
    "ubp": 60,
    "continuity-bounded": 200,
    "limit-operator": 60,
    "bxy-complete": 60,
    "open-mapping": 150,
    "closed-graph": 200,
    "two-metric": 100,
    "total-family": 400,
    "hahn-banach": 150,
    "norm-sandwich": 400,
    "compose-norm": 400,
}

_DEFAULT_TOL = {
    "ring-axioms": 1e-13,
    "submult": 1e-12,
    "norm-identity": 1e-12,
    "scalar-homogeneity": 1e-12,
    "translation-invariance": 1e-12,
    "homeomorphism-Ta": 1e-12,
    "homeomorphism-Mlambda": 1e-9,
    "ubp": 1e-10,
    "continuity-bounded": 1e-9,
    "limit-operator": 1e-10,
    "bxy-complete": 1e-10,
    "open-mapping": 1e-9,
    "closed-graph": 1e-10,
    "two-metric": 1e-10,
    "total-family": 1e-10,
    "hahn-banach": 1e-10,
    "norm-sandwich": 1e-10,
    "compose-norm": 1e-10,
}


@dataclass(frozen=True)
class CheckConfig:
    """Fully resolved configuration for one check run."""

    check_id: str
    seed: int = 42
    trials: int = 1
    dims: tuple[int, int] = (1, 8)
    tol: float = 1e-10

    def __post_init__(self):
        if self.check_id not in CHECK_IDS:
            raise UnknownCheckId(f"unknown check id {self.check_id!r}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not (self.tol > 0.0):
            raise ValueError("tol must be positive")
        lo, hi = self.dims
        if not (1 <= lo <= hi):
            raise ValueError(f"invalid dimension range {self.dims}")


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check: pass iff worst_value is within the bound."""

    check_id: str
    passed: bool
    worst_value: float
    bound: float
    worst_witness: dict
    trials_run: int
    elapsed: float

    def to_json(self, include_elapsed: bool = False) -> dict:
        out = {
            "check_id": self.check_id,
            "pass": self.passed,
            "worst_value": self.worst_value,
            "bound": self.bound,
            "trials_run": self.trials_run,
            "worst_witness": self.worst_witness,
        }
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return out


def default_config(
    check_id: str,
    seed: int = 42,
    trials: int | None = None,
    dims: tuple[int, int] = (1, 8),
    tol: float | None = None,
) -> CheckConfig:
    """Configuration with the per-check default trial count and tolerance."""
    if check_id not in CHECK_IDS:
        raise UnknownCheckId(f"unknown check id {check_id!r}")
    return CheckConfig(
        check_id=check_id,
        seed=seed,
        trials=_DEFAULT_TRIALS[check_id] if trials is None else trials,
        dims=dims,
        tol=_DEFAULT_TOL[check_id] if tol is None else tol,
    )


def _rng_for(seed: int, check_id: str) -> np.random.Generator:
    index = CHECK_IDS.index(check_id)
    return np.random.default_rng([int(seed) & 0xFFFFFFFFFFFFFFFF, index])


class _Best:
    """Accumulates the worst (largest) violation and its witness."""

    def __init__(self):
        self.value = -np.inf
        self.witness: dict = {}

    def update(self, values: np.ndarray, make_witness: Callable[[int], dict]):
        values = np.atleast_1d(np.asarray(values, dtype=np.float64))
        if values.size == 0:
            return
        k = int(np.argmax(values))
        v = float(values[k])
        if v > self.value:
            self.value = v
            self.witness = make_witness(k)

    def update_one(self, value: float, witness: dict):
        if value > self.value:
            self.value = float(value)
            self.witness = witness


def _dim_schedule(trials: int, dims: tuple[int, int]) -> list[tuple[int, int]]:
    """Spread trials over the dimension range, at least one per dimension."""
    lo, hi = dims
    sizes = list(range(lo, hi + 1))
    base = max(1, trials // len(sizes))
    schedule = [(n, base) for n in sizes]
    assigned = base * len(sizes)
    if assigned < trials:
        n, cnt = schedule[-1]
        schedule[-1] = (n, cnt + trials - assigned)
    return schedule


def _uniform4(rng, count: int) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, (count, 4))


def _uniform_vectors(rng, count: int, n: int) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, (count, n, 4))


def _random_matrix(rng, m: int, n: int) -> TMatrix:
    return TMatrix(rng.uniform(-1.0, 1.0, (m, n, 4)))


def _random_unitary(rng, n: int) -> np.ndarray:
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, _ = np.linalg.qr(A)
    return q


def _conditioned_matrix(rng, n: int, lo: float = 0.4, hi: float = 2.0) -> TMatrix:
    """Bijective operator whose component singular values lie in [lo, hi]."""
    comps = []
    for _ in range(2):
        s = rng.uniform(lo, hi, n)
        comps.append(_random_unitary(rng, n) @ np.diag(s) @ _random_unitary(rng, n).conj().T)
    return TMatrix.from_hat(comps[0], comps[1])


def _nonsingular_scalars(rng, count: int, min_mag: float = 1e-3) -> np.ndarray:
    out = np.empty((count, 4))
    filled = 0
    while filled < count:
        cand = rng.uniform(-1.0, 1.0, (count - filled, 4))
        h1, h2 = hat_split(cand)
        ok = (np.abs(h1) >= min_mag) & (np.abs(h2) >= min_mag)
        good = cand[ok]
        out[filled : filled + good.shape[0]] = good
        filled += good.shape[0]
    return out


def _hat_norm(C: np.ndarray) -> np.ndarray:
    h1, h2 = hat_split(C)
    return np.sqrt((np.abs(h1) ** 2 + np.abs(h2) ** 2) / 2.0)


_E1_ROW = np.array([0.5, 0.0, 0.0, 0.5])
_IDENTITY_SCALAR = np.array([1.0, 0.0, 0.0, 0.0])


# --- ring-axioms -------------------------------------------------------------


def _idempotent_identity_violation() -> float:
    e1 = _E1_ROW
    e2 = np.array([0.5, 0.0, 0.0, -0.5])
    devs = [
        np.max(np.abs(mul4(e1, e1) - e1)),
        np.max(np.abs(mul4(e2, e2) - e2)),
        np.max(np.abs(mul4(e1, e2))),
        np.max(np.abs(e1 + e2 - _IDENTITY_SCALAR)),
    ]
    return float(max(devs))


def _ring_axiom_values(part: str, S, T, U) -> np.ndarray:
    if part == "mul-associative":
        return np.max(np.abs(mul4(mul4(S, T), U) - mul4(S, mul4(T, U))), axis=-1)
    if part == "mul-commutative":
        return np.max(np.abs(mul4(S, T) - mul4(T, S)), axis=-1)
    if part == "distributive":
        return np.max(np.abs(mul4(S, T + U) - (mul4(S, T) + mul4(S, U))), axis=-1)
    if part == "add-associative":
        return np.max(np.abs((S + T) + U - (S + (T + U))), axis=-1)
    raise ValueError(f"unknown ring axiom part {part!r}")


def _run_ring_axioms(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    best.update_one(_idempotent_identity_violation(), {"part": "idempotent-identities"})
    S = _uniform4(rng, cfg.trials)
    T = _uniform4(rng, cfg.trials)
    U = _uniform4(rng, cfg.trials)
    for part in ("mul-associative", "mul-commutative", "distributive", "add-associative"):
        values = _ring_axiom_values(part, S, T, U)
        best.update(
            values,
            lambda k, part=part: {
                "part": part,
                "s": S[k].tolist(),
                "t": T[k].tolist(),
                "u": U[k].tolist(),
            },
        )
    return best, cfg.trials


def _replay_ring_axioms(witness: dict) -> float:
    if witness["part"] == "idempotent-identities":
        return _idempotent_identity_violation()
    S = np.array([witness["s"]])
    T = np.array([witness["t"]])
    U = np.array([witness["u"]])
    return float(_ring_axiom_values(witness["part"], S, T, U)[0])


# --- submult -----------------------------------------------------------------


def _submult_values(S, T) -> np.ndarray:
    denom = norm4(S) * norm4(T)
    denom = np.where(denom == 0.0, 1.0, denom)
    return norm4(mul4(S, T)) / denom


def _run_submult(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    S = np.concatenate([_uniform4(rng, cfg.trials), _E1_ROW[None, :]])
    T = np.concatenate([_uniform4(rng, cfg.trials), _E1_ROW[None, :]])
    values = _submult_values(S, T)
    best.update(values, lambda k: {"s": S[k].tolist(), "t": T[k].tolist()})
    return best, cfg.trials + 1


def _replay_submult(witness: dict) -> float:
    return float(_submult_values(np.array([witness["s"]]), np.array([witness["t"]]))[0])


# --- norm-identity -----------------------------------------------------------


def _norm_identity_values(W) -> np.ndarray:
    n = norm4(W)
    return np.abs(n - _hat_norm(W)) / (1.0 + n)


def _run_norm_identity(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    W = _uniform4(rng, cfg.trials)
    best.update(_norm_identity_values(W), lambda k: {"w": W[k].tolist()})
    return best, cfg.trials


def _replay_norm_identity(witness: dict) -> float:
    return float(_norm_identity_values(np.array([witness["w"]]))[0])


# --- scalar-homogeneity --------------------------------------------------------


def _homogeneity_values(part: str, A, X) -> np.ndarray:
    # A: (N, 4) scalar coefficients, X: (N, n, 4) vectors
    scaled = mul4(A[:, None, :], X)
    nx = vec_norm4(X)
    na = norm4(A)
    ns = vec_norm4(scaled)
    if part == "complex-exact":
        return np.abs(ns - na * nx) / (1.0 + na * nx)
    if part == "ring-bound":
        return (ns - SQRT2 * na * nx) / (1.0 + SQRT2 * na * nx)
    if part == "attainment":
        denom = na * nx
        ratio = np.where(denom > 0.0, ns / np.where(denom == 0.0, 1.0, denom), SQRT2)
        return np.abs(ratio - SQRT2)
    raise ValueError(f"unknown homogeneity part {part!r}")


def _run_scalar_homogeneity(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    total = 0
    for n, count in _dim_schedule(cfg.trials, cfg.dims):
        X = _uniform_vectors(rng, count, n)
        z = rng.uniform(-1.0, 1.0, (count, 2))
        A_complex = np.zeros((count, 4))
        A_complex[:, :2] = z
        W = _uniform4(rng, count)
        G = _uniform_vectors(rng, count, n)
        X_ideal = mul4(_E1_ROW, G)
        A_e1 = np.broadcast_to(_E1_ROW, (count, 4))
        for part, A, V in (
            ("complex-exact", A_complex, X),
            ("ring-bound", W, X),
            ("attainment", A_e1, X_ideal),
        ):
            values = _homogeneity_values(part, A, V)
            best.update(
                values,
                lambda k, part=part, A=A, V=V: {
                    "part": part,
                    "alpha": A[k].tolist(),
                    "x": V[k].tolist(),
                },
            )
        total += count
    return best, total


def _replay_scalar_homogeneity(witness: dict) -> float:
    A = np.array([witness["alpha"]])
    X = np.array([witness["x"]])
    return float(_homogeneity_values(witness["part"], A, X)[0])


# --- translation-invariance ----------------------------------------------------


def _translation_values(part: str, X, Y, A) -> np.ndarray:
    if part == "metric-shift":
        before = vec_norm4(X - Y)
        after = vec_norm4((X + A) - (Y + A))
        return np.abs(after - before) / (1.0 + before)
    if part == "fnorm-definition":
        fnorm = vec_norm4(X)
        at_zero = vec_norm4(X - np.zeros_like(X))
        return np.abs(fnorm - at_zero)
    raise ValueError(f"unknown translation-invariance part {part!r}")


def _run_translation_invariance(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    total = 0
    for n, count in _dim_schedule(cfg.trials, cfg.dims):
        X = _uniform_vectors(rng, count, n)
        Y = _uniform_vectors(rng, count, n)
        A = _uniform_vectors(rng, count, n)
        for part in ("metric-shift", "fnorm-definition"):
            best.update(
                _translation_values(part, X, Y, A),
                lambda k, part=part: {
                    "part": part,
                    "x": X[k].tolist(),
                    "y": Y[k].tolist(),
                    "a": A[k].tolist(),
                },
            )
        total += count
    return best, total


def _replay_translation_invariance(witness: dict) -> float:
    return float(
        _translation_values(
            witness["part"],
            np.array([witness["x"]]),
            np.array([witness["y"]]),
            np.array([witness["a"]]),
        )[0]
    )


# --- homeomorphism-Ta ------------------------------------------------------------


def _ta_values(part: str, A, X, Y) -> np.ndarray:
    if part == "isometry":
        before = vec_norm4(X - Y)
        after = vec_norm4((A + X) - (A + Y))
        return np.abs(after - before) / (1.0 + before)
    if part == "roundtrip":
        back = (X + A) - A
        return vec_norm4(back - X) / (1.0 + vec_norm4(X) + vec_norm4(A))
    raise ValueError(f"unknown translation part {part!r}")


def _run_homeomorphism_ta(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    total = 0
    for n, count in _dim_schedule(cfg.trials, cfg.dims):
        A = _uniform_vectors(rng, count, n)
        X = _uniform_vectors(rng, count, n)
        Y = _uniform_vectors(rng, count, n)
        for part in ("isometry", "roundtrip"):
            best.update(
                _ta_values(part, A, X, Y),
                lambda k, part=part: {
                    "part": part,
                    "a": A[k].tolist(),
                    "x": X[k].tolist(),
                    "y": Y[k].tolist(),
                },
            )
        total += count
    return best, total


def _replay_homeomorphism_ta(witness: dict) -> float:
    return float(
        _ta_values(
            witness["part"],
            np.array([witness["a"]]),
            np.array([witness["x"]]),
            np.array([witness["y"]]),
        )[0]
    )


# --- homeomorphism-Mlambda ---------------------------------------------------------


def _mlambda_values(part: str, L, X, component: int = 2) -> np.ndarray:
    if part == "roundtrip":
        h1, h2 = hat_split(L)
        Linv = hat_merge(1.0 / h1, 1.0 / h2)
        back = mul4(Linv[:, None, :], mul4(L[:, None, :], X))
        return vec_norm4(back - X) / (1.0 + vec_norm4(X))
    if part == "collapse":
        scaled = mul4(L[:, None, :], X)
        h1, h2 = hat_split(scaled)
        dead = h1 if component == 1 else h2
        return np.sqrt(np.sum(np.abs(dead) ** 2, axis=-1)) / (1.0 + vec_norm4(X))
    raise ValueError(f"unknown multiplication part {part!r}")


def _run_homeomorphism_mlambda(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    total = 0
    for n, count in _dim_schedule(cfg.trials, cfg.dims):
        L = _nonsingular_scalars(rng, count)
        X = _uniform_vectors(rng, count, n)
        best.update(
            _mlambda_values("roundtrip", L, X),
            lambda k: {"part": "roundtrip", "lam": L[k].tolist(), "x": X[k].tolist()},
        )
        # singular multipliers with an exactly vanishing hat component
        h = rng.uniform(-1.0, 1.0, count) + 1j * rng.uniform(-1.0, 1.0, count)
        zeros = np.zeros_like(h)
        for component, Ls in ((1, hat_merge(zeros, h)), (2, hat_merge(h, zeros))):
            best.update(
                _mlambda_values("collapse", Ls, X, component),
                lambda k, component=component, Ls=Ls: {
                    "part": "collapse",
                    "component": component,
                    "lam": Ls[k].tolist(),
                    "x": X[k].tolist(),
                },
            )
        total += count
    return best, total


def _replay_homeomorphism_mlambda(witness: dict) -> float:
    return float(
        _mlambda_values(
            witness["part"],
            np.array([witness["lam"]]),
            np.array([witness["x"]]),
            witness.get("component", 2),
        )[0]
    )


# --- ubp ---------------------------------------------------------------------


def _ubp_value(family: list[TMatrix], x: TVector) -> float:
    bound = max(T.norms().sup_norm for T in family)
    worst = -np.inf
    for T in family:
        lhs = T.apply(x).norm()
        rhs = SQRT2 * bound * x.norm()
        worst = max(worst, (lhs - rhs) / (1.0 + rhs))
    return float(worst)


def _run_ubp(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        n = int(rng.integers(lo, hi + 1))
        family = [_random_matrix(rng, n, n) for _ in range(5)]
        fam_json = [T.to_json() for T in family]
        for _ in range(10):
            x = TVector(rng.uniform(-1.0, 1.0, (n, 4)))
            value = _ubp_value(family, x)
            best.update_one(value, {"family": fam_json, "x": x.to_json()})
    return best, cfg.trials


def _replay_ubp(witness: dict) -> float:
    family = [TMatrix.from_json(m) for m in witness["family"]]
    return _ubp_value(family, TVector.from_json(witness["x"]))


# --- continuity-bounded ----------------------------------------------------------


def _unit_ball_attainment_value(T: TMatrix) -> float:
    report = T.norms()
    pair = T.split()
    M = pair.M1 if report.s1 >= report.s2 else pair.M2
    _, _, vh = np.linalg.svd(M)
    v = np.conj(vh[0])
    if report.s1 >= report.s2:
        x = TVector.from_split(SQRT2 * v, np.zeros_like(v))
    else:
        x = TVector.from_split(np.zeros_like(v), SQRT2 * v)
    reached = T.apply(x).norm()
    target = SQRT2 * T.bound_constant()
    return abs(reached - target) / (1.0 + target)


def _no_exceed_value(T: TMatrix, x: TVector) -> float:
    rhs = SQRT2 * T.bound_constant() * x.norm()
    return float((T.apply(x).norm() - rhs) / (1.0 + rhs))


def _run_continuity_bounded(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        m = int(rng.integers(lo, hi + 1))
        n = int(rng.integers(lo, hi + 1))
        T = _random_matrix(rng, m, n)
        best.update_one(
            _unit_ball_attainment_value(T), {"part": "attain", "matrix": T.to_json()}
        )
        for _ in range(5):
            x = TVector(rng.uniform(-1.0, 1.0, (n, 4)))
            best.update_one(
                _no_exceed_value(T, x),
                {"part": "no-exceed", "matrix": T.to_json(), "x": x.to_json()},
            )
    return best, cfg.trials


def _replay_continuity_bounded(witness: dict) -> float:
    T = TMatrix.from_json(witness["matrix"])
    if witness["part"] == "attain":
        return _unit_ball_attainment_value(T)
    return _no_exceed_value(T, TVector.from_json(witness["x"]))


# --- limit-operator --------------------------------------------------------------


def _limit_operator_value(T: TMatrix, E: TMatrix) -> float:
    target = T.norms().sup_norm
    tail = [
        (T + E.scale(1.0 / n)).norms().sup_norm for n in range(21, 41)
    ]
    liminf_est = min(tail)
    return float((target - SQRT2 * liminf_est) / (1.0 + target))


def _run_limit_operator(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        n = int(rng.integers(lo, hi + 1))
        T = _random_matrix(rng, n, n)
        E = _random_matrix(rng, n, n)
        # keep the perturbation small relative to T so the finite tail stands
        # in for the true liminf
        sup_t = T.norms().sup_norm
        sup_e = E.norms().sup_norm
        if sup_e > 0.0:
            E = E.scale(0.5 * (sup_t + 1e-3) / sup_e)
        best.update_one(
            _limit_operator_value(T, E), {"t": T.to_json(), "e": E.to_json()}
        )
    return best, cfg.trials


def _replay_limit_operator(witness: dict) -> float:
    return _limit_operator_value(TMatrix.from_json(witness["t"]), TMatrix.from_json(witness["e"]))


# --- bxy-complete ----------------------------------------------------------------


def _bxy_complete_value(T: TMatrix, E: TMatrix) -> float:
    idem_e = E.norms().idem_norm
    idem_t = T.norms().idem_norm
    worst = -np.inf
    terms = {k: T + E.scale(2.0 ** (1 - k)) for k in (1, 5, 10, 20, 45)}
    for j in terms:
        for k in terms:
            if j >= k:
                continue
            measured = (terms[j] - terms[k]).norms().idem_norm
            bound = abs(2.0 ** (1 - j) - 2.0 ** (1 - k)) * idem_e
            worst = max(worst, (measured - bound) / (1.0 + idem_e))
    residual = (T - terms[45]).norms().idem_norm / (1.0 + idem_t)
    worst = max(worst, residual)
    for k, Tk in terms.items():
        drift = abs(Tk.norms().idem_norm - idem_t)
        allowance = (Tk - T).norms().idem_norm
        worst = max(worst, (drift - allowance) / (1.0 + idem_t))
    return float(worst)


def _run_bxy_complete(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        n = int(rng.integers(lo, hi + 1))
        T = _random_matrix(rng, n, n)
        E = _random_matrix(rng, n, n)
        best.update_one(_bxy_complete_value(T, E), {"t": T.to_json(), "e": E.to_json()})
    return best, cfg.trials


def _replay_bxy_complete(witness: dict) -> float:
    return _bxy_complete_value(TMatrix.from_json(witness["t"]), TMatrix.from_json(witness["e"]))


# --- open-mapping ----------------------------------------------------------------


def _open_mapping_value(T: TMatrix, y: TVector) -> float:
    x = T.solve(y)
    return float(x.norm() - 1.0)


def _run_open_mapping(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        n = int(rng.integers(lo, hi + 1))
        T = _conditioned_matrix(rng, n)
        sv1, sv2 = T.component_singular_values()
        radius = min(float(sv1[-1]), float(sv2[-1]))
        for _ in range(5):
            y = TVector(rng.uniform(-1.0, 1.0, (n, 4)))
            length = y.norm()
            if length == 0.0:
                continue
            y = y.scale(radius * float(rng.uniform(0.0, 1.0)) / length)
            best.update_one(
                _open_mapping_value(T, y), {"matrix": T.to_json(), "y": y.to_json()}
            )
    return best, cfg.trials


def _replay_open_mapping(witness: dict) -> float:
    return _open_mapping_value(
        TMatrix.from_json(witness["matrix"]), TVector.from_json(witness["y"])
    )


# --- closed-graph ----------------------------------------------------------------


def _closed_graph_value(T: TMatrix, x: TVector, p: TVector) -> float:
    xk = x + p.scale(2.0 ** -40)
    y_limit = T.apply(xk)
    at_x = T.apply(x)
    return float((at_x - y_limit).norm() / (1.0 + at_x.norm()))


def _run_closed_graph(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        n = int(rng.integers(lo, hi + 1))
        T = _random_matrix(rng, n, n)
        x = TVector(rng.uniform(-1.0, 1.0, (n, 4)))
        p = TVector(rng.uniform(-1.0, 1.0, (n, 4)))
        best.update_one(
            _closed_graph_value(T, x, p),
            {"matrix": T.to_json(), "x": x.to_json(), "p": p.to_json()},
        )
    return best, cfg.trials


def _replay_closed_graph(witness: dict) -> float:
    return _closed_graph_value(
        TMatrix.from_json(witness["matrix"]),
        TVector.from_json(witness["x"]),
        TVector.from_json(witness["p"]),
    )


# --- two-metric ------------------------------------------------------------------


def _two_metric_value(W: TMatrix, x: TVector, y: TVector) -> float:
    sv1, sv2 = W.component_singular_values()
    c_lo = min(float(sv1[-1]), float(sv2[-1]))
    c_hi = max(float(sv1[0]), float(sv2[0]))
    rho1 = (x - y).norm()
    rho2 = W.apply(x - y).norm()
    violation = max(c_lo * rho1 - rho2, rho2 - c_hi * rho1)
    return float(violation / (1.0 + rho1))


def _run_two_metric(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        n = int(rng.integers(lo, hi + 1))
        W = _conditioned_matrix(rng, n)
        for _ in range(5):
            x = TVector(rng.uniform(-1.0, 1.0, (n, 4)))
            y = TVector(rng.uniform(-1.0, 1.0, (n, 4)))
            best.update_one(
                _two_metric_value(W, x, y),
                {"w_matrix": W.to_json(), "x": x.to_json(), "y": y.to_json()},
            )
    return best, cfg.trials


def _replay_two_metric(witness: dict) -> float:
    return _two_metric_value(
        TMatrix.from_json(witness["w_matrix"]),
        TVector.from_json(witness["x"]),
        TVector.from_json(witness["y"]),
    )


# --- total-family ----------------------------------------------------------------


def _total_family_values(part: str, X) -> np.ndarray:
    # the family is the coordinate functionals; entries ARE the evaluations
    if part == "lower-bound":
        n = X.shape[1]
        biggest = np.max(norm4(X), axis=-1)
        total = vec_norm4(X)
        return (total / np.sqrt(n) - biggest) / (1.0 + total)
    if part == "stacked-rank":
        n = X.shape[1]
        s = np.linalg.svd(np.eye(n, dtype=np.complex128), compute_uv=False)
        return np.array([abs(float(s[-1]) - 1.0)])
    raise ValueError(f"unknown total-family part {part!r}")


def _run_total_family(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    total = 0
    for n, count in _dim_schedule(cfg.trials, cfg.dims):
        X = _uniform_vectors(rng, count, n)
        best.update(
            _total_family_values("lower-bound", X),
            lambda k: {"part": "lower-bound", "x": X[k].tolist()},
        )
        best.update(
            _total_family_values("stacked-rank", X[:1]),
            lambda k, n=n: {"part": "stacked-rank", "x": X[0].tolist()},
        )
        total += count
    return best, total


def _replay_total_family(witness: dict) -> float:
    return float(_total_family_values(witness["part"], np.array([witness["x"]]))[0])


# --- hahn-banach -----------------------------------------------------------------


def _hahn_banach_value(n: int, gen_rows: list, ystar_rows: list, w_row: list, x_rows: list) -> float:
    from .tmodule import Submodule

    gens = [TVector.from_json(g) for g in gen_rows]
    Y = Submodule(n, gens)
    ystar = TFunctional(TVector.from_json(ystar_rows))
    report = hahn_banach_extend(ystar, Y)

    y_idem = report.y_norms.idem_norm
    worst = report.restriction_error / (1.0 + y_idem)
    for yc, xc in zip(report.y_component_norms, report.x_component_norms):
        worst = max(worst, abs(xc - yc) / (1.0 + yc))

    # exact round trip through the real part of the extension
    ext = report.extension
    lifted = lift_real(ext.real_parts()[0])
    diff = (lifted.coeffs - ext.coeffs).norm() / (1.0 + ext.coeffs.norm())
    worst = max(worst, diff)

    # ring-linearity of the extension at a sampled scalar and vector
    w = Bicomplex(*w_row)
    x = TVector.from_json(x_rows)
    lhs = ext(x.scale(w))
    rhs = w * ext(x)
    worst = max(worst, (lhs - rhs).norm() / (1.0 + rhs.norm()))
    return float(worst)


def _run_hahn_banach(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        n = int(rng.integers(lo, hi + 1))
        count = int(rng.integers(1, n + 1))
        gen_rows = [rng.uniform(-1.0, 1.0, (n, 4)).tolist() for _ in range(count)]
        ystar_rows = rng.uniform(-1.0, 1.0, (n, 4)).tolist()
        w_row = rng.uniform(-1.0, 1.0, 4).tolist()
        x_rows = rng.uniform(-1.0, 1.0, (n, 4)).tolist()
        value = _hahn_banach_value(n, gen_rows, ystar_rows, w_row, x_rows)
        best.update_one(
            value,
            {
                "n": n,
                "generators": gen_rows,
                "ystar": ystar_rows,
                "w": w_row,
                "x": x_rows,
            },
        )
    return best, cfg.trials


def _replay_hahn_banach(witness: dict) -> float:
    return _hahn_banach_value(
        witness["n"], witness["generators"], witness["ystar"], witness["w"], witness["x"]
    )


# --- norm-sandwich ----------------------------------------------------------------


def _norm_sandwich_value(part: str, T: TMatrix) -> float:
    if part == "sandwich":
        r = T.norms()
        violation = max(r.sup_norm - r.idem_norm, r.idem_norm - SQRT2 * r.sup_norm)
        return float(violation / (1.0 + r.sup_norm))
    pair = T.split()
    if part == "left-attain":
        # one vanishing component: the two norms coincide
        one_sided = TMatrix.from_hat(pair.M1, np.zeros_like(pair.M2))
        r = one_sided.norms()
        return float(abs(r.sup_norm - r.idem_norm) / (1.0 + r.sup_norm))
    if part == "right-attain":
        # balanced components: idem equals sqrt(2) * sup
        balanced = TMatrix.from_hat(pair.M1, pair.M1)
        r = balanced.norms()
        return float(abs(r.idem_norm - SQRT2 * r.sup_norm) / (1.0 + r.sup_norm))
    raise ValueError(f"unknown sandwich part {part!r}")


def _run_norm_sandwich(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        m = int(rng.integers(lo, hi + 1))
        n = int(rng.integers(lo, hi + 1))
        T = _random_matrix(rng, m, n)
        for part in ("sandwich", "left-attain", "right-attain"):
            best.update_one(
                _norm_sandwich_value(part, T), {"part": part, "matrix": T.to_json()}
            )
    return best, cfg.trials


def _replay_norm_sandwich(witness: dict) -> float:
    return _norm_sandwich_value(witness["part"], TMatrix.from_json(witness["matrix"]))


# --- compose-norm -----------------------------------------------------------------


def _compose_norm_value(A: TMatrix, B: TMatrix) -> float:
    ra, rb, rab = A.norms(), B.norms(), (A @ B).norms()
    worst = -np.inf
    for prod, a, b in (
        (rab.sup_norm, ra.sup_norm, rb.sup_norm),
        (rab.idem_norm, ra.idem_norm, rb.idem_norm),
    ):
        bound = SQRT2 * a * b
        worst = max(worst, (prod - bound) / (1.0 + bound))
    return float(worst)


def _run_compose_norm(cfg: CheckConfig, rng) -> tuple[_Best, int]:
    best = _Best()
    lo, hi = cfg.dims
    for _ in range(cfg.trials):
        m = int(rng.integers(lo, hi + 1))
        k = int(rng.integers(lo, hi + 1))
        n = int(rng.integers(lo, hi + 1))
        A = _random_matrix(rng, m, k)
        B = _random_matrix(rng, k, n)
        best.update_one(_compose_norm_value(A, B), {"a": A.to_json(), "b": B.to_json()})
    return best, cfg.trials


def _replay_compose_norm(witness: dict) -> float:
    return _compose_norm_value(TMatrix.from_json(witness["a"]), TMatrix.from_json(witness["b"]))


# --- registry ---------------------------------------------------------------------


def _bound_for(check_id: str, tol: float) -> float:
    if check_id == "submult":
        return SQRT2 + tol
    return tol


_RUNNERS = {
    "ring-axioms": _run_ring_axioms,
    "submult": _run_submult,
    "norm-identity": _run_norm_identity,
    "scalar-homogeneity": _run_scalar_homogeneity,
    "translation-invariance": _run_translation_invariance,
    "homeomorphism-Ta": _run_homeomorphism_ta,
    "homeomorphism-Mlambda": _run_homeomorphism_mlambda,
    "ubp": _run_ubp,
    "continuity-bounded": _run_continuity_bounded,
    "limit-operator": _run_limit_operator,
    "bxy-complete": _run_bxy_complete,
    "open-mapping": _run_open_mapping,
    "closed-graph": _run_closed_graph,
    "two-metric": _run_two_metric,
    "total-family": _run_total_family,
    "hahn-banach": _run_hahn_banach,
    "norm-sandwich": _run_norm_sandwich,
    "compose-norm": _run_compose_norm,
}

_REPLAYERS = {
    "ring-axioms": _replay_ring_axioms,
    "submult": _replay_submult,
    "norm-identity": _replay_norm_identity,
    "scalar-homogeneity": _replay_scalar_homogeneity,
    "translation-invariance": _replay_translation_invariance,
    "homeomorphism-Ta": _replay_homeomorphism_ta,
    "homeomorphism-Mlambda": _replay_homeomorphism_mlambda,
    "ubp": _replay_ubp,
    "continuity-bounded": _replay_continuity_bounded,
    "limit-operator": _replay_limit_operator,
    "bxy-complete": _replay_bxy_complete,
    "open-mapping": _replay_open_mapping,
    "closed-graph": _replay_closed_graph,
    "two-metric": _replay_two_metric,
    "total-family": _replay_total_family,
    "hahn-banach": _replay_hahn_banach,
    "norm-sandwich": _replay_norm_sandwich,
    "compose-norm": _replay_compose_norm,
}


def run_check(cfg: CheckConfig) -> CheckReport:
    """Execute one named suite deterministically for (seed, trials)."""
    if cfg.check_id not in _RUNNERS:
        raise UnknownCheckId(f"unknown check id {cfg.check_id!r}")
    rng = _rng_for(cfg.seed, cfg.check_id)
    start = time.perf_counter()
    best, trials_run = _RUNNERS[cfg.check_id](cfg, rng)
    elapsed = time.perf_counter() - start
    bound = _bound_for(cfg.check_id, cfg.tol)
    return CheckReport(
        check_id=cfg.check_id,
        passed=bool(best.value <= bound),
        worst_value=float(best.value),
        bound=float(bound),
        worst_witness=best.witness,
        trials_run=trials_run,
        elapsed=elapsed,
    )


def replay_witness(check_id: str, witness: dict) -> float:
    """Re-evaluate a worst_witness through the same kernels that produced it."""
    if check_id not in _REPLAYERS:
        raise UnknownCheckId(f"unknown check id {check_id!r}")
    return _REPLAYERS[check_id](witness)


def run_all(
    seed: int = 42,
    trials: int | None = None,
    tol: float | None = None,
    dims: tuple[int, int] = (1, 8),
) -> list[CheckReport]:
    """Run every check with a shared configuration.  trials/tol of None select
    the per-check defaults; the aggregate pass flag is the conjunction."""
    return [
        run_check(default_config(check_id, seed=seed, trials=trials, dims=dims, tol=tol))
        for check_id in CHECK_IDS
    ]


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
