"""Ingredient catalog: internal-energy integrands F, potentials (V, W), Young pairs (c, c*).

The admissible internal energies are those making the internal energy
displacement convex: F(0) = 0 with x -> x^n F(x^(-n)) convex and
non-increasing.  Both built-in families (Boltzmann x*ln x and power
x^gamma/(gamma-1) with gamma >= 1 - 1/n) satisfy this; user-supplied
closures can be validated numerically with :func:`admissibility_check`.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.special import xlogy

from .errors import DomainError, WindowError
from .measures import Grid1D, gradient

__all__ = [
    "EntropyModel",
    "PotentialPair",
    "YoungPair",
    "admissibility_check",
    "modulus_check",
    "make_young",
    "numeric_conjugate",
    "parse_expression",
    "zero_potential",
]


# ---------------------------------------------------------------------------
# internal energies
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EntropyModel:
    """Internal-energy integrand F with its pressure P_F(x) = x F'(x) - F(x).

    kind is "boltzmann" (F = x ln x), "power" (F = x^gamma/(gamma-1)) or
    "custom" (user closures ``f`` and ``df``).  ``dim_n`` is the ambient
    dimension entering both the admissibility condition and the combinations
    -n P_F and G_F(x) = (1-n) F(x) + n x F'(x).
    """

    kind: str
    gamma: Optional[float] = None
    dim_n: int = 1
    f: Optional[Callable] = None
    df: Optional[Callable] = None

    def __post_init__(self):
        if self.dim_n < 1:
            raise DomainError("dim_n must be a positive integer")
        if self.kind == "power":
            if self.gamma is None or self.gamma == 1.0:
                raise DomainError("power entropy needs gamma != 1")
            if self.gamma < 1.0 - 1.0 / self.dim_n:
                raise DomainError(
                    f"gamma={self.gamma} below admissible 1 - 1/n = {1 - 1/self.dim_n}"
                )
        elif self.kind == "custom":
            if self.f is None or self.df is None:
                raise DomainError("custom entropy needs closures f and df")
        elif self.kind != "boltzmann":
            raise DomainError(f"unknown entropy kind {self.kind!r}")

    @classmethod
    def boltzmann(cls, dim_n: int = 1) -> "EntropyModel":
        return cls("boltzmann", dim_n=dim_n)

    @classmethod
    def power(cls, gamma: float, dim_n: int = 1) -> "EntropyModel":
        return cls("power", gamma=gamma, dim_n=dim_n)

    # -- pointwise evaluations (vectorized, x >= 0) -------------------------

    def _check_nonneg(self, x: np.ndarray):
        if np.any(x < 0):
            raise DomainError("entropy integrand defined for x >= 0 only")

    def F(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        self._check_nonneg(x)
        if self.kind == "boltzmann":
            return xlogy(x, x)
        if self.kind == "power":
            g = self.gamma
            return np.power(x, g) / (g - 1.0)
        return np.asarray(self.f(x), dtype=float)

    def dF(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if np.any(x <= 0):
            raise DomainError("F' requires x > 0")
        if self.kind == "boltzmann":
            return 1.0 + np.log(x)
        if self.kind == "power":
            g = self.gamma
            return g / (g - 1.0) * np.power(x, g - 1.0)
        return np.asarray(self.df(x), dtype=float)

    def PF(self, x) -> np.ndarray:
        """Pressure x F'(x) - F(x), extended by 0 at x = 0."""
        x = np.asarray(x, dtype=float)
        self._check_nonneg(x)
        if self.kind == "boltzmann":
            return x * 1.0
        if self.kind == "power":
            return np.power(x, self.gamma)
        flat = np.atleast_1d(x)
        out = np.zeros_like(flat)
        pos = flat > 0
        xp = flat[pos]
        out[pos] = xp * np.asarray(self.df(xp)) - np.asarray(self.f(xp))
        return out.reshape(x.shape) if x.ndim else float(out[0])

    def GF(self, x) -> np.ndarray:
        """(1-n) F(x) + n x F'(x) = F(x) + n P_F(x)."""
        return self.F(x) + self.dim_n * self.PF(x)

    def inv_dF(self, y) -> np.ndarray:
        """Inverse of F' on (0, oo), with out-of-range y mapped to 0.

        For gamma < 1 the range of F' is the negative half-line, so y >= 0
        has no finite preimage; callers (the reference-density solver) must
        keep y negative there.
        """
        y = np.asarray(y, dtype=float)
        if self.kind == "boltzmann":
            return np.exp(y - 1.0)
        if self.kind == "power":
            g = self.gamma
            t = np.atleast_1d((g - 1.0) / g * y)
            if g > 1:
                out = np.power(np.maximum(t, 0.0), 1.0 / (g - 1.0))
            else:
                out = np.full_like(t, np.inf)
                ok = t > 0  # i.e. y < 0
                out[ok] = np.power(t[ok], 1.0 / (g - 1.0))
            return out.reshape(y.shape) if y.ndim else float(out[0])
        raise DomainError("inv_dF is available for built-in entropies only")


def admissibility_check(m: EntropyModel) -> tuple[bool, dict]:
    """Sample A(x) = x^n F(x^(-n)) on a log lattice; require convex and non-increasing.

    Convexity is tested as monotonicity of chord slopes (valid on any
    lattice); returns diagnostics with the worst violations.
    """
    xs = np.logspace(-3, 3, 601)
    n = m.dim_n
    A = xs**n * m.F(xs ** (-float(n)))
    slopes = np.diff(A) / np.diff(xs)
    convex_viol = float(np.min(np.diff(slopes))) if len(slopes) > 1 else 0.0
    decr_viol = float(np.max(np.diff(A)))
    ok = convex_viol >= -1e-9 and decr_viol <= 1e-9
    return ok, {
        "min_slope_increase": convex_viol,
        "max_first_difference": decr_viol,
        "lattice": (1e-3, 1e3, len(xs)),
    }


# ---------------------------------------------------------------------------
# potentials
# ---------------------------------------------------------------------------


def zero_potential(x):
    return np.zeros_like(np.asarray(x, dtype=float))


@dataclass(frozen=True)
class PotentialPair:
    """Confinement V with D^2 V >= lam and even interaction W with D^2 W >= nu.

    ``W = None`` means no interaction (nu must then be 0).  Statements with a
    renamed confinement (U, mu) are instantiated by passing V := U, lam := mu.
    """

    V: Callable = zero_potential
    lam: float = 0.0
    W: Optional[Callable] = None
    nu: float = 0.0

    def __post_init__(self):
        if self.W is None and self.nu != 0.0:
            raise DomainError("nu must be 0 when W is absent")
        if self.W is not None:
            z = np.linspace(-5.0, 5.0, 101)
            if not np.allclose(self.W(z), self.W(-z), rtol=0, atol=1e-10):
                raise DomainError("interaction potential W must be even")

    def validate(self, grid: Grid1D) -> bool:
        """Moduli hold on this grid: V'' >= lam and W'' >= nu nodewise."""
        ok = modulus_check(self.V, self.lam, grid)
        if self.W is not None:
            ok = ok and modulus_check(self.W, self.nu, grid)
        return ok


def modulus_check(f: Callable, m: float, grid: Grid1D) -> bool:
    """True iff the central second difference of f is >= m - 1e-6 at interior nodes."""
    vals = np.asarray(f(grid.x), dtype=float)
    h = grid.h
    second = (vals[2:] - 2 * vals[1:-1] + vals[:-2]) / h**2
    return bool(np.min(second) >= m - 1e-6)


# ---------------------------------------------------------------------------
# Young pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class YoungPair:
    """Young function c with conjugate c*(y) = sup_z (y z - c(z)).

    ``p`` is the homogeneity degree of c* when it has one (c*(t y) = t^p c*(y)),
    ``q`` its conjugate exponent.  ``dc_star`` is the closed-form derivative of
    c* when available; otherwise gradients of c* fall back to central
    differences.
    """

    c: Callable
    c_star: Callable
    p: Optional[float] = None
    q: Optional[float] = None
    dc_star: Optional[Callable] = None
    label: str = "custom"

    def grad_c_star(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=float)
        if self.dc_star is not None:
            return self.dc_star(y)
        eps = 1e-6 * np.maximum(1.0, np.abs(y))
        return (self.c_star(y + eps) - self.c_star(y - eps)) / (2 * eps)


def _conjugate_exponent(p: float) -> float:
    return p / (p - 1.0)


def make_young(kind: str, **params) -> YoungPair:
    """Built-in Young pairs with closed-form conjugates.

    kind="quadratic": c = |x|^2/(2 sigma),      c* = sigma |y|^2 / 2
    kind="power_pls": c = (p-1)|x|^q,           c* = |y|^p / p^p
    kind="power_gn":  c = (rgamma/q)|x|^q,      c* = |y|^p / (p rgamma^(p-1))
    """
    if kind == "quadratic":
        sigma = float(params.get("sigma", 1.0))
        if sigma <= 0:
            raise DomainError("quadratic Young pair needs sigma > 0")
        return YoungPair(
            c=lambda x: np.asarray(x, dtype=float) ** 2 / (2 * sigma),
            c_star=lambda y: sigma * np.asarray(y, dtype=float) ** 2 / 2,
            p=2.0,
            q=2.0,
            dc_star=lambda y: sigma * np.asarray(y, dtype=float),
            label=f"quadratic(sigma={sigma})",
        )
    if kind == "power_pls":
        p = float(params["p"])
        if p <= 1:
            raise DomainError("power_pls Young pair needs p > 1")
        q = _conjugate_exponent(p)
        return YoungPair(
            c=lambda x, q=q, p=p: (p - 1.0) * np.abs(x) ** q,
            c_star=lambda y, p=p: np.abs(y) ** p / p**p,
            p=p,
            q=q,
            dc_star=lambda y, p=p: np.sign(y) * np.abs(y) ** (p - 1.0) / p ** (p - 1.0),
            label=f"power_pls(p={p})",
        )
    if kind == "power_gn":
        p = float(params["p"])
        rgamma = float(params["rgamma"])
        if p <= 1 or rgamma <= 0:
            raise DomainError("power_gn Young pair needs p > 1 and rgamma > 0")
        q = _conjugate_exponent(p)
        return YoungPair(
            c=lambda x, q=q, rg=rgamma: (rg / q) * np.abs(x) ** q,
            c_star=lambda y, p=p, rg=rgamma: np.abs(y) ** p / (p * rg ** (p - 1.0)),
            p=p,
            q=q,
            dc_star=lambda y, p=p, rg=rgamma: np.sign(y)
            * np.abs(y) ** (p - 1.0)
            / rg ** (p - 1.0),
            label=f"power_gn(p={p}, rgamma={rgamma})",
        )
    raise DomainError(f"unknown Young pair kind {kind!r}")


def numeric_conjugate(c: Callable, y: float, halfwidth: float = 8.0) -> float:
    """sup_z (y z - c(z)) by lattice search with two refinement passes.

    The search window grows until the sup is attained strictly inside; a
    superlinearity probe rejects c with sublinear growth (no finite sup).
    """
    H = halfwidth
    cH2, cH, c2H = (float(np.asarray(c(np.array([z])))[0]) for z in (H / 2, H, 2 * H))
    if (c2H - cH) / H <= (cH - cH2) / (H / 2) + 1e-12:
        raise DomainError("c does not grow superlinearly; conjugate may be infinite")
    for attempt in range(8):
        zmax = halfwidth * 2**attempt
        zs = np.linspace(-zmax, zmax, 4001)
        vals = y * zs - np.asarray(c(zs), dtype=float)
        k = int(np.argmax(vals))
        if 0 < k < len(zs) - 1:
            for _ in range(2):
                step = zs[1] - zs[0]
                zs = np.linspace(zs[k] - step, zs[k] + step, 401)
                vals = y * zs - np.asarray(c(zs), dtype=float)
                k = int(np.argmax(vals))
            return float(vals[k])
    raise WindowError(
        f"conjugate sup not attained inside search window for y={y}; "
        "c may be sublinear or the window too small"
    )


# ---------------------------------------------------------------------------
# expression strings for config-defined potentials
# ---------------------------------------------------------------------------

_ALLOWED_FUNCS = {"abs": np.abs, "exp": np.exp, "ln": np.log}
_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)
_ALLOWED_UNARY = (ast.USub, ast.UAdd)


def _validate_node(node: ast.AST, names: set):
    if isinstance(node, ast.Expression):
        _validate_node(node.body, names)
    elif isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
        _validate_node(node.left, names)
        _validate_node(node.right, names)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op, _ALLOWED_UNARY):
        _validate_node(node.operand, names)
    elif isinstance(node, ast.Call):
        if not (isinstance(node.func, ast.Name) and node.func.id in _ALLOWED_FUNCS):
            raise DomainError("only abs, exp, ln calls are allowed in expressions")
        if len(node.args) != 1 or node.keywords:
            raise DomainError("expression functions take exactly one argument")
        _validate_node(node.args[0], names)
    elif isinstance(node, ast.Name):
        if node.id not in names:
            raise DomainError(f"unknown variable {node.id!r} in expression")
    elif isinstance(node, ast.Constant):
        if not isinstance(node.value, (int, float)):
            raise DomainError("only numeric constants are allowed")
    else:
        raise DomainError(f"disallowed syntax in expression: {type(node).__name__}")


def parse_expression(expr: str, **params) -> Callable:
    """Compile an expression in x (operators + - * / ^, abs, exp, ln) to a vectorized closure.

    Extra keyword parameters (e.g. ``l`` for a modulus) are bound as constants.
    """
    src = expr.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"cannot parse expression {expr!r}: {exc}") from exc
    names = {"x"} | set(params)
    _validate_node(tree, names)
    code = compile(tree, "<expression>", "eval")
    env = dict(_ALLOWED_FUNCS)
    env.update({k: float(v) for k, v in params.items()})

    def fn(x, _code=code, _env=env):
        local = dict(_env)
        local["x"] = np.asarray(x, dtype=float)
        return np.asarray(eval(_code, {"__builtins__": {}}, local), dtype=float)

    return fn
