"""Closed-form r-harmonicity conditions for helices in space forms.

All solving happens on squared curvatures.  Rational input stays exact:
quadratic roots come back as :class:`~polyfrenet.exact.Surd` values and square
roots of curvatures are only taken when a result is displayed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .exact import Surd, as_exact, exact_record, surd_sqrt

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"


@dataclass
class ClassificationResult:
    """Outcome of a classifier.

    ``solutions`` is a list of dicts.  Point solutions name squared
    curvatures (``kappa_sq``, ``tau_sq``, ``kappa_sq_3``, ...); family
    solutions carry a ``relation`` string.  A ``degenerate`` flag marks roots
    that are not genuine Frenet curves (a vanishing curvature).
    """

    theorem: str
    status: str
    solutions: list = field(default_factory=list)
    inputs: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    def proper_solutions(self) -> list:
        return [s for s in self.solutions if not s.get("degenerate")]

    def to_json(self) -> dict:
        sols = []
        for s in self.solutions:
            rec = {}
            for key, val in s.items():
                if isinstance(val, (int, Fraction, Surd, float)) and not isinstance(val, bool):
                    rec[key] = exact_record(val)
                else:
                    rec[key] = val
            sols.append(rec)
        return {
            "theorem": self.theorem,
            "inputs": {k: _plain(v) for k, v in self.inputs.items()},
            "status": self.status,
            "solutions": sols,
            "notes": list(self.notes),
        }


def _plain(v):
    if isinstance(v, (Fraction, Surd)):
        return str(v)
    if isinstance(v, tuple):
        return [_plain(x) for x in v]
    return v


def _status(solutions) -> str:
    return FEASIBLE if any(not s.get("degenerate") for s in solutions) else INFEASIBLE


# -- 2-Frenet ----------------------------------------------------------------


def classify_2frenet(c, eps1: int, eps2: int, r: int, surface: bool = False) -> ClassificationResult:
    """Helices with one curvature: proper r-harmonic iff ``k^2 = eps2 (r-1) c``.

    With ``surface=True`` the curve lives on a Lorentz surface, which forces
    ``eps1 eps2 = -1``; for a space-like curve the value becomes ``-(r-1)c``.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    c = as_exact(c)
    if surface and eps1 * eps2 != -1:
        raise ValueError("a non-degenerate curve on a Lorentz surface has eps1*eps2 = -1")
    K = eps2 * (r - 1) * c
    sols = [{"kappa_sq": K}] if K > 0 else []
    res = ClassificationResult(
        "two-frenet-surface" if surface else "two-frenet-helix",
        _status(sols),
        sols,
        {"c": c, "eps": (eps1, eps2), "r": r, "surface": surface},
    )
    if not sols:
        res.notes.append(f"eps2*(r-1)*c = {K} is not positive")
    return res


def classify_triharmonic_2frenet(c, eps2: int) -> ClassificationResult:
    """Proper triharmonic 2-Frenet curves: need ``eps2 c > 0`` and then ``k^2 = 2 eps2 c``."""
    c = as_exact(c)
    sols = [{"kappa_sq": 2 * eps2 * c}] if eps2 * c > 0 else []
    return ClassificationResult("two-frenet-triharmonic", _status(sols), sols, {"c": c, "eps2": eps2})


# -- 3-Frenet ----------------------------------------------------------------


def three_frenet_quadratic(c, eps1, eps2, eps3, r, kappa_sq):
    """Monic coefficients ``(b, c0)`` of ``x^2 + b x + c0 = 0`` for ``x = tau^2``, ``r >= 3``.

    This is the bracket ``eps2 S^2 - c(eps1 eps3 x + (r-1) K)`` with
    ``S = eps1 K + eps3 x``, multiplied through by ``eps2``.
    """
    K = kappa_sq
    b = 2 * eps1 * eps3 * K - eps2 * c * eps1 * eps3
    c0 = K * K - eps2 * c * (r - 1) * K
    return b, c0


def quadratic_roots(b, c0) -> list:
    """Real roots of ``x^2 + b x + c0`` as surds, ascending, duplicates merged."""
    disc = Fraction(b) * b - 4 * Fraction(c0)
    if disc < 0:
        return []
    if disc == 0:
        return [Surd(Fraction(-b, 2))]
    root = surd_sqrt(disc)
    lo = (Surd(-b) - root) * Fraction(1, 2)
    hi = (Surd(-b) + root) * Fraction(1, 2)
    return [lo, hi]


def three_frenet_tau_sq(c, eps, r, kappa_sq) -> list:
    """Candidate ``tau^2`` values for fixed ``kappa^2``, before sign filtering.

    Returns ``(value, origin)`` pairs where origin is ``"bracket"``,
    ``"linear"`` or ``"null-sum"`` (the family ``eps1 k^2 + eps3 tau^2 = 0``).
    """
    e1, e2, e3 = eps
    K = as_exact(kappa_sq)
    c = as_exact(c)
    out = []
    if r == 2:
        out.append((Surd(e3 * (c * e1 * e2 - e1 * K)), "linear"))
    else:
        out.extend((x, "bracket") for x in quadratic_roots(*three_frenet_quadratic(c, e1, e2, e3, r, K)))
    if r >= 4 or c == 0:
        out.append((Surd(-e1 * e3 * K), "null-sum"))
    seen, uniq = set(), []
    for x, origin in out:
        if x not in seen:
            seen.add(x)
            uniq.append((x, origin))
    return sorted(uniq, key=lambda p: float(p[0]))


def lorentz_case(c, eps2: int, r: int, kappa_sq) -> str | None:
    """Branch label of the Lorentzian 3-space case analysis, or ``None`` if not applicable."""
    if c == 0 or r < 3:
        return None
    if c > 0:
        if eps2 == -1:
            return "ii"
        return "i.a" if kappa_sq >= c * (r - 1) else "i.b"
    return "iii" if eps2 == 1 else "iv"


def lorentz_tau_sq(c, eps2: int, r: int, kappa_sq) -> list:
    """``tau^2`` roots of the Lorentzian 3-space cases, transcribed branch by branch.

    Independent of :func:`three_frenet_quadratic`; used to cross-check it when
    ``eps3 = -eps1 eps2``.  The ``kappa^2 = tau^2`` family is not included.
    """
    c, K = as_exact(c), as_exact(kappa_sq)
    case = lorentz_case(c, eps2, r, K)
    if case is None:
        raise ValueError("needs c != 0 and r >= 3")
    if case == "ii":
        return []
    if case == "iv":
        if K > -c * (r - 1):
            return []
        return [(Surd(-2 * K - c) + surd_sqrt(c * c - 4 * c * (r - 2) * K)) * Fraction(1, 2)]
    disc = c * c + 4 * c * (r - 2) * K
    if case == "iii" and K > Fraction(-c, 4 * (r - 2)):
        return []
    plus = (Surd(2 * K - c) + surd_sqrt(disc)) * Fraction(1, 2)
    if case == "i.b":
        return [plus]
    minus = (Surd(2 * K - c) - surd_sqrt(disc)) * Fraction(1, 2)
    return sorted({minus, plus}, key=float)


def classify_3frenet(c, eps1: int, eps2: int, eps3: int, r: int, kappa_sq=None) -> ClassificationResult:
    """Proper r-harmonic 3-Frenet helices in a space form of curvature ``c``.

    Without ``kappa_sq`` the result describes the solution set by its
    defining relations.  With ``kappa_sq`` it lists every admissible ``tau^2``
    in ascending order; ``tau^2 = 0`` roots are kept but flagged degenerate,
    negative roots are dropped.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    c = as_exact(c)
    eps = (eps1, eps2, eps3)
    inputs = {"c": c, "eps": eps, "r": r}
    lorentz = eps3 == -eps1 * eps2
    if kappa_sq is None:
        return ClassificationResult("three-frenet-helix", _family_status(c, eps, r), _families(c, eps, r), inputs)

    K = as_exact(kappa_sq)
    inputs["kappa_sq"] = K
    sols = []
    for x, origin in three_frenet_tau_sq(c, eps, r, K):
        if x < 0:
            continue
        rec = {"kappa_sq": K, "tau_sq": x, "origin": origin}
        if x == 0:
            rec["degenerate"] = True
            rec["reason"] = "tau^2 = 0: not a 3-Frenet curve"
        sols.append(rec)
    res = ClassificationResult("three-frenet-helix", _status(sols), sols, inputs)
    if lorentz:
        case = lorentz_case(c, eps2, r, K)
        if case is not None:
            res.notes.append(f"lorentz-case {case}")
            for s in sols:
                s["case"] = case
    return res


def _families(c, eps, r) -> list:
    e1, e2, e3 = eps
    fams = []
    if r == 2:
        fams.append({"relation": f"{e2}*({e1}*kappa^2 + {e3}*tau^2) = {c * e1}"})
    else:
        fams.append({
            "relation": f"{e2}*({e1}*kappa^2 + {e3}*tau^2)^2 = {c}*({e1 * e3}*tau^2 + {r - 1}*kappa^2)"
        })
    if r >= 4 or c == 0:
        fams.append({"relation": f"{e1}*kappa^2 + {e3}*tau^2 = 0", "nonempty": e1 * e3 == -1})
    return fams


def _family_status(c, eps, r) -> str:
    """Whether the relations admit some ``kappa^2, tau^2 > 0``.

    With ``K = kappa^2`` the bracket quadratic has discriminant
    ``c^2 + 4 eps2 c (r-2) K``, root sum ``-2 eps1 eps3 K + eps2 c eps1 eps3``
    and product ``K^2 - eps2 c (r-1) K``.  Reading off signs, a positive
    ``tau^2`` exists for some ``K > 0`` exactly when ``eps1 eps3 = -1`` or
    ``eps2 c > 0``; the linear case ``r = 2`` obeys the same rule.
    """
    e1, e2, e3 = eps
    return FEASIBLE if e1 * e3 == -1 or e2 * c > 0 else INFEASIBLE


def is_3frenet_solution(c, eps, r, kappa_sq, tau_sq) -> bool:
    """Classifier verdict for one ``(kappa^2, tau^2)`` point with positive entries."""
    x = Surd(as_exact(tau_sq))
    return any(x == root for root, _ in three_frenet_tau_sq(c, eps, r, kappa_sq))


# -- n-Frenet, n >= 4 --------------------------------------------------------


def classify_nfrenet_biharmonic(sig, c=None, kappa_sq=None, full: bool = True, curvature=None) -> ClassificationResult:
    """Proper biharmonic ``n``-Frenet curves, ``n >= 4``.

    In a space form the curve must be a helix with
    ``eps1 k1^2 + eps3 k2^2 = c eps1 eps2`` and ``eps3 k2 k3 = 0``, so no full
    curve qualifies.  With ``kappa_sq`` the given squares are checked; with
    ``curvature`` (any frame curvature table) the general system is returned
    symbolically instead.
    """
    eps = tuple(sig)
    n = len(eps)
    if n < 4:
        raise ValueError("needs n >= 4")
    inputs = {"eps": eps, "c": c}
    if curvature is not None:
        system = biharmonic_system(eps, curvature)
        return ClassificationResult(
            "n-frenet-biharmonic-general", FEASIBLE, [{"system": [str(e) for e in system]}], inputs,
            ["conditions returned symbolically; feasibility depends on the table"],
        )
    c = as_exact(c)
    e1, e2, e3 = eps[:3]
    relation = f"{e1}*k1^2 + {e3}*k2^2 = {c * e1 * e2}, k3 = 0"
    if kappa_sq is not None:
        K = [as_exact(k) for k in kappa_sq]
        inputs["kappa_sq"] = tuple(K)
        ok = K[0] > 0 and K[1] > 0 and e1 * K[0] + e3 * K[1] == c * e1 * e2 and K[2] == 0
        sols = [{"kappa_sq": tuple(K)}] if ok else []
        return ClassificationResult("n-frenet-biharmonic", _status(sols), sols, inputs)
    if full:
        res = ClassificationResult("n-frenet-biharmonic", INFEASIBLE, [], inputs)
        res.notes.append("full curves have k3 > 0, but eps3 k2 k3 = 0 is required")
        return res
    sols = [{"relation": relation, "nonempty": _two_term_nonempty(e1, e3, c * e1 * e2)}]
    return ClassificationResult(
        "n-frenet-biharmonic", FEASIBLE if sols[0]["nonempty"] else INFEASIBLE, sols, inputs
    )


def _two_term_nonempty(a, b, rhs) -> bool:
    """Whether ``a x + b y = rhs`` has a solution with ``x, y > 0`` (``a, b = +-1``)."""
    if a == b:
        return a * rhs > 0
    return True


def biharmonic_system(eps, curvature) -> list:
    """The five biharmonicity conditions against a curvature table, as sympy equations.

    ``<R(F_2,F_1)F_1, F_j> = eps_j * coef_j`` where ``coef`` is the table's
    frame expansion.  Symbols: ``k1, k2, k3`` and the derivatives ``dk1, dk2``.
    """
    n = len(eps)
    k1, k2, k3, dk1, dk2 = sympy.symbols("k1 k2 k3 dk1 dk2")
    coef = curvature.frame_curvature(2, 1, 1, eps)
    g = [sympy.nsimplify(eps[j] * coef[j]) for j in range(n)]
    e1, e3 = eps[0], eps[2]
    system = [
        sympy.Eq(dk1, 0),
        sympy.Eq(e1 * k1**2 + e3 * k2**2, g[1]),
        sympy.Eq(dk2, -g[2]),
        sympy.Eq(e3 * k2 * k3, -g[3]),
    ]
    system.extend(sympy.Eq(g[i], 0) for i in range(4, n))
    return system


def triharmonic_equations(n: int, eps, c, K) -> tuple:
    """Residuals ``(lhs - rhs)`` of the two triharmonicity equations for n = 4 or 5."""
    e = eps
    S = e[0] * K[0] + e[2] * K[1]
    eq1 = S * S + e[1] * e[3] * K[1] * K[2] - c * e[0] * e[1] * (2 * e[0] * K[0] + e[2] * K[1])
    if n == 4:
        eq2 = e[1] * S + e[2] * e[3] * K[2] - c * e[0]
    else:
        eq2 = e[1] * S + e[3] * (e[2] * K[2] + e[4] * K[3]) - c * e[0]
    return eq1, eq2


def classify_nfrenet_triharmonic(n: int, sig, c, kappa_sq) -> ClassificationResult:
    """Triharmonic 4- and 5-Frenet helices in ``N^n_t(c)``.

    ``kappa_sq`` has ``n - 1`` entries; at most one may be ``None``.  A missing
    value is solved from the second (linear) equation and then the first
    equation is checked.
    """
    if n not in (4, 5):
        raise ValueError("only n = 4 or 5 are covered")
    eps = tuple(sig)
    if len(eps) != n or len(kappa_sq) != n - 1:
        raise ValueError("signature and curvature lengths must match n")
    c = as_exact(c)
    K = [None if k is None else as_exact(k) for k in kappa_sq]
    inputs = {"n": n, "eps": eps, "c": c, "kappa_sq": tuple(K)}
    missing = [i for i, k in enumerate(K) if k is None]
    if len(missing) > 1:
        raise ValueError("at most one squared curvature may be left unknown")
    if missing:
        i = missing[0]
        # eq2 is affine in each K_i with coefficient +-1
        K[i] = 0
        base = triharmonic_equations(n, eps, c, K)[1]
        K[i] = 1
        slope = triharmonic_equations(n, eps, c, K)[1] - base
        if isinstance(base, (int, Fraction)) and isinstance(slope, (int, Fraction)):
            K[i] = Fraction(-base) / slope
            if K[i].denominator == 1:
                K[i] = K[i].numerator
        else:
            K[i] = -base / slope
    eq1, eq2 = triharmonic_equations(n, eps, c, K)
    ok = eq1 == 0 and eq2 == 0 and all(k > 0 for k in K)
    sols = [{"kappa_sq": tuple(K)}] if ok else []
    res = ClassificationResult(f"n-frenet-triharmonic-{n}", _status(sols), sols, inputs)
    if not ok:
        res.notes.append(f"residuals {eq1}, {eq2}; curvatures {tuple(str(k) for k in K)}")
    return res
