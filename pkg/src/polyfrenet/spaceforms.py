"""Semi-Riemannian space forms R^m_t, S^m_t(c) and H^m_t(c).

Curvature convention: ``R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z``,
which for a space form of curvature ``c`` gives::

    R(X, Y)Z = c (<Y,Z> X - <X,Z> Y)

Curved models are realized as quadrics ``<x,x> = 1/c`` in R^{m+1}_t (c > 0)
or R^{m+1}_{t+1} (c < 0).  Along such a quadric the ambient derivative of a
tangent field splits as ``D_T Y = nabla_T Y - c <T,Y> x``, obtained by
differentiating ``<Y, x> = 0``.

Any object exposing ``frame_curvature(a, b, c, eps)`` can act as the
curvature of a geometry for the tension oracle; it returns the frame
coefficients of ``R(F_a, F_b)F_c`` (1-based indices).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .metric import inner_product, metric_diag

QUADRIC_TOL = 1e-8


class OffModelError(ValueError):
    """Raised when a point is not on the model quadric."""


def curvature_on_frame(sf, sig, a: int, b: int, cc: int) -> tuple:
    """Coefficients of ``R(F_a, F_b)F_c`` in a space form.

    ``sf`` is a :class:`SpaceForm` or a bare curvature value ``c``; ``sig`` is
    a :class:`Signature` or a plain sign tuple.  Returns
    ``c (eps_b delta_bc e_a - eps_a delta_ac e_b)``.
    """
    c = sf.c if isinstance(sf, SpaceForm) else sf
    eps = tuple(sig)
    n = len(eps)
    for idx in (a, b, cc):
        if not 1 <= idx <= n:
            raise IndexError(f"frame index {idx} outside 1..{n}")
    out = [0] * n
    if b == cc:
        out[a - 1] = out[a - 1] + c * eps[b - 1]
    if a == cc:
        out[b - 1] = out[b - 1] - c * eps[a - 1]
    return tuple(out)


@dataclass(frozen=True)
class SpaceForm:
    """Space form ``N^m_t(c)`` with its embedded chart."""

    m: int
    t: int
    c: object = 0

    def __post_init__(self):
        if not 1 <= self.t <= self.m - 1:
            raise ValueError(f"index t={self.t} outside 1..m-1 for m={self.m}")

    @property
    def kind(self) -> str:
        if self.c == 0:
            return "flat"
        return "sphere" if self.c > 0 else "hyperbolic"

    # -- frame level ---------------------------------------------------------
    def frame_curvature(self, a: int, b: int, cc: int, eps) -> tuple:
        return curvature_on_frame(self.c, eps, a, b, cc)

    # -- embedded chart ------------------------------------------------------
    @property
    def ambient_dim(self) -> int:
        return self.m if self.c == 0 else self.m + 1

    @property
    def ambient_index(self) -> int:
        return self.t + 1 if self.kind == "hyperbolic" else self.t

    def ambient_metric(self) -> np.ndarray:
        return metric_diag(self.ambient_dim, self.ambient_index)

    def inner(self, x, y):
        return inner_product(x, y, self.ambient_index)

    def base_point(self) -> np.ndarray:
        """A convenient point on the model (origin, or a pole of the quadric)."""
        p = np.zeros(self.ambient_dim)
        if self.kind == "sphere":
            p[-1] = 1.0 / math.sqrt(float(self.c))
        elif self.kind == "hyperbolic":
            p[0] = 1.0 / math.sqrt(-float(self.c))
        return p

    def tangent_basis(self, p: np.ndarray | None = None) -> list[np.ndarray]:
        """Orthonormal coordinate basis of the tangent space at :meth:`base_point`."""
        p = self.base_point() if p is None else p
        basis = []
        for i in range(self.ambient_dim):
            e = np.zeros(self.ambient_dim)
            e[i] = 1.0
            if self.kind != "flat" and abs(self.inner(e, p)) > 0:
                continue
            basis.append(e)
        return basis

    def defect(self, x) -> float:
        """``|<x,x> - 1/c|`` for curved models, 0 for the flat chart."""
        if self.kind == "flat":
            return 0.0
        return float(abs(self.inner(x, x) - 1.0 / float(self.c)))

    def embedded_connection(self, point, X, dX, tol: float = QUADRIC_TOL) -> np.ndarray:
        """Covariant derivative from the ambient derivative ``dX`` of a tangent field.

        Removes the normal (position) component so the result is tangent to
        the quadric.  ``X`` is accepted for symmetry with the chart API; the
        projection only needs ``dX`` and the point.
        """
        dX = np.asarray(dX, dtype=float)
        if self.kind == "flat":
            return dX
        point = np.asarray(point, dtype=float)
        if self.defect(point) > tol * max(1.0, abs(1.0 / float(self.c))):
            raise OffModelError(f"point off the quadric by {self.defect(point):.3e}")
        return dX - float(self.c) * self.inner(dX, point) * point

    def normal_term(self, point, T, Y) -> np.ndarray:
        """Second-fundamental-form part of ``D_T Y``: ``-c <T,Y> x``."""
        if self.kind == "flat":
            return np.zeros_like(np.asarray(point, dtype=float))
        return -float(self.c) * self.inner(T, Y) * np.asarray(point, dtype=float)

    def ambient_curvature(self, point, X, Y, Z) -> np.ndarray:
        """``R(X,Y)Z`` for tangent vectors given in ambient coordinates."""
        if self.kind == "flat":
            return np.zeros_like(np.asarray(X, dtype=float))
        c = float(self.c)
        return c * (self.inner(Y, Z) * np.asarray(X) - self.inner(X, Z) * np.asarray(Y))


def embedded_connection(sf: SpaceForm, point, X, dX) -> np.ndarray:
    return sf.embedded_connection(point, X, dX)
