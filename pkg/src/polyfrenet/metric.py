"""Indefinite inner products, frame signatures and non-degenerate Gram-Schmidt.

The ambient metric is always the diagonal model with ``t`` minus signs
followed by ``m - t`` plus signs.  Curved geometries enter elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

# |<w,w>| below DEGENERACY_TOL * |v|^2 counts as a null direction
DEGENERACY_TOL = 1e-10


class SignatureError(ValueError):
    """Raised when a sign pattern cannot live in the requested ambient space."""


class DegenerateSpanError(ValueError):
    """Raised when a leading span carries a degenerate restricted metric."""


@dataclass(frozen=True)
class Signature:
    """Sign pattern ``eps`` of an orthonormal frame inside an index-``t`` metric.

    ``ambient_dim`` is the dimension ``m`` of the ambient space.  Construction
    never raises so that :func:`validate_signature` can report on bad input;
    call :meth:`check` to enforce the invariants.
    """

    eps: tuple[int, ...]
    ambient_index: int
    ambient_dim: int

    @classmethod
    def of(cls, eps: Sequence[int], t: int | None = None, m: int | None = None) -> "Signature":
        """Build a signature, picking the smallest admissible ambient if not given."""
        eps = tuple(int(e) for e in eps)
        neg = sum(1 for e in eps if e == -1)
        if m is None:
            m = len(eps)
            if t is None:
                t = max(neg, 1)
            if t < 1 or t > m - 1 or len(eps) - neg > m - t:
                m = len(eps) + 1
        if t is None:
            t = max(neg, 1)
        return cls(eps, int(t), int(m))

    @property
    def n(self) -> int:
        return len(self.eps)

    @property
    def negatives(self) -> int:
        return sum(1 for e in self.eps if e == -1)

    @property
    def positives(self) -> int:
        return sum(1 for e in self.eps if e == 1)

    def check(self) -> "Signature":
        problems = validate_signature(self)
        if problems:
            raise SignatureError("; ".join(problems))
        return self

    def __getitem__(self, i: int) -> int:
        return self.eps[i]

    def __len__(self) -> int:
        return len(self.eps)

    def __iter__(self):
        return iter(self.eps)


def validate_signature(sig: Signature) -> list[str]:
    """Return the list of violated invariants; an empty list means accepted."""
    problems = []
    bad = [e for e in sig.eps if e not in (-1, 1)]
    if bad:
        problems.append(f"entries must be -1 or +1, got {bad}")
    m, t = sig.ambient_dim, sig.ambient_index
    if not 1 <= t <= m - 1:
        problems.append(f"index t={t} outside 1..m-1 for m={m}")
    if sig.n > m:
        problems.append(f"frame length n={sig.n} exceeds ambient dimension m={m}")
    if sig.negatives > t:
        problems.append(f"{sig.negatives} time-like entries but index t={t}")
    if sig.positives > m - t:
        problems.append(f"{sig.positives} space-like entries but m-t={m - t}")
    return problems


def metric_diag(m: int, t: int) -> np.ndarray:
    """Diagonal of the model metric of index ``t`` on R^m."""
    if not 0 <= t <= m:
        raise ValueError(f"index t={t} outside 0..{m}")
    d = np.ones(m)
    d[:t] = -1.0
    return d


def inner_product(x, y, t: int):
    """Pseudo-Euclidean product ``-sum_{i<=t} x_i y_i + sum_{i>t} x_i y_i``.

    Works on plain sequences (exact for ints and Fractions) as well as numpy
    arrays; the trailing axis is the coordinate axis.
    """
    if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
        x = np.asarray(x)
        y = np.asarray(y)
        if x.shape[-1] != y.shape[-1]:
            raise ValueError(f"dimension mismatch: {x.shape[-1]} vs {y.shape[-1]}")
        if not 0 <= t <= x.shape[-1]:
            raise ValueError(f"index t={t} outside 0..{x.shape[-1]}")
        prod = x * y
        return prod[..., t:].sum(axis=-1) - prod[..., :t].sum(axis=-1)
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    if not 0 <= t <= len(x):
        raise ValueError(f"index t={t} outside 0..{len(x)}")
    return sum(a * b for a, b in zip(x[t:], y[t:])) - sum(a * b for a, b in zip(x[:t], y[:t]))


def gram_schmidt_nondegenerate(vectors, t: int, tol: float = DEGENERACY_TOL):
    """Orthonormalize an ordered non-degenerate basis for the index-``t`` metric.

    Returns ``(frame, sig)`` with ``<E_i, E_j> = eps_i delta_ij`` and
    ``span(E_1..E_k) = span(v_1..v_k)`` for every k.

    Raises
    ------
    DegenerateSpanError
        If some projected vector is (numerically) null, i.e. the leading span
        is degenerate and no orthonormal basis with the span property exists.
    """
    frame: list[np.ndarray] = []
    eps: list[int] = []
    m = None
    for k, v in enumerate(vectors):
        v = np.asarray(v, dtype=float)
        m = v.shape[0] if m is None else m
        if v.shape[0] != m:
            raise ValueError("vectors must share one dimension")
        w = v.copy()
        # modified Gram-Schmidt: project against the running remainder
        for e, E in zip(eps, frame):
            w = w - e * inner_product(w, E, t) * E
        q = inner_product(w, w, t)
        scale = float(np.dot(v, v))
        if scale == 0.0 or abs(q) < tol * scale:
            raise DegenerateSpanError(
                f"vector {k} leaves a degenerate span (<w,w>={q:.3e}, |v|^2={scale:.3e})"
            )
        frame.append(w / np.sqrt(abs(q)))
        eps.append(1 if q > 0 else -1)
    return frame, Signature.of(eps, t=t, m=m if m is not None else 0)
