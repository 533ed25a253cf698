"""Stress measures and conversions between them.

A :class:`StressState` is a 3x3 stress tensor tagged with its measure and
the deformation gradient it refers to.  Conversions route through the
Cauchy stress using

    kirchhoff = det(F) * cauchy
    pk1       = det(F) * cauchy @ inv(F).T
    pk2       = det(F) * inv(F) @ cauchy @ inv(F).T
    biot      = U @ pk2 = R.T @ pk1

with F = R @ U the polar decomposition.  No symmetrization is applied
inside the conversions, so round trips are exact up to roundoff; for an
isotropic law the Biot, Cauchy, Kirchhoff and PK2 tensors all come out
symmetric, while PK1 is general.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NonInvertible
from .kinematics import DET_TOL, polar_decompose
from .tensors import as_mat3

__all__ = ["MEASURES", "StressState", "stress_convert"]

MEASURES = ("biot", "cauchy", "kirchhoff", "pk1", "pk2")


def _check_measure(measure):
    m = str(measure).lower()
    if m not in MEASURES:
        raise ValueError(f"unknown stress measure {measure!r}; "
                         f"expected one of {MEASURES}")
    return m


@dataclass(frozen=True)
class StressState:
    """A stress tensor, its measure, and the deformation it refers to."""

    tensor: np.ndarray
    measure: str
    deformation: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "tensor", as_mat3(self.tensor, "tensor"))
        object.__setattr__(self, "measure", _check_measure(self.measure))
        object.__setattr__(
            self, "deformation", as_mat3(self.deformation, "deformation"))


def _to_cauchy(t, measure, f):
    j = float(np.linalg.det(f))
    if j <= DET_TOL:
        raise NonInvertible(f"det F = {j:.6g} <= {DET_TOL:.6g}")
    if measure == "cauchy":
        return t
    if measure == "kirchhoff":
        return t / j
    if measure == "pk1":
        return (t @ f.T) / j
    if measure == "pk2":
        return (f @ t @ f.T) / j
    # biot: S2 = inv(U) @ T
    u = polar_decompose(f).u
    s2 = np.linalg.solve(u, t)
    return (f @ s2 @ f.T) / j


def _from_cauchy(sigma, measure, f):
    j = float(np.linalg.det(f))
    if measure == "cauchy":
        return sigma
    if measure == "kirchhoff":
        return j * sigma
    f_inv = np.linalg.inv(f)
    if measure == "pk1":
        return j * sigma @ f_inv.T
    s2 = j * f_inv @ sigma @ f_inv.T
    if measure == "pk2":
        return s2
    u = polar_decompose(f).u
    return u @ s2


def stress_convert(state, target):
    """Convert a stress state to another measure at the same deformation.

    Round trips reproduce the original tensor up to roundoff.

    Raises
    ------
    NonInvertible
        If the attached deformation gradient has non-positive determinant.
    """
    target = _check_measure(target)
    if target == state.measure:
        return StressState(state.tensor.copy(), target, state.deformation)
    sigma = _to_cauchy(state.tensor, state.measure, state.deformation)
    out = _from_cauchy(sigma, target, state.deformation)
    return StressState(out, target, state.deformation)
