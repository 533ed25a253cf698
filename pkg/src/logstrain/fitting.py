"""Experimental-data ingestion and one-parameter fits.

CSV format: header ``lambda,t`` for uniaxial data (stretch, Biot stress) or
``gamma,sigma12`` for shear data; lines starting with ``#`` are comments.
Rows are sorted by abscissa on ingestion and duplicate abscissae averaged.

Two uniaxial models are fitted, each with the shear modulus G as the only
parameter: the incompressible-limit law ``t = 3 G ln(lambda)`` (closed-form
least squares) and the constrained-energy law ``t = G ln(lambda)
(2 + lambda**-1.5)`` (golden-section search on G).
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateData

__all__ = ["DataSet", "FitResult", "read_dataset", "dataset_from_rows",
           "fit_dataset", "model_curve", "FIT_MODES"]

FIT_MODES = ("uniaxial-incompressible", "uniaxial-hyper")

_HEADERS = {
    ("lambda", "t"): "uniaxial",
    ("gamma", "sigma12"): "shear",
}


@dataclass(frozen=True)
class DataSet:
    """Measured (abscissa, stress) rows of one experiment."""

    x: np.ndarray
    y: np.ndarray
    kind: str  # "uniaxial" or "shear"
    source: str = ""

    def __len__(self):
        return len(self.x)


@dataclass(frozen=True)
class FitResult:
    """Fitted shear modulus with residual diagnostics."""

    g: float
    rms: float
    residuals: np.ndarray
    model: str


def dataset_from_rows(rows, kind, source=""):
    """Build a data set from (x, y) pairs: sort, average duplicates."""
    if kind not in ("uniaxial", "shear"):
        raise ValueError(f"unknown data kind {kind!r}")
    pairs = [(float(x), float(y)) for x, y in rows]
    if not pairs:
        raise DegenerateData(f"no data rows in {source or 'input'}")
    if kind == "uniaxial" and any(x <= 0.0 for x, _ in pairs):
        raise ValueError("stretches must be positive")
    merged = {}
    for x, y in pairs:
        merged.setdefault(x, []).append(y)
    xs = np.array(sorted(merged))
    ys = np.array([np.mean(merged[x]) for x in xs])
    return DataSet(x=xs, y=ys, kind=kind, source=source)


def read_dataset(path):
    """Read a CSV data file, inferring the kind from the header."""
    with open(path, newline="") as fh:
        lines = [ln for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    reader = csv.reader(lines)
    try:
        header = tuple(c.strip().lower() for c in next(reader))
    except StopIteration:
        raise DegenerateData(f"{path}: empty file") from None
    kind = _HEADERS.get(header)
    if kind is None:
        raise ValueError(
            f"{path}: header must be 'lambda,t' or 'gamma,sigma12', "
            f"got {','.join(header)!r}")
    rows = []
    for rec in reader:
        if len(rec) != 2:
            raise ValueError(f"{path}: expected 2 columns, got {rec!r}")
        rows.append((float(rec[0]), float(rec[1])))
    return dataset_from_rows(rows, kind, source=str(path))


def _phi_incompressible(lam):
    return 3.0 * np.log(lam)


def _phi_hyper(lam):
    return np.log(lam) * (2.0 + lam ** -1.5)


def model_curve(mode, g, xs):
    """Model stresses at the given stretches for a fitted modulus."""
    xs = np.asarray(xs, dtype=float)
    if mode == "uniaxial-incompressible":
        return g * _phi_incompressible(xs)
    if mode == "uniaxial-hyper":
        return g * _phi_hyper(xs)
    raise ValueError(f"unknown fit mode {mode!r}")


def _golden_minimize(f, lo, hi, iterations=200):
    """Golden-section minimum of a unimodal scalar function on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iterations):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
        if abs(b - a) <= 1e-14 * max(1.0, abs(a), abs(b)):
            break
    return 0.5 * (a + b)


def fit_dataset(ds: DataSet, mode):
    """Fit the shear modulus of a uniaxial model to a data set.

    The incompressible mode solves the one-parameter least squares in
    closed form, ``G = sum(t_i 3 ln lam_i) / sum((3 ln lam_i)**2)``; the
    hyper mode minimizes the sum of squares by golden-section search.

    Raises
    ------
    DegenerateData
        Fewer than the required rows, or all stretches equal to 1 (the
        regressor vanishes identically and G is undetermined).
    """
    if mode not in FIT_MODES:
        raise ValueError(f"unknown fit mode {mode!r}; expected {FIT_MODES}")
    if ds.kind != "uniaxial":
        raise ValueError(f"{mode} fit needs uniaxial data, got {ds.kind}")
    if len(ds) < 1:
        raise DegenerateData("no data rows")
    phi = (_phi_incompressible if mode == "uniaxial-incompressible"
           else _phi_hyper)(ds.x)
    denom = float(phi @ phi)
    if denom == 0.0:
        raise DegenerateData(
            "all stretches equal 1; the modulus is undetermined")
    g_closed = float(ds.y @ phi) / denom

    if mode == "uniaxial-incompressible":
        g = g_closed
    else:
        def sse(g_try):
            r = ds.y - g_try * phi
            return float(r @ r)

        half_width = max(1.0, abs(g_closed))
        g = _golden_minimize(sse, g_closed - half_width,
                             g_closed + half_width)
    residuals = ds.y - g * phi
    rms = math.sqrt(float(residuals @ residuals) / len(ds))
    return FitResult(g=g, rms=rms, residuals=residuals, model=mode)
