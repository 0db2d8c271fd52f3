"""Seidel matrices, dense symmetric eigenvalues, energy, and an exact oracle.

The numeric path is a deterministic cyclic Jacobi sweep over a private
copy of the matrix; the exact path computes the integer characteristic
polynomial with the Faddeev-LeVerrier recurrence over Python big integers
and certifies integer eigenvalue multiplicities by repeated synthetic
division.  The two paths are independent on purpose: one checks the other.

Tolerances (module defaults):

* ``CONV_TOL``  -- Jacobi stops once the off-diagonal Frobenius mass drops
                   below CONV_TOL times the Frobenius norm of the input.
* ``NUM_TOL``   -- equality tolerance for eigenvalue comparisons.
* ``ZERO_TOL``  -- sign classification threshold for inertia, deliberately
                   looser than NUM_TOL so counts never flip on solver noise.
* ``GROUP_TOL`` -- clustering width when grouping eigenvalues into
                   (value, multiplicity) pairs.
"""

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph

__all__ = [
    "CONV_TOL",
    "NUM_TOL",
    "ZERO_TOL",
    "GROUP_TOL",
    "MAX_SWEEPS",
    "ConvergenceError",
    "Spectrum",
    "Inertia",
    "IntPolynomial",
    "adjacency_matrix",
    "seidel_matrix",
    "sym_eigenvalues",
    "spectrum_from_values",
    "seidel_spectrum",
    "seidel_energy",
    "seidel_inertia",
    "classify_inertia",
    "charpoly_exact",
    "integer_root_multiplicity",
    "format_values_grouped",
]

CONV_TOL = 1e-12
NUM_TOL = 1e-9
ZERO_TOL = 1e-7
GROUP_TOL = 1e-8
MAX_SWEEPS = 100

# Adjacent eigenvalue groups closer than this many widths get flagged as an
# ambiguous clustering.
_AMBIGUITY_FACTOR = 10


class ConvergenceError(RuntimeError):
    """Jacobi iteration failed to reach the requested off-diagonal mass."""

    def __init__(self, sweeps: int, residual: float, threshold: float):
        super().__init__(
            f"eigensolver did not converge in {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e}, target {threshold:.3e})")
        self.sweeps = sweeps
        self.residual = residual
        self.threshold = threshold


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Exact 0/1 adjacency matrix (loops on the diagonal), as int64."""
    return g.adj.astype(np.int64)


def seidel_matrix(g: Graph) -> np.ndarray:
    """Seidel matrix of a simple graph: J - I - 2A.

    Zero diagonal; -1 for adjacent pairs, +1 for non-adjacent pairs.
    """
    if not g.is_simple():
        raise ValueError("Seidel matrix is only defined for loop-free graphs")
    n = g.n
    j = np.ones((n, n), dtype=np.int64)
    return j - np.eye(n, dtype=np.int64) - 2 * adjacency_matrix(g)


# ---------------------------------------------------------------------------
# Spectrum / inertia value objects
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of a symmetric matrix, sorted descending.

    ``groups`` clusters the values into (representative, multiplicity)
    pairs; ``grouping_ambiguous`` is set when two adjacent groups sit
    closer than 10x the clustering width, i.e. when the multiplicity
    report should not be trusted blindly.
    """

    values: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]
    grouping_ambiguous: bool = False

    @property
    def n(self) -> int:
        return len(self.values)

    def energy(self) -> float:
        return math.fsum(abs(v) for v in self.values)

    def total(self) -> float:
        return math.fsum(self.values)

    def min_abs(self) -> float:
        return min(abs(v) for v in self.values)

    def format_grouped(self, digits: int = 12) -> str:
        parts = [f"{_fmt_value(v, digits)}^{mult}" for v, mult in self.groups]
        text = "{" + ", ".join(parts) + "}"
        if self.grouping_ambiguous:
            text += " [near-degenerate grouping]"
        return text

    def to_dict(self) -> dict:
        return {
            "values": list(self.values),
            "groups": [[v, m] for v, m in self.groups],
            "grouping_ambiguous": self.grouping_ambiguous,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Spectrum":
        return cls(values=tuple(d["values"]),
                   groups=tuple((v, m) for v, m in d["groups"]),
                   grouping_ambiguous=d["grouping_ambiguous"])


def _fmt_value(v: float, digits: int = 12) -> str:
    if abs(v - round(v)) <= NUM_TOL * max(1.0, abs(v)):
        return str(int(round(v)))
    return f"{v:.{digits}g}"


def format_values_grouped(values, group_tol: float = GROUP_TOL,
                          digits: int = 12) -> str:
    """Render any eigenvalue list in multiplicity-power notation."""
    return spectrum_from_values(values, group_tol).format_grouped(digits)


def _cluster(values_desc: np.ndarray, group_tol: float):
    groups = []
    start = 0
    for i in range(1, len(values_desc) + 1):
        if i == len(values_desc) or values_desc[i - 1] - values_desc[i] > group_tol:
            block = values_desc[start:i]
            groups.append((float(block.mean()), len(block)))
            start = i
    ambiguous = any(groups[k][0] - groups[k + 1][0] < _AMBIGUITY_FACTOR * group_tol
                    for k in range(len(groups) - 1))
    return tuple(groups), ambiguous


def spectrum_from_values(values, group_tol: float = GROUP_TOL) -> Spectrum:
    """Wrap a plain list of eigenvalues in a :class:`Spectrum` (sorts it)."""
    arr = np.sort(np.asarray(values, dtype=float))[::-1]
    groups, ambiguous = _cluster(arr, group_tol)
    return Spectrum(tuple(float(v) for v in arr), groups, ambiguous)


@dataclass(frozen=True)
class Inertia:
    """Counts of positive / zero / negative eigenvalues."""

    n_pos: int
    n_zero: int
    n_neg: int

    @property
    def n(self) -> int:
        return self.n_pos + self.n_zero + self.n_neg

    @property
    def balanced(self) -> bool:
        return self.n_pos == self.n_neg and self.n_zero == 0

    def to_dict(self) -> dict:
        return {"n_pos": self.n_pos, "n_zero": self.n_zero, "n_neg": self.n_neg}

    @classmethod
    def from_dict(cls, d: dict) -> "Inertia":
        return cls(d["n_pos"], d["n_zero"], d["n_neg"])


def classify_inertia(values, zero_tol: float = ZERO_TOL) -> Inertia:
    arr = np.asarray(values, dtype=float)
    n_pos = int((arr > zero_tol).sum())
    n_neg = int((arr < -zero_tol).sum())
    return Inertia(n_pos, len(arr) - n_pos - n_neg, n_neg)


# ---------------------------------------------------------------------------
# Cyclic Jacobi eigensolver
# ---------------------------------------------------------------------------


def _offdiag_norm(a: np.ndarray) -> float:
    # computed on a masked copy: subtracting diagonal mass from the total
    # cancels catastrophically once the off-diagonal part is small
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def sym_eigenvalues(mat: np.ndarray, conv_tol: float = CONV_TOL,
                    max_sweeps: int = MAX_SWEEPS,
                    group_tol: float = GROUP_TOL) -> Spectrum:
    """All eigenvalues of a symmetric matrix via cyclic Jacobi sweeps.

    Rotations are applied in a fixed row-major order over the upper
    triangle, so results are bit-for-bit reproducible.  Iteration stops
    when the off-diagonal Frobenius mass falls below ``conv_tol`` times
    the Frobenius norm of the input; exceeding ``max_sweeps`` raises
    :class:`ConvergenceError` rather than returning a truncated answer.
    """
    a = np.asarray(mat)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    a = a.astype(np.float64, copy=True)
    n = a.shape[0]

    threshold = conv_tol * float(np.linalg.norm(a))
    sweeps = 0
    while _offdiag_norm(a) > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(sweeps, _offdiag_norm(a), threshold)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(diff) > abs(apq) * 1e12:
                    # tiny rotation angle; the exact formula would overflow
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(1.0, theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = a[q, p] = 0.0
        sweeps += 1
    return spectrum_from_values(np.diagonal(a), group_tol)


def seidel_spectrum(g: Graph, conv_tol: float = CONV_TOL,
                    max_sweeps: int = MAX_SWEEPS,
                    group_tol: float = GROUP_TOL) -> Spectrum:
    """Eigenvalues of the Seidel matrix of a simple graph."""
    return sym_eigenvalues(seidel_matrix(g), conv_tol, max_sweeps, group_tol)


def seidel_energy(g: Graph) -> float:
    """Sum of absolute Seidel eigenvalues."""
    return seidel_spectrum(g).energy()


def seidel_inertia(g: Graph, zero_tol: float = ZERO_TOL) -> Inertia:
    """Positive / zero / negative counts of the Seidel eigenvalues."""
    return classify_inertia(seidel_spectrum(g).values, zero_tol)


# ---------------------------------------------------------------------------
# Exact characteristic polynomial (big-integer Faddeev-LeVerrier)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Monic integer polynomial; coefficients from highest to lowest degree."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = self.coefficients[0]
        for c in self.coefficients[1:]:
            acc = acc * x + c
        return acc

    def derivative_at(self, x):
        n = self.degree
        acc = 0
        for k, c in enumerate(self.coefficients[:-1]):
            acc = acc * x + (n - k) * c
        return acc

    def format_text(self, var: str = "x") -> str:
        n = self.degree
        terms = []
        for k, c in enumerate(self.coefficients):
            power = n - k
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if power == 1 else f"{head}{var}^{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"

    def to_list(self) -> list[int]:
        return list(self.coefficients)


def _int_matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def charpoly_exact(mat) -> IntPolynomial:
    """Exact monic characteristic polynomial det(xI - M) of an integer matrix.

    Faddeev-LeVerrier over Python big integers: every intermediate matrix
    is integral and the per-step trace division is exact, so there is no
    rounding anywhere.  Cost is n matrix products; intended for n <= 200.
    """
    arr = np.asarray(mat)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("matrix must be square")
    if not issubclass(arr.dtype.type, np.integer):
        raise ValueError("exact characteristic polynomial needs integer entries")
    n = arr.shape[0]
    a = [[int(v) for v in row] for row in arr]

    coeffs = [1]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # M_1 = I
    for k in range(1, n + 1):
        b = _int_matmul(a, m)
        tr = sum(b[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise AssertionError("trace recurrence produced a non-integer")
        coeffs.append(q)
        if k < n:
            m = b
            for i in range(n):
                m[i][i] += q
    return IntPolynomial(tuple(coeffs))


def integer_root_multiplicity(p: IntPolynomial, r: int) -> int:
    """Largest k such that (x - r)^k divides p exactly (big-integer division)."""
    coeffs = list(p.coefficients)
    mult = 0
    while len(coeffs) > 1:
        quotient = []
        acc = 0
        for c in coeffs[:-1]:
            acc = acc * r + c
            quotient.append(acc)
        remainder = acc * r + coeffs[-1]
        if remainder != 0:
            break
        mult += 1
        coeffs = quotient
    if len(coeffs) == 1 and coeffs[0] == 0:
        raise ValueError("zero polynomial has no root multiplicity")
    return mult
