"""Closed-form Seidel spectra of the blow-up families and pair certification.

For a graph G with Seidel eigenvalues s_1..s_n the two blow-ups have fully
explicit Seidel spectra:

* independent blow-up (order mn):   {m*s_i + (m-1)}  union  {-1 ^ (mn-n)}
* clique blow-up      (order mn):   {m*s_i - (m-1)}  union  {+1 ^ (mn-n)}

and composing one construction with the other (order m^2 n):

* clique_blowup(blowup(G,m),m):   {m^2*s_i + (m-1)^2} u {(1-2m)^(mn-n)} u {1^(m^2 n - mn)}
* blowup(clique_blowup(G,m),m):   {m^2*s_i - (m-1)^2} u {(2m-1)^(mn-n)} u {-1^(m^2 n - mn)}

Both members of each pair share the same spectrum sum, and whenever every
|s_i| clears the bound ((m-1)/m for the single constructions, its square
for the composed ones) the absolute-value gap per eigenvalue collapses to
a constant of fixed sign:

    |m*s + (m-1)| - |m*s - (m-1)| = 2(m-1) * sign(s)

so the pair is equienergetic exactly when G has equally many positive and
negative Seidel eigenvalues and none at zero.  ``certify_blowup_pair`` and
``certify_composed_pair`` check that equivalence instance by instance, in
both directions, against numeric spectra, the closed forms above, and (for
small orders) exact integer multiplicities of the padding eigenvalues.
"""

import math
from dataclasses import dataclass

import numpy as np

from .graphs import (DEFAULT_MAX_DIM, Graph, blowup, clique_blowup,
                     graph_to_graph6)
from .spectral import (GROUP_TOL, NUM_TOL, ZERO_TOL, Inertia, Spectrum,
                       charpoly_exact, classify_inertia,
                       integer_root_multiplicity, seidel_matrix,
                       seidel_spectrum, spectrum_from_values)

__all__ = [
    "ENERGY_TOL",
    "EXACT_MAX_ORDER",
    "ClosedFormSpectrum",
    "HypothesisReport",
    "Certificate",
    "blowup_seidel_spectrum",
    "clique_blowup_seidel_spectrum",
    "composed_blowup_seidel_spectra",
    "check_equienergetic",
    "check_cospectral",
    "check_hypothesis",
    "hypothesis_from_spectrum",
    "certify_blowup_pair",
    "certify_composed_pair",
    "certify",
]

# Relative tolerance for declaring two Seidel energies equal.
ENERGY_TOL = 1e-8
# Integer charpoly certification is capped here; coefficients grow fast.
EXACT_MAX_ORDER = 200


# ---------------------------------------------------------------------------
# Closed-form spectra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedFormSpectrum:
    """Predicted spectrum: affinely mapped eigenvalues plus integer padding.

    ``mapped`` carries one value per source eigenvalue; ``padding`` is a
    list of (integer value, multiplicity) blocks.  Together they must
    account for every eigenvalue of the constructed graph (``order``).
    """

    mapped: tuple[float, ...]
    padding: tuple[tuple[int, int], ...]
    m: int
    order: int

    def __post_init__(self):
        total = len(self.mapped) + sum(mult for _, mult in self.padding)
        if total != self.order:
            raise ValueError(
                f"closed form accounts for {total} eigenvalues, expected {self.order}")

    def values(self) -> tuple[float, ...]:
        vals = list(self.mapped)
        for value, mult in self.padding:
            vals.extend([float(value)] * mult)
        vals.sort(reverse=True)
        return tuple(vals)

    def energy(self) -> float:
        return (math.fsum(abs(v) for v in self.mapped)
                + sum(abs(value) * mult for value, mult in self.padding))

    def total(self) -> float:
        return (math.fsum(self.mapped)
                + sum(value * mult for value, mult in self.padding))

    def as_spectrum(self, group_tol: float = GROUP_TOL) -> Spectrum:
        return spectrum_from_values(self.values(), group_tol)

    def format_grouped(self, digits: int = 12) -> str:
        return self.as_spectrum().format_grouped(digits)

    def to_dict(self) -> dict:
        return {
            "mapped": list(self.mapped),
            "padding": [[v, m] for v, m in self.padding],
            "m": self.m,
            "order": self.order,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ClosedFormSpectrum":
        return cls(mapped=tuple(d["mapped"]),
                   padding=tuple((v, m) for v, m in d["padding"]),
                   m=d["m"], order=d["order"])


def _check_closed_form_args(sigma: Spectrum, m: int, n: int) -> None:
    if sigma.n != n:
        raise ValueError(f"spectrum has {sigma.n} values, expected {n}")
    if m < 2:
        raise ValueError(f"blow-up multiplicity must be >= 2, got {m}")


def blowup_seidel_spectrum(sigma: Spectrum, m: int, n: int) -> ClosedFormSpectrum:
    """Seidel spectrum of blowup(G, m) from the spectrum of G.

    Each source eigenvalue s maps to m*s + (m-1); the remaining mn - n
    eigenvalues are all -1.
    """
    _check_closed_form_args(sigma, m, n)
    mapped = tuple(m * s + (m - 1) for s in sigma.values)
    return ClosedFormSpectrum(mapped, ((-1, m * n - n),), m, m * n)


def clique_blowup_seidel_spectrum(sigma: Spectrum, m: int, n: int) -> ClosedFormSpectrum:
    """Seidel spectrum of clique_blowup(G, m): s -> m*s - (m-1), padded with +1.

    The padding multiplicity is mn - n, forced by the dimension count
    (n mapped values plus padding must total mn).
    """
    _check_closed_form_args(sigma, m, n)
    mapped = tuple(m * s - (m - 1) for s in sigma.values)
    return ClosedFormSpectrum(mapped, ((1, m * n - n),), m, m * n)


def composed_blowup_seidel_spectra(sigma: Spectrum, m: int,
                                   n: int) -> tuple[ClosedFormSpectrum, ClosedFormSpectrum]:
    """Closed forms for the two mixed double blow-ups of order m^2 n.

    Returns (clique_blowup(blowup(G,m),m), blowup(clique_blowup(G,m),m)):
    the first maps s -> m^2 s + (m-1)^2 with padding {(1-2m)^(mn-n),
    1^(m^2 n - mn)}, the second mirrors every sign.
    """
    _check_closed_form_args(sigma, m, n)
    shift = (m - 1) ** 2
    inner_pad = m * n - n
    outer_pad = m * m * n - m * n
    order = m * m * n
    first = ClosedFormSpectrum(
        tuple(m * m * s + shift for s in sigma.values),
        ((1 - 2 * m, inner_pad), (1, outer_pad)), m, order)
    second = ClosedFormSpectrum(
        tuple(m * m * s - shift for s in sigma.values),
        ((2 * m - 1, inner_pad), (-1, outer_pad)), m, order)
    return first, second


# ---------------------------------------------------------------------------
# Pairwise checks
# ---------------------------------------------------------------------------


def check_equienergetic(g1: Graph, g2: Graph,
                        energy_tol: float = ENERGY_TOL) -> tuple[bool, float]:
    """Compare Seidel energies; returns (verdict, absolute difference).

    The verdict is relative: |SE1 - SE2| <= energy_tol * max(1, SE1).
    """
    e1 = seidel_spectrum(g1).energy()
    e2 = seidel_spectrum(g2).energy()
    delta = abs(e1 - e2)
    return delta <= energy_tol * max(1.0, e1), delta


def check_cospectral(g1: Graph, g2: Graph, num_tol: float = NUM_TOL) -> bool:
    """True when both Seidel spectra agree elementwise after sorting."""
    if g1.n != g2.n:
        return False
    s1 = seidel_spectrum(g1).values
    s2 = seidel_spectrum(g2).values
    return _values_close(s1, s2, num_tol)


def _values_close(a, b, tol: float) -> bool:
    return len(a) == len(b) and bool(
        np.allclose(np.asarray(a), np.asarray(b), rtol=0.0, atol=tol))


# ---------------------------------------------------------------------------
# Hypothesis reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HypothesisReport:
    """Eigenvalue-magnitude bound plus sign balance for one (G, m, power).

    ``bound`` is ((m-1)/m)**power; ``satisfied`` means the bound holds for
    every eigenvalue (within ZERO_TOL slack) *and* the inertia is balanced
    (equal positive/negative counts, no zero eigenvalue).  ``boundary``
    flags instances whose smallest |eigenvalue| sits within ZERO_TOL of
    the bound, where the verdict rests on the tolerance.
    """

    m: int
    bound: float
    min_abs_eigenvalue: float
    balanced: bool
    inertia: Inertia
    satisfied: bool
    margin: float
    boundary: bool

    def bound_met(self, zero_tol: float = ZERO_TOL) -> bool:
        return self.margin >= -zero_tol

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "bound": self.bound,
            "min_abs_eigenvalue": self.min_abs_eigenvalue,
            "balanced": self.balanced,
            "inertia": self.inertia.to_dict(),
            "satisfied": self.satisfied,
            "margin": self.margin,
            "boundary": self.boundary,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "HypothesisReport":
        return cls(m=d["m"], bound=d["bound"],
                   min_abs_eigenvalue=d["min_abs_eigenvalue"],
                   balanced=d["balanced"],
                   inertia=Inertia.from_dict(d["inertia"]),
                   satisfied=d["satisfied"], margin=d["margin"],
                   boundary=d["boundary"])


def hypothesis_from_spectrum(sigma: Spectrum, m: int, power: int = 1,
                             zero_tol: float = ZERO_TOL) -> HypothesisReport:
    """Evaluate the magnitude bound and sign balance on a known spectrum."""
    if m < 2:
        raise ValueError(f"blow-up multiplicity must be >= 2, got {m}")
    if power not in (1, 2):
        raise ValueError("power must be 1 or 2")
    bound = ((m - 1) / m) ** power
    min_abs = sigma.min_abs()
    margin = min_abs - bound
    inertia = classify_inertia(sigma.values, zero_tol)
    satisfied = inertia.balanced and margin >= -zero_tol
    return HypothesisReport(
        m=m, bound=bound, min_abs_eigenvalue=min_abs,
        balanced=inertia.balanced, inertia=inertia, satisfied=satisfied,
        margin=margin, boundary=abs(margin) <= zero_tol)


def check_hypothesis(g: Graph, m: int, power: int = 1,
                     zero_tol: float = ZERO_TOL) -> HypothesisReport:
    """Hypothesis report for a graph: bound ((m-1)/m)**power plus balance."""
    return hypothesis_from_spectrum(seidel_spectrum(g), m, power, zero_tol)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Full record of one equienergy certification.

    ``theorem`` selects the construction pair: 1 compares blowup(G, m)
    against clique_blowup(G, m); 2 compares the two mixed double blow-ups.
    ``theorem_violation`` is true when the observed energies contradict
    the predicted equivalence (either direction); any such certificate
    means a solver bug or a genuine counterexample.
    """

    theorem: int
    graph6: str
    m: int
    hypothesis: HypothesisReport
    spectrum_a: Spectrum
    spectrum_b: Spectrum
    closed_a: ClosedFormSpectrum
    closed_b: ClosedFormSpectrum
    energy_a: float
    energy_b: float
    energy_delta: float
    equienergetic: bool
    cospectral: bool
    closed_form_agrees: bool
    exact_multiplicities_verified: bool | None
    theorem_violation: bool

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "graph6": self.graph6,
            "m": self.m,
            "hypothesis": self.hypothesis.to_dict(),
            "spectrum_a": self.spectrum_a.to_dict(),
            "spectrum_b": self.spectrum_b.to_dict(),
            "closed_a": self.closed_a.to_dict(),
            "closed_b": self.closed_b.to_dict(),
            "energy_a": self.energy_a,
            "energy_b": self.energy_b,
            "energy_delta": self.energy_delta,
            "equienergetic": self.equienergetic,
            "cospectral": self.cospectral,
            "closed_form_agrees": self.closed_form_agrees,
            "exact_multiplicities_verified": self.exact_multiplicities_verified,
            "theorem_violation": self.theorem_violation,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(
            theorem=d["theorem"], graph6=d["graph6"], m=d["m"],
            hypothesis=HypothesisReport.from_dict(d["hypothesis"]),
            spectrum_a=Spectrum.from_dict(d["spectrum_a"]),
            spectrum_b=Spectrum.from_dict(d["spectrum_b"]),
            closed_a=ClosedFormSpectrum.from_dict(d["closed_a"]),
            closed_b=ClosedFormSpectrum.from_dict(d["closed_b"]),
            energy_a=d["energy_a"], energy_b=d["energy_b"],
            energy_delta=d["energy_delta"],
            equienergetic=d["equienergetic"], cospectral=d["cospectral"],
            closed_form_agrees=d["closed_form_agrees"],
            exact_multiplicities_verified=d["exact_multiplicities_verified"],
            theorem_violation=d["theorem_violation"])

    def render_text(self) -> str:
        hyp = self.hypothesis
        lines = [
            f"certificate (pair {self.theorem}, m={self.m}) for {self.graph6}",
            f"  hypothesis: min|eig|={hyp.min_abs_eigenvalue:.12g} "
            f"bound={hyp.bound:.12g} balanced={hyp.balanced} "
            f"satisfied={hyp.satisfied}"
            + (" [boundary]" if hyp.boundary else ""),
            f"  inertia: ({hyp.inertia.n_pos}, {hyp.inertia.n_zero}, "
            f"{hyp.inertia.n_neg})",
            f"  spectrum A: {self.spectrum_a.format_grouped()}",
            f"  spectrum B: {self.spectrum_b.format_grouped()}",
            f"  energies: {self.energy_a:.12g} vs {self.energy_b:.12g} "
            f"(delta {self.energy_delta:.12g})",
            f"  equienergetic={self.equienergetic} cospectral={self.cospectral}",
            f"  closed_form_agrees={self.closed_form_agrees} "
            f"exact_multiplicities_verified={self.exact_multiplicities_verified}",
        ]
        if self.theorem_violation:
            lines.append("  THEOREM VIOLATION: observed energies contradict "
                         "the predicted equivalence")
        return "\n".join(lines)


def _exact_padding_ok(g: Graph, expectations) -> bool:
    p = charpoly_exact(seidel_matrix(g))
    return all(integer_root_multiplicity(p, value) >= mult
               for value, mult in expectations if mult > 0)


def _certify(g: Graph, m: int, power: int, num_tol: float, zero_tol: float,
             energy_tol: float, exact: bool, exact_max_order: int,
             max_dim: int) -> Certificate:
    sigma = seidel_spectrum(g)
    hyp = hypothesis_from_spectrum(sigma, m, power, zero_tol)
    n = g.n

    if power == 1:
        graph_a = blowup(g, m, max_dim=max_dim)
        graph_b = clique_blowup(g, m, max_dim=max_dim)
        closed_a = blowup_seidel_spectrum(sigma, m, n)
        closed_b = clique_blowup_seidel_spectrum(sigma, m, n)
        pad_a = list(closed_a.padding)
        pad_b = list(closed_b.padding)
    else:
        graph_a = clique_blowup(blowup(g, m, max_dim=max_dim), m, max_dim=max_dim)
        graph_b = blowup(clique_blowup(g, m, max_dim=max_dim), m, max_dim=max_dim)
        closed_a, closed_b = composed_blowup_seidel_spectra(sigma, m, n)
        pad_a = list(closed_a.padding)
        pad_b = list(closed_b.padding)

    spec_a = seidel_spectrum(graph_a)
    spec_b = seidel_spectrum(graph_b)
    energy_a = spec_a.energy()
    energy_b = spec_b.energy()
    delta = abs(energy_a - energy_b)
    equienergetic = delta <= energy_tol * max(1.0, energy_a)
    cospectral = _values_close(spec_a.values, spec_b.values, num_tol)
    agrees = (_values_close(spec_a.values, closed_a.values(), num_tol)
              and _values_close(spec_b.values, closed_b.values(), num_tol))

    if exact and graph_a.n <= exact_max_order:
        exact_ok = (_exact_padding_ok(graph_a, pad_a)
                    and _exact_padding_ok(graph_b, pad_b))
    else:
        exact_ok = None

    if hyp.satisfied:
        violation = not equienergetic
    elif hyp.bound_met(zero_tol):
        # bound holds but signs are unbalanced: the pair must NOT be
        # equienergetic
        violation = equienergetic
    else:
        violation = False

    return Certificate(
        theorem=power, graph6=graph_to_graph6(g), m=m, hypothesis=hyp,
        spectrum_a=spec_a, spectrum_b=spec_b,
        closed_a=closed_a, closed_b=closed_b,
        energy_a=energy_a, energy_b=energy_b, energy_delta=delta,
        equienergetic=equienergetic, cospectral=cospectral,
        closed_form_agrees=agrees,
        exact_multiplicities_verified=exact_ok,
        theorem_violation=violation)


def certify_blowup_pair(g: Graph, m: int, num_tol: float = NUM_TOL,
                        zero_tol: float = ZERO_TOL,
                        energy_tol: float = ENERGY_TOL, exact: bool = True,
                        exact_max_order: int = EXACT_MAX_ORDER,
                        max_dim: int = DEFAULT_MAX_DIM) -> Certificate:
    """Certify blowup(g, m) vs clique_blowup(g, m) (order m*n each).

    Numeric spectra of both constructions are checked against their
    closed forms; when ``exact`` is set and the order allows, the integer
    padding multiplicities (-1 and +1, each at least mn - n) are certified
    through the exact characteristic polynomial.
    """
    return _certify(g, m, 1, num_tol, zero_tol, energy_tol, exact,
                    exact_max_order, max_dim)


def certify_composed_pair(g: Graph, m: int, num_tol: float = NUM_TOL,
                          zero_tol: float = ZERO_TOL,
                          energy_tol: float = ENERGY_TOL, exact: bool = True,
                          exact_max_order: int = EXACT_MAX_ORDER,
                          max_dim: int = DEFAULT_MAX_DIM) -> Certificate:
    """Certify the two mixed double blow-ups of g (order m^2 * n each)."""
    return _certify(g, m, 2, num_tol, zero_tol, energy_tol, exact,
                    exact_max_order, max_dim)


def certify(g: Graph, m: int, theorem: int, **kwargs) -> Certificate:
    """Dispatch to the single (theorem=1) or composed (theorem=2) pair."""
    if theorem == 1:
        return certify_blowup_pair(g, m, **kwargs)
    if theorem == 2:
        return certify_composed_pair(g, m, **kwargs)
    raise ValueError("theorem must be 1 or 2")
