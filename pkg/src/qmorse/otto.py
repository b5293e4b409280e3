"""Quantum Otto cycle under three driving protocols.

The cycle alternates two heat-exchange strokes at fixed spectrum (hot bath
T_h with the hot-stroke Hamiltonian, cold bath T_c with the cold-stroke
one) and two driving strokes that deform the spectrum at fixed occupations.
Exactly one model parameter differs between the two Hamiltonians:

* ``ChangingWidth``        - alpha_h vs alpha_c,
* ``ChangingDeformation``  - q_h vs q_c,
* ``ChangingDissociation`` - D_h vs D_c.

Sum route (exact).  With P_n(B) thermal at (T_h, hot model) and P_n(D)
thermal at (T_c, cold model), both renormalized over the common level range
n <= N = min(n_max_hot, n_max_cold),

    Q_h = sum E_n^h [P_n(B) - P_n(D)],
    Q_c = sum E_n^c [P_n(D) - P_n(B)],
    W   = Q_h + Q_c = sum (E_n^h - E_n^c)(P_n(B) - P_n(D))   (identity).

Occupation-preserving driving is only meaningful on the common range; the
probability mass dropped by the truncation is reported, never hidden.

Closed route.  Replacing each level sum by its integral yields closed
expressions built from erfi/erfc factors and a family of scalar
coefficients (``LambdaSet``).  The derivation passes through square roots
of negative quantities; following the printed forms we evaluate with
formal complex arithmetic (principal roots, erfc continued onto the
imaginary axis) and return real parts, attaching the magnitude of the
discarded imaginary component as a diagnostic.  The coefficients are
stated for a shared deformation q; for the deformation protocol they
generalize by the substitution lam*q -> lam_i*q_i, which is exactly what
the underlying integrals give and which reduces to the printed forms
whenever q_h = q_c.

The closed route tracks the sum route only in the dense-spectrum regime
(many levels inside k_B T); outside it the divergence is measured and
reported by the verification harness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cycles import CycleResult, build_result, classify_regime
from .errors import DomainError, InvalidModelError, RangeError
from .specfun import SQRT_PI, erfc_formal, erfi
from .spectrum import MorseModel, bound_spectrum
from .thermo import ThermalEnvironment


@dataclass(frozen=True)
class ChangingWidth:
    alpha_h: float
    alpha_c: float


@dataclass(frozen=True)
class ChangingDeformation:
    q_h: float
    q_c: float


@dataclass(frozen=True)
class ChangingDissociation:
    D_h: float
    D_c: float


OttoProtocol = ChangingWidth | ChangingDeformation | ChangingDissociation


@dataclass(frozen=True)
class OttoSpec:
    """One Otto cycle: driving protocol, undriven baseline, and the two baths."""

    protocol: OttoProtocol
    baseline: MorseModel
    hot: ThermalEnvironment
    cold: ThermalEnvironment

    def __post_init__(self) -> None:
        if self.hot.T <= self.cold.T:
            raise DomainError(
                f"need T_h > T_c, got T_h = {self.hot.T}, T_c = {self.cold.T}")
        if self.hot.kB != self.cold.kB:
            raise DomainError("hot and cold baths must share kB")
        if not isinstance(self.protocol,
                          (ChangingWidth, ChangingDeformation, ChangingDissociation)):
            raise DomainError(f"unknown protocol {self.protocol!r}")


def otto_endpoints(spec: OttoSpec) -> tuple[MorseModel, MorseModel]:
    """Hot-stroke and cold-stroke Hamiltonians from baseline + protocol."""
    base = spec.baseline
    proto = spec.protocol

    def substitute(tag: str, **driven) -> MorseModel:
        try:
            return MorseModel(
                De=driven.get("De", base.De),
                alpha=driven.get("alpha", base.alpha),
                q=driven.get("q", base.q),
                re=base.re, mu=base.mu, hbar=base.hbar)
        except InvalidModelError as exc:
            name, value = next(iter(driven.items()))
            raise InvalidModelError(
                f"{tag} endpoint rejected ({name}={value}): {exc}") from exc

    if isinstance(proto, ChangingWidth):
        return (substitute("hot", alpha=proto.alpha_h),
                substitute("cold", alpha=proto.alpha_c))
    if isinstance(proto, ChangingDeformation):
        return (substitute("hot", q=proto.q_h),
                substitute("cold", q=proto.q_c))
    return (substitute("hot", De=proto.D_h),
            substitute("cold", De=proto.D_c))


def _truncated_state(model: MorseModel, beta: float, top: int):
    """Occupations renormalized over levels 0..top plus the dropped mass."""
    levels = bound_spectrum(model).levels
    weights = [math.exp(-beta * (e - levels[0])) for e in levels]
    total = math.fsum(weights)
    kept = math.fsum(weights[:top + 1])
    occ = [w / kept for w in weights[:top + 1]]
    return levels, occ, 1.0 - kept / total


def otto_cycle_sum(spec: OttoSpec) -> CycleResult:
    """Exact heats, work and efficiency from the common-range level sums."""
    model_h, model_c = otto_endpoints(spec)
    top = min(bound_spectrum(model_h).n_max, bound_spectrum(model_c).n_max)
    eh, occ_b, lost_h = _truncated_state(model_h, spec.hot.beta, top)
    ec, occ_d, lost_c = _truncated_state(model_c, spec.cold.beta, top)
    q_h = math.fsum(eh[n] * (occ_b[n] - occ_d[n]) for n in range(top + 1))
    q_c = math.fsum(ec[n] * (occ_d[n] - occ_b[n]) for n in range(top + 1))
    w = math.fsum((eh[n] - ec[n]) * (occ_b[n] - occ_d[n]) for n in range(top + 1))
    return build_result(q_h, q_c, w, trunc_mass=max(lost_h, lost_c))


# ---------------------------------------------------------------------------
# Closed route
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LambdaSet:
    """Scalar coefficients of the closed-form heat and work expressions.

    Components whose printed form contains sqrt(-p) are complex (principal
    roots); everything else is real.  ``r0``/``r1`` are the grouped
    numerator and denominator of the work expression's second term.
    """

    tau_c: complex
    tau_h: complex
    lam1_c: float
    lam1_h: float
    lam2_ch: float
    lam2_hc: float
    lam3_ch: float
    lam4_ch: float
    lam5_ch: float
    lam6_ch: float
    lam7_ch: float
    lam8_ch: float
    lam9_h: float
    lam9_c: float
    lam10: float
    lam11: complex
    lam12: float
    lam13: complex
    gamma1_c: complex
    gamma1_h: complex
    r0: complex
    r1: complex


@dataclass(frozen=True)
class ClosedFormValue:
    """Real part of a formally complex closed-form result plus the residue."""

    value: float
    imag_residue: float


@dataclass(frozen=True)
class ClosedEfficiency:
    """Analytic efficiency (complex-ratio form) next to Re(W)/Re(Q_h).

    ``value`` is None when the closed-form heat input is not positive.
    """

    value: float | None
    ratio_of_parts: float | None
    imag_residue: float


class _ClosedContext:
    """Endpoint parameters and every coefficient the closed forms reuse."""

    def __init__(self, spec: OttoSpec):
        model_h, model_c = otto_endpoints(spec)
        self.bh, self.bc = spec.hot.beta, spec.cold.beta
        self.xih2, self.xic2 = model_h.xi**2, model_c.xi**2
        self.p = model_h.p
        # lam*q products carry each endpoint's own deformation
        lqh = model_h.lam * model_h.q
        lqc = model_c.lam * model_c.q
        d = lqc - lqh
        p = self.p
        bh, bc, xih2, xic2 = self.bh, self.bc, self.xih2, self.xic2

        self.zh = complex(0.0, math.sqrt(bh * xih2 * p))   # sqrt(bh xih^2 (-p))
        self.zc = complex(0.0, math.sqrt(bc * xic2 * p))
        g1h = 0.5 * (1.0 - 2.0 * lqh) * self.zh
        g1c = 0.5 * (1.0 - 2.0 * lqc) * self.zc

        def protected_erfi(x: float, name: str) -> float:
            try:
                return erfi(x)
            except RangeError as exc:
                raise RangeError(f"{name}: {exc}", value=exc.value,
                                 threshold=exc.threshold) from exc

        lam9_h = 0.5 * math.sqrt(bh) * math.sqrt(xih2) * math.sqrt(p) * (1.0 - 2.0 * lqh)
        lam9_c = 0.5 * math.sqrt(bc) * math.sqrt(xic2) * math.sqrt(p) * (1.0 - 2.0 * lqc)
        erfi9_h = protected_erfi(lam9_h, "lam9_h")
        erfi9_c = protected_erfi(lam9_c, "lam9_c")
        self.erfc_g1h = complex(1.0, -erfi9_h)   # erfc of the imaginary argument
        self.erfc_g1c = complex(1.0, -erfi9_c)

        lam1_h = 0.25 * bh * xih2 * p * (1.0 - 2.0 * lqh)**2
        lam1_c = 0.25 * bc * xic2 * p * (1.0 - 2.0 * lqc)**2
        lam8 = xih2 * (bc + bh + 2.0 * bc * bh * xic2 * p * d * d) - bc * xic2
        lam5 = 2.0 * bc * xic2 * p * d * d - 1.0
        lam6 = xih2 * (2.0 * lqc - 4.0 * lqh + 1.0) + xic2 * (2.0 * lqc - 1.0)
        lam7 = xic2 * (-4.0 * lqc + 2.0 * lqh + 1.0) + xih2 * (2.0 * lqh - 1.0)
        lam10 = SQRT_PI * math.sqrt(bh) * math.sqrt(xih2) * math.sqrt(p) * erfi9_h * lam8
        lam11 = SQRT_PI * lam8 - bc * self.zh * math.exp(lam1_h) * lam7
        lam12 = (SQRT_PI * math.sqrt(bc) * math.sqrt(xic2) * xih2 * math.sqrt(p)
                 * erfi9_c * lam5)
        lam13 = (SQRT_PI * xih2 * self.zc * lam5
                 + bc * xic2 * p * math.exp(lam1_c) * lam6)

        self.lset = LambdaSet(
            tau_c=bc * self.erfc_g1c,
            tau_h=bh * self.erfc_g1h,
            lam1_c=lam1_c,
            lam1_h=lam1_h,
            lam2_ch=xih2 * p * (2.0 * (lqc - 2.0 * lqh) + 1.0),
            lam2_hc=xic2 * p * (2.0 * (lqh - 2.0 * lqc) + 1.0),
            lam3_ch=2.0 * bh * xih2 * p * d * d + 1.0,
            lam4_ch=xic2 * (2.0 * p * d * d - 1.0 / (bh * xih2)),
            lam5_ch=lam5,
            lam6_ch=lam6,
            lam7_ch=lam7,
            lam8_ch=lam8,
            lam9_h=lam9_h,
            lam9_c=lam9_c,
            lam10=lam10,
            lam11=lam11,
            lam12=lam12,
            lam13=lam13,
            gamma1_c=g1c,
            gamma1_h=g1h,
            r0=lam12 + lam13,
            r1=complex(-bc * xic2 * p, 0.0)**1.5 * self.erfc_g1c,
        )

    def hot_heat(self) -> complex:
        ls = self.lset
        return (ls.gamma1_h * math.exp(ls.lam1_h) / (SQRT_PI * ls.tau_h)
                + ls.lam3_ch / (2.0 * self.bh)
                - self.xih2 / (2.0 * self.bc * self.xic2)
                + ls.lam2_ch * math.exp(ls.lam1_c)
                / (2.0 * SQRT_PI * self.zc * self.erfc_g1c))

    def cold_heat(self) -> complex:
        ls = self.lset
        return (ls.gamma1_c * math.exp(ls.lam1_c) / (SQRT_PI * ls.tau_c)
                + ls.lam2_hc * math.exp(ls.lam1_h)
                / (2.0 * SQRT_PI * self.zh * self.erfc_g1h)
                + 1.0 / (2.0 * self.bc) + ls.lam4_ch / 2.0)

    def work(self) -> complex:
        ls = self.lset
        return (1.0 / (2.0 * SQRT_PI)) * (
            (ls.lam10 / self.zh + ls.lam11) / (ls.tau_h * self.bc * self.xih2)
            - self.p * ls.r0 / ls.r1)


def lambda_set(spec: OttoSpec) -> LambdaSet:
    """All closed-form coefficients for one cycle specification."""
    return _ClosedContext(spec).lset


def _as_closed(value: complex) -> ClosedFormValue:
    return ClosedFormValue(value=value.real, imag_residue=abs(value.imag))


def otto_hot_heat_closed(spec: OttoSpec) -> ClosedFormValue:
    """Closed-form heat absorbed from the hot bath."""
    return _as_closed(_ClosedContext(spec).hot_heat())


def otto_cold_heat_closed(spec: OttoSpec) -> ClosedFormValue:
    """Closed-form heat exchanged with the cold bath (negative for an engine)."""
    return _as_closed(_ClosedContext(spec).cold_heat())


def otto_work_closed(spec: OttoSpec) -> ClosedFormValue:
    """Closed-form work output.

    The expression need not close against the two closed-form heats
    exactly; the verification harness measures the gap instead of assuming
    it vanishes.
    """
    return _as_closed(_ClosedContext(spec).work())


def otto_efficiency_closed(spec: OttoSpec) -> ClosedEfficiency:
    """Analytic efficiency: the complex ratio work/heat-input, real part.

    Also reports Re(W)/Re(Q_h), which differs once the formal imaginary
    components are appreciable.
    """
    ctx = _ClosedContext(spec)
    qh = ctx.hot_heat()
    w = ctx.work()
    if qh.real <= 0.0:
        return ClosedEfficiency(value=None, ratio_of_parts=None,
                                imag_residue=abs(qh.imag))
    ratio = w / qh
    return ClosedEfficiency(value=ratio.real, ratio_of_parts=w.real / qh.real,
                            imag_residue=abs(ratio.imag))


def otto_cycle_closed(spec: OttoSpec) -> CycleResult:
    """CycleResult assembled from the three closed-form expressions.

    ``eta`` carries the analytic efficiency expression.  W is the printed
    work form, not Q_h + Q_c, so the result may violate the sum identity by
    the (reported) closure gap.
    """
    ctx = _ClosedContext(spec)
    qh, qc, w = ctx.hot_heat(), ctx.cold_heat(), ctx.work()
    residue = max(abs(qh.imag), abs(qc.imag), abs(w.imag))
    regime = classify_regime(qh.real, qc.real, w.real)
    eta = (w / qh).real if (qh.real > 0.0 and regime != "degenerate") else None
    return CycleResult(Q_h=qh.real, Q_c=qc.real, W=w.real, eta=eta,
                       regime=regime, imag_residue=residue, trunc_mass=0.0)


def closed_closure_gap(spec: OttoSpec) -> float:
    """|Q_h + Q_c - W| of the closed forms (real parts); diagnostic only."""
    ctx = _ClosedContext(spec)
    return abs(ctx.hot_heat().real + ctx.cold_heat().real - ctx.work().real)
