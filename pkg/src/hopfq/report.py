"""Analysis reports and their oracle cross-check."""
from __future__ import annotations

import math
from typing import Any

import numpy as np

from . import hopf_s7, oracle, single_qubit, two_qubit, viz
from .quaternion import Quaternion, is_infinity
from .serialize import FORMAT_VERSION, complex_pair, state_document
from .states import QubitState, TwoQubitState

REPORT_KIND = "analysis-report"


def _q_or_inf(Q) -> Any:
    return "inf" if is_infinity(Q) else list(Q.as_tuple())


def _c_or_inf(c) -> Any:
    return "inf" if is_infinity(c) else complex_pair(c)


def _basis_pair(a: QubitState, b: QubitState) -> list:
    return [[complex_pair(z) for z in a.amplitudes], [complex_pair(z) for z in b.amplitudes]]


def build_report(state, chart: str = "standard", tolerance: float = 1e-9,
                 label: str | None = None) -> dict:
    report = {
        "kind": REPORT_KIND,
        "version": FORMAT_VERSION,
        "input": state_document(state.amplitudes, label),
        "tolerance": tolerance,
    }
    if isinstance(state, QubitState):
        report["qubits"] = 1
        report["bloch"] = list(single_qubit.bloch_coordinates(state))
        report["h1"] = _c_or_inf(single_qubit.hopf_h1(state))
        return report

    s = state
    inv = two_qubit.hopf_invariants(s)
    c = two_qubit.concurrence(s)
    ball = viz.ball_projection(s)
    sd = two_qubit.schmidt(s)
    report.update({
        "qubits": 2,
        "chart": chart,
        "hopf": {"c1": complex_pair(inv.c1), "c2": complex_pair(inv.c2), "omega": inv.omega},
        "h1": _q_or_inf(hopf_s7.h1(hopf_s7.to_pair(s, chart), chart)),
        "base": list(hopf_s7.base_coordinates(s, chart)),
        "concurrence": c,
        "separable": c <= tolerance,
        "entanglor": complex_pair(two_qubit.entanglor_expectation(s)),
        "torus_radii": list(hopf_s7.torus_radii(s)),
        "ball": {"xyz": list(ball[:3]), "concurrence": ball.concurrence},
        "schmidt": {
            "lambda": [sd.lambda_plus, sd.lambda_minus],
            "weights": [sd.weight_cos, sd.weight_sin],
            "basis1": _basis_pair(sd.basis1_plus, sd.basis1_minus),
            "basis2": _basis_pair(sd.basis2_plus, sd.basis2_minus),
        },
    })
    if report["separable"]:
        report["second_qubit_bloch"] = list(hopf_s7.second_qubit_bloch(s, tolerance))
    return report


def _cx(pair) -> complex:
    return complex(pair[0], pair[1])


def _vec(pairs) -> np.ndarray:
    return np.array([_cx(p) for p in pairs], dtype=complex)


def check_report(report: dict, tolerance: float | None = None) -> list[str]:
    """Recompute every reported Hopf-side value through the oracle.

    Returns a list of human-readable mismatches, empty when the report is
    consistent within tolerance.
    """
    tol = report.get("tolerance", 1e-9) if tolerance is None else tolerance
    amps = [_cx(p) for p in report["input"]["amplitudes"]]
    out: list[str] = []

    def expect(name: str, got, want) -> None:
        got = np.atleast_1d(np.asarray(got, dtype=complex))
        want = np.atleast_1d(np.asarray(want, dtype=complex))
        if got.shape != want.shape or not np.all(np.abs(got - want) <= tol):
            out.append(f"{name}: reported {got.tolist()} vs oracle {want.tolist()}")

    try:
        if len(amps) == 2:
            v = np.array(amps)
            rho = np.outer(v, v.conj())
            want = [np.trace(rho @ oracle.PAULI[a]).real for a in "xyz"]
            expect("bloch", report["bloch"], want)
            h1 = report["h1"]
            want_h1 = "inf" if abs(amps[1]) <= 1e-12 else complex_pair((amps[0] / amps[1]).conjugate())
            if (h1 == "inf") != (want_h1 == "inf"):
                out.append(f"h1: reported {h1} vs oracle {want_h1}")
            elif h1 != "inf":
                expect("h1", _cx(h1), _cx(want_h1))
            return out
        return out + _check_two_qubit(report, TwoQubitState(*amps), tol, expect)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        return out + [f"report structure: {exc!r}"]


def _check_two_qubit(report: dict, s: TwoQubitState, tol: float, expect) -> list[str]:
    out: list[str] = []
    rho1, rho2 = oracle.reduced_densities(s)
    det1 = oracle.det2(rho1).real
    ent = oracle.entanglor_matrix_path(s)
    pf = [oracle.expectation(s, oracle.pauli_operator(a, "first")).real for a in "zxy"]
    ps = [oracle.expectation(s, oracle.pauli_operator(a, "second")).real for a in "zxy"]

    hopf = report["hopf"]
    c1, c2 = _cx(hopf["c1"]), _cx(hopf["c2"])
    expect("hopf.c1", c1, rho1[1, 0])
    expect("hopf.c2", 2 * c2, ent)
    expect("hopf.omega (cos^2)", math.cos(hopf["omega"]) ** 2, rho1[0, 0].real)

    c = report["concurrence"]
    expect("concurrence (c^2/4 vs det rho1)", c * c / 4, det1)
    expect("concurrence (c vs 2|C2|)", c, 2 * abs(c2))
    if report["separable"] != (c <= report.get("tolerance", tol)):
        out.append(f"separable flag {report['separable']} inconsistent with concurrence {c}")

    base = report["base"]
    chart = report.get("chart", "standard")
    expect("base on S^4", sum(x * x for x in base), 1.0)
    if chart == "standard":
        expect("base[0:3]", base[:3], pf)
        expect("base[3]+i base[4]", complex(base[3], base[4]), ent)
    elif chart == "swapped":
        expect("base[0:3]", base[:3], ps)
        expect("base[3]+i base[4]", complex(base[3], base[4]), ent)
    else:
        a, b, g, d = s.amplitudes
        expect("base[0]", base[0], pf[0])
        expect("base[1]+i base[2]", complex(base[1], base[2]), 2 * (a.conjugate() * g + b * d.conjugate()))
        expect("base[3]+i base[4]", complex(base[3], base[4]), 2 * (a.conjugate() * d - b * g.conjugate()))

    h1 = report["h1"]
    if h1 == "inf":
        expect("h1 = inf -> north pole", base, [1, 0, 0, 0, 0])
    else:
        expect("h2(h1) vs base", list(hopf_s7.h2(Quaternion(*h1))), base)

    expect("entanglor", _cx(report["entanglor"]), ent)
    r1, r2 = report["torus_radii"]
    expect("torus_radii[0]", r1, 2 * abs(rho1[1, 0]))
    expect("torus_radii[1]^2", r2 * r2, 4 * det1)

    ball = report["ball"]
    expect("ball.xyz", ball["xyz"], pf)
    expect("ball.concurrence", ball["concurrence"], c)

    sch = report["schmidt"]
    lp, lm, _, _ = oracle.eig2_hermitian(rho1)
    mp, mm, _, _ = oracle.eig2_hermitian(rho2)
    expect("schmidt.lambda", sch["lambda"], [lp, lm])
    expect("schmidt.lambda (rho2)", sch["lambda"], [mp, mm])
    w = sch["weights"]
    expect("schmidt.weights^2", [w[0] ** 2, w[1] ** 2], sch["lambda"])
    b1 = [_vec(v) for v in sch["basis1"]]
    b2 = [_vec(v) for v in sch["basis2"]]
    recon = w[0] * np.kron(b1[0], b2[0]) + w[1] * np.kron(b1[1], b2[1])
    expect("schmidt fidelity", abs(np.vdot(recon, s.vector)) ** 2, 1.0)
    for name, (u, v) in (("basis1", b1), ("basis2", b2)):
        expect(f"schmidt.{name} orthonormal",
               [np.vdot(u, u), np.vdot(v, v), np.vdot(u, v)], [1, 1, 0])

    if "second_qubit_bloch" in report:
        expect("second_qubit_bloch", report["second_qubit_bloch"], [ps[1], ps[2], ps[0]])
    return out
