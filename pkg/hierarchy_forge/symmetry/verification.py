"""
Checks of the symmetry algebra of the Frobenius KdV hierarchy.

Every bracket relation is decided by canonical equality of the two sides, with
the semantic comparison as fallback for terms under ``Dinv``.
"""

from __future__ import annotations

from itertools import combinations
from typing import TYPE_CHECKING, Sequence

from hierarchy_forge.diffpoly import FlowVector, d_t_flow, frechet_operator, gateaux, random_test_vectors
from hierarchy_forge.hamiltonian import IdentityCheck, IdentityReport, flows_agree, operators_agree, record_check
from hierarchy_forge.symmetry.flows import coupled_symmetries, lie_bracket

if TYPE_CHECKING:  # pragma: no cover
    from hierarchy_forge.diffpoly import SemanticComparer
    from hierarchy_forge.spectral.models import ParameterValue

DEFAULT_HEREDITARY_SAMPLES = 20


def verify_symmetry_equation(
    m: int,
    n: int,
    *,
    epsilon: ParameterValue = "epsilon",
    comparer: SemanticComparer | None = None,
) -> IdentityReport:
    """
    ``d tau / dt + tau'[K_m] = K_m'[tau]`` for ``tau = tau_n^m``, i.e. ``tau_n^m`` is a
    symmetry of ``u_t = K_m``. The same equation along the flow that keeps the
    ``k_j`` terms is reported without being asserted.
    """
    algebra = coupled_symmetries(epsilon)
    tau = algebra.tau_flow(m, n)
    checks = []
    for name, flow, asserted in (
        (f"{tau.label} is a symmetry of K_{m}", algebra.k_value(m), True),
        (f"{tau.label} is a symmetry of K_{m} with k_j", algebra.nonisospectral_flow(m), False),
    ):
        lhs = d_t_flow(tau.value) + gateaux(tau.value, flow)
        checks.append(record_check(name, flows_agree(lhs, gateaux(flow, tau.value), comparer), asserted=asserted))
    return IdentityReport(label=f"symmetry equation of {tau.label}", checks=tuple(checks))


def _bracket_check(
    name: str,
    left: FlowVector,
    right: FlowVector,
    expected: FlowVector,
    comparer: SemanticComparer | None,
) -> IdentityCheck:
    return record_check(name, flows_agree(lie_bracket(left, right), expected, comparer))


def verify_algebra(
    max_m: int = 2,
    max_n: int = 2,
    *,
    epsilon: ParameterValue = "epsilon",
    comparer: SemanticComparer | None = None,
) -> IdentityReport:
    """
    The bracket table of the K and tau symmetries::

        [K_m, K_n] = 0
        [K_m, Phi^n sigma_0] = (2m + 1) H K_{m+n-1}
        [Phi^m sigma_0, Phi^n sigma_0] = 2 (m - n) Phi^{m+n-1} H sigma_0
        [K_m, tau_n^l] = (2m + 1) H K_{m+n-1}
        [tau_l^m, tau_n^m] = 2 (l - n) H tau_{l+n-1}^m

    with ``1 <= m, l <= max_m`` and ``0 <= n < l <= max_n`` where a lower index would
    go negative.
    """
    algebra = coupled_symmetries(epsilon)
    mixer = algebra.mixer
    checks = []
    for m, n in combinations(range(max_m + 1), 2):
        checks.append(
            _bracket_check(f"[K_{m}, K_{n}] = 0", algebra.k_value(m), algebra.k_value(n), FlowVector.zero(2), comparer),
        )
    for m in range(1, max_m + 1):
        for n in range(max_n + 1):
            checks.append(
                _bracket_check(
                    f"[K_{m}, Phi^{n} sigma_0] = {2 * m + 1} H K_{m + n - 1}",
                    algebra.k_value(m),
                    algebra.seed_value(n),
                    algebra.mixed_k(m + n - 1) * (2 * m + 1),
                    comparer,
                ),
            )
    mixed_seed = mixer.apply(algebra.sigma_0)
    for n, m in combinations(range(max_n + 1), 2):
        expected = mixed_seed
        for _ in range(m + n - 1):
            expected = algebra.phi.apply(expected)
        checks.append(
            _bracket_check(
                f"[Phi^{m} sigma_0, Phi^{n} sigma_0] = {2 * (m - n)} Phi^{m + n - 1} H sigma_0",
                algebra.seed_value(m),
                algebra.seed_value(n),
                expected * (2 * (m - n)),
                comparer,
            ),
        )
    for m in range(1, max_m + 1):
        for level in range(1, max_m + 1):
            for n in range(max_n):
                tau = algebra.tau_flow(level, n)
                checks.append(
                    _bracket_check(
                        f"[K_{m}, {tau.label}] = {2 * m + 1} H K_{m + n - 1}",
                        algebra.k_value(m),
                        tau.value,
                        algebra.mixed_k(m + n - 1) * (2 * m + 1),
                        comparer,
                    ),
                )
    for m in range(1, max_m + 1):
        for n, upper in combinations(range(max_n + 1), 2):
            left = algebra.tau_flow(m, upper)
            right = algebra.tau_flow(m, n)
            combined = algebra.tau_flow(m, upper + n - 1)
            checks.append(
                _bracket_check(
                    f"[{left.label}, {right.label}] = {2 * (upper - n)} H {combined.label}",
                    left.value,
                    right.value,
                    mixer.apply(combined.value) * (2 * (upper - n)),
                    comparer,
                ),
            )
    return IdentityReport(label="symmetry algebra of the Frobenius KdV hierarchy", checks=tuple(checks))


def verify_hereditary(
    f: FlowVector,
    g: FlowVector,
    *,
    epsilon: ParameterValue = "epsilon",
    comparer: SemanticComparer | None = None,
) -> IdentityReport:
    """``Phi'[Phi f] g - Phi'[Phi g] f = Phi (Phi'[f] g - Phi'[g] f)``."""
    phi = coupled_symmetries(epsilon).phi
    lhs = phi.gateaux(phi.apply(f)).apply(g) - phi.gateaux(phi.apply(g)).apply(f)
    rhs = phi.apply(phi.gateaux(f).apply(g) - phi.gateaux(g).apply(f))
    check = record_check("Phi is hereditary", flows_agree(lhs, rhs, comparer))
    return IdentityReport(label="hereditary property of Phi", checks=(check,))


def verify_hereditary_samples(
    count: int = DEFAULT_HEREDITARY_SAMPLES,
    *,
    seed: int | None = None,
    epsilon: ParameterValue = "epsilon",
) -> IdentityReport:
    """The hereditary identity on ``count`` seeded random pairs of jet polynomials."""
    vectors = random_test_vectors(2, 2 * count, seed=seed)
    checks = []
    for index in range(count):
        report = verify_hereditary(vectors[2 * index], vectors[2 * index + 1], epsilon=epsilon)
        (check,) = report.checks
        checks.append(IdentityCheck(f"Phi is hereditary on pair {index}", check.holds, detail=check.detail))
    return IdentityReport(label="hereditary property of Phi", checks=tuple(checks))


def verify_strong_symmetry(
    m: int,
    *,
    epsilon: ParameterValue = "epsilon",
    vectors: Sequence[FlowVector] | None = None,
    comparer: SemanticComparer | None = None,
) -> IdentityReport:
    """``Phi'[K_m] = K_m' Phi - Phi K_m'``, compared by action on test vectors."""
    algebra = coupled_symmetries(epsilon)
    flow = algebra.k_value(m)
    linearization = frechet_operator(flow)
    commutator = linearization @ algebra.phi - algebra.phi @ linearization
    check = record_check(
        f"Phi is a strong symmetry of K_{m}",
        operators_agree(algebra.phi.gateaux(flow), commutator, vectors, comparer),
    )
    return IdentityReport(label=f"strong symmetry of K_{m}", checks=(check,))


def verify_jacobi(
    *,
    epsilon: ParameterValue = "epsilon",
    comparer: SemanticComparer | None = None,
) -> IdentityReport:
    """The Jacobi identity on every triple drawn from ``K_0, K_1, sigma_0, Phi sigma_0``."""
    algebra = coupled_symmetries(epsilon)
    flows = {
        "K_0": algebra.k_value(0),
        "K_1": algebra.k_value(1),
        "sigma_0": algebra.seed_value(0),
        "Phi sigma_0": algebra.seed_value(1),
    }
    checks = []
    for (a_name, a), (b_name, b), (c_name, c) in combinations(flows.items(), 3):
        total = (
            lie_bracket(lie_bracket(a, b), c)
            + lie_bracket(lie_bracket(b, c), a)
            + lie_bracket(lie_bracket(c, a), b)
        )
        checks.append(
            record_check(f"Jacobi on {a_name}, {b_name}, {c_name}", flows_agree(total, FlowVector.zero(2), comparer)),
        )
    return IdentityReport(label="Jacobi identity of the symmetry algebra", checks=tuple(checks))
