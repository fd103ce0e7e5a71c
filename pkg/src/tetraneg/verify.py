"""Cross-validation of the closed-form reference data against brute force.

Runs a seeded random parameter sweep and checks, entry by entry, the two
closed-form trimer matrices, every field-reversal and sqrt(2)-scaling
relation among their elements, the partial-transpose block structures, and
the ground-state table; known transcription hazards are re-tested and listed
with numerical evidence.  The brute-force path is authoritative throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .model import ModelParams, build_hamiltonian, diagonalize, gibbs_state, ground_manifold
from .negativity import negativity, partial_transpose
from .reductions import partial_trace

SQRT2 = math.sqrt(2.0)

# (name, target (i,j), source (k,l), scale, source evaluated at -h)
RELATIONS_12 = (
    ("a4", (11, 11), (0, 0), 1.0, True),
    ("a6", (10, 10), (1, 1), 1.0, True),
    ("a8", (9, 9), (2, 2), 1.0, True),
    ("a10", (8, 8), (3, 3), 1.0, True),
    ("a12", (7, 7), (4, 4), 1.0, True),
    ("a14", (6, 6), (5, 5), 1.0, True),
    ("a16", (10, 8), (1, 3), 1.0, True),
    ("a18", (10, 5), (1, 6), 1.0, True),
    ("a19", (3, 6), (1, 6), 1 / SQRT2, False),
    ("a20", (8, 5), (1, 6), 1 / SQRT2, True),
    ("a22", (9, 7), (2, 4), 1.0, True),
    ("a23", (4, 9), (2, 7), 1.0, False),
)

RELATIONS_18 = (
    ("d4", (17, 17), (0, 0), 1.0, True),
    ("d6", (16, 16), (1, 1), 1.0, True),
    ("d8", (15, 15), (2, 2), 1.0, True),
    ("d10", (14, 14), (3, 3), 1.0, True),
    ("d12", (13, 13), (4, 4), 1.0, True),
    ("d14", (12, 12), (5, 5), 1.0, True),
    ("d16", (11, 11), (6, 6), 1.0, True),
    ("d18", (10, 10), (7, 7), 1.0, True),
    ("d20", (9, 9), (8, 8), 1.0, True),
    ("d22", (14, 16), (1, 3), 1.0, True),
    ("d23", (1, 9), (1, 3), SQRT2 / 2, False),
    ("d24", (8, 16), (1, 3), SQRT2 / 2, True),
    ("d26", (8, 14), (3, 9), 1.0, True),
    ("d28", (11, 15), (2, 6), 1.0, True),
    ("d29", (2, 12), (2, 6), SQRT2, False),
    ("d30", (5, 15), (2, 6), SQRT2, True),
    ("d32", (5, 11), (6, 12), 1.0, True),
    ("d34", (13, 15), (2, 4), 1.0, True),
    ("d35", (2, 10), (2, 4), SQRT2 / 2, False),
    ("d36", (7, 15), (2, 4), SQRT2 / 2, True),
    ("d38", (7, 13), (4, 10), 1.0, True),
    ("d39", (10, 12), (4, 6), 1.0, False),
    ("d40a", (11, 13), (4, 6), 1.0, True),
    ("d40b", (5, 7), (4, 6), 1.0, True),
    ("d42", (5, 13), (4, 12), 1.0, True),
    ("d44", (7, 11), (6, 10), 1.0, True),
)

ELEMENT_TOL = 1e-10
RELATION_TOL = 1e-12
BLOCK_SPECTRUM_TOL = 1e-10
OFF_BLOCK_TOL = 1e-12
TABLE2_SURD_TOL = 1e-9


@dataclass
class VerificationReport:
    seed: int
    draws: int
    element_dev_12: float = 0.0
    element_dev_18: float = 0.0
    worst_elements: list = field(default_factory=list)
    relation_devs: dict = field(default_factory=dict)
    off_block_dev: float = 0.0
    block_spectrum_dev: float = 0.0
    table2_dev: float = 0.0
    typo_evidence: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self) -> str:
        lines = [
            f"verification sweep: {self.draws} draws, seed {self.seed}",
            f"12-dim closed forms vs partial trace: max |dev| = {self.element_dev_12:.3e}"
            f" (tol {ELEMENT_TOL:g})",
            f"18-dim closed forms vs partial trace: max |dev| = {self.element_dev_18:.3e}"
            f" (tol {ELEMENT_TOL:g})",
        ]
        if self.worst_elements:
            lines.append("largest element deviations:")
            for dim, i, j, dev in self.worst_elements:
                lines.append(f"  {dim}-dim element ({i + 1},{j + 1}): {dev:.3e}")
        lines.append(f"element relations (field reversal, sqrt2 scalings), tol {RELATION_TOL:g}:")
        for name, dev in sorted(self.relation_devs.items()):
            lines.append(f"  {name}: max |dev| = {dev:.3e}")
        lines.append(
            f"partial-transpose blocks: off-block max {self.off_block_dev:.3e} "
            f"(tol {OFF_BLOCK_TOL:g}), pooled-spectrum max dev {self.block_spectrum_dev:.3e} "
            f"(tol {BLOCK_SPECTRUM_TOL:g})"
        )
        lines.append(
            f"ground-state table vs engine: max |dev| = {self.table2_dev:.3e} "
            f"(tol {TABLE2_SURD_TOL:g})"
        )
        lines.append("suspected-typo checks:")
        for item in self.typo_evidence:
            lines.append(f"  {item}")
        if self.failures:
            lines.append("FAILURES:")
            for item in self.failures:
                lines.append(f"  {item}")
            lines.append("result: FAIL")
        else:
            lines.append("result: PASS")
        return "\n".join(lines) + "\n"


def _draw_params(rng) -> tuple[ModelParams, float]:
    j = rng.uniform(0.5, 2.0)
    j1 = rng.uniform(0.0, 3.0)
    h = rng.uniform(-4.0, 4.0)
    kt = rng.uniform(0.05, 5.0)
    return ModelParams(j=j, j1=j1, h=h), 1.0 / kt


def _brute_rdms(params: ModelParams, beta: float):
    spec = diagonalize(build_hamiltonian(params))
    state = gibbs_state(spec, beta)
    r18 = partial_trace(state, ("mu1", "S1", "S2"))
    r12 = partial_trace(state, ("mu1", "mu2", "S2"))
    return spec, state, r12, r18


def _d37_literal_prefactor(params: ModelParams, beta: float, z: float) -> float:
    """rho_3,7 with the exponent printed as beta*J1/24 instead of beta*J1/4."""
    corrected = oracle._d_r37(oracle._Ctx(params.j, params.j1, params.h, beta), z)
    return corrected * math.exp(beta * params.j1 / 24) / math.exp(beta * params.j1 / 4)


def _const_c_literal_240() -> float:
    base = (3 * math.sqrt(33) + 2 * math.sqrt(41) + 5 * math.sqrt(17) - 30) / 160
    return base + abs(7 + oracle._cosroot(2 * math.sqrt(240), 2, 247 / 240**2, 1288 / 240**3)) / 240


def _literal_variants(params: ModelParams, beta: float, z: float) -> dict[str, tuple[str, float]]:
    """Printed-but-rejected element forms: name -> (bank position, value)."""
    t = oracle._Ctx(params.j, params.j1, params.h, beta)
    # a15 / a17 with the full-argument cosh(beta*h) on the second line
    a24 = oracle._a_r24(t, z) + SQRT2 * t.pref(180, z) * (t.ch - t.c) * t.eh(0.5) * (
        10 * t.ea - 40 * t.ed + 18 * t.eb + 17 * t.ee + 25 * t.ec + 5 * t.ef
    )
    a27 = oracle._a_r27(t, z) - SQRT2 * t.pref(60, z) * (t.ch - t.c) * t.eh(0.5) * (
        -10 * t.ea - 6 * t.eb + 11 * t.ee + 10 * t.ec - 10 * t.ef
    )
    # d11 with the spurious exp(beta*h) on the last term
    d55 = oracle._d_r55(t, z) + t.pref(90, z) * 5 * t._w(t.j - 2 * t.j1) * (t.eh(1) - 1) * (
        3 * math.cosh(1.5 * t.beta * t.j1) - math.sinh(1.5 * t.beta * t.j1)
    )
    # d37 with the tail exactly as printed
    d511 = oracle._d_r511(t, z) + SQRT2 * t.pref(180, z) * (
        5 * t.eg * (t.csh3 + 3 * t.snh3)
        + 5 * t._w(t.j - 2 * t.j1)
        * (3 * math.cosh(1.5 * t.beta * t.j1) - math.sinh(1.5 * t.beta * t.j1))
        - 20 * t._w(t.j - 2 * t.j1) * math.cosh(1.5 * t.beta * t.j1)
        + 10 * math.exp(t.beta * (2 * t.j + t.j1 / 2))
    )
    return {
        "a15 cosh(beta*h) variant": ("12:(2,4)", a24),
        "a17 cosh(beta*h) variant": ("12:(2,7)", a27),
        "d11 exp(beta*h) variant": ("18:(5,5)", d55),
        "d37 printed-tail variant": ("18:(5,11)", d511),
    }


def run_verification(draws: int = 60, seed: int = 1234) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport(seed=seed, draws=draws)
    element_max_12: dict[tuple[int, int], float] = {}
    element_max_18: dict[tuple[int, int], float] = {}
    relation_max: dict[str, float] = {}
    literal_dev: dict[str, float] = {}
    d37_literal_dev = 0.0

    for _ in range(draws):
        params, beta = _draw_params(rng)
        spec, state, r12, r18 = _brute_rdms(params, beta)
        z = spec.z_at(beta)
        o12 = oracle.eval_rdm12(params, beta, z)
        o18 = oracle.eval_rdm18(params, beta, z)
        for (bank, brute, closed) in ((12, r12.matrix, o12), (18, r18.matrix, o18)):
            dev = np.abs(closed - brute)
            target = element_max_12 if bank == 12 else element_max_18
            for i, j in zip(*np.nonzero(dev > target_floor(dev))):
                key = (int(i), int(j))
                target[key] = max(target.get(key, 0.0), float(dev[i, j]))

        params_m = ModelParams(j=params.j, j1=params.j1, h=-params.h)
        _, _, r12m, r18m = _brute_rdms(params_m, beta)
        for (relations, mat, mat_m) in (
            (RELATIONS_12, r12.matrix, r12m.matrix),
            (RELATIONS_18, r18.matrix, r18m.matrix),
        ):
            for name, (i, j), (k, l), scale, flipped in relations:
                src = (mat_m if flipped else mat)[k, l]
                dev = abs(mat[i, j] - scale * src)
                relation_max[name] = max(relation_max.get(name, 0.0), dev)

        for rdm, sites in ((r12, ("mu1", "mu2", "S2")), (r18, ("mu1", "S1", "S2"))):
            for site in sites:
                pt = partial_transpose(rdm, site)
                report.off_block_dev = max(report.off_block_dev, oracle.off_block_max(pt, site))
                pooled = np.sort(
                    np.concatenate([np.linalg.eigvalsh(b) for b in oracle.blocks_of_pt(pt, site)])
                )
                full = np.linalg.eigvalsh(pt)
                report.block_spectrum_dev = max(
                    report.block_spectrum_dev, float(np.abs(pooled - full).max())
                )

        brute_d37 = r18.matrix[2, 6]
        d37_literal_dev = max(
            d37_literal_dev, abs(_d37_literal_prefactor(params, beta, z) - brute_d37)
        )
        brute_at = {"12:(2,4)": r12.matrix[1, 3], "12:(2,7)": r12.matrix[1, 6],
                    "18:(5,5)": r18.matrix[4, 4], "18:(5,11)": r18.matrix[4, 10]}
        for name, (pos, value) in _literal_variants(params, beta, z).items():
            literal_dev[name] = max(literal_dev.get(name, 0.0), abs(value - brute_at[pos]))

    report.element_dev_12 = max(element_max_12.values(), default=0.0)
    report.element_dev_18 = max(element_max_18.values(), default=0.0)
    worst = sorted(
        [(12, i, j, d) for (i, j), d in element_max_12.items()]
        + [(18, i, j, d) for (i, j), d in element_max_18.items()],
        key=lambda item: -item[3],
    )
    report.worst_elements = [w for w in worst[:5] if w[3] > ELEMENT_TOL / 10]
    report.relation_devs = relation_max

    # ground-state table against the engine
    table_rows = []
    for regime, points in oracle.REPRESENTATIVE_POINTS.items():
        for row, (j1, h) in zip(oracle.table2_rows(regime), points):
            spec = diagonalize(build_hamiltonian(ModelParams(j=1.0, j1=j1, h=h)))
            state = ground_manifold(spec)
            r18 = partial_trace(state, ("mu1", "S1", "S2"))
            r12 = partial_trace(state, ("mu1", "mu2", "S2"))
            computed = (
                negativity(r18, "mu1").value, negativity(r18, "S1").value,
                negativity(r18, "S2").value, negativity(r12, "mu1").value,
                negativity(r12, "mu2").value, negativity(r12, "S2").value,
            )
            for col, (got, want) in enumerate(zip(computed, row.values)):
                table_rows.append((regime, row.states[0], col, got, want))
    report.table2_dev = max(abs(g - w) for _, _, _, g, w in table_rows)

    # typo inventory with numbers
    h_at = next(g for r, s, c, g, w in table_rows if (r, s, c) == ("at", "1,1/2,1/2", 5))
    col6 = next(g for r, s, c, g, w in table_rows if (r, s, c) == ("above", "0,3/2,3/2", 5))
    v35 = (3 * math.sqrt(41) - 11) / 35
    v36 = (3 * math.sqrt(41) - 11) / 36
    report.typo_evidence = [
        "rho_2,2 (12-dim) 'J_x' read as J: element matches brute force "
        f"(max dev {element_max_12.get((1, 1), 0.0):.3e})",
        "rho_3,7 (18-dim) prefactor beta*J1/4 matches brute force "
        f"(max dev {element_max_18.get((2, 6), 0.0):.3e}); literal beta*J1/24 "
        f"deviates by up to {d37_literal_dev:.3e}",
        f"constant C with sqrt(247): {oracle.table2_constant('C'):.6f} (engine "
        f"matches); printed sqrt(240) variant gives {_const_c_literal_240():.6f}",
        f"table cell S2|mu1mu2 of |0,3/2,3/2>: engine {col6:.6f}; /36 form "
        f"{v36:.6f} (dev {abs(col6 - v36):.1e}), printed /35 form {v35:.6f} "
        f"(dev {abs(col6 - v35):.1e})",
        f"constant H: closed form {oracle.table2_constant('H'):.6f} = engine "
        f"{h_at:.6f}; printed decimal 0.089 is inconsistent",
    ]
    report.typo_evidence.extend(
        f"{name} deviates from brute force by up to {dev:.3e} (corrected form matches)"
        for name, dev in sorted(literal_dev.items())
    )

    if report.element_dev_12 > ELEMENT_TOL:
        report.failures.append(f"12-dim element deviation {report.element_dev_12:.3e}")
    if report.element_dev_18 > ELEMENT_TOL:
        report.failures.append(f"18-dim element deviation {report.element_dev_18:.3e}")
    for name, dev in relation_max.items():
        if dev > RELATION_TOL:
            report.failures.append(f"relation {name} deviation {dev:.3e}")
    if report.off_block_dev > OFF_BLOCK_TOL:
        report.failures.append(f"off-block leakage {report.off_block_dev:.3e}")
    if report.block_spectrum_dev > BLOCK_SPECTRUM_TOL:
        report.failures.append(f"block spectrum deviation {report.block_spectrum_dev:.3e}")
    if report.table2_dev > TABLE2_SURD_TOL:
        report.failures.append(f"ground-state table deviation {report.table2_dev:.3e}")
    return report


def target_floor(dev: np.ndarray) -> float:
    """Record only deviations above float dust to keep the report small."""
    return 1e-16
