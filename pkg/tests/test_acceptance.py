"""End-to-end acceptance suite.

Each test covers one acceptance criterion at its stated tolerance and prints
one PASS/FAIL line (visible with ``pytest -s tests/test_acceptance.py`` or in
the captured output of a failing run).  The whole module is designed to run
in well under 30 seconds on one core.
"""

import json

import numpy as np

import projalg as pa
from projalg import cli

SEED = 0x5EED


def report_line(num, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[ACCEPTANCE {num}] {name}: {status}{suffix}")


def make_groups():
    return {
        "z4": pa.make_cyclic_power(4, 1),
        "z32": pa.make_cyclic_power(3, 2),
        "s3": pa.symmetric_group(3),
        "lat1": pa.make_lattice(1),
        "lat2": pa.make_lattice(2),
    }


def random_coboundary(group, rng):
    vals = rng.uniform(-np.pi, np.pi, group.order)
    vals[0] = 0.0
    return pa.coboundary(group, pa.GaugePhase.from_table(group, vals))


def random_function(group, rng, *, box=4, support=5):
    if group.is_finite:
        coeffs = {a: complex(rng.standard_normal(), rng.standard_normal())
                  for a in group.elements()}
    else:
        coeffs = {}
        for _ in range(support):
            m = tuple(int(x) for x in rng.integers(-box, box + 1, group.d))
            coeffs[m] = complex(rng.standard_normal(), rng.standard_normal())
    return pa.GroupFunction(group, coeffs)


def test_criterion_1_cocycle_axioms():
    """Constraint residuals and post-normalization identities for the suite."""
    rng = np.random.default_rng(SEED)
    gs = make_groups()
    cases = []
    for key in ("z4", "z32", "s3"):
        cases.append((f"zero[{key}]", gs[key], pa.zero_cocycle(gs[key])))
        for i in range(20):
            cases.append((f"coboundary[{key}#{i}]", gs[key],
                          random_coboundary(gs[key], rng)))
    for key in ("lat1", "lat2"):
        g = gs[key]
        for i in range(3):
            theta = rng.uniform(-1.5, 1.5, (g.d, g.d))
            cases.append((f"bilinear[{key}#{i}]", g, pa.BilinearCocycle(g, theta)))
    for n in range(2, 9):
        cases.append((f"clockshift[n={n}]", pa.make_cyclic_power(n, 2),
                      pa.measured_cocycle(n)))

    worst_condition = 0.0
    worst_identity = 0.0
    ok = True
    for name, group, alpha in cases:
        validation = pa.validate_cocycle(group, alpha, tol=1e-10, samples=1000,
                                         seed=SEED)
        worst_condition = max(worst_condition, validation.checks[0].max_residual)
        ok = ok and validation.passed
        normalized, _ = pa.normalize(group, alpha, validate=False)
        identities = pa.check_identities(group, normalized, tol=1e-10, seed=SEED)
        worst_identity = max(worst_identity,
                             max(c.max_residual for c in identities.checks))
        ok = ok and identities.passed
    report_line(1, "cocycle axioms and derived identities", ok,
                f"{len(cases)} cocycles, worst condition {worst_condition:.2e}, "
                f"worst identity {worst_identity:.2e}")
    assert ok


def criterion_2_3_groups():
    rng = np.random.default_rng(SEED)
    cases = []
    for n in range(2, 9):
        g = pa.make_cyclic_power(n, 1)
        cases.append((f"z{n}[vector]", g, pa.zero_cocycle(g)))
    g = pa.make_cyclic_power(4, 1)
    alpha, _ = pa.normalize(g, random_coboundary(g, rng))
    cases.append(("z4[coboundary]", g, alpha))
    for n in (2, 3):
        g = pa.make_cyclic_power(n, 2)
        cases.append((f"z{n}2[vector]", g, pa.zero_cocycle(g)))
        alpha, _ = pa.normalize(g, pa.measured_cocycle(n))
        cases.append((f"z{n}2[clockshift]", g, alpha))
    s3 = pa.symmetric_group(3)
    cases.append(("s3[vector]", s3, pa.zero_cocycle(s3)))
    return cases


def test_criterion_2_self_conjugacy():
    """C R(a) C^-1 = L(a) entrywise below 1e-12, exhaustively over a."""
    worst = 0.0
    for name, group, alpha in criterion_2_3_groups():
        pair = pa.regular_reps(group, alpha)
        C = pair.C
        for a in group.elements():
            worst = max(worst, float(np.max(np.abs(
                C @ pair.R[a] @ C - pair.L[a]))))
    ok = worst < 1e-12
    report_line(2, "self-conjugacy of regular representations", ok,
                f"worst residual {worst:.2e}")
    assert ok


def test_criterion_3_completeness():
    """The assembled identity-resolution matrix equals 1 below 1e-12."""
    worst = 0.0
    ok = True
    for name, group, alpha in criterion_2_3_groups():
        rep = pa.completeness_check(group, alpha, tol=1e-12)
        worst = max(worst, rep.checks[0].max_residual)
        ok = ok and rep.passed
    report_line(3, "completeness of the integration functional", ok,
                f"worst residual {worst:.2e}")
    assert ok


def test_criterion_4_integral_matches_representation_sum():
    """Character inversion round trips; regular traces pick out the identity."""
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for group in (pa.make_cyclic_power(5, 1), pa.make_cyclic_power(4, 2)):
        for _ in range(100):
            f = random_function(group, rng)
            back = pa.invert_vector_finite(pa.character_transform(f), group)
            worst = max(worst, back.max_diff(f))
    ok = worst < 1e-12
    s3 = pa.symmetric_group(3)
    pair = pa.regular_reps(s3, pa.zero_cocycle(s3))
    traces_exact = all(
        np.trace(pair.R[a]) == (6.0 if a == s3.identity() else 0.0)
        for a in s3.elements())
    ok = ok and traces_exact
    report_line(4, "inversion equals the sum over representations", ok,
                f"worst round-trip {worst:.2e}, regular traces exact: "
                f"{traces_exact}")
    assert ok


def test_criterion_5_plancherel():
    """Norm identity below 1e-12 over 200 seeded functions per group."""
    rng = np.random.default_rng(SEED)
    gs = make_groups()
    z4 = gs["z4"]
    z22 = pa.make_cyclic_power(2, 2)
    z32 = gs["z32"]
    norm_cob, _ = pa.normalize(z4, random_coboundary(z4, rng))
    norm_torus3, _ = pa.normalize(z32, pa.measured_cocycle(3))
    cases = [
        ("z4[vector]", z4, pa.zero_cocycle(z4)),
        ("z4[coboundary]", z4, norm_cob),
        ("z22[clockshift]", z22, pa.measured_cocycle(2)),
        ("z32[clockshift]", z32, norm_torus3),
        ("s3[vector]", gs["s3"], pa.zero_cocycle(gs["s3"])),
        ("lat2[bilinear]", gs["lat2"],
         pa.BilinearCocycle(gs["lat2"], [[0.0, 0.9], [-0.9, 0.0]])),
    ]
    worst = 0.0
    for name, group, alpha in cases:
        assert alpha.normalized
        for _ in range(200):
            f = random_function(group, rng)
            lhs, rhs = pa.plancherel_values(f, alpha)
            worst = max(worst, abs(lhs - rhs))
    ok = worst < 1e-12
    report_line(5, "norm identity for projective transforms", ok,
                f"{len(cases)} groups x 200 functions, worst {worst:.2e}")
    assert ok


def test_criterion_6_deformed_convolution_theorem():
    """Matrix transform of the deformed convolution equals the matrix product."""
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for n in (2, 3, 4, 5):
        rep = pa.matrix_representation(n)
        group, alpha = rep.group, rep.cocycle
        for _ in range(50):
            f = random_function(group, rng)
            g = random_function(group, rng)
            h = pa.deformed_convolution(f, g, alpha)
            lhs = pa.fourier(h, rep)
            rhs = pa.fourier(f, rep) @ pa.fourier(g, rep)
            worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    ok = worst < 1e-12
    report_line(6, "deformed convolution theorem on torus realizations", ok,
                f"n in 2..5, 50 pairs each, worst {worst:.2e}")
    assert ok


def test_criterion_7_clock_shift_realization():
    """Generator orders, traces, commutators, and trace/integral agreement."""
    rng = np.random.default_rng(SEED)
    worst_order = worst_trace = worst_comm = worst_agree = 0.0
    for n in range(2, 9):
        group = pa.make_cyclic_power(n, 2)
        u1, u2 = pa.clock_shift_matrices(n)
        eye = np.eye(n)
        worst_order = max(
            worst_order,
            float(np.max(np.abs(np.linalg.matrix_power(u1, n) - eye))),
            float(np.max(np.abs(np.linalg.matrix_power(u2, n) - eye))))
        mats = pa.element_matrices(n)
        for m, mat in mats.items():
            expected = n if m == (0, 0) else 0.0
            worst_trace = max(worst_trace, abs(np.trace(mat) - expected))
        comm = u1 @ u2 @ u1.conj().T @ u2.conj().T
        worst_comm = max(worst_comm, float(np.max(np.abs(
            comm - np.exp(2j * np.pi / n) * eye))))
        alpha = pa.measured_cocycle(n)
        for _ in range(50):
            coeffs = {m: complex(rng.standard_normal(), rng.standard_normal())
                      for m in group.elements()}
            u = pa.AlgebraElement(group, alpha, coeffs)
            total = sum(c * mats[m] for m, c in coeffs.items())
            worst_agree = max(worst_agree, abs(
                pa.trace_integral(n, total) - pa.ati_integral(u)))
    measured = pa.measured_cocycle(2).phase((1, 0), (0, 1))
    phase_ok = abs(measured - (-np.pi / 2)) < 1e-12
    ok = (worst_order < 1e-12 and worst_trace < 1e-12
          and worst_comm < 1e-12 and worst_agree < 1e-12 and phase_ok)
    report_line(7, "clock-shift realization", ok,
                f"orders {worst_order:.2e}, traces {worst_trace:.2e}, "
                f"commutators {worst_comm:.2e}, trace/integral {worst_agree:.2e}, "
                f"measured n=2 phase {measured!r}")
    assert ok


def test_criterion_8_calculus():
    """Leibniz, vanishing integrals, invariant measure, star-product routes."""
    rng = np.random.default_rng(SEED)
    lat2 = pa.make_lattice(2)
    theta = pa.BilinearCocycle(lat2, [[0.0, 0.8], [-0.3, 0.1]])
    d = pa.CoordinateDerivation(lat2, 0)
    leibniz = pa.check_leibniz(d, lat2, theta, trials=100, seed=SEED, tol=1e-12)

    worst_int = 0.0
    s = pa.Automorphism(lat2, (0.6, -1.1))
    worst_measure = 0.0
    worst_mult = 0.0
    for _ in range(100):
        coeffs = {tuple(int(x) for x in rng.integers(-4, 5, 2)):
                  complex(rng.standard_normal(), rng.standard_normal())
                  for _ in range(4)}
        u = pa.AlgebraElement(lat2, theta, coeffs)
        v = pa.AlgebraElement(
            lat2, theta,
            {tuple(int(x) for x in rng.integers(-4, 5, 2)):
             complex(rng.standard_normal(), rng.standard_normal())
             for _ in range(4)})
        worst_int = max(worst_int, abs(pa.integral_of_derivation(d, u)))
        worst_measure = max(worst_measure, abs(
            pa.ati_integral(pa.apply_automorphism(s, u)) - pa.ati_integral(u)))
        lhs = pa.apply_automorphism(s, u * v)
        rhs = pa.apply_automorphism(s, u) * pa.apply_automorphism(s, v)
        worst_mult = max(worst_mult, lhs.max_diff(rhs))

    worst_star = 0.0
    for n in (2, 3, 4):
        group = pa.make_cyclic_power(n, 2)
        alpha, _ = pa.normalize(group, pa.measured_cocycle(n))
        for _ in range(20):
            f = random_function(group, rng)
            g = random_function(group, rng)
            spectral = pa.moyal_star(pa.character_transform(f),
                                     pa.character_transform(g), alpha)
            direct = pa.character_transform(
                pa.deformed_convolution(f, g, alpha))
            worst_star = max(worst_star, float(np.max(np.abs(spectral - direct))))

    ok = (leibniz.passed and worst_int == 0.0 and worst_measure == 0.0
          and worst_mult < 1e-12 and worst_star < 1e-12)
    report_line(8, "derivations, automorphisms, star product", ok,
                f"leibniz {leibniz.checks[0].max_residual:.2e}, "
                f"integral-of-derivation {worst_int:.2e}, "
                f"measure {worst_measure:.2e}, multiplicative {worst_mult:.2e}, "
                f"star two-route {worst_star:.2e}")
    assert ok


def test_criterion_9_cli_determinism(tmp_path):
    """Byte-identical reports and the 0/1/2 exit-code contract."""
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj), encoding="utf-8")
        return str(p)

    golden_pass_group = write("pass_group.json",
                              {"kind": "cyclic_power", "n": 4, "d": 1})
    torus_group = write("torus_group.json",
                        {"kind": "cyclic_power", "n": 2, "d": 2})
    torus_cocycle = write("torus_cocycle.json", {"kind": "clockshift"})
    failing_cocycle = write("bad_cocycle.json",
                            {"kind": "table",
                             "alpha": [[0.0, 0.1], [0.0, 0.3]]})
    failing_group = write("z2_group.json", {"kind": "cyclic_power", "n": 2, "d": 1})
    broken_table = [[(i + j) % 3 for j in range(3)] for i in range(3)]
    broken_table[1][2] = 1
    malformed_group = write("broken_group.json",
                            {"kind": "table", "table": broken_table})

    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    for out in (out1, out2):
        code = cli.main(["verify", "--group", torus_group, "--cocycle",
                         torus_cocycle, "--seed", "5EED", "--out", str(out)])
        assert code == 0
    identical = out1.read_bytes() == out2.read_bytes()

    code_pass = cli.main(["verify", "--group", golden_pass_group,
                          "--out", str(tmp_path / "p.json")])
    code_fail = cli.main(["verify", "--group", failing_group, "--cocycle",
                          failing_cocycle, "--out", str(tmp_path / "f.json")])
    code_malformed = cli.main(["verify", "--group", malformed_group,
                               "--out", str(tmp_path / "m.json")])
    ok = (identical and code_pass == 0 and code_fail == 1 and code_malformed == 2)
    report_line(9, "CLI determinism and exit-code contract", ok,
                f"byte-identical: {identical}, exit codes "
                f"{code_pass}/{code_fail}/{code_malformed}")
    assert ok
