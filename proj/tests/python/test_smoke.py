import math

import driftwos as dw


def interval_problem():
    dom = dw.Domain.box([-1.0], [1.0])
    f = dw.BoundaryFunction.affine(0.5, [0.5])
    return dw.ProblemSpec(1.0, [0.8], dom, f)


def test_kappa_closed_forms():
    for z in (0.1, 1.0, 5.0, 40.0):
        assert math.isclose(dw.kappa(1, z), 1.0 / math.cosh(z), rel_tol=1e-12)
        assert math.isclose(dw.kappa(3, z), z / math.sinh(z), rel_tol=1e-12)
    assert dw.kappa(2, 0.0) == 1.0


def test_domain_queries():
    ball = dw.Domain.ball([0.0, 0.0], 1.0)
    assert ball.contains([0.5, 0.0])
    assert not ball.contains([1.5, 0.0])
    assert math.isclose(ball.distance_to_boundary([0.5, 0.0]), 0.5)
    proj = ball.project_to_boundary([0.5, 0.0])
    assert math.isclose(math.hypot(*proj), 1.0, abs_tol=1e-12)


def test_sample_exit_unit_norms():
    draws = dw.sample_exit(d=3, a=1.0, b=[2.0, 0.0, 0.0], r=1.0, n=500, seed=4)
    assert len(draws) == 500
    for w in draws:
        assert math.isclose(sum(c * c for c in w), 1.0, abs_tol=1e-12)
    # drift pulls the mean toward +x
    assert sum(w[0] for w in draws) / len(draws) > 0.3


def test_run_walk_reaches_boundary():
    p = interval_problem()
    cfg = dw.WalkConfig()
    cfg.shell = 1e-4
    out = dw.run_walk(p, [0.0], cfg, seed=1)
    assert out["exit_point"][0] in (-1.0, 1.0)
    assert not out["budget_exhausted"]


def test_estimate_point_matches_closed_form():
    p = interval_problem()
    cfg = dw.WalkConfig()
    cfg.shrink = 1.0
    cfg.shell = 1e-5
    est = dw.estimate_point(p, [0.0], cfg, n_walks=20000, seed=12, workers=2)
    want = math.exp(0.4) / (2.0 * math.cosh(0.4))
    assert abs(est.mean - want) < 3.0 * est.std_error
    assert not est.degraded()


def test_estimate_point_worker_invariance():
    p = interval_problem()
    cfg = dw.WalkConfig()
    a = dw.estimate_point(p, [0.0], cfg, n_walks=5000, seed=7, workers=1)
    b = dw.estimate_point(p, [0.0], cfg, n_walks=5000, seed=7, workers=4)
    assert a.mean == b.mean
    assert a.std_error == b.std_error


def test_estimate_grid_skips_outside_nodes():
    dom = dw.Domain.ball([0.0, 0.0], 1.0)
    p = dw.ProblemSpec(1.0, [0.0, 0.0], dom, dw.BoundaryFunction.constant(2.0))
    cfg = dw.WalkConfig()
    nodes, skipped = dw.estimate_grid(
        p, lo=[-2.0, 0.0], hi=[0.5, 0.0], counts=[3, 1], cfg=cfg, n_walks=10, seed=3
    )
    assert len(nodes) + len(skipped) == 3
    assert len(skipped) == 1  # the node at x = -2
    for _, est in nodes:
        assert est.mean == 2.0


def test_validation_suite_bessel():
    checks = dw.run_validation_suite("bessel")
    assert checks and all(c["pass"] for c in checks)
