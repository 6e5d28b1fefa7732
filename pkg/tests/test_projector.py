import math

import numpy as np
import pytest

from superproj import (
    K_MAX,
    Locus,
    LocusKind,
    InvalidConfig,
    Point2,
    PolygonSpec,
    ProjectionTrace,
    StopReason,
    SuperellipseParams,
    absolute_errors,
    boundary_point,
    constraint_value,
    hausdorff_estimate,
    oracle_project,
    project,
)

S54 = SuperellipseParams(5.0, 3.0, 4.0)
S_EX = SuperellipseParams(math.sqrt(15.0), math.sqrt(5.0), 4.0)
Q_EX = Point2(3.75, 4.0)
REF = Point2(3.0, 2.0)

# ten-decimal reference iterates for S_EX, q=(3.75,4), k0=6, with the
# locus of each iterate and its distance to the true projection (3,2)
REFERENCE_ROWS = [
    # (x, y, locus_kind, locus_index, abs_error, tol)
    (1.8242639597, 1.7661042090, LocusKind.EDGE, 0, 1.1987754074, 1e-8),
    (3.2567778122, 1.8803015465, LocusKind.VERTEX, 1, 0.2833064852, 1e-8),
    (3.1716810745, 1.9037785768, LocusKind.EDGE, 2, 0.1968068942, 1e-8),
    (2.9806294820, 1.9857818721, LocusKind.EDGE, 4, 0.0240285690, 1e-8),
    (2.9956465266, 2.0016270159, LocusKind.VERTEX, 9, 0.0046475704, 1e-6),
    (2.9956465266, 2.0016270159, LocusKind.VERTEX, 18, 0.0046475704, 1e-6),
    (2.9956465266, 2.0016270159, LocusKind.VERTEX, 36, 0.0046475704, 1e-6),
    (2.9956465266, 2.0016270159, LocusKind.VERTEX, 72, 0.0046475704, 1e-6),
    (2.9956984396, 2.0016074211, LocusKind.EDGE, 143, 0.0045920828, 1e-6),
    (3.0000939930, 1.9999594588, LocusKind.EDGE, 287, 0.0001023635, 1e-6),
]


@pytest.fixture(scope="module")
def reference_trace():
    return project(S_EX, Q_EX, k0=6)


class TestConfigValidation:
    @pytest.mark.parametrize("k0", [2, 0, -3, 6.0, True, K_MAX * 2])
    def test_bad_k0(self, k0):
        with pytest.raises(InvalidConfig):
            project(S54, Point2(10.0, 0.0), k0=k0)

    @pytest.mark.parametrize("tol", [0.0, -1e-10, math.nan])
    def test_bad_tol(self, tol):
        with pytest.raises(InvalidConfig):
            project(S54, Point2(10.0, 0.0), tol=tol)

    @pytest.mark.parametrize("max_refine", [0, -1, 2.0, False])
    def test_bad_max_refine(self, max_refine):
        with pytest.raises(InvalidConfig):
            project(S54, Point2(10.0, 0.0), max_refine=max_refine)


class TestTrivialQueries:
    def test_interior_point(self):
        trace = project(S54, Point2(0.0, 0.0))
        assert trace.inside
        assert trace.iterations == 0
        assert len(trace.steps) == 1
        assert trace.final_point == Point2(0.0, 0.0)
        assert trace.converged
        assert trace.stop_reason is StopReason.TOLERANCE_MET
        assert trace.steps[0].locus is None

    def test_boundary_point_is_its_own_projection(self):
        trace = project(S_EX, Point2(3.0, 2.0))
        assert trace.inside
        assert len(trace.steps) == 1
        assert trace.final_point == Point2(3.0, 2.0)


class TestReferenceRun:
    def test_iterate_coordinates(self, reference_trace):
        for row, (x, y, _, _, _, tol) in zip(reference_trace.steps, REFERENCE_ROWS):
            assert row.point.x == pytest.approx(x, abs=tol)
            assert row.point.y == pytest.approx(y, abs=tol)

    def test_iterate_loci(self, reference_trace):
        for row, (_, _, kind, index, _, _) in zip(reference_trace.steps, REFERENCE_ROWS):
            assert row.locus == Locus(kind, index)

    def test_absolute_error_column(self, reference_trace):
        errors = absolute_errors(reference_trace, REF)
        for err, (_, _, _, _, expected, tol) in zip(errors, REFERENCE_ROWS):
            assert err == pytest.approx(expected, abs=tol)

    def test_stall_rows_are_bitwise_equal(self, reference_trace):
        # iterates 5 through 8 are the same vertex surviving three doublings
        pts = [s.point for s in reference_trace.steps[4:8]]
        assert all(p == pts[0] for p in pts)

    def test_k_doubles_every_step(self, reference_trace):
        ks = [s.k for s in reference_trace.steps]
        assert ks[0] == 6
        assert all(b == 2 * a for a, b in zip(ks, ks[1:]))

    def test_step_numbers_are_sequential(self, reference_trace):
        assert [s.n for s in reference_trace.steps] == list(
            range(1, len(reference_trace.steps) + 1)
        )

    def test_converges_past_the_stall(self, reference_trace):
        assert reference_trace.converged
        assert reference_trace.stop_reason is StopReason.TOLERANCE_MET
        oracle = oracle_project(S_EX, Q_EX)
        assert reference_trace.final_point.dist(oracle.point) <= 1e-6

    def test_iterates_stay_inside_disk(self, reference_trace):
        for step in reference_trace.steps:
            assert constraint_value(S_EX, step.point) <= 1.0 + 1e-12

    def test_distance_to_query_never_increases(self, reference_trace):
        d = [Q_EX.dist(s.point) for s in reference_trace.steps]
        assert all(b <= a + 1e-12 for a, b in zip(d, d[1:]))

    def test_distance_bracketed_by_oracle_and_gap_estimate(self, reference_trace):
        oracle = oracle_project(S_EX, Q_EX)
        final = Q_EX.dist(reference_trace.final_point)
        assert final >= oracle.distance - 1e-12
        gap = hausdorff_estimate(PolygonSpec(S_EX, reference_trace.k_final), samples=4096)
        assert final <= oracle.distance + gap


class TestStopRules:
    def test_tol_none_runs_exactly_max_refine_steps(self):
        trace = project(S_EX, Q_EX, k0=6, tol=None, max_refine=5)
        assert len(trace.steps) == 5
        assert not trace.converged
        assert trace.stop_reason is StopReason.MAX_REFINEMENTS_REACHED

    def test_max_refine_one_returns_initial_projection(self):
        trace = project(S_EX, Q_EX, k0=6, tol=None, max_refine=1)
        assert len(trace.steps) == 1
        assert trace.k_final == 6

    def test_k_max_guard(self):
        # The query must sit far out: support-line residuals scale with the
        # chord (~3e-13 at this k0), so a nearby point falls inside the
        # classification slack and never reaches the refinement loop.  The
        # tolerance stop is disabled because the on-axis iterate stalls
        # bitwise at (5, 0) and would otherwise win the race.
        trace = project(S54, Point2(1e6, 0.0), k0=3 * 2**45, tol=None)
        assert trace.stop_reason is StopReason.K_MAX_REACHED
        assert not trace.converged
        assert 2 * trace.k_final > K_MAX
        assert trace.k_final == 2 * 3 * 2**45
        assert trace.final_point.dist(Point2(5.0, 0.0)) <= 1e-9

    def test_wraparound_vertex_zero_stall(self):
        # q on the positive x-axis pins the iterate at vertex 0; candidate
        # edges wrap to [k-1, 0] and [0, 1] every step until the chord
        # shrinks below tol
        trace = project(S54, Point2(50.0, 0.0))
        assert trace.converged
        assert trace.stop_reason is StopReason.TOLERANCE_MET
        for step in trace.steps:
            assert step.locus == Locus(LocusKind.VERTEX, 0)
        assert trace.final_point.x == pytest.approx(5.0, abs=1e-12)
        assert trace.final_point.y == pytest.approx(0.0, abs=1e-12)


class TestConvergence:
    def test_matches_oracle_across_shapes(self):
        rng = np.random.default_rng(101)
        for p in (1.5, 2.0, 3.0, 4.0, 8.0):
            for _ in range(3):
                a = rng.uniform(0.5, 5.0)
                b = a * rng.uniform(0.2, 5.0)
                params = SuperellipseParams(a, b, p)
                theta = rng.uniform(0.0, 2.0 * math.pi)
                rho = rng.uniform(1.01, 40.0)
                bp = boundary_point(params, theta)
                q = Point2(rho * bp.x, rho * bp.y)
                trace = project(params, q)
                oracle = oracle_project(params, q)
                assert trace.final_point.dist(oracle.point) <= 1e-6

    def test_circle_closed_form(self):
        params = SuperellipseParams(2.0, 2.0, 2.0)
        rng = np.random.default_rng(103)
        for _ in range(20):
            theta = rng.uniform(0.0, 2.0 * math.pi)
            rho = rng.uniform(2.5, 100.0)
            q = Point2(rho * math.cos(theta), rho * math.sin(theta))
            n = math.hypot(q.x, q.y)
            trace = project(params, q)
            assert trace.final_point.x == pytest.approx(2.0 * q.x / n, abs=1e-9)
            assert trace.final_point.y == pytest.approx(2.0 * q.y / n, abs=1e-9)


class TestAbsoluteErrors:
    def test_interior_trace_gives_single_zero(self):
        q = Point2(0.5, 0.5)
        trace = project(S54, q)
        assert absolute_errors(trace, q) == [0.0]

    def test_final_point_reference_ends_at_zero(self, reference_trace):
        errors = absolute_errors(reference_trace, reference_trace.final_point)
        assert errors[-1] == 0.0
