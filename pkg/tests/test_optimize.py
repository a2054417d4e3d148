"""Power-split optimization, high-SNR roots, and critical-SNR solvers."""
import math

import pytest

from ansec.optimize import (
    CriticalSnr,
    OptResult,
    critical_snr,
    critical_snr_exact,
    critical_snr_upper_bound,
    from_db,
    high_snr_optimal_z,
    optimize_phi,
    optimize_phi_adaptive,
    to_db,
)
from ansec.secrecy import (
    CsiError,
    PowerSplit,
    SystemConfig,
    secrecy_rate,
    secrecy_rate_imperfect,
)


def rel_err(got: float, want: float) -> float:
    return abs(got - want) / max(abs(want), 1e-300)


class TestDbConversions:
    @pytest.mark.parametrize("p", [1e-6, 0.5, 1.0, 10.0, 123.456, 1e9])
    def test_round_trip(self, p):
        assert rel_err(from_db(to_db(p)), p) < 1e-12

    def test_known_points(self):
        assert to_db(1.0) == 0.0
        assert to_db(100.0) == 20.0
        assert rel_err(from_db(3.01), 10.0 ** 0.301) < 1e-15

    def test_infinity_passes_through(self):
        assert to_db(math.inf) == math.inf

    def test_domain(self):
        with pytest.raises(ValueError):
            to_db(0.0)
        with pytest.raises(ValueError):
            to_db(-3.0)


class TestOptimizePhi:
    def test_two_antennas_high_snr(self):
        res = optimize_phi(SystemConfig(na=2), 1e3)
        assert abs(res.phi_star - 0.5) <= 0.01
        assert res.converged
        assert res.iterations > 0

    def test_many_antennas_high_snr(self):
        res = optimize_phi(SystemConfig(na=64), 1e3)
        assert abs(res.phi_star - 0.55) <= 0.01

    def test_result_is_self_consistent(self):
        cfg, p = SystemConfig(na=8, ne=2), 50.0
        res = optimize_phi(cfg, p)
        assert abs(res.z_star * res.phi_star - 1.0) <= 1e-12
        again = secrecy_rate(cfg, p, PowerSplit(res.phi_star)).c
        assert rel_err(res.c_star, again) < 1e-12

    def test_matches_dense_grid_scan(self):
        # colluding-eavesdropper case favors spending more power on noise
        cfg, p = SystemConfig(na=16, ne=4), 100.0
        res = optimize_phi(cfg, p)
        assert res.phi_star < 0.5
        best_c, best_phi = -1.0, 0.0
        for i in range(1, 2000):
            phi = i / 2000.0
            c = secrecy_rate(cfg, p, PowerSplit(phi)).c
            if c > best_c:
                best_c, best_phi = c, phi
        assert abs(res.phi_star - best_phi) <= 1e-3
        assert res.c_star >= best_c - 1e-12

    def test_below_critical_power(self):
        res = optimize_phi(SystemConfig(na=2), from_db(1.0))
        assert res.c_star == 0.0
        assert not res.converged

    def test_imperfect_csi_lowers_optimum(self):
        cfg, p = SystemConfig(na=6), 100.0
        clean = optimize_phi(cfg, p)
        noisy = optimize_phi(cfg, p, err=CsiError(0.1))
        assert noisy.c_star < clean.c_star
        again = secrecy_rate_imperfect(cfg, p, PowerSplit(noisy.phi_star), CsiError(0.1)).c
        assert rel_err(noisy.c_star, again) < 1e-12

    def test_power_validation(self):
        with pytest.raises(ValueError):
            optimize_phi(SystemConfig(na=4), 0.0)

    def test_beats_nearby_splits(self):
        cfg, p = SystemConfig(na=4, ne=2), 30.0
        res = optimize_phi(cfg, p)
        for d in (-0.003, -0.001, 0.001, 0.003):
            assert res.c_star >= secrecy_rate(cfg, p, PowerSplit(res.phi_star + d)).c - 1e-12


class TestAdaptiveSplit:
    def test_close_to_fixed_split_at_moderate_snr(self):
        cfg, p = SystemConfig(na=4), 10.0
        fixed = optimize_phi(cfg, p).c_star
        adaptive = optimize_phi_adaptive(cfg, p)
        assert abs(adaptive - fixed) < 0.02

    @pytest.mark.parametrize(
        "na,p_db", [(2, 20.0), (4, 10.0), (8, 20.0), (2, 5.0), (6, 15.0)]
    )
    def test_dominates_fixed_split(self, na, p_db):
        cfg, p = SystemConfig(na=na), from_db(p_db)
        fixed = optimize_phi(cfg, p).c_star
        adaptive = optimize_phi_adaptive(cfg, p)
        assert adaptive >= fixed - 1e-9

    def test_strict_gain_near_critical_power(self):
        # per-realization splitting keeps earning rate where the fixed split stalls
        cfg, p = SystemConfig(na=2), from_db(5.0)
        fixed = optimize_phi(cfg, p).c_star
        adaptive = optimize_phi_adaptive(cfg, p)
        assert adaptive > fixed + 0.05

    def test_quadrature_refinement_is_stable(self):
        cfg, p = SystemConfig(na=4), 10.0
        a64 = optimize_phi_adaptive(cfg, p, quadrature_order=64)
        a96 = optimize_phi_adaptive(cfg, p, quadrature_order=96)
        assert abs(a64 - a96) < 1e-6

    def test_order_validation(self):
        with pytest.raises(ValueError):
            optimize_phi_adaptive(SystemConfig(na=4), 10.0, quadrature_order=1)
        with pytest.raises(ValueError):
            optimize_phi_adaptive(SystemConfig(na=4), 10.0, quadrature_order=64.0)


class TestHighSnrRoots:
    @pytest.mark.parametrize(
        "na,want",
        [
            # geometric bisection of the stationarity condition, mpmath mp.dps=40
            (2, 2.0),
            (3, 1.9004256799883599),
            (4, 1.8677850028473809),
            (8, 1.8312494953556586),
            (64, 1.8075568083993645),
        ],
    )
    def test_single_eavesdropper_roots(self, na, want):
        got = high_snr_optimal_z(SystemConfig(na=na), "exact-ne1")
        assert abs(got - want) < 1e-9

    def test_two_antenna_closed_value(self):
        assert high_snr_optimal_z(SystemConfig(na=2), "na2-closed") == 2.0

    @pytest.mark.parametrize(
        "ne,want",
        [
            # geometric bisection of the stationarity condition, mpmath mp.dps=40
            (1, 1.8046416611221064),
            (2, 2.23112165244),
            (4, 2.84155487192),
        ],
    )
    def test_large_na_roots(self, ne, want):
        got = high_snr_optimal_z(SystemConfig(na=128, ne=ne), "large-na")
        assert abs(got - want) < 1e-8

    def test_large_na_single_eavesdropper_band(self):
        got = high_snr_optimal_z(SystemConfig(na=128), "large-na")
        assert abs(got - 1.80) <= 0.01

    @pytest.mark.parametrize("ne", [1, 2, 4, 9, 16])
    def test_asymptotic_closed_form(self, ne):
        got = high_snr_optimal_z(SystemConfig(na=64, ne=ne), "large-na-asymptotic")
        assert got == 1.0 + math.sqrt(ne)

    @pytest.mark.parametrize("na", [3, 4, 8])
    def test_root_is_a_high_snr_maximizer(self, na):
        cfg, p = SystemConfig(na=na), 1e8
        z = high_snr_optimal_z(cfg, "exact-ne1")
        best = secrecy_rate(cfg, p, PowerSplit.from_z(z)).c
        for dz in (-0.01, 0.01):
            assert best >= secrecy_rate(cfg, p, PowerSplit.from_z(z + dz)).c - 1e-9

    def test_regime_validation(self):
        with pytest.raises(ValueError):
            high_snr_optimal_z(SystemConfig(na=4), "na2-closed")
        with pytest.raises(ValueError):
            high_snr_optimal_z(SystemConfig(na=4, ne=2), "exact-ne1")
        with pytest.raises(ValueError):
            high_snr_optimal_z(SystemConfig(na=4), "no-such-regime")


class TestCriticalSnr:
    @pytest.mark.parametrize(
        "na,s2,want_db",
        [(2, 0.0, 3.01), (6, 0.1, -4.27), (10, 0.2, -6.28), (4, 0.0, -2.62)],
    )
    def test_exact_reference_points(self, na, s2, want_db):
        # two-decimal values from the reference critical-SNR table
        err = CsiError(s2) if s2 else None
        p_c = critical_snr_exact(SystemConfig(na=na), PowerSplit(0.5), err)
        assert abs(to_db(p_c) - want_db) <= 0.05

    @pytest.mark.parametrize(
        "na,s2,want_db",
        [(2, 0.0, 6.02), (4, 0.1, -1.20), (8, 0.0, -6.01), (10, 0.2, -5.96)],
    )
    def test_bound_reference_points(self, na, s2, want_db):
        # two-decimal values from the reference critical-SNR table
        err = CsiError(s2) if s2 else None
        p_c = critical_snr_upper_bound(SystemConfig(na=na), PowerSplit(0.5), err)
        assert abs(to_db(p_c) - want_db) <= 0.05

    def test_bound_goes_infinite_first(self):
        cfg, split, err = SystemConfig(na=2), PowerSplit(0.5), CsiError(0.2)
        assert math.isinf(critical_snr_upper_bound(cfg, split, err))
        exact = critical_snr_exact(cfg, split, err)
        assert math.isfinite(exact)
        assert abs(to_db(exact) - 6.99) <= 0.05

    def test_exact_infinite_when_ceiling_below_leakage(self):
        # estimation error caps Bob's rate below Eve's no matter the power
        p_c = critical_snr_exact(SystemConfig(na=2), PowerSplit(0.5), CsiError(0.5))
        assert math.isinf(p_c)

    @pytest.mark.parametrize("na", [2, 4, 6, 8, 10])
    @pytest.mark.parametrize("s2", [0.0, 0.1, 0.2])
    def test_exact_never_exceeds_bound(self, na, s2):
        err = CsiError(s2) if s2 else None
        res = critical_snr(SystemConfig(na=na), PowerSplit(0.5), err)
        assert res.p_c_exact <= res.p_c_bound

    def test_combined_result_db_properties(self):
        res = critical_snr(SystemConfig(na=2), PowerSplit(0.5))
        assert abs(res.p_c_exact_db - 3.01) <= 0.05
        assert abs(res.p_c_bound_db - 6.02) <= 0.05

    def test_infinite_db_property(self):
        res = CriticalSnr(p_c_bound=math.inf, p_c_exact=2.0)
        assert res.p_c_bound_db == math.inf
        assert abs(res.p_c_exact_db - to_db(2.0)) < 1e-12

    def test_rate_sign_flips_at_exact_threshold(self):
        cfg, split = SystemConfig(na=4), PowerSplit(0.5)
        p_c = critical_snr_exact(cfg, split, None)
        below = secrecy_rate(cfg, p_c * 0.98, split)
        above = secrecy_rate(cfg, p_c * 1.02, split)
        assert below.c1 - below.c2 < 0
        assert above.c1 - above.c2 > 0

    def test_result_invariant_validation(self):
        with pytest.raises(ValueError):
            CriticalSnr(p_c_bound=1.0, p_c_exact=2.0)


class TestOptResult:
    def test_fields(self):
        r = OptResult(phi_star=0.5, z_star=2.0, c_star=1.0, iterations=7, converged=True)
        assert r.phi_star == 0.5 and r.iterations == 7
