import itertools
import random

import pytest

from iwakit.errors import InsufficientDataError
from iwakit.fitting import (
    ClassNumberSeries,
    InvariantFit,
    NO_FIT,
    check_prediction,
    fit_invariants,
    predict_linear,
)


def series_for(p, lam, mu, nu, n_max=5, n0=0, head=None):
    """Exact law from n0 on, with optional overridden early values."""
    pts = []
    for n in range(n_max + 1):
        if n < n0:
            e = head[n]
        else:
            e = lam * n + mu * p ** n + nu
        pts.append((n, e))
    return ClassNumberSeries.from_pairs(p, pts)


class TestSeriesValidation:
    def test_increasing_layers_required(self):
        with pytest.raises(ValueError):
            ClassNumberSeries.from_pairs(3, [(1, 0), (0, 1)])

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            ClassNumberSeries.from_pairs(3, [(0, -1), (1, 0)])


class TestFit:
    def test_pure_lambda(self):
        fit = fit_invariants(series_for(3, 2, 0, 3))
        assert fit == InvariantFit(2, 0, 3, 0)

    def test_with_mu(self):
        fit = fit_invariants(series_for(5, 1, 2, -1))
        assert fit == InvariantFit(1, 2, -1, 0)

    def test_eventual_law(self):
        # garbage at n = 0, 1; law holds from n0 = 2
        s = series_for(3, 2, 0, 1, n_max=6, n0=2, head=[9, 0])
        fit = fit_invariants(s)
        assert fit == InvariantFit(2, 0, 1, 2)

    def test_minimal_n0_preferred(self):
        fit = fit_invariants(series_for(3, 1, 1, 0, n_max=6))
        assert fit.n0 == 0

    def test_no_fit(self):
        s = ClassNumberSeries.from_pairs(3, [(0, 0), (1, 1), (2, 4), (3, 100)])
        assert fit_invariants(s) is NO_FIT

    def test_negative_invariants_rejected(self):
        # points satisfy e = -n + 2 exactly, which is not a valid law
        s = ClassNumberSeries.from_pairs(3, [(0, 2), (1, 1), (2, 0), (3, 0)])
        fit = fit_invariants(s)
        assert fit is NO_FIT or (fit.lam >= 0 and fit.mu >= 0)

    def test_too_few_points(self):
        with pytest.raises(InsufficientDataError):
            fit_invariants(ClassNumberSeries.from_pairs(3, [(0, 0), (1, 2),
                                                            (2, 4)]))

    def test_grid_roundtrip(self):
        # every law in the small grid is recovered exactly
        for p in (3, 5, 7):
            for lam, mu in itertools.product(range(4), repeat=2):
                for nu in range(-5, 6):
                    if mu + nu < 0:
                        continue  # e_0 would be negative
                    fit = fit_invariants(series_for(p, lam, mu, nu))
                    assert fit is not NO_FIT
                    assert (fit.lam, fit.mu, fit.nu) == (lam, mu, nu)


class TestPrediction:
    def test_quartic_linear_law(self):
        # v_p(h_n) = 2n + c from the base layer on
        pred = predict_linear(2, 1, 5)
        s = ClassNumberSeries.from_pairs(3, [(1, 5), (2, 7), (3, 9)])
        rep = check_prediction(s, pred, from_layer=1)
        assert rep.all_pass
        assert rep.failures == []

    def test_failure_reported(self):
        pred = predict_linear(1, 0, 0)
        s = ClassNumberSeries.from_pairs(3, [(0, 0), (1, 1), (2, 3)])
        rep = check_prediction(s, pred)
        assert not rep.all_pass
        assert rep.failures == [(2, 3, 2)]

    def test_from_layer_skips_head(self):
        pred = predict_linear(1, 0, 0)
        s = ClassNumberSeries.from_pairs(3, [(0, 7), (1, 1), (2, 2)])
        rep = check_prediction(s, pred, from_layer=1)
        assert rep.all_pass

    def test_negative_lambda_rejected(self):
        with pytest.raises(ValueError):
            predict_linear(-1, 0, 0)


class TestRandomized:
    def test_fit_is_stable_under_extension(self):
        rng = random.Random(21)
        for _ in range(50):
            p = rng.choice([3, 5, 7])
            lam, mu = rng.randrange(4), rng.randrange(2)
            nu = rng.randrange(0, 6)
            short = fit_invariants(series_for(p, lam, mu, nu, n_max=4))
            long = fit_invariants(series_for(p, lam, mu, nu, n_max=7))
            assert short == long == InvariantFit(lam, mu, nu, 0)
