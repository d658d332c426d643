from services.reporting import run_selftest


class TestSelfTest:
    def test_small_battery_passes(self):
        summary = run_selftest(seed=3, count=20)
        assert summary.passed
        assert [c.name for c in summary.checks] == [
            "product_nullity",
            "cross_path_identity",
            "schmidt_closed_form",
            "dynamical_additivity",
        ]
        assert all(c.samples > 0 for c in summary.checks)

    def test_same_seed_same_errors(self):
        a = run_selftest(seed=5, count=10)
        b = run_selftest(seed=5, count=10)
        assert [c.max_error for c in a.checks] == [c.max_error for c in b.checks]

    def test_full_battery_at_default_size(self):
        summary = run_selftest(seed=20240101)
        assert summary.passed
        assert [c.samples + c.skipped for c in summary.checks] == [200, 200, 100, 100]
