from fractions import Fraction

import pytest

import selest

R1 = [10, 11, 12, 20, 21, 22, 24, 25, 30, 35, 38, 45]
R2 = [15, 16, 17, 20, 30, 35, 38, 39, 40, 42, 45, 50]


def test_restriction_running_example():
    stats = selest.analyze_column(R1, 3, sample_cap=len(R1))
    assert stats.histogram.bounds == [10, 20, 25, 45]
    assert selest.restriction_selectivity(stats, 30, selest.ScalarOp.LT) == pytest.approx(0.75, abs=1e-12)


def test_join_running_example():
    hx = selest.EquiDepthHistogram([10, 20, 25, 45])
    hy = selest.EquiDepthHistogram([15, 20, 39, 50])
    assert selest.join_lt_hist(hx, hy) == pytest.approx(float(Fraction(24221, 37620)), abs=1e-9)
    exact = selest.exact_join(R1, R2, selest.ScalarOp.LT)
    assert (exact.qualifying, exact.total) == (95, 144)


def test_nulls_round_trip_through_stats():
    stats = selest.analyze_column([1.0, None, 3.0, 3.0], 10, sample_cap=4)
    assert stats.null_frac == 0.25
    assert selest.load_stats(selest.save_stats(stats)) == stats


def test_ranges():
    xs = [selest.RangeValue.parse(t) for t in ["[0,10]", "[2,3)", "empty"]] + [None]
    ys = [selest.RangeValue.parse(t) for t in ["[20,30]", "(21,25)"]]
    sx = selest.analyze_range_column(xs, 10)
    sy = selest.analyze_range_column(ys, 10)
    assert sx.null_frac == 0.25
    assert selest.range_join_selectivity(sx, sy, selest.RangeOp.STRICTLY_LEFT) == pytest.approx(0.5, abs=1e-12)
    exact = selest.exact_range_join(xs, ys, selest.RangeOp.STRICTLY_LEFT)
    assert (exact.qualifying, exact.total) == (4, 8)
    assert selest.load_range_stats(selest.save_range_stats(sx)) == sx


def test_errors_map_to_python_exceptions():
    with pytest.raises(selest.InvalidInput):
        selest.EquiDepthHistogram([3.0, 1.0])
    with pytest.raises(selest.FormatError):
        selest.load_stats("{")
    with pytest.raises(selest.SelestError):
        selest.RangeValue.parse("[1,")


def test_generated_dataset_is_deterministic():
    a = selest.generate_dataset("ranges-mixed", 200, 7)
    b = selest.generate_dataset("ranges-mixed", 200, 7)
    assert a == b
    assert selest.generate_dataset("running-example-r1") == R1
