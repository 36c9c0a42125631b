import time

from quditsim import Timer


def test_fresh_timer_near_zero():
    t = Timer()
    assert 0 <= t.toc().elapsed_seconds() < 0.1


def test_measures_sleep():
    t = Timer()
    time.sleep(0.05)
    t.toc()
    assert t.elapsed_seconds() >= 0.05


def test_toc_snapshots():
    t = Timer()
    time.sleep(0.01)
    t.toc()
    frozen = t.elapsed_seconds()
    time.sleep(0.02)
    assert t.elapsed_seconds() == frozen  # stable until the next toc
    t.toc()
    assert t.elapsed_seconds() > frozen


def test_tic_resets():
    t = Timer()
    time.sleep(0.02)
    t.toc()
    t.tic()
    assert t.toc().elapsed_seconds() < 0.02


def test_successive_tocs_monotonic():
    t = Timer()
    a = t.toc().elapsed_seconds()
    b = t.toc().elapsed_seconds()
    assert b >= a >= 0


def test_chaining_and_formatting():
    t = Timer()
    s = f"{t.toc():.4f}"
    assert float(s) >= 0
    assert str(t)
