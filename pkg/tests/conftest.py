import time

import pytest

from ybekit.enumeration import classify_primitive, fast_enumerate


@pytest.fixture(scope="session")
def classification7():
    """The full classification run up to size 7, timed from a cold cache.

    Every acceptance test needing size-6/7 data depends on this fixture, so
    the measured wall time is the genuine cost of the whole pipeline.
    """
    t0 = time.monotonic()
    report = classify_primitive(7, threads=4)
    elapsed = time.monotonic() - t0
    return report, elapsed


@pytest.fixture(scope="session")
def records_up_to_5():
    return {n: fast_enumerate(n) for n in range(1, 6)}


@pytest.fixture(scope="session")
def records_up_to_6(records_up_to_5):
    out = dict(records_up_to_5)
    out[6] = fast_enumerate(6)
    return out
