import logging

import pytest

from poly_ldc_lib import config


@pytest.fixture
def logger():
    """The library logger at DEBUG for one test; handler and level are restored afterwards."""
    log = logging.getLogger("poly_ldc")
    previous = log.level
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s"))
    handler.setLevel(logging.DEBUG)
    log.addHandler(handler)
    log.setLevel(logging.DEBUG)
    yield log
    log.removeHandler(handler)
    log.setLevel(previous)


@pytest.fixture(autouse=True)
def restore_size_cap():
    """A test that moves the size cap cannot leak it into the next one."""
    with config.size_cap(None):
        yield


def pytest_runtest_makereport(item, call):
    """Note the size cap a failing test ran under."""
    if call.when == "call" and call.excinfo is not None:
        logging.getLogger("poly_ldc").warning(f"{item.nodeid} failed under size cap {config.get_cap()}")
