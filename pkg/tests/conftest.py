import os

import pytest


@pytest.fixture(scope="session", autouse=True)
def session_cache_dir(tmp_path_factory):
    """Point the kernel cache at a session-local directory.

    The expensive kernels (e.g. the 526-column cell at n=k=8, m=32) are
    computed once per session and shared by every test that needs them.
    """
    path = tmp_path_factory.mktemp("kernel-cache")
    old = os.environ.get("SEMIINV_CACHE")
    os.environ["SEMIINV_CACHE"] = str(path)
    yield path
    if old is None:
        os.environ.pop("SEMIINV_CACHE", None)
    else:
        os.environ["SEMIINV_CACHE"] = old
