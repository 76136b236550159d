import io

import pytest

from config import TestingConfig
from app import init_app


@pytest.fixture
def testing_config():
    return init_app(TestingConfig)


@pytest.fixture
def run_cli():
    """Run the CLI in-process; returns (exit code, stdout, stderr)."""
    from run import main

    def _run(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = main(list(argv), out=out, err=err)
        return code, out.getvalue(), err.getvalue()

    return _run
